// json_io.hpp
//
// JSON schemas for every file format the tools read and write. Output is
// deterministic: fixed field order, cells and vertices sorted by id.
//
//   complex   {"dim": d, "cells": [{"id", "dim", "faces": [...], "label"?}]}
//   graph     {"vertices": [...], "edges": [[a,b],...], "types"?: {...}}
//             (the complex form is accepted for graphs of dimension <= 1)
//   quotient  {"cells": [{"label", "dim", "order"}]}
//   law       {"primes": [{"p", "alpha", "alpha_prime"}]}
//   link      {"name", "aut_order", "fixator_order", "edge_count"?}
//   verdict   {"admissible", "violated_rule"?, "witness_prime"?}

#pragma once

#include <string>

#include "covolat/ball_grower.hpp"
#include "covolat/cell_complex.hpp"
#include "covolat/covolume.hpp"
#include "covolat/law.hpp"
#include "covolat/links.hpp"
#include "covolat/perm_group.hpp"

namespace covolat {

std::string complex_to_json(const CellComplex& c);
CellComplex complex_from_json(const std::string& text);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string quotient_to_json(const QuotientData& q);
QuotientData quotient_from_json(const std::string& text);

std::string law_to_json(const LawData& law);
LawData law_from_json(const std::string& text);

std::string registered_link_to_json(const RegisteredLink& link);
RegisteredLink registered_link_from_json(const std::string& text);
bool looks_like_registered_link(const std::string& text);

std::string verdict_to_json(const Verdict& v);

std::string tower_to_json(const std::vector<TowerRow>& rows);

/// {"order": factored string, "generators": [cycle strings], "orbits": [...]}
/// with permutation domain translated to external ids.
std::string perm_group_report(const PermGroup& group, const std::vector<int>& external_ids);

/// Reads a whole file, or standard input when path is "-".
std::string read_input(const std::string& path);

}  // namespace covolat
