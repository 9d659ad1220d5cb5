"""Smoke tests for the covolat python module and the CLI."""

import json
import os
import subprocess

import pytest

covolat = pytest.importorskip("covolat")


def test_factor():
    assert covolat.factor(168) == {2: 3, 3: 1, 7: 1}
    assert covolat.factor(1) == {}


def test_m_numbers():
    assert covolat.is_m_number(6, 3)
    assert not covolat.is_m_number(9, 3)


def test_sum_reciprocals():
    assert covolat.sum_reciprocals([4, 4, 4, 4, 4]) == "5/4"


def test_link_constructions():
    p = covolat.Graph.petersen()
    assert p.vertex_count() == 10
    assert p.edge_count() == 15
    heawood = covolat.Graph.projective_plane(2)
    assert heawood.vertex_count() == 14
    heawood.check_generalized_polygon(3)
    k33 = covolat.Graph.complete_bipartite(3, 3)
    assert k33.edge_count() == 9


def test_aut_orders():
    assert covolat.aut_order(covolat.Graph.petersen()) == 120
    heawood = covolat.Graph.projective_plane(2)
    assert covolat.aut_order(heawood) == 336
    assert covolat.aut_order(heawood, type_preserving=True) == 168


def test_law_and_verdicts():
    law = covolat.law_from_links([covolat.Graph.petersen()])
    primes = {e["p"]: (e["alpha"], e["alpha_prime"]) for e in law["primes"]}
    assert primes == {2: (3, 2), 3: (1, 0), 5: (1, 0)}
    verdict = covolat.check_vertex_covolume(law, "1/360")
    assert verdict["admissible"] is False
    assert verdict["witness_prime"] == 3
    assert covolat.check_vertex_covolume(law, "1/120")["admissible"] is True


def test_covolumes():
    quotient = covolat.bourdon_lattice(2, 2, 5)
    assert covolat.s_covolume(quotient, 0) == "5/4"
    assert covolat.c_of_x(quotient) == "5/4"
    building = covolat.building_lattice(covolat.Graph.projective_plane(2), 6)
    assert covolat.s_covolume(building, 0) == "1/28"


def test_corollaries():
    assert covolat.check_bipartite_corollary(2, 2, 5, "15/4")["admissible"] is True
    assert covolat.check_bipartite_corollary(2, 2, 5, "5/8")["admissible"] is False


def test_tower():
    rows = covolat.aut_tower(2, 2, 5, 1)
    assert [row["order"] for row in rows] == [1, 8]
    assert rows[1]["image"] == 1


def test_cli_roundtrip():
    cli = os.environ.get("COVOLAT_BIN")
    if not cli:
        pytest.skip("COVOLAT_BIN not set")
    out = subprocess.run(
        [cli, "link", "make", "--family", "pg2", "--q", "2"],
        capture_output=True, text=True, check=True,
    )
    graph = json.loads(out.stdout)
    assert len(graph["vertices"]) == 14
    again = subprocess.run(
        [cli, "link", "make", "--family", "pg2", "--q", "2"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout == again.stdout
    bad = subprocess.run([cli, "frobnicate"], capture_output=True, text=True)
    assert bad.returncode == 2
