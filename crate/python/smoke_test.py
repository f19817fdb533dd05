"""Smoke test for the bergeth extension module.

Build and install it first:

    pip install --no-build-isolation ./crates/py
    python python/smoke_test.py
"""

import bergeth


def main():
    k3 = bergeth.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == bergeth.Graph.family("complete:3")
    assert k3.graph6() == "Bw"
    assert bergeth.Graph.from_graph6("Bw").edges() == [(0, 1), (0, 2), (1, 2)]
    assert k3.chromatic_number() == 3 and k3.clique_number() == 3

    h = bergeth.Hypergraph.parse("5 3\n1 2 3\n1 2 4\n3 4 0\n")
    assert len(h) == 3 and h.n == 5
    core_map, assignment = bergeth.find_berge(k3, h)
    assert sorted(assignment) == [0, 1, 2]
    assert not bergeth.is_berge_free(k3, h)
    assert bergeth.is_berge_free(bergeth.Graph.family("cycle:4"), h)
    assert h.shadow().edge_count() == 8

    assert bergeth.c_t(k3, 2)[0] == 3
    assert bergeth.lower_bound(bergeth.Graph.family("fan:2"))["value"] == 9

    r = bergeth.ramsey_number(k3, bergeth.Graph.family("path:3"))
    assert r["status"] == "exact" and r["value"] == 5 and r["witness"].n == 4
    assert bergeth.ramsey_number(k3, k3, max_nodes=50)["status"] == "at_least"
    assert bergeth.is_p_good(bergeth.Graph.family("cycle:4"), 3) == "true"
    assert bergeth.is_p_good(k3, 3) == "false"

    assert bergeth.turan_ex(6, k3) == (9, True)
    assert bergeth.berge_ex(3, 4, k3) == (2, True)
    assert bergeth.gen_turan_ex(4, k3, bergeth.Graph.family("complete:4")) == (2, True)
    assert bergeth.cover_number(k3, bergeth.Graph.family("complete:4"))[0] == 2

    report = bergeth.bounds(k3)
    assert report["lower"]["value"] == 5 and report["upper"]["value"] == 5
    assert bergeth.bounds("book:3")["exact"] == 9

    try:
        bergeth.Graph.from_graph6("D{c!")
    except ValueError as e:
        assert "byte 3" in str(e)
    else:
        raise AssertionError("bad graph6 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
