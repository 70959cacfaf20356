"""Smoke tests for the python bindings."""

import hkt


def test_version():
    assert hkt.__version__


def test_partitions():
    assert hkt.partitions(3) == [[3], [2, 1], [1, 1, 1]]
    assert hkt.count_multipartitions(3, 3) == 22


def test_ranks():
    gl3 = hkt.ktheory_ranks("GL", 3)
    assert (gl3["k0"], gl3["k1"]) == (4, 4)
    so7 = hkt.ktheory_ranks("SO_odd", 3)
    assert (so7["k0"], so7["k1"]) == (22, 0)
    g2 = hkt.ktheory_ranks("G2")
    assert (g2["k0"], g2["k1"]) == (8, 0)
    assert hkt.pgl_sheaf_ranks([1, 1]) == 2
    assert hkt.kunneth_product((1, 1), (3, 0)) == (3, 3)


def test_oracle():
    cmp2 = hkt.compare_with_closed_form("PGL", 2)
    assert cmp2["pass"]
    assert cmp2["oracle_even"] == 3
    prof = hkt.equivariant_poincare("GL", 2)
    assert prof["dims"] == [2, 2, 0]


def test_elliptic():
    rep = hkt.elliptic_report("B", [3])
    assert rep["rank"] == 3
    assert rep["torsion"] == []
    assert rep["elliptic_class_count"] == 3
    rep2 = hkt.elliptic_report("AlmostD", [2, 1])
    assert rep2["torsion"] == []
    assert rep2["rank"] == rep2["elliptic_class_count"]


def test_chartable():
    t = hkt.character_table("B", [2])
    assert t["order"] == 8
    assert sorted(len(r) for r in t["values"]) == [5, 5, 5, 5, 5]


def test_bala_carter():
    classes = hkt.bala_carter_classes(2)
    assert sorted(c["elliptic_rank"] for c in classes) == [0, 0, 1, 1]


def test_gcw():
    assert "torus_G2" in hkt.builtin_complexes()
    refl = hkt.gcw_cohomology(builtin="circle_reflection")
    assert refl[0]["rank"] == 3 and refl[0]["torsion"] == []
    assert refl[1]["rank"] == 0
    g2 = hkt.gcw_cohomology(builtin="torus_G2")
    assert [d["rank"] for d in g2] == [8, 0, 0]
    assert hkt.gcw_duality_check("torus_B2")
