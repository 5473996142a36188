import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from orbiquint.resolve import (
    DIAGRAM_ITEMS,
    AkSing,
    Chain,
    CurveConfig,
    Edge,
    ResolveError,
    Role,
    Vertex,
    build_coarse_fiber_config,
    config_isomorphic,
    contract_minus_ones,
    delta_invariant,
    genus_rh,
    geometric_genus,
    hj_expand,
    hj_reconstruct,
    pa_hirzebruch,
)


def test_hj_examples():
    # hand-computed continued-fraction expansions
    assert hj_expand(3, 2).ints == (2, 2)
    assert hj_expand(3, 1).ints == (3,)
    assert hj_expand(4, 3).ints == (2, 2, 2)
    assert hj_expand(4, 1).ints == (4,)
    assert hj_expand(2, 1).ints == (2,)
    assert hj_expand(5, 3).ints == (2, 3)
    assert hj_expand(1, 0).ints == ()


@given(st.integers(min_value=2, max_value=120))
def test_hj_round_trip(r):
    for q in range(1, r):
        if gcd(r, q) != 1:
            continue
        chain = hj_expand(r, q)
        assert all(b >= 2 for b in chain.ints)
        assert hj_reconstruct(chain) == (r, q)


def test_hj_errors():
    with pytest.raises(ResolveError):
        hj_expand(4, 2)  # not coprime
    with pytest.raises(ResolveError):
        hj_expand(3, 3)
    with pytest.raises(ResolveError):
        Chain((2, 1))


def test_delta_and_genus():
    # delta(A_k) = ceil(k/2)
    assert [delta_invariant(AkSing(k)) for k in range(6)] == [0, 1, 1, 2, 2, 3]
    assert pa_hirzebruch(1, 4, 5) == 6
    assert pa_hirzebruch(0, 4, 2) == 3
    assert pa_hirzebruch(2, 2, 4) == 1
    assert geometric_genus(6, [AkSing(2)]) == 5
    with pytest.raises(ResolveError):
        geometric_genus(1, [AkSing(4)])
    assert genus_rh(2, 0, 6) == 2
    with pytest.raises(ResolveError):
        genus_rh(2, 0, 5)


def test_build_coarse_fiber_config():
    cfg = build_coarse_fiber_config(2, Fraction(1, 2), (("F", 1),))
    ids = {v.id for v in cfg.vertices}
    assert ids == {"sigma", "s1", "F", "t1", "C"}
    assert cfg.vertex("sigma").self_int == -1
    assert cfg.vertex("s1").self_int == -2
    assert cfg.vertex("F").self_int == -1
    assert cfg.vertex("t1").self_int == -2

    # integral twist: smooth coarse space, single 0-fiber
    cfg = build_coarse_fiber_config(1, 2)
    assert [v.id for v in cfg.vertices] == ["F"]
    assert cfg.vertex("F").self_int == 0

    with pytest.raises(ResolveError):
        build_coarse_fiber_config(2, Fraction(1, 2), (("nope", 1),))


def test_config_validation():
    with pytest.raises(ResolveError):
        CurveConfig([Vertex("a", 0, Role.FIBER), Vertex("a", 1, Role.FIBER)], [])
    with pytest.raises(ResolveError):
        CurveConfig([Vertex("a", 0, Role.FIBER)], [Edge("a", "a", 1)])
    with pytest.raises(ResolveError):
        CurveConfig([Vertex("a", 0, Role.FIBER)], [Edge("a", "b", 1)])


def test_config_text_round_trip():
    for item in DIAGRAM_ITEMS.values():
        for cfg in (item.build(), item.contract()):
            back = CurveConfig.from_text(cfg.to_text())
            assert back.vertices == cfg.vertices
            assert sorted(back.edges, key=lambda e: (e.v, e.w, e.mult)) == sorted(
                cfg.edges, key=lambda e: (e.v, e.w, e.mult)
            )


def test_config_isomorphic():
    c1 = CurveConfig(
        [Vertex("a", -2, Role.FIBER), Vertex("b", 0, Role.FIBER)],
        [Edge("a", "b", 1)],
    )
    c2 = CurveConfig(
        [Vertex("x", 0, Role.FIBER), Vertex("y", -2, Role.FIBER)],
        [Edge("y", "x", 1)],
    )
    assert config_isomorphic(c1, c2)
    c3 = CurveConfig(
        [Vertex("x", 0, Role.FIBER), Vertex("y", -2, Role.FIBER)],
        [Edge("y", "x", 2)],
    )
    assert not config_isomorphic(c1, c3)


def test_contract_terminates_without_minus_ones():
    cfg = CurveConfig([Vertex("a", -2, Role.FIBER)], [])
    out = contract_minus_ones(cfg)
    assert out.vertices == cfg.vertices


def test_diagram_items_contract():
    # spot-check two diagrams against hand-worked right-hand sides
    got = DIAGRAM_ITEMS[10].contract()
    expected = CurveConfig(
        [Vertex("s1", 1, Role.FIBER), Vertex("C", 0, Role.MAIN)],
        [Edge("C", "s1", 4)],
    )
    assert config_isomorphic(got, expected)

    got = DIAGRAM_ITEMS[13].contract()
    expected = CurveConfig(
        [
            Vertex("sigma", -2, Role.DIRECTRIX),
            Vertex("s1", 0, Role.FIBER),
            Vertex("C", 0, Role.MAIN),
        ],
        [Edge("sigma", "s1", 1), Edge("C", "s1", 3)],
    )
    assert config_isomorphic(got, expected)


def test_contract_presentation_independence():
    rng = random.Random(7)
    item = DIAGRAM_ITEMS[4]
    reference = item.contract()
    base = item.build()
    for _ in range(20):
        verts = base.vertices[:]
        edges = base.edges[:]
        rng.shuffle(verts)
        rng.shuffle(edges)
        got = contract_minus_ones(CurveConfig(verts, edges))
        assert config_isomorphic(got, reference)
