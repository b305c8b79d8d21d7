"""Polynomial arithmetic, graded components, and the relation parser."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cobalt.errors import (
    ExpressionSyntaxError,
    InhomogeneousRelation,
    InputError,
    NotQAlgebra,
    UnknownIdentifier,
)
from cobalt.rings import (
    GenSpec,
    Ring,
    graded_component,
    laurent_ring,
    load_presentation,
    parse_expression,
    polynomial_ring,
)


@pytest.fixture
def zxy():
    return polynomial_ring("Z", [("x", 1), ("y", 1)])


def test_construction_errors():
    with pytest.raises(InputError):
        Ring("R", [("x", 1)])
    with pytest.raises(InputError):
        polynomial_ring("Z", [("x", 1), ("x", 2)])
    with pytest.raises(InputError):
        Ring("Z", [GenSpec("g", 1, invertible=True), GenSpec("g_inv", -1)])


def test_coercion():
    zx = polynomial_ring("Z", [("x", 1)])
    qx = polynomial_ring("Q", [("x", 1)])
    assert zx.const(Fraction(4, 2)) == zx.const(2)
    with pytest.raises(NotQAlgebra):
        zx.const(Fraction(1, 2))
    assert qx.const(Fraction(1, 2)).constant_term() == Fraction(1, 2)


def test_basic_arithmetic(zxy):
    x, y = zxy.gen("x"), zxy.gen("y")
    assert (x + y) * (x + y) == x ** 2 + 2 * x * y + y ** 2
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert (x - x).is_zero()
    assert str(x ** 2 + 2 * x * y + y ** 2) == "x^2 + 2*x*y + y^2"
    assert str(-x + 1) == "-x + 1"
    assert str(zxy.zero()) == "0"


def test_scalar_and_pow(zxy):
    x = zxy.gen("x")
    assert 3 * x == x + x + x
    assert (2 * x) ** 3 == 8 * x ** 3
    assert x ** 0 == zxy.one()
    with pytest.raises(InputError):
        x ** -1


def test_laurent_cancellation():
    ring = laurent_ring("Z", "b")
    b, binv = ring.gen("b"), ring.gen("b_inv")
    assert b * binv == ring.one()
    assert b ** 2 * binv == b
    assert (b + binv) * b == b ** 2 + 1
    assert ring.gens[1].adams_degree == -1


def test_degrees(zxy):
    x, y = zxy.gen("x"), zxy.gen("y")
    assert (x + y).adams_degree() == 1
    assert (x * y).adams_degree() == 2
    assert zxy.zero().adams_degree() is None
    with pytest.raises(InputError):
        (x + x * y).adams_degree()
    assert (x + x * y).homogeneous_part(2) == x * y


def test_map_to():
    src = polynomial_ring("Q", [("m", 1)])
    dst = laurent_ring("Q", "b")
    m = src.gen("m")
    image = (m * 2 + m ** 2).map_to(dst, {"m": dst.gen("b")})
    b = dst.gen("b")
    assert image == 2 * b + b ** 2
    with pytest.raises(InputError):
        m.map_to(dst, {})


def test_map_to_z_rejects_denominators():
    src = polynomial_ring("Q", [("m", 1)])
    dst = polynomial_ring("Z", [("t", 1)])
    half = src.gen("m") * Fraction(1, 2)
    with pytest.raises(NotQAlgebra):
        half.map_to(dst, {"m": dst.gen("t")})


def test_monomials_of_degree():
    ring = polynomial_ring("Z", [("x1", 1), ("x2", 2)])
    monos, active = ring.monomials_of_degree(4, 4)
    assert monos == [(4, 0), (2, 1), (0, 2)]
    assert not active
    monos, active = ring.monomials_of_degree(5, 3)
    assert (5, 0) not in monos
    assert active
    monos, active = ring.monomials_of_degree(-1, 3)
    assert monos == [] and not active


def test_monomials_of_degree_laurent():
    ring = laurent_ring("Z", "b")
    monos, active = ring.monomials_of_degree(0, 3)
    assert monos == [(0, 0)]
    assert not active
    monos, active = ring.monomials_of_degree(2, 3)
    assert monos == [(2, 0)]
    monos, active = ring.monomials_of_degree(-4, 3)
    assert monos == []
    assert active


def test_graded_component_free():
    ring = polynomial_ring("Z", [("x", 1), ("y", 1)])
    report = graded_component(ring, 3)
    assert report.free_rank == 4
    assert report.torsion == []
    assert not report.truncated
    assert len(report.basis) == 4


def test_graded_component_torsion():
    ring = polynomial_ring("Z", [("x", 1)])
    ring.impose(2 * ring.gen("x"))
    report = graded_component(ring, 1)
    assert report.free_rank == 0
    assert report.torsion == [2]


def test_graded_component_with_relation():
    ring = polynomial_ring("Z", [("x", 1), ("y", 1)])
    ring.impose(ring.gen("x") ** 2 - ring.gen("y") ** 2)
    report = graded_component(ring, 2)
    assert report.free_rank == 2
    assert report.torsion == []
    assert len(report.basis) == 2
    report = graded_component(ring, 4)
    # monomials x^4..y^4 (5) modulo multiples x^2(x^2-y^2), xy(...), y^2(...)
    assert report.free_rank == 2


def test_graded_component_rational():
    ring = polynomial_ring("Q", [("x", 1)])
    ring.impose(ring.gen("x") * 2)
    report = graded_component(ring, 1)
    assert report.free_rank == 0
    assert report.torsion == []


def test_graded_component_truncation_flag():
    ring = polynomial_ring("Z", [("x", 1)])
    report = graded_component(ring, 5, exponent_bound=3)
    assert report.truncated
    assert "bound" in report.note


def brute_component_rank(ring, degree, bound):
    """Independent recount: enumerate monomials by brute product grid."""
    n = len(ring.gens)
    monos = set()
    for exps in product(range(bound + 1), repeat=n):
        if ring.monomial_degree(exps) == degree:
            monos.add(ring.normalize_monomial(exps))
    monos = sorted(monos, reverse=True)
    pos = {m: i for i, m in enumerate(monos)}
    rows = []
    for rel in ring.relations:
        for exps in product(range(bound + 1), repeat=n):
            if ring.monomial_degree(exps) != degree - rel.adams_degree():
                continue
            prod = ring.poly({ring.normalize_monomial(exps): 1}) * rel
            if any(e not in pos for e in prod.terms):
                continue
            vec = [0] * len(monos)
            for e, c in prod.terms.items():
                vec[pos[e]] = int(c)
            rows.append(vec)
    from cobalt import snf
    rank = snf.rational_rank(rows) if rows else 0
    return len(monos) - rank


def test_graded_component_against_bruteforce():
    ring = polynomial_ring("Z", [("a", 1), ("b", 2), ("c", 3)])
    ring.impose(ring.gen("a") * ring.gen("b") - ring.gen("c"),
                ring.gen("b") ** 2)
    for degree in range(7):
        report = graded_component(ring, degree)
        assert not report.truncated
        assert report.free_rank == brute_component_rank(ring, degree, degree + 4)


def test_inhomogeneous_relation():
    ring = polynomial_ring("Z", [("x", 1), ("y", 2)])
    with pytest.raises(InhomogeneousRelation) as err:
        ring.impose(ring.gen("x") + ring.gen("y"))
    assert err.value.term in ("x", "y")


def test_parser_round_trip():
    ring = polynomial_ring("Z", [("x1", 1), ("x2", 2)])
    poly = parse_expression("x1^2 - 2*x1*x2 + x2^2", ring)
    x1, x2 = ring.gen("x1"), ring.gen("x2")
    assert poly == x1 ** 2 - 2 * x1 * x2 + x2 ** 2
    assert parse_expression("-(x1 - 3)*(x1 + 3)", ring) == -(x1 ** 2) + 9
    assert parse_expression("7", ring) == ring.const(7)
    assert parse_expression("- - x1", ring) == x1


def test_parser_rejects_division():
    ring = polynomial_ring("Z", [("x1", 1)])
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expression("x1/2", ring)
    assert err.value.position == 2


def test_parser_unknown_identifier():
    ring = polynomial_ring("Z", [("x1", 1)])
    with pytest.raises(UnknownIdentifier) as err:
        parse_expression("x1 + x9", ring)
    assert err.value.position == 5
    assert "x9" in str(err.value)


def test_parser_syntax_errors():
    ring = polynomial_ring("Z", [("x1", 1)])
    for bad in ["x1 +", "(x1", "x1^0", "x1^x1", "2x1", "x1 x1", "*x1", ""]:
        with pytest.raises(ExpressionSyntaxError):
            parse_expression(bad, ring)


def test_parser_positions_are_columns():
    ring = polynomial_ring("Z", [("x1", 1)])
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expression("x1 ^ 0", ring)
    assert err.value.position == 5
    assert "column 6" in str(err.value)


def test_load_presentation():
    doc = {
        "base": "Z",
        "generators": [
            {"name": "x1", "adams_degree": 1},
            {"name": "b", "adams_degree": 1, "invertible": True},
        ],
        "relations": ["x1^2"],
    }
    ring = load_presentation(doc)
    assert [g.name for g in ring.gens] == ["x1", "b", "b_inv"]
    assert len(ring.relations) == 1
    assert ring.relations[0] == ring.gen("x1") ** 2


def test_load_presentation_errors():
    with pytest.raises(InputError):
        load_presentation({"base": "R", "generators": []})
    with pytest.raises(InputError):
        load_presentation({"base": "Z", "generators": [], "extra": 1})
    with pytest.raises(InputError):
        load_presentation({"base": "Z", "generators": [{"name": "x"}]})
    with pytest.raises(InhomogeneousRelation):
        load_presentation({
            "base": "Z",
            "generators": [{"name": "x", "adams_degree": 1},
                           {"name": "y", "adams_degree": 2}],
            "relations": ["x + y"],
        })


coeffs = st.integers(min_value=-6, max_value=6)


def poly_from_vec(ring, vec):
    x, y = ring.gen("x"), ring.gen("y")
    c0, c1, c2, c3 = vec
    return c0 + c1 * x + c2 * y + c3 * x * y


@settings(max_examples=60, deadline=None)
@given(st.tuples(coeffs, coeffs, coeffs, coeffs),
       st.tuples(coeffs, coeffs, coeffs, coeffs),
       st.tuples(coeffs, coeffs, coeffs, coeffs))
def test_ring_axioms(u, v, w):
    ring = polynomial_ring("Z", [("x", 1), ("y", 1)])
    a, b, c = (poly_from_vec(ring, t) for t in (u, v, w))
    assert (a + b) + c == a + (b + c)
    assert a * (b * c) == (a * b) * c
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
