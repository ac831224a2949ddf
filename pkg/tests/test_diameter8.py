import pytest

from commgraph.diameter8 import (
    FCoords,
    ParamTriple,
    build_example,
    centralizer_in_G,
    center_of_F,
    example_group_order,
    find_params,
    first_failing_check,
    fixed_points_in_F,
    run_all_checks,
    validate_params,
    verify_d_structure,
    verify_f_class3,
    verify_family_separation,
    verify_not_frobenius_structure,
    verify_symplectic,
    witness_path8,
)
from commgraph.errors import NoSuchParams, NotInD, NotNormalizing
from commgraph.fields import element_order, factorize
from commgraph.groups import MatrixAutElement, generate_elements


# --- parameter search ------------------------------------------------------


def test_find_params_base_case():
    assert find_params(11) == [ParamTriple(11, 5, 3221)]


def test_find_params_small_q_empty():
    # q in {3, 5, 7}: q - 1 has no prime divisor >= 5
    assert find_params(7) == []
    assert find_params(3) == []


def test_find_params_q31():
    # oracle: (31^5 - 1)/30 = 954305 = 5 * 11 * 17351; least prime not dividing 30 is 11
    quotient = (31 ** 5 - 1) // 30
    assert quotient == 954305
    assert factorize(quotient) == {5: 1, 11: 1, 17351: 1}
    triples = find_params(31)
    assert ParamTriple(31, 5, 11) in triples
    assert triples[0] == ParamTriple(11, 5, 3221)


def test_find_params_excludes_small_r():
    assert all(p.r >= 5 for p in find_params(31))


def test_param_invariants():
    for p in find_params(31):
        assert (p.q - 1) % p.r == 0 and (p.q - 1) % (p.r * p.r) != 0
        assert ((p.q ** p.r - 1) // (p.q - 1)) % p.t == 0
        assert (p.q - 1) % p.t != 0


def test_validate_params_rejections():
    assert validate_params(11, 3, 7)  # r too small
    assert validate_params(13, 5, 7)  # 5 does not divide 12
    assert validate_params(11, 5, 5)  # t divides q-1
    assert not validate_params(11, 5, 3221)


# --- construction ----------------------------------------------------------


def test_build_rejects_invalid_params():
    with pytest.raises(NoSuchParams):
        build_example(ParamTriple(11, 3, 7))


def test_build_enforces_field_cap():
    # (31, 5, 11) is arithmetically valid but GF(31^5) exceeds the field cap,
    # so (11, 5, 3221) is the only triple buildable at desk scale
    from commgraph.errors import CapExceeded

    with pytest.raises(CapExceeded):
        build_example(ParamTriple(31, 5, 11))


def test_build_example_basics(example_group):
    eg = example_group
    assert len(eg.d_elements) == 80525  # r^2 * t
    assert element_order(eg.u) == 25 and element_order(eg.v) == 25
    assert element_order(eg.f) == 3221
    # the 4-set condition
    four = {(eg.u ** 5).coeffs, (eg.u ** -5).coeffs, (eg.v ** 5).coeffs, (eg.v ** -5).coeffs}
    assert len(four) == 4
    assert eg.f_order() == 11 ** 20  # formula only, F is never enumerated


def test_build_is_deterministic(example_group):
    again = build_example(ParamTriple(11, 5, 3221))
    assert again.u == example_group.u and again.v == example_group.v
    assert again.f == example_group.f
    assert again.d_elements == example_group.d_elements


def test_x_orders(example_group):
    eg = example_group
    assert eg.x.twist == 1

    def order_of(e):
        n, acc = 1, e
        while not acc.is_identity():
            acc = acc * e
            n += 1
        return n

    assert order_of(eg.x) == 25
    assert order_of(eg.xr) == 5


def test_z_generates_25_elements(example_group):
    elems = generate_elements([example_group.z], cap=100)
    assert len(elems) == 25


def test_group_order_formula():
    params = ParamTriple(11, 5, 3221)
    assert example_group_order(params) == 54173193341944394740910525
    assert example_group_order(params) == 11 ** 20 * 5 ** 2 * 3221


# --- symplectic relations --------------------------------------------------


def test_symplectic(example_group):
    assert verify_symplectic(example_group)


def test_fcoords_relation(example_group):
    spec = example_group.spec
    one, zero = spec.one(), spec.zero()
    with pytest.raises(ValueError):
        FCoords(a=one, b=zero, c=zero, d=zero, x=one)  # x*a != b - d
    coords = FCoords.from_free(a=one, x=one, d=zero, c=zero)
    assert coords.b == one
    mat = coords.to_matrix(spec)
    from commgraph.diameter8 import _is_symplectic

    assert _is_symplectic(spec, mat.mat)


# --- structure of D --------------------------------------------------------


def test_d_structure(example_group):
    report = verify_d_structure(example_group)
    assert report["exponent_sum"] == 1 + 11 + 121 + 1331 + 14641 == 16105
    assert report["exponent_sum"] % 25 == 5
    assert report["xr_order"] == 5
    assert report["d_order"] == 80525
    assert report["centre_order"] == 5


def test_d_structure_exponent_identity(example_group):
    # u has order 25, so u^16105 = u^5 which has order 5
    eg = example_group
    assert eg.u ** 16105 == eg.u ** 5
    assert element_order(eg.u ** 16105) == 5


def test_conjugation_of_c_by_x(example_group):
    # c^x = c^q, computed against the honest 11-fold product
    eg = example_group
    acc = eg.c
    for _ in range(10):
        acc = acc * eg.c
    assert eg.x.inverse() * eg.c * eg.x == acc
    assert acc != eg.c


def test_d_is_metacyclic_shape(example_group):
    # <c> is normal in D with cyclic quotient generated by x
    eg = example_group
    ctx = eg.ctx
    xc, cc = ctx.from_matrix(eg.x), ctx.from_matrix(eg.c)
    c_powers = set(ctx.powers(cc))
    assert len(c_powers) == 3221
    xinv = ctx.from_matrix(eg.x.inverse())
    conj = ctx.mul(ctx.mul(xinv, cc), xc)
    assert conj in c_powers


# --- fixed points and centralizers ----------------------------------------


def test_fixed_points_zr_trivial(example_group):
    eg = example_group
    zr = MatrixAutElement(eg.spec, eg.xr.mat, 0)
    report = fixed_points_in_F(eg, zr)
    assert report.count == 1
    assert report.free_coords == []


def test_fixed_points_x_trivial(example_group):
    report = fixed_points_in_F(example_group, example_group.x)
    assert report.count == 1


def test_fixed_points_c_is_single_parameter_family(example_group):
    eg = example_group
    report = fixed_points_in_F(eg, eg.c)
    # the family {I + a(E21 - E43)}: a ranges over the whole field GF(11^5)
    assert report.free_coords == ["a"]
    assert report.count == eg.spec.size == 161051
    assert report.coord_sizes == {"a": 161051, "b": 1, "x": 1, "d": 1, "c": 1}


def test_fixed_points_c_family_commutes(example_group):
    # spot-check: members of the family do commute with c, and a generic
    # F element with b != 0 does not
    eg = example_group
    spec = eg.spec
    one, zero = spec.one(), spec.zero()
    for val in (one, spec.element((3, 1, 4, 1, 5))):
        m = FCoords.from_free(a=val, x=zero, d=zero, c=zero).to_matrix(spec)
        assert m * eg.c == eg.c * m
    outside = FCoords(a=zero, b=one, c=zero, d=one, x=one).to_matrix(spec)
    assert outside * eg.c != eg.c * outside


def test_fixed_points_rejects_non_normalizing(example_group):
    with pytest.raises(NotNormalizing):
        fixed_points_in_F(example_group, example_group.g)  # not diagonal


def test_centralizer_of_x(example_group):
    eg = example_group
    rep = centralizer_in_G(eg, eg.x)
    assert rep.d_part_order == 25
    assert rep.f_part.count == 1
    assert rep.order == 25
    x_powers = set(eg.ctx.powers(eg.ctx.from_matrix(eg.x)))
    assert set(rep.d_part) == x_powers


def test_centralizer_of_xr_is_whole_D(example_group):
    eg = example_group
    rep = centralizer_in_G(eg, eg.xr)
    assert rep.d_part_order == 80525
    assert rep.f_part.count == 1
    assert rep.order == 80525


def test_centralizer_of_c(example_group):
    eg = example_group
    rep = centralizer_in_G(eg, eg.c)
    assert rep.d_part_order == 5 * 3221
    assert rep.f_part.count == 161051
    assert rep.order == 5 * 3221 * 161051 == 2593726355
    sub = set(eg.ctx.closure([eg.ctx.from_matrix(eg.c), eg.ctx.from_matrix(eg.xr)], cap=90000))
    assert set(rep.d_part) == sub


def test_centralizer_requires_membership(example_group):
    eg = example_group
    with pytest.raises(NotInD):
        centralizer_in_G(eg, eg.g)
    with pytest.raises(NotInD):
        centralizer_in_G(eg, eg.x.identity())


def test_centralizer_consistency_sampled(example_group):
    # brute-force cross-check of C_G(x) inside D * (sampled F elements)
    eg = example_group
    spec = eg.spec
    one, zero = spec.one(), spec.zero()
    samples = [
        FCoords.from_free(a=one, x=zero, d=zero, c=zero),
        FCoords.from_free(a=zero, x=one, d=zero, c=zero),
        FCoords.from_free(a=zero, x=zero, d=zero, c=one),
        FCoords.from_free(a=one, x=one, d=one, c=one),
    ]
    for coords in samples:
        fmat = coords.to_matrix(spec)
        assert fmat * eg.x != eg.x * fmat  # C_F(x) = 1, none of these commute
    rep = centralizer_in_G(eg, eg.x)
    for compact in rep.d_part[:10]:
        d_elem = eg.ctx.to_matrix(compact)
        assert d_elem * eg.x == eg.x * d_elem


# --- symbolic checks -------------------------------------------------------


def test_family_separation_certificate(example_group):
    report = verify_family_separation(example_group)
    assert report.ok and report.mode == "symbolic"
    assert report.entry == (3, 0)
    assert report.monomial == "2*a^1*b^1"


def test_family_separation_numeric_spot_checks(example_group):
    eg = example_group
    spec = eg.spec
    one, zero = spec.one(), spec.zero()

    def m_a(val):
        return FCoords.from_free(a=val, x=zero, d=zero, c=zero).to_matrix(spec)

    g, gi = eg.g, eg.g.inverse()
    # a = 0: the commutator degenerates to the identity
    w0 = m_a(zero)
    h = gi * m_a(one) * g
    assert (w0.inverse() * h.inverse() * w0 * h).is_identity()
    # a = b = 1: commutator is not the identity
    w1 = m_a(one)
    comm = w1.inverse() * h.inverse() * w1 * h
    assert not comm.is_identity()
    # and matches the certificate entry 2ab at position (4, 1)
    assert comm.mat[3][0] == spec.element(2)


def test_witness_path8(example_group):
    report = witness_path8(example_group)
    assert len(report) == 8
    assert len(report.elements) == 9
    assert report.elements[0] == example_group.x
    assert report.elements[-1] == example_group.y
    assert not any(e.is_identity() for e in report.elements)
    for a, b in zip(report.elements, report.elements[1:]):
        assert a * b == b * a


def test_path_edges_satisfy_graph_adjacency_rule(example_group):
    # the commgraph adjacency predicate: distinct commuting elements
    report = witness_path8(example_group)
    for a, b in zip(report.elements, report.elements[1:]):
        assert a != b and a * b == b * a


def test_center_of_F(example_group):
    report = center_of_F(example_group)
    assert report.forced_zero == ["a", "d", "x"]
    assert report.free == ["c"]
    assert report.order == 161051  # q^r


def test_center_of_F_numeric_oracle(example_group):
    # elements with only the c-coordinate commute with random F elements
    import random

    eg = example_group
    spec = eg.spec
    rng = random.Random(11)

    def rand_elem():
        pick = lambda: spec.element(tuple(rng.randrange(11) for _ in range(5)))
        return FCoords.from_free(a=pick(), x=pick(), d=pick(), c=pick()).to_matrix(spec)

    central = FCoords.from_free(
        a=spec.zero(), x=spec.zero(), d=spec.zero(), c=spec.element((1, 2, 3, 0, 7))
    ).to_matrix(spec)
    witnesses = [rand_elem() for _ in range(8)]
    assert all(central * m == m * central for m in witnesses)
    off_centre = FCoords.from_free(
        a=spec.one(), x=spec.zero(), d=spec.zero(), c=spec.zero()
    ).to_matrix(spec)
    assert any(off_centre * m != m * off_centre for m in witnesses)


def test_f_has_class_exactly_3(example_group):
    report = verify_f_class3(example_group)
    assert report.derived_nontrivial
    assert report.triple_nontrivial
    assert report.quadruple_trivial
    assert report.ok


def test_not_frobenius_structure(example_group):
    assert verify_not_frobenius_structure(example_group)


# --- the driver ------------------------------------------------------------


def test_run_all_checks_passes():
    report = run_all_checks(11, 5, 3221)
    assert first_failing_check(report) is None
    assert report["group_order"] == "54173193341944394740910525"
    names = [c["name"] for c in report["checks"]]
    assert names == [
        "params", "build", "symplectic", "d_structure", "fixed_points",
        "centralizers", "family_separation", "path8", "f_class3", "group_order",
        "not_frobenius",
    ]


def test_run_all_checks_rejects_bad_params():
    report = run_all_checks(11, 3, 7)
    assert first_failing_check(report) == "params"
    report = run_all_checks(13, 5, 7)
    assert first_failing_check(report) == "params"
