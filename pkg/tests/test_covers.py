"""Tests for covers and nowhere-vanishing combination certificates."""

import random

import pytest

from gelfand.covers import (
    CombinationCertificate,
    ProjectivePoint,
    certify,
    check_cover,
    combine_case1,
    combine_case2,
    image_points,
    indicator_poly,
    interpolate_case2,
    unit_combination_case3,
)
from gelfand.errors import AvoidanceExhausted, CommonZero, OriginInJ
from gelfand.field_core import (
    Fp,
    Fq,
    enumerate_field,
    find_rootfree_monic,
)
from gelfand.function_ring import RingElement
from gelfand.poly import format_poly, univariate

import itertools


def _re(field, values):
    return RingElement.from_ints(field, values)


def test_check_cover_complementary_supports():
    F = Fp(2)
    cover = check_cover([_re(F, [1, 0]), _re(F, [0, 1])])
    assert cover.space.size == 2


def test_check_cover_common_zero():
    F = Fp(2)
    with pytest.raises(CommonZero) as exc:
        check_cover([_re(F, [1, 0]), _re(F, [1, 0])])
    assert exc.value.point == 1


def test_single_nowhere_zero_function_is_a_cover():
    F = Fp(3)
    cover = check_cover([_re(F, [1, 2, 1])])
    assert len(cover.functions) == 1


def test_image_points():
    F = Fp(2)
    cover = check_cover([_re(F, [1, 0]), _re(F, [0, 1])])
    J = image_points(cover)
    assert {tuple(x.payload for x in pt) for pt in J} == {(1, 0), (0, 1)}
    origin = (F.zero(), F.zero())
    assert origin not in J


def test_image_of_constant_cover():
    F = Fp(5)
    cover = check_cover([_re(F, [1, 1, 1])])
    assert image_points(cover) == [(F.one(),)]


def test_indicator_f2():
    F = Fp(2)
    assert format_poly(indicator_poly((F.one(),), F)) == "x1"


def test_indicator_f3_origin():
    F = Fp(3)
    ind = indicator_poly((F.zero(), F.zero()), F)
    # (1 - x^2)(1 - y^2)
    for pt in itertools.product(enumerate_field(F), repeat=2):
        expected = F.one() if all(x.is_zero for x in pt) else F.zero()
        assert ind.evaluate(pt) == expected


@pytest.mark.parametrize("field", [Fp(2), Fp(3), Fq(2, 2)])
def test_indicator_is_one_at_its_point(field):
    elems = enumerate_field(field)
    for a in itertools.product(elems, repeat=2):
        ind = indicator_poly(a, field)
        assert ind.evaluate(a) == field.one()


def test_interpolate_singleton():
    F = Fp(2)
    f = interpolate_case2([(F.one(),)], F, 1)
    assert format_poly(f) == "x1"


def test_interpolate_full_complement_f3():
    F = Fp(3)
    elems = enumerate_field(F)
    J = [pt for pt in itertools.product(elems, repeat=2)
         if any(not x.is_zero for x in pt)]
    f = interpolate_case2(J, F, 2)
    assert f.evaluate((F.zero(), F.zero())).is_zero
    for pt in J:
        assert f.evaluate(pt) == F.one()
    assert f.constant_term().is_zero


def test_interpolate_cross_cancellation_char2():
    F = Fp(2)
    J = [(F.one(), F.zero()), (F.zero(), F.one())]
    assert format_poly(interpolate_case2(J, F, 2)) == "x1 + x2"


def test_interpolate_rejects_origin():
    F = Fp(2)
    with pytest.raises(OriginInJ):
        interpolate_case2([(F.zero(), F.zero())], F, 2)


def test_combine_case1_f3():
    F = Fp(3)
    cover = check_cover([_re(F, [1, 0]), _re(F, [0, 1])])
    base = univariate(F, find_rootfree_monic(F, 2))
    cert = combine_case1(cover, base)
    assert format_poly(cert.witness) == "x1^2 + x2^2"
    assert [x.payload for x in cert.composite.values] == [1, 1]
    assert certify(cert)["pass"]


def test_combine_case1_single_function_identity():
    F = Fp(3)
    psi = _re(F, [1, 2])
    cover = check_cover([psi])
    base = univariate(F, find_rootfree_monic(F, 2))
    cert = combine_case1(cover, base)
    assert format_poly(cert.witness) == "x1"
    assert cert.composite == psi


def test_combine_case1_f2_three_functions():
    F = Fp(2)
    cover = check_cover([_re(F, [1, 0, 0]), _re(F, [0, 1, 0]),
                         _re(F, [0, 0, 1])])
    base = univariate(F, find_rootfree_monic(F, 2))
    cert = combine_case1(cover, base)
    assert all(v == F.one() for v in cert.composite.values)
    assert certify(cert)["pass"]


def test_case3_f5_two_functions():
    F = Fp(5)
    cover = check_cover([_re(F, [1, 0]), _re(F, [0, 1])])
    cert = unit_combination_case3(cover)
    assert [c.payload for c in cert.coefficients] == [1, 4]
    assert [v.payload for v in cert.composite.values] == [1, 4]
    assert certify(cert)["pass"]
    assert cert.per_step_log[0]["chosen_a"] == "1"


def test_case3_single_function():
    F = Fp(5)
    psi = _re(F, [2, 3])
    cert = unit_combination_case3(check_cover([psi]))
    assert [c.payload for c in cert.coefficients] == [1]
    assert cert.composite == psi


def test_case3_avoidance_exhausted_over_f2():
    F = Fp(2)
    cover = check_cover([_re(F, [1, 0]), _re(F, [1, 1])])
    with pytest.raises(AvoidanceExhausted):
        unit_combination_case3(cover)


def test_case3_per_step_invariant_seeded():
    rng = random.Random(2024)
    for _ in range(20):
        q = rng.choice([5, 7, 11])
        F = Fp(q)
        size = rng.randint(2, q - 1)
        n = rng.randint(2, 4)
        cover = check_cover(_random_cover(rng, F, size, n))
        cert = unit_combination_case3(cover)
        assert certify(cert)["pass"]
        assert all(step["cover_restored"] for step in cert.per_step_log)


def _random_cover(rng, field, size, n):
    elems = enumerate_field(field)
    fns = [[rng.choice(elems) for _ in range(size)] for _ in range(n)]
    for x in range(size):
        if all(fns[i][x].is_zero for i in range(n)):
            fns[rng.randrange(n)][x] = rng.choice(elems[1:])
    return [RingElement(field, tuple(v)) for v in fns]


def test_cross_mode_agreement():
    F = Fp(5)
    rng = random.Random(9)
    for _ in range(10):
        cover = check_cover(_random_cover(rng, F, 3, 2))
        base = univariate(F, find_rootfree_monic(F, 2))
        for cert in (combine_case1(cover, base), combine_case2(cover),
                     unit_combination_case3(cover)):
            assert certify(cert)["pass"]


def test_certify_detects_tampering():
    F = Fp(5)
    cover = check_cover([_re(F, [1, 0]), _re(F, [0, 1])])
    good = unit_combination_case3(cover)
    bad = CombinationCertificate(
        "CaseIII", cover, good.composite,
        coefficients=(F.one(), F.zero()))  # combination vanishes at point 1
    report = certify(bad)
    assert not report["pass"]
    assert report["failing_point"] == 1


def test_projective_canonicalization():
    F = Fp(7)
    u, v = F.from_int(3), F.from_int(5)
    base = ProjectivePoint.of(u, v)
    for lam in enumerate_field(F):
        if lam.is_zero:
            continue
        assert ProjectivePoint.of(lam * u, lam * v) == base
    inf = ProjectivePoint.of(F.from_int(2), F.zero())
    assert inf.is_infinite
    assert inf == ProjectivePoint.of(F.from_int(6), F.zero())
    with pytest.raises(ValueError):
        ProjectivePoint.of(F.zero(), F.zero())


def test_certificate_json_record():
    F = Fp(5)
    cover = check_cover([_re(F, [1, 0]), _re(F, [0, 1])])
    record = unit_combination_case3(cover).to_json()
    assert record["mode"] == "CaseIII"
    assert record["witness"] == ["1", "4"]
    assert record["pass"]
    assert record["per_step_log"][0]["image_size"] == 2
