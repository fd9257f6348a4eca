import random
from fractions import Fraction

import pytest

from cfhankel.cfrac import (
    ApproximantPair,
    CFraction,
    ConstantTermNotOne,
    IndexOutOfRange,
    NonInvertibleLeadingScalar,
    Terminated,
    Truncated,
    approximants,
    cfraction_from_json,
    cfraction_to_json,
    correspond,
    determinant_identity_residual,
    evaluate,
    prepend_unit_lead,
)
from cfhankel.exact import (
    GAMMA,
    poly,
    series,
    series_eval_gamma,
    series_mul,
    series_reciprocal,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def rand_cfraction(rng, max_terms=6):
    n = rng.randint(1, max_terms)
    a = [rng.choice([1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2)]) for _ in range(n)]
    q = [rng.choice([1, 2, 3]) for _ in range(n)]
    return CFraction(tuple(Fraction(v) for v in a), tuple(q), Terminated())


class TestCorrespond:
    def test_catalan(self):
        # every level of the extraction reproduces the same tail, so the
        # partial quotients continue at (-1, 1) for as long as the trusted
        # window allows: q_1 + ... + q_n <= 6
        cf = correspond(series(CATALAN[:7], 6))
        assert cf.a == (Fraction(-1),) * 6
        assert cf.q == (1,) * 6
        assert cf.status == Truncated(6)

    def test_aerated_catalan(self):
        cf = correspond(series([1, 0, 1, 0, 2, 0, 5], 6))
        assert cf.a == (Fraction(-1),) * 3
        assert cf.q == (2, 2, 2)
        assert cf.status == Truncated(6)

    def test_geometric_terminates(self):
        # 1/(1-x) is exactly 1/(1 + (-x)), one partial quotient
        f = series([1, 1, 1, 1, 1], 4)
        cf = correspond(f, exact=True)
        assert cf.a == (Fraction(-1),)
        assert cf.q == (1,)
        assert cf.status == Terminated()
        assert evaluate(cf, 4) == f

    def test_zero_tail_without_exact_flag_stays_truncated(self):
        cf = correspond(series([1, 1, 1, 1, 1], 4))
        assert cf.status == Truncated(4)

    def test_constant_series(self):
        cf = correspond(series([1, 0, 0, 0, 0], 4), exact=True)
        assert cf.a == () and cf.status == Terminated()

    def test_constant_term_must_be_one(self):
        with pytest.raises(ConstantTermNotOne):
            correspond(series([2, 1], 1))

    def test_symbolic_lead_is_rejected(self):
        with pytest.raises(NonInvertibleLeadingScalar):
            correspond(series([1, -GAMMA, GAMMA**2], 2))

    def test_round_trip_random(self):
        rng = random.Random(11)
        for _ in range(30):
            coeffs = [Fraction(1)] + [
                Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(12)
            ]
            f = series(coeffs, 12)
            cf = correspond(f)
            assert evaluate(cf, 12) == f

    def test_reverse_round_trip_random(self):
        rng = random.Random(13)
        for _ in range(25):
            cf = rand_cfraction(rng)
            horizon = sum(cf.q) + 4
            back = correspond(evaluate(cf, horizon), exact=True)
            assert back == cf

    def test_prepend_unit_lead(self):
        f = series([3, 1], 1)
        assert prepend_unit_lead(f) == series([1, 3, 1], 2)


class TestEvaluate:
    def test_empty_fraction(self):
        cf = CFraction((), (), Terminated())
        assert evaluate(cf, 4) == series([1, 0, 0, 0, 0], 4)

    def test_catalan_generating_function(self):
        cf = CFraction((Fraction(-1),) * 8, (1,) * 8, Terminated())
        assert evaluate(cf, 5) == series([1, 1, 2, 5, 14, 42], 5)

    def test_rogers_ramanujan_symbolic(self):
        # hand expansion of 1/(1 + gx/(1 + gx^2/(1 + gx^3/(1 + gx^4)))) mod x^5
        cf = CFraction((GAMMA,) * 4, (1, 2, 3, 4), Terminated())
        expected = series(
            [1, -GAMMA, GAMMA**2, GAMMA**2 - GAMMA**3, GAMMA**4 - 2 * GAMMA**3], 4
        )
        got = evaluate(cf, 4)
        assert got == expected
        # cross-check at gamma = 1 against extraction from the numeric series
        numeric = CFraction((Fraction(1),) * 4, (1, 2, 3, 4), Terminated())
        assert series_eval_gamma(got, 1) == evaluate(numeric, 4)
        back = correspond(evaluate(numeric, 9))
        assert back.a == (Fraction(1),) * 3
        assert back.q == (1, 2, 3)

    def test_truncated_status_caps_expansion(self):
        cf = correspond(series(CATALAN[:7], 6))
        assert evaluate(cf, 50).order == 6

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            evaluate(CFraction((), (), Terminated()), -1)


class TestApproximants:
    def test_base_cases(self):
        cf = CFraction((Fraction(-1),) * 3, (1,) * 3, Terminated())
        p0 = approximants(cf, 0)
        assert p0 == ApproximantPair(poly([1]), poly([1]), 0)
        p1 = approximants(cf, 1)
        assert p1.A == poly([1, -1]) and p1.B == poly([1])

    def test_catalan_second_approximant(self):
        cf = CFraction((Fraction(-1),) * 3, (1,) * 3, Terminated())
        p2 = approximants(cf, 2)
        assert p2.A == poly([1, -2])
        assert p2.B == poly([1, -1])

    def test_index_out_of_range(self):
        cf = CFraction((Fraction(1),), (1,), Terminated())
        with pytest.raises(IndexOutOfRange):
            approximants(cf, 2)
        with pytest.raises(IndexOutOfRange):
            determinant_identity_residual(cf, 0)

    def test_approximant_quotient_equals_prefix_expansion(self):
        # 1/(A_n/B_n) expanded as a series is exactly the n-term evaluation
        rng = random.Random(71)
        for _ in range(10):
            cf = rand_cfraction(rng)
            n = rng.randint(0, len(cf))
            pair = approximants(cf, n)
            quotient = series_mul(
                series(pair.B.coeffs, 10), series_reciprocal(series(pair.A.coeffs, 10))
            )
            prefix = CFraction(cf.a[:n], cf.q[:n], Terminated())
            assert quotient == evaluate(prefix, 10)

    def test_agreement_order_with_full_expansion(self):
        # the n-term prefix agrees with the full fraction strictly through
        # x^(s_{n+1} - 1) and differs at x^(s_{n+1})
        cf = CFraction(
            (Fraction(2), Fraction(-1, 3), Fraction(5), Fraction(1)),
            (1, 2, 1, 2),
            Terminated(),
        )
        full = evaluate(cf, 12)
        for n in range(len(cf)):
            prefix = CFraction(cf.a[:n], cf.q[:n], Terminated())
            partial = evaluate(prefix, 12)
            boundary = cf.exponent_sum(n + 1)
            assert partial.coeffs[:boundary] == full.coeffs[:boundary]
            assert partial.coeffs[boundary] != full.coeffs[boundary]


class TestDeterminantIdentity:
    def test_base_case_any_fraction(self):
        rng = random.Random(17)
        for _ in range(5):
            cf = rand_cfraction(rng)
            assert determinant_identity_residual(cf, 1).is_zero

    def test_catalan_hand_expansion(self):
        cf = CFraction((Fraction(-1),) * 3, (1,) * 3, Terminated())
        # (1-2x)*1 - (1-x)^2 = -x^2 = (-1)^1 a_1 a_2 x^2
        assert determinant_identity_residual(cf, 2).is_zero

    def test_mixed_exponents(self):
        cf = CFraction(
            (Fraction(2), Fraction(-1, 3), Fraction(5)), (1, 2, 1), Terminated()
        )
        for n in (1, 2, 3):
            assert determinant_identity_residual(cf, n).is_zero

    def test_random_property(self):
        rng = random.Random(19)
        for _ in range(20):
            cf = rand_cfraction(rng)
            for n in range(1, len(cf) + 1):
                assert determinant_identity_residual(cf, n).is_zero

    def test_symbolic_coefficients(self):
        cf = CFraction((GAMMA, GAMMA, GAMMA), (1, 2, 3), Terminated())
        for n in (1, 2, 3):
            assert determinant_identity_residual(cf, n).is_zero


class TestSerialization:
    def test_round_trip_terminated(self):
        cf = CFraction((Fraction(-1), Fraction(1, 2)), (1, 3), Terminated())
        blob = cfraction_to_json(cf)
        assert blob["status"] == "terminated"
        assert cfraction_from_json(blob) == cf

    def test_round_trip_truncated_symbolic(self):
        cf = CFraction((GAMMA, GAMMA), (1, 2), Truncated(9))
        blob = cfraction_to_json(cf)
        assert blob["status"] == {"truncated": 9}
        assert cfraction_from_json(blob) == cf

    def test_bad_status(self):
        with pytest.raises(ValueError):
            cfraction_from_json({"a": [], "q": [], "status": "later"})
