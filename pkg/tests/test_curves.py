import math

import numpy as np
import pytest

from lorentzmin.curves import (
    Curve,
    ParamFamily,
    builtin_curve,
    const,
    derivative_inner,
    eval_curve,
    fd_derivative_check,
    hcosh,
    hsinh,
    make_example,
    null_check,
    poly,
    seeded_null_pair,
    validate_family,
    PAIR_FLAVORS,
)
from lorentzmin.errors import (
    ConstraintViolationError,
    InvalidInputError,
    SignatureMismatchError,
)
from lorentzmin.indefinite import Signature

E21 = Signature(2, 1)

REF_82 = {"a": 1 / math.sqrt(2), "b": 1 / math.sqrt(2),
             "p": 1.1, "q": 1.5, "r": 1.1, "s": 1.5}


def fam71(a=1, p=3, q=1, r=2):
    return ParamFamily("Ex7_1", {"a": a, "p": p, "q": q, "r": r})


class TestEval:
    def test_constant_curve_derivative(self):
        c = Curve.from_components(E21, [const(1), const(1)])
        v = eval_curve(c, 0.3, order=1)
        assert np.all(v.components == 0)

    def test_sinh_cosh_second_derivative(self):
        c = Curve.from_components(E21, [hsinh(1), hcosh(1)])
        v = eval_curve(c, 0.0, order=2)
        np.testing.assert_allclose(v.components, [0.0, 1.0], atol=1e-15)

    def test_order_out_of_range(self):
        c = builtin_curve("line2")
        with pytest.raises(InvalidInputError):
            eval_curve(c, 0.0, order=4)

    def test_t_outside_domain(self):
        c = builtin_curve("line2")  # domain [-2, 2], 10% pad
        with pytest.raises(InvalidInputError):
            eval_curve(c, 3.0)

    def test_example_third_derivative_vs_position_differences(self):
        # oracle: third central difference of the position, Richardson
        # extrapolated once, entirely independent of the stored derivative
        z = make_example(fam71())
        t, h = 0.4, 4e-3

        def d3(hh):
            return (
                z.at(t + 2 * hh) - 2 * z.at(t + hh) + 2 * z.at(t - hh) - z.at(t - 2 * hh)
            ) / (2 * hh**3)

        oracle = (4 * d3(h / 2) - d3(h)) / 3
        exact = z.at(t, 3)
        rel = np.max(np.abs(oracle - exact)) / max(1.0, np.max(np.abs(exact)))
        assert rel < 1e-6


class TestFdDerivativeCheck:
    def test_quadratic_exact(self):
        c = Curve.from_components(E21, [poly(1, 0, 1), poly(0, 2)])
        assert fd_derivative_check(c, 0.5, 1, 1e-3) < 1e-10

    def test_hyperbolic_pair_second_order(self):
        z, _ = make_example(ParamFamily("Ex8_2", REF_82))
        assert fd_derivative_check(z, 0.2, 2, 1e-4) < 1e-6

    def test_example_third_order(self):
        z = make_example(fam71())
        assert fd_derivative_check(z, 0.7, 3, 1e-3) < 1e-5

    def test_bad_step(self):
        with pytest.raises(InvalidInputError):
            fd_derivative_check(builtin_curve("line2"), 0.0, 1, 0.0)

    def test_bad_order(self):
        with pytest.raises(InvalidInputError):
            fd_derivative_check(builtin_curve("line2"), 0.0, 0, 1e-3)

    def test_all_factory_curves_orders_1_to_3(self):
        rng = np.random.default_rng(7)
        curves = [
            make_example(fam71()),
            *make_example(ParamFamily("Ex7_2", {"p": 3, "q": 1.5, "r": 1})),
            make_example(ParamFamily("Ex8_1", {"a": 1, "b": 1.1, "p": 1, "q": 1.5})),
            *make_example(ParamFamily("Ex8_2", REF_82)),
        ]
        for curve in curves:
            lo, hi = curve.domain
            ts = rng.uniform(lo + 0.05, hi - 0.05, 20)
            for order, step in ((1, 1e-5), (2, 1e-4), (3, 1e-3)):
                worst = max(fd_derivative_check(curve, t, order, step) for t in ts)
                assert worst < 1e-6, (curve.label, order, worst)


class TestDerivativeInner:
    def test_example_71_constant_speed(self):
        z = make_example(fam71())
        for t in np.linspace(-1.1, 1.1, 7):
            assert derivative_inner(z, 1, z, 1, t, t) == pytest.approx(4.0, abs=1e-9)

    def test_example_81_constant_speed(self):
        z = make_example(ParamFamily("Ex8_1", {"a": 1, "b": 1.1, "p": 1, "q": 1.5}))
        for t in np.linspace(-1.1, 1.1, 7):
            assert derivative_inner(z, 1, z, 1, t, t) == pytest.approx(-2.0, abs=1e-9)

    def test_constant_curve_vanishes(self):
        c = Curve.from_components(E21, [const(2), const(1)])
        line = builtin_curve("line2")
        assert derivative_inner(c, 1, line, 1, 0.3, 0.4) == 0.0

    def test_signature_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            derivative_inner(builtin_curve("line2"), 1, builtin_curve("trig3"), 1, 0, 0)


class TestNullCheck:
    def test_null_line(self):
        rep = null_check(builtin_curve("line2"))
        assert rep.passed and rep.max_residual == 0.0

    def test_circular_null_curve(self):
        rep = null_check(builtin_curve("trig3"))
        assert rep.passed and rep.max_residual < 1e-12

    def test_unit_hyperbola_fails(self):
        c = Curve.from_components(E21, [hsinh(1), hcosh(1)])
        rep = null_check(c)
        assert not rep.passed
        assert rep.max_residual == pytest.approx(1.0, abs=1e-12)


class TestFamilies:
    def test_ex71_light_cone_and_null_acceleration(self):
        z = make_example(fam71())
        for t in np.linspace(*z.domain, 41):
            assert abs(derivative_inner(z, 0, z, 0, t, t)) < 1e-9
            assert abs(derivative_inner(z, 2, z, 2, t, t)) < 1e-9
            assert np.max(np.abs(z.at(t, 3))) > 1.0

    def test_ex81_premises(self):
        z = make_example(ParamFamily("Ex8_1", {"a": 1, "b": 1.1, "p": 1, "q": 1.5}))
        for t in np.linspace(*z.domain, 41):
            assert abs(derivative_inner(z, 0, z, 0, t, t)) < 1e-9
            assert abs(derivative_inner(z, 2, z, 2, t, t) - 4.0) < 1e-9
            assert np.max(np.abs(z.at(t, 3) - 2 * z.at(t, 1))) > 1e-9

    def test_ex72_structural_orthogonality(self):
        z, w = make_example(ParamFamily("Ex7_2", {"p": 3, "q": 1.5, "r": 1}))
        for t in np.linspace(-1.1, 1.1, 21):
            # identities hold to relative precision; scale by operand size
            def rel(k1, k2, c1=z, c2=z):
                scale = 1.0 + np.max(np.abs(c1.at(t, k1))) * np.max(np.abs(c2.at(t, k2)))
                return abs(derivative_inner(c1, k1, c2, k2, t, t)) / scale

            assert rel(0, 0, z, w) < 1e-12        # <z, w> = 0
            assert rel(0, 3) < 1e-12              # <z, z'''> = 0
            assert rel(1, 3) < 1e-12              # <z', z'''> = 0
            assert rel(2, 2) < 1e-12              # <z'', z''> = 0
            assert rel(2, 2, w, w) < 1e-12        # <w'', w''> = 0

    def test_ex72_chain_params_violate_radicand(self):
        # parameters satisfying the quoted chain make one radicand
        # negative, always; spot-check the factory error on one such triple
        q, r = 1.5, 1.0
        mid = 80 + 189 * r**2 - 64 * q**2
        p = math.sqrt(0.5 * (mid / 78.75 + mid / 35.0))
        with pytest.raises(ConstraintViolationError) as exc:
            make_example(ParamFamily("Ex7_2", {"p": p, "q": q, "r": r}))
        assert exc.value.radicand == "315p^2+1024q^2-3024r^2-1280"

    def test_chain_always_violates_radicand(self):
        rng = np.random.default_rng(42)
        count = 0
        while count < 300:
            q, r = rng.uniform(0.05, 3.0, 2)
            mid = 80 + 189 * r**2 - 64 * q**2
            if mid <= 0:
                continue
            p2 = rng.uniform(mid / 78.75, mid / 35.0)
            count += 1
            assert 315 * p2 + 1024 * q**2 - 3024 * r**2 - 1280 < 0

    def test_radicand_valid_params_violate_chain(self):
        report = validate_family(ParamFamily("Ex7_2", {"p": 3, "q": 1.5, "r": 1}))
        assert report.ok
        assert not report.chain_ok

    def test_ex71_chain_advisory(self):
        report = validate_family(fam71())
        assert report.ok and report.chain_ok
        assert set(report.denominators) == {"r^2-q^2"}

    def test_nonpositive_parameter(self):
        with pytest.raises(InvalidInputError):
            make_example(ParamFamily("Ex7_1", {"a": -1, "p": 3, "q": 1, "r": 2}))

    def test_unknown_family(self):
        with pytest.raises(InvalidInputError):
            ParamFamily("Ex9_9", {})

    def test_wrong_param_names(self):
        with pytest.raises(InvalidInputError):
            ParamFamily("Ex7_1", {"a": 1, "b": 3, "q": 1, "r": 2})

    def test_reference_parameters_accepted(self):
        report = validate_family(ParamFamily("Ex8_2", REF_82))
        assert report.ok and report.chain_ok
        z, w = make_example(ParamFamily("Ex8_2", REF_82))
        assert z.signature == Signature(14, 8) == w.signature

    def test_signatures(self):
        assert make_example(fam71()).signature == Signature(7, 3)
        z, w = make_example(ParamFamily("Ex7_2", {"p": 3, "q": 1.5, "r": 1}))
        assert z.signature == Signature(14, 6)
        z8 = make_example(ParamFamily("Ex8_1", {"a": 1, "b": 1.1, "p": 1, "q": 1.5}))
        assert z8.signature == Signature(8, 4)


class TestTypoVariants:
    def test_ex81_alt_pairing_fails_light_cone(self):
        params = {"a": 1, "b": 1.2, "p": 1.2, "q": 1.5}
        good = make_example(ParamFamily("Ex8_1", params))
        bad = make_example(ParamFamily("Ex8_1", params), alt_pairing=True)
        assert abs(derivative_inner(good, 0, good, 0, 0.5, 0.5)) < 1e-9
        assert abs(derivative_inner(bad, 0, bad, 0, 0.5, 0.5)) > 1e-2

    def test_ex81_variants_coincide_at_p_equal_1(self):
        params = {"a": 1, "b": 1.1, "p": 1, "q": 1.5}
        good = make_example(ParamFamily("Ex8_1", params))
        bad = make_example(ParamFamily("Ex8_1", params), alt_pairing=True)
        np.testing.assert_allclose(good.at(0.7), bad.at(0.7))

    def test_ex82_alt_pairing_fails_light_cone(self):
        params = {"a": 0.6, "b": 0.7, "p": 1.15, "q": 1.45, "r": 1.2, "s": 1.3}
        assert validate_family(ParamFamily("Ex8_2", params)).ok
        _, w_good = make_example(ParamFamily("Ex8_2", params))
        _, w_bad = make_example(ParamFamily("Ex8_2", params), alt_pairing=True)
        assert abs(derivative_inner(w_good, 0, w_good, 0, 0.5, 0.5)) < 1e-9
        assert abs(derivative_inner(w_bad, 0, w_bad, 0, 0.5, 0.5)) > 1e-3


class TestSeededPairs:
    @pytest.mark.parametrize("flavor", PAIR_FLAVORS)
    def test_pairs_are_null_with_negative_pairing(self, flavor):
        rng = np.random.default_rng(11)
        z, w, constant = seeded_null_pair(rng, flavor)
        assert null_check(z).passed and null_check(w).passed
        vals = [
            derivative_inner(z, 1, w, 1, x, y)
            for x in np.linspace(-1, 1, 9)
            for y in np.linspace(-1, 1, 9)
        ]
        assert max(vals) < 0
        if constant:
            assert max(vals) - min(vals) < 1e-12
        else:
            assert max(vals) - min(vals) > 1e-3
