import math

import numpy as np
import pytest

import pdmosc.model as model
from pdmosc.errors import ParameterDomainError, SingularPointError
from pdmosc.model import (
    Family,
    OscillatorParams,
    StateIndex,
    energy,
    even_state_energy,
    mass,
    normalization,
    odd_state_energy,
    potential,
    solution_exponents,
    wavefunction,
    x_of_xi,
    xi_of_x,
)
from pdmosc.specfun import gauss_generalized_laguerre, gauss_hermite, hermite


def params(a=0.0, gamma=0.5):
    return OscillatorParams(a=a, gamma=gamma)


def test_params_validation():
    with pytest.raises(ParameterDomainError):
        OscillatorParams(a=-1.0)
    with pytest.raises(ParameterDomainError):
        OscillatorParams(gamma=0.49)
    with pytest.raises(ParameterDomainError):
        OscillatorParams(m0=-1.0)
    p = OscillatorParams(m0=2.0, omega=3.0, hbar=0.5)
    assert abs(p.lam0 - math.sqrt(12.0)) < 1e-15


def test_state_index():
    s = StateIndex(Family.PARABOSE, 7)
    assert s.parity == 1 and s.m == 3 and s.n == 2 * s.m + s.parity
    with pytest.raises(ParameterDomainError):
        StateIndex(Family.CANONICAL, -1)


def test_mass_values():
    assert mass(params(a=0.0), 3.7) == 1.0
    assert abs(mass(params(a=2.0), 0.5) - 0.0625) < 1e-16
    assert abs(mass(params(a=-0.6), 2.0) - 4.0**-0.6) < 1e-15
    assert mass(params(a=2.0), 0.0) == 0.0
    with pytest.raises(SingularPointError):
        mass(params(a=-0.6), 0.0)


def test_potential_values():
    assert abs(potential(params(a=0.0), 1.0) - 0.5) < 1e-16
    assert abs(potential(params(a=2.0), 1.0) - 0.5) < 1e-16
    assert abs(potential(params(a=-0.6), 4.0) - 16.0**0.4 / 2) < 1e-14
    # finite and zero at the origin for every a > -1, even where M is singular
    assert potential(params(a=-0.6), 0.0) == 0.0
    # even in x
    for a in (-0.6, 0.7, 2.0):
        for x in (0.3, 1.7):
            assert potential(params(a=a), x) == potential(params(a=a), -x)


def test_xi_transform():
    p = params(a=2.0)
    assert abs(xi_of_x(p, 1.0) - 1 / math.sqrt(3)) < 1e-15
    assert xi_of_x(p, -1.0) == -xi_of_x(p, 1.0)
    assert xi_of_x(params(a=0.0), 1.3) == 1.3
    assert xi_of_x(p, 0.0) == 0.0 and x_of_xi(p, 0.0) == 0.0


def test_xi_roundtrip_and_monotonic():
    rng = np.random.default_rng(21)
    for a in (-0.6, 0.0, 2.0):
        p = params(a=a)
        for x in rng.uniform(-8, 8, 100):
            if x == 0:
                continue
            assert abs(x_of_xi(p, xi_of_x(p, x)) - x) < 1e-12 * abs(x)
        grid = np.linspace(-5, 5, 1000)
        xi = [xi_of_x(p, x) for x in grid]
        assert np.all(np.diff(xi) > 0)


def test_energy_values():
    assert energy(params(a=0.0), StateIndex(Family.CANONICAL, 0)) == 0.5
    assert energy(params(a=2.0), StateIndex(Family.CANONICAL, 3)) == 10.5
    assert energy(params(a=0.0, gamma=1.5), StateIndex(Family.PARABOSE, 1)) == 2.5
    assert energy(params(a=2.0, gamma=1.0), StateIndex(Family.PARABOSE, 0)) == 2.0


def test_energy_sector_forms_agree():
    for a in (-0.6, 0.0, 2.0):
        for g in (0.5, 1.0, 1.5):
            p = params(a=a, gamma=g)
            for m in range(10):
                assert abs(even_state_energy(p, m)
                           - energy(p, StateIndex(Family.PARABOSE, 2 * m))) < 1e-14
                assert abs(odd_state_energy(p, m)
                           - energy(p, StateIndex(Family.PARABOSE, 2 * m + 1))) < 1e-14


def test_energy_equidistance():
    # 1e-15 relative to the energies themselves: the gap of two rounded
    # doubles can only be exact to ulp(E_n), not to ulp(gap)
    for a in (-0.6, 0.0, 2.0):
        for fam, g in ((Family.CANONICAL, 0.5), (Family.PARABOSE, 1.5)):
            p = params(a=a, gamma=g)
            gap = (a + 1.0) * p.hbar * p.omega
            for n in range(50):
                e_hi = energy(p, StateIndex(fam, n + 1))
                d = e_hi - energy(p, StateIndex(fam, n))
                assert abs(d - gap) < 1e-15 * max(gap, e_hi)


def test_solution_exponents():
    ex = solution_exponents(params(a=2.0), Family.CANONICAL)
    assert ex.B == -0.5
    assert abs(ex.A_even - 2.0 / 6.0) < 1e-15
    assert ex.alpha_even == -0.5 and ex.alpha_odd == 0.5
    exp_pb = solution_exponents(params(a=2.0, gamma=1.5), Family.PARABOSE)
    assert abs(exp_pb.A_even - (2.0 + 2.0) / 6.0) < 1e-15
    assert abs(exp_pb.alpha_even - 0.5 * (2.0 / 3.0 - 1.0)) < 1e-15
    assert exp_pb.alpha_odd == exp_pb.alpha_even + 1.0
    # alpha_even > -1 and alpha_odd > 0 across the admissible range
    for a in (-0.9, -0.3, 0.0, 1.0, 4.0):
        for g in (0.5, 0.8, 2.5):
            ex = solution_exponents(params(a=a, gamma=g), Family.PARABOSE)
            assert ex.alpha_even > -1.0 and ex.alpha_odd > 0.0


def test_normalization_values():
    assert abs(normalization(params(), StateIndex(Family.CANONICAL, 0))
               - math.pi**-0.25) < 1e-15
    want = (3.0 / math.pi) ** 0.25
    assert abs(normalization(params(a=2.0), StateIndex(Family.CANONICAL, 0)) - want) < 1e-14
    # gamma = 1/2 parabose even reduces to the canonical value
    got = normalization(params(a=0.0, gamma=0.5), StateIndex(Family.PARABOSE, 0))
    assert abs(got - math.pi**-0.25) < 1e-15


def test_wavefunction_point_values():
    assert abs(wavefunction(params(), StateIndex(Family.CANONICAL, 0), 0.0)
               - math.pi**-0.25) < 1e-15
    want = math.pi**-0.25 * math.sqrt(0.5) * 2.0 * math.exp(-0.5)
    assert abs(wavefunction(params(), StateIndex(Family.CANONICAL, 1), 1.0) - want) < 1e-14


def test_wavefunction_direct_product_path():
    # independent plain-arithmetic evaluation of the closed form (the
    # library assembles the same quantities in log-domain)
    p = params(a=2.0)
    n = 0
    x = 1.0
    direct = ((3.0 / math.pi) ** 0.25 * (p.lam0**2 * x**2) ** (p.a / 4.0)
              * math.exp(-((p.lam0**2 * x**2) ** (p.a + 1)) / (2 * (p.a + 1))))
    assert abs(wavefunction(p, StateIndex(Family.CANONICAL, n), x) - direct) < 1e-13

    rng = np.random.default_rng(2)
    for a in (-0.6, 0.0, 2.0):
        pa = params(a=a)
        for n in (0, 1, 2, 3, 7):
            c_n = ((a + 1) / math.pi) ** 0.25 * math.sqrt(
                pa.lam0 / (2.0**n * math.factorial(n)))
            for x in rng.uniform(0.05, 2.5, 6):
                z2 = (pa.lam0 * x) ** 2
                xi = xi_of_x(pa, x)
                direct = (c_n * z2 ** (a / 4.0)
                          * math.exp(-(z2 ** (a + 1)) / (2 * (a + 1))) * hermite(n, xi))
                got = wavefunction(pa, StateIndex(Family.CANONICAL, n), x)
                assert abs(got - direct) < 1e-13 * max(1.0, abs(direct))


def test_wavefunction_parity():
    rng = np.random.default_rng(31)
    xs = rng.uniform(0.01, 4.0, 50)
    for a in (-0.6, 0.0, 2.0):
        p = params(a=a)
        for n in range(6):
            s = StateIndex(Family.CANONICAL, n)
            for x in xs:
                lhs = wavefunction(p, s, -x)
                rhs = (-1.0) ** n * wavefunction(p, s, x)
                assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(rhs))
    p = params(a=-0.6, gamma=1.5)
    for n in range(6):
        s = StateIndex(Family.PARABOSE, n)
        for x in xs[:20]:
            lhs = wavefunction(p, s, -x)
            rhs = (-1.0) ** n * wavefunction(p, s, x)
            assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(rhs))


def test_wavefunction_singular_origin():
    # canonical even states with a < 0 diverge like |x|^{a/2} at the origin
    with pytest.raises(SingularPointError):
        wavefunction(params(a=-0.6), StateIndex(Family.CANONICAL, 0), 0.0)
    # but the odd states vanish there: a/2 + a + 1 = 0.1 > 0
    assert wavefunction(params(a=-0.6), StateIndex(Family.CANONICAL, 1), 0.0) == 0.0
    assert wavefunction(params(a=2.0), StateIndex(Family.CANONICAL, 0), 0.0) == 0.0


def _norm_canonical(p, n, n_quad=64):
    rule = gauss_hermite(n_quad)
    tot = 0.0
    for xi, w in zip(rule.nodes, rule.weights):
        x = x_of_xi(p, xi)
        psi = wavefunction(p, StateIndex(Family.CANONICAL, n), x)
        jac = 1.0 / (math.sqrt(p.a + 1) * p.lam0 * abs(p.lam0 * x) ** p.a)
        tot += w * math.exp(xi * xi) * psi * psi * jac
    return tot


def _norm_parabose(p, n, n_quad=64):
    ex = solution_exponents(p, Family.PARABOSE)
    alpha = ex.alpha_even if n % 2 == 0 else ex.alpha_odd
    rule = gauss_generalized_laguerre(n_quad, alpha)
    tot = 0.0
    for t, w in zip(rule.nodes, rule.weights):
        x = x_of_xi(p, math.sqrt(t))
        psi = wavefunction(p, StateIndex(Family.PARABOSE, n), x)
        jac = 1.0 / (2.0 * p.lam0 * abs(p.lam0 * x) ** (2 * p.a + 1))
        tot += 2.0 * w * math.exp(t - alpha * math.log(t)) * psi * psi * jac
    return tot


@pytest.mark.parametrize("a", [-0.6, 0.0, 2.0])
@pytest.mark.parametrize("gamma", [0.5, 1.0, 1.5])
def test_square_integrability(a, gamma):
    p = params(a=a, gamma=gamma)
    for n in range(13):
        assert abs(_norm_canonical(p, n) - 1.0) < 1e-11
        assert abs(_norm_parabose(p, n) - 1.0) < 1e-11


def test_wavefunction_high_quantum_number():
    # n = 40 exercises the log-domain assembly: 2^n n! overflows naively
    p = params(a=2.0)
    assert abs(_norm_canonical(p, 40) - 1.0) < 1e-10


def test_wavefunction_zero_exponent_origin():
    # a = -1/2, gamma = 3/4 puts the even boundary exponent exactly at 0:
    # psi(0) is finite and equals C_0 L_0(0) = 1 for the ground state
    p = params(a=-0.5, gamma=0.75)
    assert wavefunction(p, StateIndex(Family.PARABOSE, 0), 0.0) == 1.0
    # an odd state with zero net exponent is bounded but jumps sign at 0
    p = params(a=-0.8, gamma=0.7)
    with pytest.raises(SingularPointError):
        wavefunction(p, StateIndex(Family.PARABOSE, 1), 0.0)
    lo = wavefunction(p, StateIndex(Family.PARABOSE, 1), -1e-9)
    hi = wavefunction(p, StateIndex(Family.PARABOSE, 1), 1e-9)
    assert lo < 0 < hi and abs(lo + hi) < 1e-12 * abs(hi)


def test_limit_a0_textbook():
    p = params()
    for n in range(9):
        for x in np.linspace(-4, 4, 33):
            if x == 0.0 and n % 2:
                continue
            want = (math.pi**-0.25 / math.sqrt(2.0**n * math.factorial(n))
                    * math.exp(-x * x / 2) * hermite(n, x))
            got = wavefunction(p, StateIndex(Family.CANONICAL, n), x)
            assert abs(got - want) < 1e-13


def test_limit_gamma_half_matches_canonical():
    rng = np.random.default_rng(17)
    xs = np.concatenate([rng.uniform(0.02, 4, 25), -rng.uniform(0.02, 4, 25)])
    for a in (-0.6, 2.0):
        p = params(a=a, gamma=0.5)
        for n in range(10):
            for x in xs:
                can = wavefunction(p, StateIndex(Family.CANONICAL, n), x)
                par = wavefunction(p, StateIndex(Family.PARABOSE, n), x)
                assert abs(can - par) < 1e-12


def test_gamma_half_reduces_every_formula():
    for a in (-0.6, 0.0, 2.0):
        p = params(a=a, gamma=0.5)
        for n in range(8):
            sc = StateIndex(Family.CANONICAL, n)
            sp = StateIndex(Family.PARABOSE, n)
            assert abs(energy(p, sc) - energy(p, sp)) < 1e-15 * abs(energy(p, sc))
        exc = solution_exponents(p, Family.CANONICAL)
        exp = solution_exponents(p, Family.PARABOSE)
        assert exc == exp
