"""Acceptance suite: one test per acceptance criterion, in order.

Each test prints a single "criterion N: PASS/FAIL" line (visible with -s or
on failure) and then asserts.  Tolerances are exact integer or exact modular
equality throughout; nothing is approximate.
"""

import random
from math import gcd

import pytest

from cmforms import congruence
from cmforms.apery import RecurrenceTriple, fit_triple, recurrence_check, sequence
from cmforms.cli import SweepConfig, _render_reports, run_config
from cmforms.coeffs import Family, FamilyTag, alpha_prime, extend_coefficients, gamma_prime
from cmforms.congruence import verify_bs_congruence
from cmforms.etaser import alpha_from_eta
from cmforms.hecke import HeckeCharSpec, coprime_to_conductor, phi_eval, q_expansion_ideal_sum
from cmforms.nt import primes_in, primes_up_to
from cmforms.quadint import QuadInt, Ring, units

GAMMA_WEIGHTS = list(range(2, 14))
BETA_WEIGHTS = [3, 5, 7, 9]
NMAX = 2000


def _report(number: int, ok: bool, label: str) -> None:
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {label}")
    assert ok, f"criterion {number} failed: {label}"


@pytest.fixture(scope="module")
def ideal_expansions():
    out = {}
    for k in GAMMA_WEIGHTS:
        out[("gamma", k)] = q_expansion_ideal_sum(HeckeCharSpec.for_weight(Ring.EISEN, k), NMAX)
    for k in BETA_WEIGHTS:
        out[("beta", k)] = q_expansion_ideal_sum(HeckeCharSpec.for_weight(Ring.SQRTM2, k), NMAX)
    return out


def test_criterion_01_oracle_equivalence(ideal_expansions):
    bad = []
    for (family, k), ideal in ideal_expansions.items():
        fam = Family.GAMMA if family == "gamma" else Family.BETA
        closed = extend_coefficients(FamilyTag(fam, k), NMAX)
        if ideal.coeffs != closed.coeffs:
            bad.append((family, k))
    _report(1, not bad, f"ideal-sum == closed-form for all n <= {NMAX} ({len(ideal_expansions)} expansions)")


def test_criterion_02_integrality_and_multiplicativity(ideal_expansions):
    # integrality is enforced inside q_expansion_ideal_sum (it raises on a
    # non-rational-integer coefficient); here we check coprime
    # multiplicativity of every expansion up to the truncation
    ok = True
    for expansion in ideal_expansions.values():
        for m in range(2, 45):
            for n in range(2, NMAX // m + 1):
                if gcd(m, n) == 1 and expansion.a(m * n) != expansion.a(m) * expansion.a(n):
                    ok = False
    _report(2, ok, f"integral coefficients, a(mn) = a(m)a(n) for coprime mn <= {NMAX}")


def test_criterion_03_eta_oracle():
    trunc = 500
    ok = alpha_from_eta(5, trunc) == -6
    for p in primes_up_to(500):
        ok = ok and alpha_from_eta(p, trunc) == alpha_prime(3, p)
    _report(3, ok, "eta product matches the closed form at every prime p <= 500")


def test_criterion_04_supercongruence_mod_p2():
    ok = all(congruence.verify_superapery(p, 97).passed for p in primes_in(5, 98))
    _report(4, ok, "A((p-1)/2) = eta coefficient mod p^2 for 5 <= p <= 97")


def test_criterion_05_theorem_sweeps():
    ok = all(
        congruence.verify_thm_1_4(p, r).passed for p in primes_in(5, 200) for r in (1, 2, 3)
    )
    ok = ok and all(
        congruence.verify_thm_1_8(p, r).passed for p in primes_in(3, 200) for r in (1, 2, 3)
    )
    ok = ok and all(
        congruence.verify_thm_1_9(p, r).passed for p in primes_in(5, 100) for r in (1, 2)
    )
    _report(5, ok, "prime-power sweeps pass (p < 200 r <= 3 twice; p < 100 r <= 2 mod p^2)")


def test_criterion_06_mod_p2_witnesses():
    w4 = congruence.find_mod_p2_counterexample("thm1.4", 100)
    w8 = congruence.find_mod_p2_counterexample("thm1.8", 100)
    ok = w4 is not None and w8 is not None and w4.passed and w8.passed
    _report(6, ok, "mod-p^2 failure witnesses below 100 exist for both mod-p congruences")


def test_criterion_07_power_identities():
    from cmforms.coeffs import (
        power_identity_beta,
        power_identity_gamma,
        ramified_identity_beta,
        ramified_identity_gamma,
    )

    ok = gamma_prime(5, 7) == -94
    lhs, rhs = power_identity_gamma(3, 7, 2)
    ok = ok and lhs == rhs == gamma_prime(3, 7) ** 2
    for k in range(2, 10):
        for p in primes_in(5, 500):
            for r in range(1, 6):
                lhs, rhs = power_identity_gamma(k, p, r)
                ok = ok and lhs == rhs
    for k in (3, 5, 7, 9):
        for p in primes_in(3, 500):
            for r in range(1, 6):
                lhs, rhs = power_identity_beta(k, p, r)
                ok = ok and lhs == rhs
        for r in range(1, 6):
            ok = ok and ramified_identity_gamma(k, r)[0] == ramified_identity_gamma(k, r)[1]
            ok = ok and ramified_identity_beta(k, r)[0] == ramified_identity_beta(k, r)[1]
    _report(7, ok, "exact power-expansion identities, p < 500, k <= 9, r <= 5, plus ramified branches")


def test_criterion_08_two_branch_congruence():
    ok = True
    for m_tag in (2, 3, 4):
        for p in primes_in(3, 100):
            if (m_tag == 4 and p == 2) or (m_tag != 4 and p % m_tag == 0):
                continue
            for m in (1, 2, 3):
                for r in (2, 3):
                    rep, _note = verify_bs_congruence(m_tag, m, r, p)
                    ok = ok and rep.passed
    _report(8, ok, "two-branch wrapper congruence mod p^r for M in {2,3,4}, m <= 3, r <= 3, p < 100")


def test_criterion_09_recurrence_fits():
    seq_a = sequence("A", 301)
    ok_a = recurrence_check(seq_a, RecurrenceTriple(11, -1, -3), 300)
    ok_a = ok_a and fit_triple(seq_a) == RecurrenceTriple(11, -1, -3)
    triple_c = fit_triple(sequence("C", 201))
    triple_d = fit_triple(sequence("D", 201))
    # NOTE: triple_c and triple_d are provably None — the n = 1 instance of
    # b*4*u(2) + (2a - lam)*u(1) + u(0) = 0 has no integral solution for
    # either sequence (a mod-3 obstruction for C, a parity obstruction for
    # D), so this sub-criterion cannot be satisfied as stated.  The check is
    # kept faithful and is expected to fail.
    ok = ok_a and triple_c is not None and triple_d is not None
    _report(9, ok, "A fits (11,-1,-3) to n=300; integral triples for C and D to n=200")


def test_criterion_10_property_suites():
    rng = random.Random(20260824)
    ok = True

    specs = [HeckeCharSpec.for_weight(Ring.EISEN, k) for k in (7, 4, 3, 6)] + [
        HeckeCharSpec.for_weight(Ring.SQRTM2, 3)
    ]
    for spec in specs:  # one spec per conductor case
        done = 0
        while done < 10_000:
            a = QuadInt(spec.ring, rng.randint(-60, 60), rng.randint(-60, 60))
            b = QuadInt(spec.ring, rng.randint(-60, 60), rng.randint(-60, 60))
            if a.is_zero() or b.is_zero():
                continue
            if not (coprime_to_conductor(a, spec) and coprime_to_conductor(b, spec)):
                continue
            base = phi_eval(a, spec)
            u = rng.choice(units(spec.ring))
            ok = ok and phi_eval(u * a, spec) == base
            ok = ok and phi_eval(a * b, spec) == base * phi_eval(b, spec)
            done += 1

    for _ in range(10_000):
        ring = rng.choice(list(Ring))
        a = QuadInt(ring, rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        b = QuadInt(ring, rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        ok = ok and (a * b).norm() == a.norm() * b.norm()

    config = SweepConfig(theorems=["thm1.4", "eq2.1"], pmax=40, rmax=2, mmax=2, jobs=1)
    first = _render_reports(run_config(config)[0], "json")
    second = _render_reports(run_config(config)[0], "json")
    parallel_config = SweepConfig(theorems=["thm1.4", "eq2.1"], pmax=40, rmax=2, mmax=2, jobs=4)
    parallel = _render_reports(run_config(parallel_config)[0], "json")
    ok = ok and first == second == parallel
    _report(10, ok, "10^4-case character/norm property suites; byte-identical sweeps across --jobs")
