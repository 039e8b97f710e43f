"""Resolvent solver against closed-form oracles and its own certificates."""

import numpy as np
import pytest

from resolvent_lab import (
    ConfigError,
    DomainError,
    GeneratorSpec,
    constant_generator,
    eval_p,
    extremal_generator,
    iterate_resolvent,
    solve_resolvent,
    solve_resolvent_grid,
    solve_slice,
)
from conftest import disk_points


def quadratic_oracle(lam, z):
    """Root of (lam-1) w^2 + (1+lam+z) w - z = 0 inside the unit disk.

    The resolvent equation for p(z) = (1+z)/(1-z) reduces to this
    quadratic; exactly one root lies in the disk (asserted).
    """
    if lam == 1.0:
        return z / (2 + z)
    roots = np.roots([lam - 1.0, 1.0 + lam + z, -z])
    inside = [r for r in roots if abs(r) < 1.0]
    assert len(inside) == 1, f"expected a unique interior root, got {roots}"
    return complex(inside[0])


class TestClosedForms:
    def test_constant_p_is_linear(self):
        for q in (1.0, 0.5 + 2.0j, 3.0):
            spec = constant_generator(q)
            for lam in (0.1, 1.0, 7.0):
                for z in (0.5, -0.3 + 0.6j, 0.99j):
                    sol = solve_resolvent(spec, lam, z)
                    assert sol.w == pytest.approx(z / (1 + lam * q), abs=1e-12)

    def test_single_atom_lambda_one(self, single_atom):
        for z in (0.5, -0.9, 0.4 + 0.4j, -0.99j):
            sol = solve_resolvent(single_atom, 1.0, z)
            assert sol.w == pytest.approx(z / (2 + z), abs=1e-12)

    def test_single_atom_general_lambda(self, single_atom):
        rng = np.random.default_rng(42)
        for lam in (0.2, 0.9, 1.5, 2.0, 3.7, 25.0):
            for z in disk_points(rng, 12, r_max=0.99):
                sol = solve_resolvent(single_atom, lam, complex(z))
                assert sol.w == pytest.approx(quadratic_oracle(lam, complex(z)), abs=1e-10)

    def test_quarter_floor_closed_form(self, quarter_floor_atom):
        # for q=1, a=1/4 the lambda=2 resolvent equation collapses to w (3/(1-w)) = z
        for z in (0.5, -0.999, 0.3 - 0.8j):
            sol = solve_resolvent(quarter_floor_atom, 2.0, z)
            assert sol.w == pytest.approx(z / (3 + z), abs=1e-12)


class TestSolutionContract:
    def test_residual_certificate(self, random_specs):
        rng = np.random.default_rng(9)
        for spec in random_specs[:10]:
            for lam in (0.05, 1.0, 20.0):
                zs = disk_points(rng, 30, r_max=0.999)
                sol = solve_resolvent_grid(spec, lam, zs)
                resid = np.abs(sol.w + lam * eval_p(spec, sol.w) * sol.w - zs)
                assert np.all(resid <= 1e-12)

    def test_schwarz_and_multiplier(self, random_specs):
        rng = np.random.default_rng(10)
        for spec in random_specs[:10]:
            zs = disk_points(rng, 30, r_max=0.999)
            for lam in (0.5, 5.0):
                sol = solve_resolvent_grid(spec, lam, zs)
                assert np.all(np.abs(sol.w) <= np.abs(zs) + 1e-12)
                assert np.all(np.abs(sol.w) < 1)
                g_expected = 1 / (1 + lam * eval_p(spec, sol.w))
                assert np.all(np.abs(sol.g - g_expected) <= 1e-10)
                assert np.all(np.abs(sol.g * zs - sol.w) <= 1e-10)

    def test_iterates_stay_in_trust_disk(self, single_atom, random_specs):
        for spec in [single_atom] + random_specs[:5]:
            for lam, z in ((1.0, -0.999), (2.19, -0.999), (0.01, 0.99), (40.0, 0.7j)):
                sol, trace = solve_resolvent(spec, lam, z, collect_trace=True)
                assert max(abs(w) for w in trace) <= abs(z) + 1e-12

    def test_z_zero(self, single_atom):
        sol = solve_resolvent(single_atom, 1.0, 0.0)
        assert sol.w == 0.0
        assert sol.g == pytest.approx(0.5)  # 1/(1 + lambda q)
        assert sol.iterations == 0

    def test_maximum_modulus_monotonicity(self, single_atom):
        # sup over |z| = r of |w/z| dominates interior samples
        rng = np.random.default_rng(11)
        lam = 1.3
        r = 0.9
        ring = r * np.exp(1j * np.linspace(0, 2 * np.pi, 256, endpoint=False))
        sup_ring = np.max(np.abs(solve_resolvent_grid(single_atom, lam, ring).w) / r)
        inner = disk_points(rng, 100, r_max=r)
        inner = inner[np.abs(inner) > 1e-3]
        ratios = np.abs(solve_resolvent_grid(single_atom, lam, inner).w) / np.abs(inner)
        assert np.all(ratios <= sup_ring + 1e-9)

    def test_small_lambda_first_order(self, random_specs):
        # w = z - lambda f(z) + O(lambda^2) at lambda = 1e-6
        lam = 1e-6
        rng = np.random.default_rng(12)
        for spec in random_specs[:10]:
            for z in disk_points(rng, 10, r_max=0.9):
                w = solve_resolvent(spec, lam, complex(z)).w
                f = eval_p(spec, z) * z
                assert abs(w - z + lam * f) <= 1e-8 * max(1.0, abs(f))

    def test_validation_errors(self, single_atom):
        with pytest.raises(DomainError):
            solve_resolvent(single_atom, 1.0, 1.0)
        with pytest.raises(DomainError):
            solve_resolvent(single_atom, 0.0, 0.5)
        with pytest.raises(DomainError):
            solve_resolvent(single_atom, -1.0, 0.5)
        with pytest.raises(ConfigError):
            solve_resolvent(single_atom, 1.0, 0.5, tol=1e-16)

    def test_iteration_budget_exhaustion(self, single_atom):
        from resolvent_lab import NonConvergenceError

        with pytest.raises(NonConvergenceError) as info:
            solve_resolvent(single_atom, 1.0, -0.95, max_iter=1)
        assert info.value.residual > 0
        sol = solve_resolvent_grid(single_atom, 1.0, np.array([-0.95 + 0j]), max_iter=1, strict=False)
        assert not sol.converged[0]

    def test_warm_start_across_lambda(self, single_atom):
        # the near-boundary warm start crosses a spurious-root basin; the
        # solver must still land on the interior root
        zs = np.array([-0.999 + 0j])
        w0 = solve_resolvent_grid(single_atom, 0.4573, zs).w
        sol = solve_resolvent_grid(single_atom, 2.1867, zs, w0=w0)
        assert sol.w[0] == pytest.approx(quadratic_oracle(2.1867, -0.999 + 0j), abs=1e-10)


class TestSlices:
    def test_identity_direction(self, random_specs):
        for spec in random_specs[:5]:
            a = solve_resolvent(spec, 1.2, 0.4 + 0.2j)
            b = solve_slice(spec, 1.2, 1.0, 0.4 + 0.2j)
            assert b.w == pytest.approx(a.w, abs=1e-12)

    def test_rotation_identity(self, random_specs):
        # slice solution: w(z) = conj(u) * w_master(u z)
        for spec in random_specs[:8]:
            for phi in (0.7, -1.9, 3.0):
                u = np.exp(1j * phi)
                z = 0.55 - 0.2j
                ws = solve_slice(spec, 1.4, u, z).w
                wm = solve_resolvent(spec, 1.4, u * z).w
                assert ws == pytest.approx(np.conj(u) * wm, abs=1e-10)

    def test_constant_p_direction_irrelevant(self, constant_one):
        z = 0.3 + 0.3j
        for u in (1.0, 1j, np.exp(0.4j)):
            sol = solve_slice(constant_one, 2.0, u, z)
            assert sol.w == pytest.approx(z / 3, abs=1e-12)

    def test_unimodularity_enforced(self, single_atom):
        with pytest.raises(DomainError):
            solve_slice(single_atom, 1.0, 1.1, 0.5)


class TestIteration:
    def test_n_one_matches_solve(self, single_atom):
        assert iterate_resolvent(single_atom, 1.0, 0.5, 1) == pytest.approx(
            solve_resolvent(single_atom, 1.0, 0.5).w
        )

    def test_two_fold_closed_form(self, single_atom):
        # apply w = z/(2+z) twice: 0.5 -> 0.2 -> 0.2/2.2
        got = iterate_resolvent(single_atom, 1.0, 0.5, 2)
        assert got == pytest.approx(0.2 / 2.2, abs=1e-12)

    def test_linear_geometric_limit(self, constant_one):
        # constant p == 1, lambda = t/n: z/(1+t/n)^n -> z e^{-t}
        z, t = 0.6, 1.0
        for n in (4, 16, 64):
            got = iterate_resolvent(constant_one, t / n, z, n)
            assert got == pytest.approx(z / (1 + t / n) ** n, abs=1e-12)
        assert abs(iterate_resolvent(constant_one, t / 512, z, 512) - z * np.exp(-t)) < 1e-3

    def test_contraction(self, random_specs):
        for spec in random_specs[:5]:
            z = 0.8 * np.exp(0.3j)
            assert abs(iterate_resolvent(spec, 0.7, z, 4)) <= abs(z)

    def test_n_validation(self, single_atom):
        with pytest.raises(DomainError):
            iterate_resolvent(single_atom, 1.0, 0.5, 0)
