"""Where positivity caps the shrink factor, analytically and on a grid."""

import sys
import time

import numpy as np

from clonebound.bounds import feasible, max_eta_closed_form, max_eta_grid
from clonebound.family import ClonerParams, positivity_eigenvalues


def main():
    exact = max_eta_closed_form()
    print(f"closed form: eta_max = {exact.eta_max:.15f} at t = {exact.t_star:.15f}, "
          f"t_xy = {exact.t_xy_star}")
    print(f"             fidelity = {exact.fidelity_max:.15f}")

    print("\ngrid refinement:")
    print(f"{'resolution':>10} {'eta_max':>20} {'error':>12} {'seconds':>8}")
    for resolution in (11, 51, 201, 1001, 2001):
        t0 = time.perf_counter()
        grid = max_eta_grid(resolution)
        dt = time.perf_counter() - t0
        err = exact.eta_max - grid.eta_max
        print(f"{resolution:>10} {grid.eta_max:>20.15f} {err:>12.2e} {dt:>8.3f}")

    # the spectrum pins down why 2/3 is the end of the road: two
    # eigenvalues sit exactly on the boundary there
    lams = positivity_eigenvalues(ClonerParams(exact.eta_max, exact.t_star, 0.0))
    print(f"\nspectrum at the optimum: {np.round(lams.as_array(), 15)}")

    eps = 1e-6
    bumped = ClonerParams(exact.eta_max + eps, exact.t_star, 0.0)
    print(f"eta_max + {eps}: min eigenvalue = {positivity_eigenvalues(bumped).min():.3e}"
          f"  feasible = {feasible(bumped)}")

    # a slice of the feasibility landscape at t_xy = 0; past t = 1/3 the
    # off-diagonal block goes negative on its own and nothing is allowed
    print("\nfeasible eta ceiling as t varies (t_xy = 0):")
    for t in np.linspace(-0.5, 1.0, 7):
        if not feasible(ClonerParams(0.0, t, 0.0)):
            print(f"  t = {t:+.4f}  infeasible for every eta")
            continue
        hi, lo = 1.0, 0.0
        for _ in range(40):  # bisection on the indicator
            mid = 0.5 * (hi + lo)
            if feasible(ClonerParams(mid, t, 0.0)):
                lo = mid
            else:
                hi = mid
        print(f"  t = {t:+.4f}  eta ceiling ~ {lo:.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
