"""Run the symmetric cloner on a few inputs and watch it hit 5/6 every time."""

import sys

import numpy as np

from clonebound.buzek_hillery import bh_clone, bh_family_point, bh_isometry
from clonebound.family import clone_fidelity
from clonebound.pauli import (
    bloch_to_density,
    overlap_fidelity,
    partial_trace,
    random_rotation,
)


def main():
    v = bh_isometry()
    print("isometry check, V+ V =")
    print(np.round(v.conj().T @ v, 15).real)

    print("\nfidelities for a handful of directions:")
    inputs = {
        "+z": (0, 0, 1),
        "-z": (0, 0, -1),
        "+x": (1, 0, 0),
        "diag": np.array([1.0, 1.0, 1.0]) / np.sqrt(3.0),
    }
    for name, m in inputs.items():
        rho_in = bloch_to_density(m)
        pair = bh_clone(rho_in)
        f1 = overlap_fidelity(rho_in, partial_trace(pair, 1))
        f2 = overlap_fidelity(rho_in, partial_trace(pair, 2))
        print(f"  {name:>5}: clone1 = {f1:.12f}  clone2 = {f2:.12f}")

    print("\nand for 2000 Haar-random pure inputs:")
    worst = 0.0
    for seed in range(2000):
        _, r = random_rotation(seed)
        rho_in = bloch_to_density(r @ [0.0, 0.0, 1.0])
        pair = bh_clone(rho_in)
        worst = max(
            worst,
            abs(overlap_fidelity(rho_in, partial_trace(pair, 1)) - 5 / 6),
            abs(overlap_fidelity(rho_in, partial_trace(pair, 2)) - 5 / 6),
        )
    print(f"  max |F - 5/6| = {worst:.2e}")

    point = bh_family_point()
    print(f"\nfamily parameters extracted from the machine: eta = {point.eta:.12f}, "
          f"t = {point.t:.12f}, t_xy = {point.t_xy:.12f}")
    print(f"clone_fidelity at that point = {clone_fidelity(point):.12f}")

    # full output for |0>, in the computational basis
    print("\nclone pair of |0><0|:")
    print(np.round(bh_clone(bloch_to_density((0, 0, 1))), 12).real)
    return 0


if __name__ == "__main__":
    sys.exit(main())
