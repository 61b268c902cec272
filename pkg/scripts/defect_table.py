"""Almost-invariant window vectors for the exact lattice walk.

Prints the defect ||Lambda(mu) phi_n - phi_n|| of the normalized window
vector phi_n for n = 2^3 .. 2^maxj, computed two independent ways in exact
arithmetic until the final float conversion. The product n * defect
settling to a constant shows the 1/n rate, which is what certifies that 1
lies in the approximate point spectrum even though no eigenvector exists.

    python3 scripts/defect_table.py [maxj]

Default maxj is 12 (~10s total); the integer arithmetic grows with n, so
2^14 already takes a few minutes.
"""
import sys
import time

from motionwalk.rosenblatt import defect_norm, eigen_parameter


def main() -> None:
    maxj = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    t, lam = eigen_parameter()
    print(f"eigen parameter lambda = sqrt(5) - 2 (exact: {lam.x} + {lam.y}*sqrt5)")
    print(f"t = ({t[0].x} + {t[0].y}*sqrt5, {t[1].x} + {t[1].y}*sqrt5)\n")

    print(f"{'n':>6}  {'defect (direct)':>16}  {'closed form':>16}  {'n * defect':>10}")
    for j in range(3, maxj + 1):
        n = 2 ** j
        t0 = time.monotonic()
        r = defect_norm(t, n)
        dt = time.monotonic() - t0
        print(f"{n:>6}  {r.direct:>16.9e}  {r.closed_form:>16.9e}  "
              f"{n * r.direct:>10.5f}  ({dt:.2f}s)")


if __name__ == "__main__":
    main()
