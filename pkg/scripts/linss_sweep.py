"""Sweep scalar theta blocks over Z_n and report which algebras pass.

Every theta triple with nonzero entries is tried; the passing ones are then
verified as semisymmetrized algebras and identified with the
semisymmetrization of x.y = -x + y.
"""
import argparse
import itertools
import time

from quasiwords import linss


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--moduli", default="5,7")
    ap.add_argument("--signs-only", action="store_true", help="restrict thetas to +1 and -1")
    args = ap.parse_args()

    for n in map(int, args.moduli.split(",")):
        values = (1, n - 1) if args.signs_only else range(1, n)
        start = time.perf_counter()
        passed = failed = 0
        for t1, t2, t3 in itertools.product(values, repeat=3):
            alg = linss.LinSSAlgebra.theta_blocks(n, t1, t2, t3)
            ok = not linss.condition_failures(alg)
            predicted = (t1 * t3 * t2) % n == n - 1
            if ok != predicted:
                raise SystemExit(f"Z_{n}: theta {(t1, t2, t3)} disagrees with the product rule")
            if not ok:
                failed += 1
                continue
            report = linss.verify_semisymmetrized_axioms(alg)
            ident = linss.identify_semisymmetrization(alg)
            if not (report.ok and ident.ok):
                raise SystemExit(f"Z_{n}: theta {(t1, t2, t3)} passes conditions but fails:\n"
                                 f"{report}\n{ident.report}")
            passed += 1
        print(f"Z_{n}: {passed} pass, {failed} fail, "
              f"{time.perf_counter() - start:.2f} s; all passing instances identified")


if __name__ == "__main__":
    main()
