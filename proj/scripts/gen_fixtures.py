"""Generate the committed q-expansion fixtures under data/bases/.

Each fixture holds the saturated integral echelon basis of S_k(Gamma0(N)) to a
precision sufficient for every kernel computation the library performs on it:

  * equation-bearing levels:  prec = sturm(N, l_max*k) + l_max*k,
    where l_max = dim M_k + genus - 1 bounds the model degree;
  * levels used only for the Weierstrass valuation test:
    prec = max(sturm(N, 2) + 10, 2*genus + 20).

Run:  python3 scripts/gen_fixtures.py [N:k ...]   (default: all)
"""

import os
import sys
import time

from modsym import (ModularSymbols, dim_cusp_forms, dim_modular_forms, genus,
                    sturm_bound)
import reference_data as ref

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, os.pardir, "data", "bases")

WEIGHT4 = [14, 15, 17, 18, 19, 20, 21, 23, 25, 27]
WEIGHT2_EQ = [34, 43, 45, 48, 63, 93, 110]
WEIGHT2_WP = [38, 42, 53, 64, 75, 79, 101, 168, 198]


def required_prec(N, k, equation_bearing):
    g = genus(N)
    if equation_bearing:
        l_max = dim_modular_forms(N, k) + g - 1
        return sturm_bound(N, l_max * k) + l_max * k
    return max(sturm_bound(N, 2) + 10, 2 * g + 20)


def check_prefixes(N, k, lat):
    pref = ref.QEXP_PREFIXES.get((N, k))
    if not pref:
        return
    for row, entries in pref.items():
        for n, c in entries.items():
            got = lat[row][n - 1]
            assert got == c, \
                f"prefix mismatch N={N} k={k} row={row} n={n}: {got} != {c}"
    print(f"  prefix check ok (N={N}, k={k})")


def write_fixture(N, k, prec, lat):
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, f"N{N}_k{k}.qexp")
    with open(path, "w") as fh:
        fh.write(f"# integral echelon basis of S_{k}(Gamma0({N})); "
                 f"rows are coefficients of q^1..q^{prec}\n")
        fh.write(f"N {N} weight {k} dim {len(lat)} prec {prec}\n")
        for row in lat:
            fh.write(" ".join(str(c) for c in row) + "\n")
    print(f"  wrote {os.path.relpath(path, os.path.join(HERE, os.pardir))}")


def generate(N, k, equation_bearing):
    t0 = time.time()
    prec = required_prec(N, k, equation_bearing)
    s = dim_cusp_forms(N, k)
    print(f"N={N} k={k}: dim {s}, prec {prec}")
    ms = ModularSymbols(N, k)
    lat = ms.qexpansion_lattice(prec)
    assert len(lat) == s
    # valuations must be strictly increasing by construction
    vals = []
    for row in lat:
        v = next(i + 1 for i, c in enumerate(row) if c)
        vals.append(v)
    assert vals == sorted(vals) and len(set(vals)) == len(vals)
    print(f"  valuations {vals if len(vals) <= 16 else vals[:16]}"
          f"{'' if len(vals) <= 16 else ' ...'}")
    check_prefixes(N, k, lat)
    write_fixture(N, k, prec, lat)
    print(f"  done in {time.time() - t0:.1f}s")


def main():
    jobs = []
    if len(sys.argv) > 1:
        for arg in sys.argv[1:]:
            n, k = arg.split(":")
            n, k = int(n), int(k)
            eq = not (k == 2 and n in WEIGHT2_WP)
            jobs.append((n, k, eq))
    else:
        jobs = [(n, 4, True) for n in WEIGHT4] \
            + [(n, 2, True) for n in WEIGHT2_EQ] \
            + [(n, 2, False) for n in WEIGHT2_WP]
    for n, k, eq in jobs:
        generate(n, k, eq)


if __name__ == "__main__":
    main()
