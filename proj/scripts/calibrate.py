"""Self-checks for the modular-symbols oracle against independent references."""

from fractions import Fraction
import sys

from modsym import (ModularSymbols, P1, CuspClasses, dim_cusp_forms, genus,
                    nu_inf, psi_index, heilbronn_cremona, heilbronn_merel,
                    lift_to_sl2, rref_rows)
import reference_data as ref


def eta_product(e_list, prec):
    """q-expansion (coefficients of q^1..q^prec) of q^(sum d*e/24) prod (1-q^(d n))^e."""
    shift = sum(d * e for d, e in e_list)
    assert shift % 24 == 0
    shift //= 24
    # product of (1 - q^(dn))^e as a series with constant term, to precision prec - shift
    m = prec - shift
    series = [0] * (m + 1)
    series[0] = 1
    for d, e in e_list:
        if e < 0:
            raise ValueError("only positive exponents needed here")
        j = d
        while j <= m:
            for _ in range(e):
                new = list(series)
                for n in range(j, m + 1):
                    new[n] -= series[n - j]
                series = new
            j += d
    out = [0] * (prec + 1)
    for n in range(m + 1):
        if n + shift <= prec:
            out[n + shift] = series[n]
    return out  # index = exponent of q, entry 0 unused except q^0


def check(name, cond):
    status = "ok" if cond else "FAIL"
    print(f"  {name}: {status}")
    if not cond:
        sys.exit(f"calibration failure: {name}")


def lattice_coeff(lat, row, n):
    return lat[row][n - 1]


def main():
    print("cusp counts vs divisor-phi formula")
    for N in list(range(1, 60)) + [110, 168, 198]:
        classes = CuspClasses(N)
        p1 = P1(N)
        seen = set()
        for c, d in p1.reps:
            a, b, cc, dd = lift_to_sl2(c, d, N) if N > 1 else (1, 0, 0, 1)
            seen.add(classes.classify(a, cc))
            seen.add(classes.classify(b, dd))
        check(f"N={N} cusp count", len(classes.reps) == nu_inf(N))

    print("level 1 weight 12 (discriminant form)")
    ms = ModularSymbols(1, 12)
    lat = ms.qexpansion_lattice(12)
    delta = eta_product([(1, 24)], 12)
    check("dim", len(lat) == 1)
    check("tau prefix", [lattice_coeff(lat, 0, n) for n in range(1, 13)]
          == delta[1:13])

    print("N=11 weight 2 vs eta(z)^2 eta(11z)^2")
    ms = ModularSymbols(11, 2)
    lat = ms.qexpansion_lattice(40)
    f = eta_product([(1, 2), (11, 2)], 40)
    check("dim", len(lat) == 1)
    check("prefix", [lattice_coeff(lat, 0, n) for n in range(1, 41)] == f[1:41])

    print("N=5 weight 4 vs eta(z)^4 eta(5z)^4")
    ms = ModularSymbols(5, 4)
    lat = ms.qexpansion_lattice(30)
    f = eta_product([(1, 4), (5, 4)], 30)
    check("dim", len(lat) == 1)
    check("prefix", [lattice_coeff(lat, 0, n) for n in range(1, 31)] == f[1:31])

    print("Heilbronn sets: Cremona vs Merel on N=11 weight 2")
    ms = ModularSymbols(11, 2)
    for p in (2, 3, 5, 7):
        a = ms.hecke_matrix(p)
        ms._hecke_cache.clear()
        b = ms.hecke_matrix(p, matrices=heilbronn_merel(p))
        ms._hecke_cache.clear()
        check(f"T_{p} agree", a == b)

    print("Hecke commutativity on N=14 weight 4")
    ms = ModularSymbols(14, 4)
    a2 = ms.hecke_matrix(2)
    a3 = ms.hecke_matrix(3)
    ab = [[sum(a2[i][t] * a3[t][j] for t in range(len(a3)))
           for j in range(len(a3))] for i in range(len(a2))]
    ba = [[sum(a3[i][t] * a2[t][j] for t in range(len(a2)))
           for j in range(len(a2))] for i in range(len(a3))]
    check("A2*A3 == A3*A2", ab == ba)

    print("N=14 weight 4 basis vs published prefixes")
    lat = ms.qexpansion_lattice(40)
    check("dim", len(lat) == dim_cusp_forms(14, 4))
    pref = ref.QEXP_PREFIXES[(14, 4)]
    ok = True
    for row, entries in pref.items():
        for n, c in entries.items():
            if lattice_coeff(lat, row, n) != c:
                print(f"  mismatch row {row} n={n}: got "
                      f"{lattice_coeff(lat, row, n)}, want {c}")
                ok = False
    check("prefixes", ok)

    print("N=48 weight 2 basis vs published prefixes")
    ms = ModularSymbols(48, 2)
    lat = ms.qexpansion_lattice(50)
    check("dim", len(lat) == 3)
    pref = ref.QEXP_PREFIXES[(48, 2)]
    ok = True
    for row, entries in pref.items():
        for n, c in entries.items():
            if n <= 50 and lattice_coeff(lat, row, n) != c:
                print(f"  mismatch row {row} n={n}: got "
                      f"{lattice_coeff(lat, row, n)}, want {c}")
                ok = False
    check("prefixes", ok)

    print("all calibrations passed")


if __name__ == "__main__":
    main()
