#!/usr/bin/env python3
# Generates the frozen 50-digit reference constants in constants_oracle.hpp.
# Run from the repo root:  python3 tests/fixtures/gen_constants.py > tests/fixtures/constants_oracle.hpp
import mpmath as mp

mp.mp.dps = 60


def conj(p):
    return p / (p - 1)


def bb(p):
    # p^(1/2p) / p'^(1/2p'), valid for p in (1,2]; limit 1 at p=1
    if p == 1:
        return mp.mpf(1)
    pp = conj(mp.mpf(p))
    return mp.power(p, 1 / (2 * mp.mpf(p))) / mp.power(pp, 1 / (2 * pp))


def emit(name, value, comment=""):
    s = mp.nstr(value, 50, strip_zeros=False)
    if comment:
        print(f"// {comment}")
    print(f"inline constexpr double {name} = {mp.nstr(value, 17)};")
    print(f"// 50 digits: {s}")
    print()


print("#pragma once")
print("// Frozen high-precision reference values.  Regenerate with gen_constants.py;")
print("// all values were computed with 60-digit working precision (mpmath).")
print()
print("namespace oracle {")
print()
emit("kB_4_3", bb(mp.mpf(4) / 3), "B_{4/3}")
emit("kB_3_2", bb(mp.mpf(3) / 2), "B_{3/2}")
emit("kB_1_9", bb(mp.mpf(19) / 10), "B_{1.9}")
emit("kB_6_5", bb(mp.mpf(6) / 5), "B_{6/5}")
emit("kB_4_3_sq", bb(mp.mpf(4) / 3) ** 2, "B_{4/3}^2 (Young [4/3,4/3], n=1; Weyl limit constant)")
emit("kB_4_3_cubed", bb(mp.mpf(4) / 3) ** 3, "B_{4/3}^3 (Heisenberg / SU(2) limit constant)")
emit("kB_4_3_4th", bb(mp.mpf(4) / 3) ** 4, "B_{4/3}^4 (Young [4/3,4/3], n=2)")
emit("kB_3_2_sq", bb(mp.mpf(3) / 2) ** 2, "B_{3/2}^2")
emit("kB_3_2_cubed", bb(mp.mpf(3) / 2) ** 3, "B_{3/2}^3")
emit("kB_1_9_sq", bb(mp.mpf(19) / 10) ** 2, "B_{1.9}^2")
emit("kHermite0At0", mp.power(2, mp.mpf(1) / 4), "2^{1/4}; value of the ground Hermite function at 0")
emit("kGaussL2Dim1", mp.power(2, -mp.mpf(1) / 4), "(int exp(-2 pi x^2) dx)^{1/2} = 2^{-1/4}")
emit("kJ0FirstZero", mp.besseljzero(0, 1), "first positive zero of J_0")
emit("kJ1At2Pi", mp.besselj(1, 2 * mp.pi), "J_1(2 pi); Hankel transform of the unit-disc indicator at zeta=1")
emit("kLaguerre2At1", mp.laguerre(2, 0, 1), "L_2(1) = -1/2")
emit("kInvSqrt2", 1 / mp.sqrt(2), "1/sqrt(2); twisted/plain convolution ratio of chi_0")
emit("kGeom2Pow4", mp.power(mp.mpf(1) / 15, mp.mpf(1) / 4),
     "(sum_k (2^-(k+1))^4)^{1/4} = (1/15)^{1/4}")
print("}  // namespace oracle")
