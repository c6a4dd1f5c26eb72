"""Writes tests/reference/values.hpp: reference sums from mpmath at 30 digits.

The weighted sums sum n|b_n| are expressed through hypergeometric values at
z = 1 (hyp2f1, hyp3f2) rather than Gamma quotients, so they share no code
path with the library's closed forms.
"""
import mpmath as mp

mp.mp.dps = 30

PARAMS = [
    # mode, a, b, c   (b ignored for conjugate: b = conj(a); a = b = -m for negint)
    ("real", 1, 1, 4),
    ("real", 0.5, 1.5, 5),
    ("real", 2, 0.5, 6),
    ("real", -0.5, -0.3, 2.5),
    ("real", 1.5, 2, 7.5),
    ("conj", mp.mpc(1, 1), None, 5),
    ("conj", mp.mpc(0.5, 2), None, 4.5),
    ("conj", mp.mpc(-0.5, 0.5), None, 2),
    ("negint", 2, None, 3),
    ("negint", 3, None, 2.5),
    ("negint", 4, None, 5),
]

ALPHA = {
    "T41a": mp.mpc(0.3, 0) * mp.expj(0.7),
    "T41b": mp.mpc(0.1, 0) * mp.expj(-1.1),
    "T41c": mp.mpc(0.6, 0) * mp.expj(2.0),
    "T44a": mp.mpc(0.6, 0) * mp.expj(0.3),
    "T44b": mp.mpc(0.3, 0) * mp.expj(-0.4),
    "C46a": mp.mpc(0.6, 0) * mp.expj(1.3),
    "C46b": mp.mpc(0.3, 0) * mp.expj(3.0),
}


def unpack(mode, a, b, c):
    if mode == "conj":
        return a, mp.conj(a), mp.mpf(c)
    if mode == "negint":
        return mp.mpf(-a), mp.mpf(-a), mp.mpf(c)
    return mp.mpf(a), mp.mpf(b), mp.mpf(c)


def k_value(family, a, b, c, x):
    f0 = mp.re(mp.hyp2f1(a, b, c, 1))
    f1 = mp.re(a * b / c * mp.hyp2f1(a + 1, b + 1, c + 1, 1))  # sum n A_n
    ab = mp.re(a * b)
    if family == "T41a":
        return x * (f1 + 2 * f0)
    if family == "T41b":
        return x * (f1 + f0 - 1)
    if family == "T41c":
        return x * (f1 + f0)
    if family == "T44a":
        return x * f0
    if family == "T44b":
        return x * (f0 + mp.re(mp.hyp3f2(a, b, 1, c, 2, 1)))  # sum A_k (k+2)/(k+1)
    if family == "C46a":
        return x * c / ab * f1
    if family == "C46b":
        return x * c / ab * (f1 + f0 - 1)
    raise ValueError(family)


def cpp(v):
    return mp.nstr(v, 20, min_fixed=-30, max_fixed=30)


rows = []
for family, alpha in ALPHA.items():
    for mode, a0, b0, c0 in PARAMS:
        a, b, c = unpack(mode, a0, b0, c0)
        k = k_value(family, a, b, c, abs(alpha))
        are = cpp(mp.re(a)) if mode != "negint" else cpp(a0)
        aim = cpp(mp.im(a)) if mode == "conj" else "0.0"
        bre = cpp(b0) if mode == "real" else "0.0"
        rows.append(
            f'    {{"{family}", Mode::k{mode.capitalize()}, {are}, {aim}, {bre}, {cpp(c)}, '
            f"{{{cpp(mp.re(alpha))}, {cpp(mp.im(alpha))}}}, {cpp(k)}}},"
        )

gamma_rows = []
for z in [mp.mpc(5), mp.mpc(0.5), mp.mpc(1.7), mp.mpc(7.7), mp.mpc(-2.5), mp.mpc(0.3, 1.2), mp.mpc(-1.4, 0.8),
          mp.mpc(3, -4), mp.mpc(12.5, 3.5), mp.mpc(40.25)]:
    g = mp.gamma(z)
    gamma_rows.append(f"    {{{{{cpp(z.real)}, {cpp(z.imag)}}}, {{{cpp(g.real)}, {cpp(g.imag)}}}}},")

conj_sum = mp.re(mp.hyp2f1(mp.mpc(1, 1), mp.mpc(1, -1), 4, 1))
f_vals = []
for (a, b, c, z) in [(2, 0.5, 4, mp.mpf(0.5)), (1, 1, 3, mp.mpc(0.3, -0.6)), (-0.5, -0.3, 2.5, mp.mpc(-0.7, 0.2))]:
    v = mp.hyp2f1(a, b, c, z)
    f_vals.append(f"    {{{cpp(a)}, {cpp(b)}, {cpp(c)}, {{{cpp(mp.re(z))}, {cpp(mp.im(z))}}}, "
                  f"{{{cpp(v.real)}, {cpp(v.imag)}}}}},")

with open(__file__.replace("generate.py", "values.hpp"), "w") as out:
    out.write("#pragma once\n\n")
    out.write("// Generated by generate.py (mpmath, 30 digits). Do not edit by hand.\n\n")
    out.write("#include <complex>\n\nnamespace reference {\n\n")
    out.write("enum class Mode { kReal, kConj, kNegint };\n\n")
    out.write("struct KCase {\n  const char* family;\n  Mode mode;\n  double a_re;\n  double a_im;\n"
              "  double b;\n  double c;\n  std::complex<double> alpha;\n  double k;\n};\n\n")
    out.write("// Weighted sums sum n|b_n| for each family; for negint, a_re holds m.\n")
    out.write("inline const KCase kWeightedSums[] = {\n" + "\n".join(rows) + "\n};\n\n")
    out.write("struct GammaCase {\n  std::complex<double> z;\n  std::complex<double> value;\n};\n\n")
    out.write("inline const GammaCase kGamma[] = {\n" + "\n".join(gamma_rows) + "\n};\n\n")
    out.write(f"// F(1+i, 1-i; 4; 1)\ninline constexpr double kConjugateGaussSum = {cpp(conj_sum)};\n\n")
    out.write("struct HypCase {\n  double a;\n  double b;\n  double c;\n  std::complex<double> z;\n"
              "  std::complex<double> value;\n};\n\n")
    out.write("inline const HypCase kHypergeometric[] = {\n" + "\n".join(f_vals) + "\n};\n\n")
    out.write("}  // namespace reference\n")
