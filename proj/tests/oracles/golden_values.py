"""High-precision scalar goldens for the C++ unit tests.

    python3 tests/oracles/golden_values.py > tests/support/golden_values.hpp
"""

import mpmath as mp

mp.mp.dps = 50


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 17, strip_zeros=False)};")


def main():
    print("#pragma once")
    print()
    print("// Generated by tests/oracles/golden_values.py; do not edit by hand.")
    print()
    print("namespace vfc_test {")
    print()

    emit("kPathloss400m", mp.mpf("128.1") + mp.mpf("37.6") * mp.log10(mp.mpf("0.4")))

    p = mp.power(10, (mp.mpf(24) - 30) / 10)
    n0 = mp.power(10, (mp.mpf(-174) - 30) / 10)
    bw = mp.mpf(10) ** 6
    emit("kRate1MHz", bw * mp.log(1 + p * mp.mpf("1e-11") / (n0 * bw), 2))

    scores = [mp.mpf("0.5"), mp.mpf(1), mp.mpf(2)]
    z = mp.mpf("1.67")
    e = [mp.exp(-z * s) for s in scores]
    tot = sum(e)
    for i, x in enumerate(e):
        emit(f"kSoftmin{i}", x / tot)

    emit("kEtaK2", mp.sqrt(mp.log(2) / 2))
    emit("kRateBoundExample", 1 - mp.exp(mp.mpf("-1.5")))
    emit("kXiK10", mp.log(10))

    # Partial sums of kappa eta and its square at T = 1e6 for a = 1, K = 2.
    t_max = 10**6
    c = mp.sqrt(mp.log(2) / 2)
    emit("kSumEta1e6", c * (mp.zeta(mp.mpf("0.5")) - mp.zeta(mp.mpf("0.5"), t_max + 1)))
    emit("kSumEtaSq1e6", (mp.log(2) / 2) * mp.harmonic(t_max))

    print()
    print("}  // namespace vfc_test")


if __name__ == "__main__":
    main()
