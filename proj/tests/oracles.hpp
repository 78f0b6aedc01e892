// Test-side reference implementations, independent of the library paths they
// check: the Hermite oracle runs the raw-polynomial recurrence in extended
// precision with explicit normalization, and the Bessel oracle sums the
// defining power series for any argument.
#ifndef NLCS_TESTS_ORACLES_HPP
#define NLCS_TESTS_ORACLES_HPP

#include <cmath>

namespace oracles {

// phi_n(xi) through h_n = H_n/sqrt(2^n n!) in long double (the envelope
// e^{xi^2/2} stays below the extended-precision range for |xi| <= 100).
inline long double hermite_phi(int n, long double xi) {
    long double h_prev = 1.0L;
    long double h = std::sqrt(2.0L) * xi;
    if (n == 0) h = h_prev;
    for (int m = 1; m < n; ++m) {
        const long double next =
            xi * std::sqrt(2.0L / (m + 1)) * h - std::sqrt(static_cast<long double>(m) / (m + 1)) * h_prev;
        h_prev = h;
        h = next;
    }
    const long double quarter_pi = std::pow(static_cast<long double>(M_PIl), 0.25L);
    return h * std::exp(-0.5L * xi * xi) / quarter_pi;
}

// I_nu(x) by direct series summation (all terms positive).
inline long double bessel_i_series(int nu, long double x) {
    const long double q = 0.25L * x * x;
    long double term = std::pow(0.5L * x, static_cast<long double>(nu));
    for (int j = 2; j <= nu; ++j) term /= j;
    long double sum = term;
    for (int m = 1; m < 400; ++m) {
        term *= q / (static_cast<long double>(m) * (m + nu));
        sum += term;
        if (term < sum * 1e-22L) break;
    }
    return sum;
}

// Frozen high-precision values (40-digit arithmetic, raw recurrence / series).
constexpr double kPhi25At3p7 = 0.019162904373834813198;
constexpr double kPhi0At0 = 0.75112554446494248286;      // pi^(-1/4)
constexpr double kTwoPiQuarterInv = 0.63161877774606470;  // (2 pi)^(-1/4)
constexpr double kI1At2 = 1.5906368546373290634;
constexpr double kI2At2 = 0.68894844769873820405;

// Frozen coefficient-sum anchors (independent 40+ digit runs):
// identity family, alpha = 1, delta = 0.
constexpr double kIdMeanXiAlpha1 = 1.2828141169025278;
constexpr double kIdSecXiAlpha1 = 2.1992956118177363;
constexpr double kIdSecPAlpha1 = 0.47690340886395721;
constexpr double kIdHurAlpha1 = 0.51386143462756062;
// identity family mean energy at alpha = 2, omega_B = 1.
constexpr double kIdEnergyAlpha2 = 1.939840435085614;

}  // namespace oracles

#endif
