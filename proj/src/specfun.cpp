#include "nlcs/specfun.hpp"

#include <cmath>
#include <limits>

namespace nlcs::specfun {

namespace {

constexpr double kRescaleLimit = 1e250;
const double kLogRescale = std::log(kRescaleLimit);
const double kQuarterLogPi = 0.25 * std::log(M_PI);

void check_hermite_args(int n, double xi) {
    if (n < 0) throw std::invalid_argument("hermite_function: n must be >= 0");
    if (!std::isfinite(xi)) throw std::invalid_argument("hermite_function: xi must be finite");
}

}  // namespace

double hermite_function(int n, double xi) {
    check_hermite_args(n, xi);
    // h_n = H_n(xi)/sqrt(2^n n!), rescaled whenever it grows past kRescaleLimit;
    // phi_n = h_n * exp(scale_log - xi^2/2 - ln(pi)/4).
    double h_prev = 1.0;
    double scale_log = 0.0;
    if (n == 0) {
        return std::exp(-0.5 * xi * xi - kQuarterLogPi);
    }
    double h = std::sqrt(2.0) * xi;
    for (int m = 1; m < n; ++m) {
        double next = xi * std::sqrt(2.0 / (m + 1)) * h - std::sqrt(m / (m + 1.0)) * h_prev;
        h_prev = h;
        h = next;
        if (std::fabs(h) > kRescaleLimit) {
            h_prev /= kRescaleLimit;
            h /= kRescaleLimit;
            scale_log += kLogRescale;
        }
    }
    if (h == 0.0) return 0.0;
    const double log_env = scale_log - 0.5 * xi * xi - kQuarterLogPi;
    // Fast path while the plain product cannot under/overflow.
    if (scale_log == 0.0 && xi * xi < 1400.0) {
        return h * std::exp(-0.5 * xi * xi - kQuarterLogPi);
    }
    const double mag = std::log(std::fabs(h)) + log_env;
    const double value = std::exp(mag);
    return h < 0.0 ? -value : value;
}

void hermite_stack(int nmax, double xi, double* out) {
    check_hermite_args(nmax, xi);
    double gauss = std::exp(-0.5 * xi * xi - kQuarterLogPi);  // may underflow for |xi| > ~37
    double h_prev = 1.0;
    out[0] = gauss;
    if (nmax == 0) return;
    double h = std::sqrt(2.0) * xi;
    out[1] = h * gauss;
    double scale_log = 0.0;
    for (int m = 1; m < nmax; ++m) {
        double next = xi * std::sqrt(2.0 / (m + 1)) * h - std::sqrt(m / (m + 1.0)) * h_prev;
        h_prev = h;
        h = next;
        if (std::fabs(h) > kRescaleLimit) {
            h_prev /= kRescaleLimit;
            h /= kRescaleLimit;
            scale_log += kLogRescale;
            gauss = std::exp(scale_log - 0.5 * xi * xi - kQuarterLogPi);
        }
        out[m + 1] = h * gauss;
    }
}

double bessel_i(int nu, double x) {
    if (nu != 1 && nu != 2) throw std::invalid_argument("bessel_i: nu must be 1 or 2");
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_i: x must be >= 0");
    if (x == 0.0) return 0.0;

    if (x < 15.0) {
        // I_nu(x) = sum_m (x/2)^(2m+nu) / (m! (m+nu)!); all terms positive.
        const double q = 0.25 * x * x;
        double term = std::pow(0.5 * x, nu);
        for (int j = 2; j <= nu; ++j) term /= j;
        double sum = term;
        for (int m = 1; m < 200; ++m) {
            term *= q / (static_cast<double>(m) * (m + nu));
            sum += term;
            if (term < sum * std::numeric_limits<double>::epsilon()) break;
        }
        return sum;
    }

    // Asymptotic expansion, truncated at the smallest term:
    //   I_nu(x) ~ e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(nu)/x^k,
    //   a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 40; ++k) {
        term *= -(mu - (2.0 * k + 1.0) * (2.0 * k + 1.0)) / (8.0 * x * (k + 1.0));
        const double mag = std::fabs(term);
        if (mag >= prev_mag) break;  // past the optimal truncation point
        sum += term;
        prev_mag = mag;
        if (mag < std::fabs(sum) * std::numeric_limits<double>::epsilon()) break;
    }
    return std::exp(x) / std::sqrt(2.0 * M_PI * x) * sum;
}

QuadratureRule QuadratureRule::gauss_legendre(int order, double a, double b) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.resize(order);
    rule.weights.resize(order);

    // Roots of P_order on [-1,1] by Newton iteration on the recurrence.
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double dz = -p1 / pp;
            z += dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        const double mid = 0.5 * (a + b);
        const double hw = 0.5 * (b - a);
        rule.nodes[i] = mid - hw * z;
        rule.nodes[order - 1 - i] = mid + hw * z;
        rule.weights[i] = w * hw;
        rule.weights[order - 1 - i] = w * hw;
    }
    return rule;
}

IntegrationError::IntegrationError(double prev, double last)
    : std::runtime_error("integrate: panel doubling did not converge (last estimates " +
                         std::to_string(prev) + ", " + std::to_string(last) + ")"),
      previous_estimate(prev),
      last_estimate(last) {}

double integrate(const std::function<double(double)>& f, const QuadratureRule& base,
                 double abs_tol, int max_doublings) {
    const double a = base.a, b = base.b;
    const double span = b - a;
    const int order = base.order();
    // Reference nodes/weights on [0,1].
    std::vector<double> rx(order), rw(order);
    for (int i = 0; i < order; ++i) {
        rx[i] = (base.nodes[i] - a) / span;
        rw[i] = base.weights[i] / span;
    }

    double prev = std::numeric_limits<double>::quiet_NaN();
    double prev2 = std::numeric_limits<double>::quiet_NaN();
    for (int level = 0; level <= max_doublings; ++level) {
        const int panels = 1 << level;
        const double h = span / panels;
        double est = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double lo = a + p * h;
            double acc = 0.0;
            for (int i = 0; i < order; ++i) {
                const double x = lo + rx[i] * h;
                const double fx = f(x);
                if (!std::isfinite(fx))
                    throw std::invalid_argument("integrate: integrand not finite at node");
                acc += rw[i] * fx;
            }
            est += acc * h;
        }
        if (level > 0 && std::fabs(est - prev) < abs_tol) return est;
        prev2 = prev;
        prev = est;
    }
    throw IntegrationError(prev2, prev);
}

}  // namespace nlcs::specfun
