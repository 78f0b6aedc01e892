#ifndef NLCS_SPECFUN_HPP
#define NLCS_SPECFUN_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace nlcs::specfun {

/** Normalized harmonic-oscillator eigenfunction
 *      phi_n(xi) = (2^n n! sqrt(pi))^(-1/2) e^(-xi^2/2) H_n(xi),
 * evaluated by the stable three-term recurrence on the normalized
 * functions. Raw Hermite polynomials overflow near n ~ 150; the
 * normalized recurrence carries an exponent offset instead, so the
 * evaluation stays finite for n <= 5000, |xi| <= 100.
 */
double hermite_function(int n, double xi);

/** Fills out[0..nmax] with phi_0(xi)..phi_nmax(xi) in one recurrence pass.
 * Values whose magnitude falls below ~1e-290 may flush to zero; callers
 * use this for density sums where such contributions are negligible.
 */
void hermite_stack(int nmax, double xi, double* out);

/// Modified Bessel function of the first kind, nu in {1, 2}, x >= 0.
/// Power series below x = 15, asymptotic expansion beyond.
double bessel_i(int nu, double x);

/** A quadrature rule on [a, b]: nodes, positive weights, sum(weights) = b - a. */
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0.0;
    double b = 1.0;

    int order() const { return static_cast<int>(nodes.size()); }

    /// Gauss-Legendre rule of the given order mapped onto [a, b].
    static QuadratureRule gauss_legendre(int order, double a, double b);
};

/// Thrown when panel doubling fails to converge; carries the last two estimates.
struct IntegrationError : std::runtime_error {
    double previous_estimate;
    double last_estimate;
    IntegrationError(double prev, double last);
};

/** Composite integration of f over the rule's domain. The base rule is
 * applied on 1, 2, 4, ... uniform panels until two successive estimates
 * differ by less than abs_tol. Throws IntegrationError if max_doublings
 * refinements are exhausted.
 */
double integrate(const std::function<double(double)>& f, const QuadratureRule& base,
                 double abs_tol = 1e-10, int max_doublings = 14);

}  // namespace nlcs::specfun

#endif
