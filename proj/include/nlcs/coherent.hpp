#ifndef NLCS_COHERENT_HPP
#define NLCS_COHERENT_HPP

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nlcs/fock.hpp"

namespace nlcs::coherent {

/** Eigenstate of the deformed annihilation operator, expanded over the
 * pseudo-spinor basis: coeffs holds a_0..a_{D-1}, tail_bound is a certified
 * upper bound on the mass left above the truncation, and
 * sum |a_n|^2 + tail_bound = 1. Immutable after build.
 */
struct CoherentState {
    std::complex<double> alpha;
    std::complex<double> alpha_tilde;  // alpha * exp(-i delta)
    double delta = 0.0;
    double tol = 1e-12;
    fock::DeformationFamily family;
    std::vector<std::complex<double>> coeffs;
    double tail_bound = 0.0;

    int truncation() const { return static_cast<int>(coeffs.size()); }
};

struct NonConvergenceError : std::runtime_error {
    double partial_mass;
    NonConvergenceError(const std::string& what, double mass)
        : std::runtime_error(what), partial_mass(mass) {}
};

/** Builds the coherent state by the coefficient recursion
 *   a_1 f(1) = sqrt(2) at a_0,   a_{n+1} f(n+1) sqrt(n+1) = at a_n,
 * with the lowest populated level forced by the zeros of f, the lowest
 * coefficient taken real positive, and the result normalized.
 *
 * Truncation keeps levels until (a) the certified tail mass drops below tol
 * and (b) the last amplitude satisfies |a_{D-1}| (1 + |at|) < 1e-10, so the
 * defining-property residual of the truncated vector stays below 1e-9.
 * tol must lie in (0, 1e-4]. Custom families that are not square-summable
 * before D = 20000 (or whose table runs out) raise NonConvergenceError.
 */
CoherentState build_state(const fock::DeformationFamily& family, std::complex<double> alpha,
                          double delta, double tol = 1e-12);

/** || Theta_f^- v - alpha v ||_2 with v the state embedded into the spinor
 * sector of the given dimension (dim >= truncation + 2).
 */
double eigen_residual(const CoherentState& state, int dim);

/// Occupation distribution P(n) = |a_n|^2; sums to 1 - tail_bound.
std::vector<std::pair<int, double>> occupation_distribution(const CoherentState& state);

/// Poisson reference pmf with mean lambda, evaluated stably through lgamma.
double poisson_pmf(double lambda, int n);

}  // namespace nlcs::coherent

#endif
