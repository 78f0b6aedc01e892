#ifndef NLCS_FOCK_HPP
#define NLCS_FOCK_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace nlcs::fock {

enum class Sector { Scalar, Spinor };
enum class Ladder { Minus, Plus };

/** Dense operator on the truncated Fock space: dim x dim in the scalar
 * sector, 2dim x 2dim in the spinor sector (upper block first). Operators
 * are immutable after construction; products and commutators are pure.
 */
struct FockOperator {
    int dim = 0;
    Sector sector = Sector::Scalar;
    Eigen::MatrixXcd mat;
};

/// theta^- (lower shift with entries sqrt(n)) or its exact adjoint theta^+.
FockOperator ladder(int dim, Ladder which);

/// N = theta^+ theta^-, diagonal 0..dim-1 (exact under truncation).
FockOperator number_operator(int dim);

/** The deformation function f(N): the identity family keeps the oscillator
 * algebra; the shifted families vanish at the first one or two arguments,
 * removing the corresponding low levels from every coherent superposition.
 * Custom families are tabulated as f(1), f(2), ... >= 0.
 */
struct DeformationFamily {
    enum class Kind { Identity, ShiftedOne, ShiftedTwo, Custom };
    Kind kind = Kind::Identity;
    std::vector<double> table;  // Custom only

    static DeformationFamily identity();
    static DeformationFamily shifted_one();  // f(n) = sqrt(n-1)/sqrt(n)
    static DeformationFamily shifted_two();  // f(n) = sqrt((n-2)(n-1))/sqrt(n)
    static DeformationFamily custom(std::vector<double> values);

    /// f(n) for n >= 1. Custom tables throw std::out_of_range past their end.
    double f(int n) const;

    /// Largest m with f(m) = 0 (0 when none): the lowest Fock level that a
    /// coherent eigenstate of this family can populate.
    int lowest_level() const;

    /// Omega(n) = (n+1) f(n+1)^2 - n f(n)^2, the deformed commutator symbol.
    double omega(int n) const;

    const char* name() const;
};

/** Deformed spinor-sector annihilation operator with mixing phase delta.
 * Blocks, with D[g] = diag(g(0), ..., g(dim-1)) acting after the shift:
 *   [ cos(d) D[sqrt(n+2)/sqrt(n+1) f(n+2)] T-     sin(d) D[f(n+2)/sqrt(n+1)] T-^2 ]
 *   [ -sin(d) D[f(n+1) sqrt(n+1)]                 cos(d) D[f(n+1)] T-             ]
 * Its action on the basis spinors is f(n) e^{i delta} sqrt(n) / sqrt(2^{d_1n}).
 */
FockOperator deformed_annihilator(const DeformationFamily& family, double delta, int dim);

FockOperator adjoint(const FockOperator& a);
FockOperator commutator(const FockOperator& a, const FockOperator& b);

/** Embeds coefficients over the pseudo-spinor basis {Psi_n} into the spinor
 * sector of dimension dim: Psi_0 = (0, i e_0), Psi_n = (e_{n-1}, i e_n)/sqrt(2).
 */
Eigen::VectorXcd embed_state(const std::vector<std::complex<double>>& coeffs, int dim);

}  // namespace nlcs::fock

#endif
