#ifndef NLCS_LANDAU_HPP
#define NLCS_LANDAU_HPP

#include <complex>
#include <vector>

namespace nlcs::landau {

/** Physical configuration of the anisotropic Dirac electron in a uniform
 * perpendicular field, in natural units hbar = c = e = 1, v_F = 1.
 *
 * zeta = v_xx/v_yy, omega_B = 2*B0, omega_zeta = omega_B/zeta and
 * x0 = -2k/omega_B (the center of the Gaussian envelope). Immutable after
 * construction; every operation here is a pure function of its arguments.
 */
struct AnisotropyParams {
    double v_xx = 1.0;
    double v_yy = 1.0;
    double zeta = 1.0;
    double B0 = 0.5;
    double k = 1.0;
    double omega_B = 1.0;
    double omega_zeta = 1.0;
    double delta = 0.0;
    double x0 = -2.0;

    static AnisotropyParams from_velocities(double v_xx, double v_yy, double B0, double k,
                                            double delta = 0.0);

    /// Velocity split v_xx = sqrt(zeta), v_yy = 1/sqrt(zeta), which keeps the
    /// energy scale sqrt(v_xx v_yy) = 1 and puts all anisotropy into zeta.
    static AnisotropyParams from_zeta(double zeta, double B0, double k, double delta = 0.0);
};

struct LandauLevel {
    int n;
    double eps;     // omega_zeta * n
    double energy;  // sqrt(v_xx v_yy omega_B n)
};

LandauLevel level(const AnisotropyParams& p, int n);
double eps_minus(const AnisotropyParams& p, int n);
double eps_plus(const AnisotropyParams& p, int n);  // = eps_minus(n+1)

/// L2(dx)-normalized scalar eigenfunction psi_n(x).
double eigenfunction(const AnisotropyParams& p, int n, double x);

/// Effective 1D Schroedinger potential for the +/- component.
double effective_potential(const AnisotropyParams& p, double x, int sign);

/** Two-component pseudo-spinor sampled on an x-grid.
 * density = |upper|^2 + |lower|^2 pointwise, integrating to 1.
 */
struct SpinorProfile {
    std::vector<double> x;
    std::vector<std::complex<double>> upper;
    std::vector<std::complex<double>> lower;
    std::vector<double> density;
    AnisotropyParams params;
};

/// Pseudo-spinor level state on a grid. OpenMP-parallel over grid points.
SpinorProfile spinor_state(const AnisotropyParams& p, int n, const std::vector<double>& grid);
/// Serial reference implementation, kept for testing the parallel kernel.
SpinorProfile spinor_state_serial(const AnisotropyParams& p, int n,
                                  const std::vector<double>& grid);

struct DensityMaxima {
    double x_minus;
    double x_plus;
    double eta;  // positive root in the dimensionless variable; 0 for n = 0
};

/** Positions of the global maximum pair of the level density rho_n.
 * Found by bracketing the stationary points of rho_n in the dimensionless
 * variable eta on (0, sqrt(2n+3)], bisecting each to 1e-12, and selecting
 * the root with the largest density.
 */
DensityMaxima density_maxima(const AnisotropyParams& p, int n);

/// Positive stationary points of rho_n: roots of
///   phi_n (eta phi_n - sqrt(2(n+1)) phi_{n+1}) + phi_{n-1} (eta phi_{n-1} - sqrt(2n) phi_n) = 0.
std::vector<double> stationary_etas(int n);

/// Positive roots of the Hermite-product relation
///   g_n(eta) + n g_{n-1}(eta) = 0,  g_n = H_n (eta H_n - H_{n+1}),
/// evaluated in normalized form. Kept alongside stationary_etas for
/// comparison: the two relations differ by the relative weight of the
/// g_{n-1} term (n versus 2n) and do not locate the same points.
std::vector<double> g_relation_etas(int n);

enum class StrainAxis { X, Y };

/** Uniaxial-strain velocity renormalization for graphene:
 * stress along x gives v_xx = 1 - beta*eps, v_yy = 1 + beta*nu*eps;
 * stress along y swaps the pair. zeta is the exact ratio v_xx/v_yy.
 */
AnisotropyParams strain_to_params(StrainAxis axis, double epsilon, double nu, double beta,
                                  double B0, double k, double delta = 0.0);

/// Default sampling window: classical turning point plus Gaussian tail margin,
/// xi_max = sqrt(2n+1) + 6 mapped back to x around x0.
std::vector<double> default_grid(const AnisotropyParams& p, int n, int points = 2001);
/// Same window rule for a coherent state of modulus |alpha|: xi_max = sqrt(2)|alpha| + 8.
std::vector<double> default_grid_alpha(const AnisotropyParams& p, double alpha_abs,
                                       int points = 2001);

}  // namespace nlcs::landau

#endif
