#ifndef NLCS_OBSERVABLES_HPP
#define NLCS_OBSERVABLES_HPP

#include <optional>
#include <utility>

#include "nlcs/coherent.hpp"
#include "nlcs/landau.hpp"

namespace nlcs::obs {

enum class Method { Series, Matrix };

struct SMoments {
    double mean = 0.0;    // <S_q>
    double second = 0.0;  // <S_q^2>
    Method method = Method::Series;
};

/** Position/momentum statistics of a coherent state in dimensionless
 * oscillator units, plus the mean energy when parameters are supplied.
 * hur = sigma_xi * sigma_p >= 1/2.
 */
struct ObservableReport {
    double mean_xi = 0.0;
    double mean_p = 0.0;
    double var_xi = 0.0;
    double var_p = 0.0;
    double hur = 0.0;
    std::optional<double> mean_energy_pristine;
    std::optional<double> mean_energy_aniso;
    std::optional<double> var_x_physical;  // var_xi * (2/omega_zeta)
    Method method = Method::Series;
};

/** Moments of S_q = s_q (x) I, q = 0 (position xi) or 1 (momentum p).
 * The three analytic families are summed in closed form; custom families
 * fall back to the matrix route and are tagged so.
 */
SMoments s_moments(const coherent::CoherentState& state, int q);

/// Matrix-oracle route: v^dag (s_q (x) I) v on the embedded state.
/// dim <= 0 selects truncation + 8.
SMoments s_moments_matrix(const coherent::CoherentState& state, int q, int dim = 0);

/// Variances and the uncertainty product; energy fields left empty.
ObservableReport uncertainty(const coherent::CoherentState& state);

/** Mean energy (pristine, anisotropic). The anisotropic value is the
 * pristine one scaled by sqrt(v_xx v_yy) in a single multiplication.
 * Cross-checked internally against sum_n P(n) E_n to 1e-9 relative.
 */
std::pair<double, double> mean_energy(const coherent::CoherentState& state,
                                      const landau::AnisotropyParams& params);

/// Full report: uncertainty block plus energies and the physical x-variance.
ObservableReport observable_report(const coherent::CoherentState& state,
                                   const landau::AnisotropyParams& params);

/// Coherent-state density profile on a grid. OpenMP-parallel over points.
landau::SpinorProfile density(const coherent::CoherentState& state,
                              const landau::AnisotropyParams& params,
                              const std::vector<double>& grid);
/// Serial reference implementation, kept for testing the parallel kernel.
landau::SpinorProfile density_serial(const coherent::CoherentState& state,
                                     const landau::AnisotropyParams& params,
                                     const std::vector<double>& grid);

}  // namespace nlcs::obs

#endif
