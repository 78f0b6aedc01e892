#include "nlcs/observables.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "nlcs/specfun.hpp"

namespace nlcs::obs {

namespace {

using fock::DeformationFamily;
using Kind = DeformationFamily::Kind;

constexpr int kSeriesCap = 100000;

// Sums t_0 + t_1 + ... with t_{m+1} = t_m * ratio(m), stopping once terms
// contribute below machine epsilon relative to the accumulator.
double sum_series(double t0, const std::function<double(int)>& ratio) {
    if (t0 == 0.0) return 0.0;
    double term = t0;
    double acc = t0;
    for (int m = 0; m < kSeriesCap; ++m) {
        term *= ratio(m);
        acc += term;
        if (std::fabs(term) < std::fabs(acc) * 1e-18) return acc;
    }
    throw std::runtime_error("sum_series: term cap exhausted");
}

// q-dependent real prefactors: (at + (-1)^q at*) / i^q = 2 Re(at) or 2 Im(at),
// and at^2 + at*^2 = 2 Re(at^2).
double phase_linear(std::complex<double> at, int q) {
    return q == 0 ? 2.0 * at.real() : 2.0 * at.imag();
}

double phase_quadratic(std::complex<double> at) { return 2.0 * (at * at).real(); }

SMoments moments_identity(std::complex<double> at, int q) {
    const double lam = std::norm(at);
    const double elam = std::exp(lam);
    const double denom = 2.0 * elam - 1.0;
    // K1 = e^lam + sum_{n>=1} lam^n / sqrt((n-1)!(n+1)!)
    const double k1 =
        elam + sum_series(lam / std::sqrt(2.0),
                          [lam](int m) { return lam / std::sqrt((m + 1.0) * (m + 3.0)); });
    // K2 = e^lam + sum_{n>=1} sqrt(n+1) lam^n / sqrt((n-1)!(n+2)!)
    const double k2 =
        elam + sum_series(std::sqrt(2.0) * lam / std::sqrt(6.0), [lam](int m) {
            const int n = m + 1;
            return lam * std::sqrt((n + 2.0) / ((n + 1.0) * n * (n + 3.0)));
        });
    SMoments out;
    out.mean = phase_linear(at, q) / std::sqrt(2.0) * k1 / denom;
    out.second = (1.0 + 4.0 * lam * elam +
                  ((q == 0) ? 1.0 : -1.0) * phase_quadratic(at) * k2) /
                 (2.0 * denom);
    return out;
}

SMoments moments_shifted_one(std::complex<double> at, int q) {
    const double lam = std::norm(at);
    const double emlam = std::exp(-lam);
    // S1 = sum sqrt(m+2) lam^m / sqrt(m!(m+1)!), S2 the same with sqrt(m+3).
    const double s1 = sum_series(std::sqrt(2.0), [lam](int m) {
        return lam * std::sqrt((m + 3.0) / ((m + 2.0) * (m + 1.0) * (m + 2.0)));
    });
    const double s2 = sum_series(std::sqrt(3.0), [lam](int m) {
        return lam * std::sqrt((m + 4.0) / ((m + 3.0) * (m + 1.0) * (m + 2.0)));
    });
    SMoments out;
    out.mean = phase_linear(at, q) / (2.0 * std::sqrt(2.0)) * (1.0 + emlam * s1);
    out.second = 1.0 + lam +
                 ((q == 0) ? 1.0 : -1.0) * phase_quadratic(at) / 4.0 * (1.0 + emlam * s2);
    return out;
}

SMoments moments_shifted_two(std::complex<double> at, int q) {
    const double lam = std::norm(at);
    const double aa = std::abs(at);
    if (aa == 0.0) return {0.0, 2.0, Method::Series};  // pure Psi_2
    const double i1 = specfun::bessel_i(1, 2.0 * aa);
    const double i2 = specfun::bessel_i(2, 2.0 * aa);
    // B1a = sum lam^m / sqrt(m! ((m+1)!)^3)
    const double b1a = sum_series(1.0, [lam](int m) {
        return lam / (std::sqrt(m + 1.0) * (m + 2.0) * std::sqrt(m + 2.0));
    });
    // B1b = sum sqrt(m+3) lam^m / (sqrt(m!(m+2)!) (m+1)!)
    const double b1b = sum_series(std::sqrt(3.0) / std::sqrt(2.0), [lam](int m) {
        return lam * std::sqrt((m + 4.0) / ((m + 3.0) * (m + 1.0) * (m + 3.0))) / (m + 2.0);
    });
    // B2a = sum lam^m / (sqrt(m!(m+2)!) (m+1)!)
    const double b2a = sum_series(1.0 / std::sqrt(2.0), [lam](int m) {
        return lam / (std::sqrt((m + 1.0) * (m + 3.0)) * (m + 2.0));
    });
    // B2b = sum sqrt(m+4) lam^m / (sqrt(m!(m+1)!) (m+2)!)
    const double b2b = sum_series(1.0, [lam](int m) {
        return lam * std::sqrt((m + 5.0) / ((m + 4.0) * (m + 1.0) * (m + 2.0))) / (m + 3.0);
    });
    SMoments out;
    out.mean = phase_linear(at, q) / (2.0 * std::sqrt(2.0)) * (aa / i1) * (b1a + b1b);
    out.second = 2.0 + aa * i2 / i1 +
                 ((q == 0) ? 1.0 : -1.0) * phase_quadratic(at) / 4.0 * (aa / i1) * (b2a + b2b);
    return out;
}

double mean_energy_pristine(const coherent::CoherentState& state, double omega_B) {
    const std::complex<double> at = state.alpha_tilde;
    const double lam = std::norm(at);
    const double sw = std::sqrt(omega_B);
    switch (state.family.kind) {
        case Kind::Identity: {
            if (lam == 0.0) return 0.0;
            // 2 sqrt(wB)/(2 e^lam - 1) * sum_{n>=1} lam^n sqrt(n)/n!
            const double s = sum_series(lam, [lam](int m) {
                const int n = m + 1;
                return lam * std::sqrt((n + 1.0) / n) / (n + 1.0);
            });
            return 2.0 * sw * s / (2.0 * std::exp(lam) - 1.0);
        }
        case Kind::ShiftedOne: {
            // sqrt(wB) e^{-lam} sum lam^n sqrt(n+1)/n!
            const double s = sum_series(1.0, [lam](int m) {
                return lam * std::sqrt((m + 2.0) / (m + 1.0)) / (m + 1.0);
            });
            return sw * std::exp(-lam) * s;
        }
        case Kind::ShiftedTwo: {
            if (lam == 0.0) return sw * std::sqrt(2.0);
            // sqrt(wB) |at|/I1(2|at|) * sum lam^n sqrt(n+2)/(n!(n+1)!)
            const double aa = std::abs(at);
            const double s = sum_series(std::sqrt(2.0), [lam](int m) {
                return lam * std::sqrt((m + 3.0) / (m + 2.0)) / ((m + 1.0) * (m + 2.0));
            });
            return sw * aa / specfun::bessel_i(1, 2.0 * aa) * s;
        }
        case Kind::Custom: {
            // Coefficient-sum route: sum_n P(n) sqrt(wB n).
            double acc = 0.0;
            for (std::size_t n = 1; n < state.coeffs.size(); ++n)
                acc += std::norm(state.coeffs[n]) * std::sqrt(omega_B * n);
            return acc;
        }
    }
    return 0.0;
}

}  // namespace

SMoments s_moments(const coherent::CoherentState& state, int q) {
    if (q != 0 && q != 1) throw std::invalid_argument("s_moments: q must be 0 or 1");
    switch (state.family.kind) {
        case Kind::Identity:
            return moments_identity(state.alpha_tilde, q);
        case Kind::ShiftedOne:
            return moments_shifted_one(state.alpha_tilde, q);
        case Kind::ShiftedTwo:
            return moments_shifted_two(state.alpha_tilde, q);
        case Kind::Custom:
            return s_moments_matrix(state, q);
    }
    throw std::logic_error("s_moments: unknown family");
}

SMoments s_moments_matrix(const coherent::CoherentState& state, int q, int dim) {
    if (q != 0 && q != 1) throw std::invalid_argument("s_moments_matrix: q must be 0 or 1");
    if (dim <= 0) dim = state.truncation() + 8;
    if (dim < state.truncation() + 2)
        throw std::invalid_argument("s_moments_matrix: dim too small");

    const Eigen::MatrixXcd tm = fock::ladder(dim, fock::Ladder::Minus).mat;
    const Eigen::MatrixXcd tp = tm.adjoint();
    const std::complex<double> iq_inv =
        (q == 0) ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, -1.0);
    const Eigen::MatrixXcd s = iq_inv / std::sqrt(2.0) * (tm + ((q == 0) ? 1.0 : -1.0) * tp);
    Eigen::MatrixXcd s2 = tp * tm;
    s2 = s2 + 0.5 * Eigen::MatrixXcd::Identity(dim, dim) +
         0.5 * ((q == 0) ? 1.0 : -1.0) * (tm * tm + tp * tp);

    const Eigen::VectorXcd v = fock::embed_state(state.coeffs, dim);
    auto expect = [&](const Eigen::MatrixXcd& m) {
        const Eigen::VectorXcd u = v.head(dim), l = v.tail(dim);
        const std::complex<double> val = u.dot(m * u) + l.dot(m * l);
        if (std::fabs(val.imag()) > 1e-12 * std::max(1.0, std::fabs(val.real())))
            throw std::logic_error("s_moments_matrix: imaginary residue too large");
        return val.real();
    };
    return {expect(s), expect(s2), Method::Matrix};
}

ObservableReport uncertainty(const coherent::CoherentState& state) {
    const SMoments m0 = s_moments(state, 0);
    const SMoments m1 = s_moments(state, 1);
    ObservableReport rep;
    rep.method = m0.method;
    rep.mean_xi = m0.mean;
    rep.mean_p = m1.mean;
    rep.var_xi = m0.second - m0.mean * m0.mean;
    rep.var_p = m1.second - m1.mean * m1.mean;
    if (rep.var_xi < -1e-12 || rep.var_p < -1e-12)
        throw std::logic_error("uncertainty: negative variance");
    rep.var_xi = std::max(rep.var_xi, 0.0);
    rep.var_p = std::max(rep.var_p, 0.0);
    rep.hur = std::sqrt(rep.var_xi * rep.var_p);
    return rep;
}

std::pair<double, double> mean_energy(const coherent::CoherentState& state,
                                      const landau::AnisotropyParams& params) {
    const double pristine = mean_energy_pristine(state, params.omega_B);
    const double aniso = std::sqrt(params.v_xx * params.v_yy) * pristine;

    // Occupation-sum cross-check against the series value.
    double check = 0.0;
    for (std::size_t n = 1; n < state.coeffs.size(); ++n)
        check += std::norm(state.coeffs[n]) *
                 std::sqrt(params.v_xx * params.v_yy * params.omega_B * n);
    if (std::fabs(check - aniso) > 1e-9 * std::max(1.0, std::fabs(aniso)))
        throw std::logic_error("mean_energy: series and occupation sum disagree");
    return {pristine, aniso};
}

ObservableReport observable_report(const coherent::CoherentState& state,
                                   const landau::AnisotropyParams& params) {
    ObservableReport rep = uncertainty(state);
    const auto [pristine, aniso] = mean_energy(state, params);
    rep.mean_energy_pristine = pristine;
    rep.mean_energy_aniso = aniso;
    rep.var_x_physical = rep.var_xi * 2.0 / params.omega_zeta;
    return rep;
}

namespace {

// One grid point of the coherent-state density; stack has room for D values.
void density_point(const coherent::CoherentState& state,
                   const landau::AnisotropyParams& params, double x, double* stack,
                   landau::SpinorProfile& out, std::size_t i) {
    const int d = state.truncation();
    const double xi = std::sqrt(0.5 * params.omega_zeta) * (x - params.x0);
    specfun::hermite_stack(d - 1, xi, stack);
    const double pref = std::pow(0.5 * params.omega_zeta, 0.25);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::complex<double> up(0.0, 0.0);
    std::complex<double> lo = state.coeffs[0] * stack[0];
    for (int n = 1; n < d; ++n) {
        up += state.coeffs[n] * stack[n - 1];
        lo += state.coeffs[n] * stack[n] * inv_sqrt2;
    }
    up *= pref * inv_sqrt2;
    lo *= pref;
    out.upper[i] = up;
    out.lower[i] = std::complex<double>(0.0, 1.0) * lo;
    out.density[i] = std::norm(up) + std::norm(lo);
}

landau::SpinorProfile density_shell(const landau::AnisotropyParams& params,
                                    const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("density: grid must be non-empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("density: grid must be strictly increasing");
    landau::SpinorProfile out;
    out.x = grid;
    out.upper.resize(grid.size());
    out.lower.resize(grid.size());
    out.density.resize(grid.size());
    out.params = params;
    return out;
}

}  // namespace

landau::SpinorProfile density(const coherent::CoherentState& state,
                              const landau::AnisotropyParams& params,
                              const std::vector<double>& grid) {
    landau::SpinorProfile out = density_shell(params, grid);
    const auto m = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel
    {
        std::vector<double> stack(state.truncation());
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < m; ++i)
            density_point(state, params, grid[i], stack.data(), out, i);
    }
    return out;
}

landau::SpinorProfile density_serial(const coherent::CoherentState& state,
                                     const landau::AnisotropyParams& params,
                                     const std::vector<double>& grid) {
    landau::SpinorProfile out = density_shell(params, grid);
    std::vector<double> stack(state.truncation());
    for (std::size_t i = 0; i < grid.size(); ++i)
        density_point(state, params, grid[i], stack.data(), out, i);
    return out;
}

}  // namespace nlcs::obs
