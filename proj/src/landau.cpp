#include "nlcs/landau.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlcs/specfun.hpp"

namespace nlcs::landau {

namespace {

void finish(AnisotropyParams& p) {
    if (!(p.v_xx > 0.0) || !(p.v_yy > 0.0))
        throw std::invalid_argument("AnisotropyParams: velocities must be positive");
    if (!(p.B0 > 0.0)) throw std::invalid_argument("AnisotropyParams: B0 must be positive");
    p.omega_B = 2.0 * p.B0;
    p.omega_zeta = p.omega_B / p.zeta;
    p.x0 = -2.0 * p.k / p.omega_B;
    const double ratio = p.v_xx / p.v_yy;
    if (std::fabs(ratio - p.zeta) > 4e-15 * p.zeta)
        throw std::logic_error("AnisotropyParams: zeta inconsistent with velocity ratio");
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("grid must be non-empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("grid must be strictly increasing");
}

// Evaluates the spinor components at one grid point into the profile arrays.
// stack must have room for n+1 values.
void spinor_point(const AnisotropyParams& p, int n, double x, double* stack,
                  SpinorProfile& out, std::size_t i) {
    const double xi = std::sqrt(0.5 * p.omega_zeta) * (x - p.x0);
    specfun::hermite_stack(n, xi, stack);
    const double pref = std::pow(0.5 * p.omega_zeta, 0.25);
    const double norm = (n == 0) ? 1.0 : 1.0 / std::sqrt(2.0);
    const double up = (n == 0) ? 0.0 : pref * stack[n - 1] * norm;
    const double lo = pref * stack[n] * norm;
    out.upper[i] = up;
    out.lower[i] = std::complex<double>(0.0, lo);
    out.density[i] = up * up + lo * lo;
}

SpinorProfile make_profile(const AnisotropyParams& p, int n, const std::vector<double>& grid) {
    if (n < 0) throw std::invalid_argument("spinor_state: n must be >= 0");
    check_grid(grid);
    SpinorProfile out;
    out.x = grid;
    out.upper.resize(grid.size());
    out.lower.resize(grid.size());
    out.density.resize(grid.size());
    out.params = p;
    return out;
}

}  // namespace

AnisotropyParams AnisotropyParams::from_velocities(double v_xx, double v_yy, double B0, double k,
                                                   double delta) {
    AnisotropyParams p;
    p.v_xx = v_xx;
    p.v_yy = v_yy;
    p.zeta = v_xx / v_yy;
    p.B0 = B0;
    p.k = k;
    p.delta = delta;
    finish(p);
    return p;
}

AnisotropyParams AnisotropyParams::from_zeta(double zeta, double B0, double k, double delta) {
    if (!(zeta > 0.0)) throw std::invalid_argument("AnisotropyParams: zeta must be positive");
    AnisotropyParams p;
    p.zeta = zeta;
    p.v_xx = std::sqrt(zeta);
    p.v_yy = p.v_xx / zeta;
    p.B0 = B0;
    p.k = k;
    p.delta = delta;
    finish(p);
    return p;
}

LandauLevel level(const AnisotropyParams& p, int n) {
    if (n < 0) throw std::invalid_argument("level: n must be >= 0");
    return {n, eps_minus(p, n), std::sqrt(p.v_xx * p.v_yy * p.omega_B * n)};
}

double eps_minus(const AnisotropyParams& p, int n) { return p.omega_zeta * n; }

double eps_plus(const AnisotropyParams& p, int n) { return eps_minus(p, n + 1); }

double eigenfunction(const AnisotropyParams& p, int n, double x) {
    if (n < 0) throw std::invalid_argument("eigenfunction: n must be >= 0");
    const double xi = std::sqrt(0.5 * p.omega_zeta) * (x - p.x0);
    return std::pow(0.5 * p.omega_zeta, 0.25) * specfun::hermite_function(n, xi);
}

double effective_potential(const AnisotropyParams& p, double x, int sign) {
    // (omega_zeta^2/4)(x + 2k/omega_B)^2 +/- omega_zeta/2. omega_zeta carries
    // dimension 1/length^2, so the harmonic prefactor is its square; this is
    // the form under which [-d^2/dx^2 + V]psi_n = omega_zeta n psi_n holds.
    const double u = x - p.x0;
    return 0.25 * p.omega_zeta * p.omega_zeta * u * u + 0.5 * sign * p.omega_zeta;
}

SpinorProfile spinor_state(const AnisotropyParams& p, int n, const std::vector<double>& grid) {
    SpinorProfile out = make_profile(p, n, grid);
    const auto m = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel
    {
        std::vector<double> stack(n + 1);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < m; ++i)
            spinor_point(p, n, grid[i], stack.data(), out, i);
    }
    return out;
}

SpinorProfile spinor_state_serial(const AnisotropyParams& p, int n,
                                  const std::vector<double>& grid) {
    SpinorProfile out = make_profile(p, n, grid);
    std::vector<double> stack(n + 1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        spinor_point(p, n, grid[i], stack.data(), out, i);
    return out;
}

namespace {

// Scaled level density phi_n^2 + phi_{n-1}^2 at eta (overall factors dropped).
double level_density(int n, double eta) {
    std::vector<double> st(n + 1);
    specfun::hermite_stack(n, eta, st.data());
    const double a = st[n];
    const double b = (n >= 1) ? st[n - 1] : 0.0;
    return a * a + b * b;
}

// Bracket sign changes of rel on (0, hi] and bisect each to 1e-12.
std::vector<double> positive_roots(const std::function<double(double)>& rel, int n) {
    const double hi = std::sqrt(2.0 * n + 3.0);
    const int samples = std::max(256, 64 * (n + 2));
    std::vector<double> roots;
    double prev_eta = hi * 1e-9;
    double prev_val = rel(prev_eta);
    for (int i = 1; i <= samples; ++i) {
        const double eta = hi * i / samples;
        const double val = rel(eta);
        if (val == 0.0) {
            roots.push_back(eta);
        } else if (prev_val != 0.0 && (val < 0.0) != (prev_val < 0.0)) {
            double lo = prev_eta, up = eta;
            double flo = prev_val;
            while (up - lo > 1e-12) {
                const double mid = 0.5 * (lo + up);
                const double fm = rel(mid);
                if (fm == 0.0) {
                    lo = up = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    up = mid;
                }
            }
            roots.push_back(0.5 * (lo + up));
        }
        prev_eta = eta;
        prev_val = val;
    }
    return roots;
}

}  // namespace

std::vector<double> stationary_etas(int n) {
    if (n < 1) throw std::invalid_argument("stationary_etas: n must be >= 1");
    auto rel = [n](double eta) {
        std::vector<double> st(n + 2);
        specfun::hermite_stack(n + 1, eta, st.data());
        const double dn = eta * st[n] - std::sqrt(2.0 * (n + 1)) * st[n + 1];
        const double dm = eta * st[n - 1] - std::sqrt(2.0 * n) * st[n];
        return st[n] * dn + st[n - 1] * dm;
    };
    return positive_roots(rel, n);
}

std::vector<double> g_relation_etas(int n) {
    if (n < 1) throw std::invalid_argument("g_relation_etas: n must be >= 1");
    // g_n + n g_{n-1} = 0 divided by the positive envelope 2^{n-1}(n-1)! sqrt(pi) e^{eta^2}:
    // 2 phi_n (eta phi_n - sqrt(2(n+1)) phi_{n+1}) + phi_{n-1} (eta phi_{n-1} - sqrt(2n) phi_n).
    auto rel = [n](double eta) {
        std::vector<double> st(n + 2);
        specfun::hermite_stack(n + 1, eta, st.data());
        const double dn = eta * st[n] - std::sqrt(2.0 * (n + 1)) * st[n + 1];
        const double dm = eta * st[n - 1] - std::sqrt(2.0 * n) * st[n];
        return 2.0 * st[n] * dn + st[n - 1] * dm;
    };
    return positive_roots(rel, n);
}

DensityMaxima density_maxima(const AnisotropyParams& p, int n) {
    if (n < 0) throw std::invalid_argument("density_maxima: n must be >= 0");
    if (n == 0) return {p.x0, p.x0, 0.0};
    const std::vector<double> roots = stationary_etas(n);
    if (roots.empty()) throw std::logic_error("density_maxima: no stationary point bracketed");
    double best_eta = 0.0;
    double best_rho = level_density(n, 0.0);
    for (double eta : roots) {
        const double rho = level_density(n, eta);
        if (rho > best_rho) {
            best_rho = rho;
            best_eta = eta;
        }
    }
    const double off = std::sqrt(2.0 / p.omega_zeta) * best_eta;
    return {p.x0 - off, p.x0 + off, best_eta};
}

AnisotropyParams strain_to_params(StrainAxis axis, double epsilon, double nu, double beta,
                                  double B0, double k, double delta) {
    if (!(beta > 0.0)) throw std::invalid_argument("strain_to_params: beta must be positive");
    if (!(epsilon >= 0.0) || !(epsilon < 1.0 / beta))
        throw std::invalid_argument(
            "strain_to_params: need 0 <= epsilon < 1/beta to keep both velocities positive");
    if (!(nu >= 0.0) || !(nu <= 0.5))
        throw std::invalid_argument("strain_to_params: Poisson ratio must lie in [0, 0.5]");
    const double shrunk = 1.0 - beta * epsilon;
    const double grown = 1.0 + beta * nu * epsilon;
    const double v_xx = (axis == StrainAxis::X) ? shrunk : grown;
    const double v_yy = (axis == StrainAxis::X) ? grown : shrunk;
    return AnisotropyParams::from_velocities(v_xx, v_yy, B0, k, delta);
}

namespace {

std::vector<double> window_grid(const AnisotropyParams& p, double xi_max, int points) {
    if (points < 2) throw std::invalid_argument("default_grid: need at least 2 points");
    const double w = std::sqrt(2.0 / p.omega_zeta) * xi_max;
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
        g[i] = p.x0 - w + 2.0 * w * i / (points - 1);
    return g;
}

}  // namespace

std::vector<double> default_grid(const AnisotropyParams& p, int n, int points) {
    if (n < 0) throw std::invalid_argument("default_grid: n must be >= 0");
    return window_grid(p, std::sqrt(2.0 * n + 1.0) + 6.0, points);
}

std::vector<double> default_grid_alpha(const AnisotropyParams& p, double alpha_abs, int points) {
    if (!(alpha_abs >= 0.0)) throw std::invalid_argument("default_grid_alpha: |alpha| >= 0");
    return window_grid(p, std::sqrt(2.0) * alpha_abs + 8.0, points);
}

}  // namespace nlcs::landau
