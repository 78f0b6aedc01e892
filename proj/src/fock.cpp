#include "nlcs/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace nlcs::fock {

FockOperator ladder(int dim, Ladder which) {
    if (dim < 2) throw std::invalid_argument("ladder: dim must be >= 2");
    FockOperator op{dim, Sector::Scalar, Eigen::MatrixXcd::Zero(dim, dim)};
    for (int n = 1; n < dim; ++n) op.mat(n - 1, n) = std::sqrt(static_cast<double>(n));
    if (which == Ladder::Plus) op.mat = op.mat.adjoint().eval();
    return op;
}

FockOperator number_operator(int dim) {
    if (dim < 2) throw std::invalid_argument("number_operator: dim must be >= 2");
    FockOperator op{dim, Sector::Scalar, Eigen::MatrixXcd::Zero(dim, dim)};
    for (int n = 0; n < dim; ++n) op.mat(n, n) = n;
    return op;
}

DeformationFamily DeformationFamily::identity() { return {Kind::Identity, {}}; }
DeformationFamily DeformationFamily::shifted_one() { return {Kind::ShiftedOne, {}}; }
DeformationFamily DeformationFamily::shifted_two() { return {Kind::ShiftedTwo, {}}; }

DeformationFamily DeformationFamily::custom(std::vector<double> values) {
    for (double v : values)
        if (!(v >= 0.0)) throw std::invalid_argument("DeformationFamily: f values must be >= 0");
    return {Kind::Custom, std::move(values)};
}

double DeformationFamily::f(int n) const {
    if (n < 1) throw std::invalid_argument("DeformationFamily::f: n must be >= 1");
    switch (kind) {
        case Kind::Identity:
            return 1.0;
        case Kind::ShiftedOne:
            return std::sqrt(n - 1.0) / std::sqrt(static_cast<double>(n));
        case Kind::ShiftedTwo:
            return (n < 3) ? 0.0 : std::sqrt((n - 2.0) * (n - 1.0)) / std::sqrt(static_cast<double>(n));
        case Kind::Custom:
            return table.at(static_cast<std::size_t>(n - 1));
    }
    return 0.0;
}

int DeformationFamily::lowest_level() const {
    switch (kind) {
        case Kind::Identity:
            return 0;
        case Kind::ShiftedOne:
            return 1;
        case Kind::ShiftedTwo:
            return 2;
        case Kind::Custom: {
            int lowest = 0;
            for (std::size_t i = 0; i < table.size(); ++i)
                if (table[i] == 0.0) lowest = static_cast<int>(i) + 1;
            return lowest;
        }
    }
    return 0;
}

double DeformationFamily::omega(int n) const {
    if (n < 0) throw std::invalid_argument("omega: n must be >= 0");
    const double fn = (n >= 1) ? f(n) : 0.0;
    const double fn1 = f(n + 1);
    return (n + 1.0) * fn1 * fn1 - n * fn * fn;
}

const char* DeformationFamily::name() const {
    switch (kind) {
        case Kind::Identity:
            return "identity";
        case Kind::ShiftedOne:
            return "shifted1";
        case Kind::ShiftedTwo:
            return "shifted2";
        case Kind::Custom:
            return "custom";
    }
    return "?";
}

FockOperator deformed_annihilator(const DeformationFamily& family, double delta, int dim) {
    if (dim < 3) throw std::invalid_argument("deformed_annihilator: dim must be >= 3");
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    const Eigen::MatrixXcd tm = ladder(dim, Ladder::Minus).mat;
    const Eigen::MatrixXcd tm2 = tm * tm;

    Eigen::VectorXd d_tl(dim), d_tr(dim), d_bl(dim), d_br(dim);
    for (int n = 0; n < dim; ++n) {
        const double f1 = family.f(n + 1);
        const double f2 = family.f(n + 2);
        d_tl(n) = std::sqrt(n + 2.0) / std::sqrt(n + 1.0) * f2;
        d_tr(n) = f2 / std::sqrt(n + 1.0);
        d_bl(n) = f1 * std::sqrt(n + 1.0);
        d_br(n) = f1;
    }

    FockOperator op{dim, Sector::Spinor, Eigen::MatrixXcd::Zero(2 * dim, 2 * dim)};
    op.mat.topLeftCorner(dim, dim) = c * d_tl.asDiagonal() * tm;
    op.mat.topRightCorner(dim, dim) = s * d_tr.asDiagonal() * tm2;
    op.mat.bottomLeftCorner(dim, dim) = (-s * d_bl).asDiagonal();
    op.mat.bottomRightCorner(dim, dim) = c * d_br.asDiagonal() * tm;
    return op;
}

FockOperator adjoint(const FockOperator& a) {
    return {a.dim, a.sector, a.mat.adjoint()};
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
    if (a.sector != b.sector || a.dim != b.dim)
        throw std::invalid_argument("commutator: operators must share sector and dim");
    return {a.dim, a.sector, a.mat * b.mat - b.mat * a.mat};
}

Eigen::VectorXcd embed_state(const std::vector<std::complex<double>>& coeffs, int dim) {
    if (static_cast<int>(coeffs.size()) > dim)
        throw std::invalid_argument("embed_state: dim too small for coefficient vector");
    const std::complex<double> iu(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * dim);
    if (!coeffs.empty()) v(dim) += iu * coeffs[0];
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        v(n - 1) += coeffs[n] * inv_sqrt2;
        v(dim + n) += iu * coeffs[n] * inv_sqrt2;
    }
    return v;
}

}  // namespace nlcs::fock
