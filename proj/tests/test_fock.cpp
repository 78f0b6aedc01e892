#include "nlcs/fock.hpp"

#include <cmath>

#include "doctest.h"

using namespace nlcs::fock;

namespace {

// Reference action on the basis spinor Psi_n: coefficient of Psi_{n-1} is
// f(n) e^{i delta} sqrt(n) / sqrt(2^{delta_1n}).
Eigen::VectorXcd basis_spinor(int n, int dim) {
    std::vector<std::complex<double>> c(n + 1, {0.0, 0.0});
    c[n] = 1.0;
    return embed_state(c, dim);
}

std::vector<DeformationFamily> families() {
    return {DeformationFamily::identity(), DeformationFamily::shifted_one(),
            DeformationFamily::shifted_two(),
            DeformationFamily::custom({0.7, 1.1, 0.4, 0.9, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0,
                                       1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0})};
}

}  // namespace

TEST_CASE("ladder matrices and their algebra") {
    const auto tm = ladder(3, Ladder::Minus);
    CHECK(tm.mat(0, 1) == std::complex<double>(1.0, 0.0));
    CHECK(tm.mat(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(tm.mat(0, 0) == std::complex<double>(0.0, 0.0));
    const auto tp = ladder(3, Ladder::Plus);
    CHECK((tp.mat - tm.mat.adjoint()).norm() == 0.0);

    const auto comm = commutator(tm, tp);
    CHECK(comm.mat(0, 0).real() == doctest::Approx(1.0));
    CHECK(comm.mat(1, 1).real() == doctest::Approx(1.0));
    CHECK(comm.mat(2, 2).real() == doctest::Approx(-2.0));  // truncation artifact

    const Eigen::MatrixXcd num = (tp.mat * tm.mat).eval();
    for (int n = 0; n < 3; ++n) CHECK(num(n, n).real() == doctest::Approx(double(n)));
    CHECK((num - number_operator(3).mat).norm() == 0.0);

    CHECK_THROWS_AS(ladder(1, Ladder::Minus), std::invalid_argument);
}

TEST_CASE("scalar commutators on a large space") {
    const auto tm = ladder(50, Ladder::Minus);
    const auto tp = ladder(50, Ladder::Plus);
    const auto c = commutator(tm, tp);
    for (int n = 0; n < 49; ++n)
        CHECK(std::abs(c.mat(n, n) - 1.0) < 1e-15);

    const auto nc = commutator(number_operator(50), tm);
    CHECK((nc.mat + tm.mat).norm() < 1e-14);  // [N, theta-] = -theta-
}

TEST_CASE("commutator rejects shape mismatches") {
    CHECK_THROWS_AS(commutator(ladder(4, Ladder::Minus), ladder(5, Ladder::Plus)),
                    std::invalid_argument);
    const auto fam = DeformationFamily::identity();
    CHECK_THROWS_AS(commutator(ladder(6, Ladder::Minus), deformed_annihilator(fam, 0.0, 6)),
                    std::invalid_argument);
}

TEST_CASE("deformation families: values, zeros, omega") {
    const auto id = DeformationFamily::identity();
    const auto s1 = DeformationFamily::shifted_one();
    const auto s2 = DeformationFamily::shifted_two();
    CHECK(id.f(1) == 1.0);
    CHECK(id.lowest_level() == 0);
    CHECK(s1.f(1) == 0.0);
    CHECK(s1.f(4) == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(s1.lowest_level() == 1);
    CHECK(s2.f(1) == 0.0);
    CHECK(s2.f(2) == 0.0);
    CHECK(s2.f(5) == doctest::Approx(std::sqrt(12.0 / 5.0)));
    CHECK(s2.lowest_level() == 2);

    // Omega(n) = (n+1)f(n+1)^2 - n f(n)^2
    for (int n = 0; n < 30; ++n) CHECK(id.omega(n) == doctest::Approx(1.0));
    CHECK(s1.omega(0) == 0.0);
    for (int n = 1; n < 30; ++n) CHECK(s1.omega(n) == doctest::Approx(1.0));
    CHECK(s2.omega(0) == 0.0);
    for (int n = 1; n < 30; ++n) CHECK(s2.omega(n) == doctest::Approx(2.0 * (n - 1)));

    CHECK_THROWS_AS(DeformationFamily::custom({0.5, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(id.f(0), std::invalid_argument);
}

TEST_CASE("deformed annihilator reproduces the shift action on every interior spinor") {
    const int dim = 14;
    for (const auto& fam : families()) {
        for (double delta : {0.0, M_PI / 4.0, 1.3}) {
            const auto theta = deformed_annihilator(fam, delta, dim);
            for (int n = 0; n <= dim - 2; ++n) {
                const Eigen::VectorXcd in = basis_spinor(n, dim);
                Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(2 * dim);
                if (n >= 1) {
                    const double norm2 = (n == 1) ? 1.0 / std::sqrt(2.0) : 1.0;
                    const std::complex<double> coeff =
                        fam.f(n) * norm2 * std::sqrt(double(n)) *
                        std::exp(std::complex<double>(0.0, delta));
                    expect = coeff * basis_spinor(n - 1, dim);
                }
                CHECK((theta.mat * in - expect).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("deformed annihilator: named special actions") {
    const int dim = 8;
    const auto id = deformed_annihilator(DeformationFamily::identity(), 0.0, dim);
    const Eigen::VectorXcd out1 = id.mat * basis_spinor(1, dim);
    CHECK((out1 - basis_spinor(0, dim) / std::sqrt(2.0)).norm() < 1e-15);

    const auto s2 = deformed_annihilator(DeformationFamily::shifted_two(), 0.4, dim);
    CHECK((s2.mat * basis_spinor(2, dim)).norm() == 0.0);  // f(2) = 0 kills n = 2
}

TEST_CASE("adjoint involution is exact") {
    for (const auto& fam : families()) {
        const auto theta = deformed_annihilator(fam, 0.9, 10);
        CHECK((adjoint(adjoint(theta)).mat - theta.mat).norm() == 0.0);
    }
}

TEST_CASE("nonlinear algebra: commutator blocks match Omega in the bulk") {
    // [Theta-, Theta+] = diag(Omega(N+1), Omega(N)) holds on the bulk of the
    // space. The top two levels are corrupted by truncation; the bottom two
    // carry genuine edge terms whenever f(1) != 0 (for the identity family the
    // level-0 upper entry is Omega(1) + cos^2(delta) f(1)^2, and delta mixes a
    // cs*f(1)^2-sized off-diagonal into the lowest levels), so the block
    // identity is checked for levels 2..dim-3.
    const int dim = 16;
    for (const auto& fam : families()) {
        for (double delta : {0.0, 0.9}) {
            const auto theta = deformed_annihilator(fam, delta, dim);
            const auto comm = commutator(theta, adjoint(theta));
            for (int n = 2; n <= dim - 3; ++n) {
                CHECK(std::abs(comm.mat(n, n) - fam.omega(n + 1)) < 1e-12);
                CHECK(std::abs(comm.mat(dim + n, dim + n) - fam.omega(n)) < 1e-12);
            }
            // off-diagonal entries vanish in the bulk
            for (int r = 2; r <= dim - 3; ++r)
                for (int c = 2; c <= dim - 3; ++c) {
                    if (r != c) {
                        CHECK(std::abs(comm.mat(r, c)) < 1e-12);
                        CHECK(std::abs(comm.mat(dim + r, dim + c)) < 1e-12);
                    }
                    CHECK(std::abs(comm.mat(r, dim + c)) < 1e-12);
                    CHECK(std::abs(comm.mat(dim + r, c)) < 1e-12);
                }
        }
    }
}

TEST_CASE("identity family at delta = 0 recovers the HW algebra down to level 1") {
    const int dim = 12;
    const auto theta = deformed_annihilator(DeformationFamily::identity(), 0.0, dim);
    const auto comm = commutator(theta, adjoint(theta));
    for (int n = 1; n <= dim - 3; ++n) {
        CHECK(std::abs(comm.mat(n, n) - 1.0) < 1e-13);
        CHECK(std::abs(comm.mat(dim + n, dim + n) - 1.0) < 1e-13);
    }
    // documented edge: the level-0 upper entry sees Omega(1) + f(1)^2 = 2
    CHECK(comm.mat(0, 0).real() == doctest::Approx(2.0));
    CHECK_THROWS_AS(deformed_annihilator(DeformationFamily::identity(), 0.0, 2),
                    std::invalid_argument);
}

TEST_CASE("omega computed two ways: symbolic table vs commutator diagonal") {
    const int dim = 14;
    for (const auto& fam : families()) {
        const auto theta = deformed_annihilator(fam, 0.35, dim);
        const auto comm = commutator(theta, adjoint(theta));
        for (int n = 2; n <= dim - 3; ++n) {
            const double direct = (n + 1.0) * fam.f(n + 1) * fam.f(n + 1) -
                                  n * fam.f(n) * fam.f(n);
            CHECK(comm.mat(dim + n, dim + n).real() == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}
