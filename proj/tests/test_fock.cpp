#include "doctest.h"

#include <cmath>
#include <numbers>

#include "cvneg/fock.hpp"
#include "test_util.hpp"

using namespace cvneg;
using namespace cvneg::fock;
using testutil::corner;
using testutil::corner2;
using testutil::max_abs_diff;

namespace {

Vector basis_vec(int dim, int i) {
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    return v;
}

// i = n1*(N+1) + n2
int idx2(int cutoff, int n1, int n2) { return n1 * (cutoff + 1) + n2; }

} // namespace

TEST_CASE("annihilator and friends") {
    auto a = annihilator(5);
    CHECK(a.modes == 1);
    CHECK(a.dim() == 6);

    SUBCASE("vacuum is annihilated") {
        Vector out = a.mat * basis_vec(6, 0);
        CHECK(out.norm() == doctest::Approx(0.0));
    }
    SUBCASE("matrix elements follow sqrt(n)") {
        CHECK(a.mat(0, 1).real() == doctest::Approx(1.0));
        CHECK(a.mat(2, 3).real() == doctest::Approx(1.7320508075688772));
        CHECK(testutil::max_abs(a.mat.imag()) == 0.0);
    }
    SUBCASE("creation is the transpose of annihilation") {
        CHECK(max_abs_diff(creation(5).mat, a.mat.transpose()) == 0.0);
    }
    SUBCASE("number operator is diagonal 0..N") {
        auto n = number_op(5);
        for (int k = 0; k <= 5; ++k) CHECK(n.mat(k, k).real() == doctest::Approx(k));
    }
    SUBCASE("cutoff below 1 is rejected") {
        CHECK_THROWS_AS(annihilator(0), std::invalid_argument);
    }
}

TEST_CASE("tensor product") {
    SUBCASE("identity times identity") {
        auto id = tensor(identity_op(4), identity_op(4));
        CHECK(id.modes == 2);
        CHECK(max_abs_diff(id.mat, Matrix::Identity(25, 25)) == 0.0);
    }
    SUBCASE("(a x I) lowers mode 1") {
        auto op = tensor(annihilator(3), identity_op(3));
        Vector out = op.mat * basis_vec(16, idx2(3, 1, 0));
        Vector expect = basis_vec(16, idx2(3, 0, 0));
        CHECK(max_abs_diff(out, expect) == doctest::Approx(0.0));
    }
    SUBCASE("trace is multiplicative") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            FockOp a{1, 4, Matrix(5, 5)}, b{1, 4, Matrix(5, 5)};
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    a.mat(i, j) = testutil::crand(rng);
                    b.mat(i, j) = testutil::crand(rng);
                }
            Complex lhs = tensor(a, b).mat.trace();
            Complex rhs = a.mat.trace() * b.mat.trace();
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
    SUBCASE("mismatched cutoffs are rejected") {
        CHECK_THROWS_AS(tensor(identity_op(3), identity_op(4)), std::invalid_argument);
    }
}

TEST_CASE("transpose_full") {
    SUBCASE("|j><k| -> |k><j|") {
        auto op = basis_op(6, 2, 5);
        auto t = transpose_full(op);
        CHECK(t.mat(5, 2).real() == doctest::Approx(1.0));
        CHECK(t.mat(2, 5).real() == doctest::Approx(0.0));
    }
    SUBCASE("identity is fixed") {
        CHECK(max_abs_diff(transpose_full(identity_op(6)).mat, Matrix::Identity(7, 7)) == 0.0);
    }
    SUBCASE("no conjugation happens") {
        FockOp op{1, 1, Matrix(2, 2)};
        op.mat << Complex(0, 1), 0, 0, 0;
        CHECK(transpose_full(op).mat(0, 0) == Complex(0, 1));
    }
    SUBCASE("annihilator goes to creation") {
        CHECK(max_abs_diff(transpose_full(annihilator(8)).mat, creation(8).mat) == 0.0);
    }
}

TEST_CASE("partial_transpose") {
    std::mt19937_64 rng(7);

    SUBCASE("product operators factorize") {
        FockOp a{1, 4, Matrix(5, 5)}, b{1, 4, Matrix(5, 5)};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                a.mat(i, j) = testutil::crand(rng);
                b.mat(i, j) = testutil::crand(rng);
            }
        auto lhs2 = partial_transpose(tensor(a, b), 2);
        auto rhs2 = tensor(a, transpose_full(b));
        CHECK(max_abs_diff(lhs2.mat, rhs2.mat) == 0.0);

        auto lhs1 = partial_transpose(tensor(a, b), 1);
        auto rhs1 = tensor(transpose_full(a), b);
        CHECK(max_abs_diff(lhs1.mat, rhs1.mat) == 0.0);
    }
    SUBCASE("involution") {
        FockOp op{2, 3, Matrix(16, 16)};
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) op.mat(i, j) = testutil::crand(rng);
        CHECK(max_abs_diff(partial_transpose(partial_transpose(op, 2), 2).mat, op.mat) == 0.0);
    }
    SUBCASE("single-mode input is rejected") {
        CHECK_THROWS_AS(partial_transpose(identity_op(4), 2), std::invalid_argument);
    }
    SUBCASE("trace norm of PT of TMSV r=0.5 is e") {
        auto rho = tmsv_rho(0.5, 30);
        double tn = trace_norm(partial_transpose(rho, 2));
        CHECK(tn == doctest::Approx(std::exp(1.0)).epsilon(1e-4));
    }
}

TEST_CASE("displacement_op") {
    SUBCASE("D(0) is the identity") {
        CHECK(max_abs_diff(displacement_op(0.0, 12).mat, Matrix::Identity(13, 13)) < 1e-15);
    }
    SUBCASE("vacuum overlap") {
        Complex alpha(0.6, -0.3);
        auto d = displacement_op(alpha, 30);
        CHECK(std::abs(d.mat(0, 0) - std::exp(-0.5 * std::norm(alpha))) < 1e-14);
    }
    SUBCASE("matches the generator exponential away from the boundary") {
        Complex alpha(0.45, 0.8);
        const int n = 30;
        Matrix gen = alpha * creation(n).mat - std::conj(alpha) * annihilator(n).mat;
        Matrix ref = testutil::expm(gen);
        CHECK(max_abs_diff(corner(displacement_op(alpha, n).mat, 10), corner(ref, 10)) < 1e-12);
    }
    SUBCASE("transpose is D(-alpha*)") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 4; ++trial) {
            Complex alpha = testutil::crand(rng, 0.7);
            auto lhs = transpose_full(displacement_op(alpha, 40));
            auto rhs = displacement_op(-std::conj(alpha), 40);
            CHECK(max_abs_diff(lhs.mat, rhs.mat) < 1e-10);
        }
    }
    SUBCASE("tail criterion rejects undersized cutoffs") {
        CHECK_THROWS_AS(displacement_op(Complex(3.0, 0.0), 8), cutoff_too_small);
    }
}

TEST_CASE("squeeze1_op") {
    SUBCASE("S1(0) is the identity") {
        CHECK(max_abs_diff(squeeze1_op(0.0, 12).mat, Matrix::Identity(13, 13)) < 1e-15);
    }
    SUBCASE("vacuum overlap is sech^{1/2} r") {
        double r = 0.7;
        auto s = squeeze1_op(Complex(r, 0), 40);
        CHECK(std::abs(s.mat(0, 0) - std::sqrt(1.0 / std::cosh(r))) < 1e-14);
    }
    SUBCASE("matches the generator exponential away from the boundary") {
        Complex xi = 0.5 * std::exp(Complex(0, 0.9));
        const int n = 40;
        Matrix ad2 = creation(n).mat * creation(n).mat;
        Matrix a2 = annihilator(n).mat * annihilator(n).mat;
        Matrix gen = 0.5 * (xi * ad2 - std::conj(xi) * a2);
        Matrix ref = testutil::expm(gen);
        CHECK(max_abs_diff(corner(squeeze1_op(xi, n).mat, 10), corner(ref, 10)) < 1e-11);
    }
    SUBCASE("transpose is S1(-xi*)") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 4; ++trial) {
            double r = testutil::urand(rng, 0.1, 1.0);
            double th = testutil::urand(rng, -3.0, 3.0);
            Complex xi = r * std::exp(Complex(0, th));
            auto lhs = transpose_full(squeeze1_op(xi, 50, 1e-6));
            auto rhs = squeeze1_op(-std::conj(xi), 50, 1e-6);
            CHECK(max_abs_diff(lhs.mat, rhs.mat) < 1e-9);
        }
    }
    SUBCASE("tail criterion rejects undersized cutoffs") {
        CHECK_THROWS_AS(squeeze1_op(Complex(1.4, 0.0), 10), cutoff_too_small);
    }
}

TEST_CASE("squeeze2_op") {
    SUBCASE("S(0) is the identity") {
        CHECK(max_abs_diff(squeeze2_op(0.0, 6).mat, Matrix::Identity(49, 49)) < 1e-15);
    }
    SUBCASE("vacuum overlap is sech r") {
        double r = 0.6;
        auto s = squeeze2_op(Complex(r, 0), 25);
        CHECK(std::abs(s.mat(0, 0) - 1.0 / std::cosh(r)) < 1e-14);
    }
    SUBCASE("S|00> is the Schmidt series") {
        double r = 0.5, phi = 1.1;
        const int n = 25;
        auto s = squeeze2_op(r * std::exp(Complex(0, phi)), n);
        Vector col = s.mat.col(0);
        Complex tau = std::exp(Complex(0, phi)) * std::tanh(r);
        for (int n1 = 0; n1 <= n; ++n1)
            for (int n2 = 0; n2 <= n; ++n2) {
                Complex expect = (n1 == n2) ? std::pow(tau, n1) / std::cosh(r) : Complex(0);
                CHECK(std::abs(col(idx2(n, n1, n2)) - expect) < 1e-13);
            }
    }
    SUBCASE("matches the generator exponential away from the boundary") {
        double r = 0.4, phi = 0.3;
        const int n = 20;
        Complex xi = r * std::exp(Complex(0, phi));
        auto ad = tensor(creation(n), identity_op(n));
        auto bd = tensor(identity_op(n), creation(n));
        Matrix adbd = ad.mat * bd.mat;
        Matrix gen = xi * adbd - std::conj(xi) * adbd.adjoint();
        Matrix ref = testutil::expm(gen);
        CHECK(max_abs_diff(corner2(squeeze2_op(xi, n).mat, n, 5), corner2(ref, n, 5)) < 1e-10);
    }
    SUBCASE("tail criterion rejects undersized cutoffs") {
        CHECK_THROWS_AS(squeeze2_op(Complex(1.2, 0.0), 6), cutoff_too_small);
    }
}

TEST_CASE("beam_splitter_op") {
    SUBCASE("B(0) is the identity") {
        CHECK(max_abs_diff(beam_splitter_op(0.0, 0.0, 6).mat, Matrix::Identity(49, 49)) < 1e-14);
    }
    SUBCASE("vacuum is invariant") {
        auto b = beam_splitter_op(0.8, 0.4, 8);
        Vector out = b.mat * basis_vec(81, 0);
        CHECK(max_abs_diff(out, basis_vec(81, 0)) < 1e-14);
    }
    SUBCASE("photon number is conserved") {
        const int n = 6;
        auto b = beam_splitter_op(0.7, 1.3, n);
        for (int n1 = 0; n1 <= n; ++n1)
            for (int n2 = 0; n2 <= n; ++n2)
                for (int m1 = 0; m1 <= n; ++m1)
                    for (int m2 = 0; m2 <= n; ++m2)
                        if (n1 + n2 != m1 + m2)
                            CHECK(std::abs(b.mat(idx2(n, n1, n2), idx2(n, m1, m2))) == 0.0);
    }
    SUBCASE("matches the generator exponential on complete sectors") {
        double theta = 0.6, phi = 0.9;
        const int n = 12;
        auto ad = tensor(creation(n), identity_op(n));
        auto b_ = tensor(identity_op(n), annihilator(n));
        Matrix adb = ad.mat * b_.mat;
        Matrix gen = theta * (std::exp(Complex(0, phi)) * adb -
                              std::exp(Complex(0, -phi)) * adb.adjoint());
        Matrix ref = testutil::expm(gen);
        // sectors with n1+n2 <= 6 sit fully inside the 5x5 corner of a cutoff-12 basis
        CHECK(max_abs_diff(corner2(beam_splitter_op(theta, phi, n).mat, n, 5),
                           corner2(ref, n, 5)) < 1e-12);
    }
    SUBCASE("PT of the two-mode squeezer is cos(theta) B(theta)") {
        for (double r : {0.1, 0.3, 0.6}) {
            const int n = 20;
            double theta = std::asin(std::tanh(r));
            auto lhs = partial_transpose(squeeze2_op(Complex(r, 0), n, 1e-6), 2);
            auto bs = beam_splitter_op(theta, 0.0, n);
            CHECK(max_abs_diff(lhs.mat, std::cos(theta) * bs.mat) < 1e-10);
        }
    }
}

TEST_CASE("gaussian_rho_op") {
    SUBCASE("r=0, t=0 coefficients give the vacuum projector") {
        OmegaParams om{0.25, -0.5, -0.5, 0.0};
        auto rho = gaussian_rho_op(om, 8);
        Matrix expect = Matrix::Zero(81, 81);
        expect(0, 0) = 1.0;
        CHECK(max_abs_diff(rho.mat, expect) < 1e-15);
    }
    SUBCASE("t=0 coefficients reproduce the TMSV projector") {
        double r = 0.5;
        OmegaParams om{0.25 / std::pow(std::cosh(r), 2), -0.5, -0.5, 0.5 * std::tanh(r)};
        auto rho = gaussian_rho_op(om, 25);
        CHECK(max_abs_diff(rho.mat, tmsv_rho(r, 25).mat) < 1e-9);
    }
    SUBCASE("thermal product: entries and unit trace") {
        // nbar = 0.5 per mode: 4 O0 = 1/(nbar+1)^2, 2 O1 = 2 O2 = -1/(nbar+1)
        OmegaParams om{1.0 / 9.0, -1.0 / 3.0, -1.0 / 3.0, 0.0};
        auto rho = gaussian_rho_op(om, 30);
        CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-8);
        CHECK(max_abs_diff(rho.mat, rho.mat.adjoint()) == 0.0);
        auto diag = [&](int n1, int n2) { return rho.mat(idx2(30, n1, n2), idx2(30, n1, n2)).real(); };
        CHECK(diag(0, 0) == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
        CHECK(diag(1, 0) == doctest::Approx(4.0 / 27.0).epsilon(1e-12));
        CHECK(diag(2, 3) == doctest::Approx(4.0 / 9.0 / 243.0).epsilon(1e-12));
    }
    SUBCASE("TMSV coefficients keep unit trace at adequate cutoffs") {
        double r = 0.6;
        OmegaParams om{0.25 / std::pow(std::cosh(r), 2), -0.5, -0.5, 0.5 * std::tanh(r)};
        auto rho = gaussian_rho_op(om, 40);
        CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-8);
    }
    SUBCASE("omega0 <= 0 is rejected") {
        CHECK_THROWS_AS(gaussian_rho_op(OmegaParams{-0.1, -0.5, -0.5, 0.0}, 6),
                        std::invalid_argument);
    }
}

TEST_CASE("lindblad_evolve") {
    SUBCASE("zero generator is the identity map") {
        auto rho = tmsv_rho(0.3, 10);
        auto out = lindblad_evolve(rho, {0, 0, 0, 0, 1.0}, 50);
        CHECK(max_abs_diff(out.mat, rho.mat) < 1e-14);
    }
    SUBCASE("trace is preserved") {
        auto rho = tmsv_rho(0.4, 14);
        auto out = lindblad_evolve(rho, {0.2, 0.05, 0.1, 0.0, 0.8}, 400);
        CHECK(std::abs(out.mat.trace().real() - rho.mat.trace().real()) < 1e-8);
        CHECK(max_abs_diff(out.mat, out.mat.adjoint()) < 1e-12);
    }
    SUBCASE("non-Hermitian input is rejected") {
        FockOp bad{2, 3, Matrix::Zero(16, 16)};
        bad.mat(0, 1) = 1.0;
        CHECK_THROWS_AS(lindblad_evolve(bad, {0.1, 0, 0.1, 0, 1.0}, 10),
                        std::invalid_argument);
    }
    SUBCASE("unstable step size is reported") {
        auto rho = tmsv_rho(0.2, 8);
        CHECK_THROWS_AS(lindblad_evolve(rho, {6.0, 0, 6.0, 0, 2.0}, 2),
                        step_size_too_large);
    }
    SUBCASE("generic product-state input takes the dense path") {
        // pure loss: trace-preserving even with boundary population
        std::mt19937_64 rng(61);
        auto rho = tensor(testutil::random_density(rng, 6),
                          testutil::random_density(rng, 6));
        auto out = lindblad_evolve(rho, {0.3, 0.0, 0.2, 0.0, 0.6}, 300);
        CHECK(std::abs(out.mat.trace().real() - 1.0) < 1e-8);
        CHECK(max_abs_diff(out.mat, out.mat.adjoint()) < 1e-12);
        // loss shrinks the mean photon number
        auto nbar = [&](const FockOp& s) {
            double acc = 0.0;
            for (int n1 = 0; n1 <= 6; ++n1)
                for (int n2 = 0; n2 <= 6; ++n2)
                    acc += (n1 + n2) * s.mat(idx2(6, n1, n2), idx2(6, n1, n2)).real();
            return acc;
        };
        CHECK(nbar(out) < nbar(rho));
    }
}

TEST_CASE("eig_hermitian and trace_norm") {
    SUBCASE("tiny diagonal") {
        FockOp op{1, 1, Matrix::Zero(2, 2)};
        op.mat(0, 0) = 3.0;
        op.mat(1, 1) = -1.0;
        auto ev = eig_hermitian(op);
        CHECK(ev[0] == doctest::Approx(-1.0));
        CHECK(ev[1] == doctest::Approx(3.0));
        CHECK(trace_norm(op) == doctest::Approx(4.0));
    }
    SUBCASE("vacuum projector spectrum") {
        auto rho = basis_op(6, 0, 0);
        auto ev = eig_hermitian(rho);
        CHECK(ev.back() == doctest::Approx(1.0));
        for (std::size_t i = 0; i + 1 < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-14);
    }
    SUBCASE("eigenvalue sum equals the trace") {
        std::mt19937_64 rng(23);
        auto h = testutil::random_hermitian(rng, 60);
        FockOp op{1, 59, h};
        auto ev = eig_hermitian(op);
        double sum = 0.0;
        for (double v : ev) sum += v;
        CHECK(std::abs(sum - h.trace().real()) < 1e-10);
    }
    SUBCASE("reconstruction from the full decomposition") {
        std::mt19937_64 rng(29);
        auto h = testutil::random_hermitian(rng, 128);
        FockOp op{1, 127, h};
        auto [ev, u] = eig_hermitian_full(op);
        Matrix rebuilt = u * ev.asDiagonal() * u.adjoint();
        CHECK(max_abs_diff(rebuilt, h) < 1e-9);
    }
    SUBCASE("reconstruction of a 961-dimensional partial transpose") {
        auto rho = gaussian_rho_op(
            OmegaParams{0.25 / std::pow(std::cosh(0.5), 2), -0.45, -0.45,
                        0.4 * std::tanh(0.5)},
            30);
        auto pt = partial_transpose(rho, 2);
        auto [ev, u] = eig_hermitian_full(pt);
        Matrix rebuilt = u * ev.asDiagonal() * u.adjoint();
        CHECK(max_abs_diff(rebuilt, pt.mat) < 1e-9);
    }
    SUBCASE("block splitting agrees with the dense solve") {
        // two decoupled sub-blocks laid out with interleaved indices
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = 1.0; m(0, 2) = 2.0; m(2, 0) = 2.0; m(2, 2) = -1.0;
        m(1, 1) = 4.0; m(1, 3) = 1.0; m(3, 1) = 1.0; m(3, 3) = 4.0;
        FockOp op{1, 3, m};
        auto ev = eig_hermitian(op);
        std::vector<double> expect{-std::sqrt(5.0), std::sqrt(5.0), 3.0, 5.0};
        std::sort(expect.begin(), expect.end());
        REQUIRE(ev.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(ev[i] == doctest::Approx(expect[i]));
    }
    SUBCASE("non-Hermitian input is rejected") {
        FockOp op{1, 1, Matrix::Zero(2, 2)};
        op.mat(0, 1) = 1.0;
        CHECK_THROWS_AS(eig_hermitian(op), std::invalid_argument);
    }
    SUBCASE("any density operator has unit trace norm") {
        std::mt19937_64 rng(31);
        auto rho = testutil::random_density(rng, 12);
        CHECK(trace_norm(rho) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("log_negativity_fock") {
    SUBCASE("product states carry none") {
        std::mt19937_64 rng(37);
        auto ra = testutil::random_density(rng, 7);
        auto rb = testutil::random_density(rng, 7);
        CHECK(log_negativity_fock(tensor(ra, rb)) == doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("TMSV value is 2r/ln 2") {
        double r = 0.5;
        CHECK(log_negativity_fock(tmsv_rho(r, 30)) ==
              doctest::Approx(2.0 * r / std::numbers::ln2).epsilon(1e-6));
    }
    SUBCASE("single-mode input is rejected") {
        CHECK_THROWS_AS(log_negativity_fock(identity_op(4)), std::invalid_argument);
    }
}

TEST_CASE("char_fn_point") {
    SUBCASE("chi(0) = 1 for any density operator") {
        std::mt19937_64 rng(41);
        auto rho = testutil::random_density(rng, 10);
        CHECK(std::abs(char_fn_point(rho, Complex(0, 0)) - 1.0) < 1e-12);
    }
    SUBCASE("vacuum characteristic function") {
        auto vac = basis_op(25, 0, 0);
        for (Complex alpha : {Complex(0.5, 0.2), Complex(-0.8, 0.6)}) {
            Complex expect = std::exp(-0.5 * std::norm(alpha));
            CHECK(std::abs(char_fn_point(vac, alpha) - expect) < 1e-12);
        }
    }
    SUBCASE("transpose reflects q") {
        std::mt19937_64 rng(43);
        auto rho = testutil::random_density(rng, 16);
        auto rho_t = transpose_full(rho);
        for (int trial = 0; trial < 8; ++trial) {
            double q = testutil::urand(rng), p = testutil::urand(rng);
            Complex a(q / std::numbers::sqrt2, p / std::numbers::sqrt2);
            Complex a_ref(-q / std::numbers::sqrt2, p / std::numbers::sqrt2);
            CHECK(std::abs(char_fn_point(rho_t, a) - char_fn_point(rho, a_ref)) < 1e-8);
        }
    }
}

TEST_CASE("wigner_point_fock") {
    SUBCASE("vacuum at the origin is 1/pi") {
        auto vac = basis_op(20, 0, 0);
        CHECK(wigner_point_fock(vac, Complex(0, 0)) ==
              doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));
        Complex alpha(0.4, -0.6);
        CHECK(wigner_point_fock(vac, alpha) ==
              doctest::Approx(std::exp(-2.0 * std::norm(alpha)) / std::numbers::pi)
                  .epsilon(1e-10));
    }
    SUBCASE("transpose reflects p") {
        std::mt19937_64 rng(47);
        auto rho = testutil::random_density(rng, 16);
        auto rho_t = transpose_full(rho);
        for (int trial = 0; trial < 8; ++trial) {
            Complex a = testutil::crand(rng, 0.8);
            CHECK(wigner_point_fock(rho_t, a) ==
                  doctest::Approx(wigner_point_fock(rho, std::conj(a))).epsilon(1e-8));
        }
    }
    SUBCASE("non-Hermitian input leaves an imaginary residue") {
        auto bad = basis_op(10, 0, 1);
        CHECK_THROWS_AS(wigner_point_fock(bad, Complex(0.3, 0.2)),
                        numerical_inconsistency);
    }
    SUBCASE("PT reflects p2") {
        auto rho = tmsv_rho(0.4, 16);
        auto rho_pt = partial_transpose(rho, 2);
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 5; ++trial) {
            Complex a1 = testutil::crand(rng, 0.7), a2 = testutil::crand(rng, 0.7);
            CHECK(wigner_point_fock(rho_pt, a1, a2) ==
                  doctest::Approx(wigner_point_fock(rho, a1, std::conj(a2))).epsilon(1e-8));
        }
    }
}

TEST_CASE("covariance_fock") {
    SUBCASE("two-mode vacuum gives the identity") {
        auto vac2 = tensor(basis_op(8, 0, 0), basis_op(8, 0, 0));
        auto v = covariance_fock(vac2);
        CHECK((v - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("TMSV blocks") {
        double r = 0.5;
        auto v = covariance_fock(tmsv_rho(r, 25));
        double c = std::cosh(2 * r), s = std::sinh(2 * r);
        CHECK(v(0, 0) == doctest::Approx(c).epsilon(1e-9));
        CHECK(v(1, 1) == doctest::Approx(c).epsilon(1e-9));
        CHECK(v(2, 2) == doctest::Approx(c).epsilon(1e-9));
        CHECK(v(3, 3) == doctest::Approx(c).epsilon(1e-9));
        CHECK(v(0, 2) == doctest::Approx(s).epsilon(1e-9));
        CHECK(v(1, 3) == doctest::Approx(-s).epsilon(1e-9));
        CHECK(std::abs(v(0, 1)) < 1e-9);
        CHECK(std::abs(v(0, 3)) < 1e-9);
    }
    SUBCASE("<Q1 P2> flips sign under PT") {
        // a state with a nonzero Q1 P2 moment: rotate the TMSV with a phase
        auto rho = [&] {
            auto s = squeeze2_op(0.5 * std::exp(Complex(0, 0.8)), 20);
            Matrix vac = Matrix::Zero(441, 441);
            vac(0, 0) = 1.0;
            return FockOp{2, 20, s.mat * vac * s.mat.adjoint()};
        }();
        auto v = covariance_fock(rho);
        auto v_pt = covariance_fock(partial_transpose(rho, 2));
        CHECK(std::abs(v(0, 3)) > 0.1); // moment actually present
        CHECK(v_pt(0, 3) == doctest::Approx(-v(0, 3)).epsilon(1e-9));
        CHECK(v_pt(0, 2) == doctest::Approx(v(0, 2)).epsilon(1e-9));
        CHECK(v_pt(3, 3) == doctest::Approx(v(3, 3)).epsilon(1e-9));
    }
    SUBCASE("nonzero mean is rejected") {
        auto d = displacement_op(Complex(0.5, 0.0), 20);
        Matrix vac = Matrix::Zero(21, 21);
        vac(0, 0) = 1.0;
        FockOp coh{1, 20, d.mat * vac * d.mat.adjoint()};
        CHECK_THROWS_AS(covariance_fock(coh), unsupported_state);
    }
}

TEST_CASE("normal-ordering transpose lemma (property)") {
    std::mt19937_64 rng(59);
    const int cutoff = 16;
    auto a = annihilator(cutoff).mat;
    auto ad = creation(cutoff).mat;
    auto monomial = [&](int j, int k) {
        Matrix m = Matrix::Identity(cutoff + 1, cutoff + 1);
        for (int i = 0; i < j; ++i) m = ad * m;
        for (int i = 0; i < k; ++i) m = m * a;
        return m;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Matrix op = Matrix::Zero(cutoff + 1, cutoff + 1);
        Matrix swapped = Matrix::Zero(cutoff + 1, cutoff + 1);
        for (int j = 0; j <= 4; ++j)
            for (int k = 0; k <= 4; ++k) {
                Complex c = testutil::crand(rng);
                op += c * monomial(j, k);
                swapped += c * monomial(k, j);
            }
        CHECK(max_abs_diff(op.transpose(), swapped) < 1e-10);
    }
}
