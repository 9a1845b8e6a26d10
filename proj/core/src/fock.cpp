#include "cvneg/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

namespace cvneg::fock {

namespace {

using SparseC = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

constexpr double kPi = std::numbers::pi;

void require_cutoff(int cutoff, const char* who) {
    if (cutoff < 1)
        throw std::invalid_argument(std::string(who) + ": cutoff must be >= 1");
}

// flat two-mode index, mode-1 major
inline int idx2(int d, int n1, int n2) { return n1 * d + n2; }

// e^{tau a^+ b^+} on the truncated two-mode basis; the raising series is
// projected, the matrix equals the exact projected operator.
SparseC pair_raise(Complex tau, int cutoff) {
    const int d = cutoff + 1;
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(d) * d * 2);
    for (int n1 = 0; n1 <= cutoff; ++n1)
        for (int n2 = 0; n2 <= cutoff; ++n2) {
            Complex coef = 1.0;
            trip.emplace_back(idx2(d, n1, n2), idx2(d, n1, n2), coef);
            if (tau == Complex(0.0)) continue;
            for (int k = 1; n1 + k <= cutoff && n2 + k <= cutoff; ++k) {
                coef *= tau / double(k) * std::sqrt(double(n1 + k) * double(n2 + k));
                trip.emplace_back(idx2(d, n1 + k, n2 + k), idx2(d, n1, n2), coef);
            }
        }
    SparseC m(d * d, d * d);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

// x1^{a^+a} x2^{b^+b} as a diagonal
Eigen::VectorXcd pair_diag(double x1, double x2, int cutoff) {
    const int d = cutoff + 1;
    Eigen::VectorXcd diag(d * d);
    for (int n1 = 0; n1 <= cutoff; ++n1)
        for (int n2 = 0; n2 <= cutoff; ++n2)
            diag(idx2(d, n1, n2)) = std::pow(x1, n1) * std::pow(x2, n2);
    return diag;
}

double ln_factorial(int n) { return std::lgamma(double(n) + 1.0); }

// population of the top Fock level of a coherent state |alpha>
double coherent_tail(Complex alpha, int cutoff) {
    const double x = std::norm(alpha);
    if (x == 0.0) return 0.0;
    return std::exp(-x + cutoff * std::log(x) - ln_factorial(cutoff));
}

// population of the top (parity-matched) Fock level of a squeezed vacuum
double squeezed_tail(double r, int cutoff) {
    if (r == 0.0) return 0.0;
    const int k = cutoff / 2; // level 2k <= cutoff
    const double th = std::tanh(std::abs(r));
    return std::exp(std::log(1.0 / std::cosh(std::abs(r))) + 2.0 * k * std::log(th / 2.0) +
                    ln_factorial(2 * k) - 2.0 * ln_factorial(k));
}

// connected components of the exact-nonzero pattern (union-find)
std::vector<std::vector<int>> zero_pattern_components(const Matrix& m) {
    const int n = int(m.rows());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != Complex(0.0) || m(j, i) != Complex(0.0)) {
                int a = find(i), b = find(j);
                if (a != b) parent[a] = b;
            }
    std::vector<std::vector<int>> comps(n);
    for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const auto& c) { return c.empty(); }),
                comps.end());
    return comps;
}

} // namespace

// ---------------------------- basic operators -------------------------------

FockOp annihilator(int cutoff) {
    require_cutoff(cutoff, "annihilator");
    Matrix m = Matrix::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) m(n - 1, n) = std::sqrt(double(n));
    return {1, cutoff, std::move(m)};
}

FockOp creation(int cutoff) {
    FockOp a = annihilator(cutoff);
    a.mat = a.mat.transpose().eval();
    return a;
}

FockOp number_op(int cutoff) {
    require_cutoff(cutoff, "number_op");
    Matrix m = Matrix::Zero(cutoff + 1, cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) m(n, n) = double(n);
    return {1, cutoff, std::move(m)};
}

FockOp identity_op(int cutoff, int modes) {
    require_cutoff(cutoff, "identity_op");
    if (modes != 1 && modes != 2)
        throw std::invalid_argument("identity_op: modes must be 1 or 2");
    const int dim = modes == 1 ? cutoff + 1 : (cutoff + 1) * (cutoff + 1);
    return {modes, cutoff, Matrix::Identity(dim, dim)};
}

FockOp basis_op(int cutoff, int j, int k) {
    require_cutoff(cutoff, "basis_op");
    if (j < 0 || j > cutoff || k < 0 || k > cutoff)
        throw std::invalid_argument("basis_op: indices out of range");
    Matrix m = Matrix::Zero(cutoff + 1, cutoff + 1);
    m(j, k) = 1.0;
    return {1, cutoff, std::move(m)};
}

FockOp tensor(const FockOp& a, const FockOp& b) {
    if (a.modes != 1 || b.modes != 1)
        throw std::invalid_argument("tensor: both factors must be single-mode");
    if (a.cutoff != b.cutoff)
        throw std::invalid_argument("tensor: cutoffs must match");
    const int d = a.cutoff + 1;
    Matrix m(d * d, d * d);
    for (int n1 = 0; n1 < d; ++n1)
        for (int m1 = 0; m1 < d; ++m1)
            m.block(n1 * d, m1 * d, d, d) = a.mat(n1, m1) * b.mat;
    return {2, a.cutoff, std::move(m)};
}

FockOp transpose_full(const FockOp& op) {
    return {op.modes, op.cutoff, op.mat.transpose()};
}

FockOp partial_transpose(const FockOp& op, int mode) {
    if (op.modes != 2)
        throw std::invalid_argument("partial_transpose: operator must be two-mode");
    if (mode != 1 && mode != 2)
        throw std::invalid_argument("partial_transpose: mode must be 1 or 2");
    const int d = op.cutoff + 1;
    Matrix out(op.dim(), op.dim());
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2)
            for (int m1 = 0; m1 < d; ++m1)
                for (int m2 = 0; m2 < d; ++m2) {
                    const Complex v = op.mat(idx2(d, n1, n2), idx2(d, m1, m2));
                    if (mode == 2)
                        out(idx2(d, n1, m2), idx2(d, m1, n2)) = v;
                    else
                        out(idx2(d, m1, n2), idx2(d, n1, m2)) = v;
                }
    return {2, op.cutoff, std::move(out)};
}

// --------------------------- Gaussian unitaries -----------------------------

FockOp displacement_op(Complex alpha, int cutoff, double tail_tol) {
    require_cutoff(cutoff, "displacement_op");
    if (coherent_tail(alpha, cutoff) > tail_tol)
        throw cutoff_too_small("displacement_op: displaced-vacuum tail above tolerance");
    const int d = cutoff + 1;
    // e^{alpha a^+}: lower triangular, e^{-alpha* a}: upper triangular
    Matrix up = Matrix::Zero(d, d), dn = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        Complex cu = 1.0, cd = 1.0;
        up(n, n) = 1.0;
        dn(n, n) = 1.0;
        for (int k = 1; n + k < d; ++k) {
            cu *= alpha / double(k) * std::sqrt(double(n + k));
            cd *= -std::conj(alpha) / double(k) * std::sqrt(double(n + k));
            up(n + k, n) = cu;
            dn(n, n + k) = cd;
        }
    }
    Matrix m = std::exp(-0.5 * std::norm(alpha)) * (up * dn);
    return {1, cutoff, std::move(m)};
}

FockOp squeeze1_op(Complex xi, int cutoff, double tail_tol) {
    require_cutoff(cutoff, "squeeze1_op");
    const double r = std::abs(xi);
    if (squeezed_tail(r, cutoff) > tail_tol)
        throw cutoff_too_small("squeeze1_op: squeezed-vacuum tail above tolerance");
    const int d = cutoff + 1;
    const Complex phase = r == 0.0 ? Complex(1.0) : xi / r;
    const Complex half_up = 0.5 * phase * std::tanh(r);
    const Complex half_dn = -0.5 * std::conj(phase) * std::tanh(r);
    const double sech = 1.0 / std::cosh(r);

    Matrix up = Matrix::Zero(d, d), dn = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        Complex cu = 1.0, cd = 1.0;
        up(n, n) = 1.0;
        dn(n, n) = 1.0;
        for (int k = 1; n + 2 * k < d; ++k) {
            cu *= half_up / double(k) *
                  std::sqrt(double(n + 2 * k) * double(n + 2 * k - 1));
            cd *= half_dn / double(k) *
                  std::sqrt(double(n + 2 * k) * double(n + 2 * k - 1));
            up(n + 2 * k, n) = cu;
            dn(n, n + 2 * k) = cd;
        }
    }
    Eigen::VectorXcd mid(d);
    for (int n = 0; n < d; ++n) mid(n) = std::pow(sech, n);
    Matrix m = std::sqrt(sech) * (up * mid.asDiagonal() * dn);
    return {1, cutoff, std::move(m)};
}

FockOp squeeze2_op(Complex xi, int cutoff, double tail_tol) {
    require_cutoff(cutoff, "squeeze2_op");
    const double r = std::abs(xi);
    const double th = std::tanh(r);
    if (std::pow(th, 2 * (cutoff + 1)) > tail_tol)
        throw cutoff_too_small("squeeze2_op: Schmidt tail above tolerance");
    const Complex phase = r == 0.0 ? Complex(1.0) : xi / r;
    const double sech = 1.0 / std::cosh(r);
    SparseC up = pair_raise(phase * th, cutoff);
    SparseC dn = pair_raise(-std::conj(phase) * th, cutoff);
    Eigen::VectorXcd mid = pair_diag(sech, sech, cutoff);
    SparseC prod = up * SparseC(mid.asDiagonal() * SparseC(dn.transpose()));
    Matrix m = sech * Matrix(prod);
    return {2, cutoff, std::move(m)};
}

FockOp beam_splitter_op(double theta, double phi, int cutoff) {
    require_cutoff(cutoff, "beam_splitter_op");
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("beam_splitter_op: theta, phi must be finite");
    const int d = cutoff + 1;
    Matrix out = Matrix::Zero(d * d, d * d);
    const Complex eip = std::exp(Complex(0, phi));
    // exact per total-photon sector: exponentiate the sector generator in the
    // full (n+1)-dimensional sector, then keep entries inside the basis
    for (int n = 0; n <= 2 * cutoff; ++n) {
        const int sz = n + 1;
        // H = -i G on basis |k, n-k>, k = 0..n; G tridiagonal
        Matrix h = Matrix::Zero(sz, sz);
        for (int k = 0; k + 1 <= n; ++k) {
            const Complex g = theta * eip * std::sqrt(double(k + 1) * double(n - k));
            h(k + 1, k) = Complex(0, -1) * g;
            h(k, k + 1) = std::conj(h(k + 1, k));
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        Matrix u = es.eigenvectors() *
                   (Complex(0, 1) * es.eigenvalues().array().cast<Complex>()).exp().matrix().asDiagonal() *
                   es.eigenvectors().adjoint();
        for (int kr = 0; kr <= n; ++kr) {
            if (kr > cutoff || n - kr > cutoff) continue;
            for (int kc = 0; kc <= n; ++kc) {
                if (kc > cutoff || n - kc > cutoff) continue;
                out(idx2(d, kr, n - kr), idx2(d, kc, n - kc)) = u(kr, kc);
            }
        }
    }
    return {2, cutoff, std::move(out)};
}

FockOp tmsv_rho(double r, int cutoff, double tail_tol) {
    require_cutoff(cutoff, "tmsv_rho");
    if (r < 0.0 || !std::isfinite(r))
        throw std::invalid_argument("tmsv_rho: r must be finite and >= 0");
    const double th = std::tanh(r);
    const double sech2 = 1.0 / std::pow(std::cosh(r), 2);
    if (sech2 * std::pow(th, 2 * cutoff) > tail_tol)
        throw cutoff_too_small("tmsv_rho: Schmidt tail above tolerance");
    const int d = cutoff + 1;
    Matrix m = Matrix::Zero(d * d, d * d);
    for (int n = 0; n <= cutoff; ++n)
        for (int k = 0; k <= cutoff; ++k)
            m(idx2(d, n, n), idx2(d, k, k)) = sech2 * std::pow(th, n + k);
    return {2, cutoff, std::move(m)};
}

FockOp gaussian_rho_op(const OmegaParams& omega, int cutoff, double tail_tol) {
    require_cutoff(cutoff, "gaussian_rho_op");
    omega.validate();
    const double x1 = 1.0 + 2.0 * omega.omega1;
    const double x2 = 1.0 + 2.0 * omega.omega2;
    const double tau = 2.0 * omega.omega3;
    SparseC up = pair_raise(tau, cutoff);
    Eigen::VectorXcd mid = pair_diag(x1, x2, cutoff);
    SparseC prod = up * SparseC(mid.asDiagonal() * SparseC(up.transpose()));
    Matrix m = 4.0 * omega.omega0 * Matrix(prod);

    const int d = cutoff + 1;
    double tail = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        tail += std::abs(m(idx2(d, cutoff, n), idx2(d, cutoff, n)));
        if (n < cutoff) tail += std::abs(m(idx2(d, n, cutoff), idx2(d, n, cutoff)));
    }
    if (tail > tail_tol)
        throw cutoff_too_small("gaussian_rho_op: boundary population above tolerance");
    return {2, cutoff, std::move(m)};
}

// ---------------------------- channel evolution -----------------------------

namespace {

// Packed Lindblad generator over an explicit list of matrix entries. The
// generator never couples entries with different (n1-n2)-(m1-m2); when the
// input is supported on (n1-n2) == (m1-m2) -- every squeezed-vacuum-derived
// state is -- only that sector is carried.
struct PackedLindblad {
    int d = 0;
    std::vector<int> row, col;  // dense coordinates per packed entry
    std::vector<int> mirror;    // packed index of the adjoint entry
    std::vector<double> c0;     // diagonal coefficient
    std::vector<std::array<int, 4>> nb;
    std::vector<std::array<double, 4>> cf;
    std::vector<int> diag;      // packed indices of diagonal entries

    void rhs(const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) const {
        const auto n = static_cast<Eigen::Index>(row.size());
        for (Eigen::Index e = 0; e < n; ++e) {
            Complex acc = c0[e] * y[e];
            const auto& nbe = nb[e];
            const auto& cfe = cf[e];
            for (int k = 0; k < 4; ++k)
                if (nbe[k] >= 0) acc += cfe[k] * y[nbe[k]];
            dy[e] = acc;
        }
    }
};

PackedLindblad pack_lindblad(const FockOp& rho0, const ChannelParams& ch,
                             std::vector<int>& dense_to_packed) {
    const int d = rho0.cutoff + 1;
    const int dim = d * d;
    bool diff_sector = true;
    for (int i = 0; i < dim && diff_sector; ++i)
        for (int j = 0; j < dim; ++j)
            if (rho0.mat(i, j) != Complex(0.0)) {
                const int n1 = i / d, n2 = i % d, m1 = j / d, m2 = j % d;
                if (n1 - n2 != m1 - m2) {
                    diff_sector = false;
                    break;
                }
            }

    PackedLindblad p;
    p.d = d;
    dense_to_packed.assign(static_cast<std::size_t>(dim) * dim, -1);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const int n1 = i / d, n2 = i % d, m1 = j / d, m2 = j % d;
            if (diff_sector && n1 - n2 != m1 - m2) continue;
            dense_to_packed[std::size_t(i) * dim + j] = int(p.row.size());
            p.row.push_back(i);
            p.col.push_back(j);
        }
    const auto at = [&](int n1, int n2, int m1, int m2) -> int {
        if (n1 < 0 || n2 < 0 || m1 < 0 || m2 < 0 || n1 >= d || n2 >= d || m1 >= d ||
            m2 >= d)
            return -1;
        return dense_to_packed[std::size_t(idx2(d, n1, n2)) * dim + idx2(d, m1, m2)];
    };
    const std::size_t n_active = p.row.size();
    p.mirror.resize(n_active);
    p.c0.resize(n_active);
    p.nb.resize(n_active);
    p.cf.resize(n_active);
    for (std::size_t e = 0; e < n_active; ++e) {
        const int n1 = p.row[e] / d, n2 = p.row[e] % d;
        const int m1 = p.col[e] / d, m2 = p.col[e] % d;
        p.mirror[e] = dense_to_packed[std::size_t(p.col[e]) * dim + p.row[e]];
        p.c0[e] = -(ch.g1 * (n1 + m1 + 2) + ch.g2 * (n2 + m2 + 2) +
                    ch.kappa1 * (n1 + m1) + ch.kappa2 * (n2 + m2));
        p.nb[e] = {at(n1 + 1, n2, m1 + 1, m2), at(n1 - 1, n2, m1 - 1, m2),
                   at(n1, n2 + 1, m1, m2 + 1), at(n1, n2 - 1, m1, m2 - 1)};
        p.cf[e] = {2.0 * ch.kappa1 * std::sqrt(double(n1 + 1) * double(m1 + 1)),
                   2.0 * ch.g1 * std::sqrt(double(n1) * double(m1)),
                   2.0 * ch.kappa2 * std::sqrt(double(n2 + 1) * double(m2 + 1)),
                   2.0 * ch.g2 * std::sqrt(double(n2) * double(m2))};
        for (int k = 0; k < 4; ++k)
            if (p.cf[e][k] == 0.0) p.nb[e][k] = -1;
        if (p.row[e] == p.col[e]) p.diag.push_back(int(e));
    }
    return p;
}

} // namespace

FockOp lindblad_evolve(const FockOp& rho0, const ChannelParams& ch, int steps,
                       double trace_tol) {
    if (rho0.modes != 2)
        throw std::invalid_argument("lindblad_evolve: state must be two-mode");
    if (steps < 1) throw std::invalid_argument("lindblad_evolve: steps must be >= 1");
    ch.validate();
    if ((rho0.mat - rho0.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("lindblad_evolve: state must be Hermitian");
    if (std::abs(rho0.mat.trace().real() - 1.0) > 1e-6)
        throw std::invalid_argument("lindblad_evolve: state must have unit trace");
    if (ch.t == 0.0) return rho0;

    std::vector<int> dense_to_packed;
    PackedLindblad gen = pack_lindblad(rho0, ch, dense_to_packed);
    const auto n_active = static_cast<Eigen::Index>(gen.row.size());

    Eigen::VectorXcd y(n_active);
    for (Eigen::Index e = 0; e < n_active; ++e) y[e] = rho0.mat(gen.row[e], gen.col[e]);

    const double h = ch.t / steps;
    Eigen::VectorXcd k1(n_active), k2(n_active), k3(n_active), k4(n_active),
        tmp(n_active);
    for (int s = 0; s < steps; ++s) {
        gen.rhs(y, k1);
        tmp = y + (0.5 * h) * k1;
        gen.rhs(tmp, k2);
        tmp = y + (0.5 * h) * k2;
        gen.rhs(tmp, k3);
        tmp = y + h * k3;
        gen.rhs(tmp, k4);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        // re-hermitize: rho <- (rho + rho^+)/2
        tmp = y;
        for (Eigen::Index e = 0; e < n_active; ++e)
            y[e] = 0.5 * (tmp[e] + std::conj(tmp[gen.mirror[e]]));
    }

    Complex tr = 0.0;
    for (int e : gen.diag) tr += y[e];
    if (!std::isfinite(tr.real()) || std::abs(tr - rho0.mat.trace()) > trace_tol)
        throw step_size_too_large("lindblad_evolve: trace drift above tolerance");

    const int dim = (rho0.cutoff + 1) * (rho0.cutoff + 1);
    FockOp out{2, rho0.cutoff, Matrix::Zero(dim, dim)};
    for (Eigen::Index e = 0; e < n_active; ++e) out.mat(gen.row[e], gen.col[e]) = y[e];
    return out;
}

// ------------------------------- spectra ------------------------------------

std::pair<Eigen::VectorXd, Matrix> eig_hermitian_full(const FockOp& op,
                                                      double herm_tol) {
    if ((op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
        throw std::invalid_argument("eig_hermitian: operator is not Hermitian");
    const int n = int(op.dim());
    Matrix h = 0.5 * (op.mat + op.mat.adjoint());

    auto comps = zero_pattern_components(h);
    std::vector<std::pair<double, int>> order; // (eigenvalue, column)
    order.reserve(n);
    Matrix vecs = Matrix::Zero(n, n);
    Eigen::VectorXd vals(n);
    int col = 0;
    for (const auto& comp : comps) {
        const int k = int(comp.size());
        Matrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = h(comp[i], comp[j]);
        Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
        for (int c = 0; c < k; ++c) {
            vals(col) = es.eigenvalues()(c);
            for (int i = 0; i < k; ++i) vecs(comp[i], col) = es.eigenvectors()(i, c);
            order.emplace_back(vals(col), col);
            ++col;
        }
    }
    std::sort(order.begin(), order.end());
    Eigen::VectorXd sorted_vals(n);
    Matrix sorted_vecs(n, n);
    for (int c = 0; c < n; ++c) {
        sorted_vals(c) = order[c].first;
        sorted_vecs.col(c) = vecs.col(order[c].second);
    }
    return {std::move(sorted_vals), std::move(sorted_vecs)};
}

std::vector<double> eig_hermitian(const FockOp& op, double herm_tol) {
    if ((op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
        throw std::invalid_argument("eig_hermitian: operator is not Hermitian");
    Matrix h = 0.5 * (op.mat + op.mat.adjoint());
    auto comps = zero_pattern_components(h);
    std::vector<double> vals;
    vals.reserve(op.dim());
    for (const auto& comp : comps) {
        const int k = int(comp.size());
        Matrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = h(comp[i], comp[j]);
        Eigen::SelfAdjointEigenSolver<Matrix> es(sub, Eigen::EigenvaluesOnly);
        for (int c = 0; c < k; ++c) vals.push_back(es.eigenvalues()(c));
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

double trace_norm(const FockOp& op) {
    double sum = 0.0;
    for (double v : eig_hermitian(op)) sum += std::abs(v);
    return sum;
}

double log_negativity_fock(const FockOp& rho) {
    if (rho.modes != 2)
        throw std::invalid_argument("log_negativity_fock: state must be two-mode");
    const double tn = trace_norm(partial_transpose(rho, 2));
    return std::max(0.0, std::log2(tn));
}

// --------------------------- phase-space probes -----------------------------

Complex char_fn_point(const FockOp& rho, Complex alpha, double tail_tol) {
    if (rho.modes != 1)
        throw std::invalid_argument("char_fn_point: expected a single-mode state");
    const Matrix dmat = displacement_op(alpha, rho.cutoff, tail_tol).mat;
    return (rho.mat.array() * dmat.transpose().array()).sum();
}

Complex char_fn_point(const FockOp& rho, Complex alpha1, Complex alpha2,
                      double tail_tol) {
    if (rho.modes != 2)
        throw std::invalid_argument("char_fn_point: expected a two-mode state");
    const int d = rho.cutoff + 1;
    const Matrix d1 = displacement_op(alpha1, rho.cutoff, tail_tol).mat;
    const Matrix d2 = displacement_op(alpha2, rho.cutoff, tail_tol).mat;
    Complex acc = 0.0;
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2)
            for (int m1 = 0; m1 < d; ++m1) {
                const Complex f1 = d1(m1, n1);
                if (f1 == Complex(0.0)) continue;
                for (int m2 = 0; m2 < d; ++m2)
                    acc += rho.mat(idx2(d, n1, n2), idx2(d, m1, m2)) * f1 * d2(m2, n2);
            }
    return acc;
}

namespace {

// Delta(alpha) = (1/pi) D(alpha) Pi D(alpha)^+, Pi = (-1)^{a^+a}
Matrix wigner_op(Complex alpha, int cutoff, double tail_tol) {
    const Matrix dmat = displacement_op(alpha, cutoff, tail_tol).mat;
    Eigen::VectorXcd parity(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) parity(n) = (n % 2 == 0) ? 1.0 : -1.0;
    return (1.0 / kPi) * dmat * parity.asDiagonal() * dmat.adjoint();
}

double take_real(Complex w, double imag_tol, const char* who) {
    if (std::abs(w.imag()) > imag_tol)
        throw numerical_inconsistency(std::string(who) +
                                      ": imaginary residue above tolerance");
    return w.real();
}

} // namespace

double wigner_point_fock(const FockOp& rho, Complex alpha, double imag_tol,
                         double tail_tol) {
    if (rho.modes != 1)
        throw std::invalid_argument("wigner_point_fock: expected a single-mode state");
    const Matrix delta = wigner_op(alpha, rho.cutoff, tail_tol);
    const Complex w = (rho.mat.array() * delta.transpose().array()).sum();
    return take_real(w, imag_tol, "wigner_point_fock");
}

double wigner_point_fock(const FockOp& rho, Complex alpha1, Complex alpha2,
                         double imag_tol, double tail_tol) {
    if (rho.modes != 2)
        throw std::invalid_argument("wigner_point_fock: expected a two-mode state");
    const int d = rho.cutoff + 1;
    const Matrix w1 = wigner_op(alpha1, rho.cutoff, tail_tol);
    const Matrix w2 = wigner_op(alpha2, rho.cutoff, tail_tol);
    Complex acc = 0.0;
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2)
            for (int m1 = 0; m1 < d; ++m1) {
                const Complex f1 = w1(m1, n1);
                if (f1 == Complex(0.0)) continue;
                for (int m2 = 0; m2 < d; ++m2)
                    acc += rho.mat(idx2(d, n1, n2), idx2(d, m1, m2)) * f1 * w2(m2, n2);
            }
    return take_real(acc, imag_tol, "wigner_point_fock");
}

Eigen::MatrixXd covariance_fock(const FockOp& rho, double mean_tol) {
    if (rho.modes != 1 && rho.modes != 2)
        throw std::invalid_argument("covariance_fock: modes must be 1 or 2");
    const int d = rho.cutoff + 1;

    std::vector<SparseC> quads; // (Q1, P1[, Q2, P2])
    {
        std::vector<Triplet> ta;
        for (int n = 1; n < d; ++n) ta.emplace_back(n - 1, n, std::sqrt(double(n)));
        SparseC a1(d, d);
        a1.setFromTriplets(ta.begin(), ta.end());
        auto embed = [&](const SparseC& a, int which_mode) {
            std::vector<Triplet> trip;
            for (int k = 0; k < a.outerSize(); ++k)
                for (SparseC::InnerIterator it(a, k); it; ++it)
                    for (int other = 0; other < d; ++other) {
                        if (which_mode == 1)
                            trip.emplace_back(idx2(d, int(it.row()), other),
                                              idx2(d, int(it.col()), other), it.value());
                        else
                            trip.emplace_back(idx2(d, other, int(it.row())),
                                              idx2(d, other, int(it.col())), it.value());
                    }
            SparseC m(d * d, d * d);
            m.setFromTriplets(trip.begin(), trip.end());
            return m;
        };
        const Complex inv_i(0, -1);
        if (rho.modes == 1) {
            SparseC at = SparseC(a1.transpose());
            quads.push_back(a1 + at);
            quads.push_back(inv_i * (a1 - at));
        } else {
            for (int mode = 1; mode <= 2; ++mode) {
                SparseC a = embed(a1, mode);
                SparseC at = SparseC(a.transpose());
                quads.push_back(a + at);
                quads.push_back(inv_i * (a - at));
            }
        }
    }

    auto trace_with = [&](const SparseC& m) {
        Complex acc = 0.0;
        for (int k = 0; k < m.outerSize(); ++k)
            for (SparseC::InnerIterator it(m, k); it; ++it)
                acc += it.value() * rho.mat(int(it.col()), int(it.row()));
        return acc;
    };

    for (const auto& q : quads)
        if (std::abs(trace_with(q)) > mean_tol)
            throw unsupported_state("covariance_fock: state has nonzero mean quadratures");

    const int nq = int(quads.size());
    Eigen::MatrixXd v(nq, nq);
    for (int i = 0; i < nq; ++i)
        for (int j = i; j < nq; ++j) {
            SparseC sym = SparseC(quads[i] * quads[j]) + SparseC(quads[j] * quads[i]);
            v(i, j) = v(j, i) = 0.5 * trace_with(sym).real();
        }
    return v;
}

} // namespace cvneg::fock
