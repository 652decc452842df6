#include "scarlab/dynamics.hpp"

#include "scarlab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace scarlab {

namespace {

struct KrylovDecomposition {
    std::vector<std::vector<Complex>> basis; // orthonormal Lanczos vectors
    Eigen::MatrixXd tridiag;                 // m x m real symmetric projection
    double next_beta = 0.0;                  // residual coupling out of the subspace
    int m = 0;
};

void axpy(std::vector<Complex>& y, Complex a, const std::vector<Complex>& x) {
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

double nrm2(const std::vector<Complex>& a) {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return std::sqrt(s);
}

std::vector<Complex> matvec(const SparseOperator& h, const std::vector<Complex>& x) {
    std::vector<Complex> y(x.size(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < h.dim(); ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = h.row_begin(r); k < h.row_end(r); ++k) {
            acc += h.value(k) * x[h.column(k)];
        }
        y[r] = acc;
    }
    return y;
}

// Lanczos with full reorthogonalization; m is small so the cost is benign
// and it keeps the unitarity drift near machine precision.
KrylovDecomposition lanczos(const SparseOperator& h, const std::vector<Complex>& v0, int m_max) {
    KrylovDecomposition kd;
    kd.basis.push_back(v0);
    std::vector<double> alpha, beta;
    for (int j = 0; j < m_max; ++j) {
        std::vector<Complex> w = matvec(h, kd.basis[j]);
        const double a = dot(kd.basis[j], w).real();
        alpha.push_back(a);
        axpy(w, Complex{-a, 0.0}, kd.basis[j]);
        if (j > 0) axpy(w, Complex{-beta[j - 1], 0.0}, kd.basis[j - 1]);
        for (const auto& q : kd.basis) axpy(w, -dot(q, w), q);
        const double b = nrm2(w);
        if (j + 1 == m_max || b < 1e-13) {
            kd.next_beta = b;
            break;
        }
        beta.push_back(b);
        const double inv = 1.0 / b;
        for (auto& x : w) x *= inv;
        kd.basis.push_back(std::move(w));
    }
    kd.m = static_cast<int>(alpha.size());
    kd.tridiag = Eigen::MatrixXd::Zero(kd.m, kd.m);
    for (int j = 0; j < kd.m; ++j) {
        kd.tridiag(j, j) = alpha[j];
        if (j + 1 < kd.m) {
            kd.tridiag(j, j + 1) = beta[j];
            kd.tridiag(j + 1, j) = beta[j];
        }
    }
    return kd;
}

// exp(-i T dt) e_1 for the small projected matrix.
Eigen::VectorXcd small_exponential(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es, double dt) {
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::MatrixXd& u = es.eigenvectors();
    Eigen::VectorXcd phases(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        phases(k) = std::exp(Complex{0.0, -ev(k) * dt});
    }
    return u.cast<Complex>() * (phases.asDiagonal() * u.row(0).transpose().cast<Complex>());
}

} // namespace

StateVector evolve(const SparseOperator& h, const StateVector& v, double t,
                   const PropagatorConfig& cfg) {
    if (!h.hermitian()) throw std::invalid_argument("evolve: operator must be Hermitian");
    if (h.dim() != v.dim()) throw std::invalid_argument("evolve: dimension mismatch");
    if (cfg.krylov_dim < 2) throw std::invalid_argument("evolve: krylov_dim must be >= 2");
    if (cfg.step_tolerance <= 0) throw std::invalid_argument("evolve: step_tolerance must be positive");
    if (t == 0.0) return v;

    const double direction = t > 0 ? 1.0 : -1.0;
    double remaining = std::abs(t);
    std::vector<Complex> current = v.amplitudes();

    while (remaining > 0.0) {
        const double nrm = nrm2(current);
        std::vector<Complex> unit = current;
        for (auto& x : unit) x *= 1.0 / nrm;
        KrylovDecomposition kd = lanczos(h, unit, cfg.krylov_dim);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kd.tridiag);

        double dt = std::min(remaining, cfg.max_substep);
        Eigen::VectorXcd y;
        for (;;) {
            y = small_exponential(es, direction * dt);
            // Residual coupling out of the subspace bounds the local error;
            // an exact invariant subspace (next_beta ~ 0) is exact.
            const double err = kd.next_beta * std::abs(y(kd.m - 1));
            if (err <= cfg.step_tolerance || kd.next_beta < 1e-12) break;
            dt *= 0.5;
            if (dt < 1e-12) {
                throw NumericalError("evolve: substep underflow without meeting tolerance");
            }
        }
        std::vector<Complex> next(current.size(), Complex{0.0, 0.0});
        for (int j = 0; j < kd.m; ++j) axpy(next, nrm * y(j), kd.basis[j]);
        current = std::move(next);
        remaining -= dt;
    }
    return StateVector(v.basis(), std::move(current));
}

EigenSystem exact_eigs(const SparseOperator& h, std::size_t max_dim) {
    if (!h.hermitian()) throw std::invalid_argument("exact_eigs: operator must be Hermitian");
    if (h.dim() > max_dim) {
        throw DimensionLimitError("exact_eigs: dimension " + std::to_string(h.dim()) +
                                  " exceeds dense limit " + std::to_string(max_dim));
    }
    const auto n = static_cast<Eigen::Index>(h.dim());
    bool real = true;
    for (std::size_t k = 0; k < h.n_entries() && real; ++k) {
        if (h.value(k).imag() != 0.0) real = false;
    }
    EigenSystem out;
    if (real) {
        Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t r = 0; r < h.dim(); ++r) {
            for (std::size_t k = h.row_begin(r); k < h.row_end(r); ++k) {
                dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(h.column(k))) =
                    h.value(k).real();
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
        if (es.info() != Eigen::Success) throw NumericalError("exact_eigs: eigensolver failed");
        out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
        out.eigenvectors = es.eigenvectors().cast<Complex>();
    } else {
        Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(n, n);
        for (std::size_t r = 0; r < h.dim(); ++r) {
            for (std::size_t k = h.row_begin(r); k < h.row_end(r); ++k) {
                dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(h.column(k))) = h.value(k);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
        if (es.info() != Eigen::Success) throw NumericalError("exact_eigs: eigensolver failed");
        out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
        out.eigenvectors = es.eigenvectors();
    }
    return out;
}

} // namespace scarlab
