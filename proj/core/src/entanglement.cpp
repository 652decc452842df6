#include "scarlab/entanglement.hpp"

#include "scarlab/errors.hpp"
#include "scarlab/fibonacci.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace scarlab {

Bipartition::Bipartition(std::vector<int> subset_a, int n_vertices)
    : subset_a_(std::move(subset_a)), n_(n_vertices) {
    if (n_ < 2) throw std::invalid_argument("Bipartition: need at least two vertices");
    if (subset_a_.empty() || static_cast<int>(subset_a_.size()) >= n_) {
        throw std::invalid_argument("Bipartition: subset must be a nonempty proper subset");
    }
    std::sort(subset_a_.begin(), subset_a_.end());
    if (std::adjacent_find(subset_a_.begin(), subset_a_.end()) != subset_a_.end()) {
        throw std::invalid_argument("Bipartition: duplicate vertex in subset");
    }
    for (int v : subset_a_) {
        if (v < 0 || v >= n_) throw std::invalid_argument("Bipartition: vertex out of range");
        mask_a_ |= std::uint64_t{1} << v;
    }
}

namespace {

// Amplitude matrix of v over the realized A- and B-side restrictions.
struct AmplitudeMatrix {
    Eigen::MatrixXcd psi;
    std::vector<std::uint64_t> substates_a;
};

AmplitudeMatrix amplitude_matrix(const StateVector& v, const Bipartition& part) {
    const auto& basis = *v.basis();
    if (part.n_vertices() != basis.graph().n_vertices()) {
        throw std::invalid_argument("bipartition vertex count does not match the basis");
    }
    const std::uint64_t mask_a = part.mask_a();
    const std::uint64_t mask_b = ~mask_a;

    std::map<std::uint64_t, int> index_a, index_b;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, Complex>> entries;
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        const Complex a = v[k];
        if (a == Complex{0.0, 0.0}) continue;
        const std::uint64_t s = basis.state(k);
        const std::uint64_t sa = s & mask_a;
        const std::uint64_t sb = s & mask_b;
        index_a.emplace(sa, 0);
        index_b.emplace(sb, 0);
        entries.emplace_back(sa, sb, a);
    }
    int na = 0;
    for (auto& [key, idx] : index_a) idx = na++;
    int nb = 0;
    for (auto& [key, idx] : index_b) idx = nb++;

    AmplitudeMatrix out;
    out.psi = Eigen::MatrixXcd::Zero(std::max(na, 1), std::max(nb, 1));
    out.substates_a.reserve(index_a.size());
    for (const auto& [key, idx] : index_a) out.substates_a.push_back(key);
    for (const auto& [sa, sb, a] : entries) {
        out.psi(index_a[sa], index_b[sb]) += a;
    }
    return out;
}

} // namespace

DensityMatrix rdm(const StateVector& v, const Bipartition& part) {
    AmplitudeMatrix am = amplitude_matrix(v, part);
    DensityMatrix dm;
    dm.rho = am.psi * am.psi.adjoint();
    dm.substates = std::move(am.substates_a);
    return dm;
}

std::vector<double> rdm_eigenvalues(const DensityMatrix& dm) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dm.rho);
    if (es.info() != Eigen::Success) throw NumericalError("rdm_eigenvalues: eigensolver failed");
    std::vector<double> p(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    for (double& x : p) {
        if (x < 0.0) {
            if (x < -1e-12) {
                throw NumericalError("rdm_eigenvalues: eigenvalue " + std::to_string(x) +
                                     " violates positive semidefiniteness");
            }
            x = 0.0;
        }
    }
    std::sort(p.rbegin(), p.rend());
    return p;
}

double entropy_from_probabilities(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) {
        if (x > 1e-14) s -= x * std::log(x);
    }
    return s;
}

double entropy(const DensityMatrix& dm) { return entropy_from_probabilities(rdm_eigenvalues(dm)); }

double analytic_standard_entropy(int L, int m) {
    if (m < 1 || m > L) throw std::invalid_argument("analytic_standard_entropy: need 1 <= m <= L");
    const double chi = static_cast<double>(fibonacci(L - 1) + fibonacci(L + 1));
    // Multiplicities of the three distinct diagonal values, indexed by the
    // number of occupied subsystem endpoints (F_{-1} = 1 at the m = 1 edge).
    const double counts[3] = {static_cast<double>(fibonacci(m)),
                              2.0 * static_cast<double>(fibonacci(m - 1)),
                              static_cast<double>(fibonacci(m - 2))};
    const double weights[3] = {static_cast<double>(fibonacci(L - m + 2)),
                               static_cast<double>(fibonacci(L - m + 1)),
                               static_cast<double>(fibonacci(L - m))};
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double w = counts[k] * weights[k];
        if (w > 0.0) s -= (w / chi) * std::log(weights[k] / chi);
    }
    return s;
}

double page_value(std::int64_t d_a, std::int64_t d_b) {
    if (d_a < 1 || d_b < 1) throw std::invalid_argument("page_value: dimensions must be positive");
    if (d_a > d_b) throw std::invalid_argument("page_value: requires d_a <= d_b");
    return std::log(static_cast<double>(d_a)) -
           static_cast<double>(d_a) / (2.0 * static_cast<double>(d_b));
}

std::vector<double> schmidt_values(const StateVector& v, const Bipartition& part) {
    AmplitudeMatrix am = amplitude_matrix(v, part);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(am.psi);
    std::vector<double> sv(svd.singularValues().data(),
                           svd.singularValues().data() + svd.singularValues().size());
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

Bipartition standard_half_cut(int L) {
    if (L < 1) throw std::invalid_argument("standard_half_cut: L must be >= 1");
    std::vector<int> a(L);
    for (int i = 0; i < L; ++i) a[i] = i;
    return Bipartition(std::move(a), 2 * L);
}

Bipartition min_entanglement_half_cut(int L) {
    if (L < 2) throw std::invalid_argument("min_entanglement_half_cut: L must be >= 2");
    std::vector<int> a;
    const int whole_pairs = L / 2;
    for (int i = 0; i < whole_pairs; ++i) {
        a.push_back(i);
        a.push_back(L + i);
    }
    if (L % 2 != 0) a.push_back(whole_pairs); // split one pair, keep its A-side
    return Bipartition(std::move(a), 2 * L);
}

} // namespace scarlab
