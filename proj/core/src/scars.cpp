#include "scarlab/scars.hpp"

#include "scarlab/dynamics.hpp"
#include "scarlab/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace scarlab {

ScarSpec make_scar_spec(const Graph& g, const PairingPattern& pairing,
                        const EnumerationLimits& limits) {
    auto half = check_lambda_condition(g, pairing);
    if (!half) {
        throw std::invalid_argument(
            "make_scar_spec: folded neighborhoods differ, the pairing hosts no correlated eigenstate");
    }
    ScarSpec spec{g, pairing, *half, nullptr, nullptr};
    spec.half_basis = enumerate_blockaded(*half, limits);
    spec.full_basis = enumerate_blockaded(g, limits);
    return spec;
}

ScarSpec make_scar_spec(const Geometry& geometry, const EnumerationLimits& limits) {
    if (!geometry.pairing) {
        throw std::invalid_argument("make_scar_spec: geometry defines no pairing");
    }
    return make_scar_spec(geometry.graph, *geometry.pairing, limits);
}

StateVector build_lambda(const ScarSpec& spec) {
    StateVector v(spec.full_basis);
    const double amp = 1.0 / std::sqrt(static_cast<double>(spec.half_basis->dim()));
    for (const std::uint64_t f : spec.half_basis->states()) {
        const std::size_t idx = embed_product(*spec.half_basis, spec.pairing, *spec.full_basis, f);
        const int weight = std::popcount(f);
        v[idx] = Complex{(weight % 2 == 0) ? amp : -amp, 0.0};
    }
    return v;
}

double residual(const SparseOperator& h, const StateVector& v, double energy) {
    StateVector hv = apply(h, v);
    double s = 0.0;
    for (std::size_t k = 0; k < hv.dim(); ++k) s += std::norm(hv[k] - energy * v[k]);
    return std::sqrt(s);
}

namespace {

// ||P v - v|| in the full spin space for the vertex permutation perm. A
// permutation that is not a graph automorphism can carry blockaded weight
// onto forbidden configurations; that leaked weight counts toward the
// deviation.
double permutation_deviation(const StateVector& v, const std::vector<int>& perm) {
    const auto& basis = *v.basis();
    const int n = basis.graph().n_vertices();
    StateVector pv(v.basis());
    double leak = 0.0;
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        const std::uint64_t s = basis.state(k);
        std::uint64_t mapped = 0;
        for (int b = 0; b < n; ++b) {
            if (s & (std::uint64_t{1} << b)) mapped |= std::uint64_t{1} << perm[b];
        }
        if (basis.contains(mapped)) {
            pv[basis.index(mapped)] = v[k];
        } else {
            leak += std::norm(v[k]);
        }
    }
    double s = leak;
    for (std::size_t k = 0; k < basis.dim(); ++k) s += std::norm(pv[k] - v[k]);
    return std::sqrt(s);
}

bool is_canonical_ring(const Graph& g) {
    const int n = g.n_vertices();
    if (n < 3 || g.n_edges() != n) return false;
    for (int v = 0; v < n; ++v) {
        if (!g.has_edge(v, (v + 1) % n)) return false;
    }
    return true;
}

} // namespace

std::vector<SymmetryCheck> check_symmetries(const ScarSpec& spec, const StateVector& v) {
    const auto& basis = *spec.full_basis;
    const int n = basis.graph().n_vertices();
    std::vector<SymmetryCheck> report;

    // Spectral reflection prod_i Z_i is diagonal: sign (-1)^|s|.
    {
        double s = 0.0;
        for (std::size_t k = 0; k < basis.dim(); ++k) {
            const Complex cv = (std::popcount(basis.state(k)) % 2 == 0) ? v[k] : -v[k];
            s += std::norm(cv - v[k]);
        }
        report.push_back({"spectral_reflection", std::sqrt(s)});
    }

    if (is_canonical_ring(basis.graph())) {
        std::vector<int> shift(n), invert(n);
        for (int b = 0; b < n; ++b) {
            shift[b] = (b + 1) % n;
            invert[b] = (n - b) % n;
        }
        report.push_back({"translation", permutation_deviation(v, shift)});
        report.push_back({"inversion", permutation_deviation(v, invert)});
    }

    {
        double worst = 0.0;
        std::vector<int> perm(n);
        for (const auto& [a, b] : spec.pairing.pairs()) {
            for (int k = 0; k < n; ++k) perm[k] = k;
            perm[a] = b;
            perm[b] = a;
            worst = std::max(worst, permutation_deviation(v, perm));
        }
        report.push_back({"pair_swap", worst});
    }

    {
        double worst = 0.0;
        for (const auto& [a, b] : spec.pairing.pairs()) {
            double s = 0.0;
            const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            for (std::size_t k = 0; k < basis.dim(); ++k) {
                const int bits = std::popcount(basis.state(k) & mask);
                const Complex zz = (bits % 2 == 0) ? v[k] : -v[k];
                s += std::norm(zz - v[k]);
            }
            worst = std::max(worst, std::sqrt(s));
        }
        report.push_back({"pair_zz", worst});
    }
    return report;
}

ZZEigenspace simultaneous_zz_eigenspace(const SparseOperator& h,
                                        const std::vector<std::pair<int, int>>& pairs,
                                        double residual_tol,
                                        std::size_t max_dense_dim) {
    if (pairs.empty()) throw std::invalid_argument("simultaneous_zz_eigenspace: no pairs given");
    const auto& basis = *h.basis();
    const auto& states = basis.states();

    // Joint +1 sector of all listed ZZ operators.
    std::vector<std::size_t> sector;
    for (std::size_t k = 0; k < states.size(); ++k) {
        bool keep = true;
        for (const auto& [a, b] : pairs) {
            if (((states[k] >> a) & 1) != ((states[k] >> b) & 1)) {
                keep = false;
                break;
            }
        }
        if (keep) sector.push_back(k);
    }
    const auto sd = static_cast<Eigen::Index>(sector.size());
    if (sector.empty()) return {};
    if (sector.size() > max_dense_dim) {
        throw DimensionLimitError("simultaneous_zz_eigenspace: sector dimension " +
                                  std::to_string(sector.size()) + " exceeds dense limit");
    }
    std::vector<std::size_t> position(states.size(), SIZE_MAX);
    for (std::size_t j = 0; j < sector.size(); ++j) position[sector[j]] = j;

    Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(sd, sd);
    for (std::size_t j = 0; j < sector.size(); ++j) {
        const std::size_t r = sector[j];
        for (std::size_t k = h.row_begin(r); k < h.row_end(r); ++k) {
            const std::size_t c = position[h.column(k)];
            if (c != SIZE_MAX) projected(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) =
                h.value(k).real();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(projected);
    if (es.info() != Eigen::Success) throw NumericalError("simultaneous_zz_eigenspace: eigensolver failed");

    // A degenerate eigenvalue cluster of the projected operator may mix true
    // eigenvectors of the full H with spurious sector vectors (the projected
    // block can even vanish identically when every flip breaks a pair), so
    // each cluster is refined to the kernel of (H - E) restricted to it.
    const double cluster_tol = 1e-10 * std::max(1.0, h.norm_one());

    ZZEigenspace out;
    Eigen::Index begin = 0;
    while (begin < sd) {
        Eigen::Index end = begin + 1;
        while (end < sd && es.eigenvalues()(end) - es.eigenvalues()(end - 1) <= cluster_tol) ++end;
        const Eigen::Index width = end - begin;
        const double e = es.eigenvalues().segment(begin, width).mean();

        std::vector<StateVector> cluster;
        for (Eigen::Index c = 0; c < width; ++c) {
            StateVector v(h.basis());
            for (std::size_t j = 0; j < sector.size(); ++j) {
                v[sector[j]] =
                    Complex{es.eigenvectors()(static_cast<Eigen::Index>(j), begin + c), 0.0};
            }
            cluster.push_back(std::move(v));
        }
        Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(width, width);
        std::vector<StateVector> images;
        for (Eigen::Index c = 0; c < width; ++c) {
            StateVector w = apply(h, cluster[static_cast<std::size_t>(c)]);
            for (std::size_t k = 0; k < w.dim(); ++k) {
                w[k] -= e * cluster[static_cast<std::size_t>(c)][k];
            }
            images.push_back(std::move(w));
        }
        for (Eigen::Index a = 0; a < width; ++a) {
            for (Eigen::Index b = a; b < width; ++b) {
                const double g = inner(images[static_cast<std::size_t>(a)],
                                       images[static_cast<std::size_t>(b)])
                                     .real();
                gram(a, b) = g;
                gram(b, a) = g;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ges(gram);
        if (ges.info() != Eigen::Success) {
            throw NumericalError("simultaneous_zz_eigenspace: cluster refinement failed");
        }
        for (Eigen::Index c = 0; c < width; ++c) {
            const double sq = std::max(ges.eigenvalues()(c), 0.0);
            if (std::sqrt(sq) > residual_tol) continue;
            StateVector candidate(h.basis());
            for (Eigen::Index a = 0; a < width; ++a) {
                const double coeff = ges.eigenvectors()(a, c);
                const auto& va = cluster[static_cast<std::size_t>(a)];
                for (std::size_t k = 0; k < candidate.dim(); ++k) candidate[k] += coeff * va[k];
            }
            if (residual(h, candidate, e) <= residual_tol) {
                out.energies.push_back(e);
                out.states.push_back(std::move(candidate));
            }
        }
        begin = end;
    }
    out.dimension = static_cast<int>(out.states.size());
    return out;
}

int linearly_independent_count(const std::vector<StateVector>& states, double threshold) {
    if (states.empty()) return 0;
    const auto m = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXcd gram(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            gram(i, j) = inner(states[static_cast<std::size_t>(i)], states[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram);
    int count = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        if (svd.singularValues()(k) > threshold) ++count;
    }
    return count;
}

} // namespace scarlab
