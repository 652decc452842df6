#include "scarlab/operators.hpp"

#include "scarlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace scarlab {

StateVector::StateVector(std::shared_ptr<const BlockadedBasis> basis)
    : basis_(std::move(basis)), amplitudes_(basis_->dim(), Complex{0.0, 0.0}) {}

StateVector::StateVector(std::shared_ptr<const BlockadedBasis> basis, std::vector<Complex> amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != basis_->dim()) {
        throw std::invalid_argument("StateVector: amplitude count does not match basis dimension");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    const double n = norm();
    if (n < 1e-300) throw NumericalError("StateVector::normalize: zero vector");
    const double inv = 1.0 / n;
    for (auto& a : amplitudes_) a *= inv;
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < a.dim(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

SparseOperator::SparseOperator(std::shared_ptr<const BlockadedBasis> basis,
                               std::vector<std::size_t> row_start,
                               std::vector<std::size_t> columns,
                               std::vector<Complex> values,
                               bool hermitian,
                               bool diagonal)
    : basis_(std::move(basis)),
      row_start_(std::move(row_start)),
      columns_(std::move(columns)),
      values_(std::move(values)),
      hermitian_(hermitian),
      diagonal_(diagonal) {
    if (row_start_.empty() || row_start_.size() != basis_->dim() + 1 ||
        columns_.size() != values_.size() || row_start_.back() != values_.size()) {
        throw std::invalid_argument("SparseOperator: inconsistent CSR arrays");
    }
}

double SparseOperator::norm_one() const {
    std::vector<double> col_sum(dim(), 0.0);
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t k = row_begin(r); k < row_end(r); ++k) {
            col_sum[columns_[k]] += std::abs(values_[k]);
        }
    }
    double m = 0.0;
    for (double s : col_sum) m = std::max(m, s);
    return m;
}

SparseOperator build_pxp(const Graph& g, std::shared_ptr<const BlockadedBasis> basis,
                         const std::vector<double>& couplings,
                         const std::optional<std::vector<int>>& vertex_subset) {
    if (basis->graph() != g) {
        throw std::invalid_argument("build_pxp: basis was built from a different graph");
    }
    const int n = g.n_vertices();
    if (!couplings.empty() && static_cast<int>(couplings.size()) != n) {
        throw std::invalid_argument("build_pxp: coupling count does not match vertex count");
    }
    for (double w : couplings) {
        if (!std::isfinite(w)) throw std::invalid_argument("build_pxp: non-finite coupling");
    }
    std::uint64_t active = ~std::uint64_t{0};
    if (vertex_subset) {
        active = 0;
        for (int v : *vertex_subset) {
            if (v < 0 || v >= n) throw std::invalid_argument("build_pxp: subset vertex out of range");
            active |= std::uint64_t{1} << v;
        }
    }

    const auto& states = basis->states();
    std::vector<std::size_t> row_start(basis->dim() + 1, 0);
    std::vector<std::size_t> columns;
    std::vector<Complex> values;
    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t r = 0; r < states.size(); ++r) {
        const std::uint64_t f = states[r];
        row.clear();
        for (int i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (!(active & bit)) continue;
            // A flip is allowed iff every neighbor is empty; for an occupied
            // site this already holds on the blockaded basis.
            if ((f & bit) == 0 && (f & g.neighbor_mask(i)) != 0) continue;
            const double w = couplings.empty() ? 1.0 : couplings[i];
            if (w == 0.0) continue;
            row.emplace_back(basis->index(f ^ bit), w);
        }
        std::sort(row.begin(), row.end());
        for (const auto& [c, w] : row) {
            columns.push_back(c);
            values.emplace_back(w, 0.0);
        }
        row_start[r + 1] = columns.size();
    }
    return SparseOperator(std::move(basis), std::move(row_start), std::move(columns), std::move(values),
                          /*hermitian=*/true, /*diagonal=*/false);
}

namespace {

SparseOperator make_diagonal(std::shared_ptr<const BlockadedBasis> basis, std::vector<Complex> diag) {
    const std::size_t d = diag.size();
    std::vector<std::size_t> row_start(d + 1);
    std::vector<std::size_t> columns(d);
    for (std::size_t r = 0; r < d; ++r) {
        row_start[r] = r;
        columns[r] = r;
    }
    row_start[d] = d;
    return SparseOperator(std::move(basis), std::move(row_start), std::move(columns), std::move(diag),
                          /*hermitian=*/true, /*diagonal=*/true);
}

} // namespace

SparseOperator build_zz(std::shared_ptr<const BlockadedBasis> basis, int a, int b) {
    const int n = basis->graph().n_vertices();
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
        throw std::invalid_argument("build_zz: vertices must be distinct and in range");
    }
    const auto& states = basis->states();
    std::vector<Complex> diag(states.size());
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    for (std::size_t r = 0; r < states.size(); ++r) {
        const bool equal = ((states[r] & ba) != 0) == ((states[r] & bb) != 0);
        diag[r] = equal ? 1.0 : -1.0;
    }
    return make_diagonal(std::move(basis), std::move(diag));
}

SparseOperator build_pair_projector(std::shared_ptr<const BlockadedBasis> basis,
                                    const std::vector<std::pair<int, int>>& pairs) {
    const int n = basis->graph().n_vertices();
    std::uint64_t seen = 0;
    for (const auto& [a, b] : pairs) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
            throw std::invalid_argument("build_pair_projector: vertices must be distinct and in range");
        }
        const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        if (seen & mask) throw std::invalid_argument("build_pair_projector: overlapping pairs");
        seen |= mask;
    }
    const auto& states = basis->states();
    std::vector<Complex> diag(states.size());
    for (std::size_t r = 0; r < states.size(); ++r) {
        bool keep = true;
        for (const auto& [a, b] : pairs) {
            if (((states[r] >> a) & 1) != ((states[r] >> b) & 1)) {
                keep = false;
                break;
            }
        }
        diag[r] = keep ? 1.0 : 0.0;
    }
    return make_diagonal(std::move(basis), std::move(diag));
}

SparseOperator add_diagonal(const SparseOperator& op, const std::vector<double>& diag) {
    if (diag.size() != op.dim()) throw std::invalid_argument("add_diagonal: dimension mismatch");
    std::vector<std::size_t> row_start(op.dim() + 1, 0);
    std::vector<std::size_t> columns;
    std::vector<Complex> values;
    columns.reserve(op.n_entries() + op.dim());
    values.reserve(op.n_entries() + op.dim());
    for (std::size_t r = 0; r < op.dim(); ++r) {
        bool placed = diag[r] == 0.0;
        for (std::size_t k = op.row_begin(r); k < op.row_end(r); ++k) {
            const std::size_t c = op.column(k);
            Complex v = op.value(k);
            if (!placed && c >= r) {
                if (c == r) {
                    v += diag[r];
                } else {
                    columns.push_back(r);
                    values.emplace_back(diag[r], 0.0);
                }
                placed = true;
            }
            columns.push_back(c);
            values.push_back(v);
        }
        if (!placed) {
            columns.push_back(r);
            values.emplace_back(diag[r], 0.0);
        }
        row_start[r + 1] = columns.size();
    }
    return SparseOperator(op.basis(), std::move(row_start), std::move(columns), std::move(values),
                          op.hermitian(), op.diagonal() && op.n_entries() == op.dim());
}

StateVector apply(const SparseOperator& op, const StateVector& v) {
    if (op.dim() != v.dim()) throw std::invalid_argument("apply: dimension mismatch");
    StateVector out(v.basis());
    for (std::size_t r = 0; r < op.dim(); ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = op.row_begin(r); k < op.row_end(r); ++k) {
            acc += op.value(k) * v[op.column(k)];
        }
        out[r] = acc;
    }
    return out;
}

StateVector apply_z(const StateVector& v, int site) {
    const int n = v.basis()->graph().n_vertices();
    if (site < 0 || site >= n) throw std::invalid_argument("apply_z: site out of range");
    StateVector out = v;
    const auto& states = v.basis()->states();
    const std::uint64_t bit = std::uint64_t{1} << site;
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k] & bit) out[k] = -out[k];
    }
    return out;
}

} // namespace scarlab
