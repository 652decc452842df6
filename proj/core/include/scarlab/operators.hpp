#pragma once

#include "scarlab/basis.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace scarlab {

using Complex = std::complex<double>;

/// Complex amplitude vector over a blockaded basis.
class StateVector {
public:
    explicit StateVector(std::shared_ptr<const BlockadedBasis> basis);
    StateVector(std::shared_ptr<const BlockadedBasis> basis, std::vector<Complex> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::shared_ptr<const BlockadedBasis>& basis() const { return basis_; }
    Complex& operator[](std::size_t k) { return amplitudes_[k]; }
    const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    std::vector<Complex>& amplitudes() { return amplitudes_; }

    double norm() const;
    /// Scales to unit norm; throws NumericalError on a numerically zero vector.
    void normalize();

private:
    std::shared_ptr<const BlockadedBasis> basis_;
    std::vector<Complex> amplitudes_;
};

Complex inner(const StateVector& a, const StateVector& b); // <a|b>

/// Operator on a blockaded basis in compressed sparse row form. Entries are
/// stored complex-valued even for real Hamiltonians so evolution code has a
/// single numeric path. Immutable after assembly.
class SparseOperator {
public:
    SparseOperator(std::shared_ptr<const BlockadedBasis> basis,
                   std::vector<std::size_t> row_start,
                   std::vector<std::size_t> columns,
                   std::vector<Complex> values,
                   bool hermitian,
                   bool diagonal);

    std::size_t dim() const { return row_start_.size() - 1; }
    bool hermitian() const { return hermitian_; }
    bool diagonal() const { return diagonal_; }
    const std::shared_ptr<const BlockadedBasis>& basis() const { return basis_; }

    std::size_t row_begin(std::size_t r) const { return row_start_[r]; }
    std::size_t row_end(std::size_t r) const { return row_start_[r + 1]; }
    std::size_t column(std::size_t k) const { return columns_[k]; }
    Complex value(std::size_t k) const { return values_[k]; }
    std::size_t n_entries() const { return values_.size(); }

    /// Maximum absolute column sum; used for degeneracy thresholds.
    double norm_one() const;

private:
    std::shared_ptr<const BlockadedBasis> basis_;
    std::vector<std::size_t> row_start_;
    std::vector<std::size_t> columns_;
    std::vector<Complex> values_;
    bool hermitian_;
    bool diagonal_;
};

/// PXP Hamiltonian on the blockaded basis of g: a spin flips only when all
/// of its graph neighbors are empty. Optional per-vertex couplings (empty
/// means unit weights) and an optional vertex subset restricting which flip
/// terms are included.
SparseOperator build_pxp(const Graph& g, std::shared_ptr<const BlockadedBasis> basis,
                         const std::vector<double>& couplings = {},
                         const std::optional<std::vector<int>>& vertex_subset = std::nullopt);

/// Diagonal Z_a Z_b: +1 when bits a and b agree, -1 otherwise.
SparseOperator build_zz(std::shared_ptr<const BlockadedBasis> basis, int a, int b);

/// Diagonal 0/1 projector onto configurations whose bits agree on every
/// listed pair; equals the product of the single-pair projectors.
SparseOperator build_pair_projector(std::shared_ptr<const BlockadedBasis> basis,
                                    const std::vector<std::pair<int, int>>& pairs);

/// Adds a computational-basis diagonal to an operator.
SparseOperator add_diagonal(const SparseOperator& op, const std::vector<double>& diag);

StateVector apply(const SparseOperator& op, const StateVector& v);

/// Z on one site: flips the amplitude sign of every configuration with the
/// bit set.
StateVector apply_z(const StateVector& v, int site);

} // namespace scarlab
