#pragma once

#include "scarlab/operators.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace scarlab {

/// Nonempty proper vertex subset defining a bipartition; the complement is
/// implicit.
class Bipartition {
public:
    Bipartition(std::vector<int> subset_a, int n_vertices);

    const std::vector<int>& subset_a() const { return subset_a_; }
    int n_vertices() const { return n_; }
    std::uint64_t mask_a() const { return mask_a_; }

private:
    std::vector<int> subset_a_;
    int n_ = 0;
    std::uint64_t mask_a_ = 0;
};

/// Reduced density matrix over the realized subsystem bitstrings only; the
/// constrained space has no tensor-product structure, so the subsystem
/// dimension is data, not 2^|A|. Substates keep their bits at the original
/// vertex positions.
struct DensityMatrix {
    Eigen::MatrixXcd rho;
    std::vector<std::uint64_t> substates;
};

/// Exact partial trace of |v><v| onto the subset, grouping configurations by
/// their restriction to it.
DensityMatrix rdm(const StateVector& v, const Bipartition& part);

/// Eigenvalues of a density matrix, descending, with values in [-1e-12, 0]
/// clipped to zero. More negative values raise NumericalError (a PSD
/// violation signals an upstream bug).
std::vector<double> rdm_eigenvalues(const DensityMatrix& dm);

/// Von Neumann entropy -sum p ln p over eigenvalues > 1e-14 (natural log).
double entropy(const DensityMatrix& dm);
double entropy_from_probabilities(const std::vector<double>& p);

/// Closed-form entropy of the contiguous m-site cut of the correlated ring
/// state at half size L, from the Fibonacci multiplicities of the diagonal
/// reduced density matrix. Valid for 1 <= m <= L.
double analytic_standard_entropy(int L, int m);

/// ln d_a - d_a / (2 d_b): average entanglement entropy of a random pure
/// state for subsystem dimensions d_a <= d_b.
double page_value(std::int64_t d_a, std::int64_t d_b);

/// Schmidt values (descending) of the amplitude matrix over realized
/// substrings on each side of the bipartition; their squares sum to one for
/// a normalized state.
std::vector<double> schmidt_values(const StateVector& v, const Bipartition& part);

/// Canonical half-system cuts for the doubled geometries with pairing
/// (i, i+L): the standard cut takes one member of every pair; the
/// entanglement-minimizing cut keeps pairs together (splitting exactly one
/// pair when L is odd).
Bipartition standard_half_cut(int L);
Bipartition min_entanglement_half_cut(int L);

} // namespace scarlab
