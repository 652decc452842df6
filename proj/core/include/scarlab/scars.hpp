#pragma once

#include "scarlab/basis.hpp"
#include "scarlab/geometry.hpp"
#include "scarlab/operators.hpp"

#include <memory>
#include <string>
#include <vector>

namespace scarlab {

/// A certified (graph, pairing) combination together with the derived half
/// graph and the two blockaded bases needed to build the correlated state.
struct ScarSpec {
    Graph graph;
    PairingPattern pairing;
    Graph half_graph;
    std::shared_ptr<const BlockadedBasis> half_basis;
    std::shared_ptr<const BlockadedBasis> full_basis;
};

/// Certifies the pair via check_lambda_condition and enumerates both bases.
/// Throws std::invalid_argument when the combination hosts no state.
ScarSpec make_scar_spec(const Graph& g, const PairingPattern& pairing,
                        const EnumerationLimits& limits = {});
ScarSpec make_scar_spec(const Geometry& geometry, const EnumerationLimits& limits = {});

/// The normalized correlated eigenstate: amplitude (-1)^|f| / sqrt(|F|) on
/// the doubled image of every half-basis bitstring f, zero elsewhere.
StateVector build_lambda(const ScarSpec& spec);

/// ||(H - E) v||_2.
double residual(const SparseOperator& h, const StateVector& v, double energy);

struct SymmetryCheck {
    std::string name;
    double deviation; // ||S v - v||_2
};

/// Deviations of v under the spectral-reflection operator, the pair SWAP and
/// ZZ gates, and (on ring graphs with canonical labels) translation by one
/// site and inversion.
std::vector<SymmetryCheck> check_symmetries(const ScarSpec& spec, const StateVector& v);

struct ZZEigenspace {
    int dimension = 0;
    std::vector<double> energies;     // per returned state
    std::vector<StateVector> states;  // orthonormal
};

/// Dimension and basis of {psi : H psi = E psi, Z_a Z_b psi = psi for all
/// listed pairs}. H is diagonalized inside the joint +1 sector; sector
/// eigenvectors are kept only when their residual against the full H is
/// below residual_tol, which sidesteps the degenerate-nullspace ambiguity
/// of dense eigensolvers.
ZZEigenspace simultaneous_zz_eigenspace(const SparseOperator& h,
                                        const std::vector<std::pair<int, int>>& pairs,
                                        double residual_tol = 1e-9,
                                        std::size_t max_dense_dim = 5000);

/// Rank of a state set by Gram-matrix singular values above the threshold.
int linearly_independent_count(const std::vector<StateVector>& states, double threshold = 1e-8);

} // namespace scarlab
