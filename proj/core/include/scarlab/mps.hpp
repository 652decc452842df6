#pragma once

#include "scarlab/basis.hpp"
#include "scarlab/operators.hpp"

#include <Eigen/Dense>

namespace scarlab {

/// Site-independent 2x2 tensors over the two-spin physical basis
/// {00, 01, 10, 11} generating the correlated state: one MPS site carries
/// the paired physical spins (s_i, s_ibar). The mixed tensors vanish,
/// M00 is idempotent and M11 is nilpotent of order two.
struct LambdaMps {
    Eigen::Matrix2d m00;
    Eigen::Matrix2d m11;
    Eigen::Vector2d boundary_left;
    Eigen::Vector2d boundary_right;

    static LambdaMps standard();
};

enum class MpsBoundary {
    Trace,    // periodic contraction: the doubled-ring state
    Boundary, // boundary-vector contraction: the dangler state
};

/// Contracts the MPS for half size L and places the amplitudes on the
/// blockaded basis of the matching doubled geometry (ring for Trace,
/// dangler for Boundary), normalized. Requires L >= 2.
StateVector mps_amplitudes(int L, MpsBoundary mode, const EnumerationLimits& limits = {});

enum class MinCutKind { Regular, PairSplitting };
enum class MinCutGeometry { Ring, Dangler };

/// Closed-form asymptotic entanglement entropy of the half-system
/// entanglement-minimizing bipartition. Valid combinations: even half size
/// uses regular cuts (one for the dangler, two for the ring), odd half size
/// splits one pair. Natural log.
double min_cut_entropy_asymptotic(MinCutKind cut, MinCutGeometry geometry, bool even_half_size);

/// Exact finite-size entropy of the canonical half-system minimizing cut,
/// from the exact state's Schmidt values. Guarded at L <= 12.
double finite_size_min_cut_entropy(int L, MinCutGeometry geometry);

} // namespace scarlab
