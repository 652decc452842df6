#pragma once

#include "scarlab/operators.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace scarlab {

struct PropagatorConfig {
    int krylov_dim = 30;          // Lanczos subspace size per substep
    double step_tolerance = 1e-10; // local error budget per substep
    double max_substep = 1.0;      // largest time step attempted at once
};

/// Krylov-subspace propagator: returns exp(-i H t) v with a local error
/// estimate below cfg.step_tolerance per substep. Substeps are halved until
/// the a-posteriori estimate passes. Requires Hermitian h and normalized v.
StateVector evolve(const SparseOperator& h, const StateVector& v, double t,
                   const PropagatorConfig& cfg = {});

struct EigenSystem {
    std::vector<double> eigenvalues;  // ascending
    Eigen::MatrixXcd eigenvectors;    // column k pairs with eigenvalues[k]
};

/// Dense exact diagonalization of a Hermitian operator. Guarded by max_dim.
EigenSystem exact_eigs(const SparseOperator& h, std::size_t max_dim = 5000);

} // namespace scarlab
