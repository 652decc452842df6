#pragma once

#include "scarlab/dynamics.hpp"
#include "scarlab/entanglement.hpp"
#include "scarlab/operators.hpp"
#include "scarlab/scars.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace scarlab {

struct PrepStep {
    int k = 0;                    // number of successful measurements so far
    double conditional_prob = 1;  // success probability of the k-th measurement
    double cumulative_prob = 1;   // probability of k consecutive successes
    double infidelity = 0;        // 1 - |<target|psi_k>|^2
    double time = 0;              // k * tau
};

struct PrepTrace {
    std::vector<PrepStep> steps;  // step 0 is the initial state
    bool annihilated = false;     // all amplitude projected away before k_max
};

/// Measurement-postselection preparation: repeats (evolve by tau, project
/// onto matching bits of every measured pair, renormalize), recording
/// conditional and cumulative success probabilities and the infidelity
/// against the target state.
PrepTrace prepare(const SparseOperator& h, const std::vector<std::pair<int, int>>& measured_pairs,
                  double tau, int k_max, const StateVector& psi0, const StateVector& target,
                  const PropagatorConfig& cfg = {});

/// Product of pair singlet-like states (|00> - |11>)/sqrt(2) on every other
/// pair, |00> on the rest, embedded into the blockaded basis. Requires even
/// L; the overlap with the correlated eigenstate is 2^{L/4} times that of
/// the all-empty state.
StateVector bell_initial_state(int L, std::shared_ptr<const BlockadedBasis> full,
                               const PairingPattern& pairing);

struct QuenchRecord {
    double time = 0;
    std::vector<double> zz;        // <Z_a Z_b> per observable pair
    double entropy_standard = 0;   // standard half cut
    double entropy_min_cut = 0;    // entanglement-minimizing half cut
};

struct QuenchTrace {
    std::vector<std::pair<int, int>> pairs;
    std::vector<QuenchRecord> records;
};

QuenchTrace quench(const SparseOperator& h, const StateVector& psi_init,
                   const std::vector<double>& times,
                   const std::vector<std::pair<int, int>>& observable_pairs,
                   const Bipartition& standard_cut, const Bipartition& min_cut,
                   const PropagatorConfig& cfg = {});

enum class OtocMode {
    Approx, // dangler Hamiltonian: correlators proxy the OTOC before the butterfly time
    Exact,  // decoupled-chains Hamiltonian: correlators equal the OTOC at all times
};

/// Cross-pair correlator series <Z_i Z_ibar>(t) from the quench that starts
/// in Z applied to the last site of the correlated state of the doubled
/// open chain of half size L. In Exact mode this equals the
/// infinite-temperature out-of-time-order correlator of the half chain.
std::vector<double> otoc(const Graph& g_a, int site, const std::vector<double>& times, OtocMode mode,
                         const PropagatorConfig& cfg = {});

/// First grid time at which the series drops below the threshold, if any.
std::optional<double> first_crossing(const std::vector<double>& times,
                                     const std::vector<double>& series, double threshold);

/// H plus random Zeeman fields delta_i Z_i with delta_i drawn from
/// NormalSampler(seed) as N(mean, sigma^2), in vertex order.
SparseOperator perturb(const SparseOperator& h, const Graph& g, double mean, double sigma,
                       std::uint64_t seed);

} // namespace scarlab
