#pragma once

#include "scarlab/geometry.hpp"
#include "scarlab/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace scarlab {

struct EnumerationLimits {
    int max_vertices = 34;
    std::size_t max_states = 32'000'000;
};

/// All Rydberg-blockaded configurations (independent sets) of a graph, as
/// bitstrings in ascending numeric order. Bit v of a state is the occupation
/// of vertex v, least significant bit = vertex 0; every module shares this
/// convention. State 0 (all empty) is always at position 0. Immutable after
/// construction; concurrent reads are safe.
class BlockadedBasis {
public:
    BlockadedBasis(Graph graph, std::vector<std::uint64_t> states);

    const Graph& graph() const { return graph_; }
    std::size_t dim() const { return states_.size(); }
    std::uint64_t state(std::size_t k) const { return states_[k]; }
    const std::vector<std::uint64_t>& states() const { return states_; }

    bool contains(std::uint64_t s) const;
    /// Position of a bitstring in the canonical order (binary search).
    /// Throws std::out_of_range when the string is not blockaded.
    std::size_t index(std::uint64_t s) const;

private:
    Graph graph_;
    std::vector<std::uint64_t> states_;
};

std::shared_ptr<const BlockadedBasis> enumerate_blockaded(const Graph& g,
                                                          const EnumerationLimits& limits = {});

/// Index in `full` of the doubled bitstring that carries bit f_k on both
/// members of the k-th pair (pairs ordered by A-side label, matching the
/// half-graph labels derived by check_lambda_condition). Throws when f is
/// not in `half`, or when the doubled string is not blockaded on the full
/// graph, which signals an uncertified geometry/pairing combination.
std::size_t embed_product(const BlockadedBasis& half, const PairingPattern& pairing,
                          const BlockadedBasis& full, std::uint64_t f);

} // namespace scarlab
