#include "scarlab/basis.hpp"

#include "scarlab/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scarlab {

BlockadedBasis::BlockadedBasis(Graph graph, std::vector<std::uint64_t> states)
    : graph_(std::move(graph)), states_(std::move(states)) {}

bool BlockadedBasis::contains(std::uint64_t s) const {
    return std::binary_search(states_.begin(), states_.end(), s);
}

std::size_t BlockadedBasis::index(std::uint64_t s) const {
    const auto it = std::lower_bound(states_.begin(), states_.end(), s);
    if (it == states_.end() || *it != s) {
        throw std::out_of_range("BlockadedBasis::index: bitstring not in the blockaded set");
    }
    return static_cast<std::size_t>(it - states_.begin());
}

namespace {

// Depth-first enumeration deciding vertices from most significant to least,
// empty branch first, which emits independent sets in ascending numeric
// order without a final sort.
void enumerate_rec(const Graph& g, int v, std::uint64_t acc, std::uint64_t blocked,
                   std::vector<std::uint64_t>& out, std::size_t max_states) {
    if (v < 0) {
        if (out.size() >= max_states) {
            throw DimensionLimitError("enumerate_blockaded: dimension exceeds budget of " +
                                      std::to_string(max_states) + " states");
        }
        out.push_back(acc);
        return;
    }
    enumerate_rec(g, v - 1, acc, blocked, out, max_states);
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (!(blocked & bit)) {
        enumerate_rec(g, v - 1, acc | bit, blocked | g.neighbor_mask(v), out, max_states);
    }
}

} // namespace

std::shared_ptr<const BlockadedBasis> enumerate_blockaded(const Graph& g,
                                                          const EnumerationLimits& limits) {
    if (g.n_vertices() > limits.max_vertices) {
        throw DimensionLimitError("enumerate_blockaded: " + std::to_string(g.n_vertices()) +
                                  " vertices exceeds the cap of " + std::to_string(limits.max_vertices));
    }
    std::vector<std::uint64_t> states;
    enumerate_rec(g, g.n_vertices() - 1, 0, 0, states, limits.max_states);
    return std::make_shared<BlockadedBasis>(g, std::move(states));
}

std::size_t embed_product(const BlockadedBasis& half, const PairingPattern& pairing,
                          const BlockadedBasis& full, std::uint64_t f) {
    if (!half.contains(f)) {
        throw std::invalid_argument("embed_product: bitstring is not blockaded on the half graph");
    }
    const auto& pairs = pairing.pairs();
    std::uint64_t doubled = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (f & (std::uint64_t{1} << k)) {
            doubled |= std::uint64_t{1} << pairs[k].first;
            doubled |= std::uint64_t{1} << pairs[k].second;
        }
    }
    if (!full.contains(doubled)) {
        throw std::invalid_argument(
            "embed_product: doubled bitstring violates the full blockade (uncertified geometry/pairing)");
    }
    return full.index(doubled);
}

} // namespace scarlab
