#pragma once

#include "scarlab/graph.hpp"

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace scarlab {

/// Perfect matching of a graph's vertices into L disjoint ordered pairs
/// (a, abar). The first member of each pair is the designated A-side label;
/// the pair list is kept sorted by A-side label. Pairs of spins carrying
/// the same bit value in a correlated eigenstate.
class PairingPattern {
public:
    explicit PairingPattern(std::vector<std::pair<int, int>> pairs);

    int n_pairs() const { return static_cast<int>(pairs_.size()); }
    int n_vertices() const { return 2 * n_pairs(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int partner(int v) const;
    bool is_a_side(int v) const;
    /// A-side labels in ascending order. Half-graph label k corresponds to
    /// full-graph vertex a_side()[k]; all modules share this convention.
    const std::vector<int>& a_side() const { return a_side_sorted_; }

    bool operator==(const PairingPattern& other) const { return pairs_ == other.pairs_; }

    /// Text format: one "i j" line per pair.
    static PairingPattern parse(std::istream& in);
    static PairingPattern load(const std::string& path);
    void write(std::ostream& out) const;

private:
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> partner_;
    std::vector<char> is_a_side_;
    std::vector<int> a_side_sorted_;
};

/// Edge-rewiring move: W+ adds edge (a,b), W- removes it. Legal only when
/// the cross edges (a, partner(b)) and (partner(a), b) are present.
struct WMove {
    enum class Sign { Plus, Minus };
    Sign sign;
    int a;
    int b;
};

struct GeometryDescriptor {
    enum class Kind {
        ChainObc,            // L-site open chain, no pairing
        ChainPbc,            // L-site ring, no pairing
        RingDoubled,         // 2L-site ring, pairing (i, i+L)
        Dangler,             // doubled L-site open chain with one cross edge
        Grid,                // width x height open square lattice, width even
        CylinderPbcLadder,   // width x height cylinder, translation pairing
        CylinderMoebius,     // width x height cylinder, row-flip pairing
        CylinderObcLadder,   // width x height cylinder, reflection pairing (height even)
        DecoupledChainsObc,  // two disjoint L-site open chains, pairing (i, i+L)
        DecoupledChainsPbc,  // two disjoint L-site rings, pairing (i, i+L)
    };
    Kind kind;
    int length = 0; // L for chains/ring/dangler/decoupled; full width for grid/cylinder
    int height = 0; // M for grid/cylinder
};

struct Geometry {
    Graph graph;
    std::optional<PairingPattern> pairing;
};

/// Vertex index of grid/cylinder site (column x, row y), column-major.
inline int grid_vertex(int x, int y, int height) { return x * height + y; }

Geometry build_geometry(const GeometryDescriptor& spec);

/// Two disjoint copies of g_a (copy labels shifted by L) with pairing (i, i+L).
std::pair<Graph, PairingPattern> disjoint_double(const Graph& g_a);

/// Applies a single W move. Throws std::invalid_argument on a trivial move,
/// naming the missing or extra edge.
Graph apply_w(const Graph& g, const PairingPattern& pairing, const WMove& move);

/// Folded-neighborhood test: for every pair (i, ibar) the neighborhoods of i
/// and ibar, mapped through the A-side projection u (identity on A-side
/// labels, partner on the rest), must coincide. On success returns the
/// derived half graph over dense labels ordered like pairing.a_side(),
/// certifying that the correlated state built from its blockaded set is an
/// exact eigenstate. Returns nullopt otherwise, including when some pair is
/// itself an edge of g.
std::optional<Graph> check_lambda_condition(const Graph& g, const PairingPattern& pairing);

/// Enumerates all perfect matchings of g's vertices (lexicographic order)
/// and keeps those passing check_lambda_condition, each with its derived
/// half graph. Guarded by max_vertices: the matching count grows as
/// (n-1)!! and is unreasonable past ~16 vertices.
std::vector<std::pair<PairingPattern, Graph>> search_pairings(const Graph& g,
                                                              int max_vertices = 16);

} // namespace scarlab
