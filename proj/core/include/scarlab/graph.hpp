#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace scarlab {

/// Undirected simple graph over dense 0-indexed vertices. Edges are kept
/// sorted as (u, v) with u < v and deduplicated; two graphs are equal iff
/// their vertex counts and edge sets are equal.
class Graph {
public:
    Graph() = default;
    Graph(int n_vertices, std::vector<std::pair<int, int>> edges);

    int n_vertices() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    /// Bitmask of neighbors of v. Only available for n_vertices <= 64.
    std::uint64_t neighbor_mask(int v) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    /// Text format: first line "n_vertices", then one "u v" edge per line
    /// with u < v, lines sorted ascending.
    static Graph parse(std::istream& in);
    static Graph load(const std::string& path);
    void write(std::ostream& out) const;
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::uint64_t> neighbor_masks_;
};

} // namespace scarlab
