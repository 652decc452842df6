#include "scarlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scarlab {

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges) : n_(n_vertices) {
    if (n_vertices < 0) {
        throw std::invalid_argument("Graph: negative vertex count");
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw std::invalid_argument("Graph: edge endpoint out of range");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    if (n_ <= 64) {
        neighbor_masks_.assign(n_, 0);
        for (const auto& [u, v] : edges_) {
            neighbor_masks_[u] |= std::uint64_t{1} << v;
            neighbor_masks_[v] |= std::uint64_t{1} << u;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors: vertex out of range");
    return adjacency_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::uint64_t Graph::neighbor_mask(int v) const {
    if (n_ > 64) throw std::out_of_range("Graph::neighbor_mask: only available for n <= 64");
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbor_mask: vertex out of range");
    return neighbor_masks_[v];
}

Graph Graph::with_edge(int u, int v) const {
    auto edges = edges_;
    edges.emplace_back(u, v);
    return Graph(n_, std::move(edges));
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto edges = edges_;
    const auto it = std::find(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end()) {
        throw std::invalid_argument("Graph::without_edge: edge not present");
    }
    edges.erase(it);
    return Graph(n_, std::move(edges));
}

Graph Graph::parse(std::istream& in) {
    int n = -1;
    if (!(in >> n) || n < 0) {
        throw std::invalid_argument("Graph::parse: missing or invalid vertex count");
    }
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph Graph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("Graph::load: cannot open " + path);
    return parse(in);
}

void Graph::write(std::ostream& out) const {
    out << n_ << "\n";
    for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
}

std::string Graph::to_string() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

} // namespace scarlab
