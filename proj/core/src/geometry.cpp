#include "scarlab/geometry.hpp"

#include "scarlab/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace scarlab {

namespace {

std::string edge_name(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

PairingPattern::PairingPattern(std::vector<std::pair<int, int>> pairs) {
    if (pairs.empty()) throw std::invalid_argument("PairingPattern: empty pair list");
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    const int n = 2 * static_cast<int>(pairs.size());
    partner_.assign(n, -1);
    is_a_side_.assign(n, 0);
    for (const auto& [a, b] : pairs) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
            throw std::invalid_argument("PairingPattern: pair members must be distinct labels in [0, 2L)");
        }
        if (partner_[a] != -1 || partner_[b] != -1) {
            throw std::invalid_argument("PairingPattern: pairs are not disjoint");
        }
        partner_[a] = b;
        partner_[b] = a;
        is_a_side_[a] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (partner_[v] == -1) {
            throw std::invalid_argument("PairingPattern: vertex " + std::to_string(v) + " is unpaired");
        }
    }
    pairs_ = std::move(pairs);
    a_side_sorted_.reserve(pairs_.size());
    for (const auto& p : pairs_) a_side_sorted_.push_back(p.first);
}

int PairingPattern::partner(int v) const {
    if (v < 0 || v >= n_vertices()) throw std::out_of_range("PairingPattern::partner: vertex out of range");
    return partner_[v];
}

bool PairingPattern::is_a_side(int v) const {
    if (v < 0 || v >= n_vertices()) throw std::out_of_range("PairingPattern::is_a_side: vertex out of range");
    return is_a_side_[v] != 0;
}

PairingPattern PairingPattern::parse(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    int a, b;
    while (in >> a >> b) pairs.emplace_back(a, b);
    return PairingPattern(std::move(pairs));
}

PairingPattern PairingPattern::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("PairingPattern::load: cannot open " + path);
    return parse(in);
}

void PairingPattern::write(std::ostream& out) const {
    for (const auto& [a, b] : pairs_) out << a << " " << b << "\n";
}

namespace {

Graph make_chain(int length, bool periodic) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < length; ++i) edges.emplace_back(i, i + 1);
    if (periodic) edges.emplace_back(length - 1, 0);
    return Graph(length, std::move(edges));
}

PairingPattern shift_pairing(int half) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(half);
    for (int i = 0; i < half; ++i) pairs.emplace_back(i, i + half);
    return PairingPattern(std::move(pairs));
}

Geometry make_dangler(int length) {
    // Two open L-chains joined by the single cross edge between A-site 0
    // and the copy of site 1; the copy of site 0 stays pendant.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < length; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(length + i, length + i + 1);
    }
    edges.emplace_back(0, length + 1);
    return Geometry{Graph(2 * length, std::move(edges)), shift_pairing(length)};
}

Graph make_lattice(int width, int height, bool periodic_x) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < height; ++y) {
            if (y + 1 < height) edges.emplace_back(grid_vertex(x, y, height), grid_vertex(x, y + 1, height));
            if (x + 1 < width) {
                edges.emplace_back(grid_vertex(x, y, height), grid_vertex(x + 1, y, height));
            } else if (periodic_x) {
                edges.emplace_back(grid_vertex(x, y, height), grid_vertex(0, y, height));
            }
        }
    }
    return Graph(width * height, std::move(edges));
}

} // namespace

Geometry build_geometry(const GeometryDescriptor& spec) {
    using Kind = GeometryDescriptor::Kind;
    const int L = spec.length;
    const int M = spec.height;
    if (L < 2) throw std::invalid_argument("build_geometry: size parameter must be >= 2");

    switch (spec.kind) {
        case Kind::ChainObc:
            return Geometry{make_chain(L, false), std::nullopt};
        case Kind::ChainPbc:
            return Geometry{make_chain(L, true), std::nullopt};
        case Kind::RingDoubled:
            return Geometry{make_chain(2 * L, true), shift_pairing(L)};
        case Kind::Dangler:
            return make_dangler(L);
        case Kind::DecoupledChainsObc: {
            auto [g, p] = disjoint_double(make_chain(L, false));
            return Geometry{std::move(g), std::move(p)};
        }
        case Kind::DecoupledChainsPbc: {
            auto [g, p] = disjoint_double(make_chain(L, true));
            return Geometry{std::move(g), std::move(p)};
        }
        case Kind::Grid: {
            if (L % 2 != 0) throw std::invalid_argument("build_geometry: grid width must be even");
            if (M < 2) throw std::invalid_argument("build_geometry: grid height must be >= 2");
            if (M % 2 != 0) {
                // Point-reflection pairing degenerates for odd heights: the
                // middle-row pair at the seam columns would sit on an edge.
                throw std::invalid_argument("build_geometry: grid construction requires even height");
            }
            std::vector<std::pair<int, int>> pairs;
            for (int x = 0; x < L / 2; ++x)
                for (int y = 0; y < M; ++y)
                    pairs.emplace_back(grid_vertex(x, y, M), grid_vertex(L - 1 - x, M - 1 - y, M));
            return Geometry{make_lattice(L, M, false), PairingPattern(std::move(pairs))};
        }
        case Kind::CylinderPbcLadder:
        case Kind::CylinderMoebius:
        case Kind::CylinderObcLadder: {
            if (L % 2 != 0) throw std::invalid_argument("build_geometry: cylinder circumference must be even");
            if (L < 4) throw std::invalid_argument("build_geometry: cylinder circumference must be >= 4");
            if (M < 2) throw std::invalid_argument("build_geometry: cylinder height must be >= 2");
            const int half = L / 2;
            std::vector<std::pair<int, int>> pairs;
            for (int x = 0; x < half; ++x) {
                for (int y = 0; y < M; ++y) {
                    int px, py;
                    switch (spec.kind) {
                        case Kind::CylinderPbcLadder:
                            px = x + half;
                            py = y;
                            break;
                        case Kind::CylinderMoebius:
                            px = x + half;
                            py = M - 1 - y;
                            break;
                        default: // CylinderObcLadder
                            if (M % 2 != 0) {
                                throw std::invalid_argument(
                                    "build_geometry: obc_ladder cylinder works only when the height is even");
                            }
                            px = L - 1 - x;
                            py = M - 1 - y;
                            break;
                    }
                    pairs.emplace_back(grid_vertex(x, y, M), grid_vertex(px, py, M));
                }
            }
            return Geometry{make_lattice(L, M, true), PairingPattern(std::move(pairs))};
        }
    }
    throw std::invalid_argument("build_geometry: unsupported descriptor");
}

std::pair<Graph, PairingPattern> disjoint_double(const Graph& g_a) {
    const int half = g_a.n_vertices();
    if (half < 1) throw std::invalid_argument("disjoint_double: empty graph");
    std::vector<std::pair<int, int>> edges = g_a.edges();
    for (const auto& [u, v] : g_a.edges()) edges.emplace_back(u + half, v + half);
    return {Graph(2 * half, std::move(edges)), shift_pairing(half)};
}

Graph apply_w(const Graph& g, const PairingPattern& pairing, const WMove& move) {
    if (pairing.n_vertices() != g.n_vertices()) {
        throw std::invalid_argument("apply_w: pairing does not cover the graph");
    }
    const int a = move.a;
    const int b = move.b;
    if (a == b) throw std::invalid_argument("apply_w: move endpoints must differ");
    const int abar = pairing.partner(a);
    const int bbar = pairing.partner(b);
    if (!g.has_edge(a, bbar)) {
        throw std::invalid_argument("apply_w: trivial move, missing cross edge " + edge_name(a, bbar));
    }
    if (!g.has_edge(abar, b)) {
        throw std::invalid_argument("apply_w: trivial move, missing cross edge " + edge_name(abar, b));
    }
    if (move.sign == WMove::Sign::Plus) {
        if (g.has_edge(a, b)) {
            throw std::invalid_argument("apply_w: trivial move, edge " + edge_name(a, b) + " already present");
        }
        return g.with_edge(a, b);
    }
    if (!g.has_edge(a, b)) {
        throw std::invalid_argument("apply_w: trivial move, edge " + edge_name(a, b) + " absent");
    }
    return g.without_edge(a, b);
}

std::optional<Graph> check_lambda_condition(const Graph& g, const PairingPattern& pairing) {
    if (pairing.n_vertices() != g.n_vertices()) {
        throw std::invalid_argument("check_lambda_condition: pairing does not cover the graph");
    }
    const auto& a_side = pairing.a_side();
    const int half = static_cast<int>(a_side.size());

    // Dense half-graph label for each A-side vertex.
    std::vector<int> half_label(g.n_vertices(), -1);
    for (int k = 0; k < half; ++k) half_label[a_side[k]] = k;

    const auto fold = [&](int v) {
        return pairing.is_a_side(v) ? v : pairing.partner(v);
    };

    std::vector<std::pair<int, int>> half_edges;
    for (const auto& [i, ibar] : pairing.pairs()) {
        if (g.has_edge(i, ibar)) return std::nullopt; // blockade would freeze the pair
        std::set<int> folded_i, folded_ibar;
        for (int j : g.neighbors(i)) folded_i.insert(fold(j));
        for (int j : g.neighbors(ibar)) folded_ibar.insert(fold(j));
        if (folded_i != folded_ibar) return std::nullopt;
        for (int j : folded_i) {
            const int ki = half_label[i];
            const int kj = half_label[j];
            if (ki < kj) half_edges.emplace_back(ki, kj);
        }
    }
    return Graph(half, std::move(half_edges));
}

namespace {

void enumerate_matchings(std::vector<int>& unmatched,
                         std::vector<std::pair<int, int>>& current,
                         const Graph& g,
                         std::vector<std::pair<PairingPattern, Graph>>& out) {
    if (unmatched.empty()) {
        PairingPattern pairing(current);
        if (auto half = check_lambda_condition(g, pairing)) {
            out.emplace_back(std::move(pairing), std::move(*half));
        }
        return;
    }
    const int a = unmatched.front();
    for (std::size_t j = 1; j < unmatched.size(); ++j) {
        const int b = unmatched[j];
        if (g.has_edge(a, b)) continue; // pair on an edge can never certify
        std::vector<int> rest;
        rest.reserve(unmatched.size() - 2);
        for (std::size_t k = 1; k < unmatched.size(); ++k) {
            if (k != j) rest.push_back(unmatched[k]);
        }
        current.emplace_back(a, b);
        enumerate_matchings(rest, current, g, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::pair<PairingPattern, Graph>> search_pairings(const Graph& g, int max_vertices) {
    const int n = g.n_vertices();
    if (n % 2 != 0) throw std::invalid_argument("search_pairings: odd vertex count has no perfect matching");
    if (n > max_vertices) {
        throw DimensionLimitError("search_pairings: " + std::to_string(n) + " vertices exceeds limit of " +
                                  std::to_string(max_vertices) + " ((n-1)!! matchings)");
    }
    std::vector<int> unmatched(n);
    for (int v = 0; v < n; ++v) unmatched[v] = v;
    std::vector<std::pair<int, int>> current;
    std::vector<std::pair<PairingPattern, Graph>> out;
    enumerate_matchings(unmatched, current, g, out);
    return out;
}

} // namespace scarlab
