#include "dynperc/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynperc {

void Lattice::build_adjacency(std::int32_t n_vertices) {
    degree_offset_.assign(static_cast<std::size_t>(n_vertices) + 1, 0);
    for (const auto& e : edges) {
        if (e[0] < 0 || e[0] >= n_vertices || e[1] < 0 || e[1] >= n_vertices)
            throw std::invalid_argument("lattice: edge endpoint out of range");
        if (e[0] == e[1]) throw std::invalid_argument("lattice: self-loop");
        ++degree_offset_[e[0] + 1];
        ++degree_offset_[e[1] + 1];
    }
    for (std::size_t v = 1; v < degree_offset_.size(); ++v) degree_offset_[v] += degree_offset_[v - 1];
    adj_.clear();
    adj_.resize(static_cast<std::size_t>(degree_offset_.back()));
    std::vector<std::int32_t> fill(degree_offset_.begin(), degree_offset_.end() - 1);
    for (std::int32_t e = 0; e < num_edges(); ++e) {
        const auto [u, v] = edges[e];
        adj_[fill[u]++] = {e, v};
        adj_[fill[v]++] = {e, u};
    }
    for (std::int32_t v = 0; v < n_vertices; ++v) {
        std::sort(adj_.begin() + degree_offset_[v], adj_.begin() + degree_offset_[v + 1],
                  [](const Incidence& a, const Incidence& b) {
                      return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
                  });
    }
}

Lattice Lattice::perfect_binary_tree(int depth) {
    if (depth < 1) throw std::invalid_argument("tree: depth must be >= 1");
    if (depth > 29) throw std::invalid_argument("tree: depth too large to materialize");
    Lattice lat;
    lat.kind = LatticeKind::PerfectBinaryTree;
    lat.depth = depth;
    lat.root = 0;
    const std::int32_t n_vertices = (std::int32_t{1} << (depth + 1)) - 1;
    lat.edges.reserve(n_vertices - 1);
    for (std::int32_t v = 1; v < n_vertices; ++v) lat.edges.push_back({(v - 1) / 2, v});
    lat.build_adjacency(n_vertices);
    return lat;
}

Lattice Lattice::torus(int dim, int side) {
    if (dim < 1) throw std::invalid_argument("torus: d must be >= 1");
    if (side < 3) throw std::invalid_argument("torus: L must be >= 3");
    double count = 1;
    for (int a = 0; a < dim; ++a) count *= side;
    if (count * dim > (1u << 30)) throw std::invalid_argument("torus: too many edges to materialize");

    Lattice lat;
    lat.kind = LatticeKind::Torus;
    lat.dim = dim;
    lat.side = side;
    const std::int32_t n_vertices = static_cast<std::int32_t>(count);

    // origin = all-zero coordinates
    std::vector<int> zeros(dim, 0);
    std::vector<std::int32_t> strides(dim);
    std::int32_t s = 1;
    for (int a = dim - 1; a >= 0; --a) {
        strides[a] = s;
        s *= side;
    }

    lat.edges.reserve(static_cast<std::size_t>(n_vertices) * dim);
    // vertex rank enumerates coordinates lexicographically; +axis neighbour
    // advances one coordinate with wraparound
    for (std::int32_t v = 0; v < n_vertices; ++v) {
        for (int a = 0; a < dim; ++a) {
            const std::int32_t digit = (v / strides[a]) % side;
            const std::int32_t u = (digit + 1 == side) ? v - digit * strides[a] : v + strides[a];
            lat.edges.push_back({v, u});
        }
    }
    lat.build_adjacency(n_vertices);
    lat.root = lat.vertex_at(zeros);
    return lat;
}

Lattice Lattice::edge_list(std::vector<std::array<std::int32_t, 2>> edges, std::int32_t root) {
    if (edges.empty()) throw std::invalid_argument("edge-list: no edges");
    Lattice lat;
    lat.kind = LatticeKind::EdgeList;
    lat.edges = std::move(edges);
    std::int32_t n_vertices = 0;
    for (const auto& e : lat.edges) n_vertices = std::max({n_vertices, e[0] + 1, e[1] + 1});
    if (root < 0 || root >= n_vertices) throw std::invalid_argument("edge-list: root out of range");
    lat.root = root;
    lat.build_adjacency(n_vertices);
    return lat;
}

void Lattice::vertex_coords(std::int32_t v, std::vector<int>& out) const {
    out.assign(dim, 0);
    for (int a = dim - 1; a >= 0; --a) {
        out[a] = static_cast<int>(v % side) + coord_min();
        v /= side;
    }
}

std::int32_t Lattice::vertex_at(const std::vector<int>& coords) const {
    std::int32_t v = 0;
    for (int a = 0; a < dim; ++a) {
        int c = coords[a] - coord_min();
        c %= side;
        if (c < 0) c += side;
        v = v * side + c;
    }
    return v;
}

bool Lattice::edge_wraps(std::int32_t e) const {
    if (kind != LatticeKind::Torus) return false;
    const int axis = static_cast<int>(e % dim);
    std::int32_t v = edges[e][0];
    for (int a = dim - 1; a > axis; --a) v /= side;
    return static_cast<int>(v % side) + 1 == side;
}

std::string Lattice::describe() const {
    switch (kind) {
        case LatticeKind::PerfectBinaryTree:
            return "tree(depth=" + std::to_string(depth) + ")";
        case LatticeKind::Torus:
            return "torus(d=" + std::to_string(dim) + ",L=" + std::to_string(side) + ")";
        default:
            return "edge-list(|V|=" + std::to_string(num_vertices()) +
                   ",|B|=" + std::to_string(num_edges()) + ")";
    }
}

}  // namespace dynperc
