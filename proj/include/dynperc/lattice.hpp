#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dynperc {

enum class LatticeKind { PerfectBinaryTree, Torus, EdgeList };

/// Edge-indexed graph with a distinguished root/origin vertex.
///
/// Edge id conventions (stable across runs, used by all file formats):
///   - perfect binary tree of depth n: vertices 0..2^{n+1}-2 in breadth-first
///     order, edge id v-1 joins vertex v >= 1 to its parent (v-1)/2;
///   - torus of dimension d, side L: vertices are coordinates in
///     [-L/2, L/2)^d (integer), identified with their lexicographic rank;
///     edge id = d*rank(v) + axis joins v to its +axis neighbour (wrapping);
///   - edge-list: ids follow the order edges were given.
class Lattice {
public:
    LatticeKind kind = LatticeKind::EdgeList;
    int depth = 0;  // tree
    int dim = 0;    // torus
    int side = 0;   // torus

    std::int32_t root = 0;
    std::vector<std::array<std::int32_t, 2>> edges;

    std::int32_t num_vertices() const { return static_cast<std::int32_t>(degree_offset_.size()) - 1; }
    std::int32_t num_edges() const { return static_cast<std::int32_t>(edges.size()); }

    struct Incidence {
        std::int32_t edge;
        std::int32_t neighbor;
    };

    // incident edges of v, neighbors in increasing vertex-id order
    const Incidence* adj_begin(std::int32_t v) const { return adj_.data() + degree_offset_[v]; }
    const Incidence* adj_end(std::int32_t v) const { return adj_.data() + degree_offset_[v + 1]; }
    std::int32_t degree(std::int32_t v) const { return degree_offset_[v + 1] - degree_offset_[v]; }

    // --- torus coordinate codec ---
    // coordinate range per axis is [coord_min(), coord_min()+L)
    int coord_min() const { return -(side / 2); }
    void vertex_coords(std::int32_t v, std::vector<int>& out) const;
    std::int32_t vertex_at(const std::vector<int>& coords) const;
    // true if the given torus edge wraps around its axis
    bool edge_wraps(std::int32_t e) const;

    std::string describe() const;

    // builders; validate parameters and internal invariants
    static Lattice perfect_binary_tree(int depth);
    static Lattice torus(int dim, int side);
    static Lattice edge_list(std::vector<std::array<std::int32_t, 2>> edges, std::int32_t root);

private:
    void build_adjacency(std::int32_t n_vertices);
    std::vector<std::int32_t> degree_offset_;
    std::vector<Incidence> adj_;
};

}  // namespace dynperc
