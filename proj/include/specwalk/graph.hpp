#ifndef SPECWALK_GRAPH_HPP
#define SPECWALK_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specwalk/errors.hpp"
#include "specwalk/matrix.hpp"

namespace specwalk {

/// Simple undirected graph on vertices 0..n-1, adjacency kept as packed
/// bitset rows. Immutable by convention once built (all library operations
/// take it const and return new graphs).
class Graph {
public:
    static constexpr int kMaxVertices = 10000;

    Graph() : n_(0), stride_(0) {}
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long edge_count() const;

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && test_bit(u, v);
    }

    /// Idempotent; rejects loops.
    void add_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    template <typename T>
    Mat<T> adjacency() const {
        Mat<T> a(n_, n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && test_bit(u, v)) a(u, v) = T(1);
        return a;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw UnknownVertex(v);
    }

private:
    bool test_bit(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1u;
    }
    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * stride_ + v / 64] |= std::uint64_t(1) << (v % 64);
    }

    int n_;
    int stride_;  // 64-bit words per adjacency row
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

/// Partition of 0..n-1 into nonempty disjoint cells.
struct Partition {
    std::vector<std::vector<int>> cells;
    std::vector<int> cell_of;

    static Partition unit(int n);        // one cell {0..n-1}
    static Partition singletons(int n);  // n cells

    /// Builds cell_of and validates the cells against n; cells are sorted
    /// internally and ordered by smallest element.
    static Partition from_cells(int n, std::vector<std::vector<int>> cells);

    int size() const { return static_cast<int>(cell_of.size()); }
    bool operator==(const Partition& o) const { return cells == o.cells; }

    /// True if every cell of *this is contained in a cell of coarser.
    bool refines(const Partition& coarser) const;
};

/// Vertex permutation given by its image array.
struct Permutation {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[v]; }
    bool is_identity() const;
    Permutation inverse() const;
    Permutation compose(const Permutation& then) const;  // (then ∘ this)
    bool operator==(const Permutation& o) const { return image == o.image; }
};

enum class GraphFormat { graph6, edgelist, automatic };

/// Parses graph6 (short and 4-byte long form) or the "n m\nu v..." edgelist
/// format. `automatic` tries graph6 first, then edgelist. Header lines such
/// as ">>graph6<<" are rejected, not skipped.
Graph load_graph(const std::string& text, GraphFormat format = GraphFormat::automatic);

std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::graph6);

struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
};

/// Induced subgraph on V \ S, remaining vertices relabeled order-preservingly.
DeletionResult delete_vertices(const Graph& g, const std::vector<int>& to_delete);

constexpr int kUnreachable = -1;

/// BFS distances from v; kUnreachable for vertices in other components.
std::vector<int> distances(const Graph& g, int v);

/// Largest finite BFS distance from v.
int eccentricity(const Graph& g, int v);

/// Cells ordered by distance 0,1,2,...; unreachable vertices, if any, form
/// the final cell.
Partition distance_partition(const Graph& g, int v);

/// X_r: same vertex set, u ~ v iff dist(u, v) = r in g. r >= 1.
Graph distance_graph(const Graph& g, int r);

bool is_connected(const Graph& g);

/// Cartesian product: (u,v) ~ (u',v') iff (u = u' and v ~ v') or
/// (v = v' and u ~ u'). Vertex (u,v) gets index u*|V(h)| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

constexpr int kDefaultAutomorphismLimit = 12;

/// Full automorphism group by backtracking, identity first, images in
/// lexicographic order. Pruned with the coarsest equitable partition, but
/// still exponential; refuses n > limit.
std::vector<Permutation> automorphisms(const Graph& g,
                                       int limit = kDefaultAutomorphismLimit);

/// Coarsest equitable partition refining `seeds` (iterated splitting by
/// neighbour counts into the current cells).
Partition coarsest_equitable_partition(const Graph& g, const Partition& seeds);

/// Every pair of vertices in the same cell sees the same number of
/// neighbours in every cell.
bool is_equitable(const Graph& g, const Partition& p);

/// Orbits of the automorphism group (uses `automorphisms`, same limit).
Partition orbit_partition(const Graph& g, int limit = kDefaultAutomorphismLimit);

}  // namespace specwalk

#endif
