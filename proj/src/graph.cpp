#include "specwalk/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace specwalk {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw Error("negative vertex count");
    if (n > kMaxVertices)
        throw TooLarge("graph has " + std::to_string(n) + " vertices, cap is " +
                       std::to_string(kMaxVertices));
    stride_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

long Graph::edge_count() const {
    long twice = 0;
    for (std::uint64_t w : bits_) twice += std::popcount(w);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
    set_bit(u, v);
    set_bit(v, u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < stride_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(v) * stride_ + w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && test_bit(v, u)) out.push_back(u);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw DimensionMismatch("label count does not match vertex count");
    labels_ = std::move(labels);
}

// ---------------------------------------------------------------------------
// graph6 codec. Format: size field N(n), then the upper triangle in
// column-major order (bit (i,j) for j = 1..n-1, i < j), packed 6 bits per
// byte, each byte offset by 63. MSB of the 6-bit group first.

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

Graph parse_graph6(const std::string& s) {
    if (s.rfind(">>", 0) == 0)
        throw ParseError("graph6 header line is not accepted; strip it first", 0);
    std::size_t pos = 0;
    auto need = [&](const char* what) -> int {
        if (pos >= s.size())
            throw ParseError(std::string("unexpected end of graph6 data, wanted ") + what, pos);
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("byte outside graph6 range 63..126", pos);
        ++pos;
        return c - kG6Lo;
    };

    long n;
    int first = need("size field");
    if (first < 63) {
        n = first;
    } else {
        if (pos < s.size() && s[pos] == '~')
            throw ParseError("8-byte graph6 size field not supported", pos);
        long a = need("size byte"), b = need("size byte"), c = need("size byte");
        n = (a << 12) | (b << 6) | c;
        if (n <= 62)
            throw ParseError("long-form size field used for n <= 62", 0);
    }
    if (n > Graph::kMaxVertices)
        throw TooLarge("graph6 declares " + std::to_string(n) + " vertices");

    Graph g(static_cast<int>(n));
    int group = 0, remaining = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (remaining == 0) {
                group = need("edge bits");
                remaining = 6;
            }
            if (group & (1 << (remaining - 1))) g.add_edge(i, j);
            --remaining;
        }
    }
    if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0)
        throw ParseError("nonzero padding bits", pos - 1);
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Lo));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Lo));
    return out;
}

Graph parse_edgelist(const std::string& s) {
    std::istringstream in(s);
    std::string line;
    std::size_t lineno = 0;
    long n = -1, m = -1;

    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) throw ParseError("empty edgelist input", lineno);
    {
        std::istringstream head(line);
        std::string extra;
        if (!(head >> n >> m) || (head >> extra))
            throw ParseError("expected header line \"n m\"", lineno);
    }
    if (n < 0 || m < 0) throw ParseError("negative counts in header", lineno);
    Graph g(static_cast<int>(n));
    for (long k = 0; k < m; ++k) {
        if (!next_data_line())
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(k), lineno);
        long u, v;
        std::istringstream es(line);
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError("expected edge line \"u v\"", lineno);
        if (u < 0 || u >= n) throw ParseError("vertex " + std::to_string(u) + " out of range", lineno);
        if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", lineno);
        if (u == v) throw LoopError("loop at vertex " + std::to_string(u) +
                                    " on line " + std::to_string(lineno));
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw DuplicateEdgeError("duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v) + " on line " + std::to_string(lineno));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line()) throw ParseError("trailing data after last edge", lineno);
    return g;
}

std::string encode_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

std::string strip_line_ending(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

Graph load_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6:
            return parse_graph6(strip_line_ending(text));
        case GraphFormat::edgelist:
            return parse_edgelist(text);
        case GraphFormat::automatic: {
            try {
                return parse_graph6(strip_line_ending(text));
            } catch (const ParseError&) {
            }
            return parse_edgelist(text);
        }
    }
    throw Error("unreachable");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6:
            return encode_graph6(g);
        case GraphFormat::edgelist:
            return encode_edgelist(g);
        case GraphFormat::automatic:
            return encode_graph6(g);
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& to_delete) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : to_delete) {
        g.check_vertex(v);
        gone[v] = 1;
    }
    std::vector<int> old_to_new(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) old_to_new[v] = next++;
    Graph h(next);
    for (int u = 0; u < n; ++u) {
        if (gone[u]) continue;
        for (int v = u + 1; v < n; ++v)
            if (!gone[v] && g.adjacent(u, v)) h.add_edge(old_to_new[u], old_to_new[v]);
    }
    return {std::move(h), std::move(old_to_new)};
}

std::vector<int> distances(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int eccentricity(const Graph& g, int v) {
    int e = 0;
    for (int d : distances(g, v))
        if (d != kUnreachable) e = std::max(e, d);
    return e;
}

Partition distance_partition(const Graph& g, int v) {
    std::vector<int> dist = distances(g, v);
    int maxd = 0;
    bool any_unreachable = false;
    for (int d : dist) {
        if (d == kUnreachable)
            any_unreachable = true;
        else
            maxd = std::max(maxd, d);
    }
    std::vector<std::vector<int>> cells(maxd + 1 + (any_unreachable ? 1 : 0));
    for (int u = 0; u < g.vertex_count(); ++u)
        cells[dist[u] == kUnreachable ? maxd + 1 : dist[u]].push_back(u);
    return Partition::from_cells(g.vertex_count(), std::move(cells));
}

Graph distance_graph(const Graph& g, int r) {
    if (r < 1) throw Error("distance graph needs r >= 1");
    Graph h(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> dist = distances(g, v);
        for (int u = v + 1; u < g.vertex_count(); ++u)
            if (dist[u] == r) h.add_edge(v, u);
    }
    return h;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    for (int d : distances(g, 0))
        if (d == kUnreachable) return false;
    return true;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (static_cast<long>(ng) * nh > Graph::kMaxVertices)
        throw TooLarge("cartesian product too large");
    Graph p(ng * nh);
    auto id = [nh](int u, int v) { return u * nh + v; };
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) {
            for (int w : h.neighbors(v))
                if (w > v) p.add_edge(id(u, v), id(u, w));
            for (int w : g.neighbors(u))
                if (w > u) p.add_edge(id(u, v), id(w, v));
        }
    return p;
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::unit(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (n == 0) return Partition{{}, {}};
    return from_cells(n, {all});
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> cells(n);
    for (int v = 0; v < n; ++v) cells[v] = {v};
    return from_cells(n, std::move(cells));
}

Partition Partition::from_cells(int n, std::vector<std::vector<int>> cells) {
    Partition p;
    for (auto& c : cells) {
        if (c.empty()) throw Error("empty partition cell");
        std::sort(c.begin(), c.end());
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    p.cell_of.assign(n, -1);
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (int v : cells[i]) {
            if (v < 0 || v >= n) throw UnknownVertex(v);
            if (p.cell_of[v] != -1) throw Error("partition cells overlap");
            p.cell_of[v] = static_cast<int>(i);
        }
    for (int v = 0; v < n; ++v)
        if (p.cell_of[v] == -1) throw Error("partition does not cover all vertices");
    p.cells = std::move(cells);
    return p;
}

bool Partition::refines(const Partition& coarser) const {
    if (cell_of.size() != coarser.cell_of.size()) return false;
    for (const auto& cell : cells) {
        int target = coarser.cell_of[cell.front()];
        for (int v : cell)
            if (coarser.cell_of[v] != target) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Permutation

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image[v] != v) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image.assign(image.size(), 0);
    for (int v = 0; v < size(); ++v) inv.image[image[v]] = v;
    return inv;
}

Permutation Permutation::compose(const Permutation& then) const {
    Permutation r;
    r.image.reserve(image.size());
    for (int v = 0; v < size(); ++v) r.image.push_back(then.image[image[v]]);
    return r;
}

// ---------------------------------------------------------------------------
// Equitable partition refinement: split every cell by the vector of
// neighbour counts into the current cells, repeat to the fixed point.

Partition coarsest_equitable_partition(const Graph& g, const Partition& seeds) {
    const int n = g.vertex_count();
    if (static_cast<int>(seeds.cell_of.size()) != n)
        throw DimensionMismatch("seed partition size does not match graph");
    std::vector<std::vector<int>> cells = seeds.cells;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(n);
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (int v : cells[i]) cell_of[v] = static_cast<int>(i);

        std::vector<std::vector<int>> next;
        for (const auto& cell : cells) {
            // signature: counts of neighbours per current cell
            std::vector<std::pair<std::vector<int>, int>> sig;
            sig.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> counts(cells.size(), 0);
                for (int w : g.neighbors(v)) ++counts[cell_of[w]];
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            std::vector<int> current;
            for (std::size_t k = 0; k < sig.size(); ++k) {
                if (k > 0 && sig[k].first != sig[k - 1].first) {
                    next.push_back(std::move(current));
                    current.clear();
                    changed = true;
                }
                current.push_back(sig[k].second);
            }
            next.push_back(std::move(current));
        }
        cells = std::move(next);
    }
    return Partition::from_cells(n, std::move(cells));
}

bool is_equitable(const Graph& g, const Partition& p) {
    for (const auto& cell : p.cells) {
        std::vector<int> ref;
        bool first = true;
        for (int v : cell) {
            std::vector<int> counts(p.cells.size(), 0);
            for (int w : g.neighbors(v)) ++counts[p.cell_of[w]];
            if (first) {
                ref = counts;
                first = false;
            } else if (counts != ref) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Automorphisms: lexicographic backtracking over images, so the identity is
// emitted first. Candidate images are restricted to the vertex's cell in the
// coarsest equitable partition, which is preserved by every automorphism.

namespace {

void search_automorphisms(const Graph& g, const Partition& eq, std::vector<int>& image,
                          std::vector<char>& used, int v,
                          std::vector<Permutation>& out) {
    const int n = g.vertex_count();
    if (v == n) {
        out.push_back(Permutation{image});
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || eq.cell_of[w] != eq.cell_of[v]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) != g.adjacent(image[u], w)) ok = false;
        if (!ok) continue;
        image[v] = w;
        used[w] = 1;
        search_automorphisms(g, eq, image, used, v + 1, out);
        used[w] = 0;
    }
}

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit)
        throw TooLarge("automorphism search limited to " + std::to_string(limit) +
                       " vertices, got " + std::to_string(n));
    if (n == 0) return {Permutation{{}}};
    Partition eq = coarsest_equitable_partition(g, Partition::unit(n));
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::vector<Permutation> out;
    search_automorphisms(g, eq, image, used, 0, out);
    return out;
}

Partition orbit_partition(const Graph& g, int limit) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rep(n);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : automorphisms(g, limit))
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(perm(v));
            if (a != b) parent[a] = b;
        }
    std::vector<std::vector<int>> groups(n);
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& gcell : groups)
        if (!gcell.empty()) cells.push_back(std::move(gcell));
    return Partition::from_cells(n, std::move(cells));
}

}  // namespace specwalk
