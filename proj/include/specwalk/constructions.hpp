#ifndef SPECWALK_CONSTRUCTIONS_HPP
#define SPECWALK_CONSTRUCTIONS_HPP

#include "specwalk/graph.hpp"

namespace specwalk {

struct JoinByPathResult {
    Graph graph;
    int u_image;  // u's index in the joined graph
    int v_image;  // v's index in the joined graph
};

/// Disjoint union of x and y with a path of `path_len` edges from u to v
/// (path_len = 1 is a direct edge). X keeps indices 0..|X|-1, Y is shifted
/// by |X|, internal path vertices come last. If u and v end up cospectral,
/// they are strongly cospectral in the result.
JoinByPathResult join_by_path(const Graph& x, int u, const Graph& y, int v, int path_len);

struct RabbitEarResult {
    Graph graph;
    int b;  // first new pendant
    int c;  // second new pendant
    // mult(0, phi(X-a)) <= mult(0, phi(X)), decided exactly; when true, the
    // two pendants are strongly cospectral.
    bool condition_holds;
};

/// Attach two new degree-one vertices to a.
RabbitEarResult rabbit_ear(const Graph& x, int a);

}  // namespace specwalk

#endif
