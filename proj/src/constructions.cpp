#include "specwalk/constructions.hpp"

#include "specwalk/exact.hpp"
#include "specwalk/poly.hpp"

namespace specwalk {

JoinByPathResult join_by_path(const Graph& x, int u, const Graph& y, int v, int path_len) {
    x.check_vertex(u);
    y.check_vertex(v);
    if (path_len < 1) throw InvalidLength("join path needs at least one edge");
    const int nx = x.vertex_count(), ny = y.vertex_count();
    const int internal = path_len - 1;
    Graph z(nx + ny + internal);
    for (int a = 0; a < nx; ++a)
        for (int b = a + 1; b < nx; ++b)
            if (x.adjacent(a, b)) z.add_edge(a, b);
    for (int a = 0; a < ny; ++a)
        for (int b = a + 1; b < ny; ++b)
            if (y.adjacent(a, b)) z.add_edge(nx + a, nx + b);
    int prev = u;
    for (int k = 0; k < internal; ++k) {
        int w = nx + ny + k;
        z.add_edge(prev, w);
        prev = w;
    }
    z.add_edge(prev, nx + v);
    return {std::move(z), u, nx + v};
}

RabbitEarResult rabbit_ear(const Graph& x, int a) {
    x.check_vertex(a);
    const int n = x.vertex_count();
    Graph z(n + 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (x.adjacent(u, v)) z.add_edge(u, v);
    z.add_edge(a, n);
    z.add_edge(a, n + 1);

    IntPoly phi = char_poly(x);
    IntPoly phi_a = char_poly_deleted(x, {a});  // phi of the empty graph is 1
    int mult_deleted = zero_multiplicity(phi_a);
    int mult_whole = zero_multiplicity(phi);
    return {std::move(z), n, n + 1, mult_deleted <= mult_whole};
}

}  // namespace specwalk
