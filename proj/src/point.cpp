#include "ptri/point.hpp"

#include <algorithm>

#include "ptri/matrix.hpp"

namespace ptri {

std::string to_string(const Point& p) {
    std::string s = "(";
    for (int i = 0; i < p.n; ++i) {
        if (i) s += ",";
        s += std::to_string(p.x[i]);
    }
    return s + ")";
}

Int simplex_volume(const Simplex& s) {
    if ((int)s.v.size() != s.n + 1) throw error("simplex: needs n+1 vertices");
    IntMatrix e(s.n, s.n);
    for (int j = 1; j <= s.n; ++j)
        for (int i = 0; i < s.n; ++i) e(i, j - 1) = (long)(s.v[j].x[i] - s.v[0].x[i]);
    Int d = det(e);
    return d < 0 ? Int(-d) : d;
}

std::pair<std::vector<Point>, Point> canonical_point_set(std::vector<Point> pts) {
    if (pts.empty()) throw error("canonical_point_set: empty");
    std::sort(pts.begin(), pts.end());
    // translate the lexicographically least vertex to the origin
    Point shift = -pts[0];
    for (Point& p : pts) p = p + shift;
    return {pts, shift};
}

std::string point_set_key(const std::vector<Point>& pts) {
    std::string k;
    k.reserve(pts.size() * pts[0].n * sizeof(int64_t) + 2);
    k.push_back((char)pts[0].n);
    k.push_back((char)pts.size());
    for (const Point& p : pts)
        for (int i = 0; i < p.n; ++i) {
            uint64_t u = (uint64_t)p.x[i];
            for (int b = 0; b < 8; ++b) k.push_back((char)(u >> (8 * b)));
        }
    return k;
}

std::string class_key(const Simplex& s) {
    std::vector<Point> pts = s.v;
    std::sort(pts.begin(), pts.end());
    Point shift = -pts[0];
    for (Point& p : pts) p = p + shift;
    return point_set_key(pts);
}

namespace {

AffineFunctional facet_functional(const Simplex& s, int drop, const Int& vol) {
    const int n = s.n;
    // D(x) = det of rows (1, v_j) for j != drop, then (1, x); affine in x
    auto dvalue = [&](const Point& x) {
        IntMatrix m(n + 1, n + 1);
        int r = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == drop) continue;
            m(r, 0) = 1;
            for (int i = 0; i < n; ++i) m(r, i + 1) = (long)s.v[j].x[i];
            ++r;
        }
        m(n, 0) = 1;
        for (int i = 0; i < n; ++i) m(n, i + 1) = (long)x.x[i];
        return det(m);
    };
    AffineFunctional f;
    f.c0 = dvalue(Point::zero(n));
    f.normal.resize(n);
    for (int i = 0; i < n; ++i) f.normal[i] = dvalue(Point::unit(n, i)) - f.c0;
    Int at_drop = f.eval(s.v[drop]);
    if (at_drop < 0) {
        f.c0 = -f.c0;
        for (Int& c : f.normal) c = -c;
        at_drop = -at_drop;
    }
    if (at_drop != vol) throw error("facet functional: normalization mismatch");
    return f;
}

}  // namespace

SimplexClass canonicalize(const Simplex& s) {
    for (const Point& p : s.v)
        for (int i = 0; i < p.n; ++i)
            if (p.x[i] >= kCoordLimit || p.x[i] <= -kCoordLimit)
                throw error("canonicalize: coordinate out of range");
    Int vol = simplex_volume(s);
    if (vol == 0) throw error("canonicalize: degenerate simplex");

    SimplexClass c;
    auto [verts, shift] = canonical_point_set(s.v);
    c.rep = Simplex(s.n, std::move(verts));
    c.volume = vol;
    c.key = point_set_key(c.rep.v);
    c.facets.reserve(s.n + 1);
    for (int i = 0; i <= s.n; ++i) c.facets.push_back(facet_functional(c.rep, i, vol));
    return c;
}

}  // namespace ptri
