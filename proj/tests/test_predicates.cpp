#include <random>

#include "doctest.h"
#include "ptri/predicates.hpp"
#include "ptri/refine.hpp"
#include "ptri/symmetry.hpp"

using namespace ptri;

namespace {

// circumcenter comparison oracle: sign of |v-c|^2 - r^2 for the euclidean
// circumsphere, computed independently via a rational linear solve
int circumsphere_side(const Simplex& s, const Point& v) {
    const int n = s.n;
    // c solves 2(w_i - w_0).c = |w_i|^2 - |w_0|^2
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    auto norm2 = [&](const Point& p) {
        Rat r = 0;
        for (int i = 0; i < n; ++i) r += Rat((long)p.x[i]) * Rat((long)p.x[i]);
        return r;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = Rat(2) * Rat((long)(s.v[i + 1].x[j] - s.v[0].x[j]));
        a[i][n] = norm2(s.v[i + 1]) - norm2(s.v[0]);
    }
    // gaussian elimination
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { p = i; break; }
        REQUIRE(p >= 0);
        std::swap(a[k], a[p]);
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rat> c(n);
    for (int k = 0; k < n; ++k) c[k] = a[k][n] / a[k][k];
    Rat r2 = 0, d2 = 0;
    for (int i = 0; i < n; ++i) {
        Rat t0 = Rat((long)s.v[0].x[i]) - c[i];
        Rat tv = Rat((long)v.x[i]) - c[i];
        r2 += t0 * t0;
        d2 += tv * tv;
    }
    return d2 > r2 ? 1 : d2 < r2 ? -1 : 0;
}

Point rand_point(int n, std::mt19937_64& rng, int64_t lo, int64_t hi) {
    Point p = Point::zero(n);
    std::uniform_int_distribution<int64_t> d(lo, hi);
    for (int i = 0; i < n; ++i) p.x[i] = d(rng);
    return p;
}

QuadForm rand_sym(int n, std::mt19937_64& rng) {
    QuadForm q(n);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) q.set(i, j, frac(d(rng), 1 + (long)(rng() % 3)));
    return q;
}

}  // namespace

TEST_CASE("voronoi_regulator: cocircular configuration evaluates to zero") {
    Simplex s(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}});
    Regulator r = voronoi_regulator(s, Point{1, 1});
    CHECK(r.eval(QuadForm::identity(2)) == 0);
}

TEST_CASE("voronoi_regulator: dim-1 and outside points") {
    Simplex s1(1, {Point{0}, Point{1}});
    Regulator r1 = voronoi_regulator(s1, Point{2});
    // N(a) = 2a
    QuadForm a(1);
    a.set(0, 0, 1);
    CHECK(r1.eval(a) == 2);
    a.set(0, 0, frac(7, 2));
    CHECK(r1.eval(a) == 7);

    Simplex s2(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}});
    CHECK(voronoi_regulator(s2, Point{2, 2}).eval(QuadForm::identity(2)) > 0);
}

TEST_CASE("voronoi_regulator is linear in the form") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + (int)(rng() % 2);
        std::vector<Point> verts;
        for (int i = 0; i <= n; ++i) verts.push_back(rand_point(n, rng, -3, 3));
        Simplex s(n, verts);
        if (simplex_volume(s) == 0) continue;
        Point w = rand_point(n, rng, -3, 3);
        Regulator reg = voronoi_regulator(s, w);
        QuadForm a = rand_sym(n, rng), b = rand_sym(n, rng);
        Rat alpha = frac(3, 2), beta = frac(-2, 5);
        QuadForm mix(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) mix.set(i, j, alpha * a(i, j) + beta * b(i, j));
        CHECK(reg.eval(mix) == alpha * reg.eval(a) + beta * reg.eval(b));
    }
}

TEST_CASE("voronoi_regulator sign agrees with the circumsphere oracle (50 cases)") {
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 50) {
        int n = 2 + (int)(rng() % 2);
        std::vector<Point> verts;
        for (int i = 0; i <= n; ++i) verts.push_back(rand_point(n, rng, -3, 3));
        Simplex s(n, verts);
        if (simplex_volume(s) == 0) continue;
        Point w = rand_point(n, rng, -3, 3);
        bool is_vertex = false;
        for (const Point& p : verts)
            if (p == w) is_vertex = true;
        if (is_vertex) continue;
        ++done;
        Regulator reg = voronoi_regulator(s, w);
        Rat val = reg.eval(QuadForm::identity(n));
        CHECK(sign(val) == circumsphere_side(s, w));
    }
}

TEST_CASE("delaunay_test: the dim-3 triangulation is Delaunay with a verified witness") {
    Complex t = freudenthal_seed(3);
    DelaunayResult r = delaunay_test(t);
    CHECK(r.is_delaunay);
    CHECK(r.slack > 0);
    CHECK(r.witness_pd);
    // every regulator strictly positive at the witness
    for (const Regulator& reg : r.regulators) CHECK(reg.eval(r.witness) > 0);
}

TEST_CASE("delaunay_test: freudenthal seeds up to dim 5 are Delaunay") {
    for (int n = 2; n <= 5; ++n) {
        DelaunayResult r = delaunay_test(freudenthal_seed(n), 2);
        CHECK(r.is_delaunay);
    }
}

TEST_CASE("refine: generic form splits the square tiling into two unimodular triangles") {
    QuadForm a(2);
    a.set(0, 0, 2);
    a.set(0, 1, 1);
    a.set(1, 1, 2);
    RefineResult r = refine(2, cube_tiling(2), a);
    REQUIRE(r.generic);
    CHECK(r.triangulation.classes.size() == 2);
    for (const SimplexClass& c : r.triangulation.classes) CHECK(c.volume == 1);
    CHECK(validate(r.triangulation).valid);
}

TEST_CASE("refine: identity on the square ties and raises the non-generic flag") {
    RefineResult r = refine(2, cube_tiling(2), QuadForm::identity(2));
    CHECK(!r.generic);
}

TEST_CASE("refine: cube tiling in dim 3 yields the unique triangulation") {
    QuadForm a(3);
    a.set(0, 0, 4);
    a.set(1, 1, 5);
    a.set(2, 2, 6);
    a.set(0, 1, 1);
    a.set(1, 2, 1);
    a.set(0, 2, frac(1, 2));
    RefineResult r = refine(3, cube_tiling(3), a);
    REQUIRE(r.generic);
    CHECK(validate(r.triangulation).valid);
    CHECK(isomorphic(r.triangulation, freudenthal_seed(3)).has_value());
}

TEST_CASE("refine rejects a non-PD form") {
    QuadForm bad(2);
    bad.set(0, 0, 1);
    bad.set(1, 1, -1);
    CHECK_THROWS_AS(refine(2, cube_tiling(2), bad), error);
}

TEST_CASE("delaunay witness refines the triangulation to itself") {
    Complex t = freudenthal_seed(3);
    DelaunayResult del = delaunay_test(t);
    REQUIRE(del.is_delaunay);
    std::vector<PolytopeClass> tiles;
    for (const SimplexClass& c : t.classes) {
        std::vector<Point> verts = c.rep.v;
        tiles.push_back(make_tile(std::move(verts)));
    }
    RefineResult r = refine(3, tiles, del.witness);
    REQUIRE(r.generic);
    CHECK(r.triangulation.classes.size() == t.classes.size());
    for (size_t i = 0; i < t.classes.size(); ++i)
        CHECK(r.triangulation.classes[i].key == t.classes[i].key);
}

TEST_CASE("prism_extend: dim-2 seed to dim 3 is valid with full volume, CS preserved") {
    Complex t2 = freudenthal_seed(2);
    QuadForm a(3);
    a.set(0, 0, 4);
    a.set(1, 1, 5);
    a.set(2, 2, 6);
    a.set(0, 1, 1);
    a.set(1, 2, frac(1, 3));
    a.set(0, 2, frac(1, 2));
    RefineResult r = prism_extend(t2, 3, a);
    REQUIRE(r.generic);
    CHECK(r.triangulation.volume_sum() == 6);
    CHECK(validate(r.triangulation).valid);
    CHECK(is_centrally_symmetric(r.triangulation));
}

TEST_CASE("regularity: delaunay triangulations are feasible at any radius") {
    Complex t = freudenthal_seed(2);
    for (int r = 1; r <= 2; ++r) {
        RegularityResult res = nonregularity_test(t, r);
        CHECK(res.feasible);
        CHECK(!res.witness_heights.empty());
    }
    RegularityResult res3 = nonregularity_test(freudenthal_seed(3), 1);
    CHECK(res3.feasible);
}

TEST_CASE("regularity: the LP path agrees when the delaunay shortcut is disabled by shape") {
    // brute check of the witness against the system on a small instance
    Complex t = freudenthal_seed(2);
    RegularitySystem sys = build_regularity_system(t, 1);
    CHECK(sys.simplex_count > 0);
    CHECK(!sys.constraints.empty());
    RegularityResult res = nonregularity_test(t, 1);
    REQUIRE(res.feasible);
    REQUIRE((long)res.witness_heights.size() == (long)sys.vertices.size());
    for (const auto& con : sys.constraints) {
        Rat v = 0;
        for (const auto& [k, c] : con.terms) v += Rat(c) * res.witness_heights[k];
        CHECK(v >= Rat(con.rhs));
    }
}

TEST_CASE("regularity monotonicity scaffolding: selections nest with radius") {
    Complex t = freudenthal_seed(2);
    RegularitySystem s1 = build_regularity_system(t, 1);
    RegularitySystem s2 = build_regularity_system(t, 2);
    CHECK(s2.simplex_count > s1.simplex_count);
    CHECK(s2.vertices.size() > s1.vertices.size());
    CHECK(s2.constraints.size() > s1.constraints.size());
}
