#include <algorithm>
#include <set>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ptri/enumerate.hpp"
#include "ptri/refine.hpp"
#include "ptri/symmetry.hpp"

using namespace ptri;

namespace {

Simplex standard_simplex(int n) {
    std::vector<Point> v{Point::zero(n)};
    for (int i = 0; i < n; ++i) v.push_back(Point::unit(n, i));
    return Simplex(n, v);
}

std::set<Point> apex_set(const NeighborResult& r) {
    std::set<Point> s;
    for (const NeighborCandidate& c : r.candidates) s.insert(c.apex);
    return s;
}

}  // namespace

TEST_CASE("neighbor_candidates dim 3 hardcoded: the three parallelogram apexes") {
    CompatCache cache;
    NeighborResult r =
        neighbor_candidates(standard_simplex(3), 0, NeighborMode::Hardcoded, 0, &cache);
    CHECK(r.raw_count == 3);
    std::set<Point> expect{Point{1, 1, 0}, Point{1, 0, 1}, Point{0, 1, 1}};
    CHECK(apex_set(r) == expect);
}

TEST_CASE("neighbor_candidates dim 4 hardcoded: the ten apexes") {
    CompatCache cache;
    NeighborResult r =
        neighbor_candidates(standard_simplex(4), 0, NeighborMode::Hardcoded, 0, &cache);
    CHECK(r.candidates.size() == 10);
    std::set<Point> apexes = apex_set(r);
    // six permutations of (1,1,0,0) and four of (1,1,1,-1)
    int perm1100 = 0, perm111m1 = 0;
    for (const Point& p : apexes) {
        std::vector<int64_t> c(p.x.begin(), p.x.begin() + 4);
        std::sort(c.begin(), c.end());
        if (c == std::vector<int64_t>{0, 0, 1, 1}) ++perm1100;
        if (c == std::vector<int64_t>{-1, 1, 1, 1}) ++perm111m1;
    }
    CHECK(perm1100 == 6);
    CHECK(perm111m1 == 4);
}

TEST_CASE("neighbor_candidates dim 3: search mode agrees with hardcoded at radius 4") {
    CompatCache cache;
    NeighborResult hard =
        neighbor_candidates(standard_simplex(3), 0, NeighborMode::Hardcoded, 0, &cache);
    NeighborResult search =
        neighbor_candidates(standard_simplex(3), 0, NeighborMode::Search, 4, &cache);
    CHECK(apex_set(hard) == apex_set(search));
}

TEST_CASE("neighbor_candidates respects arbitrary position via normalization") {
    CompatCache cache;
    // translate and shear the standard simplex, pick a different facet
    Simplex s = standard_simplex(3);
    for (Point& p : s.v) {
        Point q = Point::zero(3);
        q.x[0] = p.x[0] + 2 * p.x[1] + 5;
        q.x[1] = p.x[1] - 3;
        q.x[2] = p.x[0] + p.x[2];
        p = q;
    }
    NeighborResult r = neighbor_candidates(s, 2, NeighborMode::Hardcoded, 0, &cache);
    CHECK(r.candidates.size() == 3);
    // each candidate really is admissible against the base
    SimplexClass base = canonicalize(s);
    for (const NeighborCandidate& c : r.candidates) {
        std::vector<Point> verts;
        for (int j = 0; j <= 3; ++j)
            if (j != 2) verts.push_back(s.v[j]);
        verts.push_back(c.apex);
        SimplexClass cand = canonicalize(Simplex(3, verts));
        CHECK(pairwise_compatible(base, cand, &cache).ok);
        CHECK(pairwise_compatible(cand, cand, &cache).ok);
        // encoding identity: apex = sum b_j v_j with sum b_j = 1
        Int bsum = 0;
        for (const Int& b : c.b) bsum += b;
        CHECK(bsum == 1);
        for (int i = 0; i < 3; ++i) {
            Int coord = 0;
            for (int j = 0; j <= 3; ++j) coord += c.b[j] * (long)s.v[j].x[i];
            CHECK(coord == (long)c.apex.x[i]);
        }
    }
}

TEST_CASE("local_enumerate dim 3: exactly one triangulation, no dead ends") {
    LocalEnumResult r = local_enumerate(3, 2);
    REQUIRE(r.triangulations.size() == 1);
    CHECK(r.dead_ends == 0);
    const Complex& t = r.triangulations[0];
    CHECK(t.classes.size() == 6);
    for (const SimplexClass& c : t.classes) CHECK(c.volume == 1);
    CHECK(validate(t).valid);
    CHECK(isomorphic(t, freudenthal_seed(3)).has_value());
}

TEST_CASE("flip_closure dim 2: a single equivalence class") {
    ClosureOptions opt;
    opt.threads = 2;
    ClosureResult r = flip_closure(freudenthal_seed(2), opt);
    CHECK(!r.budget_exhausted);
    CHECK(r.archive.size() == 1);
}

TEST_CASE("flip_closure dim 3: a single equivalence class") {
    ClosureOptions opt;
    opt.threads = 2;
    ClosureResult r = flip_closure(freudenthal_seed(3), opt);
    CHECK(!r.budget_exhausted);
    CHECK(r.archive.size() == 1);
}

TEST_CASE("flip_closure dim 4: exactly four classes, matching local enumeration") {
    CompatCache cache;
    ClosureOptions opt;
    opt.threads = 2;
    opt.cache = &cache;
    ClosureResult r = flip_closure(freudenthal_seed(4), opt);
    CHECK(!r.budget_exhausted);
    CHECK(r.archive.size() == 4);
    for (const Complex& t : r.archive) {
        CHECK(t.classes.size() == 24);
        for (const SimplexClass& c : t.classes) CHECK(c.volume == 1);
    }
}

TEST_CASE("flip_closure determinism: scrambled processing order, same class set") {
    CompatCache cache;
    ClosureOptions opt;
    opt.threads = 2;
    opt.cache = &cache;
    ClosureResult a = flip_closure(freudenthal_seed(4), opt);

    // start from a different member of the same closure
    std::vector<FlipSpec> specs = find_flips(freudenthal_seed(4));
    REQUIRE(!specs.empty());
    Complex other = apply_flip(freudenthal_seed(4), specs.back(), ApplyMode::Full, &cache);
    ClosureResult b = flip_closure(other, opt);
    REQUIRE(a.archive.size() == b.archive.size());
    // same set up to isomorphism
    for (const Complex& ta : a.archive) {
        bool found = false;
        for (const Complex& tb : b.archive)
            if (isomorphic(ta, tb).has_value()) found = true;
        CHECK(found);
    }
}

TEST_CASE("flip_closure budget reporting") {
    ClosureOptions opt;
    opt.max_nodes = 1;
    ClosureResult r = flip_closure(freudenthal_seed(4), opt);
    CHECK(r.budget_exhausted);
    CHECK(r.processed == 1);
    CHECK(r.archive.size() > 1);
}

TEST_CASE("adjacency codes canonicalize as pinned") {
    AdjacencyCode c1 = canonical_adjacency_code({-1, 1, 1, 0, 0, 0}, 0);
    CHECK(c1.b == std::vector<long>{-1, 0, 0, 0, 1, 1});
    CHECK(c1.dropped == 0);
    AdjacencyCode c2 = canonical_adjacency_code({-2, -1, 1, 1, 1, 1}, 1);
    CHECK(c2.b == std::vector<long>{-2, -1, 1, 1, 1, 1});
    CHECK(c2.dropped == 1);
}

TEST_CASE("adjacency classification of the dim-2 seed") {
    std::vector<Complex> archive{freudenthal_seed(2)};
    auto codes = adjacency_classification(archive);
    // one orbit: the square circuit encoding b = (-1, 1, 1)
    REQUIRE(codes.size() == 1);
    CHECK(codes[0].b == std::vector<long>{-1, 1, 1});
    CHECK(codes[0].dropped == 0);
}

TEST_CASE("thm61 harness holds for small k and the negative control fails") {
    CompatCache cache;
    Thm61Report rep = thm61_harness(5, &cache);
    CHECK(rep.ok);

    // modified apex (1,1,1,2,k+1): expected incompatibility for some small k
    bool some_failure = false;
    for (int k = 0; k <= 3 && !some_failure; ++k) {
        auto [s, t] = thm61_pair(k, Point{1, 1, 1, 2, (int64_t)k + 1});
        if (!pairwise_compatible(s, t, &cache).ok) some_failure = true;
    }
    CHECK(some_failure);
}
