#include "ptri/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>

#include "ptri/io.hpp"
#include "ptri/matrix.hpp"
#include "ptri/symmetry.hpp"

namespace ptri {

namespace {

// unimodular normalization sending (s, facet) to apex = 0, facet = {e_1..e_n};
// requires volume 1
struct StandardPosition {
    IntMatrix v;  // columns: facet vertices - apex
    Point apex;

    Point from_standard(const std::vector<Int>& c) const {
        const int n = v.rows();
        Point w = apex;
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += v(i, j) * c[j];
            w.x[i] += (int64_t)s.get_si();
        }
        return w;
    }
};

StandardPosition standard_position(const Simplex& s, int facet_idx) {
    const int n = s.n;
    StandardPosition sp;
    sp.apex = s.v[facet_idx];
    sp.v = IntMatrix(n, n);
    int col = 0;
    for (int j = 0; j <= n; ++j) {
        if (j == facet_idx) continue;
        for (int i = 0; i < n; ++i) sp.v(i, col) = (long)(s.v[j].x[i] - sp.apex.x[i]);
        ++col;
    }
    Int d = det(sp.v);
    if (d != 1 && d != -1) throw error("neighbor_candidates: hardcoded mode needs volume 1");
    return sp;
}

bool admissible_neighbor(const SimplexClass& base, const SimplexClass& cand, CompatCache* cache) {
    return pairwise_compatible(cand, cand, cache).ok &&
           pairwise_compatible(base, cand, cache).ok;
}

std::vector<Int> bvec(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.push_back(x);
    return out;
}

}  // namespace

NeighborResult neighbor_candidates(const Simplex& s, int facet_idx, NeighborMode mode, int radius,
                                   CompatCache* cache) {
    const int n = s.n;
    NeighborResult res;
    SimplexClass base = canonicalize(s);

    auto consider = [&](const Point& w) {
        // simplex on the facet with the new apex
        std::vector<Point> verts;
        for (int j = 0; j <= n; ++j)
            if (j != facet_idx) verts.push_back(s.v[j]);
        verts.push_back(w);
        SimplexClass cand;
        try {
            cand = canonicalize(Simplex(n, std::move(verts)));
        } catch (const error&) {
            return;  // degenerate apex
        }
        ++res.raw_count;
        if (cand.key == base.key) return;
        if (!admissible_neighbor(base, cand, cache)) return;
        NeighborCandidate nc;
        nc.apex = w;
        nc.dropped = facet_idx;
        // b coefficients of w in the homogeneous vertex basis of s
        IntMatrix m(n + 1, n + 1);
        for (int j = 0; j <= n; ++j) {
            m(0, j) = 1;
            for (int i = 0; i < n; ++i) m(i + 1, j) = (long)s.v[j].x[i];
        }
        IntMatrix rhs(n + 1, 1);
        rhs(0, 0) = 1;
        for (int i = 0; i < n; ++i) rhs(i + 1, 0) = (long)w.x[i];
        // b = adj(m) rhs / det(m); volume-1 base makes it integral
        Int dm = det(m);
        nc.b.assign(n + 1, Int(0));
        for (int j = 0; j <= n; ++j) {
            // cofactor row
            IntMatrix sub(n + 1, n + 1);
            for (int r = 0; r <= n; ++r)
                for (int c = 0; c <= n; ++c) sub(r, c) = (r == 0 && c == j) ? 0 : m(r, c);
            for (int r = 0; r <= n; ++r) sub(r, j) = rhs(r, 0);
            Int num = det(sub);
            if (num % dm != 0) throw error("neighbor_candidates: non-integral encoding");
            nc.b[j] = num / dm;
        }
        res.candidates.push_back(std::move(nc));
    };

    if (mode == NeighborMode::Hardcoded) {
        if (n != 3 && n != 4) throw error("neighbor_candidates: hardcoded mode is dim 3 or 4");
        StandardPosition sp = standard_position(s, facet_idx);
        std::vector<std::vector<Int>> shapes;
        if (n == 3) {
            shapes = {bvec({1, 1, 0}), bvec({1, 0, 1}), bvec({0, 1, 1})};
        } else {
            std::vector<Int> a = bvec({1, 1, 0, 0}), b = bvec({1, 1, 1, -1});
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::set<std::vector<Int>> uniq;
            do uniq.insert(a);
            while (std::next_permutation(a.begin(), a.end()));
            do uniq.insert(b);
            while (std::next_permutation(b.begin(), b.end()));
            shapes.assign(uniq.begin(), uniq.end());
        }
        for (const auto& c : shapes) consider(sp.from_standard(c));
    } else {
        if (radius < 1) throw error("neighbor_candidates: search mode needs a radius");
        // apexes strictly on the far side of the facet hyperplane
        std::vector<Point> fverts;
        for (int j = 0; j <= n; ++j)
            if (j != facet_idx) fverts.push_back(s.v[j]);
        Point box_lo = Point::zero(n), box_hi = Point::zero(n);
        for (int i = 0; i < n; ++i) {
            int64_t mn = s.v[0].x[i], mx = s.v[0].x[i];
            for (const Point& p : s.v) {
                mn = std::min(mn, p.x[i]);
                mx = std::max(mx, p.x[i]);
            }
            box_lo.x[i] = mn - radius;
            box_hi.x[i] = mx + radius;
        }
        auto side = [&](const Point& w) {
            IntMatrix m(n, n);
            for (size_t j = 1; j < fverts.size(); ++j)
                for (int i = 0; i < n; ++i) m(i, (int)j - 1) = (long)(fverts[j].x[i] - fverts[0].x[i]);
            for (int i = 0; i < n; ++i) m(i, n - 1) = (long)(w.x[i] - fverts[0].x[i]);
            return det(m);
        };
        Int apex_side = side(s.v[facet_idx]);
        Point w = box_lo;
        for (;;) {
            Int ws = side(w);
            if (ws != 0 && sign(ws) != sign(apex_side)) consider(w);
            int d = 0;
            while (d < n && ++w.x[d] > box_hi.x[d]) w.x[d] = box_lo.x[d], ++d;
            if (d == n) break;
        }
    }
    return res;
}

// ------------------------------------------------------------- local BFS --

namespace {

struct StateArchive {
    std::map<std::string, std::vector<int>> buckets;
    std::vector<Complex> states;
    int threads = 1;

    bool insert(Complex&& s) {
        std::string screen = invariant_screen(s);
        auto& bucket = buckets[screen];
        IsoOptions io;
        io.threads = threads;
        io.skip_screen = true;
        for (int idx : bucket)
            if (isomorphic(states[idx], s, io)) return false;
        bucket.push_back((int)states.size());
        states.push_back(std::move(s));
        return true;
    }
};

}  // namespace

LocalEnumResult local_enumerate(int n, int threads, CompatCache* cache, std::ostream* log) {
    if (n != 3 && n != 4) throw error("local_enumerate: dimension must be 3 or 4");
    LocalEnumResult res;
    CompatCache local_cache;
    if (!cache) cache = &local_cache;

    // start from the standard simplex
    std::vector<Point> std_verts{Point::zero(n)};
    for (int i = 0; i < n; ++i) std_verts.push_back(Point::unit(n, i));
    Complex start = make_complex(n, {canonicalize(Simplex(n, std_verts))});

    StateArchive archive;
    archive.threads = threads;
    StateArchive outputs;
    outputs.threads = threads;
    std::deque<int> queue;
    archive.insert(std::move(start));
    queue.push_back(0);

    Int full_volume = 1;
    for (int i = 2; i <= n; ++i) full_volume *= i;

    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        ++res.states_explored;
        const Complex state = archive.states[cur];

        PartialTriangulation pt = make_partial(state);
        if (pt.frontier.empty()) {
            ValidateOptions vo;
            vo.threads = threads;
            vo.cache = cache;
            ValidationReport rep = validate(state, vo);
            if (!rep.valid) throw error("local_enumerate: completed state invalid: " + rep.message);
            outputs.insert(Complex(state));
            continue;
        }

        const FacetRecord& front = pt.frontier.front();
        const FacetIncidence& inc = front.inc.front();
        Simplex glued(n, {});
        for (const Point& p : state.classes[inc.class_idx].rep.v) glued.v.push_back(p + inc.shift);

        NeighborResult nr = neighbor_candidates(glued, inc.facet_idx, NeighborMode::Hardcoded, 0, cache);
        long extensions = 0;
        for (const NeighborCandidate& cand : nr.candidates) {
            std::vector<Point> verts;
            for (int j = 0; j <= n; ++j)
                if (j != inc.facet_idx) verts.push_back(glued.v[j]);
            verts.push_back(cand.apex);
            SimplexClass nc = canonicalize(Simplex(n, std::move(verts)));
            if (state.has(nc.key)) continue;
            if (state.volume_sum() + nc.volume > full_volume) continue;

            std::vector<SimplexClass> classes = state.classes;
            classes.push_back(nc);
            Complex next = make_complex(n, std::move(classes));

            // facet multiplicity and pairwise admissibility
            bool ok = true;
            for (const FacetRecord& r : facet_records(next))
                if (r.inc.size() > 2) { ok = false; break; }
            if (ok)
                for (const SimplexClass& c : next.classes) {
                    if (!pairwise_compatible(c, nc, cache).ok) { ok = false; break; }
                }
            if (!ok) continue;

            ++extensions;
            if (archive.insert(std::move(next))) queue.push_back((int)archive.states.size() - 1);
        }
        if (extensions == 0) {
            ++res.dead_ends;
            if (log) *log << "dead end at state " << cur << "\n";
        }
        if (log && res.states_explored % 200 == 0)
            *log << "states " << res.states_explored << " queue " << queue.size() << " outputs "
                 << outputs.states.size() << "\n";
    }
    res.triangulations = std::move(outputs.states);
    return res;
}

// ---------------------------------------------------------- flip closure --

ClosureResult flip_closure(const Complex& seed, const ClosureOptions& opt) {
    ClosureResult res;
    CompatCache local_cache;
    CompatCache* cache = opt.cache ? opt.cache : &local_cache;

    std::map<std::string, std::vector<int>> buckets;
    std::deque<int> queue;

    auto screen_insert = [&](Complex&& t, bool validated) -> bool {
        std::string screen = invariant_screen(t);
        auto& bucket = buckets[screen];
        IsoOptions io;
        io.threads = opt.threads;
        io.skip_screen = true;
        for (int idx : bucket)
            if (isomorphic(res.archive[idx], t, io)) return false;
        if (!validated) {
            // full validity by induction: new-vs-all pairs only
            std::unordered_set<std::string> changed;
            for (const SimplexClass& c : t.classes) changed.insert(c.key);
            ValidateOptions vo;
            vo.threads = opt.threads;
            vo.cache = cache;
            vo.changed = &changed;
            ValidationReport rep = validate(t, vo);
            if (!rep.valid) throw error("flip_closure: archive candidate invalid: " + rep.message);
        }
        bucket.push_back((int)res.archive.size());
        res.archive.push_back(std::move(t));
        queue.push_back((int)res.archive.size() - 1);
        return true;
    };

    if (!opt.checkpoint_path.empty() && checkpoint_exists(opt.checkpoint_path)) {
        CheckpointData cp = read_checkpoint(opt.checkpoint_path);
        for (size_t i = 0; i < cp.archive.size(); ++i) {
            Complex& t = cp.archive[i];
            buckets[invariant_screen(t)].push_back((int)i);
            res.archive.push_back(std::move(t));
        }
        queue.assign(cp.queue.begin(), cp.queue.end());
        res.processed = (long)res.archive.size() - (long)queue.size();
        if (opt.log)
            *opt.log << "resumed: archive " << res.archive.size() << ", queue " << queue.size()
                     << "\n";
    } else {
        ValidateOptions vo;
        vo.threads = opt.threads;
        vo.cache = cache;
        ValidationReport rep = validate(seed, vo);
        if (!rep.valid) throw error("flip_closure: seed invalid: " + rep.message);
        Complex s = seed;
        screen_insert(std::move(s), true);
    }

    auto checkpoint = [&]() {
        if (opt.checkpoint_path.empty()) return;
        CheckpointData cp;
        cp.archive = res.archive;
        cp.queue.assign(queue.begin(), queue.end());
        write_checkpoint(opt.checkpoint_path, cp);
    };

    long since_checkpoint = 0;
    while (!queue.empty()) {
        if (opt.max_nodes >= 0 && res.processed >= opt.max_nodes) {
            res.budget_exhausted = true;
            break;
        }
        int cur = queue.front();
        queue.pop_front();
        ++res.processed;

        std::vector<FlipSpec> specs = find_flips(res.archive[cur], opt.threads);
        for (const FlipSpec& spec : specs) {
            Complex cand =
                apply_flip(res.archive[cur], spec, ApplyMode::Structural, cache, opt.threads);
            screen_insert(std::move(cand), false);
        }
        if (opt.log)
            *opt.log << "node " << cur << ": " << specs.size() << " flips, archive "
                     << res.archive.size() << ", queue " << queue.size() << ", cache "
                     << cache->size() << "\n";
        if (++since_checkpoint >= opt.checkpoint_every) {
            checkpoint();
            since_checkpoint = 0;
        }
    }
    checkpoint();
    return res;
}

// ------------------------------------------------- adjacency encodings --

AdjacencyCode canonical_adjacency_code(std::vector<long> b, int dropped) {
    long dropped_val = b[dropped];
    std::sort(b.begin(), b.end());
    AdjacencyCode code;
    code.dropped = (int)(std::find(b.begin(), b.end(), dropped_val) - b.begin());
    code.b = std::move(b);
    return code;
}

std::vector<AdjacencyCode> adjacency_classification(const std::vector<Complex>& archive) {
    std::set<AdjacencyCode> out;
    for (const Complex& t : archive) {
        for (const FacetRecord& rec : facet_records(t)) {
            if (rec.inc.size() != 2) continue;
            GluedPair g = glue(t, rec);
            for (int dir = 0; dir < 2; ++dir) {
                const Simplex& s1 = dir == 0 ? g.s1 : g.s2;
                const Point& apex1 = dir == 0 ? g.apex1 : g.apex2;
                const Point& w = dir == 0 ? g.apex2 : g.apex1;
                if (simplex_volume(s1) != 1) continue;
                const int n = t.n;
                IntMatrix m(n + 1, n + 1);
                for (int j = 0; j <= n; ++j) {
                    m(0, j) = 1;
                    for (int i = 0; i < n; ++i) m(i + 1, j) = (long)s1.v[j].x[i];
                }
                Int dm = det(m);
                std::vector<long> b(n + 1);
                int dropped = -1;
                for (int j = 0; j <= n; ++j) {
                    if (s1.v[j] == apex1) dropped = j;
                    IntMatrix sub = m;
                    sub(0, j) = 1;
                    for (int i = 0; i < n; ++i) sub(i + 1, j) = (long)w.x[i];
                    Int num = det(sub);
                    if (num % dm != 0) throw error("adjacency encoding not integral");
                    b[j] = (long)Int(num / dm).get_si();
                }
                if (dropped < 0) throw error("adjacency encoding: apex not found");
                out.insert(canonical_adjacency_code(std::move(b), dropped));
            }
        }
    }
    return std::vector<AdjacencyCode>(out.begin(), out.end());
}

// ----------------------------------------------------------- thm61 --------

std::pair<SimplexClass, SimplexClass> thm61_pair(int k, std::optional<Point> apex) {
    const int n = 5;
    std::vector<Point> s_verts = {Point::zero(n),    Point{-1, 0, 0, 0, 0}, Point::unit(n, 1),
                                  Point::unit(n, 2), Point::unit(n, 3),     Point::unit(n, 4)};
    Point x_prime = apex ? *apex : Point{1, 1, 1, 1, (int64_t)k + 1};
    std::vector<Point> t_verts = {Point::zero(n),    x_prime,           Point::unit(n, 1),
                                  Point::unit(n, 2), Point::unit(n, 3), Point::unit(n, 4)};
    return {canonicalize(Simplex(n, s_verts)), canonicalize(Simplex(n, t_verts))};
}

Thm61Report thm61_harness(int k_max, CompatCache* cache) {
    Thm61Report rep;
    CompatCache local;
    if (!cache) cache = &local;
    for (int k = 0; k <= k_max; ++k) {
        auto [s, t] = thm61_pair(k);
        if (simplex_volume(s.rep) != 1 || simplex_volume(t.rep) != 1) {
            rep.ok = false;
            rep.failed_k = k;
            rep.detail = "volume not 1";
            return rep;
        }
        CompatResult c = pairwise_compatible(s, t, cache);
        if (!c.ok) {
            rep.ok = false;
            rep.failed_k = k;
            rep.detail = "incompatible at translation " + to_string(c.witness);
            return rep;
        }
        // in construction coordinates the pair shares the facet
        // {0, e2, e3, e4, e5}; align the canonical reps accordingly
        std::vector<Point> s_verts = {Point::zero(5),    Point{-1, 0, 0, 0, 0}, Point::unit(5, 1),
                                      Point::unit(5, 2), Point::unit(5, 3),     Point::unit(5, 4)};
        std::vector<Point> t_verts = {Point::zero(5),    Point{1, 1, 1, 1, (int64_t)k + 1},
                                      Point::unit(5, 1), Point::unit(5, 2),
                                      Point::unit(5, 3), Point::unit(5, 4)};
        auto [ca, sa] = canonical_point_set(s_verts);
        auto [cb, sb] = canonical_point_set(t_verts);
        Point v = sa - sb;  // b.rep + v meets a.rep the way T meets S
        int common = 0;
        for (const Point& p : ca)
            for (const Point& q : cb)
                if (q + v == p) ++common;
        IntersectionKind kind = classify_intersection(s, t, v);
        if (kind != IntersectionKind::CommonFace || common != 5) {
            rep.ok = false;
            rep.failed_k = k;
            rep.detail = "intersection is not the shared facet";
            return rep;
        }
    }
    return rep;
}

}  // namespace ptri
