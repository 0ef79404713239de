#include "ptri/triangulation.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>

#include "smallsimplex.hpp"

#include "ptri/lp.hpp"
#include "ptri/matrix.hpp"
#include "ptri/polyhedron.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ptri {

Complex make_complex(int n, std::vector<SimplexClass> classes) {
    Complex c;
    c.n = n;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (const SimplexClass& s : classes) {
        if (s.rep.n != n) throw error("make_complex: dimension mismatch");
        c.keys_.insert(s.key);
    }
    c.classes = std::move(classes);
    return c;
}

Int Complex::volume_sum() const {
    Int s = 0;
    for (const SimplexClass& c : classes) s += c.volume;
    return s;
}

std::vector<FacetRecord> facet_records(const Complex& c) {
    std::map<std::vector<Point>, std::vector<FacetIncidence>> recs;
    for (size_t ci = 0; ci < c.classes.size(); ++ci) {
        const Simplex& rep = c.classes[ci].rep;
        for (int drop = 0; drop <= c.n; ++drop) {
            std::vector<Point> face;
            face.reserve(c.n);
            for (int j = 0; j <= c.n; ++j)
                if (j != drop) face.push_back(rep.v[j]);
            auto [canon, shift] = canonical_point_set(face);
            recs[std::move(canon)].push_back(FacetIncidence{(int)ci, drop, shift});
        }
    }
    std::vector<FacetRecord> out;
    out.reserve(recs.size());
    for (auto& [face, inc] : recs) out.push_back(FacetRecord{face, std::move(inc)});
    return out;
}

std::vector<int> ridge_valence_profile(const Complex& c) {
    std::unordered_map<std::string, int> counts;
    if (c.n < 2) return {};
    std::vector<Point> ridge(c.n - 1);
    for (const SimplexClass& sc : c.classes) {
        for (int d1 = 0; d1 <= c.n; ++d1)
            for (int d2 = d1 + 1; d2 <= c.n; ++d2) {
                int k = 0;
                for (int j = 0; j <= c.n; ++j)
                    if (j != d1 && j != d2) ridge[k++] = sc.rep.v[j];
                auto [canon, shift] = canonical_point_set(ridge);
                counts[point_set_key(canon)]++;
            }
    }
    std::vector<int> prof;
    prof.reserve(counts.size());
    for (auto& [k, v] : counts) prof.push_back(v);
    std::sort(prof.begin(), prof.end());
    return prof;
}

GluedPair glue(const Complex& c, const FacetRecord& rec) {
    if (rec.inc.size() != 2) throw error("glue: facet record is not interior");
    GluedPair g;
    const FacetIncidence& i1 = rec.inc[0];
    const FacetIncidence& i2 = rec.inc[1];
    g.class1 = i1.class_idx;
    g.class2 = i2.class_idx;
    const Simplex& r1 = c.classes[i1.class_idx].rep;
    const Simplex& r2 = c.classes[i2.class_idx].rep;
    g.s1 = Simplex(c.n, {});
    g.s2 = Simplex(c.n, {});
    for (const Point& p : r1.v) g.s1.v.push_back(p + i1.shift);
    for (const Point& p : r2.v) g.s2.v.push_back(p + i2.shift);
    g.apex1 = g.s1.v[i1.facet_idx];
    g.apex2 = g.s2.v[i2.facet_idx];
    return g;
}

// ---------------------------------------------------------------- compat --

std::vector<Point> feasible_translations(const SimplexClass& a, const SimplexClass& b) {
    const int n = a.rep.n;
    // the body is a scaled reflected simplex: every n of its n+1 facet
    // normals are independent, so its vertices come from plain Cramer solves
    std::vector<std::vector<Int>> normals(n + 1, std::vector<Int>(n));
    std::vector<Int> consts(n + 1);
    for (int i = 0; i <= n; ++i) {
        const AffineFunctional& f = a.facets[i];
        Int m = f.eval(b.rep.v[0]);
        for (size_t j = 1; j < b.rep.v.size(); ++j) {
            Int val = f.eval(b.rep.v[j]);
            if (val > m) m = val;
        }
        normals[i] = f.normal;
        consts[i] = m;  // normal_i . v + m_i >= 0
    }
    std::vector<Rat> lo(n), hi(n);
    bool first = true;
    IntMatrix mat(n, n);
    IntMatrix sub(n, n);
    for (int drop = 0; drop <= n; ++drop) {
        int r = 0;
        std::vector<int> rowids;
        for (int i = 0; i <= n; ++i) {
            if (i == drop) continue;
            for (int j = 0; j < n; ++j) mat(r, j) = normals[i][j];
            rowids.push_back(i);
            ++r;
        }
        Int d = det(mat);
        if (d == 0) throw error("feasible_translations: degenerate facet normals");
        for (int j = 0; j < n; ++j) {
            for (int rr = 0; rr < n; ++rr)
                for (int cc = 0; cc < n; ++cc)
                    sub(rr, cc) = cc == j ? Int(-consts[rowids[rr]]) : mat(rr, cc);
            Rat coord = frac(det(sub), d);
            if (first || coord < lo[j]) lo[j] = coord;
            if (first || coord > hi[j]) hi[j] = coord;
            first = false;
        }
    }

    std::vector<Point> out;
    Point lo_i = Point::zero(n), hi_i = Point::zero(n);
    for (int j = 0; j < n; ++j) {
        lo_i.x[j] = (int64_t)rat_ceil(lo[j]).get_si();
        hi_i.x[j] = (int64_t)rat_floor(hi[j]).get_si();
        if (lo_i.x[j] > hi_i.x[j]) return out;
    }
    // int64 constraint evaluation over the box
    std::vector<std::array<int64_t, kMaxDim + 1>> rows(n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = (int64_t)normals[i][j].get_si();
        rows[i][n] = (int64_t)consts[i].get_si();
    }
    Point v = lo_i;
    for (;;) {
        bool ok = true;
        for (int i = 0; i <= n && ok; ++i) {
            int64_t s = rows[i][n];
            for (int j = 0; j < n; ++j) s += rows[i][j] * v.x[j];
            if (s < 0) ok = false;
        }
        if (ok) out.push_back(v);
        int d = 0;
        while (d < n && ++v.x[d] > hi_i.x[d]) v.x[d] = lo_i.x[d], ++d;
        if (d == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntersectionKind classify_intersection_exact(const SimplexClass& a, const SimplexClass& b,
                                             const Point& v) {
    const int n = a.rep.n;
    // quick reject: some facet of b+v separates a
    for (const AffineFunctional& f : b.facets) {
        Int m = f.eval(a.rep.v[0] - v);
        for (size_t j = 1; j < a.rep.v.size(); ++j) {
            Int val = f.eval(a.rep.v[j] - v);
            if (val > m) m = val;
        }
        if (m < 0) return IntersectionKind::Empty;
    }

    // common vertices
    std::vector<Point> bv;
    for (const Point& p : b.rep.v) bv.push_back(p + v);
    std::vector<bool> a_common(n + 1, false), b_common(n + 1, false);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (a.rep.v[i] == bv[j]) a_common[i] = b_common[j] = true;

    // LP1: max t with every scaled barycentric of both simplices >= t
    LPProblem lp1;
    lp1.num_vars = n + 1;  // x and t
    const int tvar = n;
    auto add_facet_rows = [&](LPProblem& lp, bool with_t, const SimplexClass& sc,
                              const Point& shift) {
        for (const AffineFunctional& f : sc.facets) {
            LPRow& row = lp.add_row(Rel::Ge, Rat(0));
            Rat c0 = Rat(f.c0);
            for (int i = 0; i < n; ++i) {
                if (f.normal[i] == 0) continue;
                row.terms.push_back({i, Rat(f.normal[i])});
                c0 -= Rat(f.normal[i]) * Rat((long)shift.x[i]);
            }
            if (with_t) row.terms.push_back({tvar, Rat(-1)});
            row.rhs = -c0;  // f(x - shift) >= t
        }
    };
    add_facet_rows(lp1, true, a, Point::zero(n));
    add_facet_rows(lp1, true, b, v);
    lp1.objective = {{tvar, Rat(1)}};
    lp1.maximize = true;
    LPSolution s1 = lp_solve(lp1);
    if (s1.status != LPStatus::Optimal) throw error("classify_intersection: LP1 not optimal");
    if (s1.objective_value < 0) return IntersectionKind::Empty;
    if (s1.objective_value > 0) return IntersectionKind::FullDim;

    // LP2: over the intersection, maximize the barycentric mass off the
    // common vertex set; zero iff the intersection is the common face
    LPProblem lp2;
    lp2.num_vars = n;
    add_facet_rows(lp2, false, a, Point::zero(n));
    add_facet_rows(lp2, false, b, v);
    std::vector<Rat> obj(n, Rat(0));
    Rat obj_const = 0;
    auto add_obj = [&](const SimplexClass& sc, const Point& shift, const std::vector<bool>& common) {
        for (int i = 0; i <= n; ++i) {
            if (common[i]) continue;
            const AffineFunctional& f = sc.facets[i];
            Rat c0 = Rat(f.c0);
            for (int k = 0; k < n; ++k) {
                obj[k] += Rat(f.normal[k]);
                c0 -= Rat(f.normal[k]) * Rat((long)shift.x[k]);
            }
            obj_const += c0;
        }
    };
    add_obj(a, Point::zero(n), a_common);
    add_obj(b, v, b_common);
    for (int k = 0; k < n; ++k)
        if (obj[k] != 0) lp2.objective.push_back({k, obj[k]});
    lp2.maximize = true;
    LPSolution s2 = lp_solve(lp2);
    if (s2.status != LPStatus::Optimal) throw error("classify_intersection: LP2 not optimal");
    return (s2.objective_value + obj_const == 0) ? IntersectionKind::CommonFace
                                                 : IntersectionKind::Improper;
}

namespace {

// int64 barycentric classification; returns nullopt when the fraction-free
// dictionary would overflow (caller reruns the exact-rational route)
std::optional<IntersectionKind> classify_fast(const SimplexClass& a, const SimplexClass& b,
                                              const Point& v) {
    const int n = a.rep.n;
    const int np1 = n + 1;
    for (const Point& p : a.rep.v)
        for (int i = 0; i < n; ++i)
            if (p.x[i] > 4096 || p.x[i] < -4096) return std::nullopt;
    for (const Point& p : b.rep.v)
        for (int i = 0; i < n; ++i) {
            int64_t c = p.x[i] + v.x[i];
            if (c > 4096 || c < -4096) return std::nullopt;
        }

    // separation filters in int64 (facet data fits whenever coords do, but
    // guard anyway)
    auto facet_rows = [&](const SimplexClass& s, const Point& shift,
                          std::array<std::array<int64_t, kMaxDim + 1>, kMaxDim + 1>& rows) {
        for (int i = 0; i <= n; ++i) {
            const AffineFunctional& f = s.facets[i];
            if (!mpz_fits_slong_p(f.c0.get_mpz_t())) return false;
            int64_t c0 = f.c0.get_si();
            for (int j = 0; j < n; ++j) {
                if (!mpz_fits_slong_p(f.normal[j].get_mpz_t())) return false;
                rows[i][j] = f.normal[j].get_si();
                c0 -= rows[i][j] * shift.x[j];
            }
            rows[i][n] = c0;  // functional at x: rows.x + c0, for s.rep + shift
        }
        return true;
    };
    std::array<std::array<int64_t, kMaxDim + 1>, kMaxDim + 1> fa, fb;
    if (!facet_rows(a, Point::zero(n), fa) || !facet_rows(b, v, fb)) return std::nullopt;

    auto max_over = [&](const std::array<int64_t, kMaxDim + 1>& row, const SimplexClass& s,
                        const Point& shift) {
        int64_t best = 0;
        for (int k = 0; k <= n; ++k) {
            int64_t val = row[n];
            for (int j = 0; j < n; ++j) val += row[j] * (s.rep.v[k].x[j] + shift.x[j]);
            if (k == 0 || val > best) best = val;
        }
        return best;
    };
    for (int i = 0; i <= n; ++i) {
        if (max_over(fb[i], a, Point::zero(n)) < 0) return IntersectionKind::Empty;
        if (max_over(fa[i], b, v) < 0) return IntersectionKind::Empty;
    }

    // stage 1+2: barycentric feasibility with a uniform slack variable t
    smalllp::Dict dict;
    const int nv = 2 * np1 + 1;
    const int tcol = 2 * np1;
    dict.init(n + 2, nv);
    for (int i = 0; i < n; ++i) {
        int64_t tsum = 0;
        for (int k = 0; k <= n; ++k) {
            int64_t ak = a.rep.v[k].x[i];
            int64_t bk = b.rep.v[k].x[i] + v.x[i];
            dict.a(i + 1, k) = ak;
            dict.a(i + 1, np1 + k) = -bk;
            tsum += ak - bk;
        }
        dict.a(i + 1, tcol) = tsum;
        dict.rhs(i + 1) = 0;
    }
    for (int k = 0; k <= n; ++k) {
        dict.a(n + 1, k) = 1;
        dict.a(n + 2, np1 + k) = 1;
    }
    dict.a(n + 1, tcol) = np1;
    dict.a(n + 2, tcol) = np1;
    dict.rhs(n + 1) = 1;
    dict.rhs(n + 2) = 1;

    int ph = dict.phase1();
    if (ph < 0) return std::nullopt;
    if (ph > 0) return IntersectionKind::Empty;
    std::vector<int64_t> obj(nv, 0);
    obj[tcol] = -1;  // maximize t
    if (!dict.set_objective(obj)) return std::nullopt;
    if (dict.rhs(0) > 0) return IntersectionKind::FullDim;

    // stage 3: t = 0 slice, maximize barycentric mass off the common vertices
    std::array<bool, kMaxDim + 1> a_common{}, b_common{};
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (a.rep.v[i] == b.rep.v[j] + v) a_common[i] = b_common[j] = true;

    smalllp::Dict d3;
    d3.init(n + 2, 2 * np1);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= n; ++k) {
            d3.a(i + 1, k) = a.rep.v[k].x[i];
            d3.a(i + 1, np1 + k) = -(b.rep.v[k].x[i] + v.x[i]);
        }
        d3.rhs(i + 1) = 0;
    }
    for (int k = 0; k <= n; ++k) {
        d3.a(n + 1, k) = 1;
        d3.a(n + 2, np1 + k) = 1;
    }
    d3.rhs(n + 1) = 1;
    d3.rhs(n + 2) = 1;
    if (d3.phase1() != 0) return std::nullopt;  // must be feasible here
    std::vector<int64_t> obj3(2 * np1, 0);
    for (int k = 0; k <= n; ++k) {
        if (!a_common[k]) obj3[k] = -1;
        if (!b_common[k]) obj3[np1 + k] = -1;
    }
    if (!d3.set_objective(obj3)) return std::nullopt;
    return d3.rhs(0) > 0 ? IntersectionKind::Improper : IntersectionKind::CommonFace;
}

}  // namespace

IntersectionKind classify_intersection(const SimplexClass& a, const SimplexClass& b,
                                       const Point& v) {
    if (auto fast = classify_fast(a, b, v)) return *fast;
    return classify_intersection_exact(a, b, v);
}

CompatResult pairwise_compatible(const SimplexClass& c1, const SimplexClass& c2,
                                 CompatCache* cache) {
    std::string memo_key;
    if (cache) {
        memo_key = c1.key <= c2.key ? c1.key + c2.key : c2.key + c1.key;
        if (auto hit = cache->lookup(memo_key)) {
            // witnesses are not cached; recompute only on failure
            if (*hit) return CompatResult{true, {}};
        }
    }
    CompatResult res;
    bool self = c1.key == c2.key;
    for (const Point& v : feasible_translations(c1, c2)) {
        bool zero = true;
        for (int i = 0; i < v.n; ++i)
            if (v.x[i] != 0) zero = false;
        if (self && zero) continue;
        IntersectionKind k = classify_intersection(c1, c2, v);
        if (k == IntersectionKind::FullDim || k == IntersectionKind::Improper) {
            res.ok = false;
            res.witness = v;
            break;
        }
    }
    if (cache) cache->store(memo_key, res.ok);
    return res;
}

// ------------------------------------------------------------- validation --

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

ValidationReport validate(const Complex& t, const ValidateOptions& opt) {
    ValidationReport rep;
    if (t.classes.empty()) return {false, "empty class set"};

    Int want = factorial(t.n);
    if (t.volume_sum() != want) {
        return {false, "volume sum " + to_string(t.volume_sum()) + " != n! = " + to_string(want)};
    }
    for (const FacetRecord& r : facet_records(t)) {
        if (r.inc.size() != 2) {
            return {false, "facet class covered " + std::to_string(r.inc.size()) +
                               " times: " + to_string(r.face[0]) + "..."};
        }
    }
    if (opt.structural_only) return rep;

    const int m = (int)t.classes.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            if (opt.changed && !opt.changed->count(t.classes[i].key) &&
                !opt.changed->count(t.classes[j].key))
                continue;
            pairs.push_back({i, j});
        }

    // all-pairs loop; results merged deterministically (first failing pair in
    // canonical order wins)
    std::atomic<long> fail_idx{-1};
    Point witness;
    std::mutex wit_mu;
#pragma omp parallel for schedule(dynamic, 4) num_threads(opt.threads > 0 ? opt.threads : 1)
    for (long p = 0; p < (long)pairs.size(); ++p) {
        long cur = fail_idx.load();
        if (cur >= 0 && cur <= p) continue;
        auto [i, j] = pairs[p];
        CompatResult r = pairwise_compatible(t.classes[i], t.classes[j], opt.cache);
        if (!r.ok) {
            std::lock_guard<std::mutex> g(wit_mu);
            long prev = fail_idx.load();
            if (prev < 0 || p < prev) {
                fail_idx.store(p);
                witness = r.witness;
            }
        }
    }
    if (fail_idx.load() >= 0) {
        auto [i, j] = pairs[fail_idx.load()];
        return {false, "classes " + std::to_string(i) + "," + std::to_string(j) +
                           " incompatible at translation " + to_string(witness)};
    }
    return rep;
}

PartialTriangulation make_partial(Complex cells) {
    PartialTriangulation pt;
    pt.cells = std::move(cells);
    for (FacetRecord& r : facet_records(pt.cells)) {
        if (r.inc.size() > 2)
            throw error("partial triangulation: facet covered more than twice");
        if (r.inc.size() == 1) pt.frontier.push_back(std::move(r));
    }
    return pt;
}

SimplexClass reflect_class(const SimplexClass& c) {
    Simplex s = c.rep;
    for (Point& p : s.v) p = -p;
    return canonicalize(s);
}

bool is_centrally_symmetric(const Complex& t) {
    for (const SimplexClass& c : t.classes) {
        Simplex s = c.rep;
        for (Point& p : s.v) p = -p;
        if (!t.has(class_key(s))) return false;
    }
    return true;
}

bool volume_bounds_ok(const Complex& t) {
    Int nf = factorial(t.n);
    Int maxvol = 0;
    for (const SimplexClass& c : t.classes)
        if (c.volume > maxvol) maxvol = c.volume;
    if (maxvol > nf) return false;
    if (is_centrally_symmetric(t)) {
        // vol <= 2^n n! / binom(2n, n)
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), 2 * t.n, t.n);
        Int lhs = maxvol * binom;
        Int rhs = (Int(1) << t.n) * nf;
        if (lhs > rhs) return false;
    }
    return true;
}

std::string invariant_screen(const Complex& t) {
    std::string s = "n" + std::to_string(t.n) + ";m" + std::to_string(t.classes.size()) + ";v";
    std::vector<std::string> vols;
    for (const SimplexClass& c : t.classes) vols.push_back(to_string(c.volume));
    std::sort(vols.begin(), vols.end());
    for (auto& v : vols) s += v + ",";
    s += ";r";
    for (int r : ridge_valence_profile(t)) s += std::to_string(r) + ",";
    auto recs = facet_records(t);
    s += ";f" + std::to_string(recs.size());
    std::vector<std::string> fv;
    for (const FacetRecord& r : recs) {
        std::vector<std::string> side;
        for (const FacetIncidence& i : r.inc) side.push_back(to_string(t.classes[i.class_idx].volume));
        std::sort(side.begin(), side.end());
        std::string e;
        for (auto& x : side) e += x + "~";
        fv.push_back(e);
    }
    std::sort(fv.begin(), fv.end());
    s += ";p";
    for (auto& e : fv) s += e + "|";
    s += ";c" + std::to_string(is_centrally_symmetric(t) ? 1 : 0);
    return s;
}

}  // namespace ptri
