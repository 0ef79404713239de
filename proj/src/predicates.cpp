#include "ptri/predicates.hpp"

#include <algorithm>
#include <map>

#include "ptri/lp.hpp"
#include "ptri/matrix.hpp"

namespace ptri {

namespace {

Int orientation_det(const Simplex& s) {
    IntMatrix e(s.n, s.n);
    for (int j = 1; j <= s.n; ++j)
        for (int i = 0; i < s.n; ++i) e(i, j - 1) = (long)(s.v[j].x[i] - s.v[0].x[i]);
    return det(e);
}

}  // namespace

Regulator voronoi_regulator(const Simplex& s1, const Point& v2) {
    const int n = s1.n;
    const int d = QuadForm::sym_dim(n);
    int sigma = sign(orientation_det(s1));
    if (sigma == 0) throw error("voronoi_regulator: degenerate simplex");

    Regulator reg;
    reg.coeffs.assign(d, Int(0));
    std::vector<Point> pts = s1.v;
    pts.push_back(v2);

    // cofactor expansion along the height column: the lifted determinant is
    // sum_r w_r A[x_r] with w_r = sign-adjusted minors of the (1, x) columns,
    // so one pass of minors serves every basis form
    std::vector<Int> w(n + 2);
    bool small = true;
    for (const Point& p : pts)
        for (int i = 0; i < n; ++i)
            if (p.x[i] > 64 || p.x[i] < -64) small = false;

    for (int r = 0; r < n + 2; ++r) {
        int par = ((r + n + 1) % 2 == 0) ? 1 : -1;
        if (small) {
            std::vector<int64_t> m((n + 1) * (n + 1));
            int rr = 0;
            for (int s = 0; s < n + 2; ++s) {
                if (s == r) continue;
                m[rr * (n + 1)] = 1;
                for (int i = 0; i < n; ++i) m[rr * (n + 1) + i + 1] = pts[s].x[i];
                ++rr;
            }
            // fraction-free elimination stays within int64 for |x| <= 64
            int64_t prev = 1;
            int sgnflip = 1;
            const int nn = n + 1;
            for (int k2 = 0; k2 < nn - 1; ++k2) {
                if (m[k2 * nn + k2] == 0) {
                    int p = -1;
                    for (int i = k2 + 1; i < nn; ++i)
                        if (m[i * nn + k2] != 0) { p = i; break; }
                    if (p < 0) { prev = 0; break; }
                    for (int j = 0; j < nn; ++j) std::swap(m[k2 * nn + j], m[p * nn + j]);
                    sgnflip = -sgnflip;
                }
                for (int i = k2 + 1; i < nn; ++i) {
                    for (int j = k2 + 1; j < nn; ++j)
                        m[i * nn + j] =
                            (m[i * nn + j] * m[k2 * nn + k2] - m[i * nn + k2] * m[k2 * nn + j]) /
                            prev;
                    m[i * nn + k2] = 0;
                }
                prev = m[k2 * nn + k2];
            }
            int64_t dv = prev == 0 ? 0 : sgnflip * m[nn * nn - 1];
            w[r] = (long)(sigma * par) * (long)dv;
        } else {
            IntMatrix m(n + 1, n + 1);
            int rr = 0;
            for (int s = 0; s < n + 2; ++s) {
                if (s == r) continue;
                m(rr, 0) = 1;
                for (int i = 0; i < n; ++i) m(rr, i + 1) = (long)pts[s].x[i];
                ++rr;
            }
            w[r] = Int(sigma * par) * det(m);
        }
    }

    int k = 0;
    for (int bi = 0; bi < n; ++bi)
        for (int bj = bi; bj < n; ++bj) {
            Int c = 0;
            for (int r = 0; r < n + 2; ++r) {
                Int h = Int((long)pts[r].x[bi]) * Int((long)pts[r].x[bj]);
                if (bi != bj) h *= 2;
                c += w[r] * h;
            }
            reg.coeffs[k++] = c;
        }
    return reg;
}

DelaunayResult delaunay_test(const Complex& t, int threads) {
    std::vector<FacetRecord> recs = facet_records(t);
    DelaunayResult res;
    res.regulators.resize(recs.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : 1)
    for (long i = 0; i < (long)recs.size(); ++i) {
        if (recs[i].inc.size() != 2) continue;
        GluedPair g = glue(t, recs[i]);
        Regulator r = voronoi_regulator(g.s1, g.apex2);
        r.class1 = g.class1;
        r.class2 = g.class2;
        res.regulators[i] = std::move(r);
    }
    for (const FacetRecord& r : recs)
        if (r.inc.size() != 2) throw error("delaunay_test: input is not facet-closed");

    std::vector<std::vector<Rat>> cone;
    cone.reserve(res.regulators.size());
    for (const Regulator& r : res.regulators) {
        std::vector<Rat> row(r.coeffs.size());
        for (size_t k = 0; k < r.coeffs.size(); ++k) row[k] = Rat(r.coeffs[k]);
        cone.push_back(std::move(row));
    }
    ConeInteriorResult c = cone_interior_point(t.n, cone);
    res.full_dimensional = c.full_dimensional;
    res.slack = c.slack;
    res.witness = c.witness;
    res.witness_pd = c.witness_pd;
    res.is_delaunay = c.full_dimensional && c.witness_pd;
    return res;
}

// ------------------------------------------------------------- regularity --

RegularitySystem build_regularity_system(const Complex& t, int radius) {
    if (radius < 1) throw error("regularity: radius must be >= 1");
    Point lo = Point::zero(t.n), hi = Point::zero(t.n);
    for (int i = 0; i < t.n; ++i) {
        lo.x[i] = -radius;
        hi.x[i] = radius;
    }
    RegularitySystem sys = build_regularity_system_box(t, lo, hi);
    sys.radius = radius;
    return sys;
}

RegularitySystem build_regularity_system_box(const Complex& t, const Point& box_lo,
                                             const Point& box_hi) {
    RegularitySystem sys;
    const int n = t.n;

    // all translates of class reps with every vertex in the box
    struct Cell {
        int class_idx;
        Point shift;
    };
    std::vector<Cell> cells;
    for (size_t ci = 0; ci < t.classes.size(); ++ci) {
        const Simplex& rep = t.classes[ci].rep;
        Point lo = Point::zero(n), hi = Point::zero(n);
        bool nonempty = true;
        for (int i = 0; i < n; ++i) {
            int64_t mn = rep.v[0].x[i], mx = rep.v[0].x[i];
            for (const Point& p : rep.v) {
                mn = std::min(mn, p.x[i]);
                mx = std::max(mx, p.x[i]);
            }
            lo.x[i] = box_lo.x[i] - mn;
            hi.x[i] = box_hi.x[i] - mx;
            if (lo.x[i] > hi.x[i]) nonempty = false;
        }
        if (!nonempty) continue;
        Point v = lo;
        v.n = n;
        for (;;) {
            cells.push_back(Cell{(int)ci, v});
            int d = 0;
            while (d < n && ++v.x[d] > hi.x[d]) v.x[d] = lo.x[d], ++d;
            if (d == n) break;
        }
    }
    sys.simplex_count = (long)cells.size();

    std::map<Point, int> vertex_id;
    auto vid = [&](const Point& p) {
        auto it = vertex_id.find(p);
        if (it != vertex_id.end()) return it->second;
        int id = (int)sys.vertices.size();
        sys.vertices.push_back(p);
        vertex_id.emplace(p, id);
        return id;
    };
    for (const Cell& c : cells)
        for (const Point& p : t.classes[c.class_idx].rep.v) vid(p + c.shift);

    // facet hashing over the selection to find adjacent pairs
    std::map<std::vector<Point>, std::vector<int>> by_facet;
    for (size_t k = 0; k < cells.size(); ++k) {
        const Cell& c = cells[k];
        const Simplex& rep = t.classes[c.class_idx].rep;
        for (int drop = 0; drop <= n; ++drop) {
            std::vector<Point> face;
            for (int j = 0; j <= n; ++j)
                if (j != drop) face.push_back(rep.v[j] + c.shift);
            std::sort(face.begin(), face.end());
            by_facet[std::move(face)].push_back((int)k);
        }
    }

    auto add_constraint = [&](const Cell& c1, const Cell& c2) {
        // f(apex2) >= phi_{T1}(apex2) + 1, scaled by vol(T1):
        // vol*f(a2) - sum_i m_i(a2) f(w_i) >= vol
        const SimplexClass& s1 = t.classes[c1.class_idx];
        const SimplexClass& s2 = t.classes[c2.class_idx];
        Point apex2;
        bool found = false;
        for (const Point& q : s2.rep.v) {
            Point cand = q + c2.shift;
            bool in_s1 = false;
            for (const Point& w : s1.rep.v)
                if (w + c1.shift == cand) in_s1 = true;
            if (!in_s1) {
                apex2 = cand;
                found = true;
                break;
            }
        }
        if (!found) throw error("regularity: adjacent pair shares all vertices");
        RegularitySystem::Constraint con;
        con.rhs = s1.volume;
        std::map<int, Int> acc;
        acc[vid(apex2)] += s1.volume;
        for (int i = 0; i <= n; ++i) {
            Int mi = s1.facets[i].eval(apex2 - c1.shift);  // vol * barycentric_i
            if (mi != 0) acc[vid(s1.rep.v[i] + c1.shift)] -= mi;
        }
        for (auto& [v, coef] : acc)
            if (coef != 0) con.terms.push_back({v, coef});
        sys.constraints.push_back(std::move(con));
    };

    for (auto& [face, ks] : by_facet) {
        if (ks.size() > 2) throw error("regularity: facet covered more than twice in selection");
        if (ks.size() != 2) continue;
        add_constraint(cells[ks[0]], cells[ks[1]]);
        add_constraint(cells[ks[1]], cells[ks[0]]);
    }
    return sys;
}

namespace {

bool verify_heights(const RegularitySystem& sys, const std::vector<Rat>& f) {
    for (const auto& con : sys.constraints) {
        Rat v = 0;
        for (const auto& [k, c] : con.terms) v += Rat(c) * f[k];
        if (v < Rat(con.rhs)) return false;
    }
    return true;
}

}  // namespace

namespace {

// Farkas-search LP over an assembled system: maximize b.y over A^T y = 0,
// y >= 0, b.y <= 1; optimum > 0 certifies emptiness of the height system.
struct FarkasOutcome {
    bool feasible;
    std::vector<Rat> farkas;
    std::vector<Rat> heights;
};

FarkasOutcome farkas_search(const RegularitySystem& sys, long iteration_limit = -1) {
    const int m = (int)sys.constraints.size();
    const int nv = (int)sys.vertices.size();
    LPProblem lp;
    lp.num_vars = m;
    lp.nonneg.assign(m, 1);
    lp.rows.resize(nv + 1);
    for (int v = 0; v < nv; ++v) lp.rows[v] = LPRow{{}, Rel::Eq, Rat(0)};
    lp.rows[nv] = LPRow{{}, Rel::Le, Rat(1)};
    for (int c = 0; c < m; ++c) {
        for (const auto& [v, coef] : sys.constraints[c].terms)
            lp.rows[v].terms.push_back({c, Rat(coef)});
        lp.rows[nv].terms.push_back({c, Rat(sys.constraints[c].rhs)});
        lp.objective.push_back({c, Rat(sys.constraints[c].rhs)});
    }
    lp.maximize = true;
    lp.iteration_limit = iteration_limit;
    LPSolution sol = lp_solve(lp);
    if (sol.status != LPStatus::Optimal) throw error("regularity: farkas LP not optimal");

    FarkasOutcome out;
    if (sol.objective_value > 0) {
        std::vector<Rat> combo(nv, Rat(0));
        Rat rhs = 0;
        for (int c = 0; c < m; ++c) {
            if (sol.point[c] < 0) throw error("regularity: negative farkas multiplier");
            for (const auto& [v, coef] : sys.constraints[c].terms)
                combo[v] += sol.point[c] * Rat(coef);
            rhs += sol.point[c] * Rat(sys.constraints[c].rhs);
        }
        for (const Rat& x : combo)
            if (x != 0) throw error("regularity: farkas combination does not vanish");
        if (rhs <= 0) throw error("regularity: farkas rhs not positive");
        out.feasible = false;
        out.farkas.assign(sol.point.begin(), sol.point.end());
        return out;
    }
    out.feasible = true;
    out.heights.assign(sol.row_duals.begin(), sol.row_duals.begin() + nv);
    if (!verify_heights(sys, out.heights))
        throw error("regularity: dual heights failed exact re-check");
    return out;
}

}  // namespace

PeriodicWitness periodic_regularity_witness(const Complex& t, int period) {
    const int n = t.n;
    const int d = QuadForm::sym_dim(n);
    long residues = 1;
    for (int i = 0; i < n; ++i) residues *= period;
    const int nvars = d + (int)residues;  // A coordinates, then g per residue

    auto residue_of = [&](const Point& p) {
        long r = 0;
        for (int i = n - 1; i >= 0; --i) {
            long c = p.x[i] % period;
            if (c < 0) c += period;
            r = r * period + c;
        }
        return r;
    };

    // constraint functionals over (A, g): one per facet record and shift
    // residue; the affine part of f cancels, the quadratic part does not
    // depend on the shift
    std::vector<std::vector<Rat>> rows;
    for (const FacetRecord& rec : facet_records(t)) {
        if (rec.inc.size() != 2) throw error("periodic witness: input not facet-closed");
        GluedPair g = glue(t, rec);
        for (int dir = 0; dir < 2; ++dir) {
            const Simplex& s1 = dir == 0 ? g.s1 : g.s2;
            const Point& apex2 = dir == 0 ? g.apex2 : g.apex1;
            int cls1 = dir == 0 ? g.class1 : g.class2;
            const SimplexClass& c1 = t.classes[cls1];
            // scaled barycentric weights of apex2 with respect to s1
            Point shift = s1.v[0] - c1.rep.v[0];
            std::vector<Int> w(n + 1);
            for (int i = 0; i <= n; ++i) w[i] = c1.facets[i].eval(apex2 - shift);
            std::vector<Rat> quad(d, Rat(0));
            {
                int k = 0;
                for (int bi = 0; bi < n; ++bi)
                    for (int bj = bi; bj < n; ++bj) {
                        Int v = Int((long)apex2.x[bi]) * Int((long)apex2.x[bj]) * c1.volume;
                        for (int i = 0; i <= n; ++i)
                            v -= w[i] * Int((long)s1.v[i].x[bi]) * Int((long)s1.v[i].x[bj]);
                        if (bi != bj) v *= 2;
                        quad[k++] = Rat(v);
                    }
            }
            Point u = Point::zero(n);
            for (;;) {
                std::vector<Rat> row(nvars, Rat(0));
                for (int k = 0; k < d; ++k) row[k] = quad[k];
                row[d + residue_of(apex2 + u)] += Rat(c1.volume);
                for (int i = 0; i <= n; ++i)
                    if (w[i] != 0) row[d + residue_of(s1.v[i] + u)] -= Rat(w[i]);
                rows.push_back(std::move(row));
                int dd = 0;
                while (dd < n && ++u.x[dd] >= period) u.x[dd] = 0, ++dd;
                if (dd == n) break;
            }
        }
    }

    // maximize the minimum slack over the box |vars| <= 1, via the dual
    // (rows = nvars + 1)
    const long m = (long)rows.size();
    LPProblem lp;
    const long u0 = m, l0 = m + nvars, gvar = m + 2 * nvars;
    lp.num_vars = (int)(gvar + 1);
    lp.nonneg.assign(lp.num_vars, 1);
    lp.rows.resize(nvars + 1);
    for (int k = 0; k < nvars; ++k) {
        LPRow& row = lp.rows[k];
        row.rel = Rel::Eq;
        row.rhs = 0;
        for (long j = 0; j < m; ++j)
            if (rows[j][k] != 0) row.terms.push_back({(int)j, rows[j][k]});
        row.terms.push_back({(int)(u0 + k), Rat(-1)});
        row.terms.push_back({(int)(l0 + k), Rat(1)});
    }
    {
        LPRow& row = lp.rows[nvars];
        row.rel = Rel::Eq;
        row.rhs = 1;
        for (long j = 0; j < m; ++j) row.terms.push_back({(int)j, Rat(1)});
        row.terms.push_back({(int)gvar, Rat(1)});
    }
    for (int k = 0; k < nvars; ++k) {
        lp.objective.push_back({(int)(u0 + k), Rat(-1)});
        lp.objective.push_back({(int)(l0 + k), Rat(-1)});
    }
    lp.objective.push_back({(int)gvar, Rat(-1)});
    lp.maximize = true;
    LPSolution sol = lp_solve(lp);
    if (sol.status != LPStatus::Optimal) throw error("periodic witness: dual LP not optimal");

    PeriodicWitness wres;
    wres.slack = -sol.objective_value;
    std::vector<Rat> x(sol.row_duals.begin(), sol.row_duals.begin() + nvars);
    // exact re-check of the witness slack
    Rat tstar = 1;
    for (long j = 0; j < m; ++j) {
        Rat v = 0;
        for (int k = 0; k < nvars; ++k)
            if (rows[j][k] != 0) v += rows[j][k] * x[k];
        if (v < tstar) tstar = v;
    }
    if (tstar != wres.slack) throw error("periodic witness: slack mismatch");
    wres.found = wres.slack > 0;
    if (wres.found) {
        wres.form = QuadForm::from_sym_coords(n, std::vector<Rat>(x.begin(), x.begin() + d));
        wres.offsets.assign(x.begin() + d, x.end());
    }
    return wres;
}

RegularityProbe nonregularity_probe(const Complex& t, const Point& lo, const Point& hi,
                                    long iteration_limit) {
    RegularityProbe probe;
    probe.sys = build_regularity_system_box(t, lo, hi);
    if (probe.sys.constraints.empty()) {
        probe.feasible = true;
        return probe;
    }
    FarkasOutcome out = farkas_search(probe.sys, iteration_limit);
    probe.feasible = out.feasible;
    probe.farkas = std::move(out.farkas);
    return probe;
}

RegularityResult nonregularity_test(const Complex& t, int radius, int threads) {
    RegularitySystem sys = build_regularity_system(t, radius);
    RegularityResult res;
    res.radius = radius;
    res.num_simplices = sys.simplex_count;
    res.num_points = (long)sys.vertices.size();
    res.num_constraints = (long)sys.constraints.size();

    // Delaunay shortcut: scaled quadratic heights satisfy the strengthened
    // system outright
    DelaunayResult del = delaunay_test(t, threads);
    if (del.is_delaunay) {
        std::vector<Rat> f0(sys.vertices.size());
        for (size_t i = 0; i < sys.vertices.size(); ++i) f0[i] = del.witness.eval(sys.vertices[i]);
        Rat min_slack = 0;
        bool first = true;
        for (const auto& con : sys.constraints) {
            Rat v = 0;
            for (const auto& [k, c] : con.terms) v += Rat(c) * f0[k];
            v /= Rat(con.rhs);  // slack per unit of rhs
            if (first || v < min_slack) min_slack = v;
            first = false;
        }
        if (!first && min_slack > 0) {
            Rat scale = Rat(1) / min_slack;
            for (Rat& v : f0) v *= scale;
            if (!verify_heights(sys, f0))
                throw error("regularity: delaunay witness failed exact re-check");
            res.feasible = true;
            res.witness_heights = std::move(f0);
            return res;
        }
    }

    // Farkas search: maximize b.y with A^T y = 0, y >= 0, b.y <= 1. Positive
    // optimum certifies emptiness of the height system; at optimum 0 the dual
    // multipliers of the vertex rows are feasible heights.
    FarkasOutcome out = farkas_search(sys);
    res.feasible = out.feasible;
    res.farkas = std::move(out.farkas);
    res.witness_heights = std::move(out.heights);
    return res;
}

}  // namespace ptri
