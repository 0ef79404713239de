#include "ptri/polyhedron.hpp"

#include <algorithm>

#include "ptri/lp.hpp"

namespace ptri {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted
    size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
    }
    return true;
}

struct Ray {
    std::vector<Int> v;
    std::vector<int> tight;  // sorted indices of constraints satisfied with equality
};

}  // namespace

ConeGenerators cone_dual_description(int dim, const std::vector<std::vector<Int>>& cons_in) {
    // drop identically-zero constraints so tight-set indices are consistent
    std::vector<std::vector<Int>> cons;
    for (const auto& c : cons_in)
        if (!std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; }))
            cons.push_back(c);

    std::vector<std::vector<Int>> lines;
    for (int i = 0; i < dim; ++i) {
        std::vector<Int> e(dim, Int(0));
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<Ray> rays;

    for (int t = 0; t < (int)cons.size(); ++t) {
        const std::vector<Int>& c = cons[t];

        int l0 = -1;
        for (size_t i = 0; i < lines.size(); ++i)
            if (dot(c, lines[i]) != 0) { l0 = (int)i; break; }

        if (l0 >= 0) {
            std::vector<Int> pivot = lines[l0];
            Int cp = dot(c, pivot);
            if (cp < 0) {
                for (Int& x : pivot) x = -x;
                cp = -cp;
            }
            std::vector<std::vector<Int>> new_lines;
            for (size_t i = 0; i < lines.size(); ++i) {
                if ((int)i == l0) continue;
                Int cl = dot(c, lines[i]);
                std::vector<Int> w(dim);
                for (int k = 0; k < dim; ++k) w[k] = cp * lines[i][k] - cl * pivot[k];
                primitive_normalize(w, false);
                new_lines.push_back(std::move(w));
            }
            lines = std::move(new_lines);
            for (Ray& r : rays) {
                Int cr = dot(c, r.v);
                if (cr != 0) {
                    for (int k = 0; k < dim; ++k) r.v[k] = cp * r.v[k] - cr * pivot[k];
                    primitive_normalize(r.v, false);
                }
                r.tight.push_back(t);  // projected into the hyperplane
            }
            Ray nr;
            nr.v = std::move(pivot);
            for (int u = 0; u < t; ++u) nr.tight.push_back(u);
            rays.push_back(std::move(nr));
            continue;
        }

        std::vector<int> pos, neg, zer;
        std::vector<Int> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(c, rays[i].v);
            (val[i] > 0 ? pos : val[i] < 0 ? neg : zer).push_back((int)i);
        }
        if (neg.empty()) {
            for (int i : zer) rays[i].tight.push_back(t);
            continue;
        }
        std::vector<Ray> next;
        for (int i : pos) next.push_back(rays[i]);
        for (int i : zer) {
            next.push_back(rays[i]);
            next.back().tight.push_back(t);
        }
        for (int p : pos)
            for (int n : neg) {
                std::vector<int> common;
                std::set_intersection(rays[p].tight.begin(), rays[p].tight.end(),
                                      rays[n].tight.begin(), rays[n].tight.end(),
                                      std::back_inserter(common));
                bool adjacent = true;
                for (size_t i = 0; i < rays.size() && adjacent; ++i) {
                    if ((int)i == p || (int)i == n) continue;
                    if (subset(common, rays[i].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr;
                nr.v.resize(dim);
                for (int k = 0; k < dim; ++k)
                    nr.v[k] = val[p] * rays[n].v[k] - val[n] * rays[p].v[k];
                primitive_normalize(nr.v, false);
                nr.tight = common;
                nr.tight.push_back(t);
                std::sort(nr.tight.begin(), nr.tight.end());
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }

    ConeGenerators g;
    g.lines = std::move(lines);
    for (Ray& r : rays) {
        g.rays.push_back(std::move(r.v));
        g.tight.push_back(std::move(r.tight));
    }
    return g;
}

VRepresentation dual_description(const HPolyhedron& p) {
    // homogenize: y = (x0, x), x0 >= 0, eq rows become two inequalities
    std::vector<std::vector<Int>> cons;
    auto to_con = [&](const LinearExpr& e, int s) {
        std::vector<Rat> v;
        v.push_back(Rat(s) * e.constant);
        for (const Rat& c : e.coeffs) v.push_back(Rat(s) * c);
        cons.push_back(clear_denominators(v));
    };
    for (const LinearExpr& e : p.ineqs) to_con(e, 1);
    for (const LinearExpr& e : p.eqs) {
        to_con(e, 1);
        to_con(e, -1);
    }
    {
        std::vector<Int> x0(p.dim + 1, Int(0));
        x0[0] = 1;
        cons.push_back(std::move(x0));
    }

    ConeGenerators g = cone_dual_description(p.dim + 1, cons);
    VRepresentation out;
    for (const auto& r : g.rays) {
        if (r[0] > 0) {
            std::vector<Rat> vert(p.dim);
            for (int i = 0; i < p.dim; ++i) vert[i] = Rat(r[i + 1]) / Rat(r[0]);
            out.vertices.push_back(std::move(vert));
        } else {
            std::vector<Int> ray(r.begin() + 1, r.end());
            out.rays.push_back(std::move(ray));
        }
    }
    for (const auto& l : g.lines) {
        std::vector<Int> line(l.begin() + 1, l.end());
        out.lines.push_back(std::move(line));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

namespace {

LPProblem polyhedron_lp(const HPolyhedron& p) {
    LPProblem lp;
    lp.num_vars = p.dim;
    auto add = [&](const LinearExpr& e, Rel rel) {
        LPRow& row = lp.add_row(rel, -e.constant);
        for (int i = 0; i < p.dim; ++i)
            if (e.coeffs[i] != 0) row.terms.push_back({i, e.coeffs[i]});
    };
    for (const LinearExpr& e : p.ineqs) add(e, Rel::Ge);
    for (const LinearExpr& e : p.eqs) add(e, Rel::Eq);
    return lp;
}

void scan(const HPolyhedron& p, const std::vector<std::vector<Int>>& icons,
          const std::vector<Int>& lo, const std::vector<Int>& hi, std::vector<Int>& point,
          std::vector<Int>& partial, int depth, std::vector<std::vector<Int>>& out) {
    if (depth == p.dim) {
        for (const Int& s : partial)
            if (s < 0) return;
        out.push_back(point);
        return;
    }
    for (Int v = lo[depth]; v <= hi[depth]; ++v) {
        point[depth] = v;
        std::vector<Int> saved = partial;
        for (size_t c = 0; c < icons.size(); ++c) partial[c] += icons[c][depth + 1] * v;
        scan(p, icons, lo, hi, point, partial, depth + 1, out);
        partial = std::move(saved);
    }
}

}  // namespace

std::vector<std::vector<Int>> integer_points(const HPolyhedron& p) {
    LPProblem base = polyhedron_lp(p);
    std::vector<Int> lo(p.dim), hi(p.dim);
    for (int i = 0; i < p.dim; ++i) {
        for (int s = 0; s < 2; ++s) {
            LPProblem lp = base;
            lp.objective = {{i, Rat(1)}};
            lp.maximize = s == 0;
            LPSolution sol = lp_solve(lp);
            if (sol.status == LPStatus::Infeasible) return {};
            if (sol.status == LPStatus::Unbounded) {
                std::string dir;
                for (const Rat& r : sol.ray) dir += to_string(r) + " ";
                throw error("integer_points: unbounded, direction " + dir);
            }
            (s == 0 ? hi[i] : lo[i]) =
                s == 0 ? rat_floor(sol.objective_value) : rat_ceil(sol.objective_value);
        }
        if (lo[i] > hi[i]) return {};
    }

    // integer-cleared constraints as (c0, coeffs...) rows
    std::vector<std::vector<Int>> icons;
    auto add_icon = [&](const LinearExpr& e, int s) {
        std::vector<Rat> v;
        v.push_back(Rat(s) * e.constant);
        for (const Rat& c : e.coeffs) v.push_back(Rat(s) * c);
        icons.push_back(clear_denominators(v));
    };
    for (const LinearExpr& e : p.ineqs) add_icon(e, 1);
    for (const LinearExpr& e : p.eqs) {
        add_icon(e, 1);
        add_icon(e, -1);
    }

    std::vector<std::vector<Int>> out;
    std::vector<Int> point(p.dim), partial(icons.size());
    for (size_t c = 0; c < icons.size(); ++c) partial[c] = icons[c][0];
    scan(p, icons, lo, hi, point, partial, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

ConeInteriorResult cone_interior_point(int n, const std::vector<std::vector<Rat>>& cone_ineqs) {
    const int d = QuadForm::sym_dim(n);
    const long m = (long)cone_ineqs.size();
    for (const auto& ell : cone_ineqs)
        if ((int)ell.size() != d) throw error("cone_interior_point: bad functional length");

    std::vector<int> is_diag(d, 0);
    {
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) is_diag[k++] = i == j;
    }

    // the primal (max t s.t. l_j(a) >= t, tr a = 1, |a_k| <= 1, t <= 1) has
    // many rows and few variables; solve its dual, whose basis has d+1 rows,
    // and read the witness off the equality-row duals
    LPProblem lp;
    // vars: lambda_j (m), u_k (d), l_k (d), gamma, nu(free)
    const long u0 = m, l0 = m + d, gvar = m + 2 * d, nuvar = gvar + 1;
    lp.num_vars = (int)(nuvar + 1);
    lp.nonneg.assign(lp.num_vars, 1);
    lp.nonneg[nuvar] = 0;
    lp.rows.resize(d + 1);
    for (int k = 0; k < d; ++k) {
        LPRow& row = lp.rows[k];
        row.rel = Rel::Eq;
        row.rhs = 0;
        for (long j = 0; j < m; ++j)
            if (cone_ineqs[j][k] != 0) row.terms.push_back({(int)j, cone_ineqs[j][k]});
        row.terms.push_back({(int)(u0 + k), Rat(-1)});
        row.terms.push_back({(int)(l0 + k), Rat(1)});
        if (is_diag[k]) row.terms.push_back({(int)nuvar, Rat(-1)});
    }
    {
        LPRow& row = lp.rows[d];
        row.rel = Rel::Eq;
        row.rhs = 1;
        for (long j = 0; j < m; ++j) row.terms.push_back({(int)j, Rat(1)});
        row.terms.push_back({(int)gvar, Rat(1)});
    }
    for (int k = 0; k < d; ++k) {
        lp.objective.push_back({(int)(u0 + k), Rat(-1)});
        lp.objective.push_back({(int)(l0 + k), Rat(-1)});
    }
    lp.objective.push_back({(int)gvar, Rat(-1)});
    lp.objective.push_back({(int)nuvar, Rat(-1)});
    lp.maximize = true;

    LPSolution sol = lp_solve(lp);
    if (sol.status != LPStatus::Optimal)
        throw error("cone_interior_point: dual LP not optimal");
    ConeInteriorResult res;
    res.slack = -sol.objective_value;  // the dual's optimum is -t*
    res.full_dimensional = res.slack > 0;
    std::vector<Rat> coords(sol.row_duals.begin(), sol.row_duals.begin() + d);
    {
        // exact re-check: the recovered point is primal-feasible and achieves
        // the duality-certified optimum
        Rat tstar = 1;
        for (long j = 0; j < m; ++j) {
            Rat v = 0;
            for (int k = 0; k < d; ++k) v += cone_ineqs[j][k] * coords[k];
            if (v < tstar) tstar = v;
        }
        Rat trace = 0;
        for (int k = 0; k < d; ++k) {
            if (coords[k] > 1 || coords[k] < -1)
                throw error("cone_interior_point: witness outside the box");
            if (is_diag[k]) trace += coords[k];
        }
        if (trace != 1) throw error("cone_interior_point: witness off the trace slab");
        if (tstar != res.slack) throw error("cone_interior_point: witness slack mismatch");
    }

    if (res.full_dimensional && !is_positive_definite(QuadForm::from_sym_coords(n, coords))) {
        // tie-break on the optimal face: pull the witness toward identity/n
        // (L1 projection), which lands on a PD form whenever the face has one
        std::vector<Rat> target(d, Rat(0));
        {
            int k = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    if (i == j) target[k] = frac(1, n);
                    ++k;
                }
        }
        LPProblem lp2;
        lp2.num_vars = 2 * d;  // a, then deviations u
        for (const auto& ell : cone_ineqs) {
            LPRow& row = lp2.add_row(Rel::Ge, res.slack);
            for (int k = 0; k < d; ++k)
                if (ell[k] != 0) row.terms.push_back({k, ell[k]});
        }
        {
            LPRow& tr = lp2.add_row(Rel::Eq, Rat(1));
            int k = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    if (i == j) tr.terms.push_back({k, Rat(1)});
                    ++k;
                }
        }
        for (int k = 0; k < d; ++k) {
            lp2.add_row(Rel::Le, Rat(1)).terms.push_back({k, Rat(1)});
            lp2.add_row(Rel::Ge, Rat(-1)).terms.push_back({k, Rat(1)});
            LPRow& up = lp2.add_row(Rel::Ge, target[k]);
            up.terms = {{d + k, Rat(1)}, {k, Rat(1)}};  // u_k + a_k >= c_k
            LPRow& dn = lp2.add_row(Rel::Ge, -target[k]);
            dn.terms = {{d + k, Rat(1)}, {k, Rat(-1)}};  // u_k - a_k >= -c_k
            lp2.objective.push_back({d + k, Rat(1)});
        }
        lp2.maximize = false;
        LPSolution s2 = lp_solve(lp2);
        if (s2.status == LPStatus::Optimal)
            coords.assign(s2.point.begin(), s2.point.begin() + d);
    }

    res.witness = QuadForm::from_sym_coords(n, coords);
    res.witness_pd = is_positive_definite(res.witness);
    return res;
}

}  // namespace ptri
