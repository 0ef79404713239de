#include "ptri/lp.hpp"

#include <algorithm>

namespace ptri {

namespace {

// Standard form: min cost.x  s.t.  col-space equations A x = b, x >= 0,
// b >= 0. Columns are sparse; artificial columns are appended internally.
struct StdLP {
    int m = 0;
    std::vector<std::vector<std::pair<int, Rat>>> cols;
    std::vector<Rat> b;
    std::vector<Rat> cost;
};

struct StdResult {
    bool feasible = false;
    bool unbounded = false;
    Rat obj = 0;
    std::vector<Rat> x;    // per real column
    std::vector<Rat> y;    // per row: phase-2 duals at optimum, phase-1 duals if infeasible
    std::vector<Rat> ray;  // per real column, when unbounded
};

class Simplex {
public:
    long iteration_limit = -1;
    explicit Simplex(const StdLP& lp)
        : lp_(lp), m_(lp.m), n_((int)lp.cols.size()), basic_(lp.m), in_basis_(n_, false),
          binv_(lp.m, std::vector<Rat>(lp.m, Rat(0))), xb_(lp.b) {
        for (int i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;  // artificial
            binv_[i][i] = 1;
        }
    }

    StdResult run() {
        StdResult res;
        // phase 1: minimize sum of artificials
        std::vector<Rat> cost1(n_, Rat(0));
        phase_cost_ = &cost1;
        art_cost_ = 1;
        Rat obj1 = optimize(/*phase1=*/true);
        if (obj1 > 0) {
            res.feasible = false;
            res.y = duals();
            return res;
        }
        // phase 2
        phase_cost_ = &lp_.cost;
        art_cost_ = 0;
        res.obj = optimize(/*phase1=*/false);
        res.feasible = true;
        res.unbounded = unbounded_;
        res.y = duals();
        if (unbounded_) {
            res.ray.assign(n_, Rat(0));
            res.ray[enter_col_] = 1;
            for (int i = 0; i < m_; ++i)
                if (basic_[i] < n_) res.ray[basic_[i]] = -dir_[i];
        }
        res.x.assign(n_, Rat(0));
        for (int i = 0; i < m_; ++i)
            if (basic_[i] < n_) res.x[basic_[i]] = xb_[i];
        return res;
    }

private:
    Rat col_cost(int j) const { return j < n_ ? (*phase_cost_)[j] : Rat(art_cost_); }

    std::vector<Rat> duals() const {
        std::vector<Rat> y(m_, Rat(0));
        for (int i = 0; i < m_; ++i) {
            Rat cb = col_cost(basic_[i]);
            if (cb == 0) continue;
            for (int j = 0; j < m_; ++j) y[j] += cb * binv_[i][j];
        }
        return y;
    }

    Rat reduced_cost(int j, const std::vector<Rat>& y) const {
        Rat rc = col_cost(j);
        for (const auto& [r, v] : lp_.cols[j]) rc -= y[r] * v;
        return rc;
    }

    // Binv * A_j
    void direction(int j, std::vector<Rat>& u) const {
        u.assign(m_, Rat(0));
        for (const auto& [r, v] : lp_.cols[j])
            for (int i = 0; i < m_; ++i)
                if (binv_[i][r] != 0) u[i] += binv_[i][r] * v;
    }

    Rat optimize(bool phase1) {
        unbounded_ = false;
        int degen_run = 0;
        const int chunk = 3000;  // partial pricing granularity for wide problems
        for (;;) {
            if (iteration_limit >= 0 && ++iterations_ > iteration_limit)
                throw error("lp_solve: iteration limit reached");
            std::vector<Rat> y = duals();
            // entering: Dantzig with partial pricing, falling back to Bland
            // (full scan) after a degenerate run
            bool bland = degen_run > 400;
            int enter = -1;
            Rat best = 0;
            if (bland || n_ <= 2 * chunk) {
                for (int j = 0; j < n_; ++j) {
                    if (in_basis_[j]) continue;
                    Rat rc = reduced_cost(j, y);
                    if (rc < 0) {
                        if (bland) { enter = j; break; }
                        if (enter < 0 || rc < best) { enter = j; best = rc; }
                    }
                }
            } else {
                int scanned = 0;
                while (scanned < n_) {
                    int stop = std::min(n_, cursor_ + chunk);
                    for (int j = cursor_; j < stop; ++j) {
                        if (in_basis_[j]) continue;
                        Rat rc = reduced_cost(j, y);
                        if (rc < 0 && (enter < 0 || rc < best)) {
                            enter = j;
                            best = rc;
                        }
                    }
                    scanned += stop - cursor_;
                    cursor_ = stop == n_ ? 0 : stop;
                    if (enter >= 0) break;
                }
            }
            if (enter < 0) {
                Rat obj = 0;
                for (int i = 0; i < m_; ++i) obj += col_cost(basic_[i]) * xb_[i];
                return obj;
            }
            direction(enter, dir_);
            // ratio test. Rows holding an artificial cap the step at zero as
            // soon as the direction touches them, which also drives the
            // artificials out lazily.
            int leave = -1;
            bool have_ratio = false;
            Rat theta = 0;
            for (int i = 0; i < m_; ++i) {
                bool art_at_zero = basic_[i] >= n_ && xb_[i] == 0;
                if (art_at_zero ? dir_[i] == 0 : dir_[i] <= 0) continue;
                Rat ratio = art_at_zero ? Rat(0) : Rat(xb_[i] / dir_[i]);
                if (!have_ratio || ratio < theta ||
                    (ratio == theta && basic_[i] < basic_[leave])) {
                    have_ratio = true;
                    theta = ratio;
                    leave = i;
                }
            }
            if (!have_ratio) {
                if (phase1) throw error("simplex: phase 1 unbounded");
                unbounded_ = true;
                enter_col_ = enter;
                return 0;
            }
            degen_run = (theta == 0) ? degen_run + 1 : 0;
            pivot(enter, leave);
        }
    }

    void pivot(int enter, int leave) {
        Rat piv = dir_[leave];
        for (int j = 0; j < m_; ++j) binv_[leave][j] /= piv;
        xb_[leave] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave || dir_[i] == 0) continue;
            Rat f = dir_[i];
            for (int j = 0; j < m_; ++j)
                if (binv_[leave][j] != 0) binv_[i][j] -= f * binv_[leave][j];
            xb_[i] -= f * xb_[leave];
        }
        if (basic_[leave] < n_) in_basis_[basic_[leave]] = false;
        in_basis_[enter] = true;
        basic_[leave] = enter;
    }

    const StdLP& lp_;
    int m_, n_;
    std::vector<int> basic_;
    std::vector<bool> in_basis_;
    std::vector<std::vector<Rat>> binv_;
    std::vector<Rat> xb_;
    std::vector<Rat> dir_;
    const std::vector<Rat>* phase_cost_ = nullptr;
    int art_cost_ = 0;
    bool unbounded_ = false;
    int enter_col_ = -1;
    int cursor_ = 0;
    long iterations_ = 0;
};

struct Conversion {
    StdLP std;
    std::vector<int> var_col;    // first column of each variable
    std::vector<bool> is_split;  // free variable split into two columns
    std::vector<int> row_sign;   // +1/-1 applied when normalizing rhs >= 0
    std::vector<bool> was_le;
};

Conversion convert(const LPProblem& p) {
    Conversion cv;
    const int nv = p.num_vars;
    cv.var_col.resize(nv);
    cv.is_split.resize(nv);
    cv.row_sign.assign(p.rows.size(), 1);
    cv.was_le.assign(p.rows.size(), false);
    cv.std.m = (int)p.rows.size();
    cv.std.b.assign(p.rows.size(), Rat(0));

    for (int k = 0; k < nv; ++k) {
        bool nn = !p.nonneg.empty() && p.nonneg[k];
        cv.var_col[k] = (int)cv.std.cols.size();
        cv.is_split[k] = !nn;
        cv.std.cols.emplace_back();
        if (!nn) cv.std.cols.emplace_back();
    }

    for (size_t i = 0; i < p.rows.size(); ++i) {
        const LPRow& row = p.rows[i];
        int sgn_le = row.rel == Rel::Le ? -1 : 1;  // orient as >= / ==
        cv.was_le[i] = row.rel == Rel::Le;
        Rat rhs = Rat(sgn_le) * row.rhs;
        int s = rhs < 0 ? -1 : 1;
        cv.row_sign[i] = s;
        cv.std.b[i] = Rat(s) * rhs;
        Rat scale = Rat(s * sgn_le);
        for (const auto& [k, c] : row.terms) {
            if (c == 0) continue;
            Rat v = scale * c;
            cv.std.cols[cv.var_col[k]].push_back({(int)i, v});
            if (cv.is_split[k]) cv.std.cols[cv.var_col[k] + 1].push_back({(int)i, -v});
        }
        if (row.rel != Rel::Eq) {
            // slack: a.x - s = b before sign normalization
            cv.std.cols.emplace_back();
            cv.std.cols.back().push_back({(int)i, Rat(-s)});
        }
    }

    cv.std.cost.assign(cv.std.cols.size(), Rat(0));
    Rat obj_scale = p.maximize ? Rat(-1) : Rat(1);
    for (const auto& [k, c] : p.objective) {
        cv.std.cost[cv.var_col[k]] += obj_scale * c;
        if (cv.is_split[k]) cv.std.cost[cv.var_col[k] + 1] -= obj_scale * c;
    }
    return cv;
}

std::vector<Rat> map_point(const LPProblem& p, const Conversion& cv, const std::vector<Rat>& x) {
    std::vector<Rat> pt(p.num_vars, Rat(0));
    for (int k = 0; k < p.num_vars; ++k) {
        pt[k] = x[cv.var_col[k]];
        if (cv.is_split[k]) pt[k] -= x[cv.var_col[k] + 1];
    }
    return pt;
}

Rat eval_row(const LPRow& row, const std::vector<Rat>& x) {
    Rat s = 0;
    for (const auto& [k, c] : row.terms) s += c * x[k];
    return s;
}

void verify_feasible(const LPProblem& p, const std::vector<Rat>& x) {
    for (const LPRow& row : p.rows) {
        Rat v = eval_row(row, x);
        bool ok = row.rel == Rel::Ge ? v >= row.rhs : row.rel == Rel::Le ? v <= row.rhs
                                                                         : v == row.rhs;
        if (!ok) throw error("lp_solve: point fails exact feasibility re-check");
    }
    if (!p.nonneg.empty())
        for (int k = 0; k < p.num_vars; ++k)
            if (p.nonneg[k] && x[k] < 0) throw error("lp_solve: point fails nonneg re-check");
}

void verify_farkas(const LPProblem& p, const std::vector<Rat>& farkas) {
    std::vector<Rat> combo(p.num_vars, Rat(0));
    Rat rhs = 0;
    for (size_t i = 0; i < p.rows.size(); ++i) {
        const LPRow& row = p.rows[i];
        Rat lam = farkas[i];
        if (row.rel != Rel::Eq && lam < 0) throw error("lp_solve: negative farkas multiplier");
        Rat orient = row.rel == Rel::Le ? Rat(-1) : Rat(1);
        for (const auto& [k, c] : row.terms) combo[k] += lam * orient * c;
        rhs += lam * orient * row.rhs;
    }
    for (int k = 0; k < p.num_vars; ++k) {
        bool nn = !p.nonneg.empty() && p.nonneg[k];
        if (nn ? combo[k] > 0 : combo[k] != 0)
            throw error("lp_solve: farkas combination does not vanish");
    }
    if (rhs <= 0) throw error("lp_solve: farkas rhs not positive");
}

void verify_ray(const LPProblem& p, const std::vector<Rat>& ray) {
    for (const LPRow& row : p.rows) {
        Rat v = eval_row(row, ray);
        bool ok = row.rel == Rel::Ge ? v >= 0 : row.rel == Rel::Le ? v <= 0 : v == 0;
        if (!ok) throw error("lp_solve: ray fails homogeneous re-check");
    }
    Rat dir = 0;
    for (const auto& [k, c] : p.objective) dir += c * ray[k];
    if (p.maximize ? dir <= 0 : dir >= 0) throw error("lp_solve: ray does not improve objective");
}

}  // namespace

LPSolution lp_solve(const LPProblem& p) {
    Conversion cv = convert(p);
    Simplex solver(cv.std);
    solver.iteration_limit = p.iteration_limit;
    StdResult r = solver.run();
    LPSolution sol;

    if (!r.feasible) {
        sol.status = LPStatus::Infeasible;
        sol.farkas.resize(p.rows.size());
        for (size_t i = 0; i < p.rows.size(); ++i)
            sol.farkas[i] = r.y[i] * Rat(cv.row_sign[i]);
        verify_farkas(p, sol.farkas);
        return sol;
    }

    sol.point = map_point(p, cv, r.x);
    verify_feasible(p, sol.point);

    if (r.unbounded) {
        sol.status = LPStatus::Unbounded;
        sol.ray = map_point(p, cv, r.ray);
        verify_ray(p, sol.ray);
        return sol;
    }

    sol.status = LPStatus::Optimal;
    sol.objective_value = p.maximize ? Rat(-r.obj) : r.obj;
    sol.row_duals.resize(p.rows.size());
    Rat kappa = p.maximize ? Rat(-1) : Rat(1);
    for (size_t i = 0; i < p.rows.size(); ++i) {
        Rat sgn_le = cv.was_le[i] ? Rat(-1) : Rat(1);
        sol.row_duals[i] = kappa * Rat(cv.row_sign[i]) * sgn_le * r.y[i];
    }

    // full optimality certificate re-check: dual sign conditions, dual
    // feasibility per variable, strong duality
    Rat dual_val = 0;
    for (size_t i = 0; i < p.rows.size(); ++i) {
        const LPRow& row = p.rows[i];
        const Rat& d = sol.row_duals[i];
        bool sign_ok = row.rel == Rel::Eq ||
                       (p.maximize == (row.rel == Rel::Le) ? d >= 0 : d <= 0);
        if (!sign_ok) throw error("lp_solve: dual sign condition violated");
        dual_val += d * row.rhs;
    }
    if (dual_val != sol.objective_value) throw error("lp_solve: duality gap in exact re-check");
    std::vector<Rat> coldual(p.num_vars, Rat(0));
    for (size_t i = 0; i < p.rows.size(); ++i)
        for (const auto& [k, c] : p.rows[i].terms) coldual[k] += sol.row_duals[i] * c;
    std::vector<Rat> obj_coeff(p.num_vars, Rat(0));
    for (const auto& [k, c] : p.objective) obj_coeff[k] += c;
    for (int k = 0; k < p.num_vars; ++k) {
        bool nn = !p.nonneg.empty() && p.nonneg[k];
        bool ok = nn ? (p.maximize ? coldual[k] >= obj_coeff[k] : coldual[k] <= obj_coeff[k])
                     : coldual[k] == obj_coeff[k];
        if (!ok) throw error("lp_solve: dual feasibility re-check failed");
    }
    return sol;
}

}  // namespace ptri
