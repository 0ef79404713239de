#pragma once

// Fraction-free integer simplex for the tiny LPs of the pairwise
// compatibility test. Dictionary entries stay subdeterminants of the input
// (integer pivoting via the Bareiss two-term identity), so arithmetic is
// exact in int64 with 128-bit products; exceeding the guard bound aborts to
// the caller's exact-rational fallback. Minimization convention; row 0 is
// den * (reduced costs | -objective).

#include <cstdint>
#include <vector>

namespace ptri::smalllp {

constexpr int64_t kGuard = int64_t(1) << 60;

class Dict {
public:
    // m equality rows A x = b (b >= 0), nv stored columns, artificial basis
    void init(int m, int nv) {
        rows_ = m;
        nv_ = nv;
        cols_ = nv + 1;
        m_.assign((size_t)(m + 1) * cols_, 0);
        basis_.assign(m + 1, -1);  // -1: artificial
        den_ = 1;
        overflow_ = false;
    }

    int64_t& a(int i, int j) { return m_[(size_t)i * cols_ + j]; }
    int64_t& rhs(int i) { return m_[(size_t)i * cols_ + nv_]; }
    int64_t rhs(int i) const { return m_[(size_t)i * cols_ + nv_]; }
    bool overflowed() const { return overflow_; }
    int64_t den() const { return den_; }

    // phase 1: minimize the sum of artificials; callable once after filling
    // rows. returns objective sign (0 feasible, > 0 infeasible), -1 overflow
    int phase1() {
        for (int j = 0; j <= nv_; ++j) {
            __int128 s = 0;
            for (int i = 1; i <= rows_; ++i) s -= a(i, j);
            if (!fits(s)) return ovf();
            a(0, j) = (int64_t)s;
        }
        if (!optimize() || unbounded_) return ovf();
        if (rhs(0) != 0) return 1;
        drive_out_artificials();
        return overflow_ ? ovf() : 0;
    }

    // replace the objective with minimize c (over stored columns); requires a
    // feasible dictionary. returns false on overflow or an improving ray
    bool set_objective(const std::vector<int64_t>& c) {
        for (int j = 0; j <= nv_; ++j) {
            __int128 s = (__int128)den_ * (j < nv_ ? c[j] : 0);
            for (int i = 1; i <= rows_; ++i)
                if (basis_[i] >= 0 && c[basis_[i]] != 0) s -= (__int128)c[basis_[i]] * a(i, j);
            if (!fits(s)) {
                overflow_ = true;
                return false;
            }
            a(0, j) = (int64_t)s;
        }
        return optimize() && !unbounded_;
    }

    // sign of the current minimum: value = -rhs(0)/den
    int min_sign() const { return rhs(0) > 0 ? -1 : rhs(0) < 0 ? 1 : 0; }

private:
    bool fits(__int128 v) const { return v < kGuard && v > -kGuard; }
    int ovf() {
        overflow_ = true;
        return -1;
    }

    void pivot(int r, int s) {
        if (a(r, s) < 0)
            for (int j = 0; j <= nv_; ++j) a(r, j) = -a(r, j);
        int64_t p = a(r, s);
        for (int i = 0; i <= rows_; ++i) {
            if (i == r) continue;
            int64_t mis = a(i, s);
            for (int j = 0; j <= nv_; ++j) {
                __int128 t = ((__int128)p * a(i, j) - (__int128)mis * a(r, j)) / den_;
                if (!fits(t)) {
                    overflow_ = true;
                    return;
                }
                a(i, j) = (int64_t)t;
            }
        }
        den_ = p;
        basis_[r] = s;
    }

    int entering(bool bland) const {
        int best = -1;
        int64_t best_v = 0;
        for (int j = 0; j < nv_; ++j) {
            int64_t rc = m_[(size_t)0 * cols_ + j];
            if (rc < 0) {
                if (bland) return j;
                if (best < 0 || rc < best_v) {
                    best = j;
                    best_v = rc;
                }
            }
        }
        return best;
    }

    // Bland variable order: real columns by index, artificials after (nv_ + row)
    int var_order(int i) const { return basis_[i] >= 0 ? basis_[i] : nv_ + i; }

    int leaving(int s) {
        int r = -1;
        bool r_zero_art = false;
        for (int i = 1; i <= rows_; ++i) {
            int64_t dir = a(i, s);
            bool art_zero = basis_[i] < 0 && rhs(i) == 0;
            if (art_zero ? dir == 0 : dir <= 0) continue;
            if (r < 0) {
                r = i;
                r_zero_art = art_zero;
                continue;
            }
            // ratio of an artificial-at-zero row counts as 0
            __int128 lhs = art_zero ? 0 : (__int128)rhs(i) * (r_zero_art ? 1 : a(r, s));
            __int128 rv = r_zero_art ? 0 : (__int128)rhs(r) * (art_zero ? 1 : a(i, s));
            if (lhs < rv || (lhs == rv && var_order(i) < var_order(r))) {
                r = i;
                r_zero_art = art_zero;
            }
        }
        return r;
    }

    bool optimize() {
        unbounded_ = false;
        int degen = 0;
        for (int iter = 0;; ++iter) {
            if (iter > 100000) {
                overflow_ = true;  // safety valve; fall back to the exact path
                return false;
            }
            int s = entering(degen > 60);
            if (s < 0) return true;
            int r = leaving(s);
            if (r < 0) {
                unbounded_ = true;  // cannot happen on our bounded instances
                return true;
            }
            bool was_degen = rhs(r) == 0;
            pivot(r, s);
            if (overflow_) return false;
            degen = was_degen ? degen + 1 : 0;
        }
    }

    void drive_out_artificials() {
        for (int i = 1; i <= rows_; ++i) {
            if (basis_[i] >= 0) continue;
            for (int j = 0; j < nv_; ++j)
                if (a(i, j) != 0) {
                    pivot(i, j);
                    if (overflow_) return;
                    break;
                }
            // an all-zero row is redundant and its artificial stays at zero
        }
    }

    int rows_ = 0, nv_ = 0, cols_ = 0;
    std::vector<int64_t> m_;
    std::vector<int> basis_;
    int64_t den_ = 1;
    bool overflow_ = false;
    bool unbounded_ = false;
};

}  // namespace ptri::smalllp
