#include "ptri/matrix.hpp"

namespace ptri {

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw error("det: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int signflip = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            w.swap_rows(k, p);
            signflip = -signflip;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = t / prev;  // exact division, Bareiss invariant
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return signflip > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    const int rows = m.rows(), cols = m.cols();

    auto add_mul = [&](int dst, int src, const Int& f) {
        for (int k = 0; k < cols; ++k) h(dst, k) += f * h(src, k);
        for (int k = 0; k < rows; ++k) u(dst, k) += f * u(src, k);
    };
    auto do_swap = [&](int i, int j) {
        h.swap_rows(i, j);
        u.swap_rows(i, j);
    };
    auto negate = [&](int i) {
        for (int k = 0; k < cols; ++k) h(i, k) = -h(i, k);
        for (int k = 0; k < rows; ++k) u(i, k) = -u(i, k);
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd out the column below row r via extended euclid row ops
        for (int i = r + 1; i < rows; ++i) {
            if (h(i, c) == 0) continue;
            if (h(r, c) == 0) {
                do_swap(r, i);
                continue;
            }
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), h(r, c).get_mpz_t(),
                       h(i, c).get_mpz_t());
            Int a = h(r, c) / g, b = h(i, c) / g;
            // rows (r,i) <- ((p,q),(-b,a)) * rows (r,i); det = pa+qb = 1
            for (int k = 0; k < cols; ++k) {
                Int hr = h(r, k), hi = h(i, k);
                h(r, k) = p * hr + q * hi;
                h(i, k) = a * hi - b * hr;
            }
            for (int k = 0; k < rows; ++k) {
                Int ur = u(r, k), ui = u(i, k);
                u(r, k) = p * ur + q * ui;
                u(i, k) = a * ui - b * ur;
            }
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) negate(r);
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q != 0) add_mul(i, r, Int(-q));
        }
        ++r;
    }
    return {h, u};
}

std::vector<std::vector<Int>> kernel(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // rational Gauss-Jordan
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = Rat(m(i, j));

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat inv = a[r][c];
        for (int j = 0; j < cols; ++j) a[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Int>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
        std::vector<Int> w = clear_denominators(v);
        primitive_normalize(w);
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace ptri
