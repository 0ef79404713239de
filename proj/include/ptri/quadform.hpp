#pragma once

#include <vector>

#include "ptri/numeric.hpp"

namespace ptri {

// Symmetric rational n x n quadratic form. Lifts integer points to heights
// A[x] = x^T A x. Positive definiteness is checked, never assumed.
class QuadForm {
public:
    QuadForm() = default;
    explicit QuadForm(int n) : n_(n), a_(size_t(n) * n, Rat(0)) {}

    static QuadForm identity(int n) {
        QuadForm q(n);
        for (int i = 0; i < n; ++i) q.set(i, i, 1);
        return q;
    }

    int dim() const { return n_; }

    const Rat& operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    void set(int i, int j, const Rat& v) {
        a_[size_t(i) * n_ + j] = v;
        a_[size_t(j) * n_ + i] = v;
    }

    bool operator==(const QuadForm& o) const { return n_ == o.n_ && a_ == o.a_; }

    // x^T A x for an integer point
    template <class Vec>
    Rat eval(const Vec& x) const {
        Rat s = 0;
        for (int i = 0; i < n_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n_; ++j) {
                if (x[j] == 0) continue;
                s += (*this)(i, j) * Rat(Int(x[i]) * Int(x[j]));
            }
        }
        return s;
    }

    Rat trace() const {
        Rat s = 0;
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    // Number of independent coordinates of a symmetric form: n(n+1)/2.
    static int sym_dim(int n) { return n * (n + 1) / 2; }

    // Coordinates ordered (0,0),(0,1),...,(0,n-1),(1,1),(1,2),...,(n-1,n-1).
    static QuadForm from_sym_coords(int n, const std::vector<Rat>& c);
    std::vector<Rat> sym_coords() const;

    // Basis form with 1 at sym coordinate k (so the off-diagonal basis forms
    // contribute 2*x_i*x_j to A[x]).
    static QuadForm sym_basis(int n, int k);

private:
    int n_ = 0;
    std::vector<Rat> a_;
};

// All leading principal minors positive, computed exactly.
bool is_positive_definite(const QuadForm& a);

}  // namespace ptri
