#include "ptri/quadform.hpp"

namespace ptri {

QuadForm QuadForm::from_sym_coords(int n, const std::vector<Rat>& c) {
    if ((int)c.size() != sym_dim(n)) throw error("from_sym_coords: wrong length");
    QuadForm q(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) q.set(i, j, c[k++]);
    return q;
}

std::vector<Rat> QuadForm::sym_coords() const {
    std::vector<Rat> c;
    c.reserve(sym_dim(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) c.push_back((*this)(i, j));
    return c;
}

QuadForm QuadForm::sym_basis(int n, int k) {
    std::vector<Rat> c(sym_dim(n), Rat(0));
    c[k] = 1;
    return from_sym_coords(n, c);
}

bool is_positive_definite(const QuadForm& a) {
    const int n = a.dim();
    // leading principal minors via rational elimination
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = a(i, j);
    Rat minor = 1;
    for (int k = 0; k < n; ++k) {
        if (w[k][k] <= 0) return false;
        minor *= w[k][k];
        if (minor <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            if (w[i][k] == 0) continue;
            Rat f = w[i][k] / w[k][k];
            for (int j = k; j < n; ++j) w[i][j] -= f * w[k][j];
        }
    }
    return true;
}

}  // namespace ptri
