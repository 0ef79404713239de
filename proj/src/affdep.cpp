#include "ptri/affdep.hpp"

namespace ptri {

AffineDependence affine_dependence(const std::vector<std::vector<Int>>& pts) {
    if (pts.empty()) throw error("affine_dependence: no points");
    const int n = (int)pts[0].size();
    if ((int)pts.size() != n + 2) throw error("affine_dependence: need n+2 points in dimension n");
    for (const auto& p : pts)
        if ((int)p.size() != n) throw error("affine_dependence: inconsistent point dimension");

    // columns (1, v_i); the dependence is the kernel
    IntMatrix m(n + 1, n + 2);
    for (int j = 0; j < n + 2; ++j) {
        m(0, j) = 1;
        for (int i = 0; i < n; ++i) m(i + 1, j) = pts[j][i];
    }
    auto basis = kernel(m);
    if (basis.size() != 1)
        throw error("affine_dependence: points span dimension < n (dependence space dimension " +
                    std::to_string(basis.size()) + ")");

    AffineDependence d;
    d.points = pts;
    d.coeffs = std::move(basis[0]);
    return d;
}

}  // namespace ptri
