#include "ptri/refine.hpp"

#include <algorithm>
#include <numeric>

#include "ptri/polyhedron.hpp"

namespace ptri {

PolytopeClass make_tile(std::vector<Point> verts) {
    if (verts.empty()) throw error("make_tile: empty vertex set");
    auto [canon, shift] = canonical_point_set(std::move(verts));
    PolytopeClass p;
    p.verts = std::move(canon);
    p.key = point_set_key(p.verts);
    return p;
}

std::vector<PolytopeClass> cube_tiling(int n) {
    std::vector<Point> verts;
    for (long mask = 0; mask < (1L << n); ++mask) {
        Point p = Point::zero(n);
        for (int i = 0; i < n; ++i) p.x[i] = (mask >> i) & 1;
        verts.push_back(p);
    }
    return {make_tile(std::move(verts))};
}

RefineResult refine(int n, const std::vector<PolytopeClass>& tiling, const QuadForm& a,
                    int threads) {
    if (a.dim() != n) throw error("refine: form dimension mismatch");
    if (!is_positive_definite(a)) throw error("refine: form not positive definite");

    RefineResult res;
    res.generic = true;
    std::vector<SimplexClass> out;

    for (const PolytopeClass& tile : tiling) {
        const auto& verts = tile.verts;
        // integer heights: common denominator times A[x]
        std::vector<Rat> hr(verts.size());
        for (size_t k = 0; k < verts.size(); ++k) hr[k] = a.eval(verts[k]);
        std::vector<Int> h = clear_denominators(hr);

        // facets of cone{(1, x, h)} are the extreme rays of the dual cone
        std::vector<std::vector<Int>> gens(verts.size());
        for (size_t k = 0; k < verts.size(); ++k) {
            std::vector<Int>& g = gens[k];
            g.resize(n + 2);
            g[0] = 1;
            for (int i = 0; i < n; ++i) g[i + 1] = (long)verts[k].x[i];
            g[n + 1] = h[k];
        }
        ConeGenerators dual = cone_dual_description(n + 2, gens);
        if (!dual.lines.empty()) {
            // flat lift: the whole tile is its own lower hull
            if ((int)verts.size() == n + 1) {
                out.push_back(canonicalize(Simplex(n, verts)));
            } else {
                res.generic = false;
                res.cells.push_back(tile);
            }
            continue;
        }

        for (const auto& y : dual.rays) {
            if (y[n + 1] <= 0) continue;  // lower facets carry positive height coefficient
            std::vector<Point> cell;
            for (size_t k = 0; k < verts.size(); ++k) {
                Int v = y[0];
                for (int i = 0; i < n; ++i) v += y[i + 1] * (long)verts[k].x[i];
                v += y[n + 1] * h[k];
                if (v == 0) cell.push_back(verts[k]);
            }
            if ((int)cell.size() != n + 1) {
                res.generic = false;
                res.cells.push_back(make_tile(std::move(cell)));
                continue;
            }
            out.push_back(canonicalize(Simplex(n, std::move(cell))));
        }
    }
    (void)threads;

    if (!res.generic) return res;
    res.triangulation = make_complex(n, std::move(out));
    ValidateOptions vo;
    vo.structural_only = true;
    ValidationReport rep = validate(res.triangulation, vo);
    if (!rep.valid) throw error("refine: output failed structural validation: " + rep.message);
    return res;
}

Complex freudenthal_seed(int n) {
    if (n < 1 || n > kMaxDim) throw error("freudenthal_seed: bad dimension");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SimplexClass> classes;
    do {
        std::vector<Point> v;
        Point cur = Point::zero(n);
        v.push_back(cur);
        for (int i = 0; i < n; ++i) {
            cur.x[perm[i]] += 1;
            v.push_back(cur);
        }
        classes.push_back(canonicalize(Simplex(n, std::move(v))));
    } while (std::next_permutation(perm.begin(), perm.end()));
    Complex t = make_complex(n, std::move(classes));
    ValidateOptions vo;
    vo.structural_only = true;
    ValidationReport rep = validate(t, vo);
    if (!rep.valid) throw error("freudenthal_seed: structural validation failed: " + rep.message);
    return t;
}

RefineResult prism_extend(const Complex& t, int n, const QuadForm& a, int threads) {
    const int k = t.n;
    if (n <= k) throw error("prism_extend: target dimension must exceed input");
    if (n > kMaxDim) throw error("prism_extend: dimension too large");
    std::vector<PolytopeClass> tiles;
    for (const SimplexClass& c : t.classes) {
        std::vector<Point> verts;
        for (long mask = 0; mask < (1L << (n - k)); ++mask)
            for (const Point& p : c.rep.v) {
                Point q = Point::zero(n);
                for (int i = 0; i < k; ++i) q.x[i] = p.x[i];
                for (int i = k; i < n; ++i) q.x[i] = (mask >> (i - k)) & 1;
                verts.push_back(q);
            }
        tiles.push_back(make_tile(std::move(verts)));
    }
    return refine(n, tiles, a, threads);
}

}  // namespace ptri
