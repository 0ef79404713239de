#include "ptri/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ptri {

std::string AffineMap::linear_key() const {
    std::string k;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            uint64_t u = (uint64_t)a[i][j];
            for (int b8 = 0; b8 < 8; ++b8) k.push_back((char)(u >> (8 * b8)));
        }
    return k;
}

AffineMap AffineMap::compose(const AffineMap& g) const {
    AffineMap r;
    r.n = n;
    r.b = apply(g.b);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int64_t s = 0;
            for (int k = 0; k < n; ++k) s += a[i][k] * g.a[k][j];
            r.a[i][j] = s;
        }
    return r;
}

namespace {

// coordinate bound under which every intermediate of the int64 kernel stays
// below 2^63 for n <= 6
constexpr int64_t kFastCoordBound = 64;

bool fits_fast_path(const Complex& t) {
    if (t.n + 1 > 7) return false;
    for (const SimplexClass& c : t.classes)
        for (const Point& p : c.rep.v)
            for (int i = 0; i < p.n; ++i)
                if (p.x[i] > kFastCoordBound || p.x[i] < -kFastCoordBound) return false;
    return true;
}

template <class Z>
Z small_det(std::vector<Z> m, int n) {
    // fraction-free elimination
    Z prev = 1;
    int sgnflip = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i * n + k] != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sgnflip = -sgnflip;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    Z d = m[(n - 1) * n + (n - 1)];
    return sgnflip > 0 ? d : Z(-d);
}

template <class Z>
std::vector<Z> adjugate(const std::vector<Z>& m, int n) {
    std::vector<Z> adj(n * n);
    std::vector<Z> minor((n - 1) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int r = 0;
            for (int ii = 0; ii < n; ++ii) {
                if (ii == i) continue;
                int c = 0;
                for (int jj = 0; jj < n; ++jj) {
                    if (jj == j) continue;
                    minor[r * (n - 1) + c] = m[ii * n + jj];
                    ++c;
                }
                ++r;
            }
            Z d = small_det(minor, n - 1);
            adj[j * n + i] = ((i + j) % 2 == 0) ? d : Z(-d);
        }
    return adj;
}

// Search state shared by isomorphic() and stabilizer(); templated on the
// scalar so the int64 fast path and the mpz fallback share one body.
template <class Z>
struct MapSearch {
    const Complex& t1;
    const Complex& t2;
    int n, np1;
    std::vector<Z> adj_w;
    Z det_w;
    int base_idx = 0;
    std::vector<std::vector<int>> perms;
    std::vector<int> targets;  // classes of t2 with matching volume
    std::vector<int> probe;    // few class indices of t1 checked first

    MapSearch(const Complex& a, const Complex& b) : t1(a), t2(b), n(a.n), np1(a.n + 1) {
        // base: the class with the minimal canonical representative
        base_idx = 0;
        const SimplexClass& base = t1.classes[base_idx];
        std::vector<Z> w(np1 * np1);
        for (int j = 0; j < np1; ++j) {
            w[0 * np1 + j] = 1;
            for (int i = 0; i < n; ++i) w[(i + 1) * np1 + j] = (long)base.rep.v[j].x[i];
        }
        adj_w = adjugate(w, np1);
        det_w = small_det(w, np1);

        std::vector<int> idx(np1);
        std::iota(idx.begin(), idx.end(), 0);
        do perms.push_back(idx);
        while (std::next_permutation(idx.begin(), idx.end()));

        for (size_t c = 0; c < t2.classes.size(); ++c)
            if (t2.classes[c].volume == base.volume) targets.push_back((int)c);

        for (size_t c = 0; c < t1.classes.size() && probe.size() < 3; ++c) probe.push_back((int)c);
    }

    long candidate_count() const { return (long)targets.size() * (long)perms.size(); }

    // Applies the candidate map to a class rep and reports whether the image
    // is a class of t2.
    bool image_in_t2(const std::vector<Z>& g, const SimplexClass& cls) const {
        Simplex img(n, std::vector<Point>(np1));
        for (int vtx = 0; vtx < np1; ++vtx) {
            for (int i = 0; i < n; ++i) {
                Z s = g[(i + 1) * np1 + 0];
                for (int j = 0; j < n; ++j)
                    s += g[(i + 1) * np1 + (j + 1)] * Z((long)cls.rep.v[vtx].x[j]);
                if (s > Z((long)kCoordLimit) || s < Z((long)-kCoordLimit)) return false;
                if constexpr (std::is_same_v<Z, int64_t>)
                    img.v[vtx].x[i] = s;
                else
                    img.v[vtx].x[i] = (int64_t)Int(s).get_si();
            }
            img.v[vtx].n = n;
        }
        return t2.has(class_key(img));
    }

    // candidate index -> map (normalized, det_w divided out), or nullopt
    std::optional<std::vector<Z>> candidate(long k) const {
        int ti = targets[k / (long)perms.size()];
        const std::vector<int>& perm = perms[k % (long)perms.size()];
        const SimplexClass& tgt = t2.classes[ti];
        // G_scaled = U' * adj(W); row 0 is det_w * e0 automatically
        std::vector<Z> g(np1 * np1);
        g[0] = 1;
        for (int i = 1; i < np1; ++i)
            for (int j = 0; j < np1; ++j) {
                Z s = 0;
                for (int k2 = 0; k2 < np1; ++k2)
                    s += Z((long)tgt.rep.v[perm[k2]].x[i - 1]) * adj_w[k2 * np1 + j];
                if (s % det_w != 0) return std::nullopt;
                g[i * np1 + j] = s / det_w;
            }
        // volume match makes the linear part unimodular once it is integral
        return g;
    }

    bool full_check(const std::vector<Z>& g) const {
        if (t1.classes.size() != t2.classes.size()) return false;
        for (const SimplexClass& c : t1.classes)
            if (!image_in_t2(g, c)) return false;
        return true;
    }

    bool quick_check(const std::vector<Z>& g) const {
        for (int c : probe)
            if (!image_in_t2(g, t1.classes[c])) return false;
        return true;
    }

    AffineMap to_map(const std::vector<Z>& g) const {
        AffineMap m;
        m.n = n;
        m.b = Point::zero(n);
        for (int i = 0; i < n; ++i) {
            if constexpr (std::is_same_v<Z, int64_t>) {
                m.b.x[i] = g[(i + 1) * np1 + 0];
                for (int j = 0; j < n; ++j) m.a[i][j] = g[(i + 1) * np1 + (j + 1)];
            } else {
                m.b.x[i] = (int64_t)Int(g[(i + 1) * np1 + 0]).get_si();
                for (int j = 0; j < n; ++j)
                    m.a[i][j] = (int64_t)Int(g[(i + 1) * np1 + (j + 1)]).get_si();
            }
        }
        return m;
    }
};

template <class Z>
std::optional<AffineMap> find_first_map(const Complex& t1, const Complex& t2, int threads) {
    MapSearch<Z> ms(t1, t2);
    const long total = ms.candidate_count();
    const long chunk = 8192;
    for (long lo = 0; lo < total; lo += chunk) {
        long hi = std::min(total, lo + chunk);
        long found = -1;
        std::vector<Z> found_g;
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : 1)
        for (long k = lo; k < hi; ++k) {
            auto g = ms.candidate(k);
            if (!g || !ms.quick_check(*g) || !ms.full_check(*g)) continue;
#pragma omp critical(ptri_iso_found)
            if (found < 0 || k < found) {
                found = k;
                found_g = *g;
            }
        }
        if (found >= 0) return ms.to_map(found_g);
    }
    return std::nullopt;
}

template <class Z>
std::vector<AffineMap> find_all_maps(const Complex& t, int threads) {
    MapSearch<Z> ms(t, t);
    const long total = ms.candidate_count();
    std::vector<uint8_t> hit(total, 0);
#pragma omp parallel for schedule(dynamic, 512) num_threads(threads > 0 ? threads : 1)
    for (long k = 0; k < total; ++k) {
        auto g = ms.candidate(k);
        if (g && ms.quick_check(*g) && ms.full_check(*g)) hit[k] = 1;
    }
    std::vector<AffineMap> maps;
    for (long k = 0; k < total; ++k)
        if (hit[k]) maps.push_back(ms.to_map(*ms.candidate(k)));
    return maps;
}

}  // namespace

std::optional<AffineMap> isomorphic(const Complex& t1, const Complex& t2, const IsoOptions& opt) {
    if (t1.n != t2.n || t1.classes.size() != t2.classes.size()) return std::nullopt;
    if (t1.classes.empty()) return std::nullopt;
    if (!opt.skip_screen && invariant_screen(t1) != invariant_screen(t2)) return std::nullopt;
    if (fits_fast_path(t1) && fits_fast_path(t2))
        return find_first_map<int64_t>(t1, t2, opt.threads);
    return find_first_map<Int>(t1, t2, opt.threads);
}

StabilizerResult stabilizer(const Complex& t, const IsoOptions& opt) {
    std::vector<AffineMap> maps = fits_fast_path(t) ? find_all_maps<int64_t>(t, opt.threads)
                                                    : find_all_maps<Int>(t, opt.threads);
    StabilizerResult res;
    std::map<std::string, AffineMap> by_linear;
    for (const AffineMap& m : maps) by_linear.emplace(m.linear_key(), m);
    for (auto& [k, m] : by_linear) {
        res.elements.push_back(m);
        AffineMap lin = m;
        lin.b = Point::zero(t.n);
        res.point_group.matrices.push_back(lin);
    }

    // group axioms on the point group: identity, closure, inverses
    std::unordered_set<std::string> keys;
    for (const AffineMap& m : res.point_group.matrices) keys.insert(m.linear_key());
    AffineMap id;
    id.n = t.n;
    id.b = Point::zero(t.n);
    for (int i = 0; i < t.n; ++i) id.a[i][i] = 1;
    if (!keys.count(id.linear_key())) throw error("stabilizer: identity missing");
    if (res.point_group.order() <= 1000) {
        for (const AffineMap& x : res.point_group.matrices) {
            bool has_inverse = false;
            for (const AffineMap& y : res.point_group.matrices) {
                if (!keys.count(x.compose(y).linear_key()))
                    throw error("stabilizer: point group not closed");
                if (x.compose(y).linear_key() == id.linear_key()) has_inverse = true;
            }
            if (!has_inverse) throw error("stabilizer: missing inverse");
        }
    }
    return res;
}

bool verify_split(const Complex& t, const IsoOptions& opt) {
    StabilizerResult st = stabilizer(t, opt);
    for (const AffineMap& lin : st.point_group.matrices) {
        for (const SimplexClass& c : t.classes) {
            Simplex img = c.rep;
            for (Point& p : img.v) p = lin.apply(p);
            if (!t.has(canonicalize(img).key)) return false;
        }
    }
    return true;
}

}  // namespace ptri
