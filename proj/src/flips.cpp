#include "ptri/flips.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ptri {

std::string FlipSpec::key() const {
    std::vector<std::string> rem, ins;
    for (const SimplexClass& c : removed) rem.push_back(c.key);
    for (const SimplexClass& c : inserted) ins.push_back(c.key);
    std::sort(rem.begin(), rem.end());
    std::sort(ins.begin(), ins.end());
    std::string k;
    for (auto& s : rem) k += s;
    k += '|';
    for (auto& s : ins) k += s;
    return k;
}

FlipSpec FlipSpec::inverse() const {
    FlipSpec inv = *this;
    std::swap(inv.removed, inv.inserted);
    for (Int& c : inv.circuit.coeffs) c = -c;
    return inv;
}

namespace {

// all cells of t containing the given point set as a vertex subset; returns
// the complementary vertex sets (the links)
std::vector<std::vector<Point>> link_of(const Complex& t, const std::vector<Point>& face) {
    const size_t fs = face.size();
    std::vector<std::vector<Point>> links;
    std::vector<int> pick(fs);
    for (const SimplexClass& cls : t.classes) {
        const auto& verts = cls.rep.v;  // sorted
        const int m = (int)verts.size();
        if ((size_t)m < fs) continue;
        // iterate subsets of size fs in lexicographic index order
        for (size_t i = 0; i < fs; ++i) pick[i] = (int)i;
        for (;;) {
            // translation candidate from the first element
            Point v = face[0] - verts[pick[0]];
            bool match = true;
            for (size_t i = 1; i < fs; ++i)
                if (!(verts[pick[i]] + v == face[i])) { match = false; break; }
            if (match) {
                std::vector<Point> link;
                size_t pi = 0;
                for (int j = 0; j < m; ++j) {
                    if (pi < fs && pick[pi] == j) { ++pi; continue; }
                    link.push_back(verts[j] + v);
                }
                links.push_back(std::move(link));
            }
            // next combination
            int i = (int)fs - 1;
            while (i >= 0 && pick[i] == m - (int)fs + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (size_t j = i + 1; j < fs; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(links.begin(), links.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return links;
}

std::optional<FlipSpec> flip_from_record(const Complex& t, const FacetRecord& rec) {
    GluedPair g = glue(t, rec);
    std::vector<Point> u = g.s1.v;
    for (const Point& p : g.s2.v) u.push_back(p);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if ((int)u.size() != t.n + 2) throw error("find_flips: glued union is not n+2 points");

    std::vector<std::vector<Int>> pts;
    for (const Point& p : u) pts.push_back(p.to_int_vec());
    AffineDependence dep = affine_dependence(pts);

    int ia1 = -1, ia2 = -1;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == g.apex1) ia1 = (int)i;
        if (u[i] == g.apex2) ia2 = (int)i;
    }
    int s = sign(dep.coeffs[ia1]);
    if (s == 0 || s != sign(dep.coeffs[ia2]))
        throw error("find_flips: apex coefficients not on one side");

    std::vector<int> side, opposite, zero;
    for (size_t i = 0; i < u.size(); ++i) {
        int si = sign(dep.coeffs[i]);
        if (si == 0)
            zero.push_back((int)i);
        else
            (si == s ? side : opposite).push_back((int)i);
    }

    std::vector<Point> support;
    for (size_t i = 0; i < u.size(); ++i)
        if (sign(dep.coeffs[i]) != 0) support.push_back(u[i]);

    // common link of the faces support \ {z}, z on the current side
    std::vector<std::vector<Point>> lambda;
    bool first = true;
    for (int z : side) {
        std::vector<Point> face;
        for (size_t i = 0; i < u.size(); ++i)
            if (sign(dep.coeffs[i]) != 0 && (int)i != z) face.push_back(u[i]);
        auto links = link_of(t, face);
        if (first) {
            lambda = std::move(links);
            first = false;
        } else if (links != lambda) {
            return std::nullopt;  // star does not factor: no coherent flip here
        }
    }
    if (lambda.empty()) return std::nullopt;

    auto cells_for = [&](const std::vector<int>& idx) {
        std::map<std::string, SimplexClass> cells;
        for (int z : idx)
            for (const auto& link : lambda) {
                std::vector<Point> verts;
                for (size_t i = 0; i < u.size(); ++i)
                    if (sign(dep.coeffs[i]) != 0 && (int)i != z) verts.push_back(u[i]);
                for (const Point& p : link) verts.push_back(p);
                SimplexClass c = canonicalize(Simplex(t.n, std::move(verts)));
                cells.emplace(c.key, std::move(c));
            }
        std::vector<SimplexClass> out;
        for (auto& [k, c] : cells) out.push_back(std::move(c));
        return out;
    };

    FlipSpec spec;
    spec.circuit.points = u;
    spec.circuit.coeffs = dep.coeffs;
    spec.link = lambda;
    spec.removed = cells_for(side);
    spec.inserted = cells_for(opposite);

    for (const SimplexClass& c : spec.removed)
        if (!t.has(c.key)) throw error("find_flips: current-side cell missing from t");
    for (const SimplexClass& c : spec.inserted)
        if (t.has(c.key)) throw error("find_flips: opposite-side cell already present");
    Int vr = 0, vi = 0;
    for (const SimplexClass& c : spec.removed) vr += c.volume;
    for (const SimplexClass& c : spec.inserted) vi += c.volume;
    if (vr != vi) throw error("find_flips: flip does not conserve volume");
    return spec;
}

}  // namespace

std::vector<FlipSpec> find_flips(const Complex& t, int threads) {
    std::vector<FacetRecord> recs = facet_records(t);
    std::vector<std::optional<FlipSpec>> specs(recs.size());
    std::string first_error;

#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : 1)
    for (long i = 0; i < (long)recs.size(); ++i) {
        if (recs[i].inc.size() != 2) continue;
        try {
            specs[i] = flip_from_record(t, recs[i]);
        } catch (const std::exception& e) {
#pragma omp critical(ptri_flip_err)
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!first_error.empty()) throw error(first_error);

    std::vector<FlipSpec> out;
    std::set<std::string> seen;
    for (auto& s : specs) {
        if (!s) continue;
        std::string k = s->key();
        if (seen.insert(k).second) out.push_back(std::move(*s));
    }
    return out;
}

Complex apply_flip(const Complex& t, const FlipSpec& spec, ApplyMode mode, CompatCache* cache,
                   int threads) {
    for (const SimplexClass& c : spec.removed)
        if (!t.has(c.key)) throw error("apply_flip: removed class not present");
    std::unordered_set<std::string> removed_keys, inserted_keys;
    for (const SimplexClass& c : spec.removed) removed_keys.insert(c.key);
    for (const SimplexClass& c : spec.inserted) {
        if (t.has(c.key)) throw error("apply_flip: inserted class already present");
        inserted_keys.insert(c.key);
    }

    std::vector<SimplexClass> classes;
    for (const SimplexClass& c : t.classes)
        if (!removed_keys.count(c.key)) classes.push_back(c);
    for (const SimplexClass& c : spec.inserted) classes.push_back(c);
    Complex res = make_complex(t.n, std::move(classes));

    ValidateOptions vo;
    vo.threads = threads;
    vo.cache = cache;
    if (mode == ApplyMode::Structural) vo.structural_only = true;
    if (mode == ApplyMode::Incremental) vo.changed = &inserted_keys;
    ValidationReport rep = validate(res, vo);
    if (!rep.valid) throw error("apply_flip: result failed validation: " + rep.message);
    return res;
}

}  // namespace ptri
