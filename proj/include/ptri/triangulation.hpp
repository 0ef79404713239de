#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ptri/point.hpp"

namespace ptri {

// A set of simplex translation classes, closed under nothing: both full
// periodic triangulations and partial ones are represented this way. Classes
// are kept sorted in canonical (rep-lex) order and unique.
struct Complex {
    int n = 0;
    std::vector<SimplexClass> classes;

    bool has(const std::string& key) const { return keys_.count(key) != 0; }
    const std::unordered_set<std::string>& keys() const { return keys_; }
    Int volume_sum() const;

    friend Complex make_complex(int n, std::vector<SimplexClass> classes);

private:
    std::unordered_set<std::string> keys_;
};

Complex make_complex(int n, std::vector<SimplexClass> classes);

using PeriodicTriangulation = Complex;

struct FacetIncidence {
    int class_idx;
    int facet_idx;  // dropped-vertex index in the class rep
    Point shift;    // rep facet + shift = canonical facet position
};

struct FacetRecord {
    std::vector<Point> face;  // canonical position, sorted
    std::vector<FacetIncidence> inc;
};

// All facet translation classes with their incidences, sorted by face.
std::vector<FacetRecord> facet_records(const Complex& c);

// Ridge ((n-2)-face) class valences, sorted; a cheap GL-invariant.
std::vector<int> ridge_valence_profile(const Complex& c);

// Two adjacent simplices positioned to share their common facet.
struct GluedPair {
    Simplex s1, s2;
    Point apex1, apex2;
    int class1, class2;
};
GluedPair glue(const Complex& c, const FacetRecord& rec);

// ---- pairwise compatibility (adjacency admissibility of two classes) ----

struct CompatResult {
    bool ok = true;
    Point witness;  // violating translation when !ok
};

// Memo for pairwise results keyed on a 128-bit digest of the unordered class
// pair. Thread-safe; capped so long enumerations stay within memory. The
// digest space makes a colliding pair astronomically unlikely (~2^-90 over
// the whole run).
class CompatCache {
public:
    std::optional<bool> lookup(const std::string& k) {
        uint64_t h1, h2;
        digest(k, h1, h2);
        std::lock_guard<std::mutex> g(mu_);
        auto it = map_.find(h1);
        if (it == map_.end()) return std::nullopt;
        if (it->second.first != h2) return std::nullopt;
        return it->second.second;
    }
    void store(const std::string& k, bool v) {
        uint64_t h1, h2;
        digest(k, h1, h2);
        std::lock_guard<std::mutex> g(mu_);
        if (map_.size() < cap_) map_.emplace(h1, std::make_pair(h2, v));
    }
    size_t size() const { return map_.size(); }

private:
    static void digest(const std::string& k, uint64_t& h1, uint64_t& h2) {
        uint64_t a = 0x9e3779b97f4a7c15ULL, b = 0xbf58476d1ce4e5b9ULL;
        for (unsigned char c : k) {
            a = (a ^ c) * 0x100000001b3ULL;
            a ^= a >> 29;
            b = (b + c) * 0xc2b2ae3d27d4eb4fULL;
            b ^= b >> 31;
        }
        h1 = a;
        h2 = b * 0x94d049bb133111ebULL;
    }
    std::unordered_map<uint64_t, std::pair<uint64_t, bool>> map_;
    std::mutex mu_;
    size_t cap_ = size_t(16) << 20;
};

// Checks that the Z^n translates of the two classes only ever meet in common
// faces: enumerates the feasible translations and classifies every
// intersection. Returns the violating translation if any.
CompatResult pairwise_compatible(const SimplexClass& c1, const SimplexClass& c2,
                                 CompatCache* cache = nullptr);

// ---- validation ----

struct ValidationReport {
    bool valid = true;
    std::string message;
};

struct ValidateOptions {
    int threads = 1;
    CompatCache* cache = nullptr;
    bool structural_only = false;
    // when set, pairwise checks only run for pairs touching these classes
    // (keys); the caller asserts the remaining pairs are inherited valid
    const std::unordered_set<std::string>* changed = nullptr;
};

// Volume identity, facet double covering and all-pairs compatibility.
ValidationReport validate(const Complex& t, const ValidateOptions& opt = {});

// Facet double covering for a partial triangulation: counts must be <= 2.
// Returns the once-covered records (the frontier).
struct PartialTriangulation {
    Complex cells;
    std::vector<FacetRecord> frontier;
};
PartialTriangulation make_partial(Complex cells);

bool is_centrally_symmetric(const Complex& t);

// point reflection of a class
SimplexClass reflect_class(const SimplexClass& c);

// Volume bound assertions: max vol <= n!, and the central-symmetry bound
// vol <= 2^n n! / binom(2n, n) when t is centrally symmetric.
bool volume_bounds_ok(const Complex& t);

// Cheap GL-invariant screen used for isomorphism bucketing.
std::string invariant_screen(const Complex& t);

// Feasible-translation body helpers (exposed for tests and the neighbor
// search): all v with no separating facet of a against b + v.
std::vector<Point> feasible_translations(const SimplexClass& a, const SimplexClass& b);

enum class IntersectionKind { Empty, CommonFace, FullDim, Improper };
IntersectionKind classify_intersection(const SimplexClass& a, const SimplexClass& b,
                                       const Point& v);
// the pure rational-LP route, kept as the differential-test oracle for the
// fraction-free fast path
IntersectionKind classify_intersection_exact(const SimplexClass& a, const SimplexClass& b,
                                             const Point& v);

}  // namespace ptri
