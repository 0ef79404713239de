#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ptri/numeric.hpp"

namespace ptri {

// Ambient dimensions up to 8 cover every workload (triangulations live in
// dims 2..6; lifted hulls go one higher).
constexpr int kMaxDim = 8;

// Coordinates are machine integers with a range guard; all computations with
// unbounded intermediate growth route through GMP.
constexpr int64_t kCoordLimit = int64_t(1) << 40;

struct Point {
    int n = 0;
    std::array<int64_t, kMaxDim> x{};

    Point() = default;
    Point(std::initializer_list<int64_t> v) {
        n = (int)v.size();
        int i = 0;
        for (int64_t c : v) x[i++] = c;
    }
    static Point zero(int dim) {
        Point p;
        p.n = dim;
        return p;
    }
    static Point unit(int dim, int i) {
        Point p = zero(dim);
        p.x[i] = 1;
        return p;
    }

    int64_t operator[](int i) const { return x[i]; }
    int64_t& operator[](int i) { return x[i]; }

    friend Point operator+(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.n; ++i) r.x[i] += b.x[i];
        return r;
    }
    friend Point operator-(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.n; ++i) r.x[i] -= b.x[i];
        return r;
    }
    friend Point operator-(const Point& a) {
        Point r = a;
        for (int i = 0; i < a.n; ++i) r.x[i] = -r.x[i];
        return r;
    }
    friend bool operator==(const Point& a, const Point& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.x[i] != b.x[i]) return false;
        return true;
    }
    friend bool operator<(const Point& a, const Point& b) {
        for (int i = 0; i < a.n && i < b.n; ++i)
            if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
        return a.n < b.n;
    }

    std::vector<Int> to_int_vec() const {
        std::vector<Int> v(n);
        for (int i = 0; i < n; ++i) v[i] = Int((long)x[i]);
        return v;
    }
};

std::string to_string(const Point& p);

// Full-dimensional integer simplex: n+1 affinely independent vertices.
struct Simplex {
    int n = 0;
    std::vector<Point> v;

    Simplex() = default;
    Simplex(int dim, std::vector<Point> verts) : n(dim), v(std::move(verts)) {}
};

// |det of edge vectors|; 0 means degenerate.
Int simplex_volume(const Simplex& s);

// Affine functional with integer coefficients: value(x) = c0 + normal.x
struct AffineFunctional {
    std::vector<Int> normal;
    Int c0;

    Int eval(const Point& p) const {
        Int s = c0;
        for (size_t i = 0; i < normal.size(); ++i) s += normal[i] * (long)p.x[i];
        return s;
    }
};

// Translation class of a simplex. rep is the canonical translate: among all
// translates placing some vertex at the origin, the one whose sorted vertex
// list is lexicographically minimal. Facet functionals are the scaled
// barycentric numerators: facet i drops rep.v[i], m_i(rep.v[j]) = vol * d_ij,
// m_i >= 0 on the simplex.
struct SimplexClass {
    Simplex rep;
    Int volume;
    std::vector<AffineFunctional> facets;
    std::string key;  // packed canonical coordinates, for hashing and identity

    bool operator==(const SimplexClass& o) const { return key == o.key; }
    bool operator<(const SimplexClass& o) const { return key < o.key; }
};

// Deterministic and translation-invariant; throws on degenerate input.
SimplexClass canonicalize(const Simplex& s);

// Canonical translate of an arbitrary finite point set (faces, links, tiles):
// same min-lex rule. Returns the sorted canonical list and the shift with
// canon = input + shift.
std::pair<std::vector<Point>, Point> canonical_point_set(std::vector<Point> pts);

std::string point_set_key(const std::vector<Point>& pts);

// Canonical key of a simplex without the derived data (volume, facet
// functionals); the hot path of the symmetry search.
std::string class_key(const Simplex& s);

}  // namespace ptri
