#pragma once

#include <optional>
#include <vector>

#include "ptri/triangulation.hpp"

namespace ptri {

// Unimodular affine lattice map x -> Ax + b.
struct AffineMap {
    int n = 0;
    std::array<std::array<int64_t, kMaxDim>, kMaxDim> a{};
    Point b;

    Point apply(const Point& p) const {
        Point q = Point::zero(n);
        for (int i = 0; i < n; ++i) {
            int64_t s = b.x[i];
            for (int j = 0; j < n; ++j) s += a[i][j] * p.x[j];
            q.x[i] = s;
        }
        return q;
    }
    std::string linear_key() const;
    AffineMap compose(const AffineMap& other) const;  // this after other
};

struct IsoOptions {
    int threads = 1;
    bool skip_screen = false;  // caller already compared invariant screens
};

// Brute-force mapping search: fixes a base class of t1 and tries every
// (target class, vertex ordering) of t2, keeping integral unimodular maps
// that send the class set of t1 onto the class set of t2.
std::optional<AffineMap> isomorphic(const Complex& t1, const Complex& t2,
                                    const IsoOptions& opt = {});

struct PointGroup {
    std::vector<AffineMap> matrices;  // b = 0 representatives
    long order() const { return (long)matrices.size(); }
};

struct StabilizerResult {
    std::vector<AffineMap> elements;  // one per point-group element, with the found shift
    PointGroup point_group;
};

// All symmetries modulo integer translations; group axioms are verified.
StabilizerResult stabilizer(const Complex& t, const IsoOptions& opt = {});

// Every point-group matrix, taken with zero shift, must itself map the class
// set onto the class set; true on every valid periodic triangulation.
bool verify_split(const Complex& t, const IsoOptions& opt = {});

}  // namespace ptri
