#pragma once

#include <vector>

#include "ptri/polyhedron.hpp"
#include "ptri/quadform.hpp"
#include "ptri/triangulation.hpp"

namespace ptri {

// Linear functional N_{S,w} in the symmetric coordinates of A, nonnegative
// exactly when w lies on or outside the A-circumsphere of S. Realized as the
// orientation-normalized lifted (n+2)x(n+2) determinant, which is linear in
// A because A only enters the height column.
struct Regulator {
    std::vector<Int> coeffs;  // length sym_dim(n)
    int class1 = -1, class2 = -1;

    Rat eval(const QuadForm& a) const {
        std::vector<Rat> c = a.sym_coords();
        Rat s = 0;
        for (size_t k = 0; k < coeffs.size(); ++k) s += Rat(coeffs[k]) * c[k];
        return s;
    }
};

Regulator voronoi_regulator(const Simplex& s1, const Point& v2);

struct DelaunayResult {
    bool is_delaunay = false;
    bool full_dimensional = false;
    Rat slack = 0;
    QuadForm witness;
    bool witness_pd = false;
    std::vector<Regulator> regulators;  // one per interior facet class
};

// Assembles one regulator per facet class and asks for an interior point of
// the resulting cone.
DelaunayResult delaunay_test(const Complex& t, int threads = 1);

// Finite feasibility probe for regularity at a given radius: simplices are
// all translates of class representatives with every vertex in [-r, r]^n;
// each adjacent pair (T1, T2) inside the selection contributes the
// strengthened row f(apex2) >= phi_T1(apex2) + 1.
struct RegularitySystem {
    int radius = 0;
    std::vector<Point> vertices;  // LP variables f(v)
    struct Constraint {
        std::vector<std::pair<int, Int>> terms;  // sum terms . f >= rhs
        Int rhs;
    };
    std::vector<Constraint> constraints;
    long simplex_count = 0;
};

RegularitySystem build_regularity_system(const Complex& t, int radius);

// Same selection rule over an arbitrary integer box [lo, hi] (per
// coordinate); the radius version is the symmetric special case. Any Farkas
// certificate of a sub-box system extends by zeros to the enclosing box's
// system, since its constraints are a subset.
RegularitySystem build_regularity_system_box(const Complex& t, const Point& lo, const Point& hi);

// Feasibility probe of the box system (no Delaunay shortcut).
struct RegularityProbe {
    bool feasible = true;
    RegularitySystem sys;
    std::vector<Rat> farkas;  // per constraint when infeasible
};
RegularityProbe nonregularity_probe(const Complex& t, const Point& lo, const Point& hi,
                                    long iteration_limit = -1);

struct RegularityResult {
    bool feasible = false;
    int radius = 0;
    long num_simplices = 0;
    long num_points = 0;
    long num_constraints = 0;
    std::vector<Rat> witness_heights;  // per system vertex, when feasible
    std::vector<Rat> farkas;           // per constraint, when infeasible
};

// feasible -> inconclusive (witness heights returned); infeasible -> t is
// certified non-regular, with an exactly re-verified Farkas certificate.
RegularityResult nonregularity_test(const Complex& t, int radius, int threads = 1);

// Positive regularity certificate from a periodic ansatz: searches for
// heights f(x) = A[x] + g(x mod period) strictly convex across every facet
// orbit. Existence proves regularity outright (local convexity of a PL
// function over a tiling of R^n is global), so the scan for non-regular
// members can skip certified ones cheaply.
struct PeriodicWitness {
    bool found = false;
    Rat slack = 0;
    QuadForm form;
    std::vector<Rat> offsets;  // indexed by residue
};
PeriodicWitness periodic_regularity_witness(const Complex& t, int period = 2);

}  // namespace ptri
