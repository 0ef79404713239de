#pragma once

#include <vector>

#include "ptri/numeric.hpp"
#include "ptri/quadform.hpp"

namespace ptri {

// coeffs.x + constant >= 0 (or = 0 for equalities)
struct LinearExpr {
    std::vector<Rat> coeffs;
    Rat constant = 0;
};

struct HPolyhedron {
    int dim = 0;
    std::vector<LinearExpr> ineqs;
    std::vector<LinearExpr> eqs;
};

// Exact V-representation via the double description method. Intended for
// dim <= 8 and modest constraint counts.
struct VRepresentation {
    std::vector<std::vector<Rat>> vertices;
    std::vector<std::vector<Int>> rays;   // primitive integer directions
    std::vector<std::vector<Int>> lines;  // lineality basis
};
VRepresentation dual_description(const HPolyhedron& p);

// Extreme rays + lineality of {x : c.x >= 0 for all c in cons}.
struct ConeGenerators {
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<Int>> lines;
    // tight constraint sets per ray, parallel to rays
    std::vector<std::vector<int>> tight;
};
ConeGenerators cone_dual_description(int dim, const std::vector<std::vector<Int>>& cons);

// All lattice points of a bounded polyhedron; throws (reporting the
// unbounded direction) if any coordinate is unbounded.
std::vector<std::vector<Int>> integer_points(const HPolyhedron& p);

// max t s.t. every cone inequality >= t, trace(A) = 1, |a_ij| <= 1, t <= 1,
// over the n(n+1)/2 symmetric-matrix coordinates. slack > 0 iff the cone is
// full-dimensional (given it meets the trace normalization).
struct ConeInteriorResult {
    bool full_dimensional = false;
    Rat slack = 0;
    QuadForm witness;
    bool witness_pd = false;
};
ConeInteriorResult cone_interior_point(int n, const std::vector<std::vector<Rat>>& cone_ineqs);

}  // namespace ptri
