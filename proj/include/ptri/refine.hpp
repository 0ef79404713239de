#pragma once

#include <vector>

#include "ptri/quadform.hpp"
#include "ptri/triangulation.hpp"

namespace ptri {

// Translation class of an integer-vertex polytope (a tile). Canonical
// translate, sorted vertices.
struct PolytopeClass {
    std::vector<Point> verts;
    std::string key;
};

PolytopeClass make_tile(std::vector<Point> verts);

// One tile class whose translates tile R^n: the unit cube.
std::vector<PolytopeClass> cube_tiling(int n);

// Per tile, lifts vertices by A[x], projects the lower facets back down. For
// generic positive definite A the result is a periodic triangulation; a
// non-simplicial lower facet raises the non-generic flag and the refined
// cells are returned as tiles instead.
struct RefineResult {
    bool generic = false;
    Complex triangulation;            // when generic
    std::vector<PolytopeClass> cells;  // refined tiles otherwise
};

RefineResult refine(int n, const std::vector<PolytopeClass>& tiling, const QuadForm& a,
                    int threads = 1);

// The n! permutation simplices conv{0, e_s1, e_s1+e_s2, ...} as classes.
Complex freudenthal_seed(int n);

// Extends a dim-k triangulation to dim n with prism tiles Delta x [0,1]^(n-k)
// and refines with a generic PD form.
RefineResult prism_extend(const Complex& t, int n, const QuadForm& a, int threads = 1);

}  // namespace ptri
