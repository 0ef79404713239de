#pragma once

#include <cstdint>
#include <vector>

#include "ptri/numeric.hpp"

namespace ptri {

enum class Rel { Ge, Le, Eq };

struct LPRow {
    std::vector<std::pair<int, Rat>> terms;  // sparse (variable, coefficient)
    Rel rel = Rel::Ge;
    Rat rhs = 0;
};

// max/min objective subject to rows. Variables are free unless nonneg marks
// them; all data exact rationals.
struct LPProblem {
    int num_vars = 0;
    std::vector<LPRow> rows;
    std::vector<std::pair<int, Rat>> objective;
    bool maximize = true;
    std::vector<uint8_t> nonneg;  // empty means all variables free
    long iteration_limit = -1;    // probes may cap the simplex; hitting the
                                  // cap throws (never a wrong certificate)

    LPRow& add_row(Rel rel, const Rat& rhs) {
        rows.push_back(LPRow{{}, rel, rhs});
        return rows.back();
    }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Every returned certificate has been re-verified by exact substitution:
//  - Optimal: point satisfies all rows, duals reproduce the objective value.
//  - Infeasible: farkas[i] >= 0 for Ge/Le rows (sign applies to the row
//    oriented as >=); the combined functional vanishes on free variables,
//    is <= 0 on nonneg variables, and the combined rhs is > 0.
//  - Unbounded: point feasible, ray satisfies the homogeneous system and
//    improves the objective.
struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rat objective_value = 0;
    std::vector<Rat> point;
    std::vector<Rat> ray;
    std::vector<Rat> farkas;
    std::vector<Rat> row_duals;
};

LPSolution lp_solve(const LPProblem& p);

}  // namespace ptri
