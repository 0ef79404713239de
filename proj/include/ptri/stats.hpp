#pragma once

#include <vector>

#include "ptri/triangulation.hpp"

namespace ptri {

struct TriStats {
    int dim = 0;
    long class_count = 0;
    std::vector<Int> volumes;  // sorted
    long facet_class_count = 0;
    bool centrally_symmetric = false;
    bool delaunay = false;
    long point_group_order = 0;
    bool volume_bounds = false;  // the general and central-symmetry bounds
};

struct StatsOptions {
    bool with_delaunay = true;
    bool with_point_group = true;
    int threads = 1;
};

TriStats compute_stats(const Complex& t, const StatsOptions& opt = {});

std::string stats_to_json(const TriStats& s);
std::string stats_to_text(const TriStats& s);

}  // namespace ptri
