#pragma once

#include <vector>

#include "ptri/affdep.hpp"
#include "ptri/triangulation.hpp"

namespace ptri {

// The affine-dependence data of an (n+2)-point repartitioning configuration,
// in glued coordinates.
struct Circuit {
    std::vector<Point> points;   // sorted
    std::vector<Int> coeffs;     // normalized affine dependence
};

// A coherent flip: every cell (side z of the circuit support) joined with
// every link member is swapped for the opposite side times the same links.
struct FlipSpec {
    Circuit circuit;
    std::vector<std::vector<Point>> link;  // the common link family
    std::vector<SimplexClass> removed, inserted;

    std::string key() const;
    FlipSpec inverse() const;
};

// All coherent flips supported on t, one per circuit, deduplicated and in a
// deterministic order.
std::vector<FlipSpec> find_flips(const Complex& t, int threads = 1);

enum class ApplyMode { Full, Incremental, Structural };

// Removes and inserts the spec's classes, then validates. Incremental mode
// assumes t itself is valid and only re-checks pairs touching inserted
// classes (full validity follows by induction). Throws on any failure: a
// correctly built spec cannot fail.
Complex apply_flip(const Complex& t, const FlipSpec& spec, ApplyMode mode = ApplyMode::Full,
                   CompatCache* cache = nullptr, int threads = 1);

}  // namespace ptri
