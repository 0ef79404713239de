#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ptri/flips.hpp"
#include "ptri/triangulation.hpp"

namespace ptri {

// Candidate neighbor across a fixed facet: apex w = sum b_j v_j with
// sum b_j = 1, dropped vertex index i.
struct NeighborCandidate {
    Point apex;
    std::vector<Int> b;
    int dropped = 0;
};

enum class NeighborMode { Hardcoded, Search };

struct NeighborResult {
    std::vector<NeighborCandidate> candidates;  // pairwise-admissible survivors
    long raw_count = 0;                         // candidates before admissibility
};

// Hardcoded mode normalizes (s, facet) to standard position and emits the
// known dim-3/4 lists mapped back; search mode enumerates apexes in a box of
// the given radius and keeps those passing the pairwise admissibility checks
// (candidate against s, and candidate against itself).
NeighborResult neighbor_candidates(const Simplex& s, int facet_idx, NeighborMode mode,
                                   int radius = 0, CompatCache* cache = nullptr);

struct LocalEnumResult {
    std::vector<Complex> triangulations;
    long dead_ends = 0;
    long states_explored = 0;
};

// BFS over partial triangulations: always extends the canonically first
// frontier facet, dedups states up to isomorphism, emits the completed
// triangulations.
LocalEnumResult local_enumerate(int n, int threads = 1, CompatCache* cache = nullptr,
                                std::ostream* log = nullptr);

struct ClosureOptions {
    long max_nodes = -1;  // < 0: unlimited
    int checkpoint_every = 25;
    std::string checkpoint_path;  // empty: no checkpointing
    int threads = 1;
    CompatCache* cache = nullptr;
    std::ostream* log = nullptr;
};

struct ClosureResult {
    std::vector<Complex> archive;  // insertion order; a prefix-stable sequence
    long processed = 0;
    bool budget_exhausted = false;
};

// BFS over triangulations under coherent flips, dedup by invariant screen
// then full isomorphism. Deterministic archive order; resumable from the
// checkpoint written every checkpoint_every processed nodes.
ClosureResult flip_closure(const Complex& seed, const ClosureOptions& opt);

// Adjacency encodings {(b_0..b_n), i} over all volume-1 simplices of all
// archive members, canonicalized up to coordinate permutation: b ascending,
// i the smallest index carrying the dropped vertex's coefficient.
struct AdjacencyCode {
    std::vector<long> b;
    int dropped;
    bool operator<(const AdjacencyCode& o) const {
        return b != o.b ? b < o.b : dropped < o.dropped;
    }
    bool operator==(const AdjacencyCode& o) const { return b == o.b && dropped == o.dropped; }
};
std::vector<AdjacencyCode> adjacency_classification(const std::vector<Complex>& archive);
AdjacencyCode canonical_adjacency_code(std::vector<long> b, int dropped);

// Verification harness for the infinite-neighbor family: for k = 0..k_max
// the fixed dim-5 simplex pair must be compatible and meet in the shared
// facet.
struct Thm61Report {
    bool ok = true;
    int failed_k = -1;
    std::string detail;
};
Thm61Report thm61_harness(int k_max, CompatCache* cache = nullptr);

// The pair itself, exposed for the negative control: apex (1,1,1,1,k+1) by
// default, or a caller-supplied apex.
std::pair<SimplexClass, SimplexClass> thm61_pair(int k, std::optional<Point> apex = {});

}  // namespace ptri
