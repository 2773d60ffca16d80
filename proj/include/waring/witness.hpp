#pragma once

#include <cstdint>

#include "waring/structure.hpp"

namespace waring {

enum class WitnessMode { single, sum };

// A checkable certificate that `target` equals p(tuple) (mode single) or
// p(tuple1) + p(tuple2) (mode sum) over upper triangular matrices of size n.
struct WitnessBundle {
    NcPoly poly;
    int n = 0;
    WitnessMode mode = WitnessMode::single;
    std::vector<std::vector<UTMatrix>> tuples;
    UTMatrix target{1};
    bool verified = false;
    std::uint64_t seed = 0;
};

// The order in which band positions are solved: the whole depth-r diagonal
// first, then depth r+1, and so on; within a depth, top row first. Returned
// as (s, col) pairs for the entry at (s, col).
std::vector<std::pair<int, int>> step_order(int n, int r);

// Builds a tuple with p(tuple) == target for a target in the band of depth
// order(p) whose depth-r diagonal has no zero entry. Requires
// 1 < order(p) < n-1.
WitnessBundle image_witness(const NcPoly& p, int n, const UTMatrix& target,
                            std::uint64_t seed, int order_cap = 12);

// Splits an arbitrary band target into two image terms, each handled by
// image_witness; works whenever 1 < order(p) < n-1, with no restriction on
// the target's depth-r diagonal.
WitnessBundle decompose_sum(const NcPoly& p, int n, const UTMatrix& target,
                            std::uint64_t seed, int order_cap = 12);

// Single-tuple witness for the edge configuration order(p) == n-2, n >= 4,
// where the band holds only the three positions (1,n-1), (2,n), (1,n) and
// zeros on the depth-r diagonal are allowed.
WitnessBundle witness_corner_case(const NcPoly& p, int n, const UTMatrix& target,
                                  std::uint64_t seed, int order_cap = 12);

// Recomputes the bundle's claim by evaluation and stores the outcome in
// bundle.verified. Throws on structurally malformed bundles; a clean false
// means the arithmetic claim itself fails.
bool verify_bundle(WitnessBundle& bundle);

} // namespace waring
