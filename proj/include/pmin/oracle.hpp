#pragma once

#include <bit>
#include <cstdint>

#include "pmin/game.hpp"
#include "pmin/graph.hpp"

namespace pmin {

// Exhaustive-sweep defaults; the n=12 convexity sweep is ~270M elementary
// checks, the F-convexity sweep is heavier per game and stops at 10.
inline constexpr int kOracleCap = 12;
inline constexpr int kFOracleCap = 10;

// Per-coalition partition blocks, one word per (coalition, vertex):
// block_mask(a, v) is the member mask of v's block in the partition of a,
// or 0 when v is outside a.
class BlockTable {
public:
    BlockTable(const WeightedGraph& g, Correspondence c);

    int n() const { return n_; }
    Coalition block_mask(Coalition a, int v) const {
        return t_[(static_cast<std::size_t>(a) << shift_) + static_cast<std::size_t>(v)];
    }
    // Restricted unanimity value: 1 iff s lies inside one block of a's partition.
    bool in_one_block(Coalition a, Coalition s) const {
        return (s & ~block_mask(a, std::countr_zero(s))) == 0;
    }

private:
    int n_ = 0;
    int shift_ = 0;
    std::vector<Coalition> t_;
};

// Sweep over all restricted unanimity games; a `no` carries the first failing
// game S and a marginal-contribution violation i, A ⊂ B ⊆ N∖{i}.
struct ConvexityInheritance {
    bool inherits = true;
    Coalition s = 0;
    int i = -1;
    Coalition a = 0, b = 0;
};

ConvexityInheritance inheritance_convexity_bruteforce(const WeightedGraph& g, int cap = kOracleCap);

// Non-exhaustive variant for n beyond the cap: checks `samples` random
// coalitions S (each still swept in full). A `yes` only means "not refuted".
ConvexityInheritance inheritance_convexity_sampled(const WeightedGraph& g, int samples,
                                                   std::uint64_t seed);

// Same sweep against convexity restricted to connected coalitions; a `no`
// carries S and the violating pair A, B.
struct FConvexityInheritance {
    bool inherits = true;
    Coalition s = 0;
    Coalition a = 0, b = 0;
};

FConvexityInheritance inheritance_fconvexity_bruteforce(const WeightedGraph& g,
                                                        int cap = kFOracleCap);

enum class SetFamily { Connected, AllNonempty };

// Partition stability: for all i and A ⊆ B ⊆ N∖{i} (members of the family,
// along with A∪{i}), each block A' of the partition of A∪{i} restricted to A
// must see identical restrictions of the partitions of A and of B.
struct StabilityResult {
    bool stable = true;
    int i = -1;
    Coalition a = 0, b = 0, a_prime = 0;
};

StabilityResult partition_stability_check(const WeightedGraph& g, SetFamily family,
                                          int cap = kOracleCap);

// For all A ⊆ B, the partition of A refines the partition of B restricted
// to A. Holds for the minimum partition; a failure certifies a bug.
struct RefinementResult {
    bool pass = true;
    Coalition a = 0, b = 0;
};

RefinementResult refinement_check(const WeightedGraph& g, int cap = kOracleCap);

} // namespace pmin
