#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pmin/cycles.hpp"
#include "pmin/graph.hpp"

namespace pmin {

enum class CheckStatus { Pass, Fail, Skipped };

constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// How "e1, e2, e2' are adjacent" is interpreted for the adjacent-cycles check:
// all three edges around one common vertex, or merely pairwise adjacent.
enum class AdjacencyMode { SharedVertex, PairwiseAdjacent };

struct StarWitness {
    int center = 0;
    std::array<Edge, 3> edges{}; // two largest weights differ
};

struct PathWitness {
    std::vector<int> path_verts;
    int i = 0, j = 0, k = 0; // 1-based edge positions, w_j > max(w_i, w_k)
};

struct CycleWitness {
    Cycle cycle; // no admissible labelling exists
};

struct PanWitness {
    Cycle cycle;
    std::vector<int> path_verts; // meets the cycle exactly in its first vertex
    Edge e;                      // path edge with w(e) <= min cycle weight
};

struct AdjacentCyclesWitness {
    Cycle c1, c2;
};

struct StarCheck {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::optional<StarWitness> witness;
};

struct PathCheck {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::optional<PathWitness> witness;
};

struct CycleCheck {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::optional<CycleWitness> witness;
};

struct PanCheck {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::optional<PanWitness> witness;
};

struct AdjacentCyclesCheck {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::optional<AdjacentCyclesWitness> witness;
};

// Every 3-subset of edges around one vertex has its two largest weights equal.
StarCheck check_star(const WeightedGraph& g);

// Along every elementary path, no interior edge outweighs both end edges.
PathCheck check_path(const WeightedGraph& g, std::size_t cap = kDefaultEnumerationCap);

// Every simple cycle admits a labelling w1 <= w2 <= w3 = ... = wm = M̂ whose
// chords at the second vertex weigh w2 and whose other chords weigh M̂
// (M̂ = maximum over the cycle's edges and chords).
CycleCheck check_cycle(const WeightedGraph& g, std::size_t cap = kDefaultEnumerationCap);

// Cycles reachable by a path carrying an edge at most as light as the cycle
// must be constant at M̂, or two-light-edged with the path hooked at the
// light edges' shared vertex (plus a maximum chord across them when the path
// edge is strictly lighter).
PanCheck check_pan(const WeightedGraph& g, std::size_t cap = kDefaultEnumerationCap);

// Pairs of edge-sharing cycles (under the stated chord hypotheses) share at
// most one sub-maximum edge, and exactly one only alongside matching
// sub-maximum edges of their own adjacent to it.
AdjacentCyclesCheck check_adjacent_cycles(const WeightedGraph& g,
                                          std::size_t cap = kDefaultEnumerationCap,
                                          AdjacencyMode mode = AdjacencyMode::SharedVertex);

struct ConditionReport {
    StarCheck star;
    PathCheck path;
    CycleCheck cycle;
    PanCheck pan;
    AdjacentCyclesCheck adjacent_cycles;

    bool all_pass() const {
        return star.status == CheckStatus::Pass && path.status == CheckStatus::Pass &&
               cycle.status == CheckStatus::Pass && pan.status == CheckStatus::Pass &&
               adjacent_cycles.status == CheckStatus::Pass;
    }
};

// Runs all five checks; an enumeration blowing the cap marks that check Skipped.
ConditionReport check_f_conditions(const WeightedGraph& g,
                                   std::size_t cap = kDefaultEnumerationCap,
                                   AdjacencyMode mode = AdjacencyMode::SharedVertex);

// Shared by check_pan and its witness re-evaluation: does the pan conclusion
// hold for cycle c contacted at vertex x by a path whose lightest edge weighs
// we (we <= min cycle weight assumed)?
bool pan_conclusion_holds(const WeightedGraph& g, const Cycle& c, int x, long long we);

// Non-constant cycles near a strictly lighter edge e must be complete, with
// exactly two equal light edges meeting at a vertex incident to e (and e not a
// chord). Quantifies over every edge in the cycle's component lighter than the
// cycle's minimum.
PanCheck check_refined_pan(const WeightedGraph& g, std::size_t cap = kDefaultEnumerationCap);

// Shared by check_refined_pan and its witness re-evaluation.
bool refined_pan_conclusion_holds(const WeightedGraph& g, const Cycle& c, const Edge& e);

struct ClaimResult {
    int claim = 0;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::optional<Cycle> cycle; // offending cycle, when one exists
};

struct ConstantCycleClaims {
    std::vector<ClaimResult> claims;

    bool all_pass() const {
        for (const ClaimResult& c : claims)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

// Structural claims about constant-weight cycles under one minimum edge,
// evaluated according to the graph's weight spectrum.
ConstantCycleClaims check_constant_cycle_claims(const WeightedGraph& g,
                                                std::size_t cap = kDefaultEnumerationCap);

} // namespace pmin
