#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pmin/cycles.hpp"
#include "pmin/graph.hpp"

namespace pmin {

enum class Status { Inherits, Fails, OutsideCharacterization };

std::string to_string(Status s);

// Outcome of the structural decision. `reason` is a stable machine-readable
// code, `theorem` names the deciding case, `witness` justifies a Fails.
struct Verdict {
    Status status = Status::Inherits;
    std::string reason;
    std::string theorem;
    nlohmann::json witness; // null unless Fails
    std::string note;       // extra context (stripped vertices, outside cases)
};

// True iff every biconnected component induces a complete subgraph; on failure
// carries the offending component and one missing pair.
struct CycleCompleteness {
    bool complete = true;
    std::vector<int> component;
    int miss_u = -1;
    int miss_v = -1;
};

CycleCompleteness cycle_complete(const WeightedGraph& g);

// Chordless cycles through a designated edge, decided by one BFS plus the
// articulation points of g minus that edge. Witness cycles are self-checking:
// each is chordless and contains the edge.
struct ChordlessCycles {
    enum class Kind { None, Unique, Multiple };
    Kind kind = Kind::None;
    std::vector<Cycle> cycles;
};

ChordlessCycles unique_chordless_cycle_through_e1(const WeightedGraph& g, const Edge& e1);

// Theorem checkers; each requires at most one non-singleton component plus the
// stated weight profile and throws precondition_violated otherwise.
Verdict check_thm_two_weights_multi(const WeightedGraph& g);  // k=2, |E_1| >= 2
Verdict check_thm_two_weights_single(const WeightedGraph& g); // k=2, |E_1| == 1
Verdict check_thm_three_weights(const WeightedGraph& g);      // k=3, |E_1| == 1

// Necessity screen for graphs with >= 2 non-singleton components.
Verdict check_disconnected_necessity(const WeightedGraph& g);

// Full O(n^2) dispatcher.
Verdict decide(const WeightedGraph& g);

nlohmann::json verdict_to_json(const Verdict& v);

} // namespace pmin
