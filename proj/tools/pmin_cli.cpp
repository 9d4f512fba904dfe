// Command-line front end: decide / oracle / conditions / pmin / restrict / fuzz.
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pmin/conditions.hpp"
#include "pmin/errors.hpp"
#include "pmin/game.hpp"
#include "pmin/generators.hpp"
#include "pmin/graph.hpp"
#include "pmin/oracle.hpp"
#include "pmin/partition.hpp"
#include "pmin/recognizer.hpp"

using nlohmann::json;
using namespace pmin;

namespace {

// Exit codes: 0/1/2 mirror decide verdicts (other commands use 0 = positive,
// 1 = negative finding); 3 = bad input or arguments, 4 = size/cap limits,
// 5 = internal error.
struct cli_error : std::runtime_error {
    int exit_code;
    std::string code;
    cli_error(int exit_code_, std::string code_, const std::string& what)
        : std::runtime_error(what), exit_code(exit_code_), code(std::move(code_)) {}
};

void report_error(bool json_mode, const std::string& code, const std::string& message) {
    if (json_mode) {
        json out{{"schema", 1}, {"error", {{"code", code}, {"message", message}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
}

template <typename Fn>
int guard(bool json_mode, Fn&& fn) {
    try {
        return fn();
    } catch (const cli_error& e) {
        report_error(json_mode, e.code, e.what());
        return e.exit_code;
    } catch (const parse_error& e) {
        report_error(json_mode, "ParseError", e.what());
        return 3;
    } catch (const too_large& e) {
        report_error(json_mode, "TooLarge", e.what());
        return 4;
    } catch (const cap_exceeded& e) {
        report_error(json_mode, "CapExceeded", e.what());
        return 4;
    } catch (const precondition_violated& e) {
        report_error(json_mode, "PreconditionViolated", e.what());
        return 5;
    } catch (const std::invalid_argument& e) {
        report_error(json_mode, "InvalidArgument", e.what());
        return 3;
    } catch (const std::runtime_error& e) {
        report_error(json_mode, "IOError", e.what());
        return 3;
    } catch (const std::exception& e) {
        report_error(json_mode, "InternalError", e.what());
        return 5;
    }
}

json edge_json(const Edge& e) { return json::array({e.u + 1, e.v + 1, e.w}); }

json verts_json(const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(v + 1);
    return a;
}

json mask_json(Coalition a) {
    json out = json::array();
    for (int v = 0; a >> v; ++v)
        if ((a >> v) & 1) out.push_back(v + 1);
    return out;
}

std::string mask_str(Coalition a) {
    std::string s = "{";
    for (int v = 0; a >> v; ++v)
        if ((a >> v) & 1) {
            if (s.size() > 1) s += ",";
            s += std::to_string(v + 1);
        }
    return s + "}";
}

std::string set_str(const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i] + 1);
    }
    return s + "}";
}

const char* status_str(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
    }
}

// ---------------------------------------------------------------- decide

int run_decide(const std::string& file, bool json_mode) {
    WeightedGraph g = load_graph_file(file);
    Verdict v = decide(g);
    if (json_mode) {
        json out = verdict_to_json(v);
        out["schema"] = 1;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "status:  " << to_string(v.status) << "\n";
        std::cout << "reason:  " << v.reason << "\n";
        std::cout << "theorem: " << v.theorem << "\n";
        if (!v.note.empty()) std::cout << "note:    " << v.note << "\n";
        if (!v.witness.is_null()) std::cout << "witness: " << v.witness.dump() << "\n";
    }
    switch (v.status) {
    case Status::Inherits: return 0;
    case Status::Fails: return 1;
    default: return 2;
    }
}

// ---------------------------------------------------------------- oracle

int run_oracle(const std::string& file, const std::string& mode, long long cap_flag,
               bool json_mode) {
    WeightedGraph g = load_graph_file(file);
    json out{{"schema", 1}, {"command", "oracle"}, {"mode", mode}};
    bool inherits = false;
    if (mode == "convexity") {
        int cap = cap_flag > 0 ? static_cast<int>(cap_flag) : kOracleCap;
        ConvexityInheritance r = inheritance_convexity_bruteforce(g, cap);
        inherits = r.inherits;
        if (!r.inherits)
            out["witness"] = json{{"s", mask_json(r.s)},
                                  {"i", r.i + 1},
                                  {"a", mask_json(r.a)},
                                  {"b", mask_json(r.b)}};
        if (!json_mode) {
            std::cout << "inherits: " << (r.inherits ? "yes" : "no") << "\n";
            if (!r.inherits)
                std::cout << "S: " << mask_str(r.s) << "  i: " << r.i + 1
                          << "  A: " << mask_str(r.a) << "  B: " << mask_str(r.b) << "\n";
        }
    } else {
        int cap = cap_flag > 0 ? static_cast<int>(cap_flag) : kFOracleCap;
        FConvexityInheritance r = inheritance_fconvexity_bruteforce(g, cap);
        inherits = r.inherits;
        if (!r.inherits)
            out["witness"] =
                json{{"s", mask_json(r.s)}, {"a", mask_json(r.a)}, {"b", mask_json(r.b)}};
        if (!json_mode) {
            std::cout << "inherits: " << (r.inherits ? "yes" : "no") << "\n";
            if (!r.inherits)
                std::cout << "S: " << mask_str(r.s) << "  A: " << mask_str(r.a)
                          << "  B: " << mask_str(r.b) << "\n";
        }
    }
    out["inherits"] = inherits;
    if (json_mode) std::cout << out.dump(2) << "\n";
    return inherits ? 0 : 1;
}

// ------------------------------------------------------------- conditions

struct ConditionRow {
    std::string name;
    CheckStatus status;
    std::string detail;
    json witness; // null when absent
};

json row_json(const ConditionRow& r) {
    json out{{"name", r.name}, {"status", status_str(r.status)}};
    if (!r.detail.empty()) out["detail"] = r.detail;
    if (!r.witness.is_null()) out["witness"] = r.witness;
    return out;
}

int run_conditions(const std::string& file, long long cap_flag, bool extended,
                   const std::string& adjacency, bool json_mode) {
    WeightedGraph g = load_graph_file(file);
    std::size_t cap = cap_flag > 0 ? static_cast<std::size_t>(cap_flag) : kDefaultEnumerationCap;
    AdjacencyMode mode =
        adjacency == "pairwise" ? AdjacencyMode::PairwiseAdjacent : AdjacencyMode::SharedVertex;
    ConditionReport rep = check_f_conditions(g, cap, mode);

    std::vector<ConditionRow> rows;
    {
        json w;
        if (rep.star.witness) {
            const StarWitness& sw = *rep.star.witness;
            w = json{{"center", sw.center + 1},
                     {"edges", json::array({edge_json(sw.edges[0]), edge_json(sw.edges[1]),
                                            edge_json(sw.edges[2])})}};
        }
        rows.push_back({"star", rep.star.status, rep.star.detail, w});
    }
    {
        json w;
        if (rep.path.witness) {
            const PathWitness& pw = *rep.path.witness;
            w = json{{"path", verts_json(pw.path_verts)}, {"i", pw.i}, {"j", pw.j}, {"k", pw.k}};
        }
        rows.push_back({"path", rep.path.status, rep.path.detail, w});
    }
    {
        json w;
        if (rep.cycle.witness) w = json{{"cycle", verts_json(rep.cycle.witness->cycle.verts)}};
        rows.push_back({"cycle", rep.cycle.status, rep.cycle.detail, w});
    }
    {
        json w;
        if (rep.pan.witness) {
            const PanWitness& pw = *rep.pan.witness;
            w = json{{"cycle", verts_json(pw.cycle.verts)},
                     {"path", verts_json(pw.path_verts)},
                     {"e", edge_json(pw.e)}};
        }
        rows.push_back({"pan", rep.pan.status, rep.pan.detail, w});
    }
    {
        json w;
        if (rep.adjacent_cycles.witness)
            w = json{{"c1", verts_json(rep.adjacent_cycles.witness->c1.verts)},
                     {"c2", verts_json(rep.adjacent_cycles.witness->c2.verts)}};
        rows.push_back(
            {"adjacent-cycles", rep.adjacent_cycles.status, rep.adjacent_cycles.detail, w});
    }
    if (extended) {
        PanCheck rp = check_refined_pan(g, cap);
        json w;
        if (rp.witness)
            w = json{{"cycle", verts_json(rp.witness->cycle.verts)},
                     {"path", verts_json(rp.witness->path_verts)},
                     {"e", edge_json(rp.witness->e)}};
        rows.push_back({"refined-pan", rp.status, rp.detail, w});

        ConstantCycleClaims claims = check_constant_cycle_claims(g, cap);
        for (const ClaimResult& c : claims.claims) {
            json cw;
            if (c.cycle) cw = json{{"cycle", verts_json(c.cycle->verts)}};
            rows.push_back({"claim-" + std::to_string(c.claim), c.status, c.detail, cw});
        }
    }

    bool any_fail = false;
    for (const ConditionRow& r : rows)
        if (r.status == CheckStatus::Fail) any_fail = true;

    if (json_mode) {
        json out{{"schema", 1}, {"command", "conditions"}, {"all_pass", !any_fail}};
        json arr = json::array();
        for (const ConditionRow& r : rows) arr.push_back(row_json(r));
        out["checks"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const ConditionRow& r : rows) {
            std::ostringstream line;
            line << r.name;
            for (std::size_t i = r.name.size(); i < 16; ++i) line << ' ';
            line << status_str(r.status);
            if (!r.detail.empty()) line << "  " << r.detail;
            std::cout << line.str() << "\n";
            if (!r.witness.is_null()) std::cout << "    witness: " << r.witness.dump() << "\n";
        }
        std::cout << "result: " << (any_fail ? "fail" : "pass") << "\n";
    }
    return any_fail ? 1 : 0;
}

// ------------------------------------------------------------------ pmin

VertexSet parse_coalition(const std::string& text, int n) {
    VertexSet a(n);
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw cli_error(3, "ParseError", "empty vertex in coalition list");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw cli_error(3, "ParseError", "bad vertex '" + tok + "' in coalition list");
        }
        if (used != tok.size())
            throw cli_error(3, "ParseError", "bad vertex '" + tok + "' in coalition list");
        if (v < 1 || v > n)
            throw cli_error(3, "UnknownVertex",
                            "unknown vertex " + std::to_string(v) + " (graph has " +
                                std::to_string(n) + " vertices)");
        if (a.test(v - 1))
            throw cli_error(3, "ParseError", "repeated vertex " + std::to_string(v));
        a.set(v - 1);
    }
    return a;
}

int run_pmin(const std::string& file, const std::string& coalition, bool coalition_given,
             bool json_mode) {
    WeightedGraph g = load_graph_file(file);
    VertexSet a = coalition_given ? parse_coalition(coalition, g.n()) : VertexSet::full(g.n());
    Partition p = p_min(g, a);
    std::vector<Edge> sigma = sigma_min(g, a);
    if (json_mode) {
        json blocks = json::array();
        for (const VertexSet& b : p.blocks) blocks.push_back(verts_json(b.members()));
        json sig = json::array();
        for (const Edge& e : sigma) sig.push_back(edge_json(e));
        json out{{"schema", 1},
                 {"command", "pmin"},
                 {"coalition", verts_json(a.members())},
                 {"blocks", blocks},
                 {"sigma", sig}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::string bs = "[";
        for (std::size_t i = 0; i < p.blocks.size(); ++i) {
            if (i) bs += ",";
            bs += set_str(p.blocks[i].members());
        }
        bs += "]";
        std::string es = "{";
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (i) es += ",";
            es += "{" + std::to_string(sigma[i].u + 1) + "," + std::to_string(sigma[i].v + 1) + "}";
        }
        es += "}";
        std::cout << "P_min(A) = " << bs << "\n";
        std::cout << "Sigma(A) = " << es << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- restrict

int run_restrict(const std::string& file, const std::string& game_file,
                 const std::string& correspondence, bool json_mode) {
    WeightedGraph g = load_graph_file(file);
    if (g.n() > 14)
        throw too_large("restricted-game tables are limited to 14 players, graph has " +
                        std::to_string(g.n()));
    Game v;
    try {
        v = load_game_file(game_file, g.n());
    } catch (const parse_error& e) {
        if (std::string(e.what()).find("vertex out of range") != std::string::npos)
            throw cli_error(3, "SizeMismatch",
                            std::string(e.what()) + " (game names a vertex beyond the graph)");
        throw;
    }
    Correspondence c = correspondence == "myerson" ? Correspondence::Myerson : Correspondence::PMin;
    Game r = restricted_game(g, v, c);
    if (json_mode) {
        json table = json::array();
        for (Coalition a = 1; a <= r.full(); ++a)
            if (r.value(a) != 0)
                table.push_back(json{{"coalition", mask_json(a)}, {"value", r.value(a)}});
        json out{{"schema", 1},
                 {"command", "restrict"},
                 {"correspondence", correspondence},
                 {"n", g.n()},
                 {"table", table}};
        std::cout << out.dump(2) << "\n";
    } else {
        // Re-parseable game-file lines; omitted coalitions are zero.
        std::cout << "# restricted game (" << correspondence << ") on " << g.n() << " players\n";
        for (Coalition a = 1; a <= r.full(); ++a) {
            if (r.value(a) == 0) continue;
            std::string ms = mask_str(a);
            std::cout << ms.substr(1, ms.size() - 2) << " " << r.value(a) << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------ fuzz

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Mix of Erdos-Renyi (rejected until connected), tree-grown and
// structure-biased instances; uniform random graphs alone almost never
// exercise the Inherits branches.
WeightedGraph fuzz_graph(int n, int max_weight, std::uint64_t trial_seed) {
    switch (trial_seed % 4) {
    case 0: break;
    case 1: break;
    case 2: return random_connected_graph(n, max_weight, splitmix64(trial_seed ^ 0xa5a5), 0.4);
    default:
        if (n >= 4) return random_structured_graph(n, splitmix64(trial_seed ^ 0x5a5a));
        break;
    }
    for (std::uint64_t k = 0;; ++k) {
        WeightedGraph g = random_graph(n, max_weight, splitmix64(trial_seed + 0x100 + k), 0.5);
        if (is_connected(g)) return g;
    }
}

struct TrialOutcome {
    bool agree = true;
    bool positive = false; // recognizer Inherits / conditions all pass
    std::string rec;       // recognizer or conditions verdict, as text
    bool oracle_yes = false;
    std::string error; // non-empty when the trial itself blew up
};

int run_fuzz(int n, int trials, int weights, std::uint64_t seed, const std::string& mode,
             bool json_mode) {
    bool f_mode = mode == "f";
    int cap = f_mode ? kFOracleCap : kOracleCap;
    if (n < 1) throw cli_error(3, "InvalidArgument", "--n must be at least 1");
    if (n > cap)
        throw cli_error(3, "InvalidArgument",
                        "--n must stay within the oracle cap " + std::to_string(cap));
    if (trials < 0) throw cli_error(3, "InvalidArgument", "--trials must be non-negative");
    if (weights < 1) throw cli_error(3, "InvalidArgument", "--weights must be at least 1");

    std::vector<TrialOutcome> results(static_cast<std::size_t>(trials));
    auto run_trial = [&](int i) {
        TrialOutcome& out = results[static_cast<std::size_t>(i)];
        try {
            std::uint64_t ts = splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t(i) + 1)));
            WeightedGraph g = fuzz_graph(n, weights, ts);
            if (f_mode) {
                ConditionReport rep = check_f_conditions(g);
                FConvexityInheritance r = inheritance_fconvexity_bruteforce(g);
                out.positive = rep.all_pass();
                out.oracle_yes = r.inherits;
                out.rec = out.positive ? "conditions-pass" : "conditions-fail";
                out.agree = out.positive == r.inherits;
            } else {
                Verdict d = decide(g);
                ConvexityInheritance r = inheritance_convexity_bruteforce(g);
                out.positive = d.status == Status::Inherits;
                out.oracle_yes = r.inherits;
                out.rec = to_string(d.status);
                // OutsideCharacterization must never appear on connected input.
                out.agree = (d.status == Status::Inherits && r.inherits) ||
                            (d.status == Status::Fails && !r.inherits);
            }
        } catch (const std::exception& e) {
            out.error = e.what();
            out.agree = false;
        }
    };

    int workers = trials >= 64
                      ? static_cast<int>(std::min(std::thread::hardware_concurrency(), 8u))
                      : 1;
    if (workers < 1) workers = 1;
    if (workers == 1) {
        for (int i = 0; i < trials; ++i) run_trial(i);
    } else {
        std::atomic<int> next{0};
        auto body = [&] {
            for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) run_trial(i);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(body);
        for (std::thread& t : pool) t.join();
    }

    // Aggregate in trial order, stopping at the first disagreement.
    int processed = 0, agree = 0, positive = 0, negative = 0;
    int bad = -1;
    for (int i = 0; i < trials; ++i) {
        const TrialOutcome& out = results[static_cast<std::size_t>(i)];
        ++processed;
        if (!out.error.empty()) throw cli_error(5, "InternalError", "trial " + std::to_string(i) +
                                                                        ": " + out.error);
        if (!out.agree) {
            bad = i;
            break;
        }
        ++agree;
        (out.positive ? positive : negative)++;
    }

    std::string dump_file;
    if (bad >= 0) {
        std::uint64_t ts =
            splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t(bad) + 1)));
        WeightedGraph g = fuzz_graph(n, weights, ts);
        dump_file = "pmin_fuzz_disagreement_" + std::to_string(bad) + ".txt";
        std::ofstream f(dump_file);
        f << "# fuzz disagreement: trial " << bad << ", seed " << seed << ", mode " << mode
          << "\n";
        f << to_text(g);
    }

    const char* pos_name = f_mode ? "conditions_pass" : "inherits";
    const char* neg_name = f_mode ? "conditions_fail" : "fails";
    if (json_mode) {
        json out{{"schema", 1}, {"command", "fuzz"},   {"mode", mode},
                 {"n", n},      {"trials", trials},    {"weights", weights},
                 {"seed", seed}, {"processed", processed}, {"agree", agree},
                 {pos_name, positive}, {neg_name, negative}};
        if (bad >= 0) {
            const TrialOutcome& o = results[static_cast<std::size_t>(bad)];
            out["disagreement"] = json{{"trial", bad},
                                       {"file", dump_file},
                                       {"recognizer", o.rec},
                                       {"oracle", o.oracle_yes ? "yes" : "no"}};
        } else {
            out["disagreement"] = nullptr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "trials: " << trials << "  n: " << n << "  weights: " << weights
                  << "  seed: " << seed << "  mode: " << mode << "\n";
        std::cout << "agree: " << agree << "/" << processed << "  (" << pos_name << ": "
                  << positive << ", " << neg_name << ": " << negative << ")\n";
        if (bad >= 0) {
            const TrialOutcome& o = results[static_cast<std::size_t>(bad)];
            std::cout << "disagreement at trial " << bad << ": recognizer=" << o.rec
                      << " oracle=" << (o.oracle_yes ? "yes" : "no") << "\n";
            std::cout << "graph dumped to " << dump_file << "\n";
        }
    }
    return bad >= 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-partition restricted games: structural recognizer and oracles"};
    app.require_subcommand(1);

    bool json_mode = false;
    std::uint64_t seed = 1;
    long long cap_flag = 0;
    app.add_flag("--json", json_mode, "emit machine-readable JSON (schema 1)");
    app.add_option("--seed", seed, "random seed (fuzz)");
    app.add_option("--cap", cap_flag, "override size caps (0 = command default)");

    std::string decide_file;
    CLI::App* cmd_decide = app.add_subcommand("decide", "structural inheritance-of-convexity verdict");
    cmd_decide->fallthrough();
    cmd_decide->add_option("graph", decide_file, "graph file")->required();

    std::string oracle_file, oracle_mode = "convexity";
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "exhaustive inheritance check over unanimity games");
    cmd_oracle->fallthrough();
    cmd_oracle->add_option("graph", oracle_file, "graph file")->required();
    cmd_oracle->add_option("--mode", oracle_mode, "convexity | f-convexity")
        ->check(CLI::IsMember({"convexity", "f-convexity"}));

    std::string cond_file, adjacency = "shared-vertex";
    bool extended = false;
    CLI::App* cmd_conditions = app.add_subcommand("conditions", "structural condition checkers");
    cmd_conditions->fallthrough();
    cmd_conditions->add_option("graph", cond_file, "graph file")->required();
    cmd_conditions->add_flag("--extended", extended, "also run the refined checkers");
    cmd_conditions->add_option("--adjacency", adjacency, "edge-triple adjacency reading")
        ->check(CLI::IsMember({"shared-vertex", "pairwise"}));

    std::string pmin_file, coalition;
    CLI::App* cmd_pmin = app.add_subcommand("pmin", "minimum partition of a coalition");
    cmd_pmin->fallthrough();
    cmd_pmin->add_option("graph", pmin_file, "graph file")->required();
    CLI::Option* coal_opt =
        cmd_pmin->add_option("--coalition", coalition, "comma-separated 1-based vertices (default: all)");

    std::string restrict_file, game_file, correspondence = "pmin";
    CLI::App* cmd_restrict = app.add_subcommand("restrict", "restricted-game table of a game file");
    cmd_restrict->fallthrough();
    cmd_restrict->add_option("graph", restrict_file, "graph file")->required();
    cmd_restrict->add_option("--game", game_file, "game file")->required();
    cmd_restrict->add_option("--correspondence", correspondence, "pmin | myerson")
        ->check(CLI::IsMember({"pmin", "myerson"}));

    int fuzz_n = 5, fuzz_trials = 100, fuzz_weights = 2;
    std::string fuzz_mode = "rec";
    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "cross-validate recognizer against the oracle");
    cmd_fuzz->fallthrough();
    cmd_fuzz->add_option("--n", fuzz_n, "vertices per trial");
    cmd_fuzz->add_option("--trials", fuzz_trials, "number of trials");
    cmd_fuzz->add_option("--weights", fuzz_weights, "weights drawn from {1..k}");
    cmd_fuzz->add_option("--mode", fuzz_mode, "rec (recognizer) | f (conditions)")
        ->check(CLI::IsMember({"rec", "f"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (*cmd_decide) return guard(json_mode, [&] { return run_decide(decide_file, json_mode); });
    if (*cmd_oracle)
        return guard(json_mode, [&] { return run_oracle(oracle_file, oracle_mode, cap_flag, json_mode); });
    if (*cmd_conditions)
        return guard(json_mode,
                     [&] { return run_conditions(cond_file, cap_flag, extended, adjacency, json_mode); });
    if (*cmd_pmin)
        return guard(json_mode, [&] {
            return run_pmin(pmin_file, coalition, coal_opt->count() > 0, json_mode);
        });
    if (*cmd_restrict)
        return guard(json_mode, [&] {
            return run_restrict(restrict_file, game_file, correspondence, json_mode);
        });
    if (*cmd_fuzz)
        return guard(json_mode, [&] {
            return run_fuzz(fuzz_n, fuzz_trials, fuzz_weights, seed, fuzz_mode, json_mode);
        });
    return 3;
}
