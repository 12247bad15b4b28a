// Acceptance suite: one pass/fail line per criterion.
//
//   1. worked communication-automaton transitions (exact tuples)
//   2. worked estimator session (exact augmented sets)
//   3. baseline gap on the worked instance
//   4. estimator == observer oracle over the fuzz corpus
//   5. supervisor monotonicity of the closed-loop language
//   6. pruning == greatest complete safe subgraph
//   7. every extracted supervisor verifies safe
//   8. CLI reports for 1-3 are byte-identical across reruns
//
// Usage: acceptance <path-to-cli> <fixtures-dir>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ncse/baseline.hpp"
#include "ncse/comm_automaton.hpp"
#include "ncse/estimator.hpp"
#include "ncse/fuzz.hpp"
#include "ncse/synthesis.hpp"
#include "oracles.hpp"

using namespace ncse;
using namespace ncse::testing;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, double seconds, const std::string& what) {
    std::printf("criterion %d: %s (%.2fs) %s\n", criterion, pass ? "PASS" : "FAIL", seconds,
                what.c_str());
    if (!pass) ++g_failures;
}

void run(int criterion, const std::string& what, const std::function<bool()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = fn();
    } catch (const std::exception& err) {
        std::printf("criterion %d: exception: %s\n", criterion, err.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, pass, secs, what);
}

AugmentedState aug(StateId q, std::vector<ObsChannelConfig::Entry> obs_q,
                   ControlAction active, std::vector<CtrlChannelConfig::Entry> ctrl_q) {
    AugmentedState s;
    s.plant = q;
    s.obs.queue = std::move(obs_q);
    s.ctrl.active = active;
    s.ctrl.queue = std::move(ctrl_q);
    return s;
}

// -- criterion 1 ------------------------------------------------------------

bool check_worked_transitions() {
    Automaton g = example_plant();
    NetworkedSupervisor sup = example_supervisor();
    CommAutomaton gs = build_gs(g, sup, DelayBounds{1, 1, 1, 1});

    const EventId alpha = 0;
    CommState s0;  // (q1, eps, 0, pi1, eps, 0, p1)
    s0.ctrl.active = pi1();

    CommState s1 = s0;  // (q2, (alpha,0), 0, pi1, eps, 0, p1)
    s1.plant = 1;
    s1.obs.queue = {{alpha, 0}};

    CommState s2 = s0;  // (q2, eps, 0, pi1, (pi2,0), 0, p2)
    s2.plant = 1;
    s2.ctrl.queue = {{pi2(), 0}};
    s2.sup = 1;

    CommState s3 = s0;  // (q2, eps, 1, pi1, eps, 0, p1)
    s3.plant = 1;
    s3.obs.losses = 1;

    auto index_of = [&](const CommState& s) -> std::optional<std::uint32_t> {
        for (std::uint32_t i = 0; i < gs.num_states(); ++i) {
            if (gs.states[i] == s) return i;
        }
        return std::nullopt;
    };
    auto has_edge = [&](const CommState& from, const CommEvent& e, const CommState& to) {
        auto fi = index_of(from);
        auto ti = index_of(to);
        if (!fi || !ti) return false;
        auto n = gs.next(*fi, e);
        return n.has_value() && *n == *ti;
    };
    return gs.states[gs.initial] == s0 && has_edge(s0, CommEvent::plant(alpha), s1) &&
           has_edge(s1, CommEvent::deliver(alpha), s2) &&
           has_edge(s1, CommEvent::obs_loss(1), s3);
}

// -- criterion 2 ------------------------------------------------------------

bool check_worked_estimator() {
    Automaton g = example_plant();
    DelayBounds b{0, 2, 0, 0};
    const EventId alpha = 0;
    EstimatorSession session(g, b, pi1());

    AugmentedEstimate init = canonicalize({
        aug(0, {}, pi1(), {}),
        aug(1, {{alpha, 0}}, pi1(), {}),
    });
    if (session.current() != init) return false;

    session.observe(alpha, pi2());
    AugmentedEstimate after = canonicalize({
        aug(1, {}, pi1(), {{pi2(), 0}}),
        aug(2, {}, pi1(), {{pi2(), 1}}),
        aug(1, {}, pi2(), {}),
        aug(2, {}, pi2(), {}),
        aug(3, {}, pi2(), {}),
    });
    if (session.current() != after) return false;
    return session.plant_estimate() == std::vector<StateId>{1, 2, 3};
}

// -- criterion 3 ------------------------------------------------------------

bool check_baseline_gap() {
    Automaton g = example_plant();
    NetworkedSupervisor sup = example_supervisor();
    DelayBounds b{0, 2, 0, 0};
    const EventId alpha = 0, beta = 1, lambda = 2;

    std::vector<StateId> approx = baseline_estimate(g, sup, b.n_c, {alpha});
    bool q5_in_approx = false;
    for (StateId q : approx) q5_in_approx |= (q == 4);

    EstimatorSession session(g, b, pi1());
    session.observe(alpha, pi2());
    bool q5_in_exact = false;
    for (StateId q : session.plant_estimate()) q5_in_exact |= (q == 4);

    CommAutomaton gs = build_gs(g, sup, b);
    return q5_in_approx && !q5_in_exact && la_member(g, sup, b.n_c, {alpha, beta, lambda}) &&
           !language_member(gs, {alpha, beta, lambda});
}

// -- criterion 4 ------------------------------------------------------------

/// Supervisor whose realization is the tree of observable strings up to the
/// given depth, with an independently random admissible action at each node:
/// genuinely random per-step actions while staying a valid supervisor.
NetworkedSupervisor random_tree_supervisor(const Automaton& g, std::size_t depth,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Alphabet& a = g.alphabet();
    std::vector<EventId> obs;
    for (EventId e = 0; e < a.size(); ++e) {
        if (a.is_observable(e)) obs.push_back(e);
    }
    NetworkedSupervisor sup;
    sup.realization.alphabet() = a;
    auto random_action = [&] {
        return ControlAction{(rng() & a.controllable_mask()) | a.uncontrollable_mask()};
    };
    sup.realization.add_state("n0");
    sup.gamma.push_back(random_action());
    // breadth-first layers; leaves self-loop on every observable event
    std::vector<std::pair<StateId, std::size_t>> work{{0, 0}};
    while (!work.empty()) {
        auto [p, d] = work.back();
        work.pop_back();
        for (EventId e : obs) {
            if (d == depth) {
                sup.realization.add_transition(p, e, p);
            } else {
                StateId child = sup.realization.add_state("n" + std::to_string(
                                                              sup.realization.num_states()));
                sup.gamma.push_back(random_action());
                sup.realization.add_transition(p, e, child);
                work.emplace_back(child, d + 1);
            }
        }
    }
    return sup;
}

bool check_estimator_oracle(int& instances_run) {
    FuzzCorpus corpus(2026, FuzzCaps{6, 4, 2});
    instances_run = 0;
    for (std::uint64_t k = 0; instances_run < 500; ++k) {
        if (k > 5000) return false;  // corpus unusable; should never happen
        FuzzInstance inst = corpus.instance(k);
        NetworkedSupervisor sup = random_tree_supervisor(inst.plant, 4, 0x7e11 + k);
        CommAutomaton gs;
        try {
            gs = build_gs(inst.plant, sup, inst.bounds, 200'000);
        } catch (const budget_error&) {
            continue;
        }
        ++instances_run;

        const Alphabet& a = inst.plant.alphabet();
        std::vector<EventId> obs;
        for (EventId e = 0; e < a.size(); ++e) {
            if (a.is_observable(e)) obs.push_back(e);
        }
        // walk every delivered string of length <= 4, mirroring the session
        struct Node {
            EstimatorSession session;
            StateId p;
            std::vector<EventId> t;
        };
        EstimatorSession root(inst.plant, inst.bounds, sup.decision_at(sup.realization.initial()));
        auto o0 = oracle_nse(gs, {});
        if (!o0 || root.plant_estimate() != *o0) return false;
        std::vector<Node> stack{{std::move(root), sup.realization.initial(), {}}};
        while (!stack.empty()) {
            Node node = std::move(stack.back());
            stack.pop_back();
            for (EventId sigma : obs) {
                std::vector<EventId> t = node.t;
                t.push_back(sigma);
                StateId pn = sup.step(node.p, sigma);
                auto expected = oracle_nse(gs, t);
                EstimatorSession next = node.session;
                bool consistent = true;
                try {
                    next.observe(sigma, sup.decision_at(pn));
                } catch (const inconsistent_observation_error&) {
                    consistent = false;
                }
                if (consistent != expected.has_value()) return false;
                if (!consistent) continue;
                if (next.plant_estimate() != *expected) return false;
                if (t.size() < 4) stack.push_back({std::move(next), pn, std::move(t)});
            }
        }
    }
    return true;
}

// -- criterion 5 ------------------------------------------------------------

bool check_language_monotonicity(int& pairs_run) {
    FuzzCorpus corpus(515, FuzzCaps{6, 4, 2});
    std::mt19937_64 rng(515);
    pairs_run = 0;
    for (std::uint64_t k = 0; pairs_run < 200; ++k) {
        if (k > 2000) return false;
        FuzzInstance inst = corpus.instance(k);
        const Alphabet& a = inst.plant.alphabet();
        NetworkedSupervisor s2 = inst.sup;
        NetworkedSupervisor s1 = s2;
        for (ControlAction& pi : s1.gamma) {
            pi.mask = (pi.mask & rng()) | a.uncontrollable_mask();
        }
        CommAutomaton gs1, gs2;
        try {
            gs1 = build_gs(inst.plant, s1, inst.bounds, 300'000);
            gs2 = build_gs(inst.plant, s2, inst.bounds, 300'000);
        } catch (const budget_error&) {
            continue;
        }
        ++pairs_run;
        auto l1 = psi_language(gs1, 5);
        auto l2 = psi_language(gs2, 5);
        for (const auto& s : l1) {
            if (!l2.count(s)) return false;
        }
    }
    return true;
}

// -- criterion 6 ------------------------------------------------------------

bool check_pruning_maximality(int& instances_run) {
    FuzzCorpus corpus(606, FuzzCaps{5, 3, 1});
    instances_run = 0;
    for (std::uint64_t k = 0; instances_run < 100; ++k) {
        if (k > 3000) return false;
        FuzzInstance inst = corpus.instance(k);
        Nbts t;
        try {
            t = build_nbts(inst.plant, inst.bounds, std::nullopt, 200);
        } catch (const budget_error&) {
            continue;
        }
        ++instances_run;
        SafetySpec spec = SafetySpec::from_states(inst.plant, inst.safe_states);
        if (!prune_matches_oracle(t, spec)) return false;
    }
    return true;
}

// -- criterion 7 ------------------------------------------------------------

bool check_extraction_safety(int& extracted) {
    FuzzCorpus corpus(707, FuzzCaps{6, 4, 2});
    extracted = 0;
    for (std::uint64_t k = 0; extracted < 100; ++k) {
        if (k > 3000) return false;
        FuzzInstance inst = corpus.instance(k);
        Nbts t;
        try {
            t = build_nbts(inst.plant, inst.bounds, std::nullopt, 5000);
        } catch (const budget_error&) {
            continue;
        }
        SafetySpec spec = SafetySpec::from_states(inst.plant, inst.safe_states);
        std::optional<Ainc> a = prune_ainc(t, spec);
        if (!a) continue;
        ++extracted;
        NetworkedSupervisor sup = extract_supervisor(*a, inst.plant, ExtractionPolicy{});
        VerifyResult v = verify_networked_safety(inst.plant, sup, spec, inst.bounds, 2'000'000);
        if (!v.safe) return false;
    }
    return true;
}

// -- criterion 8 ------------------------------------------------------------

std::optional<std::string> capture(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    if (pclose(pipe) != 0) return std::nullopt;
    return out;
}

bool check_determinism(const std::string& cli, const std::string& fixtures) {
    std::string obs_path = "acceptance_obs.tmp";
    {
        FILE* f = fopen(obs_path.c_str(), "w");
        if (!f) return false;
        fputs("observe alpha\n", f);
        fclose(f);
    }
    std::string plant = fixtures + "/example1_plant.json";
    std::string sup = fixtures + "/example1_supervisor.json";
    std::vector<std::string> commands = {
        cli + " build-gs --plant " + plant + " --supervisor " + sup + " --bounds 1,1,1,1",
        cli + " estimate --plant " + plant + " --supervisor " + sup +
            " --bounds 0,2,0,0 --obs " + obs_path + " --augmented",
        cli + " baseline-estimate --plant " + plant + " --supervisor " + sup +
            " --bounds 0,2,0,0 --obs " + obs_path,
        cli + " build-gs --plant " + plant + " --supervisor " + sup +
            " --bounds 1,1,1,1 --format structured",
    };
    bool ok = true;
    for (const std::string& cmd : commands) {
        auto first = capture(cmd);
        auto second = capture(cmd);
        if (!first || !second || first->empty() || *first != *second) {
            ok = false;
            break;
        }
    }
    std::remove(obs_path.c_str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: acceptance <cli-binary> <fixtures-dir>\n");
        return 2;
    }
    std::string cli = argv[1], fixtures = argv[2];

    run(1, "worked communication-automaton transitions", check_worked_transitions);
    run(2, "worked estimator session", check_worked_estimator);
    run(3, "baseline over-approximation gap", check_baseline_gap);

    int n4 = 0, n5 = 0, n6 = 0, n7 = 0;
    run(4, "estimator equals observer oracle (fuzz)",
        [&] { return check_estimator_oracle(n4); });
    std::printf("           instances: %d\n", n4);
    run(5, "closed-loop language monotonicity (fuzz pairs)",
        [&] { return check_language_monotonicity(n5); });
    std::printf("           pairs: %d\n", n5);
    run(6, "pruning equals greatest complete safe subgraph",
        [&] { return check_pruning_maximality(n6); });
    std::printf("           instances: %d\n", n6);
    run(7, "extracted supervisors verify safe", [&] { return check_extraction_safety(n7); });
    std::printf("           extractions: %d\n", n7);
    run(8, "byte-identical reports across reruns", [&] { return check_determinism(cli, fixtures); });

    return g_failures == 0 ? 0 : 1;
}
