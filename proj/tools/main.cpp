// ncse: networked supervisory-control toolkit.
//
// Subcommands: build-gs, estimate, oracle-nse, baseline-estimate, synthesize,
// extract-supervisor, verify, simulate, fuzz.
// Exit codes: 0 success, 1 negative verdict (unsafe closed loop, inconsistent
// observation, or no safe supervisor), 2 usage/IO error, 3 state budget
// exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncse/baseline.hpp"
#include "ncse/comm_automaton.hpp"
#include "ncse/errors.hpp"
#include "ncse/estimator.hpp"
#include "ncse/fuzz.hpp"
#include "ncse/io.hpp"
#include "ncse/synthesis.hpp"

namespace {

using ncse::EventId;
using ncse::StateId;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Common {
    std::string format = "text";
    std::uint64_t budget = ncse::kDefaultStateBudget;
};

ncse::DelayBounds parse_bounds(const std::string& spec) {
    ncse::DelayBounds b;
    std::uint32_t* slots[4] = {&b.n_o, &b.n_c, &b.n_lo, &b.n_lc};
    std::stringstream ss(spec);
    std::string token;
    int i = 0;
    while (std::getline(ss, token, ',')) {
        if (i == 4) throw ncse::validation_error("--bounds expects No,Nc,Nlo,Nlc");
        try {
            *slots[i++] = static_cast<std::uint32_t>(std::stoul(token));
        } catch (const std::exception&) {
            throw ncse::validation_error("--bounds expects four nonnegative integers");
        }
    }
    if (i != 4) throw ncse::validation_error("--bounds expects No,Nc,Nlo,Nlc");
    return b;
}

/// A report is accumulated as structured data plus parallel text lines so the
/// two formats stay byte-deterministic for identical inputs.
struct Report {
    json doc;
    std::vector<std::string> lines;

    Report(const std::string& command, const std::optional<ncse::DelayBounds>& b) {
        doc["schema"] = kSchemaVersion;
        doc["command"] = command;
        lines.push_back("command: " + command);
        if (b) {
            doc["bounds"] = {b->n_o, b->n_c, b->n_lo, b->n_lc};
            lines.push_back("bounds: No=" + std::to_string(b->n_o) + ",Nc=" +
                            std::to_string(b->n_c) + ",Nlo=" + std::to_string(b->n_lo) + ",Nlc=" +
                            std::to_string(b->n_lc));
        }
    }

    void add(const std::string& key, const json& value, const std::string& line) {
        doc[key] = value;
        lines.push_back(line);
    }

    void print(const std::string& format) const {
        if (format == "structured") {
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const std::string& line : lines) std::cout << line << "\n";
        }
    }
};

std::string render_state_set(const std::vector<StateId>& states, const ncse::Automaton& g) {
    std::string out = "{";
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i) out += ",";
        out += g.state_name(states[i]);
    }
    return out + "}";
}

json state_set_to_json(const std::vector<StateId>& states, const ncse::Automaton& g) {
    json out = json::array();
    for (StateId q : states) out.push_back(g.state_name(q));
    return out;
}

std::vector<StateId> parse_state_list(const std::string& spec, const ncse::Automaton& g) {
    std::vector<StateId> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        auto q = g.find_state(token);
        if (!q) throw ncse::validation_error("unknown plant state '" + token + "'");
        out.push_back(*q);
    }
    return out;
}

std::vector<ncse::ObsRecord> load_obs_stream(const std::string& path, const ncse::Alphabet& a) {
    if (path == "-") return ncse::parse_obs_stream(std::cin, a);
    std::ifstream in(path);
    if (!in) throw ncse::validation_error("cannot open observation stream '" + path + "'");
    return ncse::parse_obs_stream(in, a);
}

ncse::SafetySpec load_safety(const ncse::Automaton& g, const std::string& safe_states,
                             const std::string& spec_path) {
    if (!safe_states.empty() && !spec_path.empty()) {
        throw ncse::validation_error("--safe-states and --spec are mutually exclusive");
    }
    if (!safe_states.empty()) {
        return ncse::SafetySpec::from_states(g, parse_state_list(safe_states, g));
    }
    if (!spec_path.empty()) {
        return ncse::SafetySpec::from_subautomaton(ncse::load_automaton(spec_path), g);
    }
    throw ncse::validation_error("one of --safe-states or --spec is required");
}

std::optional<std::vector<ncse::ControlAction>> load_actions(const std::string& path,
                                                             const ncse::Alphabet& a) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw ncse::validation_error("cannot open action list '" + path + "'");
    std::vector<ncse::ControlAction> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(ncse::parse_action_spec(line, a));
    }
    if (out.empty()) throw ncse::validation_error("action list '" + path + "' is empty");
    return out;
}

ncse::ExtractionPolicy parse_policy(const std::string& spec, const ncse::Alphabet& a) {
    ncse::ExtractionPolicy p;
    if (spec == "greedy-max") {
        p.kind = ncse::ExtractionPolicy::Kind::GreedyMax;
    } else if (spec == "min") {
        p.kind = ncse::ExtractionPolicy::Kind::Min;
    } else if (spec.rfind("fixed:", 0) == 0) {
        p.kind = ncse::ExtractionPolicy::Kind::Fixed;
        p.fixed = ncse::parse_action_spec(spec.substr(6), a);
    } else {
        throw ncse::validation_error("--policy expects greedy-max, min, or fixed:<events>");
    }
    return p;
}

// ---------------------------------------------------------------------------

int cmd_build_gs(const std::string& plant_path, const std::string& sup_path,
                 const ncse::DelayBounds& b, const Common& common, const std::string& out_path) {
    ncse::Automaton g = ncse::load_automaton(plant_path);
    ncse::NetworkedSupervisor sup = ncse::load_supervisor(sup_path);
    ncse::CommAutomaton gs = ncse::build_gs(g, sup, b, common.budget);

    Report report("build-gs", b);
    std::size_t transitions = 0;
    for (const auto& row : gs.transitions) transitions += row.size();
    report.add("states", gs.num_states(), "states: " + std::to_string(gs.num_states()));
    report.add("transitions", transitions, "transitions: " + std::to_string(transitions));
    report.add("initial", render_comm_state(gs.states[gs.initial], g, sup),
               "initial: " + render_comm_state(gs.states[gs.initial], g, sup));
    if (!out_path.empty()) {
        ncse::write_file(out_path, ncse::serialize_comm_automaton(gs, g, sup));
        report.add("out", out_path, "out: " + out_path);
    }
    report.print(common.format);
    return 0;
}

int cmd_estimate(const std::string& plant_path, const std::string& sup_path,
                 const ncse::DelayBounds& b, const Common& common, const std::string& obs_path,
                 bool augmented) {
    ncse::Automaton g = ncse::load_automaton(plant_path);
    ncse::NetworkedSupervisor sup = ncse::load_supervisor(sup_path);
    std::vector<ncse::ObsRecord> records = load_obs_stream(obs_path, g.alphabet());

    Report report("estimate", b);
    json steps = json::array();
    StateId p = sup.realization.initial();
    ncse::EstimatorSession session(g, b, sup.decision_at(p));

    auto emit = [&](const std::string& label) {
        std::vector<StateId> est = session.plant_estimate();
        json step;
        step["observed"] = label;
        step["nse"] = state_set_to_json(est, g);
        if (augmented) {
            json members = json::array();
            for (const ncse::AugmentedState& m : session.current()) {
                members.push_back(ncse::render_augmented_state(m, g));
            }
            step["augmented"] = members;
        }
        steps.push_back(step);
        report.lines.push_back("NSE: " + render_state_set(est, g));
        if (augmented) {
            for (const ncse::AugmentedState& m : session.current()) {
                report.lines.push_back("  " + ncse::render_augmented_state(m, g));
            }
        }
    };

    emit("");
    for (const ncse::ObsRecord& rec : records) {
        p = sup.step(p, rec.event);
        ncse::ControlAction pi = rec.action.value_or(sup.decision_at(p));
        try {
            session.observe(rec.event, pi);
        } catch (const ncse::inconsistent_observation_error& err) {
            report.doc["steps"] = steps;
            report.add("inconsistent", g.alphabet().name(rec.event),
                       std::string("inconsistent: ") + err.what());
            report.print(common.format);
            return 1;
        }
        emit(g.alphabet().name(rec.event));
    }
    report.doc["steps"] = steps;
    report.print(common.format);
    return 0;
}

int cmd_oracle_nse(const std::string& plant_path, const std::string& sup_path,
                   const ncse::DelayBounds& b, const Common& common, const std::string& obs_path) {
    ncse::Automaton g = ncse::load_automaton(plant_path);
    ncse::NetworkedSupervisor sup = ncse::load_supervisor(sup_path);
    std::vector<ncse::ObsRecord> records = load_obs_stream(obs_path, g.alphabet());
    for (const ncse::ObsRecord& rec : records) {
        if (rec.action) {
            throw ncse::validation_error(
                "oracle-nse derives actions from the supervisor; 'issue' is not allowed here");
        }
    }
    ncse::CommAutomaton gs = ncse::build_gs(g, sup, b, common.budget);

    Report report("oracle-nse", b);
    json steps = json::array();
    std::vector<EventId> t;
    auto emit = [&](const std::string& label) -> bool {
        auto est = ncse::oracle_nse(gs, t);
        if (!est) {
            report.doc["steps"] = steps;
            report.add("inconsistent", label, "inconsistent: observation '" + label +
                                                  "' is impossible under the channel model");
            report.print(common.format);
            return false;
        }
        json step;
        step["observed"] = label;
        step["nse"] = state_set_to_json(*est, g);
        steps.push_back(step);
        report.lines.push_back("NSE: " + render_state_set(*est, g));
        return true;
    };

    if (!emit("")) return 1;
    for (const ncse::ObsRecord& rec : records) {
        t.push_back(rec.event);
        if (!emit(g.alphabet().name(rec.event))) return 1;
    }
    report.doc["steps"] = steps;
    report.print(common.format);
    return 0;
}

int cmd_baseline(const std::string& plant_path, const std::string& sup_path,
                 const ncse::DelayBounds& b, const Common& common, const std::string& obs_path) {
    if (b.n_o != 0 || b.n_lo != 0 || b.n_lc != 0) {
        throw ncse::validation_error(
            "baseline-estimate models control delays only; --bounds must be 0,Nc,0,0");
    }
    ncse::Automaton g = ncse::load_automaton(plant_path);
    ncse::NetworkedSupervisor sup = ncse::load_supervisor(sup_path);
    std::vector<ncse::ObsRecord> records = load_obs_stream(obs_path, g.alphabet());
    for (const ncse::ObsRecord& rec : records) {
        if (rec.action) {
            throw ncse::validation_error(
                "baseline-estimate derives actions from the supervisor; 'issue' is not allowed");
        }
    }

    Report report("baseline-estimate", b);
    json steps = json::array();
    std::vector<EventId> t;
    auto emit = [&](const std::string& label) {
        std::vector<StateId> est = ncse::baseline_estimate(g, sup, b.n_c, t, common.budget);
        json step;
        step["observed"] = label;
        step["estimate"] = state_set_to_json(est, g);
        steps.push_back(step);
        report.lines.push_back("NSE: " + render_state_set(est, g));
    };

    emit("");
    for (const ncse::ObsRecord& rec : records) {
        t.push_back(rec.event);
        emit(g.alphabet().name(rec.event));
    }
    report.doc["steps"] = steps;
    report.print(common.format);
    return 0;
}

int cmd_synthesize(const std::string& plant_path, const std::string& safe_states,
                   const std::string& spec_path, const ncse::DelayBounds& b, const Common& common,
                   const std::string& actions_path, const std::string& out_path) {
    ncse::Automaton g = ncse::load_automaton(plant_path);
    ncse::SafetySpec spec = load_safety(g, safe_states, spec_path);
    auto actions = load_actions(actions_path, g.alphabet());
    ncse::Nbts nbts = ncse::build_nbts(g, b, actions, common.budget);

    Report report("synthesize", b);
    report.add("nbts_y_states", nbts.y_states.size(),
               "nbts-y-states: " + std::to_string(nbts.y_states.size()));
    report.add("nbts_z_states", nbts.z_states.size(),
               "nbts-z-states: " + std::to_string(nbts.z_states.size()));

    std::optional<ncse::Ainc> ainc = ncse::prune_ainc(nbts, spec);
    if (!ainc) {
        report.add("result", "empty", "result: no safe supervisor exists");
        report.print(common.format);
        return 1;
    }
    report.add("ainc_y_states", ainc->y_states.size(),
               "ainc-y-states: " + std::to_string(ainc->y_states.size()));
    report.add("ainc_z_states", ainc->z_states.size(),
               "ainc-z-states: " + std::to_string(ainc->z_states.size()));
    if (!out_path.empty()) {
        ncse::write_file(out_path, ncse::serialize_ainc(*ainc, g, b));
        report.add("out", out_path, "out: " + out_path);
    }
    report.add("result", "ok", "result: ok");
    report.print(common.format);
    return 0;
}

int cmd_extract(const std::string& plant_path, const std::string& ainc_path,
                const std::string& policy_spec, const Common& common,
                const std::string& out_path) {
    ncse::Automaton g = ncse::load_automaton(plant_path);
    auto [ainc, b] = ncse::load_ainc(ainc_path, g);
    ncse::ExtractionPolicy policy = parse_policy(policy_spec, g.alphabet());
    ncse::NetworkedSupervisor sup = ncse::extract_supervisor(ainc, g, policy);

    Report report("extract-supervisor", b);
    report.add("policy", policy_spec, "policy: " + policy_spec);
    report.add("states", sup.realization.num_states(),
               "states: " + std::to_string(sup.realization.num_states()));
    report.add("initial_action", ncse::render_action(sup.decision_at(sup.realization.initial()),
                                                     g.alphabet()),
               "initial-action: " +
                   ncse::render_action(sup.decision_at(sup.realization.initial()), g.alphabet()));
    if (!out_path.empty()) {
        ncse::write_file(out_path, ncse::serialize_supervisor(sup));
        report.add("out", out_path, "out: " + out_path);
    }
    report.print(common.format);
    return 0;
}

int cmd_verify(const std::string& plant_path, const std::string& sup_path,
               const std::string& safe_states, const std::string& spec_path,
               const ncse::DelayBounds& b, const Common& common) {
    ncse::Automaton g = ncse::load_automaton(plant_path);
    ncse::NetworkedSupervisor sup = ncse::load_supervisor(sup_path);
    ncse::SafetySpec spec = load_safety(g, safe_states, spec_path);
    ncse::VerifyResult result = ncse::verify_networked_safety(g, sup, spec, b, common.budget);

    Report report("verify", b);
    if (result.safe) {
        report.add("verdict", "safe", "verdict: safe");
        report.print(common.format);
        return 0;
    }
    std::string witness;
    for (std::size_t i = 0; i < result.witness.size(); ++i) {
        if (i) witness += " ";
        witness += ncse::render_comm_event(result.witness[i], g.alphabet());
    }
    std::string plant_witness;
    for (std::size_t i = 0; i < result.witness_plant.size(); ++i) {
        if (i) plant_witness += " ";
        plant_witness += g.alphabet().name(result.witness_plant[i]);
    }
    report.add("verdict", "unsafe", "verdict: unsafe");
    report.add("witness", witness, "witness: " + witness);
    report.add("witness_plant", plant_witness, "witness-plant: " + plant_witness);
    report.print(common.format);
    return 1;
}

int cmd_simulate(const std::string& plant_path, const std::string& sup_path,
                 const ncse::DelayBounds& b, const Common& common, std::uint64_t steps,
                 std::uint64_t seed) {
    ncse::Automaton g = ncse::load_automaton(plant_path);
    ncse::NetworkedSupervisor sup = ncse::load_supervisor(sup_path);
    ncse::CommAutomaton gs = ncse::build_gs(g, sup, b, common.budget);
    auto trace = ncse::random_run(gs, steps, seed);

    Report report("simulate", b);
    report.add("seed", seed, "seed: " + std::to_string(seed));
    report.add("steps", trace.size(), "steps: " + std::to_string(trace.size()));
    json trace_json = json::array();
    for (const auto& [e, to] : trace) {
        std::string line = ncse::render_comm_event(e, g.alphabet()) + " -> " +
                           ncse::render_comm_state(gs.states[to], g, sup);
        trace_json.push_back(line);
        report.lines.push_back("  " + line);
    }
    report.doc["trace"] = trace_json;
    report.print(common.format);
    return 0;
}

int cmd_fuzz(std::uint64_t seed, std::uint64_t count, const ncse::FuzzCaps& caps,
             const Common& common, const std::string& out_prefix) {
    ncse::FuzzCorpus corpus(seed, caps);
    Report report("fuzz", std::nullopt);
    report.add("seed", seed, "seed: " + std::to_string(seed));
    report.add("count", count, "count: " + std::to_string(count));
    json instances = json::array();
    for (std::uint64_t k = 0; k < count; ++k) {
        ncse::FuzzInstance inst = corpus.instance(k);
        std::string bounds = std::to_string(inst.bounds.n_o) + "," +
                             std::to_string(inst.bounds.n_c) + "," +
                             std::to_string(inst.bounds.n_lo) + "," +
                             std::to_string(inst.bounds.n_lc);
        json item;
        item["index"] = k;
        item["states"] = inst.plant.num_states();
        item["events"] = inst.plant.alphabet().size();
        item["bounds"] = {inst.bounds.n_o, inst.bounds.n_c, inst.bounds.n_lo, inst.bounds.n_lc};
        item["safe_states"] = state_set_to_json(inst.safe_states, inst.plant);
        std::string line = "instance " + std::to_string(k) + ": states=" +
                           std::to_string(inst.plant.num_states()) + " events=" +
                           std::to_string(inst.plant.alphabet().size()) + " bounds=" + bounds +
                           " safe=" + render_state_set(inst.safe_states, inst.plant);
        if (!out_prefix.empty()) {
            std::string plant_path = out_prefix + std::to_string(k) + "_plant.json";
            std::string sup_path = out_prefix + std::to_string(k) + "_supervisor.json";
            ncse::write_file(plant_path, ncse::serialize_automaton(inst.plant));
            ncse::write_file(sup_path, ncse::serialize_supervisor(inst.sup));
            item["plant_file"] = plant_path;
            item["supervisor_file"] = sup_path;
            line += " plant=" + plant_path + " supervisor=" + sup_path;
        }
        instances.push_back(item);
        report.lines.push_back(line);
    }
    report.doc["instances"] = instances;
    report.print(common.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"networked supervisory control: estimation and synthesis"};
    app.require_subcommand(1);

    Common common;
    std::string plant_path, sup_path, obs_path = "-", out_path, safe_states, spec_path;
    std::string actions_path, policy_spec = "greedy-max", ainc_path, bounds_spec, fuzz_out;
    bool augmented = false;
    std::uint64_t steps = 100, seed = 0, count = 10;
    ncse::FuzzCaps caps;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "report format")
            ->check(CLI::IsMember({"text", "structured"}));
        cmd->add_option("--budget", common.budget, "state budget")->check(CLI::PositiveNumber);
    };
    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--bounds", bounds_spec, "No,Nc,Nlo,Nlc")->required();
    };

    CLI::App* build = app.add_subcommand("build-gs", "construct the communication automaton");
    build->add_option("--plant", plant_path)->required();
    build->add_option("--supervisor", sup_path)->required();
    build->add_option("--out", out_path);
    add_bounds(build);
    add_common(build);

    CLI::App* estimate = app.add_subcommand("estimate", "online state estimation");
    estimate->add_option("--plant", plant_path)->required();
    estimate->add_option("--supervisor", sup_path)->required();
    estimate->add_option("--obs", obs_path, "observation stream file, '-' for stdin");
    estimate->add_flag("--augmented", augmented, "print augmented states too");
    add_bounds(estimate);
    add_common(estimate);

    CLI::App* oracle = app.add_subcommand("oracle-nse", "observer-based estimation oracle");
    oracle->add_option("--plant", plant_path)->required();
    oracle->add_option("--supervisor", sup_path)->required();
    oracle->add_option("--obs", obs_path);
    add_bounds(oracle);
    add_common(oracle);

    CLI::App* baseline = app.add_subcommand("baseline-estimate",
                                            "window-based estimation (control delays only)");
    baseline->add_option("--plant", plant_path)->required();
    baseline->add_option("--supervisor", sup_path)->required();
    baseline->add_option("--obs", obs_path);
    add_bounds(baseline);
    add_common(baseline);

    CLI::App* synthesize = app.add_subcommand("synthesize", "build and prune the safe game graph");
    synthesize->add_option("--plant", plant_path)->required();
    synthesize->add_option("--safe-states", safe_states, "comma-separated safe plant states");
    synthesize->add_option("--spec", spec_path, "specification subautomaton file");
    synthesize->add_option("--actions", actions_path, "restrict actions to this list file");
    synthesize->add_option("--out", out_path);
    add_bounds(synthesize);
    add_common(synthesize);

    CLI::App* extract = app.add_subcommand("extract-supervisor", "decode a supervisor");
    extract->add_option("--plant", plant_path)->required();
    extract->add_option("--ainc", ainc_path)->required();
    extract->add_option("--policy", policy_spec, "greedy-max | min | fixed:<events>");
    extract->add_option("--out", out_path);
    add_common(extract);

    CLI::App* verify = app.add_subcommand("verify", "exhaustive networked safety check");
    verify->add_option("--plant", plant_path)->required();
    verify->add_option("--supervisor", sup_path)->required();
    verify->add_option("--safe-states", safe_states);
    verify->add_option("--spec", spec_path);
    add_bounds(verify);
    add_common(verify);

    CLI::App* simulate = app.add_subcommand("simulate", "seeded random closed-loop run");
    simulate->add_option("--plant", plant_path)->required();
    simulate->add_option("--supervisor", sup_path)->required();
    simulate->add_option("--steps", steps);
    simulate->add_option("--seed", seed);
    add_bounds(simulate);
    add_common(simulate);

    CLI::App* fuzz = app.add_subcommand("fuzz", "deterministic instance corpus");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--count", count);
    fuzz->add_option("--max-states", caps.max_states)->check(CLI::PositiveNumber);
    fuzz->add_option("--max-events", caps.max_events)->check(CLI::PositiveNumber);
    fuzz->add_option("--max-bound", caps.max_bound);
    fuzz->add_option("--out-prefix", fuzz_out, "write instance files with this prefix");
    add_common(fuzz);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            return cmd_build_gs(plant_path, sup_path, parse_bounds(bounds_spec), common, out_path);
        }
        if (estimate->parsed()) {
            return cmd_estimate(plant_path, sup_path, parse_bounds(bounds_spec), common, obs_path,
                                augmented);
        }
        if (oracle->parsed()) {
            return cmd_oracle_nse(plant_path, sup_path, parse_bounds(bounds_spec), common,
                                  obs_path);
        }
        if (baseline->parsed()) {
            return cmd_baseline(plant_path, sup_path, parse_bounds(bounds_spec), common, obs_path);
        }
        if (synthesize->parsed()) {
            return cmd_synthesize(plant_path, safe_states, spec_path, parse_bounds(bounds_spec),
                                  common, actions_path, out_path);
        }
        if (extract->parsed()) {
            return cmd_extract(plant_path, ainc_path, policy_spec, common, out_path);
        }
        if (verify->parsed()) {
            return cmd_verify(plant_path, sup_path, safe_states, spec_path,
                              parse_bounds(bounds_spec), common);
        }
        if (simulate->parsed()) {
            return cmd_simulate(plant_path, sup_path, parse_bounds(bounds_spec), common, steps,
                                seed);
        }
        if (fuzz->parsed()) {
            return cmd_fuzz(seed, count, caps, common, fuzz_out);
        }
    } catch (const ncse::budget_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const ncse::inconsistent_observation_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const ncse::validation_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
