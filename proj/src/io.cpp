#include "ncse/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ncse {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown_fields(const json& obj, const std::vector<std::string>& allowed,
                           const std::string& context) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw validation_error("unknown field '" + key + "' in " + context);
        }
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw validation_error(std::string("JSON parse error: ") + err.what());
    }
}

json events_to_json(const Alphabet& a) {
    json events = json::array();
    for (EventId e = 0; e < a.size(); ++e) {
        events.push_back({{"name", a.name(e)},
                          {"controllable", a.is_controllable(e)},
                          {"observable", a.is_observable(e)}});
    }
    return events;
}

Alphabet events_from_json(const json& events) {
    Alphabet a;
    if (!events.is_array()) throw validation_error("'events' must be a list");
    for (const json& ev : events) {
        reject_unknown_fields(ev, {"name", "controllable", "observable"}, "event record");
        a.add_event(ev.at("name").get<std::string>(), ev.at("controllable").get<bool>(),
                    ev.at("observable").get<bool>());
    }
    return a;
}

json automaton_body(const Automaton& a) {
    json doc;
    doc["states"] = json::array();
    for (StateId q = 0; q < a.num_states(); ++q) doc["states"].push_back(a.state_name(q));
    doc["initial"] = a.state_name(a.initial());
    doc["events"] = events_to_json(a.alphabet());
    doc["transitions"] = json::array();
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (const auto& [e, to] : a.out(q)) {
            doc["transitions"].push_back({{"from", a.state_name(q)},
                                          {"event", a.alphabet().name(e)},
                                          {"to", a.state_name(to)}});
        }
    }
    return doc;
}

Automaton automaton_from_body(const json& doc) {
    Automaton a;
    a.alphabet() = events_from_json(doc.at("events"));
    if (!doc.at("states").is_array()) throw validation_error("'states' must be a list");
    for (const json& name : doc.at("states")) a.add_state(name.get<std::string>());
    auto initial = a.find_state(doc.at("initial").get<std::string>());
    if (!initial) throw validation_error("initial state is not in the state list");
    a.set_initial(*initial);
    for (const json& tr : doc.at("transitions")) {
        reject_unknown_fields(tr, {"from", "event", "to"}, "transition record");
        auto from = a.find_state(tr.at("from").get<std::string>());
        auto to = a.find_state(tr.at("to").get<std::string>());
        auto event = a.alphabet().find(tr.at("event").get<std::string>());
        if (!from || !to) {
            throw validation_error("transition record " + tr.dump() + " names an unknown state");
        }
        if (!event) {
            throw validation_error("transition record " + tr.dump() + " names an unknown event");
        }
        a.add_transition(*from, *event, *to);
    }
    return a;
}

json action_to_json(const ControlAction& pi, const Alphabet& a) {
    json out = json::array();
    for (EventId e = 0; e < a.size(); ++e) {
        if (pi.enables(e)) out.push_back(a.name(e));
    }
    return out;
}

ControlAction action_from_json(const json& names, const Alphabet& a) {
    ControlAction pi;
    for (const json& n : names) {
        auto e = a.find(n.get<std::string>());
        if (!e) throw validation_error("action enables unknown event '" + n.get<std::string>() + "'");
        pi.mask |= 1ULL << *e;
    }
    return pi;
}

}  // namespace

std::string serialize_automaton(const Automaton& a) {
    json doc;
    doc["kind"] = "automaton";
    doc.update(automaton_body(a));
    return doc.dump(2) + "\n";
}

Automaton parse_automaton(const std::string& text) {
    json doc = parse_json(text);
    reject_unknown_fields(doc, {"kind", "states", "initial", "events", "transitions"},
                          "automaton document");
    if (doc.at("kind") != "automaton") throw validation_error("expected kind 'automaton'");
    return automaton_from_body(doc);
}

Automaton load_automaton(const std::string& path) { return parse_automaton(read_file(path)); }

std::string serialize_supervisor(const NetworkedSupervisor& s) {
    json doc;
    doc["kind"] = "supervisor";
    doc.update(automaton_body(s.realization));
    doc["gamma"] = json::object();
    for (StateId p = 0; p < s.realization.num_states(); ++p) {
        doc["gamma"][s.realization.state_name(p)] =
            action_to_json(s.gamma[p], s.realization.alphabet());
    }
    if (s.special_state) doc["special_state"] = s.realization.state_name(*s.special_state);
    return doc.dump(2) + "\n";
}

NetworkedSupervisor parse_supervisor(const std::string& text) {
    json doc = parse_json(text);
    reject_unknown_fields(
        doc, {"kind", "states", "initial", "events", "transitions", "gamma", "special_state"},
        "supervisor document");
    if (doc.at("kind") != "supervisor") throw validation_error("expected kind 'supervisor'");
    NetworkedSupervisor s;
    s.realization = automaton_from_body(doc);
    s.gamma.resize(s.realization.num_states());
    const json& gamma = doc.at("gamma");
    if (!gamma.is_object()) throw validation_error("'gamma' must be a map");
    std::size_t covered = 0;
    for (const auto& [name, action] : gamma.items()) {
        auto p = s.realization.find_state(name);
        if (!p) throw validation_error("gamma names unknown state '" + name + "'");
        s.gamma[*p] = action_from_json(action, s.realization.alphabet());
        ++covered;
    }
    if (covered != s.realization.num_states()) {
        throw validation_error("gamma must cover every supervisor state");
    }
    if (doc.contains("special_state")) {
        auto p = s.realization.find_state(doc.at("special_state").get<std::string>());
        if (!p) throw validation_error("special_state is not in the state list");
        s.special_state = *p;
    }
    s.validate();
    return s;
}

NetworkedSupervisor load_supervisor(const std::string& path) {
    return parse_supervisor(read_file(path));
}

std::string serialize_comm_automaton(const CommAutomaton& gs, const Automaton& g,
                                     const NetworkedSupervisor& sup) {
    const Alphabet& a = g.alphabet();
    json doc;
    doc["kind"] = "comm-automaton";
    doc["states"] = json::array();
    for (const CommState& s : gs.states) doc["states"].push_back(render_comm_state(s, g, sup));
    doc["initial"] = render_comm_state(gs.states[gs.initial], g, sup);
    // Event table: plant events keep their flags; deliveries are what the
    // supervisor observes; losses and executions are unobservable plumbing.
    std::set<CommEvent> seen;
    json events = json::array();
    for (const auto& row : gs.transitions) {
        for (const auto& [e, to] : row) {
            (void)to;
            seen.insert(e);
        }
    }
    for (const CommEvent& e : seen) {
        bool plant = e.kind == CommEvent::Kind::Plant;
        events.push_back({{"name", render_comm_event(e, a)},
                          {"controllable", plant && a.is_controllable(e.event())},
                          {"observable", e.kind == CommEvent::Kind::Deliver}});
    }
    doc["events"] = events;
    doc["transitions"] = json::array();
    for (std::uint32_t s = 0; s < gs.num_states(); ++s) {
        for (const auto& [e, to] : gs.transitions[s]) {
            doc["transitions"].push_back({{"from", render_comm_state(gs.states[s], g, sup)},
                                          {"event", render_comm_event(e, a)},
                                          {"to", render_comm_state(gs.states[to], g, sup)}});
        }
    }
    return doc.dump(2) + "\n";
}

namespace {

json obs_config_to_json(const ObsChannelConfig& c, const Alphabet& a) {
    json queue = json::array();
    for (const auto& e : c.queue) queue.push_back({a.name(e.event), e.age});
    return {{"queue", queue}, {"losses", c.losses}};
}

ObsChannelConfig obs_config_from_json(const json& doc, const Alphabet& a) {
    reject_unknown_fields(doc, {"queue", "losses"}, "observation configuration");
    ObsChannelConfig c;
    for (const json& pair : doc.at("queue")) {
        auto e = a.find(pair.at(0).get<std::string>());
        if (!e) throw validation_error("observation queue names an unknown event");
        c.queue.push_back({*e, pair.at(1).get<std::uint32_t>()});
    }
    c.losses = doc.at("losses").get<std::uint32_t>();
    return c;
}

json ctrl_config_to_json(const CtrlChannelConfig& c, const Alphabet& a) {
    json queue = json::array();
    for (const auto& e : c.queue) queue.push_back({action_to_json(e.action, a), e.age});
    return {{"active", action_to_json(c.active, a)}, {"queue", queue}, {"losses", c.losses}};
}

CtrlChannelConfig ctrl_config_from_json(const json& doc, const Alphabet& a) {
    reject_unknown_fields(doc, {"active", "queue", "losses"}, "control configuration");
    CtrlChannelConfig c;
    c.active = action_from_json(doc.at("active"), a);
    for (const json& pair : doc.at("queue")) {
        c.queue.push_back({action_from_json(pair.at(0), a), pair.at(1).get<std::uint32_t>()});
    }
    c.losses = doc.at("losses").get<std::uint32_t>();
    return c;
}

json estimate_to_json(const AugmentedEstimate& z, const Automaton& g) {
    json out = json::array();
    for (const AugmentedState& s : z) {
        out.push_back({{"plant", g.state_name(s.plant)},
                       {"obs", obs_config_to_json(s.obs, g.alphabet())},
                       {"ctrl", ctrl_config_to_json(s.ctrl, g.alphabet())}});
    }
    return out;
}

AugmentedEstimate estimate_from_json(const json& doc, const Automaton& g) {
    AugmentedEstimate z;
    for (const json& item : doc) {
        reject_unknown_fields(item, {"plant", "obs", "ctrl"}, "augmented state");
        auto q = g.find_state(item.at("plant").get<std::string>());
        if (!q) throw validation_error("augmented state names an unknown plant state");
        z.push_back({*q, obs_config_from_json(item.at("obs"), g.alphabet()),
                     ctrl_config_from_json(item.at("ctrl"), g.alphabet())});
    }
    return canonicalize(std::move(z));
}

}  // namespace

std::string serialize_ainc(const Ainc& a, const Automaton& g, const DelayBounds& b) {
    json doc;
    doc["kind"] = "ainc";
    doc["bounds"] = {b.n_o, b.n_c, b.n_lo, b.n_lc};
    doc["events"] = events_to_json(g.alphabet());
    doc["y_states"] = json::array();
    for (const AugmentedEstimate& y : a.y_states) doc["y_states"].push_back(estimate_to_json(y, g));
    doc["z_states"] = json::array();
    for (const Nbts::ZState& z : a.z_states) {
        doc["z_states"].push_back({{"info", estimate_to_json(z.info, g)},
                                   {"action", action_to_json(z.action, g.alphabet())}});
    }
    doc["yz"] = json::array();
    for (std::uint32_t y = 0; y < a.y_states.size(); ++y) {
        for (const auto& [pi, z] : a.yz[y]) {
            doc["yz"].push_back({y, action_to_json(pi, g.alphabet()), z});
        }
    }
    doc["zy"] = json::array();
    for (std::uint32_t z = 0; z < a.z_states.size(); ++z) {
        for (const auto& [sigma, y] : a.zy[z]) {
            doc["zy"].push_back({z, g.alphabet().name(sigma), y});
        }
    }
    doc["initial"] = a.initial;
    return doc.dump(2) + "\n";
}

std::pair<Ainc, DelayBounds> parse_ainc(const std::string& text, const Automaton& g) {
    json doc = parse_json(text);
    reject_unknown_fields(doc, {"kind", "bounds", "events", "y_states", "z_states", "yz", "zy", "initial"},
                          "AINC document");
    if (doc.at("kind") != "ainc") throw validation_error("expected kind 'ainc'");
    if (events_from_json(doc.at("events")) != g.alphabet()) {
        throw validation_error("AINC alphabet does not match the plant");
    }
    DelayBounds b{doc.at("bounds").at(0), doc.at("bounds").at(1), doc.at("bounds").at(2),
                  doc.at("bounds").at(3)};
    Ainc a;
    for (const json& y : doc.at("y_states")) {
        a.y_states.push_back(estimate_from_json(y, g));
        a.yz.emplace_back();
    }
    for (const json& z : doc.at("z_states")) {
        reject_unknown_fields(z, {"info", "action"}, "Z-state");
        a.z_states.push_back(
            {estimate_from_json(z.at("info"), g), action_from_json(z.at("action"), g.alphabet())});
        a.zy.emplace_back();
    }
    for (const json& edge : doc.at("yz")) {
        std::uint32_t y = edge.at(0);
        std::uint32_t z = edge.at(2);
        if (y >= a.y_states.size() || z >= a.z_states.size()) {
            throw validation_error("yz edge endpoint out of range");
        }
        a.yz[y].emplace_back(action_from_json(edge.at(1), g.alphabet()), z);
    }
    for (const json& edge : doc.at("zy")) {
        std::uint32_t z = edge.at(0);
        std::uint32_t y = edge.at(2);
        auto sigma = g.alphabet().find(edge.at(1).get<std::string>());
        if (!sigma) throw validation_error("zy edge names an unknown event");
        if (y >= a.y_states.size() || z >= a.z_states.size()) {
            throw validation_error("zy edge endpoint out of range");
        }
        a.zy[z].emplace_back(*sigma, y);
    }
    for (auto& row : a.yz) std::sort(row.begin(), row.end());
    for (auto& row : a.zy) std::sort(row.begin(), row.end());
    a.initial = doc.at("initial");
    if (a.initial >= a.y_states.size()) throw validation_error("initial Y-state out of range");
    return {std::move(a), b};
}

std::pair<Ainc, DelayBounds> load_ainc(const std::string& path, const Automaton& g) {
    return parse_ainc(read_file(path), g);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot open '" + path + "' for writing");
    out << contents;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ControlAction parse_action_spec(const std::string& spec, const Alphabet& a) {
    ControlAction pi{a.uncontrollable_mask()};
    if (spec.empty() || spec == "-") return pi;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        auto e = a.find(token);
        if (!e) throw validation_error("unknown event '" + token + "' in action spec");
        pi.mask |= 1ULL << *e;
    }
    return pi;
}

std::vector<ObsRecord> parse_obs_stream(std::istream& in, const Alphabet& a) {
    std::vector<ObsRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;  // blank line
        if (word[0] == '#') continue;
        if (word != "observe") {
            throw validation_error("line " + std::to_string(lineno) +
                                   ": expected 'observe <event> [issue <actions>]'");
        }
        std::string event_name;
        if (!(ss >> event_name)) {
            throw validation_error("line " + std::to_string(lineno) + ": missing event name");
        }
        auto e = a.find(event_name);
        if (!e || !a.is_observable(*e)) {
            throw validation_error("line " + std::to_string(lineno) + ": '" + event_name +
                                   "' is not an observable event");
        }
        ObsRecord rec{*e, std::nullopt};
        if (ss >> word) {
            if (word != "issue") {
                throw validation_error("line " + std::to_string(lineno) + ": expected 'issue'");
            }
            std::string action_spec;
            ss >> action_spec;
            rec.action = parse_action_spec(action_spec, a);
        }
        records.push_back(rec);
    }
    return records;
}

}  // namespace ncse
