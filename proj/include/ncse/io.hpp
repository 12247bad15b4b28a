#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncse/automata.hpp"
#include "ncse/channels.hpp"
#include "ncse/comm_automaton.hpp"
#include "ncse/synthesis.hpp"

namespace ncse {

// One JSON-based file family for every artifact, distinguished by `kind`
// ("automaton", "supervisor", "comm-automaton", "ainc").  Field names are
// fixed; unknown fields are rejected.

std::string serialize_automaton(const Automaton& a);
Automaton parse_automaton(const std::string& text);
Automaton load_automaton(const std::string& path);

std::string serialize_supervisor(const NetworkedSupervisor& s);
NetworkedSupervisor parse_supervisor(const std::string& text);
NetworkedSupervisor load_supervisor(const std::string& path);

/// G_S rendered in the automaton format with `obs!i` / `dlv!e` / `ctl!i` /
/// `exe!{..}` event names.
std::string serialize_comm_automaton(const CommAutomaton& gs, const Automaton& g,
                                     const NetworkedSupervisor& sup);

std::string serialize_ainc(const Ainc& a, const Automaton& g, const DelayBounds& b);
std::pair<Ainc, DelayBounds> parse_ainc(const std::string& text, const Automaton& g);
std::pair<Ainc, DelayBounds> load_ainc(const std::string& path, const Automaton& g);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

/// One record of the observation stream: `observe <event> [issue <e1,e2,..>]`.
struct ObsRecord {
    EventId event;
    std::optional<ControlAction> action;  // uncontrollables implicitly added
};

std::vector<ObsRecord> parse_obs_stream(std::istream& in, const Alphabet& a);

/// Comma-separated enabled-event list -> admissible action.
ControlAction parse_action_spec(const std::string& spec, const Alphabet& a);

}  // namespace ncse
