#include "ncse/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace ncse {

namespace {

const char* kReservedPrefixes[] = {"obs!", "ctl!", "dlv!", "exe!"};

bool has_reserved_prefix(const std::string& name) {
    for (const char* p : kReservedPrefixes) {
        if (name.rfind(p, 0) == 0) return true;
    }
    return false;
}

}  // namespace

EventId Alphabet::add_event(const std::string& name, bool controllable, bool observable) {
    if (name.empty()) throw validation_error("event name must be non-empty");
    if (name.find_first_of(" \t\r\n") != std::string::npos) {
        throw validation_error("event name '" + name + "' contains whitespace");
    }
    if (has_reserved_prefix(name)) {
        throw validation_error("event name '" + name + "' uses a reserved prefix");
    }
    if (index_.count(name)) throw validation_error("duplicate event '" + name + "'");
    if (names_.size() >= 64) throw validation_error("alphabets are limited to 64 events");
    EventId id = static_cast<EventId>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    if (controllable) controllable_ |= 1ULL << id;
    if (observable) observable_ |= 1ULL << id;
    return id;
}

std::optional<EventId> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string render_action(const ControlAction& pi, const Alphabet& a) {
    std::ostringstream out;
    out << "pi{";
    bool first = true;
    for (EventId e = 0; e < a.size(); ++e) {
        if (!pi.enables(e)) continue;
        if (!first) out << ',';
        out << a.name(e);
        first = false;
    }
    out << '}';
    return out.str();
}

Automaton::Automaton(Alphabet alphabet, std::vector<std::string> state_names, StateId initial)
    : alphabet_(std::move(alphabet)) {
    for (const auto& n : state_names) add_state(n);
    set_initial(initial);
}

StateId Automaton::add_state(const std::string& name) {
    if (state_index_.count(name)) throw validation_error("duplicate state '" + name + "'");
    StateId id = static_cast<StateId>(state_names_.size());
    state_names_.push_back(name);
    state_index_.emplace(name, id);
    transitions_.emplace_back();
    return id;
}

void Automaton::set_initial(StateId q) {
    if (q >= num_states()) throw validation_error("initial state out of range");
    initial_ = q;
}

void Automaton::add_transition(StateId from, EventId event, StateId to) {
    if (from >= num_states() || to >= num_states()) {
        throw validation_error("transition endpoint out of range");
    }
    if (event >= alphabet_.size()) throw validation_error("transition event out of range");
    auto& row = transitions_[from];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(event, StateId{0}),
                               [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    if (it != row.end() && it->first == event) {
        throw validation_error("nondeterministic transition on '" + alphabet_.name(event) +
                               "' from '" + state_name(from) + "'");
    }
    row.insert(it, {event, to});
}

std::optional<StateId> Automaton::find_state(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<StateId> Automaton::next(StateId q, EventId e) const {
    const auto& row = transitions_.at(q);
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(e, StateId{0}),
                               [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    if (it == row.end() || it->first != e) return std::nullopt;
    return it->second;
}

std::optional<StateId> Automaton::run(StateId q, const std::vector<EventId>& s) const {
    for (EventId e : s) {
        auto n = next(q, e);
        if (!n) return std::nullopt;
        q = *n;
    }
    return q;
}

StateId NetworkedSupervisor::step(StateId p, EventId sigma) const {
    auto n = realization.next(p, sigma);
    if (n) return *n;
    if (special_state) return *special_state;
    throw validation_error("supervisor realization undefined on '" +
                           realization.alphabet().name(sigma) + "' at state '" +
                           realization.state_name(p) + "' and no special state is set");
}

StateId NetworkedSupervisor::state_after(const std::vector<EventId>& t) const {
    StateId p = realization.initial();
    for (EventId sigma : t) p = step(p, sigma);
    return p;
}

void NetworkedSupervisor::validate() const {
    const Alphabet& a = realization.alphabet();
    if (gamma.size() != realization.num_states()) {
        throw validation_error("gamma must cover every realization state");
    }
    for (StateId p = 0; p < realization.num_states(); ++p) {
        if (!gamma[p].is_admissible(a)) {
            throw validation_error("gamma at state '" + realization.state_name(p) +
                                   "' is not admissible (misses an uncontrollable event)");
        }
        for (const auto& [e, to] : realization.out(p)) {
            if (!a.is_observable(e)) {
                throw validation_error("realization transition on unobservable event '" +
                                       a.name(e) + "'");
            }
            (void)to;
        }
        if (!special_state) {
            // Without a special sink the realization must be complete over
            // the observables.
            for (EventId e = 0; e < a.size(); ++e) {
                if (a.is_observable(e) && !realization.defined(p, e)) {
                    throw validation_error("realization is incomplete: no transition on '" +
                                           a.name(e) + "' at '" + realization.state_name(p) + "'");
                }
            }
        }
    }
    if (special_state) {
        if (*special_state >= realization.num_states()) {
            throw validation_error("special state out of range");
        }
        if (gamma[*special_state].mask != a.uncontrollable_mask()) {
            throw validation_error("gamma at the special state must enable exactly the "
                                   "uncontrollable events");
        }
    }
}

std::vector<EventId> natural_projection(const std::vector<EventId>& s, const Alphabet& a) {
    std::vector<EventId> out;
    out.reserve(s.size());
    for (EventId e : s) {
        if (e >= a.size()) throw validation_error("unknown event in projection input");
        if (a.is_observable(e)) out.push_back(e);
    }
    return out;
}

Automaton accessible_part(const Automaton& a) {
    std::vector<char> seen(a.num_states(), 0);
    std::deque<StateId> frontier{a.initial()};
    seen[a.initial()] = 1;
    while (!frontier.empty()) {
        StateId q = frontier.front();
        frontier.pop_front();
        for (const auto& [e, to] : a.out(q)) {
            (void)e;
            if (!seen[to]) {
                seen[to] = 1;
                frontier.push_back(to);
            }
        }
    }
    Automaton result;
    result.alphabet() = a.alphabet();
    std::vector<StateId> remap(a.num_states(), kNoState);
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (seen[q]) remap[q] = result.add_state(a.state_name(q));
    }
    result.set_initial(remap[a.initial()]);
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (!seen[q]) continue;
        for (const auto& [e, to] : a.out(q)) result.add_transition(remap[q], e, remap[to]);
    }
    return result;
}

namespace {

std::vector<StateId> invisible_closure(const Automaton& a, std::vector<StateId> seed,
                                       std::uint64_t visible) {
    std::set<StateId> members(seed.begin(), seed.end());
    std::deque<StateId> frontier(seed.begin(), seed.end());
    while (!frontier.empty()) {
        StateId q = frontier.front();
        frontier.pop_front();
        for (const auto& [e, to] : a.out(q)) {
            if ((visible >> e) & 1u) continue;
            if (members.insert(to).second) frontier.push_back(to);
        }
    }
    return {members.begin(), members.end()};
}

std::string observer_state_name(const Automaton& a, const std::vector<StateId>& members) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out << ',';
        out << a.state_name(members[i]);
    }
    out << '}';
    return out.str();
}

}  // namespace

Automaton observer(const Automaton& a, std::uint64_t visible) {
    Automaton result;
    result.alphabet() = a.alphabet();

    std::map<std::vector<StateId>, StateId> index;
    std::vector<std::vector<StateId>> states;
    std::deque<StateId> work;

    auto intern = [&](std::vector<StateId> members) {
        auto [it, inserted] = index.emplace(std::move(members), static_cast<StateId>(states.size()));
        if (inserted) {
            states.push_back(it->first);
            result.add_state(observer_state_name(a, it->first));
            work.push_back(it->second);
        }
        return it->second;
    };

    intern(invisible_closure(a, {a.initial()}, visible));
    result.set_initial(0);

    while (!work.empty()) {
        StateId s = work.front();
        work.pop_front();
        std::vector<StateId> members = states[s];  // copy: states may reallocate
        std::map<EventId, std::set<StateId>> moves;
        for (StateId q : members) {
            for (const auto& [e, to] : a.out(q)) {
                if ((visible >> e) & 1u) moves[e].insert(to);
            }
        }
        for (const auto& [e, targets] : moves) {
            StateId t = intern(invisible_closure(a, {targets.begin(), targets.end()}, visible));
            result.add_transition(s, e, t);
        }
    }
    return result;
}

std::optional<std::vector<StateId>> observer_reach(const Automaton& a, std::uint64_t visible,
                                                   const std::vector<EventId>& t) {
    std::vector<StateId> current = invisible_closure(a, {a.initial()}, visible);
    for (EventId e : t) {
        std::set<StateId> targets;
        for (StateId q : current) {
            if (auto n = a.next(q, e)) targets.insert(*n);
        }
        if (targets.empty()) return std::nullopt;
        current = invisible_closure(a, {targets.begin(), targets.end()}, visible);
    }
    return current;
}

bool is_subautomaton(const Automaton& h, const Automaton& g) {
    if (h.alphabet() != g.alphabet()) return false;
    if (h.state_name(h.initial()) != g.state_name(g.initial())) return false;
    for (StateId q = 0; q < h.num_states(); ++q) {
        auto gq = g.find_state(h.state_name(q));
        if (!gq) return false;
        for (const auto& [e, to] : h.out(q)) {
            auto gt = g.next(*gq, e);
            if (!gt || g.state_name(*gt) != h.state_name(to)) return false;
        }
    }
    return true;
}

ControlAction supervisor_decision(const NetworkedSupervisor& s, const std::vector<EventId>& t) {
    const Alphabet& a = s.realization.alphabet();
    for (EventId e : t) {
        if (e >= a.size() || !a.is_observable(e)) {
            throw validation_error("supervisor_decision: input contains a non-observable event");
        }
    }
    return s.decision_at(s.state_after(t));
}

}  // namespace ncse
