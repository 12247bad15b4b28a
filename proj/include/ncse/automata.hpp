#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncse/errors.hpp"

namespace ncse {

using StateId = std::uint32_t;
using EventId = std::uint32_t;

inline constexpr StateId kNoState = static_cast<StateId>(-1);

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

/// Event alphabet with controllability/observability partitions.
/// Events are interned: an EventId is an index into `names`.
/// At most 64 events so control actions fit in one bitmask.
class Alphabet {
public:
    Alphabet() = default;

    EventId add_event(const std::string& name, bool controllable, bool observable);

    std::size_t size() const { return names_.size(); }
    const std::string& name(EventId e) const { return names_.at(e); }
    std::optional<EventId> find(const std::string& name) const;

    bool is_controllable(EventId e) const { return (controllable_ >> e) & 1u; }
    bool is_observable(EventId e) const { return (observable_ >> e) & 1u; }

    std::uint64_t all_mask() const {
        return size() == 64 ? ~0ULL : (1ULL << size()) - 1;
    }
    std::uint64_t controllable_mask() const { return controllable_; }
    std::uint64_t observable_mask() const { return observable_; }
    std::uint64_t uncontrollable_mask() const { return all_mask() & ~controllable_; }
    std::uint64_t unobservable_mask() const { return all_mask() & ~observable_; }

    bool operator==(const Alphabet& other) const = default;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, EventId> index_;
    std::uint64_t controllable_ = 0;
    std::uint64_t observable_ = 0;
};

/// An admissible control action is a set of enabled events containing
/// every uncontrollable event.  Stored as a bitmask over the alphabet,
/// which doubles as the action's interning key.
struct ControlAction {
    std::uint64_t mask = 0;

    bool enables(EventId e) const { return (mask >> e) & 1u; }
    bool is_admissible(const Alphabet& a) const {
        return (mask & a.uncontrollable_mask()) == a.uncontrollable_mask() &&
               (mask & ~a.all_mask()) == 0;
    }
    bool subset_of(const ControlAction& other) const {
        return (mask & other.mask) == mask;
    }

    auto operator<=>(const ControlAction&) const = default;
};

std::string render_action(const ControlAction& pi, const Alphabet& a);

/// Deterministic finite automaton G = (Q, Sigma, delta, q0).
/// Transitions are kept sorted by event per state.
class Automaton {
public:
    Automaton() = default;
    Automaton(Alphabet alphabet, std::vector<std::string> state_names, StateId initial);

    StateId add_state(const std::string& name);
    void add_transition(StateId from, EventId event, StateId to);

    std::size_t num_states() const { return state_names_.size(); }
    const std::string& state_name(StateId q) const { return state_names_.at(q); }
    std::optional<StateId> find_state(const std::string& name) const;
    StateId initial() const { return initial_; }
    void set_initial(StateId q);

    const Alphabet& alphabet() const { return alphabet_; }
    Alphabet& alphabet() { return alphabet_; }

    std::optional<StateId> next(StateId q, EventId e) const;
    bool defined(StateId q, EventId e) const { return next(q, e).has_value(); }

    /// Sorted (event, target) pairs leaving q.
    const std::vector<std::pair<EventId, StateId>>& out(StateId q) const {
        return transitions_.at(q);
    }

    std::optional<StateId> run(StateId q, const std::vector<EventId>& s) const;

    bool operator==(const Automaton& other) const = default;

private:
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<std::vector<std::pair<EventId, StateId>>> transitions_;
    StateId initial_ = 0;
};

/// Networked supervisor S = (A, gamma): a realization automaton over the
/// observable events plus a decision map.  The realization may be partial;
/// undefined observations route to `special_state` (decision = uncontrollables).
struct NetworkedSupervisor {
    Automaton realization;
    std::vector<ControlAction> gamma;  // indexed by realization state
    std::optional<StateId> special_state;

    /// Realization state reached by observable string t.
    StateId state_after(const std::vector<EventId>& t) const;
    StateId step(StateId p, EventId sigma) const;
    ControlAction decision_at(StateId p) const { return gamma.at(p); }

    void validate() const;
};

// -- operations --------------------------------------------------------

/// Natural projection: erase events outside the observable set.
std::vector<EventId> natural_projection(const std::vector<EventId>& s, const Alphabet& a);

/// Sub-automaton of states reachable from the initial state.
Automaton accessible_part(const Automaton& a);

/// Subset-construction observer over `visible` (bitmask of EventIds).
/// Observer state names are the canonically sorted member lists.
Automaton observer(const Automaton& a, std::uint64_t visible);

/// Members of the observer state reached by t, as indices into a's states.
/// Empty optional when t is not in the observer's language.
std::optional<std::vector<StateId>> observer_reach(const Automaton& a, std::uint64_t visible,
                                                   const std::vector<EventId>& t);

/// H is a subautomaton of G: same alphabet, same initial, states and
/// transitions contained (matched by state name).
bool is_subautomaton(const Automaton& h, const Automaton& g);

/// gamma at the realization state reached by observable string t.
ControlAction supervisor_decision(const NetworkedSupervisor& s, const std::vector<EventId>& t);

}  // namespace ncse

template <>
struct std::hash<ncse::ControlAction> {
    std::size_t operator()(const ncse::ControlAction& a) const noexcept {
        return std::hash<std::uint64_t>{}(a.mask);
    }
};
