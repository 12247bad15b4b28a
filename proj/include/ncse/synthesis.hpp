#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncse/comm_automaton.hpp"
#include "ncse/estimator.hpp"

namespace ncse {

/// Safe plant states Q_H, given directly or as a subautomaton H of G.
struct SafetySpec {
    std::vector<char> safe;  // indexed by plant state

    static SafetySpec from_states(const Automaton& g, const std::vector<StateId>& safe_states);
    static SafetySpec from_subautomaton(const Automaton& h, const Automaton& g);

    bool is_safe(StateId q) const { return safe.at(q) != 0; }
};

/// phi_safe: the estimate is contained in Q_H.
bool phi_safe(const std::vector<StateId>& z, const SafetySpec& spec);

/// Networked bipartite transition system.  Y-states are post-observation
/// estimates (the initial one is empty); Z-states pair the post-action
/// estimate I(z) with the action Pi(z) that produced it.
struct Nbts {
    struct ZState {
        AugmentedEstimate info;
        ControlAction action;
        auto operator<=>(const ZState&) const = default;
    };

    std::vector<AugmentedEstimate> y_states;
    std::vector<ZState> z_states;
    std::vector<std::vector<std::pair<ControlAction, std::uint32_t>>> yz;  // per Y-state, sorted
    std::vector<std::vector<std::pair<EventId, std::uint32_t>>> zy;        // per Z-state, sorted
    std::uint32_t initial = 0;

    std::size_t size() const { return y_states.size() + z_states.size(); }
    std::optional<std::uint32_t> yz_next(std::uint32_t y, const ControlAction& pi) const;
    std::optional<std::uint32_t> zy_next(std::uint32_t z, EventId sigma) const;
};

/// The pruned safe game graph; structurally an Nbts.
using Ainc = Nbts;

/// All admissible actions: supersets of the uncontrollables, restricted to
/// `restricted` when given.  Canonical ascending-bitmask order.
std::vector<ControlAction> admissible_actions(
    const Alphabet& a, const std::optional<std::vector<ControlAction>>& restricted = std::nullopt);

/// BFS from y0 = empty estimate, branching on every admissible action at
/// Y-states and on every queued head event at Z-states.
Nbts build_nbts(const Automaton& g, const DelayBounds& b,
                const std::optional<std::vector<ControlAction>>& actions = std::nullopt,
                std::uint64_t state_budget = kDefaultStateBudget, Exec exec = Exec::Parallel);

/// Pruning: delete unsafe Z-states, then alternate completeness pruning
/// and accessible-part trimming until fixpoint.  Empty optional when the
/// initial Y-state dies (no safe supervisor exists).
std::optional<Ainc> prune_ainc(const Nbts& t, const SafetySpec& spec);

/// Action-selection policy for supervisor extraction.
struct ExtractionPolicy {
    enum class Kind { GreedyMax, Min, Fixed };
    Kind kind = Kind::GreedyMax;
    ControlAction fixed;  // only for Kind::Fixed
};

/// Decode a supervisor from a non-empty AINC: realization states are the
/// Z-states visited under the policy plus a special sink for uncovered
/// observations.
NetworkedSupervisor extract_supervisor(const Ainc& a, const Automaton& g,
                                       const ExtractionPolicy& policy);

struct VerifyResult {
    bool safe = true;
    std::vector<CommEvent> witness;      // minimal-length unsafe run of G_S
    std::vector<EventId> witness_plant;  // psi(witness)
};

/// Exhaustive reachability over G_S: every reachable plant component in Q_H.
VerifyResult verify_networked_safety(const Automaton& g, const NetworkedSupervisor& sup,
                                     const SafetySpec& spec, const DelayBounds& b,
                                     std::uint64_t state_budget = kDefaultStateBudget);

}  // namespace ncse
