#pragma once

#include <string>
#include <vector>

#include "ncse/automata.hpp"
#include "ncse/channels.hpp"
#include "ncse/exec.hpp"

namespace ncse {

/// Augmented state (q, theta_o, theta_c).
struct AugmentedState {
    StateId plant = 0;
    ObsChannelConfig obs;
    CtrlChannelConfig ctrl;

    auto operator<=>(const AugmentedState&) const = default;
};

std::string render_augmented_state(const AugmentedState& s, const Automaton& g);

/// Canonical (sorted, deduplicated) set of augmented states.
using AugmentedEstimate = std::vector<AugmentedState>;

AugmentedEstimate canonicalize(AugmentedEstimate z);

/// Delayed unobservable reach: issue pi (or seed the initial augmented
/// state when z is empty), then close under plant occurrences, executions,
/// and losses until fixpoint.
AugmentedEstimate dur(const AugmentedEstimate& z, const ControlAction& pi, const Automaton& plant,
                      const DelayBounds& b, Exec exec = Exec::Parallel);

/// Delayed observable reach: members whose observation queue heads sigma,
/// with the head popped.  Control configurations untouched.
AugmentedEstimate dor(const AugmentedEstimate& z, EventId sigma, const Alphabet& a);

/// Plant-state projection FC.
std::vector<StateId> fc(const AugmentedEstimate& z);

/// Online estimation session: alternates DOR (on each delivered event) and
/// DUR (on each issued action).  Single-owner, sequential.
class EstimatorSession {
public:
    EstimatorSession(const Automaton& plant, const DelayBounds& b, const ControlAction& pi0);

    /// A new observation sigma was delivered and action pi issued in response.
    /// Throws inconsistent_observation_error when no member can explain sigma.
    void observe(EventId sigma, const ControlAction& pi);

    const AugmentedEstimate& current() const { return current_; }
    std::vector<StateId> plant_estimate() const { return fc(current_); }
    const std::vector<std::pair<EventId, ControlAction>>& history() const { return history_; }
    const Automaton& plant() const { return plant_; }
    const DelayBounds& bounds() const { return bounds_; }

private:
    Automaton plant_;
    DelayBounds bounds_;
    AugmentedEstimate current_;
    std::vector<std::pair<EventId, ControlAction>> history_;
};

}  // namespace ncse

template <>
struct std::hash<ncse::AugmentedState> {
    std::size_t operator()(const ncse::AugmentedState& s) const noexcept {
        std::size_t h = std::hash<ncse::ObsChannelConfig>{}(s.obs);
        ncse::hash_mix(h, std::hash<ncse::CtrlChannelConfig>{}(s.ctrl));
        ncse::hash_mix(h, s.plant);
        return h;
    }
};
