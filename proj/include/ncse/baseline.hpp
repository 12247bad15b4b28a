#pragma once

#include <vector>

#include "ncse/automata.hpp"

namespace ncse {

/// Extended state of the prior control-delay-only framework: the plant
/// state plus the actions issued in the past N_c steps.  `window[i]` is
/// S(P(s_{-i})) for i in [0, N_c]; `sup` tracks xi(x0, P(s)) so the window
/// can be shifted on each event.
struct ExtendedState {
    StateId plant = 0;
    StateId sup = 0;
    std::vector<ControlAction> window;

    auto operator<=>(const ExtendedState&) const = default;
};

/// s in L_a(S/G)?  Only valid in the control-delay-only setting
/// (n_o = n_lo = n_lc = 0); s_{-i} is s truncated by its last min(i,|s|)
/// events.
bool la_member(const Automaton& g, const NetworkedSupervisor& sup, std::uint32_t n_c,
               const std::vector<EventId>& s);

/// { delta(q0, s) : s in L_a(S/G), P(s) = t }, by forward search over
/// extended states.
std::vector<StateId> baseline_estimate(const Automaton& g, const NetworkedSupervisor& sup,
                                       std::uint32_t n_c, const std::vector<EventId>& t,
                                       std::uint64_t state_budget = 10'000'000);

}  // namespace ncse
