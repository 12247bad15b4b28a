#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncse/automata.hpp"
#include "ncse/channels.hpp"
#include "ncse/exec.hpp"

namespace ncse {

/// Event of the communication automaton: a plant event or one of the four
/// special kinds (observation loss o(i), delivery f(sigma), control loss
/// c(i), execution g(pi)).
struct CommEvent {
    enum class Kind : std::uint8_t { Plant, ObsLoss, Deliver, CtrlLoss, Execute };

    Kind kind = Kind::Plant;
    std::uint64_t payload = 0;  // EventId, 1-based index, or action mask

    static CommEvent plant(EventId e) { return {Kind::Plant, e}; }
    static CommEvent obs_loss(std::uint32_t i) { return {Kind::ObsLoss, i}; }
    static CommEvent deliver(EventId e) { return {Kind::Deliver, e}; }
    static CommEvent ctrl_loss(std::uint32_t i) { return {Kind::CtrlLoss, i}; }
    static CommEvent execute(ControlAction pi) { return {Kind::Execute, pi.mask}; }

    EventId event() const { return static_cast<EventId>(payload); }
    std::uint32_t index() const { return static_cast<std::uint32_t>(payload); }
    ControlAction action() const { return ControlAction{payload}; }

    auto operator<=>(const CommEvent&) const = default;
};

/// Rendered name: `alpha`, `obs!1`, `dlv!alpha`, `ctl!2`, `exe!{beta}`.
std::string render_comm_event(const CommEvent& e, const Alphabet& a);

/// The seven-tuple (q, x, n, phi, y, m, p).  Channel configurations bundle
/// (x, n) and (phi, y, m).
struct CommState {
    StateId plant = 0;
    ObsChannelConfig obs;
    CtrlChannelConfig ctrl;
    StateId sup = 0;

    auto operator<=>(const CommState&) const = default;
};

std::string render_comm_state(const CommState& s, const Automaton& g,
                              const NetworkedSupervisor& sup);

/// Communication automaton G_S.  States are interned to dense indices in
/// canonical (structural ascending) order; per-state transition lists are
/// sorted by event.
struct CommAutomaton {
    std::vector<CommState> states;
    std::vector<std::vector<std::pair<CommEvent, std::uint32_t>>> transitions;
    std::uint32_t initial = 0;

    std::size_t num_states() const { return states.size(); }
    std::optional<std::uint32_t> next(std::uint32_t s, const CommEvent& e) const;
    std::optional<std::uint32_t> find(const CommState& s) const;
};

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

/// Single transition step of G_S; empty when the guard fails.
std::optional<CommState> comm_step(const CommState& s, const CommEvent& e, const Automaton& g,
                                   const NetworkedSupervisor& sup, const DelayBounds& b);

/// All events defined at s, in canonical order.
std::vector<CommEvent> comm_enabled(const CommState& s, const Automaton& g,
                                    const NetworkedSupervisor& sup, const DelayBounds& b);

/// Breadth-first closure from the initial seven-tuple.
CommAutomaton build_gs(const Automaton& g, const NetworkedSupervisor& sup, const DelayBounds& b,
                       std::uint64_t state_budget = kDefaultStateBudget,
                       Exec exec = Exec::Parallel);

/// psi: keep only plant events.
std::vector<EventId> psi(const std::vector<CommEvent>& mu);

/// f^-1 . psi^f: keep only delivered events (what the supervisor observes).
std::vector<EventId> psi_f_inv(const std::vector<CommEvent>& mu);

/// NSE oracle (observer of G_S over the delivery events, then plant
/// projection).  Empty optional when t is not observable under S at all;
/// otherwise the sorted set of consistent plant states.
std::optional<std::vector<StateId>> oracle_nse(const CommAutomaton& gs,
                                               const std::vector<EventId>& t);

/// s in L(S/G) = psi(L(G_S))?
bool language_member(const CommAutomaton& gs, const std::vector<EventId>& s);

/// Seeded uniform random walk over defined transitions; stops at deadlock.
std::vector<std::pair<CommEvent, std::uint32_t>> random_run(const CommAutomaton& gs,
                                                            std::size_t steps,
                                                            std::uint64_t seed);

}  // namespace ncse

template <>
struct std::hash<ncse::CommState> {
    std::size_t operator()(const ncse::CommState& s) const noexcept {
        std::size_t h = std::hash<ncse::ObsChannelConfig>{}(s.obs);
        ncse::hash_mix(h, std::hash<ncse::CtrlChannelConfig>{}(s.ctrl));
        ncse::hash_mix(h, (static_cast<std::size_t>(s.plant) << 20) | s.sup);
        return h;
    }
};
