#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ncse/automata.hpp"
#include "ncse/errors.hpp"

namespace ncse {

/// Delay/loss bounds.  Delays are counted in plant event occurrences.
struct DelayBounds {
    std::uint32_t n_o = 0;   // max observation delay
    std::uint32_t n_c = 0;   // max control delay
    std::uint32_t n_lo = 0;  // max consecutive observation losses
    std::uint32_t n_lc = 0;  // max consecutive control losses

    std::uint32_t n() const { return n_c + n_o; }

    auto operator<=>(const DelayBounds&) const = default;
};

/// Observation channel configuration theta_o = (x, n): the FIFO of
/// not-yet-delivered observable events with their ages, plus the
/// consecutive-loss counter.
struct ObsChannelConfig {
    struct Entry {
        EventId event;
        std::uint32_t age;
        auto operator<=>(const Entry&) const = default;
    };

    std::vector<Entry> queue;
    std::uint32_t losses = 0;

    auto operator<=>(const ObsChannelConfig&) const = default;
};

/// Control channel configuration theta_c = (phi, y, m): the action in use,
/// the FIFO of issued-but-unexecuted actions with their ages, and the
/// consecutive-loss counter.
struct CtrlChannelConfig {
    struct Entry {
        ControlAction action;
        std::uint32_t age;
        auto operator<=>(const Entry&) const = default;
    };

    ControlAction active;
    std::vector<Entry> queue;
    std::uint32_t losses = 0;

    auto operator<=>(const CtrlChannelConfig&) const = default;
};

// -- observation channel operators --------------------------------------

/// NUM: age of the first queued pair (0 for the empty queue).
std::uint32_t num_obs(const ObsChannelConfig& c);

/// x+: every age incremented.  May exceed the n_o bound transiently;
/// callers guard with num_obs before committing.
ObsChannelConfig age_obs(const ObsChannelConfig& c);

/// IN^obs: an event occurred.  Ages the queue; appends (sigma, 0) when
/// sigma is observable.
ObsChannelConfig in_obs(const ObsChannelConfig& c, EventId sigma, const Alphabet& a);

/// OUT^obs: head event delivered.  Returns it; losses reset to 0.
std::pair<EventId, ObsChannelConfig> out_obs(const ObsChannelConfig& c);

/// LOSS^obs: the i-th queued event (1-based, matching o(i)) is lost.
ObsChannelConfig loss_obs(const ObsChannelConfig& c, std::uint32_t i, const DelayBounds& b);

// -- control channel operators -------------------------------------------

std::uint32_t num_ctrl(const CtrlChannelConfig& c);

/// PLUS / y+: every queued age incremented; guard with num_ctrl.
CtrlChannelConfig plus_ctrl(const CtrlChannelConfig& c);

/// IN^ctr: a new action is issued; (pi, 0) appended.
CtrlChannelConfig in_ctrl(const CtrlChannelConfig& c, const ControlAction& pi, const Alphabet& a);

/// OUT^ctr: head action executed; becomes active; losses reset to 0.
CtrlChannelConfig out_ctrl(const CtrlChannelConfig& c);

/// LOSS^ctr: the i-th queued action (1-based, matching c(i)) is lost.
CtrlChannelConfig loss_ctrl(const CtrlChannelConfig& c, std::uint32_t i, const DelayBounds& b);

// -- canonical rendering ---------------------------------------------------
// theta_o renders as `([(alpha,0),(beta,1)], n=0)`,
// theta_c as `(pi{alpha,lambda}, [(pi{beta},1)], m=0)`.

std::string render_obs_config(const ObsChannelConfig& c, const Alphabet& a);
std::string render_ctrl_config(const CtrlChannelConfig& c, const Alphabet& a);

}  // namespace ncse

template <>
struct std::hash<ncse::ObsChannelConfig> {
    std::size_t operator()(const ncse::ObsChannelConfig& c) const noexcept {
        std::size_t h = c.losses;
        for (const auto& e : c.queue) {
            ncse::hash_mix(h, (static_cast<std::size_t>(e.event) << 8) | e.age);
        }
        return h;
    }
};

template <>
struct std::hash<ncse::CtrlChannelConfig> {
    std::size_t operator()(const ncse::CtrlChannelConfig& c) const noexcept {
        std::size_t h = c.losses;
        ncse::hash_mix(h, std::hash<std::uint64_t>{}(c.active.mask));
        for (const auto& e : c.queue) {
            ncse::hash_mix(h, std::hash<std::uint64_t>{}(e.action.mask) + e.age);
        }
        return h;
    }
};
