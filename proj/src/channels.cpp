#include "ncse/channels.hpp"

#include <sstream>

namespace ncse {

std::uint32_t num_obs(const ObsChannelConfig& c) {
    return c.queue.empty() ? 0 : c.queue.front().age;
}

ObsChannelConfig age_obs(const ObsChannelConfig& c) {
    ObsChannelConfig out = c;
    for (auto& e : out.queue) ++e.age;
    return out;
}

ObsChannelConfig in_obs(const ObsChannelConfig& c, EventId sigma, const Alphabet& a) {
    if (sigma >= a.size()) throw validation_error("in_obs: unknown event");
    ObsChannelConfig out = age_obs(c);
    if (a.is_observable(sigma)) out.queue.push_back({sigma, 0});
    return out;
}

std::pair<EventId, ObsChannelConfig> out_obs(const ObsChannelConfig& c) {
    if (c.queue.empty()) throw empty_channel_error("out_obs on an empty observation channel");
    ObsChannelConfig out;
    out.queue.assign(c.queue.begin() + 1, c.queue.end());
    out.losses = 0;
    return {c.queue.front().event, out};
}

ObsChannelConfig loss_obs(const ObsChannelConfig& c, std::uint32_t i, const DelayBounds& b) {
    if (c.queue.empty()) throw empty_channel_error("loss_obs on an empty observation channel");
    if (i < 1 || i > c.queue.size()) throw loss_error("loss_obs index out of range");
    if (c.losses + 1 > b.n_lo) throw loss_error("observation loss budget exceeded");
    ObsChannelConfig out = c;
    out.queue.erase(out.queue.begin() + (i - 1));
    out.losses = c.losses + 1;
    return out;
}

std::uint32_t num_ctrl(const CtrlChannelConfig& c) {
    return c.queue.empty() ? 0 : c.queue.front().age;
}

CtrlChannelConfig plus_ctrl(const CtrlChannelConfig& c) {
    CtrlChannelConfig out = c;
    for (auto& e : out.queue) ++e.age;
    return out;
}

CtrlChannelConfig in_ctrl(const CtrlChannelConfig& c, const ControlAction& pi, const Alphabet& a) {
    if (!pi.is_admissible(a)) {
        throw validation_error("in_ctrl: action is not admissible");
    }
    CtrlChannelConfig out = c;
    out.queue.push_back({pi, 0});
    return out;
}

CtrlChannelConfig out_ctrl(const CtrlChannelConfig& c) {
    if (c.queue.empty()) throw empty_channel_error("out_ctrl on an empty control channel");
    CtrlChannelConfig out;
    out.active = c.queue.front().action;
    out.queue.assign(c.queue.begin() + 1, c.queue.end());
    out.losses = 0;
    return out;
}

CtrlChannelConfig loss_ctrl(const CtrlChannelConfig& c, std::uint32_t i, const DelayBounds& b) {
    if (c.queue.empty()) throw empty_channel_error("loss_ctrl on an empty control channel");
    if (i < 1 || i > c.queue.size()) throw loss_error("loss_ctrl index out of range");
    if (c.losses + 1 > b.n_lc) throw loss_error("control loss budget exceeded");
    CtrlChannelConfig out = c;
    out.queue.erase(out.queue.begin() + (i - 1));
    out.losses = c.losses + 1;
    return out;
}

std::string render_obs_config(const ObsChannelConfig& c, const Alphabet& a) {
    std::ostringstream out;
    out << "([";
    for (std::size_t i = 0; i < c.queue.size(); ++i) {
        if (i) out << ',';
        out << '(' << a.name(c.queue[i].event) << ',' << c.queue[i].age << ')';
    }
    out << "], n=" << c.losses << ')';
    return out.str();
}

std::string render_ctrl_config(const CtrlChannelConfig& c, const Alphabet& a) {
    std::ostringstream out;
    out << '(' << render_action(c.active, a) << ", [";
    for (std::size_t i = 0; i < c.queue.size(); ++i) {
        if (i) out << ',';
        out << '(' << render_action(c.queue[i].action, a) << ',' << c.queue[i].age << ')';
    }
    out << "], m=" << c.losses << ')';
    return out.str();
}

}  // namespace ncse
