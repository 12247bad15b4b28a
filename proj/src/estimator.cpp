#include "ncse/estimator.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace ncse {

std::string render_augmented_state(const AugmentedState& s, const Automaton& g) {
    std::ostringstream out;
    out << '(' << g.state_name(s.plant) << ", " << render_obs_config(s.obs, g.alphabet()) << ", "
        << render_ctrl_config(s.ctrl, g.alphabet()) << ')';
    return out.str();
}

AugmentedEstimate canonicalize(AugmentedEstimate z) {
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    return z;
}

namespace {

/// One application of the four unobservable-reach generators to a single
/// augmented state.
std::vector<AugmentedState> dur_successors(const AugmentedState& s, const Automaton& plant,
                                           const DelayBounds& b) {
    std::vector<AugmentedState> out;
    const Alphabet& a = plant.alphabet();
    // event occurrence
    for (const auto& [sigma, q] : plant.out(s.plant)) {
        if (!s.ctrl.active.enables(sigma)) continue;
        if (num_obs(age_obs(s.obs)) > b.n_o) continue;
        if (num_ctrl(plus_ctrl(s.ctrl)) > b.n_c) continue;
        out.push_back({q, in_obs(s.obs, sigma, a), plus_ctrl(s.ctrl)});
    }
    // control execution
    if (!s.ctrl.queue.empty()) out.push_back({s.plant, s.obs, out_ctrl(s.ctrl)});
    // observation losses
    if (!s.obs.queue.empty() && s.obs.losses + 1 <= b.n_lo) {
        for (std::uint32_t i = 1; i <= s.obs.queue.size(); ++i) {
            out.push_back({s.plant, loss_obs(s.obs, i, b), s.ctrl});
        }
    }
    // control losses
    if (!s.ctrl.queue.empty() && s.ctrl.losses + 1 <= b.n_lc) {
        for (std::uint32_t i = 1; i <= s.ctrl.queue.size(); ++i) {
            out.push_back({s.plant, s.obs, loss_ctrl(s.ctrl, i, b)});
        }
    }
    return out;
}

}  // namespace

AugmentedEstimate dur(const AugmentedEstimate& z, const ControlAction& pi, const Automaton& plant,
                      const DelayBounds& b, Exec exec) {
    const Alphabet& a = plant.alphabet();
    if (!pi.is_admissible(a)) throw validation_error("dur: action is not admissible");

    std::unordered_set<AugmentedState> members;
    std::vector<AugmentedState> frontier;
    auto add = [&](AugmentedState s) {
        if (members.insert(s).second) frontier.push_back(std::move(s));
    };

    if (z.empty()) {
        AugmentedState seed;
        seed.plant = plant.initial();
        seed.ctrl.active = pi;
        add(seed);
    } else {
        for (const AugmentedState& s : z) add({s.plant, s.obs, in_ctrl(s.ctrl, pi, a)});
    }

    while (!frontier.empty()) {
        std::vector<std::vector<AugmentedState>> batches(frontier.size());
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 32)
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                batches[i] = dur_successors(frontier[i], plant, b);
            }
        } else {
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                batches[i] = dur_successors(frontier[i], plant, b);
            }
        }
        std::vector<AugmentedState> next;
        frontier.clear();
        for (auto& batch : batches) {
            for (auto& s : batch) {
                if (members.insert(s).second) next.push_back(std::move(s));
            }
        }
        frontier = std::move(next);
    }
    return canonicalize({members.begin(), members.end()});
}

AugmentedEstimate dor(const AugmentedEstimate& z, EventId sigma, const Alphabet& a) {
    if (sigma >= a.size() || !a.is_observable(sigma)) {
        throw validation_error("dor: event is not observable");
    }
    AugmentedEstimate out;
    for (const AugmentedState& s : z) {
        if (s.obs.queue.empty() || s.obs.queue.front().event != sigma) continue;
        out.push_back({s.plant, out_obs(s.obs).second, s.ctrl});
    }
    return canonicalize(std::move(out));
}

std::vector<StateId> fc(const AugmentedEstimate& z) {
    std::vector<StateId> out;
    out.reserve(z.size());
    for (const AugmentedState& s : z) out.push_back(s.plant);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EstimatorSession::EstimatorSession(const Automaton& plant, const DelayBounds& b,
                                   const ControlAction& pi0)
    : plant_(plant), bounds_(b), current_(dur({}, pi0, plant, b)) {}

void EstimatorSession::observe(EventId sigma, const ControlAction& pi) {
    AugmentedEstimate after = dor(current_, sigma, plant_.alphabet());
    if (after.empty()) {
        throw inconsistent_observation_error("observation '" + plant_.alphabet().name(sigma) +
                                             "' is impossible under the channel model");
    }
    current_ = dur(after, pi, plant_, bounds_);
    history_.emplace_back(sigma, pi);
}

}  // namespace ncse
