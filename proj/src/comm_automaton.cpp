#include "ncse/comm_automaton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ncse {

std::string render_comm_event(const CommEvent& e, const Alphabet& a) {
    switch (e.kind) {
        case CommEvent::Kind::Plant:
            return a.name(e.event());
        case CommEvent::Kind::ObsLoss:
            return "obs!" + std::to_string(e.index());
        case CommEvent::Kind::Deliver:
            return "dlv!" + a.name(e.event());
        case CommEvent::Kind::CtrlLoss:
            return "ctl!" + std::to_string(e.index());
        case CommEvent::Kind::Execute: {
            std::string body = render_action(e.action(), a);
            return "exe!" + body.substr(2);  // strip the "pi" prefix, keep {..}
        }
    }
    return {};
}

std::string render_comm_state(const CommState& s, const Automaton& g,
                              const NetworkedSupervisor& sup) {
    const Alphabet& a = g.alphabet();
    std::ostringstream out;
    out << '(' << g.state_name(s.plant) << ",[";
    for (std::size_t i = 0; i < s.obs.queue.size(); ++i) {
        if (i) out << ',';
        out << '(' << a.name(s.obs.queue[i].event) << ',' << s.obs.queue[i].age << ')';
    }
    out << "]," << s.obs.losses << ',' << render_action(s.ctrl.active, a) << ",[";
    for (std::size_t i = 0; i < s.ctrl.queue.size(); ++i) {
        if (i) out << ',';
        out << '(' << render_action(s.ctrl.queue[i].action, a) << ',' << s.ctrl.queue[i].age << ')';
    }
    out << "]," << s.ctrl.losses << ',' << sup.realization.state_name(s.sup) << ')';
    return out.str();
}

std::optional<std::uint32_t> CommAutomaton::next(std::uint32_t s, const CommEvent& e) const {
    const auto& row = transitions.at(s);
    auto it = std::lower_bound(row.begin(), row.end(), e,
                               [](const auto& lhs, const CommEvent& ev) { return lhs.first < ev; });
    if (it == row.end() || it->first != e) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> CommAutomaton::find(const CommState& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || *it != s) return std::nullopt;
    return static_cast<std::uint32_t>(it - states.begin());
}

std::optional<CommState> comm_step(const CommState& s, const CommEvent& e, const Automaton& g,
                                   const NetworkedSupervisor& sup, const DelayBounds& b) {
    const Alphabet& a = g.alphabet();
    switch (e.kind) {
        case CommEvent::Kind::Plant: {
            EventId sigma = e.event();
            auto q = g.next(s.plant, sigma);
            if (!q || !s.ctrl.active.enables(sigma)) return std::nullopt;
            if (num_obs(age_obs(s.obs)) > b.n_o) return std::nullopt;
            if (num_ctrl(plus_ctrl(s.ctrl)) > b.n_c) return std::nullopt;
            return CommState{*q, in_obs(s.obs, sigma, a), plus_ctrl(s.ctrl), s.sup};
        }
        case CommEvent::Kind::ObsLoss: {
            std::uint32_t i = e.index();
            if (i < 1 || i > s.obs.queue.size()) return std::nullopt;
            if (s.obs.losses + 1 > b.n_lo) return std::nullopt;
            return CommState{s.plant, loss_obs(s.obs, i, b), s.ctrl, s.sup};
        }
        case CommEvent::Kind::Deliver: {
            if (s.obs.queue.empty() || s.obs.queue.front().event != e.event()) return std::nullopt;
            auto [sigma, obs] = out_obs(s.obs);
            StateId p = sup.step(s.sup, sigma);
            return CommState{s.plant, obs, in_ctrl(s.ctrl, sup.decision_at(p), a), p};
        }
        case CommEvent::Kind::CtrlLoss: {
            std::uint32_t i = e.index();
            if (i < 1 || i > s.ctrl.queue.size()) return std::nullopt;
            if (s.ctrl.losses + 1 > b.n_lc) return std::nullopt;
            return CommState{s.plant, s.obs, loss_ctrl(s.ctrl, i, b), s.sup};
        }
        case CommEvent::Kind::Execute: {
            if (s.ctrl.queue.empty() || s.ctrl.queue.front().action != e.action()) {
                return std::nullopt;
            }
            return CommState{s.plant, s.obs, out_ctrl(s.ctrl), s.sup};
        }
    }
    return std::nullopt;
}

std::vector<CommEvent> comm_enabled(const CommState& s, const Automaton& g,
                                    const NetworkedSupervisor& sup, const DelayBounds& b) {
    std::vector<CommEvent> out;
    for (const auto& [sigma, to] : g.out(s.plant)) {
        (void)to;
        CommEvent e = CommEvent::plant(sigma);
        if (comm_step(s, e, g, sup, b)) out.push_back(e);
    }
    if (!s.obs.queue.empty() && s.obs.losses + 1 <= b.n_lo) {
        for (std::uint32_t i = 1; i <= s.obs.queue.size(); ++i) {
            out.push_back(CommEvent::obs_loss(i));
        }
    }
    if (!s.obs.queue.empty()) out.push_back(CommEvent::deliver(s.obs.queue.front().event));
    if (!s.ctrl.queue.empty() && s.ctrl.losses + 1 <= b.n_lc) {
        for (std::uint32_t i = 1; i <= s.ctrl.queue.size(); ++i) {
            out.push_back(CommEvent::ctrl_loss(i));
        }
    }
    if (!s.ctrl.queue.empty()) out.push_back(CommEvent::execute(s.ctrl.queue.front().action));
    return out;
}

namespace {

CommState initial_comm_state(const Automaton& g, const NetworkedSupervisor& sup) {
    CommState s;
    s.plant = g.initial();
    s.sup = sup.realization.initial();
    s.ctrl.active = sup.decision_at(s.sup);
    return s;
}

/// Remap a freshly explored automaton into canonical (sorted-state) order.
CommAutomaton canonicalize(std::vector<CommState> states,
                           std::vector<std::vector<std::pair<CommEvent, std::uint32_t>>> trans,
                           std::uint32_t initial) {
    std::vector<std::uint32_t> order(states.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return states[a] < states[b]; });
    std::vector<std::uint32_t> remap(states.size());
    for (std::uint32_t rank = 0; rank < order.size(); ++rank) remap[order[rank]] = rank;

    CommAutomaton out;
    out.states.resize(states.size());
    out.transitions.resize(states.size());
    for (std::uint32_t old = 0; old < states.size(); ++old) {
        out.states[remap[old]] = std::move(states[old]);
        auto& row = out.transitions[remap[old]];
        row = std::move(trans[old]);
        for (auto& [e, to] : row) {
            (void)e;
            to = remap[to];
        }
        std::sort(row.begin(), row.end());
    }
    out.initial = remap[initial];
    return out;
}

}  // namespace

CommAutomaton build_gs(const Automaton& g, const NetworkedSupervisor& sup, const DelayBounds& b,
                       std::uint64_t state_budget, Exec exec) {
    sup.validate();
    std::vector<CommState> states{initial_comm_state(g, sup)};
    std::vector<std::vector<std::pair<CommEvent, std::uint32_t>>> trans(1);
    std::unordered_map<CommState, std::uint32_t> index{{states[0], 0u}};

    auto intern = [&](const CommState& s) {
        auto [it, inserted] = index.emplace(s, static_cast<std::uint32_t>(states.size()));
        if (inserted) {
            states.push_back(s);
            trans.emplace_back();
            if (states.size() > state_budget) {
                throw budget_error("communication automaton exceeds the state budget of " +
                                   std::to_string(state_budget));
            }
        }
        return it->second;
    };

    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::vector<std::pair<CommEvent, CommState>>> batches(frontier.size());
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                const CommState s = states[frontier[i]];
                for (const CommEvent& e : comm_enabled(s, g, sup, b)) {
                    batches[i].emplace_back(e, *comm_step(s, e, g, sup, b));
                }
            }
        } else {
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                const CommState& s = states[frontier[i]];
                for (const CommEvent& e : comm_enabled(s, g, sup, b)) {
                    batches[i].emplace_back(e, *comm_step(s, e, g, sup, b));
                }
            }
        }
        std::vector<std::uint32_t> next_frontier;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (auto& [e, target] : batches[i]) {
                std::size_t before = states.size();
                std::uint32_t id = intern(target);
                if (states.size() > before) next_frontier.push_back(id);
                trans[frontier[i]].emplace_back(e, id);
            }
        }
        frontier = std::move(next_frontier);
    }
    return canonicalize(std::move(states), std::move(trans), 0);
}

std::vector<EventId> psi(const std::vector<CommEvent>& mu) {
    std::vector<EventId> out;
    for (const CommEvent& e : mu) {
        if (e.kind == CommEvent::Kind::Plant) out.push_back(e.event());
    }
    return out;
}

std::vector<EventId> psi_f_inv(const std::vector<CommEvent>& mu) {
    std::vector<EventId> out;
    for (const CommEvent& e : mu) {
        if (e.kind == CommEvent::Kind::Deliver) out.push_back(e.event());
    }
    return out;
}

namespace {

/// States reachable via non-delivery events only.
std::vector<std::uint32_t> silent_closure(const CommAutomaton& gs,
                                          std::vector<std::uint32_t> seed) {
    std::set<std::uint32_t> members(seed.begin(), seed.end());
    std::deque<std::uint32_t> work(seed.begin(), seed.end());
    while (!work.empty()) {
        std::uint32_t s = work.front();
        work.pop_front();
        for (const auto& [e, to] : gs.transitions[s]) {
            if (e.kind == CommEvent::Kind::Deliver) continue;
            if (members.insert(to).second) work.push_back(to);
        }
    }
    return {members.begin(), members.end()};
}

}  // namespace

std::optional<std::vector<StateId>> oracle_nse(const CommAutomaton& gs,
                                               const std::vector<EventId>& t) {
    std::vector<std::uint32_t> current = silent_closure(gs, {gs.initial});
    for (EventId sigma : t) {
        std::set<std::uint32_t> targets;
        CommEvent e = CommEvent::deliver(sigma);
        for (std::uint32_t s : current) {
            if (auto n = gs.next(s, e)) targets.insert(*n);
        }
        if (targets.empty()) return std::nullopt;
        current = silent_closure(gs, {targets.begin(), targets.end()});
    }
    std::set<StateId> plants;
    for (std::uint32_t s : current) plants.insert(gs.states[s].plant);
    return std::vector<StateId>{plants.begin(), plants.end()};
}

bool language_member(const CommAutomaton& gs, const std::vector<EventId>& s) {
    // Reachability over (state of G_S, matched prefix length of s).
    std::set<std::pair<std::uint32_t, std::size_t>> seen{{gs.initial, 0}};
    std::deque<std::pair<std::uint32_t, std::size_t>> work{{gs.initial, 0}};
    while (!work.empty()) {
        auto [st, pos] = work.front();
        work.pop_front();
        if (pos == s.size()) return true;
        for (const auto& [e, to] : gs.transitions[st]) {
            std::size_t next_pos = pos;
            if (e.kind == CommEvent::Kind::Plant) {
                if (e.event() != s[pos]) continue;
                next_pos = pos + 1;
            }
            if (seen.emplace(to, next_pos).second) work.emplace_back(to, next_pos);
        }
    }
    return false;
}

std::vector<std::pair<CommEvent, std::uint32_t>> random_run(const CommAutomaton& gs,
                                                            std::size_t steps,
                                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<CommEvent, std::uint32_t>> trace;
    std::uint32_t current = gs.initial;
    for (std::size_t i = 0; i < steps; ++i) {
        const auto& row = gs.transitions[current];
        if (row.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, row.size() - 1);
        const auto& [e, to] = row[pick(rng)];
        trace.emplace_back(e, to);
        current = to;
    }
    return trace;
}

}  // namespace ncse
