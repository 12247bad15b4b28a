#include "ncse/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace ncse {

SafetySpec SafetySpec::from_states(const Automaton& g, const std::vector<StateId>& safe_states) {
    SafetySpec spec;
    spec.safe.assign(g.num_states(), 0);
    for (StateId q : safe_states) {
        if (q >= g.num_states()) throw validation_error("safe state out of range");
        spec.safe[q] = 1;
    }
    if (!spec.is_safe(g.initial())) {
        throw validation_error("the initial plant state is unsafe; no supervisor can exist");
    }
    return spec;
}

SafetySpec SafetySpec::from_subautomaton(const Automaton& h, const Automaton& g) {
    if (!is_subautomaton(h, g)) {
        throw validation_error("specification is not a subautomaton of the plant");
    }
    std::vector<StateId> safe_states;
    for (StateId q = 0; q < h.num_states(); ++q) safe_states.push_back(*g.find_state(h.state_name(q)));
    return from_states(g, safe_states);
}

bool phi_safe(const std::vector<StateId>& z, const SafetySpec& spec) {
    return std::all_of(z.begin(), z.end(), [&](StateId q) { return spec.is_safe(q); });
}

std::optional<std::uint32_t> Nbts::yz_next(std::uint32_t y, const ControlAction& pi) const {
    const auto& row = yz.at(y);
    auto it = std::lower_bound(row.begin(), row.end(), pi,
                               [](const auto& lhs, const ControlAction& a) { return lhs.first < a; });
    if (it == row.end() || it->first != pi) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> Nbts::zy_next(std::uint32_t z, EventId sigma) const {
    const auto& row = zy.at(z);
    auto it = std::lower_bound(row.begin(), row.end(), sigma,
                               [](const auto& lhs, EventId e) { return lhs.first < e; });
    if (it == row.end() || it->first != sigma) return std::nullopt;
    return it->second;
}

std::vector<ControlAction> admissible_actions(
    const Alphabet& a, const std::optional<std::vector<ControlAction>>& restricted) {
    if (restricted) {
        std::vector<ControlAction> out = *restricted;
        for (const ControlAction& pi : out) {
            if (!pi.is_admissible(a)) {
                throw validation_error("restricted action list contains an inadmissible action");
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    std::uint64_t c = a.controllable_mask();
    if (std::popcount(c) > 12) {
        throw validation_error("more than 12 controllable events; supply an explicit action list");
    }
    std::vector<ControlAction> out;
    std::uint64_t sub = 0;
    while (true) {
        out.push_back(ControlAction{sub | a.uncontrollable_mask()});
        if (sub == c) break;
        sub = (sub - c) & c;  // next submask in increasing order
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Sorted head events over the members of an estimate.
std::vector<EventId> head_events(const AugmentedEstimate& z) {
    std::set<EventId> heads;
    for (const AugmentedState& s : z) {
        if (!s.obs.queue.empty()) heads.insert(s.obs.queue.front().event);
    }
    return {heads.begin(), heads.end()};
}

}  // namespace

Nbts build_nbts(const Automaton& g, const DelayBounds& b,
                const std::optional<std::vector<ControlAction>>& actions,
                std::uint64_t state_budget, Exec exec) {
    const std::vector<ControlAction> pis = admissible_actions(g.alphabet(), actions);

    Nbts t;
    std::map<AugmentedEstimate, std::uint32_t> y_index;
    std::map<Nbts::ZState, std::uint32_t> z_index;

    auto intern_y = [&](AugmentedEstimate est, std::deque<std::uint32_t>& work) {
        auto [it, inserted] = y_index.emplace(std::move(est), static_cast<std::uint32_t>(t.y_states.size()));
        if (inserted) {
            t.y_states.push_back(it->first);
            t.yz.emplace_back();
            work.push_back(it->second);
            if (t.size() > state_budget) throw budget_error("NBTS exceeds the state budget");
        }
        return it->second;
    };

    std::deque<std::uint32_t> y_work;
    std::deque<std::uint32_t> z_work;
    intern_y({}, y_work);
    t.initial = 0;

    while (!y_work.empty() || !z_work.empty()) {
        if (!y_work.empty()) {
            std::uint32_t y = y_work.front();
            y_work.pop_front();
            for (const ControlAction& pi : pis) {
                Nbts::ZState z{dur(t.y_states[y], pi, g, b, exec), pi};
                auto [it, inserted] = z_index.emplace(std::move(z), static_cast<std::uint32_t>(t.z_states.size()));
                if (inserted) {
                    t.z_states.push_back(it->first);
                    t.zy.emplace_back();
                    z_work.push_back(it->second);
                    if (t.size() > state_budget) throw budget_error("NBTS exceeds the state budget");
                }
                t.yz[y].emplace_back(pi, it->second);
            }
            std::sort(t.yz[y].begin(), t.yz[y].end());
        } else {
            std::uint32_t z = z_work.front();
            z_work.pop_front();
            for (EventId sigma : head_events(t.z_states[z].info)) {
                std::uint32_t y = intern_y(dor(t.z_states[z].info, sigma, g.alphabet()), y_work);
                t.zy[z].emplace_back(sigma, y);
            }
            std::sort(t.zy[z].begin(), t.zy[z].end());
        }
    }
    return t;
}

namespace {

struct Alive {
    std::vector<char> y, z;
};

/// Accessible part under the current alive flags: kill everything not
/// reachable from y0 over alive edges.
void take_accessible(const Nbts& t, Alive& alive) {
    std::vector<char> y_seen(t.y_states.size(), 0), z_seen(t.z_states.size(), 0);
    if (alive.y[t.initial]) {
        std::deque<std::pair<bool, std::uint32_t>> work{{true, t.initial}};
        y_seen[t.initial] = 1;
        while (!work.empty()) {
            auto [is_y, s] = work.front();
            work.pop_front();
            if (is_y) {
                for (const auto& [pi, z] : t.yz[s]) {
                    (void)pi;
                    if (alive.z[z] && !z_seen[z]) {
                        z_seen[z] = 1;
                        work.emplace_back(false, z);
                    }
                }
            } else {
                for (const auto& [sigma, y] : t.zy[s]) {
                    (void)sigma;
                    if (alive.y[y] && !y_seen[y]) {
                        y_seen[y] = 1;
                        work.emplace_back(true, y);
                    }
                }
            }
        }
    }
    alive.y = std::move(y_seen);
    alive.z = std::move(z_seen);
}

Nbts compact(const Nbts& t, const Alive& alive) {
    Nbts out;
    std::vector<std::uint32_t> y_map(t.y_states.size(), 0), z_map(t.z_states.size(), 0);
    for (std::uint32_t y = 0; y < t.y_states.size(); ++y) {
        if (!alive.y[y]) continue;
        y_map[y] = static_cast<std::uint32_t>(out.y_states.size());
        out.y_states.push_back(t.y_states[y]);
        out.yz.emplace_back();
    }
    for (std::uint32_t z = 0; z < t.z_states.size(); ++z) {
        if (!alive.z[z]) continue;
        z_map[z] = static_cast<std::uint32_t>(out.z_states.size());
        out.z_states.push_back(t.z_states[z]);
        out.zy.emplace_back();
    }
    for (std::uint32_t y = 0; y < t.y_states.size(); ++y) {
        if (!alive.y[y]) continue;
        for (const auto& [pi, z] : t.yz[y]) {
            if (alive.z[z]) out.yz[y_map[y]].emplace_back(pi, z_map[z]);
        }
    }
    for (std::uint32_t z = 0; z < t.z_states.size(); ++z) {
        if (!alive.z[z]) continue;
        for (const auto& [sigma, y] : t.zy[z]) {
            if (alive.y[y]) out.zy[z_map[z]].emplace_back(sigma, y_map[y]);
        }
    }
    out.initial = y_map[t.initial];
    return out;
}

}  // namespace

std::optional<Ainc> prune_ainc(const Nbts& t, const SafetySpec& spec) {
    Alive alive{std::vector<char>(t.y_states.size(), 1), std::vector<char>(t.z_states.size(), 1)};

    // Step 1: delete unsafe Z-states, take the accessible part.
    for (std::uint32_t z = 0; z < t.z_states.size(); ++z) {
        if (!phi_safe(fc(t.z_states[z].info), spec)) alive.z[z] = 0;
    }
    take_accessible(t, alive);

    // Step 2: alternate completeness pruning with accessibility until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t y = 0; y < t.y_states.size(); ++y) {
            if (!alive.y[y]) continue;
            bool has_action = false;
            for (const auto& [pi, z] : t.yz[y]) {
                (void)pi;
                if (alive.z[z]) {
                    has_action = true;
                    break;
                }
            }
            if (!has_action) {
                alive.y[y] = 0;
                changed = true;
            }
        }
        take_accessible(t, alive);
        for (std::uint32_t z = 0; z < t.z_states.size(); ++z) {
            if (!alive.z[z]) continue;
            bool complete = true;
            for (EventId sigma : head_events(t.z_states[z].info)) {
                auto y = t.zy_next(z, sigma);
                if (!y || !alive.y[*y]) {
                    complete = false;
                    break;
                }
            }
            if (!complete) {
                alive.z[z] = 0;
                changed = true;
            }
        }
        take_accessible(t, alive);
        if (!alive.y[t.initial]) return std::nullopt;
    }
    return compact(t, alive);
}

namespace {

ControlAction choose_action(const Ainc& a, std::uint32_t y, const ExtractionPolicy& policy,
                            const Alphabet& alpha) {
    const auto& row = a.yz[y];
    if (row.empty()) throw validation_error("AINC has a Y-state with no actions");
    switch (policy.kind) {
        case ExtractionPolicy::Kind::GreedyMax: {
            // Maximal under set inclusion; canonical ascending-mask tie-break.
            for (const auto& [pi, z] : row) {
                (void)z;
                bool maximal = true;
                for (const auto& [other, z2] : row) {
                    (void)z2;
                    if (other != pi && pi.subset_of(other)) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) return pi;
            }
            return row.front().first;  // unreachable: some action is maximal
        }
        case ExtractionPolicy::Kind::Min: {
            ControlAction min_action{alpha.uncontrollable_mask()};
            for (const auto& [pi, z] : row) {
                (void)z;
                if (pi == min_action) return pi;
            }
            throw validation_error("policy 'min': the minimal action is not available at some "
                                   "reachable Y-state");
        }
        case ExtractionPolicy::Kind::Fixed: {
            for (const auto& [pi, z] : row) {
                (void)z;
                if (pi == policy.fixed) return pi;
            }
            throw validation_error("policy 'fixed': the requested action is not available at "
                                   "some reachable Y-state");
        }
    }
    throw validation_error("unknown extraction policy");
}

}  // namespace

NetworkedSupervisor extract_supervisor(const Ainc& a, const Automaton& g,
                                       const ExtractionPolicy& policy) {
    if (a.y_states.empty()) throw validation_error("cannot extract from an empty AINC");
    const Alphabet& alpha = g.alphabet();

    // Follow the policy from the initial Y-state; realization states are the
    // visited Z-states.
    std::unordered_map<std::uint32_t, StateId> z_to_state;
    std::deque<std::uint32_t> work;
    NetworkedSupervisor sup;
    sup.realization.alphabet() = alpha;
    std::vector<std::uint32_t> state_to_z;

    auto visit = [&](std::uint32_t z) {
        auto [it, inserted] = z_to_state.emplace(z, static_cast<StateId>(state_to_z.size()));
        if (inserted) {
            sup.realization.add_state("z" + std::to_string(z));
            state_to_z.push_back(z);
            work.push_back(z);
        }
        return it->second;
    };

    std::uint32_t z0 = *a.yz_next(a.initial, choose_action(a, a.initial, policy, alpha));
    visit(z0);
    sup.realization.set_initial(0);

    std::vector<std::pair<StateId, std::pair<EventId, StateId>>> edges;
    while (!work.empty()) {
        std::uint32_t z = work.front();
        work.pop_front();
        StateId from = z_to_state.at(z);
        for (const auto& [sigma, y] : a.zy[z]) {
            std::uint32_t zn = *a.yz_next(y, choose_action(a, y, policy, alpha));
            edges.push_back({from, {sigma, visit(zn)}});
        }
    }
    for (const auto& [from, edge] : edges) {
        sup.realization.add_transition(from, edge.first, edge.second);
    }

    sup.gamma.resize(state_to_z.size());
    for (StateId s = 0; s < state_to_z.size(); ++s) {
        sup.gamma[s] = a.z_states[state_to_z[s]].action;
    }

    // Observations outside the covered language route to a special sink that
    // enables only the uncontrollable events.
    StateId spe = sup.realization.add_state("x_spe");
    sup.gamma.push_back(ControlAction{alpha.uncontrollable_mask()});
    sup.special_state = spe;

    sup.validate();
    return sup;
}

VerifyResult verify_networked_safety(const Automaton& g, const NetworkedSupervisor& sup,
                                     const SafetySpec& spec, const DelayBounds& b,
                                     std::uint64_t state_budget) {
    sup.validate();
    CommState init;
    init.plant = g.initial();
    init.sup = sup.realization.initial();
    init.ctrl.active = sup.decision_at(init.sup);

    struct Parent {
        std::uint32_t state;
        CommEvent event;
    };
    std::vector<CommState> states{init};
    std::vector<Parent> parents{{0, {}}};
    std::unordered_map<CommState, std::uint32_t> index{{init, 0u}};

    auto make_witness = [&](std::uint32_t unsafe) {
        VerifyResult r;
        r.safe = false;
        std::uint32_t cur = unsafe;
        while (cur != 0) {
            r.witness.push_back(parents[cur].event);
            cur = parents[cur].state;
        }
        std::reverse(r.witness.begin(), r.witness.end());
        r.witness_plant = psi(r.witness);
        return r;
    };

    if (!spec.is_safe(init.plant)) return make_witness(0);

    std::deque<std::uint32_t> work{0};
    while (!work.empty()) {
        std::uint32_t cur = work.front();
        work.pop_front();
        const CommState s = states[cur];
        for (const CommEvent& e : comm_enabled(s, g, sup, b)) {
            CommState target = *comm_step(s, e, g, sup, b);
            auto [it, inserted] = index.emplace(target, static_cast<std::uint32_t>(states.size()));
            if (!inserted) continue;
            states.push_back(target);
            parents.push_back({cur, e});
            if (states.size() > state_budget) {
                throw budget_error("safety verification exceeds the state budget");
            }
            if (!spec.is_safe(target.plant)) return make_witness(it->second);
            work.push_back(it->second);
        }
    }
    return {};
}

}  // namespace ncse
