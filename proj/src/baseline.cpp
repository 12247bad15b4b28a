#include "ncse/baseline.hpp"

#include <deque>
#include <set>

#include "ncse/errors.hpp"

namespace ncse {

namespace {

/// Initial extended state: every truncation of the empty string is empty,
/// so the whole window is S(epsilon).
ExtendedState initial_extended(const NetworkedSupervisor& sup, std::uint32_t n_c) {
    ExtendedState s;
    s.plant = 0;  // caller overwrites
    s.sup = sup.realization.initial();
    s.window.assign(n_c, sup.decision_at(s.sup));
    return s;
}

/// sigma may occur if one of the actions issued in the past N_c steps
/// enables it: S(P(s)) = gamma at the tracked supervisor state, or one of
/// the older window entries.
bool enabled_by_window(const ExtendedState& s, const NetworkedSupervisor& sup, EventId sigma) {
    if (sup.decision_at(s.sup).enables(sigma)) return true;
    for (const ControlAction& pi : s.window) {
        if (pi.enables(sigma)) return true;
    }
    return false;
}

ExtendedState advance(const ExtendedState& s, const NetworkedSupervisor& sup, EventId sigma,
                      StateId plant_target) {
    const Alphabet& a = sup.realization.alphabet();
    ExtendedState out;
    out.plant = plant_target;
    out.sup = a.is_observable(sigma) ? sup.step(s.sup, sigma) : s.sup;
    // Window shift: (s sigma)_{-i} = s_{-(i-1)}, so the new entry for i=1 is
    // the decision at the old string and the rest slide by one.
    out.window = s.window;
    if (!out.window.empty()) {
        for (std::size_t i = out.window.size(); i-- > 1;) out.window[i] = out.window[i - 1];
        out.window[0] = sup.decision_at(s.sup);
    }
    return out;
}

}  // namespace

bool la_member(const Automaton& g, const NetworkedSupervisor& sup, std::uint32_t n_c,
               const std::vector<EventId>& s) {
    ExtendedState cur = initial_extended(sup, n_c);
    cur.plant = g.initial();
    for (EventId sigma : s) {
        auto q = g.next(cur.plant, sigma);
        if (!q) return false;
        if (!enabled_by_window(cur, sup, sigma)) return false;
        cur = advance(cur, sup, sigma, *q);
    }
    return true;
}

std::vector<StateId> baseline_estimate(const Automaton& g, const NetworkedSupervisor& sup,
                                       std::uint32_t n_c, const std::vector<EventId>& t,
                                       std::uint64_t state_budget) {
    const Alphabet& a = g.alphabet();
    ExtendedState init = initial_extended(sup, n_c);
    init.plant = g.initial();

    std::set<std::pair<ExtendedState, std::size_t>> seen{{init, 0}};
    std::deque<std::pair<ExtendedState, std::size_t>> work{{init, 0}};
    std::set<StateId> result;
    while (!work.empty()) {
        auto [cur, pos] = work.front();
        work.pop_front();
        if (pos == t.size()) result.insert(cur.plant);
        for (const auto& [sigma, q] : g.out(cur.plant)) {
            std::size_t next_pos = pos;
            if (a.is_observable(sigma)) {
                if (pos >= t.size() || t[pos] != sigma) continue;
                next_pos = pos + 1;
            }
            if (!enabled_by_window(cur, sup, sigma)) continue;
            auto item = std::make_pair(advance(cur, sup, sigma, q), next_pos);
            if (seen.insert(item).second) {
                if (seen.size() > state_budget) {
                    throw budget_error("baseline search exceeds the state budget");
                }
                work.push_back(std::move(item));
            }
        }
    }
    return {result.begin(), result.end()};
}

}  // namespace ncse
