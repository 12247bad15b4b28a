#pragma once

// Shared fixtures and independent oracles for the test suites.  Oracles here
// deliberately avoid the library's own closure kernels: they enumerate runs
// directly so the implementations have something honest to be checked against.

#include <deque>
#include <set>
#include <vector>

#include "ncse/automata.hpp"
#include "ncse/channels.hpp"
#include "ncse/comm_automaton.hpp"

namespace ncse::testing {

/// The five-state plant used throughout the worked examples:
/// q1 -alpha-> q2, q2 -beta-> q4, q2 -lambda-> q3, q3 -beta-> q4,
/// q4 -lambda-> q5; alpha observable, everything controllable.
inline Automaton example_plant() {
    Automaton g;
    g.alphabet().add_event("alpha", true, true);
    g.alphabet().add_event("beta", true, false);
    g.alphabet().add_event("lambda", true, false);
    for (int i = 1; i <= 5; ++i) g.add_state("q" + std::to_string(i));
    g.set_initial(0);
    EventId alpha = 0, beta = 1, lambda = 2;
    g.add_transition(0, alpha, 1);
    g.add_transition(1, beta, 3);
    g.add_transition(1, lambda, 2);
    g.add_transition(2, beta, 3);
    g.add_transition(3, lambda, 4);
    return g;
}

/// The matching supervisor: p1 --alpha--> p2 --alpha--> p3 (self-loop),
/// gamma = {alpha,lambda} / {beta} / {}.
inline NetworkedSupervisor example_supervisor() {
    NetworkedSupervisor s;
    s.realization = Automaton();
    s.realization.alphabet() = example_plant().alphabet();
    for (int i = 1; i <= 3; ++i) s.realization.add_state("p" + std::to_string(i));
    s.realization.set_initial(0);
    EventId alpha = 0;
    s.realization.add_transition(0, alpha, 1);
    s.realization.add_transition(1, alpha, 2);
    s.realization.add_transition(2, alpha, 2);
    s.gamma = {ControlAction{0b101}, ControlAction{0b010}, ControlAction{0}};
    return s;
}

inline ControlAction pi1() { return ControlAction{0b101}; }  // {alpha, lambda}
inline ControlAction pi2() { return ControlAction{0b010}; }  // {beta}
inline ControlAction pi3() { return ControlAction{0}; }      // {}

/// All strings of L(a) up to the given length, by BFS.
inline std::vector<std::vector<EventId>> language_prefixes(const Automaton& a,
                                                           std::size_t max_len) {
    std::vector<std::vector<EventId>> out{{}};
    std::deque<std::pair<StateId, std::vector<EventId>>> work{{a.initial(), {}}};
    while (!work.empty()) {
        auto [q, s] = work.front();
        work.pop_front();
        if (s.size() == max_len) continue;
        for (const auto& [e, to] : a.out(q)) {
            auto next = s;
            next.push_back(e);
            out.push_back(next);
            work.emplace_back(to, next);
        }
    }
    return out;
}

/// Classical (delay-free) closed loop: sigma may extend s iff it is enabled
/// by S(P(s)).  Independent of the communication-automaton machinery.
inline bool classical_member(const Automaton& g, const NetworkedSupervisor& sup,
                             const std::vector<EventId>& s) {
    StateId q = g.initial();
    std::vector<EventId> observed;
    for (EventId sigma : s) {
        auto n = g.next(q, sigma);
        if (!n || !supervisor_decision(sup, observed).enables(sigma)) return false;
        q = *n;
        if (g.alphabet().is_observable(sigma)) observed.push_back(sigma);
    }
    return true;
}

/// Classical partially-observed estimate of the delay-free closed loop:
/// { delta(q0,s) : s classical member, P(s) = t }.
inline std::vector<StateId> classical_estimate(const Automaton& g, const NetworkedSupervisor& sup,
                                               const std::vector<EventId>& t) {
    std::set<std::tuple<StateId, StateId, std::size_t>> seen;
    std::deque<std::tuple<StateId, StateId, std::size_t>> work;
    seen.emplace(g.initial(), sup.realization.initial(), 0);
    work.emplace_back(g.initial(), sup.realization.initial(), 0);
    std::set<StateId> result;
    while (!work.empty()) {
        auto [q, p, pos] = work.front();
        work.pop_front();
        if (pos == t.size()) result.insert(q);
        for (const auto& [sigma, to] : g.out(q)) {
            if (!sup.decision_at(p).enables(sigma)) continue;
            StateId pn = p;
            std::size_t next_pos = pos;
            if (g.alphabet().is_observable(sigma)) {
                if (pos >= t.size() || t[pos] != sigma) continue;
                pn = sup.step(p, sigma);
                next_pos = pos + 1;
            }
            if (seen.emplace(to, pn, next_pos).second) work.emplace_back(to, pn, next_pos);
        }
    }
    return {result.begin(), result.end()};
}

/// Zero-bounds networked estimate, classically: the delay-free estimate plus
/// the one-step observable successors whose notification is still in flight.
/// (With all bounds zero a queued observation must be delivered before the
/// next plant event, but the estimate is taken while it may still be queued.)
inline std::vector<StateId> classical_estimate_with_pending(const Automaton& g,
                                                            const NetworkedSupervisor& sup,
                                                            const std::vector<EventId>& t) {
    std::vector<StateId> base = classical_estimate(g, sup, t);
    std::set<StateId> result(base.begin(), base.end());
    ControlAction pi = sup.decision_at(sup.state_after(t));
    for (StateId q : base) {
        for (const auto& [sigma, to] : g.out(q)) {
            if (g.alphabet().is_observable(sigma) && pi.enables(sigma)) result.insert(to);
        }
    }
    return {result.begin(), result.end()};
}

/// All strings mu in L(G_S) up to the given length, by BFS over the built
/// automaton (used to cross-check psi / psi^f based definitions).
inline std::vector<std::vector<CommEvent>> gs_strings(const CommAutomaton& gs,
                                                      std::size_t max_len) {
    std::vector<std::vector<CommEvent>> out{{}};
    std::deque<std::pair<std::uint32_t, std::vector<CommEvent>>> work{{gs.initial, {}}};
    while (!work.empty()) {
        auto [s, mu] = work.front();
        work.pop_front();
        if (mu.size() == max_len) continue;
        for (const auto& [e, to] : gs.transitions[s]) {
            auto next = mu;
            next.push_back(e);
            out.push_back(next);
            work.emplace_back(to, next);
        }
    }
    return out;
}

}  // namespace ncse::testing
