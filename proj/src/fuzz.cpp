#include "ncse/fuzz.hpp"

#include <algorithm>
#include <random>

#include "ncse/comm_automaton.hpp"

namespace ncse {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Automaton random_plant(std::mt19937_64& rng, const FuzzCaps& caps) {
    std::uniform_int_distribution<std::uint32_t> nq_dist(2, caps.max_states);
    std::uniform_int_distribution<std::uint32_t> ne_dist(2, caps.max_events);
    std::uint32_t nq = nq_dist(rng);
    std::uint32_t ne = ne_dist(rng);

    Automaton g;
    for (EventId e = 0; e < ne; ++e) {
        bool controllable = std::uniform_int_distribution<int>(0, 3)(rng) != 0;  // mostly controllable
        bool observable = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
        if (e == 0) observable = true;  // keep the observation channel exercised
        g.alphabet().add_event("e" + std::to_string(e), controllable, observable);
    }
    for (StateId q = 0; q < nq; ++q) g.add_state("q" + std::to_string(q));
    g.set_initial(0);

    // Spanning edges keep every state accessible.
    for (StateId q = 1; q < nq; ++q) {
        StateId from = std::uniform_int_distribution<StateId>(0, q - 1)(rng);
        for (int attempt = 0; attempt < 8; ++attempt) {
            EventId e = std::uniform_int_distribution<EventId>(0, ne - 1)(rng);
            if (!g.defined(from, e)) {
                g.add_transition(from, e, q);
                break;
            }
        }
        if (!std::any_of(g.out(from).begin(), g.out(from).end(),
                         [q](const auto& t) { return t.second == q; })) {
            for (EventId e = 0; e < ne; ++e) {
                if (!g.defined(from, e)) {
                    g.add_transition(from, e, q);
                    break;
                }
            }
        }
    }
    // Extra random transitions.
    std::uint32_t extra = std::uniform_int_distribution<std::uint32_t>(0, nq * 2)(rng);
    for (std::uint32_t i = 0; i < extra; ++i) {
        StateId from = std::uniform_int_distribution<StateId>(0, nq - 1)(rng);
        EventId e = std::uniform_int_distribution<EventId>(0, ne - 1)(rng);
        StateId to = std::uniform_int_distribution<StateId>(0, nq - 1)(rng);
        if (!g.defined(from, e)) g.add_transition(from, e, to);
    }
    return accessible_part(g);
}

ControlAction random_action(std::mt19937_64& rng, const Alphabet& a) {
    std::uint64_t c = a.controllable_mask();
    std::uint64_t subset = rng() & c;
    return ControlAction{subset | a.uncontrollable_mask()};
}

NetworkedSupervisor random_supervisor(std::mt19937_64& rng, const Alphabet& a) {
    NetworkedSupervisor sup;
    sup.realization.alphabet() = a;
    std::uint32_t ns = std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
    for (StateId p = 0; p < ns; ++p) sup.realization.add_state("p" + std::to_string(p));
    sup.realization.set_initial(0);
    for (StateId p = 0; p < ns; ++p) {
        for (EventId e = 0; e < a.size(); ++e) {
            if (!a.is_observable(e)) continue;
            StateId to = std::uniform_int_distribution<StateId>(0, ns - 1)(rng);
            sup.realization.add_transition(p, e, to);
        }
        sup.gamma.push_back(random_action(rng, a));
    }
    sup.validate();
    return sup;
}

DelayBounds random_bounds(std::mt19937_64& rng, const FuzzCaps& caps) {
    auto draw = [&] { return std::uniform_int_distribution<std::uint32_t>(0, caps.max_bound)(rng); };
    DelayBounds b{draw(), draw(), draw(), draw()};
    if (b.n_o + b.n_c + b.n_lo + b.n_lc == 0) b.n_c = std::max(1u, caps.max_bound);
    return b;
}

/// At least one delay or loss transition shows up in G_S.
bool exercises_network(const CommAutomaton& gs) {
    for (const auto& row : gs.transitions) {
        for (const auto& [e, to] : row) {
            (void)to;
            if (e.kind == CommEvent::Kind::ObsLoss || e.kind == CommEvent::Kind::CtrlLoss) {
                return true;
            }
        }
    }
    for (const CommState& s : gs.states) {
        if (!s.obs.queue.empty() && s.obs.queue.front().age > 0) return true;
        if (!s.ctrl.queue.empty() && s.ctrl.queue.front().age > 0) return true;
    }
    return false;
}

}  // namespace

FuzzInstance FuzzCorpus::instance(std::uint64_t index) const {
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(splitmix64(seed_) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + attempt));
        FuzzInstance inst;
        inst.plant = random_plant(rng, caps_);
        inst.sup = random_supervisor(rng, inst.plant.alphabet());
        inst.bounds = random_bounds(rng, caps_);

        // Safe set: always contains the initial state, drops ~1/3 of the rest.
        for (StateId q = 0; q < inst.plant.num_states(); ++q) {
            if (q == inst.plant.initial() || std::uniform_int_distribution<int>(0, 2)(rng) != 0) {
                inst.safe_states.push_back(q);
            }
        }

        try {
            CommAutomaton gs = build_gs(inst.plant, inst.sup, inst.bounds, 200'000);
            if (exercises_network(gs) || attempt >= 32) return inst;
        } catch (const budget_error&) {
            // oversized draw, reroll
        }
    }
}

}  // namespace ncse
