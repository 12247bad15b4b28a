#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "ncse/automata.hpp"

using namespace ncse;
using namespace ncse::testing;

TEST_CASE("alphabet interning and masks") {
    Alphabet a;
    CHECK(a.add_event("alpha", true, true) == 0);
    CHECK(a.add_event("beta", true, false) == 1);
    CHECK(a.add_event("u", false, false) == 2);
    CHECK(a.size() == 3);
    CHECK(a.find("beta") == EventId{1});
    CHECK(!a.find("gamma").has_value());
    CHECK(a.controllable_mask() == 0b011);
    CHECK(a.observable_mask() == 0b001);
    CHECK(a.uncontrollable_mask() == 0b100);
    CHECK(a.unobservable_mask() == 0b110);
    CHECK(a.all_mask() == 0b111);
}

TEST_CASE("alphabet rejects bad names") {
    Alphabet a;
    CHECK_THROWS_AS(a.add_event("", true, true), validation_error);
    CHECK_THROWS_AS(a.add_event("has space", true, true), validation_error);
    CHECK_THROWS_AS(a.add_event("obs!1", true, true), validation_error);
    CHECK_THROWS_AS(a.add_event("ctl!2", true, true), validation_error);
    CHECK_THROWS_AS(a.add_event("dlv!alpha", true, true), validation_error);
    CHECK_THROWS_AS(a.add_event("exe!{x}", true, true), validation_error);
    a.add_event("ok", true, true);
    CHECK_THROWS_AS(a.add_event("ok", true, true), validation_error);
}

TEST_CASE("alphabet caps at 64 events") {
    Alphabet a;
    for (int i = 0; i < 64; ++i) a.add_event("e" + std::to_string(i), true, true);
    CHECK(a.all_mask() == ~0ULL);
    CHECK_THROWS_AS(a.add_event("e64", true, true), validation_error);
}

TEST_CASE("control action admissibility and rendering") {
    Alphabet a;
    a.add_event("alpha", true, true);
    a.add_event("beta", true, false);
    a.add_event("u", false, false);
    ControlAction pi{0b101};  // {alpha, u}
    CHECK(pi.is_admissible(a));
    CHECK(pi.enables(0));
    CHECK(!pi.enables(1));
    CHECK(ControlAction{0b001}.is_admissible(a) == false);  // misses u
    CHECK(ControlAction{0b1100}.is_admissible(a) == false); // stray bit
    CHECK(ControlAction{0b100}.subset_of(pi));
    CHECK(!pi.subset_of(ControlAction{0b100}));
    CHECK(render_action(pi, a) == "pi{alpha,u}");
    CHECK(render_action(ControlAction{0}, a) == "pi{}");
}

TEST_CASE("automaton construction and determinism") {
    Automaton g = example_plant();
    CHECK(g.num_states() == 5);
    CHECK(g.state_name(0) == "q1");
    CHECK(g.find_state("q4") == StateId{3});
    CHECK(g.next(0, 0) == StateId{1});
    CHECK(!g.next(0, 1).has_value());
    CHECK(g.run(0, {0, 1, 2}) == StateId{4});
    CHECK(!g.run(0, {1}).has_value());
    CHECK_THROWS_AS(g.add_transition(0, 0, 2), validation_error);  // duplicate (q1, alpha)
    CHECK_THROWS_AS(g.add_transition(0, 99, 1), validation_error);
    CHECK_THROWS_AS(g.add_state("q1"), validation_error);
    // out rows stay sorted by event
    Automaton h;
    h.alphabet() = g.alphabet();
    h.add_state("s");
    h.add_transition(0, 2, 0);
    h.add_transition(0, 0, 0);
    CHECK(h.out(0).front().first == 0);
    CHECK(h.out(0).back().first == 2);
}

TEST_CASE("natural projection erases unobservables") {
    Automaton g = example_plant();
    std::vector<EventId> s{0, 1, 2, 0};  // alpha beta lambda alpha
    CHECK(natural_projection(s, g.alphabet()) == std::vector<EventId>{0, 0});
    CHECK(natural_projection({}, g.alphabet()).empty());
    CHECK_THROWS_AS(natural_projection({9}, g.alphabet()), validation_error);
}

TEST_CASE("accessible_part trims and is idempotent") {
    Automaton g = example_plant();
    StateId orphan = g.add_state("orphan");
    g.add_transition(orphan, 0, 0);
    Automaton ac = accessible_part(g);
    CHECK(ac.num_states() == 5);
    CHECK(!ac.find_state("orphan").has_value());
    CHECK(accessible_part(ac) == ac);
}

TEST_CASE("observer matches projected language exhaustively") {
    Automaton g = example_plant();
    std::uint64_t visible = g.alphabet().observable_mask();
    Automaton obs = observer(g, visible);
    // Every projection of a generated string is accepted, and vice versa
    // every observer string is a projection of some generated string.
    std::set<std::vector<EventId>> projections;
    for (const auto& s : language_prefixes(g, 6)) {
        projections.insert(natural_projection(s, g.alphabet()));
    }
    for (const auto& t : projections) CHECK(obs.run(obs.initial(), t).has_value());
    for (const auto& t : language_prefixes(obs, 6)) CHECK(projections.count(t) == 1);
}

TEST_CASE("observer state names are canonical member lists") {
    Automaton g = example_plant();
    Automaton obs = observer(g, g.alphabet().observable_mask());
    CHECK(obs.state_name(obs.initial()) == "{q1}");
    auto after_alpha = obs.next(obs.initial(), 0);
    REQUIRE(after_alpha.has_value());
    CHECK(obs.state_name(*after_alpha) == "{q2,q3,q4,q5}");
}

TEST_CASE("observer_reach agrees with the observer automaton") {
    Automaton g = example_plant();
    std::uint64_t visible = g.alphabet().observable_mask();
    auto r = observer_reach(g, visible, {0});
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<StateId>{1, 2, 3, 4});
    CHECK(!observer_reach(g, visible, {0, 0}).has_value() ==
          !observer(g, visible).run(0, {0, 0}).has_value());
}

TEST_CASE("is_subautomaton matches by state name") {
    Automaton g = example_plant();
    Automaton h;
    h.alphabet() = g.alphabet();
    h.add_state("q1");
    h.add_state("q2");
    h.set_initial(0);
    h.add_transition(0, 0, 1);
    CHECK(is_subautomaton(h, g));
    CHECK(is_subautomaton(g, g));
    h.add_transition(1, 1, 0);  // q2 -beta-> q1, not in g
    CHECK(!is_subautomaton(h, g));
    Automaton other;
    other.alphabet().add_event("x", true, true);
    other.add_state("q1");
    CHECK(!is_subautomaton(other, g));
}

TEST_CASE("supervisor decisions and stepping") {
    NetworkedSupervisor s = example_supervisor();
    s.validate();
    CHECK(supervisor_decision(s, {}) == pi1());
    CHECK(supervisor_decision(s, {0}) == pi2());
    CHECK(supervisor_decision(s, {0, 0}) == pi3());
    CHECK(supervisor_decision(s, {0, 0, 0}) == pi3());
    CHECK_THROWS_AS(supervisor_decision(s, {1}), validation_error);  // beta unobservable
}

TEST_CASE("supervisor validation catches contract violations") {
    NetworkedSupervisor s = example_supervisor();

    SUBCASE("gamma must cover every state") {
        s.gamma.pop_back();
        CHECK_THROWS_AS(s.validate(), validation_error);
    }
    SUBCASE("inadmissible gamma is rejected once something is uncontrollable") {
        NetworkedSupervisor t;
        t.realization.alphabet().add_event("o", true, true);
        t.realization.alphabet().add_event("u", false, false);
        t.realization.add_state("p1");
        t.realization.add_transition(0, 0, 0);
        t.gamma = {ControlAction{0b01}};  // misses the uncontrollable u
        CHECK_THROWS_AS(t.validate(), validation_error);
        t.gamma = {ControlAction{0b11}};
        CHECK_NOTHROW(t.validate());
    }
    SUBCASE("realization may not move on unobservable events") {
        NetworkedSupervisor t = example_supervisor();
        t.realization.add_transition(0, 1, 1);  // beta is unobservable
        CHECK_THROWS_AS(t.validate(), validation_error);
    }
    SUBCASE("incomplete realization requires a special state") {
        NetworkedSupervisor t = example_supervisor();
        Automaton r;
        r.alphabet() = t.realization.alphabet();
        r.add_state("p1");
        t.realization = r;
        t.gamma = {pi1()};
        CHECK_THROWS_AS(t.validate(), validation_error);
        StateId spe = t.realization.add_state("x_spe");
        t.gamma.push_back(ControlAction{t.realization.alphabet().uncontrollable_mask()});
        t.special_state = spe;
        CHECK_NOTHROW(t.validate());
        CHECK(t.state_after({0, 0}) == spe);
    }
    SUBCASE("special state gamma must be exactly the uncontrollables") {
        NetworkedSupervisor t = example_supervisor();
        t.special_state = 2;
        t.gamma[2] = pi2();
        CHECK_THROWS_AS(t.validate(), validation_error);
        t.gamma[2] = ControlAction{t.realization.alphabet().uncontrollable_mask()};
        CHECK_NOTHROW(t.validate());
    }
}
