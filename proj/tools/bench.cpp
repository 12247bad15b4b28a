// Compares the serial and OpenMP frontier-expansion kernels (build_gs and
// dur) on a generated instance larger than the test corpus.

#include <chrono>
#include <cstdio>
#include <string>

#include "ncse/comm_automaton.hpp"
#include "ncse/estimator.hpp"

using namespace ncse;

namespace {

double seconds_of(auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

/// Ring of `n` states with observable forward edges, controllable chords,
/// and an unobservable back edge; enough branching to blow up G_S.
Automaton make_plant(std::size_t n) {
    Automaton g;
    g.alphabet().add_event("a", true, true);
    g.alphabet().add_event("b", true, true);
    g.alphabet().add_event("c", true, false);
    g.alphabet().add_event("u", false, false);
    for (std::size_t i = 0; i < n; ++i) g.add_state("q" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
        g.add_transition(i, 0, (i + 1) % n);
        g.add_transition(i, 1, (i + 2) % n);
        if (i % 2 == 0) g.add_transition(i, 2, (i + 3) % n);
        if (i % 3 == 0) g.add_transition(i, 3, (i + n - 1) % n);
    }
    return g;
}

NetworkedSupervisor make_supervisor(const Automaton& g) {
    NetworkedSupervisor s;
    s.realization.alphabet() = g.alphabet();
    s.realization.add_state("p0");
    s.realization.add_state("p1");
    s.realization.add_transition(0, 0, 1);
    s.realization.add_transition(1, 0, 0);
    s.realization.add_transition(0, 1, 0);
    s.realization.add_transition(1, 1, 1);
    s.gamma = {ControlAction{0b1011}, ControlAction{0b1111}};
    return s;
}

}  // namespace

int main() {
    Automaton g = make_plant(10);
    NetworkedSupervisor sup = make_supervisor(g);
    DelayBounds b{2, 2, 1, 1};

    CommAutomaton serial_gs, parallel_gs;
    double t_serial = seconds_of([&] { serial_gs = build_gs(g, sup, b, 20'000'000, Exec::Serial); });
    double t_parallel =
        seconds_of([&] { parallel_gs = build_gs(g, sup, b, 20'000'000, Exec::Parallel); });
    bool same_gs = serial_gs.states == parallel_gs.states;
    std::printf("build_gs: %zu states  serial %.3fs  parallel %.3fs  speedup %.2fx  match %s\n",
                serial_gs.num_states(), t_serial, t_parallel, t_serial / t_parallel,
                same_gs ? "yes" : "NO");

    ControlAction pi{g.alphabet().all_mask()};
    AugmentedEstimate dur_serial, dur_parallel;
    double d_serial = seconds_of([&] {
        for (int i = 0; i < 20; ++i) dur_serial = dur({}, pi, g, b, Exec::Serial);
    });
    double d_parallel = seconds_of([&] {
        for (int i = 0; i < 20; ++i) dur_parallel = dur({}, pi, g, b, Exec::Parallel);
    });
    bool same_dur = dur_serial == dur_parallel;
    std::printf("dur x20:  %zu members  serial %.3fs  parallel %.3fs  speedup %.2fx  match %s\n",
                dur_serial.size(), d_serial, d_parallel, d_serial / d_parallel,
                same_dur ? "yes" : "NO");
    return (same_gs && same_dur) ? 0 : 1;
}
