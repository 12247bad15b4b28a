#pragma once

#include <cstdint>
#include <vector>

#include "ncse/automata.hpp"
#include "ncse/channels.hpp"
#include "ncse/synthesis.hpp"

namespace ncse {

/// Desk-scale caps for generated instances.
struct FuzzCaps {
    std::uint32_t max_states = 6;
    std::uint32_t max_events = 4;
    std::uint32_t max_bound = 2;
};

struct FuzzInstance {
    Automaton plant;            // accessible by construction
    NetworkedSupervisor sup;    // complete and admissible
    DelayBounds bounds;
    std::vector<StateId> safe_states;
};

/// Deterministic pseudo-random instance stream.  Instance k of a seed is
/// reproducible independently of the others.  Degenerate draws (no
/// delay/loss transitions possible in G_S) are re-rolled.
class FuzzCorpus {
public:
    FuzzCorpus(std::uint64_t seed, FuzzCaps caps) : seed_(seed), caps_(caps) {}

    FuzzInstance instance(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    FuzzCaps caps_;
};

}  // namespace ncse
