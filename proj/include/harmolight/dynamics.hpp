#pragma once

#include "harmolight/graphs.hpp"
#include "harmolight/loops.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace harmolight {

inline constexpr std::uint64_t kDefaultStateLimit = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultMaxSteps = std::uint64_t{1} << 20;

/// One step of the harmonic game by its rules: a cell turns (or stays) on
/// exactly when it sees an odd number of excited neighbors (off cells) or an
/// odd number of non-excited neighbors (on cells). Deliberately computed
/// from the graph, not the matrix; agreement with the matrix action is a
/// tested identity.
State rule_step(const Graph& g, const State& s);

struct TraceResult {
    std::uint64_t preperiod = 0;    // steps before entering the cycle
    std::uint64_t cycle_length = 0; // length of the reached cycle
    std::vector<State> trajectory;  // distinct visited states, if requested
};

/// Iterate the matrix action with constant-memory cycle detection. Throws
/// if the cycle does not close within max_steps applications.
TraceResult evolve(const Graph& g, const State& start,
                   std::uint64_t max_steps = kDefaultMaxSteps,
                   bool keep_trajectory = false);

/// The full functional digraph on all 2^n states under x -> ax.
struct EvolutionDigraph {
    std::size_t n_vertices = 0;
    std::uint64_t n_states = 0;
    std::vector<std::uint32_t> successor;            // indexed by state
    std::vector<std::vector<std::uint32_t>> cycles;  // each rotated to start at its min state
    std::vector<std::uint32_t> tail_depth;           // distance to the cycle part, 0 on cycles
    std::vector<std::uint8_t> on_cycle;              // 1 for cycle states

    bool is_cycle_state(std::uint64_t s) const { return on_cycle[s] != 0; }
};

/// Exhaustive enumeration; throws when 2^n exceeds state_limit. The
/// successor table fill may be split across workers.
EvolutionDigraph brute_digraph(const Graph& g,
                               std::uint64_t state_limit = kDefaultStateLimit,
                               unsigned workers = 1);

/// Multiset of cycle lengths found by enumeration.
LoopEnsemble oracle_loop_ensemble(const EvolutionDigraph& d);

/// counts[j-1] = number of states that reach the zero state within j steps,
/// for j = 1..max distance; equals 2^{dim Ker a^j} by the kernel filtration.
std::vector<std::uint64_t> oracle_kernel_counts(const EvolutionDigraph& d);

/// GraphViz DOT rendering; states labeled as bitstrings (vertex 0 first),
/// cycle states drawn as double circles.
std::string export_dot(const EvolutionDigraph& d);

} // namespace harmolight
