#pragma once

#include "symca/lattice.hpp"
#include "symca/rule.hpp"
#include "symca/state.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace symca {

enum class StepPath {
    Auto,    ///< packed for binary rules, generic otherwise
    Generic, ///< per-cell composition lookup, any q
    Packed,  ///< one bit per cell, binary rules only
};

struct EngineOptions {
    unsigned workers = 1;
    StepPath path = StepPath::Auto;
};

/// One synchronous update. Boundary cells keep their values; the input is
/// not modified; the generation advances by one.
CAState step(const Lattice& lattice, const SymmetricRule& rule, const CAState& state,
             const EngineOptions& options = {});

struct RunResult {
    CAState final_state;
    /// census[g][s]: cells in state s at generation g, for g = 0..steps.
    std::vector<std::vector<std::uint64_t>> census;
};

RunResult run(const Lattice& lattice, const SymmetricRule& rule, const CAState& state,
              std::uint64_t steps, const EngineOptions& options = {},
              bool interior_census = false);

struct Cycle {
    std::uint64_t transient;
    std::uint64_t period;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Smallest (t, p) with state_{t+p} = state_t among generations
/// 0..max_steps, or nullopt if no generation repeats.
std::optional<Cycle> detect_cycle(const Lattice& lattice, const SymmetricRule& rule,
                                  const CAState& state, std::uint64_t max_steps,
                                  const EngineOptions& options = {});

} // namespace symca
