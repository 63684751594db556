#include "symca/engine.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <functional>
#include <string_view>
#include <thread>
#include <unordered_map>

namespace symca {

namespace {

/// Splits [0, count) into `workers` contiguous chunks whose boundaries are
/// multiples of `grain`, and runs fn(begin, end) on each.
void parallel_chunks(std::size_t count, std::size_t grain, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    std::size_t units = (count + grain - 1) / grain;
    workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(units, 1)));
    if (workers == 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = std::min(count, units * w / workers * grain);
        std::size_t end = std::min(count, units * (w + 1) / workers * grain);
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool)
        t.join();
}

void check_compatible(const Lattice& lattice, const SymmetricRule& rule, const CAState& state) {
    if (rule.valence() != lattice.valence())
        throw Error(ErrorCode::Mismatch, "rule valence " + std::to_string(rule.valence()) +
                                             " differs from lattice valence " +
                                             std::to_string(lattice.valence()));
    if (rule.states() != state.states())
        throw Error(ErrorCode::Mismatch, "rule has " + std::to_string(rule.states()) +
                                             " states, state alphabet has " +
                                             std::to_string(state.states()));
    if (state.size() != lattice.cells())
        throw Error(ErrorCode::Mismatch, "state size does not match the lattice");
}

CAState step_generic(const Lattice& lattice, const SymmetricRule& leaves_rule, const CAState& state,
                     unsigned workers) {
    const unsigned q = leaves_rule.states();
    const CompositionIndex index(q, leaves_rule.valence());
    const auto table = leaves_rule.table();
    const auto old = state.cells();
    std::vector<std::uint8_t> next(old.size());

    parallel_chunks(old.size(), 1, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<unsigned> counts(q);
        for (std::size_t c = begin; c < end; ++c) {
            if (lattice.is_boundary(c)) {
                next[c] = old[c];
                continue;
            }
            std::fill(counts.begin(), counts.end(), 0u);
            for (auto v : lattice.neighbors(c))
                ++counts[old[v]];
            next[c] = table[index.rank(counts) * q + old[c]];
        }
    });
    return CAState(q, std::move(next), state.generation() + 1);
}

CAState step_packed(const Lattice& lattice, const SymmetricRule& leaves_rule, const CAState& state,
                    unsigned workers) {
    const std::size_t n = state.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t c = 0; c < n; ++c)
        bits[c / 64] |= std::uint64_t{state[c]} << (c % 64);

    // (k+1) x 2 lookup: index 2*live + center.
    const auto lut = leaves_rule.table();
    std::vector<std::uint64_t> out(words, 0);
    auto bit = [&](std::size_t c) { return (bits[c / 64] >> (c % 64)) & 1u; };

    parallel_chunks(n, 64, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
            std::uint64_t value;
            if (lattice.is_boundary(c)) {
                value = bit(c);
            } else {
                unsigned live = 0;
                for (auto v : lattice.neighbors(c))
                    live += static_cast<unsigned>(bit(v));
                value = lut[2 * live + bit(c)];
            }
            out[c / 64] |= value << (c % 64);
        }
    });

    std::vector<std::uint8_t> cells(n);
    for (std::size_t c = 0; c < n; ++c)
        cells[c] = static_cast<std::uint8_t>((out[c / 64] >> (c % 64)) & 1u);
    return CAState(2, std::move(cells), state.generation() + 1);
}

} // namespace

CAState step(const Lattice& lattice, const SymmetricRule& rule, const CAState& state,
             const EngineOptions& options) {
    check_compatible(lattice, rule, state);
    const SymmetricRule leaves_rule = rule.to_leaves();
    StepPath path = options.path;
    if (path == StepPath::Auto)
        path = rule.binary() ? StepPath::Packed : StepPath::Generic;
    if (path == StepPath::Packed) {
        if (!rule.binary())
            throw Error(ErrorCode::Unsupported, "the packed path handles binary rules only");
        return step_packed(lattice, leaves_rule, state, options.workers);
    }
    return step_generic(lattice, leaves_rule, state, options.workers);
}

RunResult run(const Lattice& lattice, const SymmetricRule& rule, const CAState& state,
              std::uint64_t steps, const EngineOptions& options, bool interior_census) {
    check_compatible(lattice, rule, state);
    RunResult result{state, {}};
    result.census.reserve(steps + 1);
    result.census.push_back(census(state, lattice, interior_census));
    for (std::uint64_t i = 0; i < steps; ++i) {
        result.final_state = step(lattice, rule, result.final_state, options);
        result.census.push_back(census(result.final_state, lattice, interior_census));
    }
    return result;
}

std::optional<Cycle> detect_cycle(const Lattice& lattice, const SymmetricRule& rule,
                                  const CAState& state, std::uint64_t max_steps,
                                  const EngineOptions& options) {
    check_compatible(lattice, rule, state);
    auto digest = [](const CAState& s) {
        auto cells = s.cells();
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(cells.data()), cells.size()));
    };
    std::vector<CAState> history{state};
    std::unordered_multimap<std::size_t, std::uint64_t> seen{{digest(state), 0}};
    CAState current = state;
    for (std::uint64_t g = 1; g <= max_steps; ++g) {
        current = step(lattice, rule, current, options);
        auto h = digest(current);
        auto [lo, hi] = seen.equal_range(h);
        for (auto it = lo; it != hi; ++it)
            if (history[it->second].same_cells(current))
                return Cycle{it->second, g - it->second};
        seen.emplace(h, g);
        history.push_back(current);
    }
    return std::nullopt;
}

} // namespace symca
