#pragma once

#include "symca/lattice.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symca {

/// A state digit per lattice cell plus a generation counter.
class CAState {
public:
    CAState(unsigned q, std::vector<std::uint8_t> cells, std::uint64_t generation = 0);

    static CAState filled(unsigned q, std::size_t cells, std::uint8_t value = 0);
    /// Uniform random digits: std::mt19937_64 seeded with `seed`, one draw
    /// per cell in index order, digit = draw % q.
    static CAState random(unsigned q, std::size_t cells, std::uint64_t seed);

    unsigned states() const noexcept { return q_; }
    std::size_t size() const noexcept { return cells_.size(); }
    std::uint64_t generation() const noexcept { return generation_; }
    std::span<const std::uint8_t> cells() const noexcept { return cells_; }
    std::uint8_t operator[](std::size_t cell) const noexcept { return cells_[cell]; }

    CAState with_cell(std::size_t cell, std::uint8_t value) const;
    CAState with_generation(std::uint64_t generation) const;

    /// Equal digits; the generation counter is ignored.
    bool same_cells(const CAState& other) const noexcept {
        return q_ == other.q_ && cells_ == other.cells_;
    }
    friend bool operator==(const CAState&, const CAState&) = default;

private:
    unsigned q_;
    std::vector<std::uint8_t> cells_;
    std::uint64_t generation_;
};

/// Flips every cell of a binary state, boundary included.
CAState complement(const CAState& state);

/// Count of each state value; with interior_only, boundary cells of the
/// lattice are skipped.
std::vector<std::uint64_t> census(const CAState& state, const Lattice& lattice,
                                  bool interior_only = false);

/// "q k V generation" header, then one digit row per grid row for grid
/// lattices or one digit per line otherwise.
std::string format_state(const CAState& state, const Lattice& lattice);
CAState parse_state(std::string_view text, const Lattice& lattice);

/// Text picture of a grid state: '.'/'#' for binary states, digits for
/// q > 2, one line per row. Non-grid lattices get "cell:value" lines.
std::string render_grid(const CAState& state, const Lattice& lattice);
/// Inverse of render_grid for grid lattices.
CAState parse_rendered_grid(std::string_view text, const Lattice& lattice, unsigned q);

} // namespace symca
