#pragma once

#include "symca/lattice.hpp"
#include "symca/state.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symca {

/// Live cells of a binary pattern in a width x height box.
struct PatternDocument {
    unsigned width = 0;
    unsigned height = 0;
    std::vector<std::pair<unsigned, unsigned>> live; ///< (x, y), sorted by row then column

    friend bool operator==(const PatternDocument&, const PatternDocument&) = default;
};

/// Run-length encoded pattern: optional '#' comment lines, optional
/// "x = W, y = H[, rule = ...]" header, then runs of b (dead) / o (alive),
/// '$' ending a row and '!' ending the pattern.
PatternDocument import_rle(std::string_view text);
std::string export_rle(const PatternDocument& pattern);

/// Sets the pattern's live cells (x + dx, y + dy) on a grid lattice; other
/// cells keep their value.
CAState place_pattern(const CAState& state, const Lattice& lattice, const PatternDocument& pattern,
                      unsigned dx = 0, unsigned dy = 0);

} // namespace symca
