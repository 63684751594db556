#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symca {

/// Which cells of the neighborhood the rule is invariant under permuting.
enum class Level {
    Leaves, ///< the k outer cells (outer-totalistic)
    Full,   ///< all k+1 cells including the center (totalistic)
};

std::string_view to_string(Level level);

/// Ranks the compositions (n_0, ..., n_{q-1}) of `total` into q parts.
///
/// Order is ascending in the mixed-radix code n_1 + n_2*(total+1) + ...,
/// so for q = 2 the rank of a composition is simply n_1.
class CompositionIndex {
public:
    CompositionIndex(unsigned parts, unsigned total);

    unsigned parts() const noexcept { return parts_; }
    unsigned total() const noexcept { return total_; }
    std::size_t size() const noexcept { return codes_.size(); }

    /// counts.size() must equal parts() and sum to total().
    std::size_t rank(std::span<const unsigned> counts) const;
    std::vector<unsigned> unrank(std::size_t index) const;

private:
    std::uint64_t encode(std::span<const unsigned> counts) const;

    unsigned parts_;
    unsigned total_;
    std::vector<std::uint64_t> codes_; // sorted
};

/// A local rule invariant under permutations of the leaves (or of the whole
/// neighborhood), stored as its output table.
///
/// Table layout (also the serialized alpha-string order, alpha_1 first):
///   Leaves: index = rank(leaf composition) * q + center; for q = 2 this is
///           2w + c where w counts live leaves.
///   Full:   index = rank(composition of all k+1 cells); for q = 2 this is
///           the total live count.
class SymmetricRule {
public:
    SymmetricRule(unsigned q, unsigned k, Level level, std::vector<std::uint8_t> table);

    static SymmetricRule constant(unsigned q, unsigned k, Level level, std::uint8_t value);

    unsigned states() const noexcept { return q_; }
    unsigned valence() const noexcept { return k_; }
    Level level() const noexcept { return level_; }
    bool binary() const noexcept { return q_ == 2; }
    std::span<const std::uint8_t> table() const noexcept { return table_; }

    /// Binary lookup by live-leaf count.
    std::uint8_t apply(unsigned live_leaves, std::uint8_t center) const;
    /// General lookup; leaf_counts[s] = number of leaves in state s.
    std::uint8_t apply(std::span<const unsigned> leaf_counts, std::uint8_t center) const;

    /// Re-expresses a Full rule with Leaves indexing (identity for Leaves).
    SymmetricRule to_leaves() const;

    friend bool operator==(const SymmetricRule&, const SymmetricRule&) = default;
    /// Lexicographic on the table; only meaningful for equal (q, k, level).
    friend std::strong_ordering operator<=>(const SymmetricRule& a, const SymmetricRule& b) {
        return a.table_ <=> b.table_;
    }

private:
    unsigned q_;
    unsigned k_;
    Level level_;
    std::vector<std::uint8_t> table_;
};

std::size_t table_size(unsigned q, unsigned k, Level level);

/// Digit string, alpha_1 leftmost. Requires q <= 10.
std::string format_alpha(const SymmetricRule& rule);

/// Parses a digit string; the level is inferred from its length given q and k.
SymmetricRule parse_alpha(std::string_view text, unsigned q, unsigned k);

/// Accepts either an alpha string or B/S notation (binary only).
SymmetricRule parse_rule(std::string_view text, unsigned k, unsigned q = 2);

/// Black-white swap: reversed bitwise complement of the table.
SymmetricRule bw_transform(const SymmetricRule& rule);
bool is_bw_symmetric(const SymmetricRule& rule);
/// Lexicographic minimum of {rule, bw_transform(rule)}.
SymmetricRule canonical_rep(const SymmetricRule& rule);

} // namespace symca
