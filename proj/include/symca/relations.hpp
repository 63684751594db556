#pragma once

#include "symca/bs_rule.hpp"
#include "symca/f2poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symca {

struct SigmaNode;

/// Polynomial expression with free hole indices, e.g.
///   "x'_9 x_9 {s^i_2 + s^i_1} + x'_9 (x_9 + 1)"
///
/// Grammar: terms joined by '+', factors juxtaposed or joined by '*'.
/// Factors: 0, 1, x_N / xN (leaf or center), x'_N / xpN (next center),
/// x_h for a hole h in {i, j, k, l}, elementary symmetric polynomials
/// s_m (or σ_m) over x_1..x_k with optional superscript holes s^i_m,
/// s^{ij}_m naming omitted leaves, and groups in (...) or {...}.
/// Holes take strictly increasing values in alphabetical order:
/// 1 <= i < j < k < l <= leaves.
class RelationTemplate {
public:
    RelationTemplate(std::string_view text, unsigned leaves = 8);

    const std::string& text() const noexcept { return text_; }
    unsigned leaves() const noexcept { return leaves_; }
    /// Hole letters used, sorted.
    const std::string& holes() const noexcept { return holes_; }

    /// All admissible hole assignments (1-based leaf indices).
    std::vector<std::vector<unsigned>> admissible_tuples() const;

    F2Poly instantiate(std::span<const unsigned> hole_values) const;

private:
    std::string text_;
    unsigned leaves_;
    std::string holes_;
    std::shared_ptr<const SigmaNode> root_;
};

/// Parses and expands a hole-free expression.
F2Poly parse_polynomial(std::string_view text, unsigned leaves = 8);

enum class NamedRule { ConwaysLife, HighLife, DayAndNight };

std::string_view to_string(NamedRule name);
/// Accepts "ConwaysLife", "HighLife", "DayAndNight" (case-insensitive) and
/// the short forms "conway", "life", "daynight".
NamedRule parse_named_rule(std::string_view text);
BSRule named_rule_bs(NamedRule name);

/// The sigma-form polynomial of a named Life-family rule, expanded.
F2Poly life_polynomial_fixture(NamedRule name);
std::string_view life_polynomial_text(NamedRule name);

/// Stored decomposition relations of a named rule.
std::vector<RelationTemplate> decomposition_fixture(NamedRule name);
/// x'_9{s^i_4 + s^i_2 + 1} + s^i_6, the single relation that combines the
/// pair-indexed Day&Night relations.
RelationTemplate day_and_night_combined_relation();

struct RelationCounterexample {
    std::vector<unsigned> hole_values;
    /// Mask over the polynomial variables (leaves, center, next center).
    F2Poly::Monomial assignment;
};

struct RelationCheck {
    bool holds = true;
    std::size_t tuples_checked = 0;
    std::size_t assignments_per_tuple = 0;
    std::optional<RelationCounterexample> counterexample;
};

/// Checks that every instantiation of the template vanishes on every
/// transition allowed by the rule (x'_{k+1} = f(x_1..x_k, x_{k+1})),
/// by exhaustive evaluation. The rule must be binary, leaves-level, with
/// the template's leaf count.
RelationCheck verify_implied_relation(const SymmetricRule& rule, const RelationTemplate& relation);

std::string format_assignment(F2Poly::Monomial assignment, unsigned leaves);

} // namespace symca
