#pragma once

#include "symca/rule.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symca {

/// Multilinear polynomial over GF(2) in the variables of a k-leaf
/// neighborhood. Variable v is bit v of a monomial mask:
///   bits 0..k-1  leaves x_1..x_k
///   bit  k       center x_{k+1}
///   bit  k+1     next center state x'_{k+1}
/// Monomials are kept sorted by degree, then lexicographically by their
/// variable lists; the zero polynomial has no monomials.
class F2Poly {
public:
    using Monomial = std::uint32_t;

    static constexpr unsigned kMaxLeaves = 24;

    explicit F2Poly(unsigned leaves = 8);
    F2Poly(unsigned leaves, std::vector<Monomial> monomials);

    static F2Poly one(unsigned leaves);
    static F2Poly variable(unsigned leaves, unsigned var);

    unsigned leaves() const noexcept { return leaves_; }
    unsigned center_var() const noexcept { return leaves_; }
    unsigned next_var() const noexcept { return leaves_ + 1; }

    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    std::size_t terms() const noexcept { return monomials_.size(); }
    bool is_zero() const noexcept { return monomials_.empty(); }
    unsigned degree() const noexcept;
    /// Union of the variables appearing in any monomial.
    Monomial support() const noexcept;

    F2Poly operator+(const F2Poly& other) const;
    F2Poly operator*(const F2Poly& other) const;
    F2Poly& operator+=(const F2Poly& other) { return *this = *this + other; }
    F2Poly& operator*=(const F2Poly& other) { return *this = *this * other; }

    /// Value at the point whose 1-variables are the set bits of `values`.
    /// Every variable of the polynomial must be in `defined`.
    bool eval(Monomial values, Monomial defined) const;
    /// Unchecked evaluation, all variables taken from `values`.
    bool eval(Monomial values) const noexcept;

    /// Image under a permutation of the leaves: leaf i becomes perm[i].
    F2Poly permute_leaves(std::span<const unsigned> perm) const;

    friend bool operator==(const F2Poly&, const F2Poly&) = default;

private:
    unsigned leaves_;
    std::vector<Monomial> monomials_;
};

/// Sum of all degree-`degree` products of distinct variables from `vars`.
/// esym(0, ...) = 1; degree > vars.size() gives the zero polynomial.
F2Poly esym(unsigned degree, std::span<const unsigned> vars, unsigned leaves);

/// In-place Moebius (XOR butterfly) transform; maps a truth table of
/// length 2^n to algebraic-normal-form coefficients and back.
void moebius_transform(std::span<std::uint8_t> table);

/// The relation polynomial x'_{k+1} + ANF(f) of a binary leaves-level rule;
/// it vanishes exactly on neighborhood transitions allowed by the rule.
F2Poly rule_to_anf(const SymmetricRule& rule);

/// "+"-joined monomials, variables x1..x{k+1} and xp{k+1}, e.g.
/// "xp9 + x1*x9". Zero is "0", the empty product "1".
std::string format_poly(const F2Poly& poly);

std::string variable_name(unsigned var, unsigned leaves);

} // namespace symca
