#include "symca/f2poly.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace symca {

namespace {

/// Degree first, then the ascending variable lists compared lexicographically.
bool monomial_less(F2Poly::Monomial a, F2Poly::Monomial b) {
    int da = std::popcount(a), db = std::popcount(b);
    if (da != db)
        return da < db;
    while (a != b) {
        auto la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb)
            return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

void check_leaves(unsigned leaves) {
    if (leaves < 1 || leaves > F2Poly::kMaxLeaves)
        throw Error(ErrorCode::Domain, "polynomial leaf count must be in 1.." +
                                           std::to_string(F2Poly::kMaxLeaves));
}

std::vector<F2Poly::Monomial> canonical(std::unordered_set<F2Poly::Monomial>&& set) {
    std::vector<F2Poly::Monomial> out(set.begin(), set.end());
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
}

} // namespace

F2Poly::F2Poly(unsigned leaves) : leaves_(leaves) { check_leaves(leaves); }

F2Poly::F2Poly(unsigned leaves, std::vector<Monomial> monomials) : leaves_(leaves) {
    check_leaves(leaves);
    const Monomial allowed = (Monomial{1} << (leaves + 2)) - 1;
    std::unordered_set<Monomial> set;
    for (auto m : monomials) {
        if (m & ~allowed)
            throw Error(ErrorCode::Domain, "monomial uses a variable outside the neighborhood");
        if (!set.insert(m).second)
            set.erase(m);
    }
    monomials_ = canonical(std::move(set));
}

F2Poly F2Poly::one(unsigned leaves) { return F2Poly(leaves, {0}); }

F2Poly F2Poly::variable(unsigned leaves, unsigned var) {
    if (var > leaves + 1)
        throw Error(ErrorCode::Domain, "variable index out of range");
    return F2Poly(leaves, {Monomial{1} << var});
}

unsigned F2Poly::degree() const noexcept {
    return monomials_.empty() ? 0 : static_cast<unsigned>(std::popcount(monomials_.back()));
}

F2Poly::Monomial F2Poly::support() const noexcept {
    Monomial s = 0;
    for (auto m : monomials_)
        s |= m;
    return s;
}

F2Poly F2Poly::operator+(const F2Poly& other) const {
    if (other.leaves_ != leaves_)
        throw Error(ErrorCode::Mismatch, "polynomials over different neighborhoods");
    std::unordered_set<Monomial> set(monomials_.begin(), monomials_.end());
    for (auto m : other.monomials_)
        if (!set.insert(m).second)
            set.erase(m);
    F2Poly out(leaves_);
    out.monomials_ = canonical(std::move(set));
    return out;
}

F2Poly F2Poly::operator*(const F2Poly& other) const {
    if (other.leaves_ != leaves_)
        throw Error(ErrorCode::Mismatch, "polynomials over different neighborhoods");
    std::unordered_set<Monomial> set;
    for (auto a : monomials_)
        for (auto b : other.monomials_) {
            auto m = a | b; // x^2 = x
            if (!set.insert(m).second)
                set.erase(m);
        }
    F2Poly out(leaves_);
    out.monomials_ = canonical(std::move(set));
    return out;
}

bool F2Poly::eval(Monomial values, Monomial defined) const {
    if (auto missing = support() & ~defined)
        throw Error(ErrorCode::Domain, "assignment leaves " +
                                           variable_name(static_cast<unsigned>(std::countr_zero(missing)),
                                                         leaves_) +
                                           " undefined");
    return eval(values);
}

bool F2Poly::eval(Monomial values) const noexcept {
    bool acc = false;
    for (auto m : monomials_)
        acc ^= (m & values) == m;
    return acc;
}

F2Poly F2Poly::permute_leaves(std::span<const unsigned> perm) const {
    if (perm.size() != leaves_)
        throw Error(ErrorCode::Domain, "permutation size must equal the leaf count");
    std::vector<Monomial> out;
    out.reserve(monomials_.size());
    const Monomial leaf_mask = (Monomial{1} << leaves_) - 1;
    for (auto m : monomials_) {
        Monomial image = m & ~leaf_mask;
        for (unsigned i = 0; i < leaves_; ++i)
            if (m >> i & 1u)
                image |= Monomial{1} << perm[i];
        out.push_back(image);
    }
    return F2Poly(leaves_, std::move(out));
}

F2Poly esym(unsigned degree, std::span<const unsigned> vars, unsigned leaves) {
    F2Poly probe(leaves);
    if (degree > vars.size())
        return probe;
    std::vector<F2Poly::Monomial> out;
    // Walk all degree-sized index subsets in lexicographic order.
    std::vector<std::size_t> pick(degree);
    for (std::size_t i = 0; i < degree; ++i)
        pick[i] = i;
    for (;;) {
        F2Poly::Monomial m = 0;
        for (auto i : pick) {
            if (vars[i] > leaves + 1)
                throw Error(ErrorCode::Domain, "variable index out of range");
            m |= F2Poly::Monomial{1} << vars[i];
        }
        out.push_back(m);
        std::size_t i = degree;
        while (i > 0 && pick[i - 1] == vars.size() - degree + i - 1)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < degree; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return F2Poly(leaves, std::move(out));
}

void moebius_transform(std::span<std::uint8_t> table) {
    const std::size_t n = table.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw Error(ErrorCode::Domain, "truth table length must be a power of two");
    for (std::size_t bit = 1; bit < n; bit <<= 1)
        for (std::size_t i = 0; i < n; ++i)
            if (i & bit)
                table[i] ^= table[i ^ bit];
}

F2Poly rule_to_anf(const SymmetricRule& rule) {
    if (!rule.binary())
        throw Error(ErrorCode::Unsupported, "algebraic normal form needs a binary rule");
    const unsigned k = rule.valence();
    check_leaves(k);
    const SymmetricRule leaves_rule = rule.to_leaves();
    const std::size_t size = std::size_t{1} << (k + 1);
    const std::uint32_t leaf_mask = (std::uint32_t{1} << k) - 1;

    std::vector<std::uint8_t> truth(size);
    for (std::size_t x = 0; x < size; ++x) {
        auto live = static_cast<unsigned>(std::popcount(static_cast<std::uint32_t>(x) & leaf_mask));
        truth[x] = leaves_rule.apply(live, static_cast<std::uint8_t>(x >> k & 1u));
    }
    moebius_transform(truth);

    std::vector<F2Poly::Monomial> monomials{F2Poly::Monomial{1} << (k + 1)};
    for (std::size_t m = 0; m < size; ++m)
        if (truth[m])
            monomials.push_back(static_cast<F2Poly::Monomial>(m));
    return F2Poly(k, std::move(monomials));
}

std::string variable_name(unsigned var, unsigned leaves) {
    if (var <= leaves)
        return "x" + std::to_string(var + 1);
    if (var == leaves + 1)
        return "xp" + std::to_string(leaves + 1);
    throw Error(ErrorCode::Domain, "variable index out of range");
}

std::string format_poly(const F2Poly& poly) {
    if (poly.is_zero())
        return "0";
    std::string out;
    for (auto m : poly.monomials()) {
        if (!out.empty())
            out += " + ";
        if (m == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (auto rest = m; rest; rest &= rest - 1) {
            if (!first)
                out += "*";
            out += variable_name(static_cast<unsigned>(std::countr_zero(rest)), poly.leaves());
            first = false;
        }
    }
    return out;
}

} // namespace symca
