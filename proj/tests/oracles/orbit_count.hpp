#pragma once
// Orbit counting by explicit orbit listing. The state permutation acts on a
// rule through its semantics, g.f(config) = g(f(g^-1 config)), rather than
// through any table identity.

#include "naive_step.hpp"

#include <numeric>
#include <set>

namespace oracle {

struct Slot {
    std::vector<unsigned> leaves; // per-state tally
    unsigned center = 0;
};

// Table slots in layout order, derived from the documented indexing.
inline std::vector<Slot> slots(unsigned q, unsigned k, symca::Level level) {
    std::vector<Slot> out;
    if (level == symca::Level::Leaves) {
        for (const auto& c : compositions(q, k))
            for (unsigned center = 0; center < q; ++center)
                out.push_back({c, center});
    } else {
        // Full rules ignore which cell is the center; pick any state present.
        for (auto c : compositions(q, k + 1)) {
            unsigned center = 0;
            while (c[center] == 0)
                ++center;
            c[center] -= 1;
            out.push_back({c, center});
        }
    }
    return out;
}

inline std::size_t slot_of(const std::vector<Slot>& all, const Slot& s, symca::Level level) {
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (level == symca::Level::Leaves) {
            if (all[i].leaves == s.leaves && all[i].center == s.center)
                return i;
        } else {
            auto a = all[i].leaves, b = s.leaves;
            a[all[i].center]++;
            b[s.center]++;
            if (a == b)
                return i;
        }
    }
    return all.size();
}

// Number of orbits of S_q acting on all q^n tables; requires q^n small.
inline std::uint64_t count_orbits(unsigned q, unsigned k, symca::Level level) {
    auto all = slots(q, k, level);
    const std::size_t n = all.size();
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> perm(q);
    std::iota(perm.begin(), perm.end(), 0u);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    // For each permutation, where slot i goes and the inverse permutation.
    std::vector<std::vector<std::size_t>> moved(perms.size(), std::vector<std::size_t>(n));
    for (std::size_t p = 0; p < perms.size(); ++p)
        for (std::size_t i = 0; i < n; ++i) {
            Slot img{std::vector<unsigned>(q, 0), perms[p][all[i].center]};
            for (unsigned s = 0; s < q; ++s)
                img.leaves[perms[p][s]] = all[i].leaves[s];
            moved[p][i] = slot_of(all, img, level);
        }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= q;
    std::set<std::vector<unsigned>> reps;
    std::vector<unsigned> table(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        auto c = code;
        for (std::size_t i = 0; i < n; ++i) {
            table[i] = static_cast<unsigned>(c % q);
            c /= q;
        }
        std::vector<unsigned> best;
        for (std::size_t p = 0; p < perms.size(); ++p) {
            // (g.f)(g x) = g(f(x))
            std::vector<unsigned> image(n);
            for (std::size_t i = 0; i < n; ++i)
                image[moved[p][i]] = perms[p][table[i]];
            if (best.empty() || image < best)
                best = std::move(image);
        }
        reps.insert(best);
    }
    return reps.size();
}

// The black-white image of a binary rule, built from g(x) = 1 - f(1 - x).
inline symca::SymmetricRule bw_image(const symca::SymmetricRule& rule) {
    const unsigned k = rule.valence();
    auto all = slots(2, k, rule.level());
    std::vector<std::uint8_t> out(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        Slot flipped{{all[i].leaves[1], all[i].leaves[0]}, 1 - all[i].center};
        out[i] = static_cast<std::uint8_t>(1 - rule.table()[slot_of(all, flipped, rule.level())]);
    }
    return symca::SymmetricRule(2, k, rule.level(), out);
}

} // namespace oracle
