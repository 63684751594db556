#pragma once

#include "symca/rule.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>

namespace symca {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(unsigned n, unsigned r);

/// Number of symmetric rules: q^(table size).
BigInt count_rules(unsigned q, unsigned k, Level level);
/// Binary rules fixed by the black-white swap.
BigInt count_bw_fixed(unsigned k, Level level);
/// Binary rules modulo the black-white swap, closed form.
BigInt count_orbits_closed(unsigned k, Level level);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

struct BruteForceOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    unsigned workers = 1;
};

/// Orbits of the state-permutation group S_q on rule tables, counted by
/// enumerating every table and averaging fixed points (Burnside).
/// Throws CapExceeded when q^(table size) > options.cap.
std::uint64_t count_orbits_bruteforce(unsigned q, unsigned k, Level level,
                                      const BruteForceOptions& options = {});

/// Streams binary canonical representatives in lexicographic table order.
class OrbitRepEnumerator {
public:
    OrbitRepEnumerator(unsigned k, Level level, std::uint64_t cap = kDefaultEnumerationCap);

    std::optional<SymmetricRule> next();

private:
    unsigned k_;
    Level level_;
    unsigned bits_;
    std::uint64_t code_ = 0;
    std::uint64_t end_;
};

} // namespace symca
