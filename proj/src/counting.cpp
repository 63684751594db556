#include "symca/counting.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace symca {

namespace {

constexpr unsigned kMaxExponent = 1u << 24;

BigInt pow2(unsigned e) {
    BigInt v = 1;
    return v << e;
}

void check_valence(unsigned k) {
    if (k < 1)
        throw Error(ErrorCode::Domain, "valence must be at least 1");
}

} // namespace

BigInt binomial(unsigned n, unsigned r) {
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    BigInt acc = 1;
    for (unsigned i = 1; i <= r; ++i)
        acc = acc * (n - r + i) / i;
    return acc;
}

BigInt count_rules(unsigned q, unsigned k, Level level) {
    if (q < 2)
        throw Error(ErrorCode::Domain, "state count must be at least 2");
    check_valence(k);
    BigInt exponent = level == Level::Leaves ? binomial(k + q - 1, q - 1) * q
                                             : binomial(k + q, q - 1);
    if (exponent > kMaxExponent)
        throw Error(ErrorCode::Unsupported, "rule count exponent " + exponent.str() +
                                                " is too large to expand");
    return boost::multiprecision::pow(BigInt(q), exponent.convert_to<unsigned>());
}

BigInt count_bw_fixed(unsigned k, Level level) {
    check_valence(k);
    if (level == Level::Leaves)
        return pow2(k + 1);
    return k % 2 == 0 ? pow2(k / 2 + 1) : BigInt(0);
}

BigInt count_orbits_closed(unsigned k, Level level) {
    check_valence(k);
    if (level == Level::Leaves)
        return pow2(2 * k + 1) + pow2(k);
    return k % 2 == 0 ? pow2(k + 1) + pow2(k / 2) : pow2(k + 1);
}

namespace {

/// One state permutation g acting on tables: T is fixed iff
/// T[i] == g[T[source[i]]] for every entry i.
struct TableAction {
    std::vector<std::uint8_t> g;
    std::vector<std::size_t> source;
};

std::vector<TableAction> build_actions(unsigned q, unsigned k, Level level) {
    std::vector<std::uint8_t> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t n = table_size(q, k, level);
    CompositionIndex index(q, level == Level::Leaves ? k : k + 1);

    std::vector<TableAction> actions;
    do {
        std::vector<std::uint8_t> inverse(q);
        for (unsigned s = 0; s < q; ++s)
            inverse[perm[s]] = static_cast<std::uint8_t>(s);
        TableAction a{perm, std::vector<std::size_t>(n)};
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = level == Level::Leaves ? i / q : i;
            auto counts = index.unrank(r);
            // g^{-1} applied cellwise: a cell in state g(t) moves to state t.
            std::vector<unsigned> moved(q);
            for (unsigned t = 0; t < q; ++t)
                moved[t] = counts[perm[t]];
            if (level == Level::Leaves) {
                auto center = static_cast<std::uint8_t>(i % q);
                a.source[i] = index.rank(moved) * q + inverse[center];
            } else {
                a.source[i] = index.rank(moved);
            }
        }
        actions.push_back(std::move(a));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return actions;
}

/// Counts (table, g) fixed pairs over tables with codes in [begin, end).
std::uint64_t fixed_pairs(const std::vector<TableAction>& actions, unsigned q, std::size_t n,
                          std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint8_t> table(n, 0);
    // Table digit 0 is the most significant in the code.
    std::uint64_t c = begin;
    for (std::size_t i = n; i-- > 0;) {
        table[i] = static_cast<std::uint8_t>(c % q);
        c /= q;
    }
    std::uint64_t total = 0;
    for (std::uint64_t code = begin; code < end; ++code) {
        for (const auto& a : actions) {
            bool fixed = true;
            for (std::size_t i = 0; i < n && fixed; ++i)
                fixed = table[i] == a.g[table[a.source[i]]];
            total += fixed;
        }
        for (std::size_t i = n; i-- > 0;) {
            if (++table[i] < q)
                break;
            table[i] = 0;
        }
    }
    return total;
}

} // namespace

std::uint64_t count_orbits_bruteforce(unsigned q, unsigned k, Level level,
                                      const BruteForceOptions& options) {
    auto total_rules = count_rules(q, k, level);
    if (total_rules > options.cap)
        throw Error(ErrorCode::CapExceeded,
                    "brute force would enumerate " + total_rules.str() +
                        " tables, above the cap of " + std::to_string(options.cap));
    const auto rules = total_rules.convert_to<std::uint64_t>();
    const std::size_t n = table_size(q, k, level);
    const auto actions = build_actions(q, k, level);

    unsigned workers = std::max(1u, options.workers);
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, rules));
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = rules * w / workers;
        std::uint64_t end = rules * (w + 1) / workers;
        if (workers == 1)
            partial[w] = fixed_pairs(actions, q, n, begin, end);
        else
            pool.emplace_back([&, w, begin, end] { partial[w] = fixed_pairs(actions, q, n, begin, end); });
    }
    for (auto& t : pool)
        t.join();

    std::uint64_t sum = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    std::uint64_t group_order = actions.size();
    if (sum % group_order != 0)
        throw Error(ErrorCode::Domain, "Burnside average is not an integer");
    return sum / group_order;
}

OrbitRepEnumerator::OrbitRepEnumerator(unsigned k, Level level, std::uint64_t cap)
    : k_(k), level_(level), bits_(static_cast<unsigned>(table_size(2, k, level))) {
    if (bits_ >= 63 || (std::uint64_t{1} << bits_) > cap)
        throw Error(ErrorCode::CapExceeded,
                    "enumeration would visit 2^" + std::to_string(bits_) +
                        " tables, above the cap of " + std::to_string(cap));
    end_ = std::uint64_t{1} << bits_;
}

std::optional<SymmetricRule> OrbitRepEnumerator::next() {
    // Codes read alpha_1 as the most significant bit, so numeric order is
    // lexicographic table order. The swap maps a code to its bit-reversed
    // complement; a code is canonical when it is not larger than that image.
    const std::uint64_t mask = end_ - 1;
    while (code_ < end_) {
        std::uint64_t code = code_++;
        std::uint64_t reversed = 0;
        for (unsigned b = 0; b < bits_; ++b)
            reversed |= ((code >> b) & 1u) << (bits_ - 1 - b);
        std::uint64_t image = ~reversed & mask;
        if (code > image)
            continue;
        std::vector<std::uint8_t> table(bits_);
        for (unsigned i = 0; i < bits_; ++i)
            table[i] = static_cast<std::uint8_t>((code >> (bits_ - 1 - i)) & 1u);
        return SymmetricRule(2, k_, level_, std::move(table));
    }
    return std::nullopt;
}

} // namespace symca
