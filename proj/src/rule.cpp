#include "symca/rule.hpp"

#include "symca/bs_rule.hpp"
#include "symca/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace symca {

std::string_view to_string(Level level) {
    return level == Level::Leaves ? "leaves" : "full";
}

CompositionIndex::CompositionIndex(unsigned parts, unsigned total)
    : parts_(parts), total_(total) {
    if (parts < 1)
        throw Error(ErrorCode::Domain, "composition needs at least one part");
    long double span = 1;
    for (unsigned s = 1; s < parts; ++s)
        span *= static_cast<long double>(total) + 1;
    if (span > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
        throw Error(ErrorCode::Unsupported, "composition space too large to index");

    std::vector<unsigned> counts(parts, 0);
    // Assign n_{q-1}, ..., n_1 in turn; n_0 absorbs the remainder.
    auto fill = [&](auto&& self, unsigned part, unsigned left) -> void {
        if (part == 0) {
            counts[0] = left;
            codes_.push_back(encode(counts));
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            counts[part] = v;
            self(self, part - 1, left - v);
        }
        counts[part] = 0;
    };
    fill(fill, parts - 1, total);
    std::sort(codes_.begin(), codes_.end());
}

std::uint64_t CompositionIndex::encode(std::span<const unsigned> counts) const {
    std::uint64_t code = 0;
    std::uint64_t radix = std::uint64_t{total_} + 1;
    for (std::size_t s = counts.size(); s-- > 1;)
        code = code * radix + counts[s];
    return code;
}

std::size_t CompositionIndex::rank(std::span<const unsigned> counts) const {
    if (counts.size() != parts_)
        throw Error(ErrorCode::Domain, "composition has wrong number of parts");
    unsigned sum = 0;
    for (unsigned c : counts) {
        if (c > total_)
            throw Error(ErrorCode::Domain, "composition part exceeds total");
        sum += c;
    }
    if (sum != total_)
        throw Error(ErrorCode::Domain, "composition does not sum to " + std::to_string(total_));
    auto code = encode(counts);
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    return static_cast<std::size_t>(it - codes_.begin());
}

std::vector<unsigned> CompositionIndex::unrank(std::size_t index) const {
    if (index >= codes_.size())
        throw Error(ErrorCode::Domain, "composition rank out of range");
    std::vector<unsigned> counts(parts_, 0);
    std::uint64_t code = codes_[index];
    std::uint64_t radix = std::uint64_t{total_} + 1;
    unsigned used = 0;
    for (std::size_t s = 1; s < parts_; ++s) {
        counts[s] = static_cast<unsigned>(code % radix);
        code /= radix;
        used += counts[s];
    }
    counts[0] = total_ - used;
    return counts;
}

namespace {

std::size_t checked_binomial(unsigned n, unsigned r) {
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint32_t>::max())
            throw Error(ErrorCode::Unsupported, "rule table too large to materialize");
    }
    return static_cast<std::size_t>(acc);
}

void check_shape(unsigned q, unsigned k) {
    if (q < 2 || q > 256)
        throw Error(ErrorCode::Domain, "state count must be in 2..256");
    if (k < 1)
        throw Error(ErrorCode::Domain, "valence must be at least 1");
}

} // namespace

std::size_t table_size(unsigned q, unsigned k, Level level) {
    check_shape(q, k);
    if (level == Level::Leaves)
        return checked_binomial(k + q - 1, q - 1) * q;
    return checked_binomial(k + q, q - 1);
}

SymmetricRule::SymmetricRule(unsigned q, unsigned k, Level level, std::vector<std::uint8_t> table)
    : q_(q), k_(k), level_(level), table_(std::move(table)) {
    auto expected = table_size(q, k, level);
    if (table_.size() != expected)
        throw Error(ErrorCode::Domain, "rule table has " + std::to_string(table_.size()) +
                                           " entries, expected " + std::to_string(expected));
    for (auto v : table_)
        if (v >= q)
            throw Error(ErrorCode::Domain, "rule table entry out of state range");
}

SymmetricRule SymmetricRule::constant(unsigned q, unsigned k, Level level, std::uint8_t value) {
    return SymmetricRule(q, k, level, std::vector<std::uint8_t>(table_size(q, k, level), value));
}

std::uint8_t SymmetricRule::apply(unsigned live_leaves, std::uint8_t center) const {
    if (q_ != 2)
        throw Error(ErrorCode::Unsupported, "live-count lookup requires a binary rule");
    if (live_leaves > k_)
        throw Error(ErrorCode::Domain, "live leaf count exceeds valence");
    if (center >= 2)
        throw Error(ErrorCode::Domain, "center state out of range");
    if (level_ == Level::Leaves)
        return table_[2 * live_leaves + center];
    return table_[live_leaves + center];
}

std::uint8_t SymmetricRule::apply(std::span<const unsigned> leaf_counts, std::uint8_t center) const {
    if (center >= q_)
        throw Error(ErrorCode::Domain, "center state out of range");
    if (leaf_counts.size() != q_)
        throw Error(ErrorCode::Domain, "leaf composition must have one count per state");
    if (level_ == Level::Leaves) {
        CompositionIndex index(q_, k_);
        return table_[index.rank(leaf_counts) * q_ + center];
    }
    std::vector<unsigned> all(leaf_counts.begin(), leaf_counts.end());
    ++all[center];
    CompositionIndex index(q_, k_ + 1);
    return table_[index.rank(all)];
}

SymmetricRule SymmetricRule::to_leaves() const {
    if (level_ == Level::Leaves)
        return *this;
    CompositionIndex leaves(q_, k_);
    CompositionIndex full(q_, k_ + 1);
    std::vector<std::uint8_t> out(leaves.size() * q_);
    for (std::size_t r = 0; r < leaves.size(); ++r) {
        auto counts = leaves.unrank(r);
        for (unsigned c = 0; c < q_; ++c) {
            auto all = counts;
            ++all[c];
            out[r * q_ + c] = table_[full.rank(all)];
        }
    }
    return SymmetricRule(q_, k_, Level::Leaves, std::move(out));
}

std::string format_alpha(const SymmetricRule& rule) {
    if (rule.states() > 10)
        throw Error(ErrorCode::Unsupported, "digit strings need q <= 10");
    std::string out;
    out.reserve(rule.table().size());
    for (auto v : rule.table())
        out.push_back(static_cast<char>('0' + v));
    return out;
}

SymmetricRule parse_alpha(std::string_view text, unsigned q, unsigned k) {
    if (q > 10)
        throw Error(ErrorCode::Unsupported, "digit strings need q <= 10");
    std::vector<std::uint8_t> table;
    table.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch < '0' || ch >= static_cast<char>('0' + q))
            throw ParseError("expected a state digit below " + std::to_string(q), i);
        table.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    for (Level level : {Level::Leaves, Level::Full})
        if (table.size() == table_size(q, k, level))
            return SymmetricRule(q, k, level, std::move(table));
    throw Error(ErrorCode::Parse,
                "rule string of length " + std::to_string(text.size()) + " fits neither " +
                    std::to_string(table_size(q, k, Level::Leaves)) + " (leaves) nor " +
                    std::to_string(table_size(q, k, Level::Full)) + " (full) entries for q=" +
                    std::to_string(q) + ", k=" + std::to_string(k));
}

SymmetricRule parse_rule(std::string_view text, unsigned k, unsigned q) {
    if (looks_like_bs(text)) {
        if (q != 2)
            throw Error(ErrorCode::Unsupported, "B/S notation describes binary rules only");
        return bs_to_rule(parse_bs(text, k));
    }
    return parse_alpha(text, q, k);
}

namespace {

void require_binary(const SymmetricRule& rule) {
    if (!rule.binary())
        throw Error(ErrorCode::Unsupported, "black-white swap is defined for binary rules only");
}

} // namespace

SymmetricRule bw_transform(const SymmetricRule& rule) {
    require_binary(rule);
    auto t = rule.table();
    std::vector<std::uint8_t> out(t.rbegin(), t.rend());
    for (auto& v : out)
        v ^= 1;
    return SymmetricRule(2, rule.valence(), rule.level(), std::move(out));
}

bool is_bw_symmetric(const SymmetricRule& rule) {
    require_binary(rule);
    auto t = rule.table();
    for (std::size_t i = 0, n = t.size(); i < n; ++i)
        if (t[i] == t[n - 1 - i])
            return false;
    return true;
}

SymmetricRule canonical_rep(const SymmetricRule& rule) {
    auto swapped = bw_transform(rule);
    return swapped < rule ? swapped : rule;
}

} // namespace symca
