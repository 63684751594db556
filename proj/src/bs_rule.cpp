#include "symca/bs_rule.hpp"

#include "symca/error.hpp"

#include <cctype>

namespace symca {

SymmetricRule bs_to_rule(const BSRule& bs) {
    std::vector<std::uint8_t> table(2 * bs.k + 2, 0);
    for (unsigned w : bs.birth) {
        if (w > bs.k)
            throw Error(ErrorCode::Domain, "birth count exceeds valence");
        table[2 * w] = 1;
    }
    for (unsigned w : bs.survival) {
        if (w > bs.k)
            throw Error(ErrorCode::Domain, "survival count exceeds valence");
        table[2 * w + 1] = 1;
    }
    return SymmetricRule(2, bs.k, Level::Leaves, std::move(table));
}

BSRule rule_to_bs(const SymmetricRule& rule) {
    if (!rule.binary() || rule.level() != Level::Leaves)
        throw Error(ErrorCode::Unsupported, "B/S form exists only for binary leaves-level rules");
    BSRule bs;
    bs.k = rule.valence();
    auto t = rule.table();
    for (unsigned w = 0; w <= bs.k; ++w) {
        if (t[2 * w])
            bs.birth.insert(w);
        if (t[2 * w + 1])
            bs.survival.insert(w);
    }
    return bs;
}

bool looks_like_bs(std::string_view text) {
    return !text.empty() && (text.front() == 'B' || text.front() == 'b') &&
           text.find('/') != std::string_view::npos;
}

namespace {

class BSParser {
public:
    BSParser(std::string_view text, unsigned k) : text_(text), k_(k) {}

    BSRule run() {
        BSRule bs;
        bs.k = k_;
        expect_letter('B');
        bs.birth = counts('/');
        expect('/');
        expect_letter('S');
        bs.survival = counts('\0');
        if (pos_ != text_.size())
            throw ParseError("trailing characters", pos_);
        return bs;
    }

private:
    void expect_letter(char upper) {
        if (pos_ >= text_.size() || std::toupper(static_cast<unsigned char>(text_[pos_])) != upper)
            throw ParseError(std::string("expected '") + upper + "'", pos_);
        ++pos_;
    }

    void expect(char ch) {
        if (pos_ >= text_.size() || text_[pos_] != ch)
            throw ParseError(std::string("expected '") + ch + "'", pos_);
        ++pos_;
    }

    std::set<unsigned> counts(char stop) {
        std::set<unsigned> out;
        bool expect_item = false;
        while (pos_ < text_.size() && text_[pos_] != stop) {
            std::size_t start = pos_;
            if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected a neighbor count", pos_);
            unsigned value = 0;
            if (k_ <= 9) {
                value = static_cast<unsigned>(text_[pos_++] - '0');
            } else {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    value = value * 10 + static_cast<unsigned>(text_[pos_++] - '0');
                    if (value > 1000000)
                        throw ParseError("neighbor count too large", start);
                }
            }
            if (value > k_)
                throw ParseError("count " + std::to_string(value) + " exceeds valence " +
                                     std::to_string(k_), start);
            if (!out.insert(value).second)
                throw ParseError("repeated count " + std::to_string(value), start);
            expect_item = false;
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                expect_item = true;
            } else if (k_ > 9 && pos_ < text_.size() && text_[pos_] != stop) {
                throw ParseError("expected ',' between counts", pos_);
            }
        }
        if (expect_item)
            throw ParseError("dangling ','", pos_ - 1);
        return out;
    }

    std::string_view text_;
    unsigned k_;
    std::size_t pos_ = 0;
};

} // namespace

BSRule parse_bs(std::string_view text, unsigned k) {
    if (k < 1)
        throw Error(ErrorCode::Domain, "valence must be at least 1");
    return BSParser(text, k).run();
}

std::string format_bs(const BSRule& bs) {
    auto join = [&](const std::set<unsigned>& s) {
        std::string out;
        for (unsigned v : s) {
            if (bs.k > 9 && !out.empty())
                out.push_back(',');
            out += std::to_string(v);
        }
        return out;
    };
    return "B" + join(bs.birth) + "/S" + join(bs.survival);
}

} // namespace symca
