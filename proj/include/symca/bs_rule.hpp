#pragma once

#include "symca/rule.hpp"

#include <set>
#include <string>
#include <string_view>

namespace symca {

/// Birth/survival form of a binary outer-totalistic rule.
struct BSRule {
    unsigned k = 8;
    std::set<unsigned> birth;
    std::set<unsigned> survival;

    friend bool operator==(const BSRule&, const BSRule&) = default;
};

SymmetricRule bs_to_rule(const BSRule& bs);
BSRule rule_to_bs(const SymmetricRule& rule);

/// "B3/S23" for k <= 9; comma-separated counts ("B3,10/S2,3") otherwise.
/// Commas are also accepted for k <= 9.
BSRule parse_bs(std::string_view text, unsigned k);
std::string format_bs(const BSRule& bs);

bool looks_like_bs(std::string_view text);

} // namespace symca
