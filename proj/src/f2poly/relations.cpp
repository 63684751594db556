#include "symca/relations.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace symca {

struct SigmaNode {
    enum class Kind { Constant, Variable, HoleVariable, Sigma, Sum, Product };

    Kind kind;
    unsigned value = 0; // constant, variable index, or sigma degree
    char hole = 0;
    std::string omitted; // sigma superscript holes
    std::vector<std::shared_ptr<const SigmaNode>> children;
};

namespace {

using NodePtr = std::shared_ptr<const SigmaNode>;

bool is_hole(char c) { return c == 'i' || c == 'j' || c == 'k' || c == 'l'; }

class SigmaParser {
public:
    SigmaParser(std::string_view text, unsigned leaves) : text_(text), leaves_(leaves) {}

    NodePtr run() {
        auto root = expr();
        skip();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return root;
    }

    std::string holes() const {
        std::string h = holes_;
        std::sort(h.begin(), h.end());
        h.erase(std::unique(h.begin(), h.end()), h.end());
        return h;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_sigma() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == 's')
            return true;
        return text_.substr(pos_, 2) == "\xCF\x83"; // UTF-8 sigma
    }

    bool starts_factor() {
        skip();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '0' || c == '1' || c == 'x' || c == '(' || c == '{' || at_sigma();
    }

    NodePtr expr() {
        std::vector<NodePtr> terms{term()};
        while (at('+')) {
            ++pos_;
            terms.push_back(term());
        }
        if (terms.size() == 1)
            return terms.front();
        return std::make_shared<SigmaNode>(SigmaNode{SigmaNode::Kind::Sum, 0, 0, {}, std::move(terms)});
    }

    NodePtr term() {
        std::vector<NodePtr> factors{factor()};
        for (;;) {
            if (at('*')) {
                ++pos_;
                factors.push_back(factor());
            } else if (starts_factor()) {
                factors.push_back(factor());
            } else {
                break;
            }
        }
        if (factors.size() == 1)
            return factors.front();
        return std::make_shared<SigmaNode>(
            SigmaNode{SigmaNode::Kind::Product, 0, 0, {}, std::move(factors)});
    }

    unsigned number() {
        std::size_t start = pos_;
        unsigned v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
            if (v > 1000)
                throw ParseError("index too large", start);
        }
        if (pos_ == start)
            throw ParseError("expected an index", pos_);
        return v;
    }

    NodePtr variable_node(unsigned index, std::size_t where, bool primed) {
        unsigned var;
        if (primed) {
            if (index != leaves_ + 1)
                throw ParseError("next-state variable must be x'_" + std::to_string(leaves_ + 1), where);
            var = leaves_ + 1;
        } else {
            if (index < 1 || index > leaves_ + 1)
                throw ParseError("variable x_" + std::to_string(index) + " is outside x_1..x_" +
                                     std::to_string(leaves_ + 1),
                                 where);
            var = index - 1;
        }
        return std::make_shared<SigmaNode>(SigmaNode{SigmaNode::Kind::Variable, var, 0, {}, {}});
    }

    NodePtr factor() {
        skip();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of expression", pos_);
        std::size_t start = pos_;
        char c = text_[pos_];
        if (c == '(' || c == '{') {
            char close = c == '(' ? ')' : '}';
            ++pos_;
            auto inner = expr();
            if (!at(close))
                throw ParseError(std::string("expected '") + close + "'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("only the constants 0 and 1 exist over GF(2)", start);
            return std::make_shared<SigmaNode>(
                SigmaNode{SigmaNode::Kind::Constant, static_cast<unsigned>(c - '0'), 0, {}, {}});
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '\'' || text_[pos_] == 'p')) {
                ++pos_;
                if (pos_ < text_.size() && text_[pos_] == '_')
                    ++pos_;
                return variable_node(number(), start, true);
            }
            if (pos_ < text_.size() && text_[pos_] == '_')
                ++pos_;
            if (pos_ < text_.size() && is_hole(text_[pos_])) {
                char h = text_[pos_++];
                holes_.push_back(h);
                return std::make_shared<SigmaNode>(
                    SigmaNode{SigmaNode::Kind::HoleVariable, 0, h, {}, {}});
            }
            return variable_node(number(), start, false);
        }
        if (at_sigma()) {
            pos_ += text_[pos_] == 's' ? 1 : 2;
            std::string omitted;
            std::optional<unsigned> degree;
            for (int part = 0; part < 2; ++part) {
                if (pos_ < text_.size() && text_[pos_] == '^' && omitted.empty()) {
                    ++pos_;
                    bool braced = pos_ < text_.size() && text_[pos_] == '{';
                    if (braced)
                        ++pos_;
                    while (pos_ < text_.size() && is_hole(text_[pos_]))
                        omitted.push_back(text_[pos_++]);
                    if (omitted.empty())
                        throw ParseError("expected hole letters after '^'", pos_);
                    if (braced) {
                        if (pos_ >= text_.size() || text_[pos_] != '}')
                            throw ParseError("expected '}'", pos_);
                        ++pos_;
                    }
                } else if (pos_ < text_.size() && text_[pos_] == '_' && !degree) {
                    ++pos_;
                    degree = number();
                } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) &&
                           !degree) {
                    degree = number();
                }
            }
            if (!degree)
                throw ParseError("elementary symmetric polynomial needs a degree", pos_);
            auto sorted = omitted;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw ParseError("hole omitted twice", start);
            holes_ += omitted;
            return std::make_shared<SigmaNode>(
                SigmaNode{SigmaNode::Kind::Sigma, *degree, 0, std::move(omitted), {}});
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    unsigned leaves_;
    std::size_t pos_ = 0;
    std::string holes_;
};

F2Poly expand(const SigmaNode& node, unsigned leaves, const std::string& holes,
              std::span<const unsigned> values) {
    auto hole_value = [&](char h) { return values[holes.find(h)]; };
    switch (node.kind) {
    case SigmaNode::Kind::Constant:
        return node.value ? F2Poly::one(leaves) : F2Poly(leaves);
    case SigmaNode::Kind::Variable:
        return F2Poly::variable(leaves, node.value);
    case SigmaNode::Kind::HoleVariable:
        return F2Poly::variable(leaves, hole_value(node.hole) - 1);
    case SigmaNode::Kind::Sigma: {
        std::vector<unsigned> vars;
        for (unsigned v = 0; v < leaves; ++v) {
            bool skip = std::any_of(node.omitted.begin(), node.omitted.end(),
                                    [&](char h) { return hole_value(h) - 1 == v; });
            if (!skip)
                vars.push_back(v);
        }
        return esym(node.value, vars, leaves);
    }
    case SigmaNode::Kind::Sum: {
        F2Poly acc(leaves);
        for (const auto& c : node.children)
            acc += expand(*c, leaves, holes, values);
        return acc;
    }
    case SigmaNode::Kind::Product: {
        F2Poly acc = F2Poly::one(leaves);
        for (const auto& c : node.children)
            acc *= expand(*c, leaves, holes, values);
        return acc;
    }
    }
    return F2Poly(leaves);
}

} // namespace

RelationTemplate::RelationTemplate(std::string_view text, unsigned leaves)
    : text_(text), leaves_(leaves) {
    if (leaves < 1 || leaves > F2Poly::kMaxLeaves)
        throw Error(ErrorCode::Domain, "template leaf count out of range");
    SigmaParser parser(text, leaves);
    root_ = parser.run();
    holes_ = parser.holes();
    if (holes_.size() > leaves)
        throw Error(ErrorCode::Domain, "more holes than leaves");
}

std::vector<std::vector<unsigned>> RelationTemplate::admissible_tuples() const {
    std::vector<std::vector<unsigned>> out;
    const std::size_t h = holes_.size();
    std::vector<unsigned> pick(h);
    for (std::size_t i = 0; i < h; ++i)
        pick[i] = static_cast<unsigned>(i + 1);
    for (;;) {
        out.push_back(pick);
        std::size_t i = h;
        while (i > 0 && pick[i - 1] == leaves_ - h + i)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < h; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

F2Poly RelationTemplate::instantiate(std::span<const unsigned> hole_values) const {
    if (hole_values.size() != holes_.size())
        throw Error(ErrorCode::Domain, "template has " + std::to_string(holes_.size()) +
                                           " holes, got " + std::to_string(hole_values.size()) +
                                           " values");
    for (std::size_t i = 0; i < hole_values.size(); ++i) {
        if (hole_values[i] < 1 || hole_values[i] > leaves_)
            throw Error(ErrorCode::Domain, "hole value outside 1.." + std::to_string(leaves_));
        if (i > 0 && hole_values[i] <= hole_values[i - 1])
            throw Error(ErrorCode::Domain, "hole values must be strictly increasing");
    }
    return expand(*root_, leaves_, holes_, hole_values);
}

F2Poly parse_polynomial(std::string_view text, unsigned leaves) {
    RelationTemplate t(text, leaves);
    if (!t.holes().empty())
        throw Error(ErrorCode::Parse, "expression has free holes: " + t.holes());
    return t.instantiate({});
}

std::string_view to_string(NamedRule name) {
    switch (name) {
    case NamedRule::ConwaysLife: return "ConwaysLife";
    case NamedRule::HighLife: return "HighLife";
    case NamedRule::DayAndNight: return "DayAndNight";
    }
    return "unknown";
}

NamedRule parse_named_rule(std::string_view text) {
    std::string lower;
    for (char c : text)
        if (std::isalnum(static_cast<unsigned char>(c)))
            lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "conwayslife" || lower == "conway" || lower == "life")
        return NamedRule::ConwaysLife;
    if (lower == "highlife")
        return NamedRule::HighLife;
    if (lower == "dayandnight" || lower == "daynight")
        return NamedRule::DayAndNight;
    throw Error(ErrorCode::Parse, "unknown rule name '" + std::string(text) +
                                      "'; expected ConwaysLife, HighLife or DayAndNight");
}

BSRule named_rule_bs(NamedRule name) {
    switch (name) {
    case NamedRule::ConwaysLife: return {8, {3}, {2, 3}};
    case NamedRule::HighLife: return {8, {3, 6}, {2, 3}};
    case NamedRule::DayAndNight: return {8, {3, 6, 7, 8}, {3, 4, 6, 7, 8}};
    }
    throw Error(ErrorCode::Domain, "unknown rule");
}

std::string_view life_polynomial_text(NamedRule name) {
    switch (name) {
    case NamedRule::ConwaysLife:
        return "x'_9 + x_9 {s_7 + s_6 + s_3 + s_2} + s_7 + s_3";
    case NamedRule::HighLife:
        return "x'_9 + x_9 {s_3 + s_2} + s_6 + s_3";
    case NamedRule::DayAndNight:
        return "x'_9 + x_9 {s_7 + s_6 + s_5 + s_4} + s_8 + s_7 + s_6 + s_3";
    }
    throw Error(ErrorCode::Domain, "unknown rule");
}

F2Poly life_polynomial_fixture(NamedRule name) {
    return parse_polynomial(life_polynomial_text(name), 8);
}

std::vector<RelationTemplate> decomposition_fixture(NamedRule name) {
    std::vector<std::string_view> texts;
    switch (name) {
    case NamedRule::ConwaysLife:
        texts = {
            "x'_9 {s_3 + s_2 + 1} + s_7 + s_3",
            "x'_9 x_9 {s^i_2 + s^i_1} + x'_9 {s^i_2 + 1} + x_9 {s^i_7 + s^i_6 + s^i_3 + s^i_2}",
            "x'_9 {s^i_3 + s^i_2 + s^i_1 + 1}",
            "x'_9 (x_9 + 1) {s^{ij}_3 + s^{ij}_2 + s^{ij}_1 + 1}",
            "x'_9 x_i x_j x_k x_l",
        };
        break;
    case NamedRule::HighLife:
        texts = {
            "x'_9 {s_3 + s_2 + 1} + s_7 + s_3",
            "x'_9 x_9 {s^i_2 + s^i_1} + x'_9 {s^i_5 + s^i_2 + 1} + x_9 {s^i_7 + s^i_6 + s^i_3 + s^i_2}",
            "x'_9 {s^i_7 + s^i_3 + s^i_2 + s^i_1 + 1}",
            "x'_9 x_9 {s^{ij}_3 + s^{ij}_2 + s^{ij}_1 + 1}"
            " + x'_9 {s^{ij}_6 + s^{ij}_5 + s^{ij}_4 + s^{ij}_3 + s^{ij}_2 + s^{ij}_1 + 1}",
            "x'_9 x_9 x_i x_j x_k x_l",
        };
        break;
    case NamedRule::DayAndNight:
        texts = {
            "x'_9 {s_7 + s_6 + s_5 + s_4 + 1} + s_8 + s_7 + s_6 + s_3",
            "x'_9 x_9 {s^i_6 + s^i_5 + s^i_4 + s^i_3} + x'_9 {s^i_7 + s^i_6 + s^i_5 + s^i_2 + 1}"
            " + x_9 {s^i_7 + s^i_3} + s^i_6",
            "x'_9 {s^{ij}_5 + s^{ij}_4 + s^{ij}_3 + s^{ij}_2 + s^{ij}_1 + 1} + s^{ij}_6",
        };
        break;
    }
    std::vector<RelationTemplate> out;
    for (auto t : texts)
        out.emplace_back(t, 8);
    return out;
}

RelationTemplate day_and_night_combined_relation() {
    return RelationTemplate("x'_9 {s^i_4 + s^i_2 + 1} + s^i_6", 8);
}

RelationCheck verify_implied_relation(const SymmetricRule& rule, const RelationTemplate& relation) {
    if (!rule.binary())
        throw Error(ErrorCode::Unsupported, "relation checks need a binary rule");
    const unsigned k = rule.valence();
    if (k != relation.leaves())
        throw Error(ErrorCode::Mismatch, "rule valence " + std::to_string(k) +
                                             " differs from the template's " +
                                             std::to_string(relation.leaves()) + " leaves");
    const SymmetricRule table = rule.to_leaves();
    const std::uint32_t leaf_mask = (std::uint32_t{1} << k) - 1;

    std::vector<F2Poly::Monomial> allowed;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << (k + 1)); ++x) {
        auto live = static_cast<unsigned>(std::popcount(x & leaf_mask));
        auto next = table.apply(live, static_cast<std::uint8_t>(x >> k & 1u));
        allowed.push_back(x | (std::uint32_t{next} << (k + 1)));
    }

    RelationCheck result;
    result.assignments_per_tuple = allowed.size();
    for (const auto& tuple : relation.admissible_tuples()) {
        auto poly = relation.instantiate(tuple);
        ++result.tuples_checked;
        for (auto a : allowed)
            if (poly.eval(a)) {
                result.holds = false;
                result.counterexample = RelationCounterexample{tuple, a};
                return result;
            }
    }
    return result;
}

std::string format_assignment(F2Poly::Monomial assignment, unsigned leaves) {
    std::string out;
    for (unsigned v = 0; v <= leaves + 1; ++v) {
        if (!out.empty())
            out += " ";
        out += variable_name(v, leaves) + "=" + ((assignment >> v & 1u) ? "1" : "0");
    }
    return out;
}

} // namespace symca
