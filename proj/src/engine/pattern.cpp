#include "symca/pattern.hpp"

#include "symca/error.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace symca {

PatternDocument import_rle(std::string_view text) {
    PatternDocument doc;
    bool has_header = false;
    std::size_t pos = 0;

    // Comment and header lines come first.
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(pos, end - pos));
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            pos = std::min(text.size(), end + 1);
            continue;
        }
        if (line[first] == 'x') {
            static const std::regex header(R"(^\s*x\s*=\s*(\d+)\s*,\s*y\s*=\s*(\d+)\s*(,.*)?\r?$)");
            std::smatch m;
            if (!std::regex_match(line, m, header))
                throw ParseError("malformed header, expected \"x = W, y = H\"", pos + first);
            doc.width = static_cast<unsigned>(std::stoul(m[1]));
            doc.height = static_cast<unsigned>(std::stoul(m[2]));
            has_header = true;
            pos = std::min(text.size(), end + 1);
        }
        break;
    }

    unsigned x = 0, y = 0, max_x = 0, max_y = 0;
    bool any_row_content = false;
    bool finished = false;
    while (pos < text.size() && !finished) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        unsigned run = 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            run = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                run = run * 10 + static_cast<unsigned>(text[pos++] - '0');
                if (run > 1'000'000)
                    throw ParseError("run length too large", start);
            }
            if (run == 0)
                throw ParseError("run length must be positive", start);
            if (pos >= text.size())
                throw ParseError("run count without a tag", start);
            c = text[pos];
        }
        ++pos;
        switch (c) {
        case 'b':
            x += run;
            break;
        case 'o':
            for (unsigned i = 0; i < run; ++i) {
                doc.live.emplace_back(x + i, y);
                max_x = std::max(max_x, x + i);
            }
            max_y = std::max(max_y, y);
            any_row_content = true;
            x += run;
            break;
        case '$':
            y += run;
            x = 0;
            break;
        case '!':
            finished = true;
            break;
        default:
            throw ParseError(std::string("unexpected run tag '") + c + "'", start);
        }
        if (has_header && (x > doc.width || (c == 'o' && y >= doc.height)))
            throw ParseError("pattern exceeds the header's " + std::to_string(doc.width) + "x" +
                                 std::to_string(doc.height) + " box",
                             start);
    }
    if (!finished)
        throw ParseError("missing '!' terminator", text.size());
    if (!has_header) {
        doc.width = any_row_content ? max_x + 1 : 0;
        doc.height = any_row_content ? max_y + 1 : 0;
    }
    std::sort(doc.live.begin(), doc.live.end(),
              [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    return doc;
}

std::string export_rle(const PatternDocument& pattern) {
    std::string body;
    auto emit = [&](unsigned run, char tag) {
        if (run == 0)
            return;
        if (run > 1)
            body += std::to_string(run);
        body.push_back(tag);
    };
    unsigned row = 0, col = 0, pending_rows = 0;
    std::size_t i = 0;
    while (i < pattern.live.size()) {
        auto [x, y] = pattern.live[i];
        if (y != row) {
            pending_rows = y - row;
            row = y;
            col = 0;
        }
        emit(pending_rows, '$');
        pending_rows = 0;
        emit(x - col, 'b');
        unsigned run = 1;
        while (i + run < pattern.live.size() && pattern.live[i + run].second == y &&
               pattern.live[i + run].first == x + run)
            ++run;
        emit(run, 'o');
        col = x + run;
        i += run;
    }
    body.push_back('!');

    std::string out = "x = " + std::to_string(pattern.width) + ", y = " + std::to_string(pattern.height) + "\n";
    // Wrap long bodies at 70 columns without splitting a run.
    std::size_t line_len = 0;
    std::size_t tok = 0;
    while (tok < body.size()) {
        std::size_t end = tok;
        while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end])))
            ++end;
        ++end;
        if (line_len + (end - tok) > 70) {
            out.push_back('\n');
            line_len = 0;
        }
        out.append(body, tok, end - tok);
        line_len += end - tok;
        tok = end;
    }
    out.push_back('\n');
    return out;
}

CAState place_pattern(const CAState& state, const Lattice& lattice, const PatternDocument& pattern,
                      unsigned dx, unsigned dy) {
    auto grid = lattice.grid();
    if (!grid)
        throw Error(ErrorCode::Unsupported, "patterns can only be placed on grid lattices");
    if (state.size() != lattice.cells())
        throw Error(ErrorCode::Mismatch, "state size does not match the lattice");
    std::vector<std::uint8_t> cells(state.cells().begin(), state.cells().end());
    for (auto [x, y] : pattern.live) {
        std::size_t px = std::size_t{x} + dx, py = std::size_t{y} + dy;
        if (px >= grid->width || py >= grid->height)
            throw Error(ErrorCode::Domain, "pattern cell (" + std::to_string(px) + "," +
                                               std::to_string(py) + ") falls outside the " +
                                               std::to_string(grid->width) + "x" +
                                               std::to_string(grid->height) + " grid");
        cells[py * grid->width + px] = 1;
    }
    return CAState(state.states(), std::move(cells), state.generation());
}

} // namespace symca
