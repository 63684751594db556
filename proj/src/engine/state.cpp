#include "symca/state.hpp"

#include "symca/error.hpp"

#include <random>
#include <sstream>

namespace symca {

CAState::CAState(unsigned q, std::vector<std::uint8_t> cells, std::uint64_t generation)
    : q_(q), cells_(std::move(cells)), generation_(generation) {
    if (q < 2 || q > 256)
        throw Error(ErrorCode::Domain, "state count must be in 2..256");
    for (auto v : cells_)
        if (v >= q)
            throw Error(ErrorCode::Domain, "cell value out of state range");
}

CAState CAState::filled(unsigned q, std::size_t cells, std::uint8_t value) {
    return CAState(q, std::vector<std::uint8_t>(cells, value));
}

CAState CAState::random(unsigned q, std::size_t cells, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::uint8_t> out(cells);
    for (auto& v : out)
        v = static_cast<std::uint8_t>(gen() % q);
    return CAState(q, std::move(out));
}

CAState CAState::with_cell(std::size_t cell, std::uint8_t value) const {
    if (cell >= cells_.size())
        throw Error(ErrorCode::Domain, "cell index out of range");
    auto copy = cells_;
    copy[cell] = value;
    return CAState(q_, std::move(copy), generation_);
}

CAState CAState::with_generation(std::uint64_t generation) const {
    return CAState(q_, cells_, generation);
}

CAState complement(const CAState& state) {
    if (state.states() != 2)
        throw Error(ErrorCode::Unsupported, "complement is defined for binary states only");
    std::vector<std::uint8_t> out(state.cells().begin(), state.cells().end());
    for (auto& v : out)
        v ^= 1;
    return CAState(2, std::move(out), state.generation());
}

std::vector<std::uint64_t> census(const CAState& state, const Lattice& lattice, bool interior_only) {
    if (state.size() != lattice.cells())
        throw Error(ErrorCode::Mismatch, "state size does not match the lattice");
    std::vector<std::uint64_t> counts(state.states(), 0);
    for (std::size_t c = 0; c < state.size(); ++c)
        if (!interior_only || !lattice.is_boundary(c))
            ++counts[state[c]];
    return counts;
}

namespace {

void check_text_alphabet(unsigned q) {
    if (q > 10)
        throw Error(ErrorCode::Unsupported, "text state files need q <= 10");
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        pos = end + 1;
    }
    return lines;
}

} // namespace

std::string format_state(const CAState& state, const Lattice& lattice) {
    check_text_alphabet(state.states());
    if (state.size() != lattice.cells())
        throw Error(ErrorCode::Mismatch, "state size does not match the lattice");
    std::string out = std::to_string(state.states()) + " " + std::to_string(lattice.valence()) + " " +
                      std::to_string(state.size()) + " " + std::to_string(state.generation()) + "\n";
    if (auto grid = lattice.grid()) {
        for (std::size_t y = 0; y < grid->height; ++y) {
            for (std::size_t x = 0; x < grid->width; ++x)
                out.push_back(static_cast<char>('0' + state[y * grid->width + x]));
            out.push_back('\n');
        }
    } else {
        for (auto v : state.cells()) {
            out.push_back(static_cast<char>('0' + v));
            out.push_back('\n');
        }
    }
    return out;
}

CAState parse_state(std::string_view text, const Lattice& lattice) {
    auto lines = split_lines(text);
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty())
        throw ParseError("missing header line", 0);
    std::istringstream header{std::string(lines[0])};
    unsigned q = 0, k = 0;
    std::size_t cells = 0;
    std::uint64_t generation = 0;
    if (!(header >> q >> k >> cells >> generation))
        throw ParseError("header must be \"q k V generation\"", 0);
    std::string extra;
    if (header >> extra)
        throw ParseError("trailing text in header", 0);
    check_text_alphabet(q);
    if (k != lattice.valence())
        throw Error(ErrorCode::Mismatch, "state file valence " + std::to_string(k) +
                                             " differs from the lattice's " +
                                             std::to_string(lattice.valence()));
    if (cells != lattice.cells())
        throw Error(ErrorCode::Mismatch, "state file has " + std::to_string(cells) +
                                             " cells, lattice has " + std::to_string(lattice.cells()));

    std::vector<std::uint8_t> values;
    values.reserve(cells);
    std::size_t offset = lines[0].size() + 1;
    const std::size_t row_width = lattice.grid() ? lattice.grid()->width : 1;
    const std::size_t rows = cells / row_width;
    if (lines.size() - 1 != rows)
        throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                             std::to_string(lines.size() - 1),
                         offset);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        auto line = lines[r];
        if (line.size() != row_width)
            throw ParseError("row " + std::to_string(r) + " should have " + std::to_string(row_width) +
                                 " digits",
                             offset);
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (c < '0' || c >= static_cast<char>('0' + q))
                throw ParseError("expected a state digit below " + std::to_string(q), offset + i);
            values.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        offset += line.size() + 1;
    }
    return CAState(q, std::move(values), generation);
}

std::string render_grid(const CAState& state, const Lattice& lattice) {
    if (state.size() != lattice.cells())
        throw Error(ErrorCode::Mismatch, "state size does not match the lattice");
    auto glyph = [&](std::uint8_t v) -> std::string {
        if (state.states() == 2)
            return v ? "#" : ".";
        return std::to_string(v);
    };
    std::string out;
    auto grid = lattice.grid();
    if (!grid || state.states() > 10) {
        for (std::size_t c = 0; c < state.size(); ++c)
            out += std::to_string(c) + ":" + std::to_string(state[c]) + "\n";
        return out;
    }
    for (std::size_t y = 0; y < grid->height; ++y) {
        for (std::size_t x = 0; x < grid->width; ++x)
            out += glyph(state[y * grid->width + x]);
        out.push_back('\n');
    }
    return out;
}

CAState parse_rendered_grid(std::string_view text, const Lattice& lattice, unsigned q) {
    auto grid = lattice.grid();
    if (!grid)
        throw Error(ErrorCode::Unsupported, "lattice has no grid shape");
    auto lines = split_lines(text);
    if (lines.size() != grid->height)
        throw ParseError("expected " + std::to_string(grid->height) + " rows", 0);
    std::vector<std::uint8_t> values;
    std::size_t offset = 0;
    for (auto line : lines) {
        if (line.size() != grid->width)
            throw ParseError("row width differs from the grid", offset);
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            int v = -1;
            if (q == 2 && (c == '.' || c == '#'))
                v = c == '#';
            else if (q > 2 && c >= '0' && c < static_cast<char>('0' + q))
                v = c - '0';
            if (v < 0)
                throw ParseError("unexpected cell glyph", offset + i);
            values.push_back(static_cast<std::uint8_t>(v));
        }
        offset += line.size() + 1;
    }
    return CAState(q, std::move(values));
}

} // namespace symca
