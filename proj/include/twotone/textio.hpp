// Canonical text formats, parsers, and renderers.
//
// Word text
//   canonical:  "m=<m>:<letters>" with comma-separated decimal letters,
//               e.g. "m=8:7,7,9,3,2,9,9,1,9,9,0,0"; the empty word is "m=8:".
//   compact:    bare digit string with m supplied out of band, accepted on
//               input only while the alphabet fits single digits (m+1 <= 9),
//               e.g. "779329919900" with m = 8.
//   format_word always emits the canonical form.
//
// Tiling text
//   space-separated tokens: "R" for a red square, "B<len>" for a blue strip,
//   e.g. "R B1 B2 R R R R B1 R B3 R B3 R B1 B1". "R1" is tolerated on input.
//
// render_ascii draws one cell view per tile ("[r]", "[bbb]"); render_svg
// emits one rect per tile with fixed fills #f2b8b8 (red) / #b8c4f2 (blue)
// and stroke black, byte-deterministic for fixed input.

#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twotone/tilings.hpp"
#include "twotone/words.hpp"

namespace twotone {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what), position_(position) {}

    // 1-based character position of the offense.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Parses a run of decimal digits; `at` is the 0-based offset for messages.
inline int parse_int(std::string_view digits, std::size_t at, const char* what) {
    int value = 0;
    const char* first = digits.data();
    const char* last = first + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(at + 1, std::string(what) + " out of range at position " +
                                     std::to_string(at + 1));
    }
    if (ec != std::errc() || ptr != last || digits.empty()) {
        throw ParseError(at + 1, std::string("expected ") + what + " at position " +
                                     std::to_string(at + 1));
    }
    return value;
}

}  // namespace detail

inline std::string format_word(const Word& w) {
    std::string out = "m=" + std::to_string(w.m()) + ":";
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

inline Word parse_word(std::string_view text, std::optional<int> m = std::nullopt) {
    if (text.starts_with("m=")) {
        const std::size_t colon = text.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(text.size() + 1, "expected ':' after the m prefix");
        }
        const int embedded = detail::parse_int(text.substr(2, colon - 2), 2, "parameter m");
        if (m.has_value() && *m != embedded) {
            throw ParseError(3, "word is marked m=" + std::to_string(embedded) +
                                    " but m=" + std::to_string(*m) + " was requested");
        }
        std::vector<int> letters;
        std::size_t pos = colon + 1;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            const bool last = comma == std::string_view::npos;
            if (last) comma = text.size();
            letters.push_back(
                detail::parse_int(text.substr(pos, comma - pos), pos, "letter"));
            if (last) break;
            pos = comma + 1;
            if (pos >= text.size()) {
                throw ParseError(comma + 1, "trailing comma in letter list");
            }
        }
        return Word(embedded, std::move(letters));
    }
    if (!m.has_value()) {
        throw ParseError(1, "compact word form requires m to be supplied out of band");
    }
    if (*m + 1 > 9) {
        throw ParseError(1, "compact word form is ambiguous for m=" + std::to_string(*m) +
                                " (letters up to " + std::to_string(*m + 1) +
                                " do not fit single digits); use the canonical m=<m>:... form");
    }
    std::vector<int> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
            throw ParseError(i + 1, std::string("unexpected character '") + c +
                                        "' in compact word at position " + std::to_string(i + 1));
        }
        letters.push_back(c - '0');
    }
    return Word(*m, std::move(letters));
}

inline std::string format_tiling(const Tiling& t) {
    std::string out;
    for (const Tile& tile : t.tiles()) {
        if (!out.empty()) out += ' ';
        if (tile.color == TileColor::Red) {
            out += 'R';
        } else {
            out += 'B' + std::to_string(tile.length);
        }
    }
    return out;
}

// With m absent, the red count is taken from the tile sequence itself;
// an explicit m is validated against it.
inline Tiling parse_tiling(std::string_view text, std::optional<int> m = std::nullopt) {
    std::vector<Tile> tiles;
    int reds = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view token = text.substr(pos, end - pos);
        if (token[0] == 'R') {
            const int length =
                token.size() == 1 ? 1 : detail::parse_int(token.substr(1), pos + 1, "tile length");
            tiles.push_back(Tile{TileColor::Red, length});
            ++reds;
        } else if (token[0] == 'B') {
            tiles.push_back(Tile{TileColor::Blue,
                                 detail::parse_int(token.substr(1), pos + 1, "tile length")});
        } else {
            throw ParseError(pos + 1, "expected tile token 'R' or 'B<len>' at position " +
                                          std::to_string(pos + 1));
        }
        pos = end;
    }
    return Tiling(m.value_or(reds), std::move(tiles));
}

inline std::string render_ascii(const Tiling& t) {
    std::string out;
    for (const Tile& tile : t.tiles()) {
        out += '[';
        out.append(static_cast<std::size_t>(tile.length),
                   tile.color == TileColor::Red ? 'r' : 'b');
        out += ']';
    }
    return out;
}

inline std::string render_svg(const Tiling& t, int unit) {
    if (unit < 1) {
        throw std::invalid_argument("svg unit must be a positive pixel size");
    }
    const long long width = static_cast<long long>(t.length()) * unit;
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(unit) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(unit) + "\">\n";
    long long offset = 0;
    for (const Tile& tile : t.tiles()) {
        svg += "  <rect x=\"" + std::to_string(offset * unit) + "\" y=\"0\" width=\"" +
               std::to_string(static_cast<long long>(tile.length) * unit) + "\" height=\"" +
               std::to_string(unit) + "\" fill=\"" +
               (tile.color == TileColor::Red ? "#f2b8b8" : "#b8c4f2") +
               "\" stroke=\"black\"/>\n";
        offset += tile.length;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace twotone
