// Two-toned tilings of a strip. A strip of length k is a 1 x k rectangle; a
// strip of length 1 is a square. A two-toned tiling of length m+n covers the
// strip, left to right, with exactly m red squares and arbitrarily many blue
// strips of positive length summing to n. Adjacent blue strips stay distinct
// tiles (B1 B2 and B3 are different tilings), so tiles form an ordered
// sequence and tiling equality is literal sequence equality.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twotone {

enum class TileColor { Red, Blue };

struct Tile {
    TileColor color;
    int length;

    static Tile red() { return {TileColor::Red, 1}; }
    static Tile blue(int length) {
        if (length < 1) {
            throw std::invalid_argument("blue strip length must be >= 1");
        }
        return {TileColor::Blue, length};
    }

    // Red < Blue, then shorter < longer: the canonical tile order.
    friend auto operator<=>(const Tile&, const Tile&) = default;
};

class TilingError : public std::invalid_argument {
public:
    enum class Code {
        RedCountMismatch,  // number of red squares differs from m
        RedNotSquare,      // red tile of length != 1
        EmptyBlueStrip,    // blue tile of length < 1
    };

    TilingError(Code code, std::size_t position, const std::string& what)
        : std::invalid_argument(what), code_(code), position_(position) {}

    Code code() const { return code_; }
    // 1-based tile index of the offense; 0 for RedCountMismatch.
    std::size_t position() const { return position_; }

private:
    Code code_;
    std::size_t position_;
};

// A validated two-toned tiling with exactly m red squares.
class Tiling {
public:
    Tiling(int m, std::vector<Tile> tiles) : m_(m), tiles_(std::move(tiles)) {
        if (m < 0) {
            throw std::invalid_argument("tiling parameter m must be >= 0");
        }
        int reds = 0;
        n_ = 0;
        for (std::size_t i = 0; i < tiles_.size(); ++i) {
            const Tile& t = tiles_[i];
            if (t.color == TileColor::Red) {
                if (t.length != 1) {
                    throw TilingError(TilingError::Code::RedNotSquare, i + 1,
                                      "red tile of length " + std::to_string(t.length) +
                                          " at position " + std::to_string(i + 1) +
                                          " (red tiles are squares)");
                }
                ++reds;
            } else {
                if (t.length < 1) {
                    throw TilingError(TilingError::Code::EmptyBlueStrip, i + 1,
                                      "blue strip of length " + std::to_string(t.length) +
                                          " at position " + std::to_string(i + 1) +
                                          " (strips have positive length)");
                }
                n_ += t.length;
            }
        }
        if (reds != m_) {
            throw TilingError(TilingError::Code::RedCountMismatch, 0,
                              "expected " + std::to_string(m_) + " red squares, found " +
                                  std::to_string(reds));
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int length() const { return m_ + n_; }
    const std::vector<Tile>& tiles() const { return tiles_; }

    friend bool operator==(const Tiling&, const Tiling&) = default;
    // Canonical order: lexicographic on the tile sequence.
    friend auto operator<=>(const Tiling& a, const Tiling& b) { return a.tiles_ <=> b.tiles_; }

private:
    int m_;
    int n_;  // sum of blue lengths
    std::vector<Tile> tiles_;
};

// Blue-strip lengths |B_1|,...,|B_k| in order, together with the red gap
// counts r_0,...,r_k around them: r_0 reds before B_1, r_i reds between B_i
// and B_{i+1}, r_k reds after B_k. sum(red_gaps) = m, sum(blue_lengths) = n.
struct BlueProfile {
    std::vector<int> blue_lengths;
    std::vector<int> red_gaps;  // always one longer than blue_lengths
};

inline BlueProfile blue_profile(const Tiling& t) {
    BlueProfile p;
    int run = 0;
    for (const Tile& tile : t.tiles()) {
        if (tile.color == TileColor::Red) {
            ++run;
        } else {
            p.red_gaps.push_back(run);
            run = 0;
            p.blue_lengths.push_back(tile.length);
        }
    }
    p.red_gaps.push_back(run);
    return p;
}

// Lazy single-consumer stream over T(m,n) in canonical order (lexicographic
// on tile sequences, Red < Blue, shorter blue < longer blue).
class TilingStream {
public:
    TilingStream(int m, int n) : m_(m), n_(n) {
        if (m < 0 || n < 0) {
            throw std::invalid_argument("tiling stream requires m, n >= 0");
        }
        cur_.assign(static_cast<std::size_t>(m), Tile::red());
        cur_.insert(cur_.end(), static_cast<std::size_t>(n), Tile{TileColor::Blue, 1});
    }

    std::optional<Tiling> next() {
        if (done_) return std::nullopt;
        if (first_) {
            first_ = false;
            return Tiling(m_, cur_);
        }
        if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
        return Tiling(m_, cur_);
    }

    int m() const { return m_; }
    int n() const { return n_; }

private:
    // Successor step: bump the rightmost tile that has a larger alternative
    // (red -> B1, blue len -> len+1, within the remaining blue budget), then
    // complete minimally with red squares followed by unit blue strips.
    bool advance() {
        int reds_before = m_;
        int blue_before = n_;
        for (int i = static_cast<int>(cur_.size()) - 1; i >= 0; --i) {
            const Tile t = cur_[static_cast<std::size_t>(i)];
            if (t.color == TileColor::Red) {
                --reds_before;
            } else {
                blue_before -= t.length;
            }
            const int blue_budget = n_ - blue_before;  // blue cells not used before i
            std::optional<Tile> bumped;
            if (t.color == TileColor::Red) {
                if (blue_budget >= 1) bumped = Tile{TileColor::Blue, 1};
            } else if (t.length + 1 <= blue_budget) {
                bumped = Tile{TileColor::Blue, t.length + 1};
            }
            if (bumped) {
                cur_.resize(static_cast<std::size_t>(i));
                cur_.push_back(*bumped);
                const int reds_left = m_ - reds_before;
                const int blue_left = blue_budget - bumped->length;
                cur_.insert(cur_.end(), static_cast<std::size_t>(reds_left), Tile::red());
                cur_.insert(cur_.end(), static_cast<std::size_t>(blue_left),
                            Tile{TileColor::Blue, 1});
                return true;
            }
        }
        return false;
    }

    int m_;
    int n_;
    bool first_ = true;
    bool done_ = false;
    std::vector<Tile> cur_;
};

inline std::vector<Tiling> all_tilings(int m, int n) {
    std::vector<Tiling> out;
    TilingStream stream(m, n);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace twotone
