// The explicit bijection between W(m,n) and T(m,n), in both directions.
//
// Word -> tiling: decompose the word into topless letters w_1..w_k with gap
// lengths l_1..l_k and emit, with w_{k+1} = 0,
//   m - w_1 red squares,
//   then for each i: a blue strip of length l_i + 1 followed by
//   w_i - w_{i+1} red squares.
// Tiling -> word: with blue lengths |B_1|..|B_k| and red gaps r_0..r_k, emit
// for each i the letter m - (r_0 + ... + r_{i-1}) followed by |B_i| - 1
// copies of the top letter m+1.
//
// Both constructions are total for k = 0 as well: the empty word pairs with
// the all-red tiling.

#pragma once

#include <vector>

#include "twotone/tilings.hpp"
#include "twotone/words.hpp"

namespace twotone {

inline Tiling word_to_tiling(const Word& w) {
    const Decomposition d = decompose(w);
    const std::size_t k = d.topless.size();
    std::vector<Tile> tiles;
    const int first = k > 0 ? d.topless[0] : 0;
    tiles.insert(tiles.end(), static_cast<std::size_t>(w.m() - first), Tile::red());
    for (std::size_t i = 0; i < k; ++i) {
        tiles.push_back(Tile::blue(d.gaps[i] + 1));
        const int next = i + 1 < k ? d.topless[i + 1] : 0;
        tiles.insert(tiles.end(), static_cast<std::size_t>(d.topless[i] - next), Tile::red());
    }
    // The constructor re-checks membership in T(m,n): m red squares (the red
    // lengths telescope to m) and blue lengths summing to n.
    return Tiling(w.m(), std::move(tiles));
}

inline Word tiling_to_word(const Tiling& t) {
    const BlueProfile profile = blue_profile(t);
    std::vector<int> letters;
    int reds_seen = 0;
    for (std::size_t i = 0; i < profile.blue_lengths.size(); ++i) {
        reds_seen += profile.red_gaps[i];
        letters.push_back(t.m() - reds_seen);
        letters.insert(letters.end(), static_cast<std::size_t>(profile.blue_lengths[i] - 1),
                       t.m() + 1);
    }
    // Membership in W(m,n) is re-checked by the constructor; the extracted
    // topless letters are weakly decreasing because every r_i >= 0.
    return Word(t.m(), std::move(letters));
}

}  // namespace twotone
