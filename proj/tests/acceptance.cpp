// Acceptance suite: nine end-to-end checks, one PASS/FAIL line each.
// Exits 0 iff every check passes. Runs standalone (no test framework).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twotone/twotone.hpp"

namespace {

using namespace twotone;

int failures = 0;

void report(int index, bool ok, const std::string& name) {
    std::printf("criterion %d: %s  %s\n", index, ok ? "PASS" : "FAIL", name.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string with_time(std::string name, double elapsed) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2f s)", elapsed);
    return name + buf;
}

oracle::TileSeq as_pairs(const Tiling& t) {
    oracle::TileSeq out;
    for (const Tile& tile : t.tiles()) {
        out.emplace_back(tile.color == TileColor::Red ? 'R' : 'B', tile.length);
    }
    return out;
}

// 1. The (2,3) cardinality is 25 by enumeration of both families, by the
//    closed-form binomial sum, and by the GF coefficient, in under a second.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    long words = 0;
    WordStream ws(2, 3);
    while (ws.next()) ++words;
    long tilings = 0;
    TilingStream ts(2, 3);
    while (ts.next()) ++tilings;
    const BigCount formula = closed_form_count(2, 3);
    const BigCount gf = gf_coefficient(2, 3);
    const double elapsed = seconds_since(start);
    const bool ok =
        words == 25 && tilings == 25 && formula == 25 && gf == 25 && elapsed < 1.0;
    report(1, ok, with_time("(2,3) cardinality is 25 by every counting route", elapsed));
}

// 2. The golden word -> tiling example.
void criterion_2() {
    const Word w(8, {7, 7, 9, 3, 2, 9, 9, 1, 9, 9, 0, 0});
    const Tiling expected(
        8, {Tile::red(), Tile::blue(1), Tile::blue(2), Tile::red(), Tile::red(),
            Tile::red(), Tile::red(), Tile::blue(1), Tile::red(), Tile::blue(3),
            Tile::red(), Tile::blue(3), Tile::red(), Tile::blue(1), Tile::blue(1)});
    report(2, word_to_tiling(w) == expected,
           "the (8,12) word maps to R B1 B2 R R R R B1 R B3 R B3 R B1 B1");
}

// 3. The golden tiling -> word example.
void criterion_3() {
    const Tiling t = parse_tiling("R B2 B2 R R B1 R B3 R B3 R");
    const Word expected(6, {5, 7, 5, 7, 3, 2, 7, 7, 1, 7, 7});
    report(3, tiling_to_word(t) == expected,
           "the (6,11) tiling maps back to 5,7,5,7,3,2,7,7,1,7,7");
}

// 4 + 5. One grid sweep shared by the bijectivity and count-agreement checks.
void criteria_4_and_5() {
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport report_45 = verify_grid(5, 7);
    const double elapsed = seconds_since(start);
    bool bijective = elapsed < 60.0;
    bool counts_agree = true;
    for (const auto& row : report_45.rows) {
        if (!row.roundtrip_ok) bijective = false;
        if (row.word_count != row.tiling_count || row.word_count != row.closed_form ||
            row.word_count != row.gf) {
            counts_agree = false;
        }
    }
    report(4, bijective,
           with_time("the bijection round-trips and is one-to-one onto for m <= 5, n <= 7",
                     elapsed));
    report(5, counts_agree, "all four counts agree on every cell of the same grid");
}

// 6. Library enumeration equals the brute-force oracles, sequence for sequence.
void criterion_6() {
    bool ok = true;
    for (int m = 0; m <= 3 && ok; ++m) {
        for (int n = 0; n <= 5 && ok; ++n) {
            const auto expected_words = oracle::words(m, n);
            const auto got_words = all_words(m, n);
            if (got_words.size() != expected_words.size()) ok = false;
            for (std::size_t i = 0; ok && i < got_words.size(); ++i) {
                if (got_words[i].letters() != expected_words[i]) ok = false;
            }
            const auto expected_tilings = oracle::tilings(m, n);
            const auto got_tilings = all_tilings(m, n);
            if (got_tilings.size() != expected_tilings.size()) ok = false;
            for (std::size_t i = 0; ok && i < got_tilings.size(); ++i) {
                if (as_pairs(got_tilings[i]) != expected_tilings[i]) ok = false;
            }
        }
    }
    report(6, ok, "enumeration matches the naive oracles for m <= 3, n <= 5");
}

// 7. decompose/recompose is the identity across the criterion-4 grid.
void criterion_7() {
    bool ok = true;
    for (int m = 0; m <= 5 && ok; ++m) {
        for (int n = 0; n <= 7 && ok; ++n) {
            WordStream stream(m, n);
            while (auto w = stream.next()) {
                if (!(recompose(decompose(*w)) == *w)) {
                    ok = false;
                    break;
                }
            }
        }
    }
    report(7, ok, "decompose/recompose round-trips every word for m <= 5, n <= 7");
}

// 8. Degenerate families by both counting methods.
void criterion_8() {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        const long expected = 1L << (n - 1);
        if (closed_form_count(0, n) != expected || gf_coefficient(0, n) != expected) {
            ok = false;
        }
    }
    for (int m = 0; m <= 10; ++m) {
        if (closed_form_count(m, 1) != m + 1 || gf_coefficient(m, 1) != m + 1) ok = false;
    }
    report(8, ok, "|W(0,n)| = 2^(n-1) and |W(m,1)| = m+1 by both counting methods");
}

// 9. parse/format identity across the criterion-4 grid, and byte-stable SVG.
void criterion_9() {
    bool ok = true;
    for (int m = 0; m <= 5 && ok; ++m) {
        for (int n = 0; n <= 7 && ok; ++n) {
            WordStream ws(m, n);
            while (auto w = ws.next()) {
                if (!(parse_word(format_word(*w)) == *w)) {
                    ok = false;
                    break;
                }
            }
            TilingStream ts(m, n);
            while (auto t = ts.next()) {
                if (!(parse_tiling(format_tiling(*t)) == *t) ||
                    render_svg(*t, 20) != render_svg(*t, 20)) {
                    ok = false;
                    break;
                }
            }
        }
    }
    const Tiling golden = parse_tiling("R B1 B2 R R R R B1 R B3 R B3 R B1 B1");
    if (render_svg(golden, 20) != render_svg(golden, 20)) ok = false;
    report(9, ok, "parse/format identity holds and SVG output is byte-deterministic");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criteria_4_and_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
