// Exhaustive cross-verification over a parameter grid: for each (m,n) the
// four counts (word enumeration, tiling enumeration, closed form, GF
// coefficient) must agree exactly, and the bijection must round-trip in both
// directions with an injective image.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "twotone/bijection.hpp"
#include "twotone/counting.hpp"
#include "twotone/textio.hpp"

namespace twotone {

struct VerificationRow {
    int m = 0;
    int n = 0;
    BigCount word_count;
    BigCount tiling_count;
    BigCount closed_form;
    BigCount gf;
    bool roundtrip_ok = false;

    bool ok() const {
        return roundtrip_ok && word_count == tiling_count && word_count == closed_form &&
               word_count == gf;
    }
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    bool overall = false;
    // Canonical text of the first object that broke a check, if any.
    std::optional<std::string> first_counterexample;
};

namespace detail {

inline bool verify_cell(int m, int n, VerificationRow& row,
                        std::optional<std::string>& counterexample) {
    row.m = m;
    row.n = n;
    row.closed_form = closed_form_count(m, n);
    row.gf = gf_coefficient(m, n);
    row.roundtrip_ok = true;

    std::vector<Tiling> images;
    row.word_count = 0;
    WordStream words(m, n);
    while (auto w = words.next()) {
        ++row.word_count;
        Tiling t = word_to_tiling(*w);
        if (!(tiling_to_word(t) == *w)) {
            row.roundtrip_ok = false;
            if (!counterexample) {
                counterexample = "word does not survive the roundtrip: " + format_word(*w);
            }
        }
        images.push_back(std::move(t));
    }

    std::sort(images.begin(), images.end());
    const auto dup = std::adjacent_find(images.begin(), images.end());
    if (dup != images.end()) {
        row.roundtrip_ok = false;
        if (!counterexample) {
            counterexample = "two words map to the same tiling: " + format_tiling(*dup);
        }
    }

    row.tiling_count = 0;
    std::size_t pos = 0;
    TilingStream tilings(m, n);
    while (auto t = tilings.next()) {
        ++row.tiling_count;
        if (!(word_to_tiling(tiling_to_word(*t)) == *t)) {
            row.roundtrip_ok = false;
            if (!counterexample) {
                counterexample = "tiling does not survive the roundtrip: " + format_tiling(*t);
            }
        }
        // images is sorted and TilingStream yields in the same canonical
        // order, so the image set matches T(m,n) iff the sequences align.
        if (pos >= images.size() || !(images[pos] == *t)) {
            row.roundtrip_ok = false;
            if (!counterexample) {
                counterexample = "tiling is not hit by any word: " + format_tiling(*t);
            }
        }
        ++pos;
    }
    if (pos != images.size()) row.roundtrip_ok = false;

    return row.ok();
}

}  // namespace detail

inline VerificationReport verify_grid(int max_m, int max_n) {
    if (max_m < 0 || max_n < 0) {
        throw std::invalid_argument("verification grid requires max_m, max_n >= 0");
    }
    VerificationReport report;
    report.overall = true;
    for (int m = 0; m <= max_m; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            VerificationRow row;
            if (!detail::verify_cell(m, n, row, report.first_counterexample)) {
                report.overall = false;
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace twotone
