// (m,n)-words: definition, validation, lazy lexicographic enumeration, and
// the unique decomposition into topless letters and runs of the top letter.
//
// An (m,n)-word is a word w_1 w_2 ... w_n over the alphabet {0, 1, ..., m+1}
// subject to
//   MN1: w_1 != m+1, and
//   MN2: for 1 <= s <= m, w_i = s implies w_j >= s for all j < i.
// Equivalently, deleting every occurrence of m+1 leaves a weakly decreasing
// sequence over {0, ..., m}, and the word does not start with m+1. A word
// with no occurrence of m+1 at all is called topless.

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twotone {

class WordError : public std::invalid_argument {
public:
    enum class Code {
        LetterOutOfRange,      // letter outside {0, ..., m+1}
        ViolatesMN1,           // word starts with m+1
        ViolatesMN2,           // letter in {1, ..., m} preceded by a smaller letter
        InvalidDecomposition,  // recompose input breaks a decomposition invariant
    };

    WordError(Code code, std::size_t position, const std::string& what)
        : std::invalid_argument(what), code_(code), position_(position) {}

    Code code() const { return code_; }
    // 1-based letter index of the first offense; 0 when not tied to a position.
    std::size_t position() const { return position_; }

private:
    Code code_;
    std::size_t position_;
};

namespace detail {

struct WordFault {
    WordError::Code code;
    std::size_t position;  // 1-based
};

// Single left-to-right scan; reports the first offending position. At equal
// positions the range check wins over MN1/MN2.
inline std::optional<WordFault> scan_word(int m, std::span<const int> letters) {
    int min_so_far = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const int x = letters[i];
        if (x < 0 || x > m + 1) {
            return WordFault{WordError::Code::LetterOutOfRange, i + 1};
        }
        if (i == 0 && x == m + 1) {
            return WordFault{WordError::Code::ViolatesMN1, 1};
        }
        if (x >= 1 && x <= m && min_so_far < x) {
            return WordFault{WordError::Code::ViolatesMN2, i + 1};
        }
        min_so_far = std::min(min_so_far, x);
    }
    return std::nullopt;
}

[[noreturn]] inline void throw_word_fault(int m, const WordFault& f) {
    switch (f.code) {
        case WordError::Code::LetterOutOfRange:
            throw WordError(f.code, f.position,
                            "letter out of range {0,...," + std::to_string(m + 1) +
                                "} at position " + std::to_string(f.position));
        case WordError::Code::ViolatesMN1:
            throw WordError(f.code, 1,
                            "violates MN1: first letter is the top letter " +
                                std::to_string(m + 1));
        default:
            throw WordError(f.code, f.position,
                            "violates MN2: letter at position " + std::to_string(f.position) +
                                " is preceded by a smaller letter");
    }
}

}  // namespace detail

inline bool is_valid_word(int m, std::span<const int> letters) {
    return m >= 0 && !detail::scan_word(m, letters).has_value();
}

// A validated (m,n)-word. n is implicit as the number of letters.
class Word {
public:
    Word(int m, std::vector<int> letters) : m_(m), letters_(std::move(letters)) {
        if (m < 0 || m == std::numeric_limits<int>::max()) {
            throw std::invalid_argument("word parameter m out of range");
        }
        if (auto fault = detail::scan_word(m_, letters_)) {
            detail::throw_word_fault(m_, *fault);
        }
    }

    int m() const { return m_; }
    int n() const { return static_cast<int>(letters_.size()); }
    int top_letter() const { return m_ + 1; }
    const std::vector<int>& letters() const { return letters_; }

    bool topless() const {
        for (int x : letters_) {
            if (x == m_ + 1) return false;
        }
        return true;
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    int m_;
    std::vector<int> letters_;
};

// The unique split of an (m,n)-word into
//   w = topless[0] top^gaps[0] topless[1] top^gaps[1] ... topless[k-1] top^gaps[k-1]
// where top = m+1. topless is a weakly decreasing sequence over {0,...,m}
// (a topless (m,k)-word) and sum(gaps) = n - k.
struct Decomposition {
    int m = 0;
    std::vector<int> topless;
    std::vector<int> gaps;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Decomposition decompose(const Word& w) {
    Decomposition d;
    d.m = w.m();
    const auto& ls = w.letters();
    const int top = w.top_letter();
    std::size_t i = 0;
    while (i < ls.size()) {
        d.topless.push_back(ls[i]);  // ls[i] != top: runs attach to the letter before them
        ++i;
        int run = 0;
        while (i < ls.size() && ls[i] == top) {
            ++run;
            ++i;
        }
        d.gaps.push_back(run);
    }
    return d;
}

inline Word recompose(const Decomposition& d) {
    if (d.m < 0 || d.m == std::numeric_limits<int>::max()) {
        throw WordError(WordError::Code::InvalidDecomposition, 0,
                        "invalid decomposition: parameter m out of range");
    }
    if (d.topless.size() != d.gaps.size()) {
        throw WordError(WordError::Code::InvalidDecomposition, 0,
                        "invalid decomposition: topless and gaps lengths differ");
    }
    for (std::size_t i = 0; i < d.topless.size(); ++i) {
        const int x = d.topless[i];
        if (x < 0 || x > d.m) {
            throw WordError(WordError::Code::InvalidDecomposition, i + 1,
                            "invalid decomposition: topless letter out of {0,...,m} at position " +
                                std::to_string(i + 1));
        }
        if (i > 0 && d.topless[i - 1] < x) {
            throw WordError(WordError::Code::InvalidDecomposition, i + 1,
                            "invalid decomposition: topless letters not weakly decreasing at position " +
                                std::to_string(i + 1));
        }
        if (d.gaps[i] < 0) {
            throw WordError(WordError::Code::InvalidDecomposition, i + 1,
                            "invalid decomposition: negative gap at position " +
                                std::to_string(i + 1));
        }
    }
    std::vector<int> letters;
    for (std::size_t i = 0; i < d.topless.size(); ++i) {
        letters.push_back(d.topless[i]);
        letters.insert(letters.end(), static_cast<std::size_t>(d.gaps[i]), d.m + 1);
    }
    return Word(d.m, std::move(letters));
}

// Lazy single-consumer stream over W(m,n) in lexicographic order of letter
// sequences. Words are generated by a successor step, never post-filtered,
// so the full set need not fit in memory.
class WordStream {
public:
    WordStream(int m, int n) : m_(m), n_(n) {
        if (m < 0 || n < 0 || m == std::numeric_limits<int>::max()) {
            throw std::invalid_argument("word stream requires m, n >= 0");
        }
        cur_.assign(static_cast<std::size_t>(n), 0);
        min_before_.assign(static_cast<std::size_t>(n) + 1, m_ + 1);
        for (std::size_t j = 0; j < cur_.size(); ++j) {
            min_before_[j + 1] = std::min(min_before_[j], cur_[j]);
        }
    }

    std::optional<Word> next() {
        if (done_) return std::nullopt;
        if (first_) {
            first_ = false;
            if (n_ == 0) done_ = true;  // the empty word is the whole of W(m,0)
            return Word(m_, cur_);
        }
        if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
        return Word(m_, cur_);
    }

    int m() const { return m_; }
    int n() const { return n_; }

private:
    // Letters allowed at position i given the minimum of the letters before it:
    // {0, ..., min(min_before, m)}, plus m+1 everywhere except position 0.
    bool advance() {
        for (int i = n_ - 1; i >= 0; --i) {
            const std::size_t ui = static_cast<std::size_t>(i);
            const int cap = std::min(min_before_[ui], m_);
            const int x = cur_[ui];
            int y = -1;
            if (x < cap) {
                y = x + 1;
            } else if (x <= m_ && i > 0) {
                y = m_ + 1;
            }
            if (y >= 0) {
                cur_[ui] = y;
                for (std::size_t j = ui + 1; j < cur_.size(); ++j) cur_[j] = 0;
                for (std::size_t j = ui; j < cur_.size(); ++j) {
                    min_before_[j + 1] = std::min(min_before_[j], cur_[j]);
                }
                return true;
            }
        }
        return false;
    }

    int m_;
    int n_;
    bool first_ = true;
    bool done_ = false;
    std::vector<int> cur_;
    std::vector<int> min_before_;  // min_before_[i] = min of cur_[0..i-1], sentinel m+1
};

inline std::vector<Word> all_words(int m, int n) {
    std::vector<Word> out;
    WordStream stream(m, n);
    while (auto w = stream.next()) out.push_back(std::move(*w));
    return out;
}

}  // namespace twotone
