#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "paw/errors.hpp"

namespace paw {

/// Letters are small positive integers; every family here uses 1..7.
using Letter = int;

/// An immutable finite word over {1..9}, stored as decimal digit characters
/// so that string comparison is lexicographic comparison of equal-length
/// words and rendering is free. The empty word is a valid value.
class Word {
public:
    Word() = default;

    /// Accepts a string of digits 1..9. "" and the glyph "ε" both denote
    /// the empty word. Throws parse_error otherwise.
    static Word parse(std::string_view text);

    /// Same as parse but without the ε spelling; used by generators that
    /// already hold digit buffers.
    static Word from_digits(std::string_view digits);

    static Word from_letters(const std::vector<Letter>& letters);

    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }

    /// 0-based letter access.
    Letter at(std::size_t i) const;
    Letter first() const { return at(0); }
    Letter last() const { return at(size() - 1); }

    /// The last m letters. Pre: m <= size().
    Word suffix(std::size_t m) const;
    /// The word with its last m letters removed. Pre: m <= size().
    Word drop_suffix(std::size_t m) const;

    Word append(Letter l) const;
    Word append(const Word& tail) const;
    Word append(std::string_view digit_tail) const;

    /// Digit string; "" for the empty word. Suitable for CSV/JSON fields.
    const std::string& digits() const noexcept { return digits_; }
    /// Human-readable form; the empty word renders as "ε".
    std::string display() const { return digits_.empty() ? "ε" : digits_; }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    explicit Word(std::string digits) : digits_(std::move(digits)) {}
    std::string digits_;
};

/// One position of a pattern: a literal letter or a single-letter wildcard.
struct PatternAtom {
    Letter letter = 0; // 0 means wildcard

    static PatternAtom wildcard() { return PatternAtom{}; }
    static PatternAtom literal(Letter l);
    bool matches(Letter l) const { return letter == 0 || letter == l; }
    friend bool operator==(const PatternAtom&, const PatternAtom&) = default;
};

/// A nonempty factor pattern, matched against contiguous windows of a word.
class Pattern {
public:
    /// Digits 1..9 are literals, '.' is the single-letter wildcard.
    /// "1.3" forbids every window 1x3.
    static Pattern parse(std::string_view text);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<PatternAtom>& atoms() const noexcept { return atoms_; }
    std::string display() const;

    /// True when the window of w starting at pos matches atom-by-atom.
    bool matches_at(const Word& w, std::size_t pos) const;

private:
    std::vector<PatternAtom> atoms_;
};

/// True iff some contiguous window of w matches p.
bool contains_factor(const Word& w, const Pattern& p);

/// True iff no pattern of ps occurs in w.
bool avoids_all(const Word& w, const std::vector<Pattern>& ps);

/// True iff every letter is within 1..max_letter and successive letters
/// differ by exactly one. Words of length <= 1 are walks.
bool is_walk(const Word& w, Letter max_letter);

} // namespace paw
