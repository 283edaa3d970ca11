#include "paw/word.hpp"

#include <stdexcept>

namespace paw {

Word Word::parse(std::string_view text) {
    if (text.empty() || text == "ε") {
        return Word{};
    }
    return from_digits(text);
}

Word Word::from_digits(std::string_view digits) {
    for (char c : digits) {
        if (c < '1' || c > '9') {
            throw parse_error("invalid word \"" + std::string(digits) +
                              "\": expected digits 1-9");
        }
    }
    return Word{std::string(digits)};
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    std::string d;
    d.reserve(letters.size());
    for (Letter l : letters) {
        if (l < 1 || l > 9) {
            throw parse_error("letter out of range 1..9");
        }
        d.push_back(static_cast<char>('0' + l));
    }
    return Word{std::move(d)};
}

Letter Word::at(std::size_t i) const {
    if (i >= digits_.size()) {
        throw std::out_of_range("word index out of range");
    }
    return digits_[i] - '0';
}

Word Word::suffix(std::size_t m) const {
    if (m > digits_.size()) {
        throw std::invalid_argument("suffix length exceeds word length");
    }
    return Word{digits_.substr(digits_.size() - m)};
}

Word Word::drop_suffix(std::size_t m) const {
    if (m > digits_.size()) {
        throw std::invalid_argument("suffix length exceeds word length");
    }
    return Word{digits_.substr(0, digits_.size() - m)};
}

Word Word::append(Letter l) const {
    if (l < 1 || l > 9) {
        throw parse_error("letter out of range 1..9");
    }
    std::string d = digits_;
    d.push_back(static_cast<char>('0' + l));
    return Word{std::move(d)};
}

Word Word::append(const Word& tail) const {
    return Word{digits_ + tail.digits_};
}

Word Word::append(std::string_view digit_tail) const {
    return append(Word::from_digits(digit_tail));
}

PatternAtom PatternAtom::literal(Letter l) {
    if (l < 1 || l > 9) {
        throw parse_error("pattern letter out of range 1..9");
    }
    return PatternAtom{l};
}

Pattern Pattern::parse(std::string_view text) {
    if (text.empty()) {
        throw parse_error("pattern must be nonempty");
    }
    Pattern p;
    p.atoms_.reserve(text.size());
    for (char c : text) {
        if (c == '.') {
            p.atoms_.push_back(PatternAtom::wildcard());
        } else if (c >= '1' && c <= '9') {
            p.atoms_.push_back(PatternAtom::literal(c - '0'));
        } else {
            throw parse_error("invalid pattern \"" + std::string(text) +
                              "\": expected digits 1-9 or '.'");
        }
    }
    return p;
}

std::string Pattern::display() const {
    std::string s;
    s.reserve(atoms_.size());
    for (const PatternAtom& a : atoms_) {
        s.push_back(a.letter == 0 ? '.' : static_cast<char>('0' + a.letter));
    }
    return s;
}

bool Pattern::matches_at(const Word& w, std::size_t pos) const {
    if (pos + atoms_.size() > w.size()) {
        return false;
    }
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
        if (!atoms_[j].matches(w.at(pos + j))) {
            return false;
        }
    }
    return true;
}

bool contains_factor(const Word& w, const Pattern& p) {
    if (p.size() > w.size()) {
        return false;
    }
    for (std::size_t pos = 0; pos + p.size() <= w.size(); ++pos) {
        if (p.matches_at(w, pos)) {
            return true;
        }
    }
    return false;
}

bool avoids_all(const Word& w, const std::vector<Pattern>& ps) {
    for (const Pattern& p : ps) {
        if (contains_factor(w, p)) {
            return false;
        }
    }
    return true;
}

bool is_walk(const Word& w, Letter max_letter) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        Letter l = w.at(i);
        if (l < 1 || l > max_letter) {
            return false;
        }
        if (i > 0) {
            Letter prev = w.at(i - 1);
            if (l - prev != 1 && prev - l != 1) {
                return false;
            }
        }
    }
    return true;
}

} // namespace paw
