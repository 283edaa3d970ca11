#include "paw/bijection_p1.hpp"

#include <algorithm>
#include <stdexcept>

#include "paw/errors.hpp"
#include "paw/families.hpp"

namespace paw::p1 {

namespace {

Word w(const char* digits) { return Word::from_digits(digits); }

void add(std::vector<std::pair<Word, Word>>& entries, const char* from, const char* to) {
    entries.emplace_back(w(from), w(to));
}

} // namespace

BaseTables default_base_tables() {
    BaseTables t;

    // g on p1c at n=1 and n=2.
    add(t.g_entries, "1212", "3");
    add(t.g_entries, "1232", "4");
    add(t.g_entries, "121212", "23");
    add(t.g_entries, "121232", "33");
    add(t.g_entries, "123212", "43");
    add(t.g_entries, "123232", "14");
    add(t.g_entries, "123456", "34");
    add(t.g_entries, "123432", "44");

    // f on p1b at n=1.
    add(t.f_entries, "121234", "1");
    add(t.f_entries, "123454", "2");
    add(t.f_entries, "123234", "3");
    add(t.f_entries, "123434", "4");

    // f on p1b at n=2: pair the three domain ending classes with the three
    // image ending classes, lexicographically within each class.
    const std::vector<Word> domain = enumerate_family(FamilyId::p1b, 2);
    const std::vector<Word> image = enumerate_family(FamilyId::p1a, 2);

    std::vector<Word> dom_end_434, dom_end_454, dom_rest;
    for (const Word& x : domain) {
        if (x.suffix(3) == w("434")) {
            dom_end_434.push_back(x);
        } else if (x.suffix(3) == w("454")) {
            dom_end_454.push_back(x);
        } else {
            dom_rest.push_back(x);
        }
    }
    std::vector<Word> img_end_1, img_end_2, img_rest;
    for (const Word& u : image) {
        if (u.last() == 1) {
            img_end_1.push_back(u);
        } else if (u.last() == 2) {
            img_end_2.push_back(u);
        } else {
            img_rest.push_back(u);
        }
    }
    if (dom_end_434.size() != img_end_1.size() || dom_end_454.size() != img_end_2.size() ||
        dom_rest.size() != img_rest.size()) {
        throw std::logic_error("p1 base construction: ending classes out of balance");
    }
    for (std::size_t i = 0; i < dom_end_434.size(); ++i) {
        t.f_entries.emplace_back(dom_end_434[i], img_end_1[i]);
    }
    for (std::size_t i = 0; i < dom_end_454.size(); ++i) {
        t.f_entries.emplace_back(dom_end_454[i], img_end_2[i]);
    }
    for (std::size_t i = 0; i < dom_rest.size(); ++i) {
        t.f_entries.emplace_back(dom_rest[i], img_rest[i]);
    }
    return t;
}

Engine::Engine() : Engine(default_base_tables()) {}

Engine::Engine(BaseTables tables) : tables_(std::move(tables)) {
    for (const auto& [from, to] : tables_.f_entries) {
        f_fwd_.emplace(from.digits(), to);
        f_rev_.emplace(to.digits(), from);
    }
    for (const auto& [from, to] : tables_.g_entries) {
        g_fwd_.emplace(from.digits(), to);
        g_rev_.emplace(to.digits(), from);
    }
}

const Word& Engine::find(const Lookup& table, const Word& key, const char* what) {
    const auto it = table.find(key.digits());
    if (it == table.end()) {
        throw domain_error(std::string(what) + ": no base entry for " + key.display());
    }
    return it->second;
}

Word Engine::f(int n, const Word& word) const {
    if (!membership(FamilyId::p1b, n, word)) {
        throw domain_error("p1f: " + word.display() + " is not in p1b at n=" +
                           std::to_string(n));
    }
    return f_rec(n, word);
}

Word Engine::g(int n, const Word& word) const {
    if (!membership(FamilyId::p1c, n, word)) {
        throw domain_error("p1g: " + word.display() + " is not in p1c at n=" +
                           std::to_string(n));
    }
    return g_rec(n, word);
}

Word Engine::f_inv(const Word& u) const {
    const int n = static_cast<int>(u.size());
    if (n < 1 || !membership(FamilyId::p1a, n, u)) {
        throw domain_error("p1f-inverse: " + u.display() + " is not in p1a");
    }
    return f_inv_rec(u);
}

Word Engine::g_inv(const Word& u) const {
    const int n = static_cast<int>(u.size());
    if (n < 1 || !membership(FamilyId::p1d, n, u)) {
        throw domain_error("p1g-inverse: " + u.display() + " is not in p1d");
    }
    return g_inv_rec(u);
}

// Domain words have length 2n+4 and end with 4. The three cases key on the
// letters at positions 2n+2 and 2n (1-based), i.e. the third- and
// fifth-from-last letters.
Word Engine::f_rec(int n, const Word& word) const {
    if (n <= 2) {
        return find(f_fwd_, word, "p1f");
    }
    const std::size_t len = word.size();
    if (word.at(len - 3) == 4) {
        // w'34 or w'54 with w' one step shorter in the domain.
        const Word rest = word.drop_suffix(2);
        return f_rec(n - 1, rest).append(word.at(len - 2) == 3 ? 1 : 2);
    }
    if (word.at(len - 5) == 4) {
        // w''3234 or w''5654 with w'' two steps shorter.
        const Word rest = word.drop_suffix(4);
        const bool low = word.suffix(4) == Word::from_digits("3234");
        return f_rec(n - 2, rest).append(low ? "23" : "14");
    }
    // Prefix of length 2n is a p1c word; dispatch on its last letter.
    const Word x = word.drop_suffix(4);
    const Word tail = word.suffix(4);
    const Word gx = g_rec(n - 1, x);
    if (x.last() == 2) {
        return gx.append(tail == Word::from_digits("1234") ? 3 : 4);
    }
    return gx.append(tail == Word::from_digits("5654") ? 3 : 4);
}

// Domain words have length 2n+2; the prefix of length 2n ends 2, 4 or 6.
Word Engine::g_rec(int n, const Word& word) const {
    if (n <= 2) {
        return find(g_fwd_, word, "p1g");
    }
    const Word x = word.drop_suffix(2);
    const Word tail = word.suffix(2);
    switch (x.last()) {
    case 4:
        return f_rec(n - 2, x).append(tail == Word::from_digits("32") ? "23" : "14");
    case 2:
        return g_rec(n - 1, x).append(tail == Word::from_digits("12") ? 3 : 4);
    case 6:
        return g_rec(n - 1, x).append(tail == Word::from_digits("56") ? 3 : 4);
    default:
        throw domain_error("p1g: prefix of " + word.display() + " ends " +
                           std::to_string(x.last()));
    }
}

// Inversion reads the image's suffix class: the last letter picks the case
// and, for the letter pair cases, the penultimate letter disambiguates.
Word Engine::f_inv_rec(const Word& u) const {
    const std::size_t n = u.size();
    if (n <= 2) {
        return find(f_rev_, u, "p1f-inverse");
    }
    const Letter last = u.last();
    const Letter pen = u.at(n - 2);
    if (last == 1) {
        return f_inv_rec(u.drop_suffix(1)).append("34");
    }
    if (last == 2) {
        return f_inv_rec(u.drop_suffix(1)).append("54");
    }
    if (last == 3 && pen == 2) {
        return f_inv_rec(u.drop_suffix(2)).append("3234");
    }
    if (last == 4 && pen == 1) {
        return f_inv_rec(u.drop_suffix(2)).append("5654");
    }
    if (last == 3 && (pen == 3 || pen == 4)) {
        const Word x = g_inv_rec(u.drop_suffix(1));
        return x.append(x.last() == 2 ? "1234" : "5654");
    }
    if (last == 4 && (pen == 3 || pen == 4)) {
        const Word x = g_inv_rec(u.drop_suffix(1));
        return x.append(x.last() == 2 ? "3234" : "7654");
    }
    throw domain_error("p1f-inverse: impossible suffix class in " + u.display());
}

Word Engine::g_inv_rec(const Word& u) const {
    const std::size_t n = u.size();
    if (n <= 2) {
        return find(g_rev_, u, "p1g-inverse");
    }
    const Letter last = u.last();
    const Letter pen = u.at(n - 2);
    if (last == 3 && pen == 2) {
        return f_inv_rec(u.drop_suffix(2)).append("32");
    }
    if (last == 4 && pen == 1) {
        return f_inv_rec(u.drop_suffix(2)).append("56");
    }
    if (last == 3 && (pen == 3 || pen == 4)) {
        const Word x = g_inv_rec(u.drop_suffix(1));
        return x.append(x.last() == 2 ? "12" : "56");
    }
    if (last == 4 && (pen == 3 || pen == 4)) {
        const Word x = g_inv_rec(u.drop_suffix(1));
        return x.append(x.last() == 2 ? "32" : "76");
    }
    throw domain_error("p1g-inverse: impossible suffix class in " + u.display());
}

} // namespace paw::p1
