#include "paw/bijection_p2.hpp"

#include <stdexcept>

#include "paw/errors.hpp"
#include "paw/families.hpp"

namespace paw::p2 {

namespace {

void add(std::vector<std::pair<Word, Word>>& entries, const char* from, const char* to) {
    entries.emplace_back(Word::from_digits(from), Word::parse(to));
}

} // namespace

BaseTables default_base_tables() {
    BaseTables t;
    add(t.f_entries, "123", "");
    add(t.f_entries, "1123", "1");
    add(t.f_entries, "1223", "2");
    add(t.f_entries, "1233", "3");
    add(t.g_entries, "11", "3");
    add(t.g_entries, "111", "33");
    add(t.g_entries, "121", "23");
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
    if (!membership(FamilyId::p2b, n, word)) {
        throw domain_error("p2f: " + word.display() + " is not in p2b at n=" +
                           std::to_string(n));
    }
    return f_rec(n, word);
}

Word Engine::g(int n, const Word& word) const {
    if (n < 1 || !membership(FamilyId::p2gdom, n, word)) {
        throw domain_error("p2g: " + word.display() + " is not in p2gdom at n=" +
                           std::to_string(n));
    }
    return g_rec(n, word);
}

Word Engine::f_inv(const Word& u) const {
    const int n = static_cast<int>(u.size());
    if (!membership(FamilyId::p2a, n, u)) {
        throw domain_error("p2f-inverse: " + u.display() + " is not in p2a");
    }
    return f_inv_rec(u);
}

Word Engine::g_inv(const Word& u) const {
    const int n = static_cast<int>(u.size());
    if (n < 1 || !membership(FamilyId::p2a, n, u) || u.last() != 3) {
        throw domain_error("p2g-inverse: " + u.display() +
                           " is not a p2a member ending 3");
    }
    return g_inv_rec(u);
}

// Domain words end 3; the penultimate letter is 2 or 3 (a penultimate 1
// would put the forbidden factor 13 in the word).
Word Engine::f_rec(int n, const Word& word) const {
    if (n <= 1) {
        return find(f_fwd_, word, "p2f");
    }
    const std::size_t len = word.size();
    if (word.at(len - 2) == 3) {
        // x3 with x one step shorter in the domain.
        return f_rec(n - 1, word.drop_suffix(1)).append(1);
    }
    // y23; route on y's last letter.
    const Word y = word.drop_suffix(2);
    if (y.last() == 1) {
        return g_rec(n, y);
    }
    return f_rec(n - 1, y.append(3)).append(2);
}

// Domain words end 1; the penultimate letter is 1 or 2 (31 is forbidden).
Word Engine::g_rec(int n, const Word& word) const {
    if (n <= 2) {
        return find(g_fwd_, word, "p2g");
    }
    const std::size_t len = word.size();
    if (word.at(len - 2) == 1) {
        return g_rec(n - 1, word.drop_suffix(1)).append(3);
    }
    const Word z = word.drop_suffix(2);
    if (z.last() == 1) {
        return g_rec(n - 2, z).append("23");
    }
    return f_rec(n - 3, z.append(3)).append("223");
}

Word Engine::f_inv_rec(const Word& u) const {
    const std::size_t n = u.size();
    if (n <= 1) {
        return find(f_rev_, u, "p2f-inverse");
    }
    switch (u.last()) {
    case 1:
        return f_inv_rec(u.drop_suffix(1)).append(3);
    case 2: {
        // The preimage of the shortened word ends 3; widen that 3 to 23.
        const Word p = f_inv_rec(u.drop_suffix(1));
        return p.drop_suffix(1).append("23");
    }
    case 3:
        return g_inv_rec(u).append("23");
    default:
        throw domain_error("p2f-inverse: impossible last letter in " + u.display());
    }
}

Word Engine::g_inv_rec(const Word& u) const {
    const std::size_t n = u.size();
    if (n <= 2) {
        return find(g_rev_, u, "p2g-inverse");
    }
    const Letter pen = u.at(n - 2);
    if (pen == 3) {
        return g_inv_rec(u.drop_suffix(1)).append(1);
    }
    if (pen == 2) {
        const Letter third = u.at(n - 3);
        if (third == 3) {
            return g_inv_rec(u.drop_suffix(2)).append("21");
        }
        if (third == 2) {
            const Word p = f_inv_rec(u.drop_suffix(3));
            return p.drop_suffix(1).append("21");
        }
        // third == 1 would mean u contains the forbidden window 123.
    }
    throw domain_error("p2g-inverse: impossible suffix class in " + u.display());
}

} // namespace paw::p2
