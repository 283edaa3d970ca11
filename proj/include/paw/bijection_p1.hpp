#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "paw/word.hpp"

namespace paw::p1 {

/// Explicit small-n values seeding the two recursions: f on all of p1b at
/// n in {1,2} (18 entries) and g on all of p1c at n in {1,2} (8 entries).
/// The recursive rules only fire for n >= 3; these tables take precedence
/// below that.
struct BaseTables {
    std::vector<std::pair<Word, Word>> f_entries;
    std::vector<std::pair<Word, Word>> g_entries;
};

/// The canonical tables. g and f-at-n=1 are fixed value lists; f on the 14
/// words at n=2 is only constrained up to ending classes (words ending 434
/// must map to images ending 1, words ending 454 to images ending 2, the
/// rest to the remaining images), so the completion pairs each class with
/// its image class in lexicographic order on both sides.
BaseTables default_base_tables();

/// The f: p1b(n) -> p1a(n) and g: p1c(n) -> p1d(n) bijection pair, with
/// inverses. All four maps validate their argument's family membership on
/// entry and throw domain_error on violation; the recursion itself then
/// runs unchecked.
class Engine {
public:
    Engine();
    explicit Engine(BaseTables tables);

    const BaseTables& tables() const { return tables_; }

    Word f(int n, const Word& w) const;
    Word g(int n, const Word& v) const;
    Word f_inv(const Word& u) const;
    Word g_inv(const Word& u) const;

private:
    using Lookup = std::unordered_map<std::string, Word>;

    Word f_rec(int n, const Word& w) const;
    Word g_rec(int n, const Word& v) const;
    Word f_inv_rec(const Word& u) const;
    Word g_inv_rec(const Word& u) const;

    static const Word& find(const Lookup& table, const Word& key, const char* what);

    BaseTables tables_;
    Lookup f_fwd_, f_rev_, g_fwd_, g_rev_;
};

} // namespace paw::p1
