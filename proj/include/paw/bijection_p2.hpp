#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "paw/word.hpp"

namespace paw::p2 {

/// Seed values: f on all of p2b at n in {0,1} and g on all of p2gdom at
/// n in {1,2}. f recurses from n=2 upward, g from n=3 upward.
struct BaseTables {
    std::vector<std::pair<Word, Word>> f_entries;
    std::vector<std::pair<Word, Word>> g_entries;
};

/// Fixed tables: f = {123->ε, 1123->1, 1223->2, 1233->3} and
/// g = {11->3, 111->33, 121->23}. The n=2 g values are the unique
/// bijective extension of the n=1 value onto the length-2 images ending 3.
BaseTables default_base_tables();

/// The f: p2b(n) -> p2a(n) bijection and the auxiliary g mapping p2gdom(n)
/// onto the p2a(n) members ending 3, with inverses. Same validation
/// contract as the p1 engine.
class Engine {
public:
    Engine();
    explicit Engine(BaseTables tables);

    const BaseTables& tables() const { return tables_; }

    Word f(int n, const Word& w) const;
    Word g(int n, const Word& u) const;
    Word f_inv(const Word& u) const;
    Word g_inv(const Word& u) const;

private:
    using Lookup = std::unordered_map<std::string, Word>;

    Word f_rec(int n, const Word& w) const;
    Word g_rec(int n, const Word& u) const;
    Word f_inv_rec(const Word& u) const;
    Word g_inv_rec(const Word& u) const;

    static const Word& find(const Lookup& table, const Word& key, const char* what);

    BaseTables tables_;
    Lookup f_fwd_, f_rev_, g_fwd_, g_rev_;
};

} // namespace paw::p2
