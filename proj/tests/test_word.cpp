#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "paw/word.hpp"

using paw::contains_factor;
using paw::is_walk;
using paw::Pattern;
using paw::Word;

namespace {

// Independent matching oracle built on std::search instead of the
// window loop of the implementation.
bool oracle_contains(const Word& w, const Pattern& p) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < w.size(); ++i) {
        letters.push_back(w.at(i));
    }
    const auto& atoms = p.atoms();
    return std::search(letters.begin(), letters.end(), atoms.begin(), atoms.end(),
                       [](int letter, const paw::PatternAtom& a) {
                           return a.matches(letter);
                       }) != letters.end();
}

// All words of the given length over {1..k}, lexicographic.
void all_words(int k, int length, const std::function<void(const Word&)>& fn) {
    std::string buf(static_cast<std::size_t>(length), '1');
    while (true) {
        fn(Word::from_digits(buf));
        int pos = length - 1;
        while (pos >= 0 && buf[pos] == '0' + k) {
            buf[pos] = '1';
            --pos;
        }
        if (pos < 0) {
            return;
        }
        ++buf[pos];
    }
}

} // namespace

TEST_CASE("word parsing and rendering") {
    CHECK(Word::parse("123454").size() == 6);
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("ε").empty());
    CHECK(Word::parse("").display() == "ε");
    CHECK(Word::parse("").digits() == "");
    CHECK(Word::parse("31").at(0) == 3);
    CHECK_THROWS_AS(Word::parse("10"), paw::parse_error);
    CHECK_THROWS_AS(Word::parse("abc"), paw::parse_error);
}

TEST_CASE("factor containment examples") {
    CHECK(contains_factor(Word::parse("1423"), Pattern::parse("42")));
    CHECK(contains_factor(Word::parse("123"), Pattern::parse("1.3")));
    CHECK(contains_factor(Word::parse("1332"), Pattern::parse("1.3")));
    CHECK_FALSE(contains_factor(Word::parse("1324"), Pattern::parse("1.3")));
    CHECK_FALSE(contains_factor(Word::parse(""), Pattern::parse("1")));
    CHECK_FALSE(contains_factor(Word::parse("12"), Pattern::parse("123")));
}

TEST_CASE("avoids_all examples") {
    const std::vector<Pattern> ps = {Pattern::parse("13"), Pattern::parse("24")};
    CHECK(paw::avoids_all(Word::parse("1212"), ps));
    CHECK_FALSE(paw::avoids_all(Word::parse("13"), ps));
    CHECK(paw::avoids_all(Word::parse(""), {Pattern::parse("13")}));
}

TEST_CASE("factor containment agrees with the oracle exhaustively") {
    const std::vector<Pattern> patterns = {
        Pattern::parse("13"),  Pattern::parse("24"), Pattern::parse("1.3"),
        Pattern::parse("31"),  Pattern::parse("1"),  Pattern::parse("44"),
        Pattern::parse("121"), Pattern::parse("..4"),
    };
    for (int len = 0; len <= 8; ++len) {
        all_words(4, len, [&](const Word& w) {
            bool all_avoided = true;
            for (const Pattern& p : patterns) {
                const bool got = contains_factor(w, p);
                REQUIRE(got == oracle_contains(w, p));
                all_avoided = all_avoided && !got;
            }
            REQUIRE(paw::avoids_all(w, patterns) == all_avoided);
        });
    }
}

TEST_CASE("walk checking") {
    CHECK(is_walk(Word::parse("123454"), 7));
    CHECK_FALSE(is_walk(Word::parse("123254"), 7)); // the 2 -> 5 jump
    CHECK(is_walk(Word::parse("1"), 7));
    CHECK(is_walk(Word::parse(""), 7));
    CHECK_FALSE(is_walk(Word::parse("78"), 7)); // letter above the alphabet
    CHECK_FALSE(is_walk(Word::parse("11"), 7));
}

TEST_CASE("walks are prefix-closed") {
    all_words(4, 6, [&](const Word& w) {
        if (!is_walk(w, 4)) {
            return;
        }
        for (std::size_t m = 0; m <= w.size(); ++m) {
            REQUIRE(is_walk(w.drop_suffix(m), 4));
        }
    });
}

TEST_CASE("suffix and drop_suffix") {
    const Word w = Word::parse("123454");
    CHECK(w.suffix(2) == Word::parse("54"));
    CHECK(w.drop_suffix(2) == Word::parse("1234"));
    CHECK(Word::parse("").suffix(0) == Word::parse(""));
    CHECK_THROWS_AS(w.suffix(7), std::invalid_argument);
    CHECK_THROWS_AS(w.drop_suffix(7), std::invalid_argument);

    // Reassembly identity over all suffix lengths.
    all_words(3, 5, [&](const Word& x) {
        for (std::size_t m = 0; m <= x.size(); ++m) {
            REQUIRE(x.drop_suffix(m).append(x.suffix(m)) == x);
        }
    });
}
