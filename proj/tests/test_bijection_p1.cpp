#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "paw/bijection_p1.hpp"
#include "paw/errors.hpp"
#include "paw/families.hpp"

using paw::FamilyId;
using paw::Word;

namespace {

const paw::p1::Engine& engine() {
    static const paw::p1::Engine e;
    return e;
}

Word w(const char* s) { return Word::parse(s); }

} // namespace

TEST_CASE("g values at n = 1 and 2") {
    CHECK(engine().g(1, w("1212")) == w("3"));
    CHECK(engine().g(1, w("1232")) == w("4"));
    CHECK(engine().g(2, w("121212")) == w("23"));
    CHECK(engine().g(2, w("121232")) == w("33"));
    CHECK(engine().g(2, w("123212")) == w("43"));
    CHECK(engine().g(2, w("123232")) == w("14"));
    CHECK(engine().g(2, w("123456")) == w("34"));
    CHECK(engine().g(2, w("123432")) == w("44"));
}

TEST_CASE("f values at n = 1") {
    CHECK(engine().f(1, w("121234")) == w("1"));
    CHECK(engine().f(1, w("123454")) == w("2"));
    CHECK(engine().f(1, w("123234")) == w("3"));
    CHECK(engine().f(1, w("123434")) == w("4"));
}

TEST_CASE("the completion at n = 2 pairs ending classes lexicographically") {
    const std::map<std::string, std::string> expected = {
        {"12123434", "11"}, {"12323434", "21"}, {"12343434", "31"}, {"12345434", "41"},
        {"12123454", "12"}, {"12323454", "22"}, {"12343454", "32"}, {"12345454", "42"},
        {"12121234", "14"}, {"12123234", "23"}, {"12321234", "33"}, {"12323234", "34"},
        {"12343234", "43"}, {"12345654", "44"},
    };
    for (const auto& [from, to] : expected) {
        CHECK(engine().f(2, Word::parse(from)) == Word::parse(to));
    }
}

TEST_CASE("recursive f cases") {
    // First case: strip a final 34 / 54.
    CHECK(engine().f(3, w("1212343434")) == engine().f(2, w("12123434")).append(1));
    CHECK(engine().f(3, w("1212345454")) == engine().f(2, w("12123454")).append(2));
    // Second case: strip 3234 / 5654 over a prefix ending 4.
    CHECK(engine().f(3, w("1234543234")) == w("223"));
    CHECK(engine().f(3, w("1234545654")) == engine().f(1, w("123454")).append("14"));
    // Third case: route through g on the length-2n prefix.
    CHECK(engine().f(3, w("1212121234")) == w("233"));
    CHECK(engine().f(3, w("1212123234")) == engine().g(2, w("121212")).append(4));
    CHECK(engine().f(3, w("1234565654")) == engine().g(2, w("123456")).append(3));
    CHECK(engine().f(3, w("1234567654")) == engine().g(2, w("123456")).append(4));
}

TEST_CASE("recursive g cases") {
    CHECK(engine().g(3, w("12123432")) == w("123"));
    CHECK(engine().g(3, w("12123456")) == engine().f(1, w("121234")).append("14"));
    CHECK(engine().g(3, w("12121212")) == w("233"));
    CHECK(engine().g(3, w("12121232")) == engine().g(2, w("121212")).append(4));
    CHECK(engine().g(3, w("12345656")) == engine().g(2, w("123456")).append(3));
    CHECK(engine().g(3, w("12345676")) == engine().g(2, w("123456")).append(4));
}

TEST_CASE("inverse examples") {
    CHECK(engine().f_inv(w("1")) == w("121234"));
    CHECK(engine().f_inv(w("223")) == w("1234543234"));
    CHECK(engine().f_inv(w("233")) == w("1212121234"));
    CHECK(engine().g_inv(w("14")) == w("123232"));
    CHECK(engine().g_inv(w("123")) == w("12123432"));
    CHECK(engine().g_inv(w("233")) == w("12121212"));
}

TEST_CASE("exhaustive bijectivity and roundtrips through n = 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto domain = paw::enumerate_family(FamilyId::p1b, n);
        const auto codomain = paw::enumerate_family(FamilyId::p1a, n);
        std::vector<Word> images;
        for (const Word& x : domain) {
            const Word u = engine().f(n, x);
            REQUIRE(paw::membership(FamilyId::p1a, n, u));
            REQUIRE(engine().f_inv(u) == x);
            images.push_back(u);
        }
        std::sort(images.begin(), images.end());
        REQUIRE(images == codomain);

        const auto g_domain = paw::enumerate_family(FamilyId::p1c, n);
        const auto g_codomain = paw::enumerate_family(FamilyId::p1d, n);
        std::vector<Word> g_images;
        for (const Word& v : g_domain) {
            const Word u = engine().g(n, v);
            REQUIRE(paw::membership(FamilyId::p1d, n, u));
            REQUIRE(engine().g_inv(u) == v);
            g_images.push_back(u);
        }
        std::sort(g_images.begin(), g_images.end());
        REQUIRE(g_images == g_codomain);

        for (const Word& u : codomain) {
            REQUIRE(engine().f(n, engine().f_inv(u)) == u);
        }
        for (const Word& u : g_codomain) {
            REQUIRE(engine().g(n, engine().g_inv(u)) == u);
        }
    }
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(engine().f(1, w("123254")), paw::domain_error); // not a walk
    CHECK_THROWS_AS(engine().f(2, w("121234")), paw::domain_error); // wrong length
    CHECK_THROWS_AS(engine().g(1, w("1234")), paw::domain_error);   // ends 4
    CHECK_THROWS_AS(engine().f_inv(w("13")), paw::domain_error);    // forbidden factor
    CHECK_THROWS_AS(engine().g_inv(w("21")), paw::domain_error);    // ends 1
    CHECK_THROWS_AS(engine().f(0, w("1234")), std::invalid_argument);
}

TEST_CASE("base tables are injectable") {
    paw::p1::BaseTables tables = paw::p1::default_base_tables();
    std::swap(tables.f_entries[0].second, tables.f_entries[1].second);
    const paw::p1::Engine corrupted(std::move(tables));
    CHECK(corrupted.f(1, w("121234")) == w("2"));
    CHECK(engine().f(1, w("121234")) == w("1"));
}
