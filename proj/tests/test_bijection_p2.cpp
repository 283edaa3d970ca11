#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "paw/bijection_p2.hpp"
#include "paw/errors.hpp"
#include "paw/families.hpp"

using paw::FamilyId;
using paw::Word;

namespace {

const paw::p2::Engine& engine() {
    static const paw::p2::Engine e;
    return e;
}

Word w(const char* s) { return Word::parse(s); }

std::vector<Word> ending_3(int n) {
    std::vector<Word> out;
    for (const Word& u : paw::enumerate_family(FamilyId::p2a, n)) {
        if (u.last() == 3) {
            out.push_back(u);
        }
    }
    return out;
}

} // namespace

TEST_CASE("base values") {
    CHECK(engine().f(0, w("123")) == w(""));
    CHECK(engine().f(1, w("1123")) == w("1"));
    CHECK(engine().f(1, w("1223")) == w("2"));
    CHECK(engine().f(1, w("1233")) == w("3"));
    CHECK(engine().g(1, w("11")) == w("3"));
    CHECK(engine().g(2, w("111")) == w("33"));
    CHECK(engine().g(2, w("121")) == w("23"));
}

TEST_CASE("f at n = 2 covers all eight words") {
    const std::map<std::string, std::string> expected = {
        {"11123", "33"}, {"11223", "12"}, {"11233", "11"}, {"12123", "23"},
        {"12223", "22"}, {"12233", "21"}, {"12323", "32"}, {"12333", "31"},
    };
    for (const auto& [from, to] : expected) {
        CHECK(engine().f(2, Word::parse(from)) == Word::parse(to));
    }
}

TEST_CASE("recursive cases") {
    CHECK(engine().f(2, w("11233")) == w("11"));
    CHECK(engine().f(2, w("12123")) == w("23"));
    CHECK(engine().g(3, w("1121")) == w("323"));
    CHECK(engine().g(3, w("1221")) == w("223"));
    CHECK(engine().g(3, w("1111")) == w("333"));
    CHECK(engine().g(3, w("1211")) == w("233"));
}

TEST_CASE("inverse examples") {
    CHECK(engine().f_inv(w("")) == w("123"));
    CHECK(engine().f_inv(w("2")) == w("1223"));
    CHECK(engine().f_inv(w("11")) == w("11233"));
    CHECK(engine().f_inv(w("23")) == w("12123"));
    CHECK(engine().g_inv(w("3")) == w("11"));
    CHECK(engine().g_inv(w("323")) == w("1121"));
    CHECK(engine().g_inv(w("223")) == w("1221"));
}

TEST_CASE("exhaustive bijectivity and roundtrips through n = 9") {
    for (int n = 0; n <= 9; ++n) {
        const auto domain = paw::enumerate_family(FamilyId::p2b, n);
        const auto codomain = paw::enumerate_family(FamilyId::p2a, n);
        std::vector<Word> images;
        for (const Word& x : domain) {
            const Word u = engine().f(n, x);
            REQUIRE(paw::membership(FamilyId::p2a, n, u));
            REQUIRE(engine().f_inv(u) == x);
            images.push_back(u);
        }
        std::sort(images.begin(), images.end());
        REQUIRE(images == codomain);
        for (const Word& u : codomain) {
            REQUIRE(engine().f(n, engine().f_inv(u)) == u);
        }

        if (n >= 1) {
            const auto g_domain = paw::enumerate_family(FamilyId::p2gdom, n);
            const auto g_codomain = ending_3(n);
            std::vector<Word> g_images;
            for (const Word& y : g_domain) {
                const Word u = engine().g(n, y);
                REQUIRE(paw::membership(FamilyId::p2a, n, u));
                REQUIRE(u.last() == 3);
                REQUIRE(engine().g_inv(u) == y);
                g_images.push_back(u);
            }
            std::sort(g_images.begin(), g_images.end());
            REQUIRE(g_images == g_codomain);
            for (const Word& u : g_codomain) {
                REQUIRE(engine().g(n, engine().g_inv(u)) == u);
            }
        }
    }
}

TEST_CASE("words ending 123 map onto the words ending 3") {
    for (int n = 2; n <= 9; ++n) {
        std::vector<Word> images;
        for (const Word& x : paw::enumerate_family(FamilyId::p2b, n)) {
            if (x.suffix(3) == w("123")) {
                images.push_back(engine().f(n, x));
            }
        }
        std::sort(images.begin(), images.end());
        REQUIRE(images == ending_3(n));
    }
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(engine().f(0, w("113")), paw::domain_error);   // contains 13
    CHECK_THROWS_AS(engine().f(1, w("123")), paw::domain_error);   // wrong length
    CHECK_THROWS_AS(engine().g(1, w("12")), paw::domain_error);    // ends 2
    CHECK_THROWS_AS(engine().g(0, w("1")), paw::domain_error);     // below the g range
    CHECK_THROWS_AS(engine().f_inv(w("13")), paw::domain_error);
    CHECK_THROWS_AS(engine().g_inv(w("1")), paw::domain_error);    // does not end 3
    CHECK_THROWS_AS(engine().g_inv(w("123")), paw::domain_error);  // outside p2a
}
