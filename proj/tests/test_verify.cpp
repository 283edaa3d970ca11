#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "paw/verify.hpp"

using paw::ExecPolicy;
using paw::MapId;
using paw::VerificationReport;
using paw::VerifyOptions;

namespace {

bool reports_equal_modulo_timing(const VerificationReport& a, const VerificationReport& b) {
    if (a.results.size() != b.results.size() || a.passed != b.passed ||
        a.failed != b.failed) {
        return false;
    }
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        const auto& ra = a.results[i];
        const auto& rb = b.results[i];
        if (ra.name != rb.name || ra.parameters != rb.parameters || ra.pass != rb.pass ||
            ra.details != rb.details) {
            return false;
        }
    }
    return true;
}

VerificationReport small_run(const paw::Engines* engines = nullptr,
                             ExecPolicy exec = ExecPolicy::parallel) {
    VerifyOptions options;
    options.max_n_p1 = 3;
    options.max_n_p2 = 4;
    options.count_max_n = 20;
    options.exec = exec;
    options.engines = engines;
    return paw::run_all(options);
}

} // namespace

TEST_CASE("single bijection checks") {
    const auto p1f = paw::verify_bijection(MapId::p1f, 2);
    CHECK(p1f.pass);
    CHECK(p1f.parameters.at("n") == "2");

    CHECK(paw::verify_bijection(MapId::p1g, 1).pass);
    CHECK(paw::verify_bijection(MapId::p2f, 0).pass);
    CHECK(paw::verify_bijection(MapId::p2f, 2).pass);
    CHECK(paw::verify_bijection(MapId::p2g, 1).pass);
}

TEST_CASE("small full run passes") {
    const VerificationReport report = small_run();
    CHECK(report.failed == 0);
    CHECK(report.passed == static_cast<int>(report.results.size()));
    for (const auto& r : report.results) {
        CHECK(r.details.empty());
    }
}

TEST_CASE("base-table-only bounds pass") {
    VerifyOptions options;
    options.max_n_p1 = 2;
    options.max_n_p2 = 2;
    options.count_max_n = 10;
    const VerificationReport report = paw::run_all(options);
    CHECK(report.failed == 0);
}

TEST_CASE("reports are deterministic and policy-independent") {
    const VerificationReport parallel_run = small_run();
    const VerificationReport again = small_run();
    CHECK(reports_equal_modulo_timing(parallel_run, again));
    const VerificationReport serial_run = small_run(nullptr, ExecPolicy::serial);
    CHECK(reports_equal_modulo_timing(parallel_run, serial_run));
}

TEST_CASE("results are ordered by name then n") {
    const VerificationReport report = small_run();
    const auto n_of = [](const paw::CheckResult& r) {
        const auto it = r.parameters.find("n");
        return it == r.parameters.end() ? -1 : std::stoi(it->second);
    };
    for (std::size_t i = 1; i < report.results.size(); ++i) {
        const auto& prev = report.results[i - 1];
        const auto& cur = report.results[i];
        const bool ordered = prev.name < cur.name ||
                             (prev.name == cur.name && n_of(prev) < n_of(cur));
        CHECK(ordered);
    }
}

TEST_CASE("every corrupted base entry is detected with a witness") {
    const paw::p1::BaseTables p1_clean = paw::p1::default_base_tables();
    const paw::p2::BaseTables p2_clean = paw::p2::default_base_tables();

    const auto expect_detected = [](const paw::Engines& engines) {
        const VerificationReport report = small_run(&engines);
        REQUIRE(report.failed >= 1);
        bool witness = false;
        for (const auto& r : report.results) {
            if (!r.pass) {
                witness = witness || !r.details.empty();
            }
        }
        REQUIRE(witness);
    };

    // Swap each adjacent image pair inside each table in turn; the swap
    // keeps the table total and injective, so only a value-level check can
    // notice it.
    for (std::size_t i = 0; i < p1_clean.f_entries.size(); ++i) {
        paw::p1::BaseTables t = p1_clean;
        std::swap(t.f_entries[i].second,
                  t.f_entries[(i + 1) % t.f_entries.size()].second);
        expect_detected(paw::Engines{paw::p1::Engine(std::move(t)), paw::p2::Engine{}});
    }
    for (std::size_t i = 0; i < p1_clean.g_entries.size(); ++i) {
        paw::p1::BaseTables t = p1_clean;
        std::swap(t.g_entries[i].second,
                  t.g_entries[(i + 1) % t.g_entries.size()].second);
        expect_detected(paw::Engines{paw::p1::Engine(std::move(t)), paw::p2::Engine{}});
    }
    for (std::size_t i = 0; i < p2_clean.f_entries.size(); ++i) {
        paw::p2::BaseTables t = p2_clean;
        std::swap(t.f_entries[i].second,
                  t.f_entries[(i + 1) % t.f_entries.size()].second);
        expect_detected(paw::Engines{paw::p1::Engine{}, paw::p2::Engine(std::move(t))});
    }
    for (std::size_t i = 0; i < p2_clean.g_entries.size(); ++i) {
        paw::p2::BaseTables t = p2_clean;
        std::swap(t.g_entries[i].second,
                  t.g_entries[(i + 1) % t.g_entries.size()].second);
        expect_detected(paw::Engines{paw::p1::Engine{}, paw::p2::Engine(std::move(t))});
    }
}

TEST_CASE("corrupted tables produce failing bijection checks with witnesses") {
    paw::p1::BaseTables t = paw::p1::default_base_tables();
    // Send two domain words to the same image: injectivity breaks.
    t.f_entries[0].second = t.f_entries[1].second;
    const paw::Engines engines{paw::p1::Engine(std::move(t)), paw::p2::Engine{}};
    const auto check = paw::verify_bijection(MapId::p1f, 1, ExecPolicy::serial, &engines);
    CHECK_FALSE(check.pass);
    CHECK_FALSE(check.details.empty());

    // The reported witness must not depend on the execution policy.
    const auto serial_report = small_run(&engines, ExecPolicy::serial);
    const auto parallel_report = small_run(&engines, ExecPolicy::parallel);
    CHECK(serial_report.failed > 0);
    CHECK(reports_equal_modulo_timing(serial_report, parallel_report));
}

TEST_CASE("report serialization") {
    const VerificationReport report = small_run();

    const std::string text = paw::report_text(report);
    CHECK(text.find("bijection/p1f") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);

    const auto doc = nlohmann::json::parse(paw::report_json(report));
    REQUIRE(doc.contains("results"));
    REQUIRE(doc.contains("summary"));
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["total"] == report.results.size());
    for (const auto& r : doc["results"]) {
        REQUIRE(r.contains("name"));
        REQUIRE(r.contains("parameters"));
        REQUIRE(r.contains("pass"));
        REQUIRE(r.contains("details"));
        REQUIRE(r.contains("elapsed_ms"));
    }

    const std::string csv = paw::report_csv(report);
    CHECK(csv.rfind("name,parameters,pass,details,elapsed_ms\n", 0) == 0);
}

TEST_CASE("bounds validation") {
    VerifyOptions options;
    options.max_n_p1 = 1;
    CHECK_THROWS_AS(paw::run_all(options), std::invalid_argument);
}
