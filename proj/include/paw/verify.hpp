#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paw/bijection_p1.hpp"
#include "paw/bijection_p2.hpp"
#include "paw/parallel.hpp"

namespace paw {

/// The four maps under certification.
enum class MapId { p1f, p1g, p2f, p2g };

std::string_view map_name(MapId id);
std::optional<MapId> map_from_name(std::string_view name);

/// The bijection engines a verification run exercises. run_all accepts a
/// caller-supplied bundle so tests can inject corrupted base tables.
struct Engines {
    p1::Engine p1;
    p2::Engine p2;
};

const Engines& default_engines();

struct CheckResult {
    std::string name;
    std::map<std::string, std::string> parameters;
    bool pass = true;
    std::string details; // first counterexample when failing
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> results;
    int passed = 0;
    int failed = 0;
    double elapsed_ms = 0.0;
    bool all_pass() const { return failed == 0; }
};

struct VerifyOptions {
    int max_n_p1 = 8;
    int max_n_p2 = 12;
    int count_max_n = 200; // bound for the closed-count equality/recurrence checks
    ExecPolicy exec = ExecPolicy::parallel;
    const Engines* engines = nullptr; // default engines when null
};

/// Exhaustive certification of one map at one n: total on the enumerated
/// domain, injective, image set equal to the enumerated codomain, and both
/// roundtrip identities. Failures are reported, never thrown; details
/// names the lexicographically least witness.
CheckResult verify_bijection(MapId id, int n, ExecPolicy exec = ExecPolicy::parallel,
                             const Engines* engines = nullptr);

/// The full battery: bijection checks, ending-class tables, the grouped
/// count identity suite, enumeration-vs-automaton count agreement,
/// cross-family count equality, recurrence checks, and golden base-table
/// comparison. Results are ordered by (name, n); no check aborts the run.
/// Pre: both bounds >= 2.
VerificationReport run_all(const VerifyOptions& options = {});

std::string report_text(const VerificationReport& report);
std::string report_json(const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

} // namespace paw
