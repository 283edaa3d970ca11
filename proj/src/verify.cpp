#include "paw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "paw/counting.hpp"
#include "paw/errors.hpp"
#include "paw/families.hpp"

namespace paw {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct MapInfo {
    FamilyId domain;
    FamilyId codomain;
    bool image_ends_3; // codomain restricted to words ending 3 (p2g)
    int min_n;
};

const MapInfo& map_info(MapId id) {
    static const MapInfo infos[] = {
        {FamilyId::p1b, FamilyId::p1a, false, 1},
        {FamilyId::p1c, FamilyId::p1d, false, 1},
        {FamilyId::p2b, FamilyId::p2a, false, 0},
        {FamilyId::p2gdom, FamilyId::p2a, true, 1},
    };
    return infos[static_cast<std::size_t>(id)];
}

Word apply_map(const Engines& e, MapId id, int n, const Word& w) {
    switch (id) {
    case MapId::p1f: return e.p1.f(n, w);
    case MapId::p1g: return e.p1.g(n, w);
    case MapId::p2f: return e.p2.f(n, w);
    default: return e.p2.g(n, w);
    }
}

Word apply_inverse(const Engines& e, MapId id, const Word& u) {
    switch (id) {
    case MapId::p1f: return e.p1.f_inv(u);
    case MapId::p1g: return e.p1.g_inv(u);
    case MapId::p2f: return e.p2.f_inv(u);
    default: return e.p2.g_inv(u);
    }
}

std::vector<Word> codomain_members(MapId id, int n) {
    const MapInfo& info = map_info(id);
    std::vector<Word> all = enumerate_family(info.codomain, n);
    if (!info.image_ends_3) {
        return all;
    }
    std::vector<Word> filtered;
    for (const Word& u : all) {
        if (!u.empty() && u.last() == 3) {
            filtered.push_back(u);
        }
    }
    return filtered;
}

bool image_in_codomain(MapId id, int n, const Word& u) {
    const MapInfo& info = map_info(id);
    if (!membership(info.codomain, n, u)) {
        return false;
    }
    return !info.image_ends_3 || (!u.empty() && u.last() == 3);
}

std::string fmt_int(int n) { return std::to_string(n); }

// ---------------------------------------------------------------------
// Ending-class tables: which image suffix each domain suffix must produce.

enum class ImageClass {
    last_1,
    last_2,
    last_3,
    tail_23,
    tail_14,
    deep_3, // last letter 3, penultimate 3 or 4
    deep_4,
    tail_33,
    tail_323,
    tail_223,
    invalid,
};

bool image_matches(ImageClass c, const Word& u) {
    const std::size_t n = u.size();
    switch (c) {
    case ImageClass::last_1: return u.last() == 1;
    case ImageClass::last_2: return u.last() == 2;
    case ImageClass::last_3: return u.last() == 3;
    case ImageClass::tail_23: return n >= 2 && u.last() == 3 && u.at(n - 2) == 2;
    case ImageClass::tail_14: return n >= 2 && u.last() == 4 && u.at(n - 2) == 1;
    case ImageClass::deep_3:
        return n >= 2 && u.last() == 3 && (u.at(n - 2) == 3 || u.at(n - 2) == 4);
    case ImageClass::deep_4:
        return n >= 2 && u.last() == 4 && (u.at(n - 2) == 3 || u.at(n - 2) == 4);
    case ImageClass::tail_33: return n >= 2 && u.last() == 3 && u.at(n - 2) == 3;
    case ImageClass::tail_323:
        return n >= 3 && u.last() == 3 && u.at(n - 2) == 2 && u.at(n - 3) == 3;
    case ImageClass::tail_223:
        return n >= 3 && u.last() == 3 && u.at(n - 2) == 2 && u.at(n - 3) == 2;
    default: return false;
    }
}

ImageClass expected_class_p1f(const Word& w) {
    const std::size_t len = w.size();
    if (w.at(len - 3) == 4) {
        return w.at(len - 2) == 3 ? ImageClass::last_1 : ImageClass::last_2;
    }
    const std::string tail = w.suffix(4).digits();
    if (w.at(len - 5) == 4) {
        if (tail == "3234") return ImageClass::tail_23;
        if (tail == "5654") return ImageClass::tail_14;
        return ImageClass::invalid;
    }
    const Letter pivot = w.at(len - 5);
    if (pivot == 2) {
        if (tail == "1234") return ImageClass::deep_3;
        if (tail == "3234") return ImageClass::deep_4;
    } else if (pivot == 6) {
        if (tail == "5654") return ImageClass::deep_3;
        if (tail == "7654") return ImageClass::deep_4;
    }
    return ImageClass::invalid;
}

ImageClass expected_class_p1g(const Word& v) {
    const std::size_t len = v.size();
    const Letter pivot = v.at(len - 3);
    const std::string tail = v.suffix(2).digits();
    if (pivot == 4) {
        if (tail == "32") return ImageClass::tail_23;
        if (tail == "56") return ImageClass::tail_14;
    } else if (pivot == 2) {
        if (tail == "12") return ImageClass::deep_3;
        if (tail == "32") return ImageClass::deep_4;
    } else if (pivot == 6) {
        if (tail == "56") return ImageClass::deep_3;
        if (tail == "76") return ImageClass::deep_4;
    }
    return ImageClass::invalid;
}

ImageClass expected_class_p2f(const Word& w) {
    const std::size_t len = w.size();
    const Letter pen = w.at(len - 2);
    if (pen == 3) {
        return ImageClass::last_1;
    }
    if (pen == 2) {
        const Letter third = w.at(len - 3);
        if (third == 2 || third == 3) return ImageClass::last_2;
        if (third == 1) return ImageClass::last_3;
    }
    return ImageClass::invalid;
}

ImageClass expected_class_p2g(const Word& u) {
    const std::size_t len = u.size();
    const Letter pen = u.at(len - 2);
    if (pen == 1) {
        return ImageClass::tail_33;
    }
    if (pen == 2) {
        const Letter third = u.at(len - 3);
        if (third == 1) return ImageClass::tail_323;
        if (third == 2 || third == 3) return ImageClass::tail_223;
    }
    return ImageClass::invalid;
}

ImageClass expected_class(MapId id, const Word& w) {
    switch (id) {
    case MapId::p1f: return expected_class_p1f(w);
    case MapId::p1g: return expected_class_p1g(w);
    case MapId::p2f: return expected_class_p2f(w);
    default: return expected_class_p2g(w);
    }
}

// ---------------------------------------------------------------------
// Golden base tables, frozen independently of the constructors in the
// bijection modules.

struct GoldenEntry {
    const char* from;
    const char* to;
};

constexpr GoldenEntry kGoldenP1F[] = {
    {"121234", "1"},   {"123454", "2"},   {"123234", "3"},   {"123434", "4"},
    {"12123434", "11"}, {"12323434", "21"}, {"12343434", "31"}, {"12345434", "41"},
    {"12123454", "12"}, {"12323454", "22"}, {"12343454", "32"}, {"12345454", "42"},
    {"12121234", "14"}, {"12123234", "23"}, {"12321234", "33"}, {"12323234", "34"},
    {"12343234", "43"}, {"12345654", "44"},
};

constexpr GoldenEntry kGoldenP1G[] = {
    {"1212", "3"},    {"1232", "4"},    {"121212", "23"}, {"121232", "33"},
    {"123212", "43"}, {"123232", "14"}, {"123456", "34"}, {"123432", "44"},
};

constexpr GoldenEntry kGoldenP2F[] = {
    {"123", ""}, {"1123", "1"}, {"1223", "2"}, {"1233", "3"},
};

constexpr GoldenEntry kGoldenP2G[] = {
    {"11", "3"}, {"111", "33"}, {"121", "23"},
};

} // namespace

std::string_view map_name(MapId id) {
    switch (id) {
    case MapId::p1f: return "p1f";
    case MapId::p1g: return "p1g";
    case MapId::p2f: return "p2f";
    default: return "p2g";
    }
}

std::optional<MapId> map_from_name(std::string_view name) {
    for (MapId id : {MapId::p1f, MapId::p1g, MapId::p2f, MapId::p2g}) {
        if (map_name(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

const Engines& default_engines() {
    static const Engines engines{p1::Engine{}, p2::Engine{}};
    return engines;
}

CheckResult verify_bijection(MapId id, int n, ExecPolicy exec, const Engines* engines) {
    const Engines& eng = engines ? *engines : default_engines();
    const auto start = Clock::now();

    CheckResult result;
    result.name = std::string("bijection/") + std::string(map_name(id));
    result.parameters["n"] = fmt_int(n);

    const std::vector<Word> domain = enumerate_family(map_info(id).domain, n);
    const std::vector<Word> codomain = codomain_members(id, n);

    std::vector<Word> images(domain.size());
    std::vector<char> apply_failed(domain.size(), 0);
    for_each_index(domain.size(), exec, [&](std::uint64_t i) {
        try {
            images[i] = apply_map(eng, id, n, domain[i]);
        } catch (...) {
            apply_failed[i] = 1;
        }
    });

    // Totality, codomain membership and the left roundtrip, per word.
    const auto bad = first_violation(domain.size(), exec, [&](std::uint64_t i) {
        if (apply_failed[i]) {
            return false;
        }
        if (!image_in_codomain(id, n, images[i])) {
            return false;
        }
        try {
            return apply_inverse(eng, id, images[i]) == domain[i];
        } catch (...) {
            return false;
        }
    });
    if (bad) {
        const Word& w = domain[*bad];
        std::string reason;
        try {
            const Word img = apply_map(eng, id, n, w);
            if (!image_in_codomain(id, n, img)) {
                reason = "image " + img.display() + " is outside the codomain";
            } else {
                const Word back = apply_inverse(eng, id, img);
                reason = "inverse maps image " + img.display() + " to " + back.display();
            }
        } catch (const std::exception& e) {
            reason = e.what();
        }
        result.pass = false;
        result.details = "w=" + w.display() + ": " + reason;
        result.elapsed_ms = ms_since(start);
        return result;
    }

    // Image set must be exactly the codomain (this also proves injectivity,
    // since |domain| images landed in a set of equal size).
    std::vector<Word> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != codomain.size()) {
        result.pass = false;
        result.details = "image count " + std::to_string(sorted.size()) +
                         " != codomain size " + std::to_string(codomain.size());
        result.elapsed_ms = ms_since(start);
        return result;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != codomain[i]) {
            result.pass = false;
            result.details = "image set mismatch: expected " + codomain[i].display() +
                             ", found " + sorted[i].display();
            result.elapsed_ms = ms_since(start);
            return result;
        }
    }

    // Right roundtrip over the codomain.
    const auto bad_inv = first_violation(codomain.size(), exec, [&](std::uint64_t i) {
        try {
            return apply_map(eng, id, n, apply_inverse(eng, id, codomain[i])) == codomain[i];
        } catch (...) {
            return false;
        }
    });
    if (bad_inv) {
        result.pass = false;
        result.details = "u=" + codomain[*bad_inv].display() + ": map(inverse(u)) != u";
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

namespace {

CheckResult check_ending_classes(MapId id, int n, ExecPolicy exec, const Engines& eng) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = std::string("ending-class/") + std::string(map_name(id));
    result.parameters["n"] = fmt_int(n);

    const std::vector<Word> domain = enumerate_family(map_info(id).domain, n);
    std::vector<Word> images(domain.size());
    std::vector<char> apply_failed(domain.size(), 0);
    for_each_index(domain.size(), exec, [&](std::uint64_t i) {
        try {
            images[i] = apply_map(eng, id, n, domain[i]);
        } catch (...) {
            apply_failed[i] = 1;
        }
    });

    const auto bad = first_violation(domain.size(), exec, [&](std::uint64_t i) {
        if (apply_failed[i]) {
            return false;
        }
        const ImageClass c = expected_class(id, domain[i]);
        return c != ImageClass::invalid && image_matches(c, images[i]);
    });
    if (bad) {
        result.pass = false;
        result.details = "w=" + domain[*bad].display() +
                         (apply_failed[*bad]
                              ? std::string(": map not defined")
                              : ": image " + images[*bad].display() +
                                    " violates its ending class");
        result.elapsed_ms = ms_since(start);
        return result;
    }

    // Second problem only: the words ending 123 must map exactly onto the
    // codomain words ending 3, whose number is the c count.
    if (id == MapId::p2f) {
        std::vector<Word> from_123;
        for (std::size_t i = 0; i < domain.size(); ++i) {
            const Word& w = domain[i];
            if (w.size() >= 3 && w.suffix(3).digits() == "123") {
                from_123.push_back(images[i]);
            }
        }
        std::sort(from_123.begin(), from_123.end());
        std::vector<Word> ending_3;
        for (const Word& u : enumerate_family(FamilyId::p2a, n)) {
            if (!u.empty() && u.last() == 3) {
                ending_3.push_back(u);
            }
        }
        const BigInt c = ending_counts(n).c;
        if (from_123 != ending_3) {
            result.pass = false;
            result.details = "images of words ending 123 differ from the words ending 3";
        } else if (c != BigInt(static_cast<unsigned long>(from_123.size()))) {
            result.pass = false;
            result.details = "ending-123 count " + std::to_string(from_123.size()) +
                             " != c count " + c.get_str();
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_grouped_identities(int lo, int hi) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = "identities/p2-grouped";
    result.parameters["min_n"] = fmt_int(lo);
    result.parameters["max_n"] = fmt_int(hi);

    for (int n = lo; n <= hi && result.pass; ++n) {
        const EndingCounts cur = ending_counts(n);
        const EndingCounts prev = ending_counts(n - 1);
        const EndingCounts away = ending_counts_automaton(n);
        const auto fail = [&](const std::string& what) {
            result.pass = false;
            result.details = "n=" + fmt_int(n) + ": " + what;
        };
        if (cur != away) {
            fail("recurrence route and automaton route disagree");
        } else if (cur.z != prev.z + prev.y) {
            fail("z(n) != z(n-1) + y(n-1)");
        } else if (cur.a != cur.b || cur.a != prev.z) {
            fail("a(n) = b(n) = z(n-1) violated");
        } else if (cur.c != cur.z - cur.a - cur.b || cur.c != prev.y - prev.z) {
            fail("c(n) != z(n) - a(n) - b(n)");
        } else if (n >= 2 && cur.c != ending_counts(n - 2).x) {
            fail("c(n) != x(n-2)");
        } else if (cur.x != prev.x + prev.y) {
            fail("x(n) != x(n-1) + y(n-1)");
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_count_oracle(FamilyId id, int max_n) {
    const auto start = Clock::now();
    const FamilySpec& spec = family_spec(id);
    CheckResult result;
    result.name = "count-oracle/" + spec.id;
    result.parameters["max_n"] = fmt_int(max_n);

    const std::vector<BigInt> closed = count_family_range(id, spec.min_n, max_n);
    for (int n = spec.min_n; n <= max_n; ++n) {
        const BigInt enumerated(static_cast<unsigned long>(family_size(id, n)));
        if (closed[static_cast<std::size_t>(n - spec.min_n)] != enumerated) {
            result.pass = false;
            result.details = "n=" + fmt_int(n) + ": automaton " +
                             closed[static_cast<std::size_t>(n - spec.min_n)].get_str() +
                             " != enumeration " + enumerated.get_str();
            break;
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_count_equality(FamilyId lhs, FamilyId rhs, const char* label, int max_n) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = std::string("count-equality/") + label;
    result.parameters["max_n"] = fmt_int(max_n);

    const int min_n = std::max(family_spec(lhs).min_n, family_spec(rhs).min_n);
    const std::vector<BigInt> a = count_family_range(lhs, min_n, max_n);
    const std::vector<BigInt> b = count_family_range(rhs, min_n, max_n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            result.pass = false;
            result.details = "n=" + fmt_int(min_n + static_cast<int>(i)) + ": " +
                             a[i].get_str() + " != " + b[i].get_str();
            break;
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_recurrence(FamilyId id, RecurrenceKind kind, const char* label, int max_n) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = std::string("recurrence/") + label;
    result.parameters["max_n"] = fmt_int(max_n);

    const int min_n = family_spec(id).min_n;
    const std::vector<BigInt> counts = count_family_range(id, min_n, max_n);
    if (!recurrence_check(counts, kind)) {
        result.pass = false;
        for (std::size_t i = 2; i < counts.size(); ++i) {
            const BigInt expected = kind == RecurrenceKind::p1
                                        ? BigInt(4 * counts[i - 1] - 2 * counts[i - 2])
                                        : BigInt(2 * counts[i - 1] + counts[i - 2] + 1);
            if (counts[i] != expected) {
                result.details = "n=" + fmt_int(min_n + static_cast<int>(i)) +
                                 ": count " + counts[i].get_str() + " != " +
                                 expected.get_str();
                break;
            }
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_golden_table(const char* label, const GoldenEntry* golden,
                               std::size_t golden_size,
                               const std::vector<std::pair<Word, Word>>& actual) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = std::string("base-tables/") + label;
    result.parameters["entries"] = std::to_string(golden_size);

    std::map<std::string, std::string> table;
    for (const auto& [from, to] : actual) {
        table[from.digits()] = to.digits();
    }
    if (table.size() != actual.size()) {
        result.pass = false;
        result.details = "duplicate domain words in base table";
    }
    for (std::size_t i = 0; i < golden_size && result.pass; ++i) {
        const auto it = table.find(golden[i].from);
        if (it == table.end()) {
            result.pass = false;
            result.details = std::string("missing entry for ") + golden[i].from;
        } else if (it->second != golden[i].to) {
            result.pass = false;
            result.details = std::string("w=") + golden[i].from + ": image " +
                             (it->second.empty() ? "ε" : it->second) + " != expected " +
                             (*golden[i].to ? golden[i].to : "ε");
        }
    }
    if (result.pass && table.size() != golden_size) {
        result.pass = false;
        for (const auto& [from, to] : table) {
            bool known = false;
            for (std::size_t i = 0; i < golden_size; ++i) {
                if (from == golden[i].from) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                result.details = "unexpected entry for " + from;
                break;
            }
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_ending3_counts(int max_n) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = "ending3-counts/p2";
    result.parameters["max_n"] = fmt_int(max_n);

    for (int n = 1; n <= max_n && result.pass; ++n) {
        const BigInt c = ending_counts(n).c;
        const BigInt gdom(static_cast<unsigned long>(family_size(FamilyId::p2gdom, n)));
        std::uint64_t ending3 = 0;
        for_each_member(family_spec(FamilyId::p2a), n, [&](const Word& u) {
            if (u.last() == 3) {
                ++ending3;
            }
        });
        if (gdom != c || BigInt(static_cast<unsigned long>(ending3)) != c) {
            result.pass = false;
            result.details = "n=" + fmt_int(n) + ": |p2gdom| " + gdom.get_str() +
                             ", words ending 3 " + std::to_string(ending3) +
                             ", c " + c.get_str();
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult guarded(const std::function<CheckResult()>& run, const char* name) {
    try {
        return run();
    } catch (const std::exception& e) {
        CheckResult result;
        result.name = name;
        result.pass = false;
        result.details = std::string("exception: ") + e.what();
        return result;
    }
}

int param_n(const CheckResult& r) {
    const auto it = r.parameters.find("n");
    return it == r.parameters.end() ? -1 : std::atoi(it->second.c_str());
}

} // namespace

VerificationReport run_all(const VerifyOptions& options) {
    if (options.max_n_p1 < 2 || options.max_n_p2 < 2) {
        throw std::invalid_argument("verification bounds must be at least 2");
    }
    const Engines& eng = options.engines ? *options.engines : default_engines();
    const ExecPolicy exec = options.exec;
    const auto start = Clock::now();

    std::vector<std::function<CheckResult()>> checks;
    std::vector<const char*> names;
    const auto add = [&](const char* name, std::function<CheckResult()> fn) {
        names.push_back(name);
        checks.push_back(std::move(fn));
    };

    add("base-tables/p1f", [&] {
        return check_golden_table("p1f", kGoldenP1F, std::size(kGoldenP1F),
                                  eng.p1.tables().f_entries);
    });
    add("base-tables/p1g", [&] {
        return check_golden_table("p1g", kGoldenP1G, std::size(kGoldenP1G),
                                  eng.p1.tables().g_entries);
    });
    add("base-tables/p2f", [&] {
        return check_golden_table("p2f", kGoldenP2F, std::size(kGoldenP2F),
                                  eng.p2.tables().f_entries);
    });
    add("base-tables/p2g", [&] {
        return check_golden_table("p2g", kGoldenP2G, std::size(kGoldenP2G),
                                  eng.p2.tables().g_entries);
    });

    for (MapId id : {MapId::p1f, MapId::p1g}) {
        for (int n = 1; n <= options.max_n_p1; ++n) {
            add("bijection", [&, id, n] { return verify_bijection(id, n, exec, &eng); });
        }
    }
    for (int n = 0; n <= options.max_n_p2; ++n) {
        add("bijection", [&, n] { return verify_bijection(MapId::p2f, n, exec, &eng); });
    }
    for (int n = 1; n <= options.max_n_p2; ++n) {
        add("bijection", [&, n] { return verify_bijection(MapId::p2g, n, exec, &eng); });
    }

    for (MapId id : {MapId::p1f, MapId::p1g}) {
        for (int n = 3; n <= options.max_n_p1; ++n) {
            add("ending-class", [&, id, n] { return check_ending_classes(id, n, exec, eng); });
        }
    }
    for (int n = 2; n <= options.max_n_p2; ++n) {
        add("ending-class", [&, n] { return check_ending_classes(MapId::p2f, n, exec, eng); });
    }
    for (int n = 3; n <= options.max_n_p2; ++n) {
        add("ending-class", [&, n] { return check_ending_classes(MapId::p2g, n, exec, eng); });
    }

    add("identities/p2-grouped", [&] { return check_grouped_identities(2, 40); });
    add("ending3-counts/p2", [&] { return check_ending3_counts(options.max_n_p2); });

    for (FamilyId id : {FamilyId::p1a, FamilyId::p1b, FamilyId::p1c, FamilyId::p1d}) {
        add("count-oracle", [&, id] { return check_count_oracle(id, options.max_n_p1); });
    }
    for (FamilyId id : {FamilyId::p2a, FamilyId::p2b, FamilyId::p2gdom}) {
        add("count-oracle", [&, id] { return check_count_oracle(id, options.max_n_p2); });
    }

    add("count-equality/p1", [&] {
        return check_count_equality(FamilyId::p1a, FamilyId::p1b, "p1", options.count_max_n);
    });
    add("count-equality/p2", [&] {
        return check_count_equality(FamilyId::p2a, FamilyId::p2b, "p2", options.count_max_n);
    });
    add("recurrence/p1", [&] {
        return check_recurrence(FamilyId::p1a, RecurrenceKind::p1, "p1", options.count_max_n);
    });
    add("recurrence/p2", [&] {
        return check_recurrence(FamilyId::p2a, RecurrenceKind::p2, "p2", options.count_max_n);
    });

    VerificationReport report;
    report.results.reserve(checks.size());
    for (std::size_t i = 0; i < checks.size(); ++i) {
        report.results.push_back(guarded(checks[i], names[i]));
    }

    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.name != b.name) {
                             return a.name < b.name;
                         }
                         return param_n(a) < param_n(b);
                     });
    for (const CheckResult& r : report.results) {
        (r.pass ? report.passed : report.failed) += 1;
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

std::string params_line(const CheckResult& r) {
    std::string s;
    for (const auto& [k, v] : r.parameters) {
        if (!s.empty()) {
            s += " ";
        }
        s += k + "=" + v;
    }
    return s;
}

} // namespace

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    std::size_t name_w = 4, param_w = 6;
    for (const CheckResult& r : report.results) {
        name_w = std::max(name_w, r.name.size());
        param_w = std::max(param_w, params_line(r).size());
    }
    for (const CheckResult& r : report.results) {
        out << r.name << std::string(name_w - r.name.size() + 2, ' ');
        const std::string params = params_line(r);
        out << params << std::string(param_w - params.size() + 2, ' ');
        out << (r.pass ? "pass" : "FAIL");
        char ms[32];
        std::snprintf(ms, sizeof(ms), "%9.2f ms", r.elapsed_ms);
        out << ms;
        if (!r.details.empty()) {
            out << "  " << r.details;
        }
        out << "\n";
    }
    char total[64];
    std::snprintf(total, sizeof(total), "%.2f", report.elapsed_ms);
    out << report.results.size() << " checks, " << report.passed << " passed, "
        << report.failed << " failed (" << total << " ms)\n";
    return out.str();
}

std::string report_json(const VerificationReport& report) {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const CheckResult& r : report.results) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.parameters) {
            params[k] = v;
        }
        results.push_back({{"name", r.name},
                           {"parameters", params},
                           {"pass", r.pass},
                           {"details", r.details},
                           {"elapsed_ms", r.elapsed_ms}});
    }
    nlohmann::ordered_json doc = {
        {"results", results},
        {"summary",
         {{"total", report.results.size()},
          {"passed", report.passed},
          {"failed", report.failed},
          {"elapsed_ms", report.elapsed_ms}}},
    };
    return doc.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "name,parameters,pass,details,elapsed_ms\n";
    const auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') {
                q += "\"\"";
            } else {
                q += c;
            }
        }
        return q + "\"";
    };
    for (const CheckResult& r : report.results) {
        out << r.name << ',' << quote(params_line(r)) << ','
            << (r.pass ? "true" : "false") << ',' << quote(r.details) << ','
            << r.elapsed_ms << "\n";
    }
    return out.str();
}

} // namespace paw
