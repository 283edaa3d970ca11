#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paw/counting.hpp"
#include "paw/errors.hpp"
#include "paw/families.hpp"
#include "paw/verify.hpp"

namespace {

using nlohmann::ordered_json;

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + name);
}

paw::FamilyId require_family(const std::string& name) {
    const auto id = paw::family_from_name(name);
    if (!id) {
        throw std::invalid_argument("unknown family: " + name +
                                    " (expected p1a|p1b|p1c|p1d|p2a|p2b|p2gdom)");
    }
    return *id;
}

paw::MapId require_map(const std::string& name) {
    const auto id = paw::map_from_name(name);
    if (!id) {
        throw std::invalid_argument("unknown bijection: " + name +
                                    " (expected p1f|p1g|p2f|p2g)");
    }
    return *id;
}

// The parameter n is determined by the word length; an explicit --n must
// agree with it.
int infer_n(const paw::FamilySpec& spec, const paw::Word& w, std::optional<int> given,
            const std::string& role) {
    const auto n = spec.n_for_length(w.size());
    if (!n) {
        throw paw::domain_error("word " + w.display() + " has no valid length for a " +
                                role + " word (family " + spec.id + ")");
    }
    if (given && *given != *n) {
        throw std::invalid_argument("--n " + std::to_string(*given) +
                                    " contradicts the word length (n=" +
                                    std::to_string(*n) + ")");
    }
    return *n;
}

int cmd_count(const std::string& family, int n, Format format) {
    const paw::FamilyId id = require_family(family);
    const paw::BigInt count = paw::count_family(id, n);
    switch (format) {
    case Format::text:
        std::cout << count.get_str() << "\n";
        break;
    case Format::csv:
        std::cout << "family,n,count\n" << family << ',' << n << ',' << count.get_str() << "\n";
        break;
    case Format::json:
        std::cout << ordered_json{{"family", family}, {"n", n}, {"count", count.get_str()}}
                  << "\n";
        break;
    }
    return 0;
}

int cmd_enumerate(const std::string& family, int n, Format format) {
    const paw::FamilyId id = require_family(family);
    const std::vector<paw::Word> words = paw::enumerate_family(id, n);
    switch (format) {
    case Format::text:
        for (const paw::Word& w : words) {
            std::cout << w.display() << "\n";
        }
        break;
    case Format::csv:
        std::cout << "word\n";
        for (const paw::Word& w : words) {
            std::cout << w.digits() << "\n";
        }
        break;
    case Format::json: {
        ordered_json arr = ordered_json::array();
        for (const paw::Word& w : words) {
            arr.push_back(w.digits());
        }
        std::cout << arr << "\n";
        break;
    }
    }
    return 0;
}

int cmd_map(const std::string& bijection, const std::string& word_text,
            std::optional<int> given_n, bool inverse, Format format) {
    const paw::MapId id = require_map(bijection);
    const paw::Word input = paw::Word::parse(word_text);
    const paw::Engines& eng = paw::default_engines();

    paw::Word output;
    if (inverse) {
        // Inverses take a codomain word; its length is n itself.
        const paw::FamilyId codomain =
            (id == paw::MapId::p1f)   ? paw::FamilyId::p1a
            : (id == paw::MapId::p1g) ? paw::FamilyId::p1d
                                      : paw::FamilyId::p2a;
        const int n = infer_n(paw::family_spec(codomain), input, given_n, "codomain");
        (void)n;
        switch (id) {
        case paw::MapId::p1f: output = eng.p1.f_inv(input); break;
        case paw::MapId::p1g: output = eng.p1.g_inv(input); break;
        case paw::MapId::p2f: output = eng.p2.f_inv(input); break;
        case paw::MapId::p2g: output = eng.p2.g_inv(input); break;
        }
    } else {
        const paw::FamilyId domain = (id == paw::MapId::p1f)   ? paw::FamilyId::p1b
                                     : (id == paw::MapId::p1g) ? paw::FamilyId::p1c
                                     : (id == paw::MapId::p2f) ? paw::FamilyId::p2b
                                                               : paw::FamilyId::p2gdom;
        const int n = infer_n(paw::family_spec(domain), input, given_n, "domain");
        switch (id) {
        case paw::MapId::p1f: output = eng.p1.f(n, input); break;
        case paw::MapId::p1g: output = eng.p1.g(n, input); break;
        case paw::MapId::p2f: output = eng.p2.f(n, input); break;
        case paw::MapId::p2g: output = eng.p2.g(n, input); break;
        }
    }

    switch (format) {
    case Format::text:
        std::cout << output.display() << "\n";
        break;
    case Format::csv:
        std::cout << "input,output\n" << input.digits() << ',' << output.digits() << "\n";
        break;
    case Format::json:
        std::cout << ordered_json{{"bijection", bijection},
                                  {"input", input.digits()},
                                  {"output", output.digits()}}
                  << "\n";
        break;
    }
    return 0;
}

int cmd_verify(int max_n_p1, int max_n_p2, Format format) {
    paw::VerifyOptions options;
    options.max_n_p1 = max_n_p1;
    options.max_n_p2 = max_n_p2;
    const paw::VerificationReport report = paw::run_all(options);
    switch (format) {
    case Format::text: std::cout << paw::report_text(report); break;
    case Format::csv: std::cout << paw::report_csv(report); break;
    case Format::json: std::cout << paw::report_json(report); break;
    }
    return report.all_pass() ? 0 : 1;
}

struct TableRow {
    int n = 0;
    std::string count_a;
    std::string count_b;
    bool equal = false;
    std::optional<bool> recurrence;
    std::optional<bool> bfile;
};

int cmd_table(const std::string& problem, int max_n, const std::string& bfile_path,
              Format format) {
    paw::FamilyId fam_a, fam_b;
    paw::RecurrenceKind kind;
    if (problem == "p1") {
        fam_a = paw::FamilyId::p1a;
        fam_b = paw::FamilyId::p1b;
        kind = paw::RecurrenceKind::p1;
    } else if (problem == "p2") {
        fam_a = paw::FamilyId::p2a;
        fam_b = paw::FamilyId::p2b;
        kind = paw::RecurrenceKind::p2;
    } else {
        throw std::invalid_argument("unknown problem: " + problem + " (expected p1|p2)");
    }
    const int min_n = paw::family_spec(fam_a).min_n;
    if (max_n < min_n) {
        throw std::invalid_argument("--max-n must be at least " + std::to_string(min_n));
    }

    const std::vector<paw::BigInt> counts_a = paw::count_family_range(fam_a, min_n, max_n);
    const std::vector<paw::BigInt> counts_b = paw::count_family_range(fam_b, min_n, max_n);

    std::optional<paw::BFileComparison> bcmp;
    if (!bfile_path.empty()) {
        const paw::BFileSequence seq = paw::load_bfile(bfile_path);
        const auto offset = paw::discover_bfile_offset(seq, fam_a);
        if (!offset) {
            throw paw::parse_error("b-file " + bfile_path +
                                   " does not align with the counts of " +
                                   std::string(paw::family_name(fam_a)));
        }
        bcmp = paw::compare_bfile(seq, fam_a, *offset);
    }

    std::vector<TableRow> rows;
    bool any_fail = false;
    for (int n = min_n; n <= max_n; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - min_n);
        TableRow row;
        row.n = n;
        row.count_a = counts_a[i].get_str();
        row.count_b = counts_b[i].get_str();
        row.equal = counts_a[i] == counts_b[i];
        if (i >= 2) {
            const paw::BigInt expected =
                kind == paw::RecurrenceKind::p1
                    ? paw::BigInt(4 * counts_a[i - 1] - 2 * counts_a[i - 2])
                    : paw::BigInt(2 * counts_a[i - 1] + counts_a[i - 2] + 1);
            row.recurrence = counts_a[i] == expected;
        }
        if (bcmp) {
            for (const auto& r : bcmp->rows) {
                if (r.n == n) {
                    row.bfile = r.pass;
                    break;
                }
            }
        }
        any_fail = any_fail || !row.equal || (row.recurrence && !*row.recurrence) ||
                   (row.bfile && !*row.bfile);
        rows.push_back(std::move(row));
    }

    const auto flag = [](std::optional<bool> f) {
        return !f ? std::string("-") : (*f ? std::string("ok") : std::string("fail"));
    };
    switch (format) {
    case Format::text: {
        if (bcmp) {
            std::cout << "b-file offset: " << bcmp->offset << "\n";
        }
        std::size_t wa = 7, wb = 7;
        for (const TableRow& r : rows) {
            wa = std::max(wa, r.count_a.size());
            wb = std::max(wb, r.count_b.size());
        }
        std::printf("%5s  %*s  %*s  %-5s  %-10s%s\n", "n", static_cast<int>(wa), "count_a",
                    static_cast<int>(wb), "count_b", "equal", "recurrence",
                    bcmp ? "  bfile" : "");
        for (const TableRow& r : rows) {
            std::printf("%5d  %*s  %*s  %-5s  %-10s", r.n, static_cast<int>(wa),
                        r.count_a.c_str(), static_cast<int>(wb), r.count_b.c_str(),
                        r.equal ? "ok" : "fail", flag(r.recurrence).c_str());
            if (bcmp) {
                std::printf("  %s", flag(r.bfile).c_str());
            }
            std::printf("\n");
        }
        break;
    }
    case Format::csv: {
        if (bcmp) {
            std::cerr << "b-file offset: " << bcmp->offset << "\n";
        }
        std::cout << "n,count_a,count_b,equal,recurrence" << (bcmp ? ",bfile" : "") << "\n";
        for (const TableRow& r : rows) {
            std::cout << r.n << ',' << r.count_a << ',' << r.count_b << ','
                      << (r.equal ? "ok" : "fail") << ',' << flag(r.recurrence);
            if (bcmp) {
                std::cout << ',' << flag(r.bfile);
            }
            std::cout << "\n";
        }
        break;
    }
    case Format::json: {
        ordered_json arr = ordered_json::array();
        for (const TableRow& r : rows) {
            ordered_json row = {{"n", r.n},
                                {"count_a", r.count_a},
                                {"count_b", r.count_b},
                                {"equal", r.equal}};
            row["recurrence"] = r.recurrence ? ordered_json(*r.recurrence) : ordered_json();
            if (bcmp) {
                row["bfile"] = r.bfile ? ordered_json(*r.bfile) : ordered_json();
            }
            arr.push_back(std::move(row));
        }
        ordered_json doc = {{"problem", problem}, {"rows", arr}};
        if (bcmp) {
            doc["bfile_offset"] = bcmp->offset;
        }
        std::cout << doc.dump(2) << "\n";
        break;
    }
    }
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding word families: enumeration, counting and bijections"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --format appear after the subcommand as well

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string family, bijection, word_text, problem, bfile_path;
    int n = 0;
    int max_n = 0;
    std::optional<int> opt_n;

    CLI::App* count = app.add_subcommand("count", "count the members of a family at n");
    count->add_option("--family", family, "family id")->required();
    count->add_option("--n", n, "parameter n")->required();

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list the members of a family at n in lex order");
    enumerate->add_option("--family", family, "family id")->required();
    enumerate->add_option("--n", n, "parameter n")->required();

    CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection to a domain word");
    map_cmd->add_option("--bijection", bijection, "bijection id")->required();
    map_cmd->add_option("--word", word_text, "input word (digits; \"\" for the empty word)")
        ->required();
    map_cmd->add_option("--n", opt_n, "cross-check for the inferred parameter n");

    CLI::App* invert = app.add_subcommand("invert", "apply the inverse of a bijection");
    invert->add_option("--bijection", bijection, "bijection id")->required();
    invert->add_option("--word", word_text, "input word (digits; \"\" for the empty word)")
        ->required();
    invert->add_option("--n", opt_n, "cross-check for the inferred parameter n");

    CLI::App* verify = app.add_subcommand("verify", "run the certification suite");
    int verify_max_n = 0;
    verify->add_option("--max-n", verify_max_n,
                       "override both exhaustive bounds (defaults: 8 for p1, 12 for p2)")
        ->check(CLI::Range(2, 12));

    CLI::App* table = app.add_subcommand("table", "count table for one problem");
    table->add_option("--problem", problem, "p1 or p2")->required();
    table->add_option("--max-n", max_n, "last row")->required();
    table->add_option("--bfile", bfile_path, "OEIS b-file to cross-check against");

    CLI::App* selftest = app.add_subcommand("selftest", "certification suite at default bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format format = parse_format(format_name);
        if (count->parsed()) {
            return cmd_count(family, n, format);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(family, n, format);
        }
        if (map_cmd->parsed()) {
            return cmd_map(bijection, word_text, opt_n, false, format);
        }
        if (invert->parsed()) {
            return cmd_map(bijection, word_text, opt_n, true, format);
        }
        if (verify->parsed()) {
            const int p1_bound = verify_max_n > 0 ? verify_max_n : 8;
            const int p2_bound = verify_max_n > 0 ? verify_max_n : 12;
            return cmd_verify(p1_bound, p2_bound, format);
        }
        if (table->parsed()) {
            return cmd_table(problem, max_n, bfile_path, format);
        }
        if (selftest->parsed()) {
            return cmd_verify(8, 12, format);
        }
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
