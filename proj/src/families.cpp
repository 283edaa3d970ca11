#include "paw/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace paw {

namespace {

std::vector<FamilySpec> build_specs() {
    std::vector<FamilySpec> specs(7);

    FamilySpec& p1a = specs[0];
    p1a.id = "p1a";
    p1a.alphabet_size = 4;
    p1a.length_scale = 1;
    p1a.min_n = 1;
    p1a.forbidden = {Pattern::parse("13"), Pattern::parse("24")};

    FamilySpec& p1b = specs[1];
    p1b.id = "p1b";
    p1b.alphabet_size = 7;
    p1b.length_scale = 2;
    p1b.length_offset = 4;
    p1b.min_n = 1;
    p1b.first_letter = 1;
    p1b.last_letters = {4};
    p1b.walk = true;

    FamilySpec& p1c = specs[2];
    p1c.id = "p1c";
    p1c.alphabet_size = 7;
    p1c.length_scale = 2;
    p1c.length_offset = 2;
    p1c.min_n = 1;
    p1c.first_letter = 1;
    p1c.last_letters = {2, 6};
    p1c.walk = true;

    FamilySpec& p1d = specs[3];
    p1d.id = "p1d";
    p1d.alphabet_size = 4;
    p1d.length_scale = 1;
    p1d.min_n = 1;
    p1d.last_letters = {3, 4};
    p1d.forbidden = {Pattern::parse("13"), Pattern::parse("24")};

    FamilySpec& p2a = specs[4];
    p2a.id = "p2a";
    p2a.alphabet_size = 3;
    p2a.length_scale = 1;
    p2a.min_n = 0;
    p2a.forbidden = {Pattern::parse("13"), Pattern::parse("1.3")};

    FamilySpec& p2b = specs[5];
    p2b.id = "p2b";
    p2b.alphabet_size = 3;
    p2b.length_scale = 1;
    p2b.length_offset = 3;
    p2b.min_n = 0;
    p2b.first_letter = 1;
    p2b.last_letters = {3};
    p2b.forbidden = {Pattern::parse("13"), Pattern::parse("31")};

    FamilySpec& p2gdom = specs[6];
    p2gdom.id = "p2gdom";
    p2gdom.alphabet_size = 3;
    p2gdom.length_scale = 1;
    p2gdom.length_offset = 1;
    p2gdom.min_n = 0;
    p2gdom.first_letter = 1;
    p2gdom.last_letters = {1};
    p2gdom.forbidden = {Pattern::parse("13"), Pattern::parse("31")};

    return specs;
}

const std::vector<FamilySpec>& specs() {
    static const std::vector<FamilySpec> s = build_specs();
    return s;
}

// Suffix check against a raw digit buffer: does any forbidden pattern end
// exactly at position pos (the letter `next` about to be appended)?
bool forbidden_suffix(const FamilySpec& spec, const char* buf, std::size_t pos, Letter next) {
    for (const Pattern& p : spec.forbidden) {
        const std::size_t m = p.size();
        if (pos + 1 < m) {
            continue;
        }
        const auto& atoms = p.atoms();
        if (!atoms[m - 1].matches(next)) {
            continue;
        }
        bool match = true;
        for (std::size_t j = 0; j + 1 < m; ++j) {
            if (!atoms[j].matches(buf[pos + 1 - m + j] - '0')) {
                match = false;
                break;
            }
        }
        if (match) {
            return true;
        }
    }
    return false;
}

// Can a walk sitting on letter `from` still reach an allowed last letter in
// exactly `steps` unit steps? Distance and parity must both work out.
bool walk_can_finish(const FamilySpec& spec, Letter from, int steps) {
    if (spec.last_letters.empty()) {
        return true;
    }
    for (Letter target : spec.last_letters) {
        const int dist = std::abs(target - from);
        if (dist <= steps && (steps - dist) % 2 == 0) {
            return true;
        }
    }
    return false;
}

void enumerate_rec(const FamilySpec& spec, int length, std::string& buf,
                   const std::function<void(const Word&)>& fn) {
    const int pos = static_cast<int>(buf.size());
    const bool final_pos = pos + 1 == length;
    for (Letter a = 1; a <= spec.alphabet_size; ++a) {
        if (pos == 0 && spec.first_letter != 0 && a != spec.first_letter) {
            continue;
        }
        if (spec.walk && pos > 0) {
            const Letter prev = buf.back() - '0';
            if (std::abs(prev - a) != 1) {
                continue;
            }
        }
        if (final_pos && !spec.last_letter_allowed(a)) {
            continue;
        }
        if (!final_pos && spec.walk && !walk_can_finish(spec, a, length - pos - 1)) {
            continue;
        }
        if (forbidden_suffix(spec, buf.data(), pos, a)) {
            continue;
        }
        buf.push_back(static_cast<char>('0' + a));
        if (final_pos) {
            fn(Word::from_digits(buf));
        } else {
            enumerate_rec(spec, length, buf, fn);
        }
        buf.pop_back();
    }
}

std::uint64_t pow_saturated(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
    }
    return r;
}

} // namespace

std::optional<int> FamilySpec::n_for_length(std::size_t len) const {
    const auto l = static_cast<long long>(len) - length_offset;
    if (length_scale == 0 || l < 0 || l % length_scale != 0) {
        return std::nullopt;
    }
    const long long n = l / length_scale;
    if (n < min_n) {
        return std::nullopt;
    }
    return static_cast<int>(n);
}

bool FamilySpec::last_letter_allowed(Letter l) const {
    return last_letters.empty() ||
           std::find(last_letters.begin(), last_letters.end(), l) != last_letters.end();
}

bool FamilySpec::admits(const Word& w, int length) const {
    if (static_cast<int>(w.size()) != length) {
        return false;
    }
    if (w.empty()) {
        return first_letter == 0 && last_letters.empty();
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter l = w.at(i);
        if (l < 1 || l > alphabet_size) {
            return false;
        }
    }
    if (first_letter != 0 && w.first() != first_letter) {
        return false;
    }
    if (!last_letter_allowed(w.last())) {
        return false;
    }
    if (walk && !is_walk(w, alphabet_size)) {
        return false;
    }
    return avoids_all(w, forbidden);
}

const FamilySpec& family_spec(FamilyId id) {
    return specs()[static_cast<std::size_t>(id)];
}

std::string_view family_name(FamilyId id) {
    return family_spec(id).id;
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (FamilyId id : all_families()) {
        if (family_name(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> ids = {
        FamilyId::p1a, FamilyId::p1b, FamilyId::p1c,    FamilyId::p1d,
        FamilyId::p2a, FamilyId::p2b, FamilyId::p2gdom,
    };
    return ids;
}

bool membership(FamilyId id, int n, const Word& w) {
    const FamilySpec& spec = family_spec(id);
    if (n < spec.min_n) {
        throw std::invalid_argument("family " + spec.id + " requires n >= " +
                                    std::to_string(spec.min_n));
    }
    return spec.admits(w, spec.length_of(n));
}

void for_each_member(const FamilySpec& spec, int length,
                     const std::function<void(const Word&)>& fn) {
    if (length < 0) {
        throw std::invalid_argument("negative word length");
    }
    if (length == 0) {
        if (spec.first_letter == 0 && spec.last_letters.empty()) {
            fn(Word{});
        }
        return;
    }
    std::string buf;
    buf.reserve(static_cast<std::size_t>(length));
    enumerate_rec(spec, length, buf, fn);
}

std::vector<Word> enumerate_spec(const FamilySpec& spec, int length) {
    std::vector<Word> out;
    for_each_member(spec, length, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> enumerate_family(FamilyId id, int n) {
    const FamilySpec& spec = family_spec(id);
    if (n < spec.min_n) {
        throw std::invalid_argument("family " + spec.id + " requires n >= " +
                                    std::to_string(spec.min_n));
    }
    return enumerate_spec(spec, spec.length_of(n));
}

std::uint64_t family_size(FamilyId id, int n) {
    const FamilySpec& spec = family_spec(id);
    if (n < spec.min_n) {
        throw std::invalid_argument("family " + spec.id + " requires n >= " +
                                    std::to_string(spec.min_n));
    }
    std::uint64_t count = 0;
    for_each_member(spec, spec.length_of(n), [&](const Word&) { ++count; });
    return count;
}

std::uint64_t brute_force_candidates(FamilyId id, int n) {
    const FamilySpec& spec = family_spec(id);
    return pow_saturated(static_cast<std::uint64_t>(spec.alphabet_size), spec.length_of(n));
}

std::vector<Word> enumerate_brute_force(FamilyId id, int n, ExecPolicy policy,
                                        std::uint64_t max_candidates) {
    const FamilySpec& spec = family_spec(id);
    if (n < spec.min_n) {
        throw std::invalid_argument("family " + spec.id + " requires n >= " +
                                    std::to_string(spec.min_n));
    }
    const int length = spec.length_of(n);
    const std::uint64_t total = brute_force_candidates(id, n);
    if (total > max_candidates) {
        throw std::invalid_argument("brute-force space for " + spec.id + " at n=" +
                                    std::to_string(n) + " has " + std::to_string(total) +
                                    " candidates, above the budget of " +
                                    std::to_string(max_candidates));
    }
    if (length == 0) {
        return enumerate_spec(spec, 0);
    }

    const auto k = static_cast<std::uint64_t>(spec.alphabet_size);
    return collect_ordered<Word>(total, policy, [&](std::uint64_t idx, std::vector<Word>& out) {
        // Base-k digits, most significant first, so index order is lex order.
        std::array<char, 32> buf{};
        std::uint64_t rest = idx;
        for (int j = length - 1; j >= 0; --j) {
            buf[static_cast<std::size_t>(j)] =
                static_cast<char>('1' + static_cast<int>(rest % k));
            rest /= k;
        }
        const Word w = Word::from_digits(
            std::string_view(buf.data(), static_cast<std::size_t>(length)));
        if (spec.admits(w, length)) {
            out.push_back(w);
        }
    });
}

} // namespace paw
