#include "paw/counting.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "paw/errors.hpp"

namespace paw {

namespace {

const FamilySpec& p2_prefix_spec() {
    // Words over {1..3} starting 1, avoiding 13 and 31, any last letter:
    // the superset of p2b whose last-letter split gives x, y, z.
    static const FamilySpec spec = [] {
        FamilySpec s;
        s.id = "p2prefix";
        s.alphabet_size = 3;
        s.length_scale = 1;
        s.length_offset = 3;
        s.min_n = 0;
        s.first_letter = 1;
        s.forbidden = {Pattern::parse("13"), Pattern::parse("31")};
        return s;
    }();
    return spec;
}

} // namespace

TransferAutomaton::TransferAutomaton(const FamilySpec& spec) : spec_(spec) {
    for (const Pattern& p : spec_.forbidden) {
        memory_ = std::max(memory_, static_cast<int>(p.size()) - 1);
    }

    // States are all words of length <= memory_ over the alphabet, id 0
    // being the empty word; unreachable suffixes are harmless.
    state_words_.push_back("");
    std::size_t level_begin = 0;
    for (int len = 1; len <= memory_; ++len) {
        const std::size_t level_end = state_words_.size();
        for (std::size_t s = level_begin; s < level_end; ++s) {
            for (int a = 1; a <= spec_.alphabet_size; ++a) {
                state_words_.push_back(state_words_[s] + static_cast<char>('0' + a));
            }
        }
        level_begin = level_end;
    }

    std::map<std::string, int> index;
    for (std::size_t s = 0; s < state_words_.size(); ++s) {
        index[state_words_[s]] = static_cast<int>(s);
    }

    next_.assign(state_words_.size(), std::array<int, 8>{});
    for (std::size_t s = 0; s < state_words_.size(); ++s) {
        const std::string& u = state_words_[s];
        for (int a = 1; a <= 7; ++a) {
            int target = -1;
            if (a <= spec_.alphabet_size) {
                const bool first_ok =
                    !u.empty() || spec_.first_letter == 0 || a == spec_.first_letter;
                const bool step_ok =
                    u.empty() || !spec_.walk || std::abs((u.back() - '0') - a) == 1;
                if (first_ok && step_ok) {
                    std::string ext = u + static_cast<char>('0' + a);
                    const Word w = Word::from_digits(ext);
                    bool dead = false;
                    for (const Pattern& p : spec_.forbidden) {
                        if (p.size() <= w.size() &&
                            p.matches_at(w, w.size() - p.size())) {
                            dead = true;
                            break;
                        }
                    }
                    if (!dead) {
                        if (static_cast<int>(ext.size()) > memory_) {
                            ext.erase(0, ext.size() - memory_);
                        }
                        target = index.at(ext);
                    }
                }
            }
            next_[s][a] = target;
        }
    }
}

void TransferAutomaton::advance(std::vector<BigInt>& vec) const {
    std::vector<BigInt> out(vec.size(), BigInt(0));
    for (std::size_t s = 0; s < vec.size(); ++s) {
        if (vec[s] == 0) {
            continue;
        }
        for (int a = 1; a <= spec_.alphabet_size; ++a) {
            const int t = next_[s][a];
            if (t >= 0) {
                out[static_cast<std::size_t>(t)] += vec[s];
            }
        }
    }
    vec.swap(out);
}

BigInt TransferAutomaton::accepted_sum(const std::vector<BigInt>& vec, int length) const {
    if (length == 0) {
        return (spec_.first_letter == 0 && spec_.last_letters.empty()) ? vec[0] : BigInt(0);
    }
    BigInt total = 0;
    for (std::size_t s = 1; s < vec.size(); ++s) {
        const std::string& u = state_words_[s];
        if (spec_.last_letter_allowed(u.back() - '0')) {
            total += vec[s];
        }
    }
    return total;
}

BigInt TransferAutomaton::count(int length) const {
    const std::vector<BigInt> counts = count_range(length, length, 1);
    return counts.front();
}

std::vector<BigInt> TransferAutomaton::count_range(int lo, int hi, int step) const {
    if (lo < 0 || hi < lo || step <= 0) {
        throw std::invalid_argument("bad count range");
    }
    std::vector<BigInt> vec(state_words_.size(), BigInt(0));
    vec[0] = 1;
    std::vector<BigInt> out;
    for (int len = 0; len <= hi; ++len) {
        if (len >= lo && (len - lo) % step == 0) {
            out.push_back(accepted_sum(vec, len));
        }
        if (len < hi) {
            advance(vec);
        }
    }
    return out;
}

std::array<BigInt, 8> TransferAutomaton::count_by_last_letter(int length) const {
    if (length < 0) {
        throw std::invalid_argument("negative length");
    }
    std::vector<BigInt> vec(state_words_.size(), BigInt(0));
    vec[0] = 1;
    for (int len = 0; len < length; ++len) {
        advance(vec);
    }
    std::array<BigInt, 8> grouped{};
    if (length > 0) {
        for (std::size_t s = 1; s < vec.size(); ++s) {
            grouped[static_cast<std::size_t>(state_words_[s].back() - '0')] += vec[s];
        }
    }
    return grouped;
}

BigInt count_family(FamilyId id, int n) {
    return count_family_range(id, n, n).front();
}

std::vector<BigInt> count_family_range(FamilyId id, int n_lo, int n_hi) {
    const FamilySpec& spec = family_spec(id);
    if (n_lo < spec.min_n) {
        throw std::invalid_argument("family " + spec.id + " requires n >= " +
                                    std::to_string(spec.min_n));
    }
    if (n_hi < n_lo) {
        throw std::invalid_argument("empty n range");
    }
    const TransferAutomaton automaton(spec);
    return automaton.count_range(spec.length_of(n_lo), spec.length_of(n_hi),
                                 spec.length_scale);
}

EndingCounts ending_counts(int n) {
    if (n < 0) {
        throw std::invalid_argument("n must be >= 0");
    }
    // (x,y,z) at parameter i counts length i+3; stepping one letter:
    // 1 extends words ending 1 or 2, 2 extends anything, 3 extends 2 or 3.
    BigInt x = 2, y = 2, z = 1;
    BigInt x_prev1 = 1, x_prev2 = 1; // x at n-1 and n-2, seeded for small n
    BigInt z_prev = 0;               // z at n-1
    for (int i = 0; i < n; ++i) {
        x_prev2 = x_prev1;
        x_prev1 = x;
        z_prev = z;
        const BigInt nx = x + y;
        const BigInt ny = x + y + z;
        const BigInt nz = y + z;
        x = nx;
        y = ny;
        z = nz;
    }
    EndingCounts e{x, y, z, BigInt(0), BigInt(0), BigInt(0)};
    if (n >= 1) {
        e.a = z_prev;
        e.b = z_prev;
        e.c = (n >= 2) ? x_prev2 : BigInt(1);
    }
    return e;
}

EndingCounts ending_counts_automaton(int n) {
    if (n < 0) {
        throw std::invalid_argument("n must be >= 0");
    }
    const TransferAutomaton prefix(p2_prefix_spec());
    const auto xyz = prefix.count_by_last_letter(n + 3);
    const TransferAutomaton avoid(family_spec(FamilyId::p2a));
    const auto abc = avoid.count_by_last_letter(n);
    return EndingCounts{xyz[1], xyz[2], xyz[3], abc[1], abc[2], abc[3]};
}

EndingCounts ending_counts_enumeration(int n) {
    if (n < 0) {
        throw std::invalid_argument("n must be >= 0");
    }
    EndingCounts e{BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
    for_each_member(p2_prefix_spec(), n + 3, [&](const Word& w) {
        switch (w.last()) {
        case 1: ++e.x; break;
        case 2: ++e.y; break;
        default: ++e.z; break;
        }
    });
    for_each_member(family_spec(FamilyId::p2a), n, [&](const Word& w) {
        if (w.empty()) {
            return; // the empty word has no last letter
        }
        switch (w.last()) {
        case 1: ++e.a; break;
        case 2: ++e.b; break;
        default: ++e.c; break;
        }
    });
    return e;
}

bool recurrence_check(const std::vector<BigInt>& seq, RecurrenceKind kind) {
    if (seq.size() < 3) {
        throw std::invalid_argument("recurrence check needs at least 3 entries");
    }
    for (std::size_t i = 2; i < seq.size(); ++i) {
        const BigInt expected = kind == RecurrenceKind::p1
                                    ? BigInt(4 * seq[i - 1] - 2 * seq[i - 2])
                                    : BigInt(2 * seq[i - 1] + seq[i - 2] + 1);
        if (seq[i] != expected) {
            return false;
        }
    }
    return true;
}

namespace {

bool valid_integer_token(const std::string& tok) {
    if (tok.empty()) {
        return false;
    }
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) {
        return false;
    }
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

BFileSequence parse_bfile(std::istream& in) {
    BFileSequence seq;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string idx_tok, val_tok, extra;
        fields >> idx_tok >> val_tok;
        if (val_tok.empty() || (fields >> extra)) {
            throw parse_error("b-file line " + std::to_string(lineno) +
                              ": expected \"index value\"");
        }
        if (!valid_integer_token(idx_tok) || !valid_integer_token(val_tok)) {
            throw parse_error("b-file line " + std::to_string(lineno) +
                              ": non-integer token");
        }
        BFileEntry entry;
        entry.index = std::strtoll(idx_tok.c_str(), nullptr, 10);
        entry.value = BigInt(val_tok);
        if (!seq.entries.empty() && entry.index <= seq.entries.back().index) {
            throw parse_error("b-file line " + std::to_string(lineno) +
                              ": indices must be strictly increasing");
        }
        seq.entries.push_back(std::move(entry));
    }
    return seq;
}

BFileSequence load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open b-file: " + path);
    }
    return parse_bfile(in);
}

std::optional<long long> discover_bfile_offset(const BFileSequence& seq, FamilyId id) {
    const FamilySpec& spec = family_spec(id);
    if (seq.entries.size() < 2) {
        return std::nullopt;
    }
    const std::vector<BigInt> first_two =
        count_family_range(id, spec.min_n, spec.min_n + 1);
    std::map<long long, const BigInt*> by_index;
    for (const BFileEntry& e : seq.entries) {
        by_index[e.index] = &e.value;
    }
    for (const BFileEntry& e : seq.entries) {
        if (e.value != first_two[0]) {
            continue;
        }
        const auto next = by_index.find(e.index + 1);
        if (next != by_index.end() && *next->second == first_two[1]) {
            return e.index - spec.min_n;
        }
    }
    return std::nullopt;
}

BFileComparison compare_bfile(const BFileSequence& seq, FamilyId id, long long offset) {
    const FamilySpec& spec = family_spec(id);
    BFileComparison cmp;
    cmp.offset = offset;

    int n_lo = -1, n_hi = -1;
    for (const BFileEntry& e : seq.entries) {
        const long long n = e.index - offset;
        if (n < spec.min_n || n > 100000) {
            continue;
        }
        if (n_lo < 0) {
            n_lo = static_cast<int>(n);
        }
        n_hi = static_cast<int>(n);
    }
    if (n_lo < 0) {
        return cmp;
    }

    const std::vector<BigInt> counts = count_family_range(id, n_lo, n_hi);
    std::map<long long, const BigInt*> by_index;
    for (const BFileEntry& e : seq.entries) {
        by_index[e.index] = &e.value;
    }
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto it = by_index.find(n + offset);
        if (it == by_index.end()) {
            continue;
        }
        const bool pass = *it->second == counts[static_cast<std::size_t>(n - n_lo)];
        cmp.rows.push_back({n, pass});
        cmp.all_pass = cmp.all_pass && pass;
    }
    return cmp;
}

} // namespace paw
