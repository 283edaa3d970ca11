#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "paw/families.hpp"

namespace paw {

/// Counts grow past 64 bits well inside the requested ranges, so every
/// counting path uses GMP integers.
using BigInt = mpz_class;

/// Deterministic automaton whose live states are the words of length below
/// the longest forbidden pattern (at least one letter of history is always
/// kept, for walk steps and last-letter acceptance). Counting a family is
/// then iterating an integer vector over the transition table.
class TransferAutomaton {
public:
    explicit TransferAutomaton(const FamilySpec& spec);

    int state_count() const { return static_cast<int>(state_words_.size()); }

    /// Members of exact word length `length`.
    BigInt count(int length) const;

    /// Counts at lengths lo, lo+step, ..., hi in a single vector pass.
    std::vector<BigInt> count_range(int lo, int hi, int step) const;

    /// Live-word counts at the given length grouped by last letter
    /// (index 1..7); the family's own last-letter restriction is ignored.
    std::array<BigInt, 8> count_by_last_letter(int length) const;

private:
    void advance(std::vector<BigInt>& vec) const;
    BigInt accepted_sum(const std::vector<BigInt>& vec, int length) const;

    FamilySpec spec_;
    int memory_ = 1;
    std::vector<std::string> state_words_;
    std::vector<std::array<int, 8>> next_; // next_[state][letter], -1 = dead
};

/// Exact member count via the automaton; reaches n far beyond enumeration.
BigInt count_family(FamilyId id, int n);

/// count_family for every n in [n_lo, n_hi] with one automaton pass.
std::vector<BigInt> count_family_range(FamilyId id, int n_lo, int n_hi);

/// The grouped counts around the second problem: x/y/z count the words of
/// length n+3 over {1..3} that start with 1 and avoid 13 and 31, by last
/// letter 1/2/3; a/b/c count the p2a members of length n by last letter.
struct EndingCounts {
    BigInt x, y, z;
    BigInt a, b, c;
    friend bool operator==(const EndingCounts&, const EndingCounts&) = default;
};

/// Closed route: x,y,z iterate (x,y,z) <- (x+y, x+y+z, y+z) from (2,2,1),
/// and a = b = z(n-1), c = x(n-2) (with a=b=0 at n=0, c=1 at n=1, 0 at n=0).
EndingCounts ending_counts(int n);

/// Independent route via automaton last-letter grouping.
EndingCounts ending_counts_automaton(int n);

/// Independent desk-scale route via exhaustive enumeration.
EndingCounts ending_counts_enumeration(int n);

enum class RecurrenceKind { p1, p2 };

/// p1: s(n) = 4 s(n-1) - 2 s(n-2); p2: s(n) = 2 s(n-1) + s(n-2) + 1.
/// Checks every window of the given sequence. Pre: at least 3 entries.
bool recurrence_check(const std::vector<BigInt>& seq, RecurrenceKind kind);

/// One "index value" pair of an OEIS b-file.
struct BFileEntry {
    long long index = 0;
    BigInt value;
};

struct BFileSequence {
    std::vector<BFileEntry> entries; // indices strictly increasing
};

/// Parses the b-file format: one "index value" pair per line, lines
/// starting with '#' and blank lines ignored. Throws parse_error naming
/// the offending line.
BFileSequence parse_bfile(std::istream& in);
BFileSequence load_bfile(const std::string& path);

/// Finds the offset such that entry index = n + offset, by matching the
/// family's first two counts against consecutive entries. nullopt when the
/// sequence does not align anywhere.
std::optional<long long> discover_bfile_offset(const BFileSequence& seq, FamilyId id);

struct BFileComparison {
    long long offset = 0;
    struct Row {
        int n = 0;
        bool pass = false;
    };
    std::vector<Row> rows; // one per overlapping n, ascending
    bool all_pass = true;
};

/// Checks count_family(id, n) against the entry at index n + offset for
/// every overlapping n.
BFileComparison compare_bfile(const BFileSequence& seq, FamilyId id, long long offset);

} // namespace paw
