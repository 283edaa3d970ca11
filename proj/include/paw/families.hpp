#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paw/parallel.hpp"
#include "paw/word.hpp"

namespace paw {

/// The seven word families under study. Naming: p1* are the two pairs tied
/// to sequence A007070, p2* the pair tied to A048739 plus the auxiliary
/// domain of the second g map.
///
///   p1a    words over {1..4} of length n avoiding factors 13 and 24
///   p1b    unit-step walks over {1..7} of length 2n+4 from 1 to 4
///   p1c    unit-step walks over {1..7} of length 2n+2 from 1 ending 2 or 6
///   p1d    p1a members ending 3 or 4
///   p2a    words over {1..3} of length n avoiding 13 and every 1x3
///   p2b    words over {1..3} of length n+3 starting 1, ending 3,
///          avoiding 13 and 31
///   p2gdom words over {1..3} of length n+1 starting 1, ending 1,
///          avoiding 13 and 31
enum class FamilyId { p1a, p1b, p1c, p1d, p2a, p2b, p2gdom };

/// Declarative description of one family: every constraint the membership
/// test enforces, in data form, so the enumerator and the counting
/// automaton can share it.
struct FamilySpec {
    std::string id;
    int alphabet_size = 0;
    int length_scale = 0;  // word length = length_scale * n + length_offset
    int length_offset = 0;
    int min_n = 0;
    Letter first_letter = 0;           // 0 = unconstrained
    std::vector<Letter> last_letters;  // empty = unconstrained
    bool walk = false;                 // successive letters differ by exactly 1
    std::vector<Pattern> forbidden;

    int length_of(int n) const { return length_scale * n + length_offset; }
    std::optional<int> n_for_length(std::size_t len) const;

    /// Membership against an explicit target length.
    bool admits(const Word& w, int length) const;
    bool last_letter_allowed(Letter l) const;
};

const FamilySpec& family_spec(FamilyId id);
std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);
const std::vector<FamilyId>& all_families();

/// True iff w belongs to the family at parameter n.
/// Throws std::invalid_argument when n is below the family's minimum.
bool membership(FamilyId id, int n, const Word& w);

/// Calls fn for every word of the given length satisfying spec, in strictly
/// increasing lexicographic order. Depth-first generation with pruning on
/// forbidden suffixes, walk steps and last-letter reachability.
void for_each_member(const FamilySpec& spec, int length,
                     const std::function<void(const Word&)>& fn);

std::vector<Word> enumerate_spec(const FamilySpec& spec, int length);
std::vector<Word> enumerate_family(FamilyId id, int n);

/// Number of members at n, counted by enumeration (desk scale; see
/// counting.hpp for the closed counting path that reaches large n).
std::uint64_t family_size(FamilyId id, int n);

/// Reference enumerator: scans every word of the target length over the
/// family alphabet and keeps the members. No pruning; exists to cross-check
/// the DFS enumerator and as the data-parallel scan kernel. Throws
/// std::invalid_argument when the candidate space exceeds max_candidates.
std::vector<Word> enumerate_brute_force(FamilyId id, int n, ExecPolicy policy,
                                        std::uint64_t max_candidates = 400'000'000);

/// Candidate-space size alphabet^length for the brute-force scan, saturated
/// at uint64 max.
std::uint64_t brute_force_candidates(FamilyId id, int n);

} // namespace paw
