#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cactus {

// Degree values, sums and counts. Signed so floor arithmetic on differences
// of the form n - 1 - beta stays exact when the operand goes negative.
using Count = std::int64_t;

// Expansion limit for the a^k shorthand; guards the CLI against accidental
// blowup while leaving room for the performance tests.
inline constexpr Count kMaxSequenceLength = 10'000'000;

// A degree sequence in canonical form: entries sorted non-increasing, all
// >= 1, plus the permutation back to the input order. perm[i] is the 0-based
// input position of entries[i]; the sort is stable, so equal entries keep
// their input order.
struct DegreeSequence {
  std::vector<Count> entries;
  std::vector<std::uint32_t> perm;

  Count size() const { return static_cast<Count>(entries.size()); }
  bool operator==(const DegreeSequence&) const = default;
};

// The scalars every decision rule reads. Only produced for even volume;
// an odd-volume input is not a degree sequence and is rejected instead.
struct SequenceParams {
  Count n = 0;
  Count volume = 0;   // sum of entries
  Count m = 0;        // volume / 2 = edge count of any realization
  Count mult1 = 0;    // entries equal to 1
  Count multOdd = 0;  // odd entries greater than 1
  Count beta = 0;     // max(mult1, (mult1 + multOdd) / 2)
};

// Floor division for b > 0, exact for negative a as well.
Count floor_div(Count a, Count b);

// Parses comma- or whitespace-separated tokens, each INT or INT^INT with a
// positive base and positive exponent, e.g. "4,3,2^6,1". Throws
// std::invalid_argument naming the offending token on malformed input.
DegreeSequence parse_sequence(const std::string& text);

// Canonicalizes an already expanded entry list (sorts, records perm).
// Throws if any entry is < 1 or the list exceeds kMaxSequenceLength.
DegreeSequence sequence_from_entries(std::vector<Count> entries);

// Derives all scalar parameters. Throws std::invalid_argument on odd volume.
SequenceParams params(const DegreeSequence& d);

// floor((3(n-1) - beta) / 2): max edges of a cactus with bridge parameter beta.
Count cactus_edge_bound(Count n, Count beta);

// floor((4(n-1) - beta) / 3): the bi-cactus counterpart.
Count bicactus_edge_bound(Count n, Count beta);

// True iff the three floor identities behind the bi-cactus bound hold at
// (n, beta):
//   floor((4(n-1)-b)/3) == max(2*floor(2(n-1-b)/3)+b, 2*floor(2(n-2-b)/3)+b+1)
//   2*floor(2(n-1-b)/3)+b >= 2*floor(2(n-3-b)/3)+b+2
//   floor(floor((4(n-1)+1)/3)/2) == floor(2(n-1)/3)
// Property-test target only; never consulted on the decision path.
bool technical_identities_hold(Count n, Count beta);

}  // namespace cactus
