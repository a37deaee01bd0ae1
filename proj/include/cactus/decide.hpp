#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cactus/graph.hpp"
#include "cactus/seq.hpp"

namespace cactus {

// Rule table rows; every verdict names the row that decided it.
//   R1  forest/tree volume test          R8  core bi-cactus
//   R2  unicyclic                        R9  cactus
//   R3  bi-unicyclic                     R10 bi-cactus
//   R4  bridgeless cactus                R11 forcibly bi-cactus
//   R5  triangulated cactus              R12 forcibly bipartite unicyclic
//   R6  bridgeless bi-cactus             R13 feasibility guard
//   R7  core cactus
enum class Rule { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13 };

std::string_view rule_name(Rule r);

enum class ReasonCode {
  Ok,
  OddVolume,         // not a degree sequence
  DegreeTooLarge,    // d1 > n-1: no simple realization
  VolumeMismatch,    // volume != the exact value the family requires
  VolumeTooLarge,    // forest: volume > 2n-2
  TooFewEdges,       // m < n-1: every realization is disconnected
  TooFewVertices,    // below the family's minimum n
  LowDegreeTail,     // d3 (resp. d4) < 2: no room for the cycle
  AllTwosOddCycle,   // (2^n) with odd n: the only candidate cycle is odd
  OddDegreePresent,  // bridgeless families need every degree even
  OddEdgeCount,      // m must be even here (all-even bipartite case)
  OddsExceedOnes,    // core families need multOdd <= mult1
  BoundExceeded,     // m above the family edge bound
  NotForciblyShape,  // not one of the forcibly shapes
};

std::string_view reason_code_name(ReasonCode c);

struct Verdict {
  bool realizable = false;
  Rule rule = Rule::R13;
  ReasonCode code = ReasonCode::Ok;
  std::string reason;  // short human phrase; empty when realizable
  std::optional<SequenceParams> computed;  // absent only for odd volume
  std::optional<Count> bound;  // the edge bound, when the row has one
};

// Total decision predicate: true iff some graph of the family realizes d.
// Invalid sequences (odd volume, d1 > n-1) yield rejection verdicts via the
// feasibility guard rather than errors.
Verdict decide(Family f, const DegreeSequence& d);

// One-line sentence naming the rule and the numbers that decided it.
std::string explain(const Verdict& v);

}  // namespace cactus
