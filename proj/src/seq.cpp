#include "cactus/seq.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace cactus {

namespace {

// Largest accepted entry value. Keeps volume within int64 even at the
// maximum sequence length; anything bigger can never satisfy d1 <= n-1.
constexpr Count kMaxEntryValue = 1'000'000'000;

Count parse_int(std::string_view tok, std::string_view whole, size_t token_index) {
  Count value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("token " + std::to_string(token_index + 1) + " ('" +
                                std::string(whole) + "'): not an integer");
  }
  return value;
}

}  // namespace

Count floor_div(Count a, Count b) {
  assert(b > 0);
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

DegreeSequence parse_sequence(const std::string& text) {
  std::vector<Count> entries;
  size_t token_index = 0;
  size_t pos = 0;
  bool saw_token = false;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    const size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    const std::string_view tok(text.data() + start, pos - start);
    saw_token = true;

    const size_t caret = tok.find('^');
    Count base = 0;
    Count repeat = 1;
    if (caret == std::string_view::npos) {
      base = parse_int(tok, tok, token_index);
    } else {
      base = parse_int(tok.substr(0, caret), tok, token_index);
      repeat = parse_int(tok.substr(caret + 1), tok, token_index);
      if (repeat < 1) {
        throw std::invalid_argument("token " + std::to_string(token_index + 1) + " ('" +
                                    std::string(tok) + "'): exponent must be >= 1");
      }
    }
    if (base < 1) {
      throw std::invalid_argument("token " + std::to_string(token_index + 1) + " ('" +
                                  std::string(tok) + "'): entries must be >= 1");
    }
    if (base > kMaxEntryValue) {
      throw std::invalid_argument("token " + std::to_string(token_index + 1) + " ('" +
                                  std::string(tok) + "'): entry too large");
    }
    if (static_cast<Count>(entries.size()) + repeat > kMaxSequenceLength) {
      throw std::invalid_argument("sequence longer than " + std::to_string(kMaxSequenceLength) +
                                  " entries");
    }
    entries.insert(entries.end(), static_cast<size_t>(repeat), base);
    ++token_index;
  }
  if (!saw_token) throw std::invalid_argument("empty sequence");
  return sequence_from_entries(std::move(entries));
}

DegreeSequence sequence_from_entries(std::vector<Count> entries) {
  if (static_cast<Count>(entries.size()) > kMaxSequenceLength) {
    throw std::invalid_argument("sequence longer than " + std::to_string(kMaxSequenceLength) +
                                " entries");
  }
  for (Count e : entries) {
    if (e < 1) throw std::invalid_argument("entries must be >= 1");
  }
  DegreeSequence d;
  d.perm.resize(entries.size());
  std::iota(d.perm.begin(), d.perm.end(), 0u);
  std::stable_sort(d.perm.begin(), d.perm.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return entries[a] > entries[b]; });
  d.entries.resize(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) d.entries[i] = entries[d.perm[i]];
  return d;
}

SequenceParams params(const DegreeSequence& d) {
  SequenceParams p;
  p.n = d.size();
  for (Count e : d.entries) {
    p.volume += e;
    if (e == 1) {
      ++p.mult1;
    } else if (e % 2 == 1) {
      ++p.multOdd;
    }
  }
  if (p.volume % 2 != 0) {
    throw std::invalid_argument("not a degree sequence: volume " + std::to_string(p.volume) +
                                " is odd");
  }
  p.m = p.volume / 2;
  // Handshake: the number of odd entries is even for even volume.
  assert((p.mult1 + p.multOdd) % 2 == 0);
  p.beta = std::max(p.mult1, (p.mult1 + p.multOdd) / 2);
  return p;
}

Count cactus_edge_bound(Count n, Count beta) {
  assert(n >= 1);
  return floor_div(3 * (n - 1) - beta, 2);
}

Count bicactus_edge_bound(Count n, Count beta) {
  assert(n >= 1);
  return floor_div(4 * (n - 1) - beta, 3);
}

bool technical_identities_hold(Count n, Count beta) {
  assert(n >= 2 && beta >= 0 && beta <= n);
  const Count via_beta = 2 * floor_div(2 * (n - 1 - beta), 3) + beta;
  const Count via_beta1 = 2 * floor_div(2 * (n - 2 - beta), 3) + beta + 1;
  if (bicactus_edge_bound(n, beta) != std::max(via_beta, via_beta1)) return false;
  const Count via_beta2 = 2 * floor_div(2 * (n - 3 - beta), 3) + beta + 2;
  if (via_beta < via_beta2) return false;
  return floor_div(floor_div(4 * (n - 1) + 1, 3), 2) == floor_div(2 * (n - 1), 3);
}

}  // namespace cactus
