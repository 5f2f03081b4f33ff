#include "qfn/matching.hpp"

#include "qfn/error.hpp"

namespace qfn {

PerfectMatching::PerfectMatching(std::vector<std::pair<unsigned, unsigned>> pairs)
    : pairs_(std::move(pairs)) {
  std::vector<bool> seen(2 * pairs_.size() + 1, false);
  for (const auto& [i, j] : pairs_) {
    if (i >= j) throw Error(ErrorKind::InvalidArgument, "matching block not ordered");
    if (j > 2 * pairs_.size() || i < 1 || seen[i] || seen[j])
      throw Error(ErrorKind::InvalidArgument, "matching blocks do not partition [2m]");
    seen[i] = seen[j] = true;
  }
}

int matching_sign(const PerfectMatching& p) {
  std::vector<unsigned> word;
  word.reserve(2 * p.block_count());
  for (const auto& [i, j] : p.pairs()) {
    word.push_back(i);
    word.push_back(j);
  }
  unsigned long inv = 0;
  for (std::size_t a = 0; a < word.size(); ++a)
    for (std::size_t b = a + 1; b < word.size(); ++b)
      if (word[a] > word[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

namespace {

void enumerate(std::vector<unsigned>& free, std::vector<std::pair<unsigned, unsigned>>& acc,
               std::vector<PerfectMatching>& out) {
  if (free.empty()) {
    out.emplace_back(acc);
    return;
  }
  unsigned lo = free.front();
  for (std::size_t t = 1; t < free.size(); ++t) {
    unsigned hi = free[t];
    std::vector<unsigned> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t s = 1; s < free.size(); ++s)
      if (s != t) rest.push_back(free[s]);
    acc.emplace_back(lo, hi);
    enumerate(rest, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<PerfectMatching> enumerate_matchings(unsigned size) {
  if (size % 2 != 0) throw Error(ErrorKind::ParityViolation, "matchings need an even ground set");
  std::vector<PerfectMatching> out;
  if (size == 0) return out;
  std::vector<unsigned> free(size);
  for (unsigned i = 0; i < size; ++i) free[i] = i + 1;
  std::vector<std::pair<unsigned, unsigned>> acc;
  enumerate(free, acc, out);
  return out;
}

} // namespace qfn
