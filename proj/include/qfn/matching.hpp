#ifndef QFN_MATCHING_HPP
#define QFN_MATCHING_HPP

#include <utility>
#include <vector>

namespace qfn {

// Set partition of [2m] into m two-element blocks {i_k, j_k} with i_k < j_k.
class PerfectMatching {
public:
  explicit PerfectMatching(std::vector<std::pair<unsigned, unsigned>> pairs); // validates

  const std::vector<std::pair<unsigned, unsigned>>& pairs() const { return pairs_; }
  std::size_t block_count() const { return pairs_.size(); }

private:
  std::vector<std::pair<unsigned, unsigned>> pairs_;
};

// (-1)^{inv(i_1, j_1, ..., i_m, j_m)}; independent of block ordering.
int matching_sign(const PerfectMatching& p);

// All matchings of [2m] pairing the smallest unmatched index first.
std::vector<PerfectMatching> enumerate_matchings(unsigned size);

} // namespace qfn

#endif
