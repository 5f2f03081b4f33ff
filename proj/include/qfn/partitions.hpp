#ifndef QFN_PARTITIONS_HPP
#define QFN_PARTITIONS_HPP

#include <optional>
#include <string>
#include <vector>

namespace qfn {

// Strictly decreasing sequence of positive integers.
class StrictPartition {
public:
  StrictPartition() = default; // empty partition
  explicit StrictPartition(std::vector<unsigned> parts); // validates

  // Parses "3,2,1" (empty string gives the empty partition).
  static std::optional<StrictPartition> parse(const std::string& csv);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned weight() const;
  unsigned first() const { return parts_.empty() ? 0 : parts_.front(); }

  // Partwise containment mu_i <= lambda_i.
  bool contains(const StrictPartition& mu) const;

  bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
  bool operator!=(const StrictPartition& o) const { return !(*this == o); }
  bool operator<(const StrictPartition& o) const; // (weight, descending lex)

  std::string to_string() const; // "(3,2,1)", "()" for empty

private:
  std::vector<unsigned> parts_;
};

// All strict partitions of weight <= max_weight, sorted by weight and then
// by descending lexicographic part order within a weight.
std::vector<StrictPartition> strict_partitions(unsigned max_weight);

} // namespace qfn

#endif
