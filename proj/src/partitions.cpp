#include "qfn/partitions.hpp"

#include <algorithm>

#include "qfn/error.hpp"

namespace qfn {

StrictPartition::StrictPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw Error(ErrorKind::InvalidArgument, "strict partition parts must be positive");
    if (i > 0 && parts_[i - 1] <= parts_[i])
      throw Error(ErrorKind::InvalidArgument, "strict partition parts must strictly decrease");
  }
}

std::optional<StrictPartition> StrictPartition::parse(const std::string& csv) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    std::string tok = csv.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    unsigned long v = std::stoul(tok);
    if (v == 0 || v > 1000000) return std::nullopt;
    parts.push_back(static_cast<unsigned>(v));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] <= parts[i]) return std::nullopt;
  return StrictPartition(std::move(parts));
}

unsigned StrictPartition::weight() const {
  unsigned w = 0;
  for (unsigned p : parts_) w += p;
  return w;
}

bool StrictPartition::contains(const StrictPartition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

bool StrictPartition::operator<(const StrictPartition& o) const {
  if (weight() != o.weight()) return weight() < o.weight();
  return parts_ > o.parts_; // descending lex within a weight
}

std::string StrictPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void emit(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
          std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned p = std::min(max_part, remaining); p >= 1; --p) {
    prefix.push_back(p);
    emit(remaining - p, p - 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<StrictPartition> strict_partitions(unsigned max_weight) {
  std::vector<StrictPartition> out;
  std::vector<unsigned> prefix;
  for (unsigned w = 0; w <= max_weight; ++w) emit(w, w, prefix, out);
  return out;
}

} // namespace qfn
