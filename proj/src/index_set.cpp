#include "qfn/index_set.hpp"

#include <algorithm>
#include <numeric>

#include "qfn/error.hpp"

namespace qfn {

IndexSet::IndexSet(unsigned ground, std::vector<unsigned> elements)
    : ground_(ground), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > ground_)
      throw Error(ErrorKind::InvalidArgument, "index set element out of bounds");
    if (i > 0 && elements_[i - 1] >= elements_[i])
      throw Error(ErrorKind::InvalidArgument, "index set not strictly increasing");
  }
}

IndexSet IndexSet::full(unsigned ground) {
  std::vector<unsigned> v(ground);
  std::iota(v.begin(), v.end(), 1u);
  return IndexSet(ground, std::move(v));
}

bool IndexSet::contains(unsigned e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

unsigned long IndexSet::sigma() const {
  unsigned long s = 0;
  for (unsigned e : elements_) s += e;
  return s;
}

IndexSet IndexSet::complement() const {
  std::vector<unsigned> v;
  v.reserve(ground_ - elements_.size());
  for (unsigned e = 1; e <= ground_; ++e)
    if (!contains(e)) v.push_back(e);
  return IndexSet(ground_, std::move(v));
}

IndexSet IndexSet::unioned(const IndexSet& o) const {
  std::vector<unsigned> v;
  std::set_union(elements_.begin(), elements_.end(), o.elements_.begin(), o.elements_.end(),
                 std::back_inserter(v));
  return IndexSet(std::max(ground_, o.ground_), std::move(v));
}

IndexSet IndexSet::shifted(unsigned base, unsigned new_ground) const {
  std::vector<unsigned> v;
  v.reserve(elements_.size());
  for (unsigned e : elements_) v.push_back(base + e);
  return IndexSet(new_ground, std::move(v));
}

namespace {

void emit_subsets(unsigned ground, unsigned next, std::vector<unsigned>& prefix,
                  std::vector<IndexSet>& out) {
  out.emplace_back(ground, prefix);
  for (unsigned e = next; e <= ground; ++e) {
    prefix.push_back(e);
    emit_subsets(ground, e + 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<IndexSet> all_subsets(unsigned ground) {
  std::vector<IndexSet> out;
  std::vector<unsigned> prefix;
  emit_subsets(ground, 1, prefix, out);
  return out;
}

std::vector<IndexSet> subsets_with_parity(unsigned ground, unsigned parity) {
  std::vector<IndexSet> out;
  for (auto& s : all_subsets(ground))
    if (s.size() % 2 == parity % 2) out.push_back(std::move(s));
  return out;
}

std::vector<IndexSet> even_subsets(unsigned ground) { return subsets_with_parity(ground, 0); }

std::vector<IndexSet> subsets_of_size(unsigned ground, unsigned k) {
  std::vector<IndexSet> out;
  for (auto& s : all_subsets(ground))
    if (s.size() == k) out.push_back(std::move(s));
  return out;
}

} // namespace qfn
