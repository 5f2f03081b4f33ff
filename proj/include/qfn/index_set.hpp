#ifndef QFN_INDEX_SET_HPP
#define QFN_INDEX_SET_HPP

#include <vector>

namespace qfn {

// Sorted subset of [n] = {1, ..., n}, 1-based as in the submatrix notation.
class IndexSet {
public:
  IndexSet(unsigned ground, std::vector<unsigned> elements); // validates
  static IndexSet empty(unsigned ground) { return IndexSet(ground, {}); }
  static IndexSet full(unsigned ground);

  unsigned ground() const { return ground_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<unsigned>& elements() const { return elements_; }
  bool contains(unsigned e) const;

  // Sum of the elements.
  unsigned long sigma() const;

  IndexSet complement() const;
  IndexSet unioned(const IndexSet& o) const;

  // {base + k : k in this}, in a ground set of the given size.
  IndexSet shifted(unsigned base, unsigned new_ground) const;

  bool operator==(const IndexSet& o) const {
    return ground_ == o.ground_ && elements_ == o.elements_;
  }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }

private:
  unsigned ground_;
  std::vector<unsigned> elements_;
};

// All subsets of [n], ordered lexicographically by element list.
std::vector<IndexSet> all_subsets(unsigned ground);
std::vector<IndexSet> subsets_with_parity(unsigned ground, unsigned parity);
std::vector<IndexSet> even_subsets(unsigned ground);
std::vector<IndexSet> subsets_of_size(unsigned ground, unsigned k);

} // namespace qfn

#endif
