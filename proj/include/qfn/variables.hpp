#ifndef QFN_VARIABLES_HPP
#define QFN_VARIABLES_HPP

#include <numeric>
#include <string>
#include <vector>

namespace qfn {

// Layout of named alphabets inside the single global variable universe.
// The x and y alphabets occupy disjoint index ranges; z and w get the two
// slots after them when series variables are needed.
class VariableMap {
public:
  explicit VariableMap(unsigned x_count, unsigned y_count = 0)
      : x_count_(x_count), y_count_(y_count) {}

  unsigned x_count() const { return x_count_; }
  unsigned y_count() const { return y_count_; }

  unsigned x(unsigned i) const { return i - 1; }            // 1-based
  unsigned y(unsigned j) const { return x_count_ + j - 1; } // 1-based
  unsigned z() const { return x_count_ + y_count_; }
  unsigned w() const { return x_count_ + y_count_ + 1; }

  std::vector<unsigned> x_indices() const {
    std::vector<unsigned> v(x_count_);
    std::iota(v.begin(), v.end(), 0u);
    return v;
  }
  std::vector<unsigned> y_indices() const {
    std::vector<unsigned> v(y_count_);
    std::iota(v.begin(), v.end(), x_count_);
    return v;
  }
  std::vector<unsigned> xy_indices() const {
    std::vector<unsigned> v(x_count_ + y_count_);
    std::iota(v.begin(), v.end(), 0u);
    return v;
  }

  std::string name(unsigned index) const {
    if (index < x_count_) return "x" + std::to_string(index + 1);
    if (index < x_count_ + y_count_) return "y" + std::to_string(index - x_count_ + 1);
    if (index == z()) return "z";
    if (index == w()) return "w";
    return "v" + std::to_string(index + 1);
  }

private:
  unsigned x_count_;
  unsigned y_count_;
};

} // namespace qfn

#endif
