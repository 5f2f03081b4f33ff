#include "qfn/pfaffian.hpp"

#include <map>

#include "qfn/error.hpp"
#include "qfn/matching.hpp"

namespace qfn {

namespace {

RationalFunction pfaffian_definition(const SkewMatrix& x) {
  RationalFunction acc;
  for (const PerfectMatching& pm : enumerate_matchings(static_cast<unsigned>(x.size()))) {
    RationalFunction prod(1);
    for (const auto& [i, j] : pm.pairs()) prod *= x.upper(i - 1, j - 1);
    acc += matching_sign(pm) > 0 ? prod : -prod;
  }
  if (x.size() == 0) return RationalFunction(1);
  return acc;
}

RationalFunction pfaffian_expansion(const SkewMatrix& x) {
  std::size_t n = x.size();
  std::map<unsigned long, RationalFunction> memo;
  // Expand along the smallest surviving index; signs follow the expansion
  // formula with k = 1 relative to the subset.
  auto rec = [&](auto&& self, unsigned long mask) -> RationalFunction {
    if (mask == 0) return RationalFunction(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t lo = static_cast<std::size_t>(__builtin_ctzl(mask));
    RationalFunction acc;
    int sign = 1; // (-1)^t for the t-th surviving index, t = 2, 3, ...
    for (std::size_t j = lo + 1; j < n; ++j) {
      if (!(mask & (1ul << j))) continue;
      if (!x.upper(lo, j).is_zero()) {
        RationalFunction term = x.upper(lo, j) * self(self, mask & ~(1ul << lo) & ~(1ul << j));
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  if (n >= 64) throw Error(ErrorKind::ShapeMismatch, "pfaffian expansion size too large");
  return rec(rec, n == 0 ? 0 : (1ul << n) - 1);
}

RationalFunction pfaffian_elimination(const SkewMatrix& x) {
  std::size_t n = x.size();
  RectMatrix a = x.to_rect();
  RationalFunction result(1);
  int sign = 1;
  auto swap_pair = [&](std::size_t p, std::size_t q) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(p, k), a.at(q, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(k, p), a.at(k, q));
    sign = -sign;
  };
  for (std::size_t p = 0; p + 1 < n; p += 2) {
    if (a.at(p, p + 1).is_zero()) {
      std::size_t j = p + 2;
      while (j < n && a.at(p, j).is_zero()) ++j;
      if (j == n) return RationalFunction(); // zero row: the matrix is reduced, Pf = 0
      swap_pair(p + 1, j);
    }
    const RationalFunction pivot = a.at(p, p + 1);
    // Clear rows/columns p and p+1 beyond the pivot by congruence moves,
    // which leave the Pfaffian unchanged.
    for (std::size_t j = p + 2; j < n; ++j) {
      if (!a.at(p, j).is_zero()) {
        RationalFunction c = a.at(p, j) / pivot;
        for (std::size_t k = 0; k < n; ++k) a.at(k, j) -= c * a.at(k, p + 1);
        for (std::size_t k = 0; k < n; ++k) a.at(j, k) -= c * a.at(p + 1, k);
      }
      if (!a.at(p + 1, j).is_zero()) {
        RationalFunction c = a.at(p + 1, j) / (-pivot);
        for (std::size_t k = 0; k < n; ++k) a.at(k, j) -= c * a.at(k, p);
        for (std::size_t k = 0; k < n; ++k) a.at(j, k) -= c * a.at(p, k);
      }
    }
    result *= pivot;
  }
  return sign > 0 ? result : -result;
}

} // namespace

RationalFunction pfaffian(const SkewMatrix& x, PfaffianMethod method) {
  if (x.size() % 2 != 0) return RationalFunction();
  if (x.size() == 0) return RationalFunction(1);
  switch (method) {
    case PfaffianMethod::Definition:
      return pfaffian_definition(x);
    case PfaffianMethod::Expansion:
      return pfaffian_expansion(x);
    case PfaffianMethod::Elimination:
      return pfaffian_elimination(x);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pfaffian method");
}

RationalFunction sub_pfaffian(const SkewMatrix& x, const IndexSet& idx, PfaffianMethod method) {
  if (idx.size() == 0) return RationalFunction(1);
  return pfaffian(x.principal(idx), method);
}

RationalFunction pfaffian_expand_along(const SkewMatrix& x, unsigned k) {
  std::size_t n = x.size();
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "expansion index out of range");
  if (n % 2 != 0) return RationalFunction();
  RationalFunction acc;
  for (unsigned i = 1; i <= n; ++i) {
    if (i == k) continue;
    std::vector<unsigned> rest;
    rest.reserve(n - 2);
    for (unsigned e = 1; e <= n; ++e)
      if (e != i && e != k) rest.push_back(e);
    RationalFunction entry = i < k ? x.at(i - 1, k - 1) : x.at(k - 1, i - 1);
    RationalFunction term = entry * sub_pfaffian(x, IndexSet(static_cast<unsigned>(n), rest));
    acc += (k + i - 1) % 2 == 0 ? term : -term;
  }
  return acc;
}

} // namespace qfn
