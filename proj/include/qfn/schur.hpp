#ifndef QFN_SCHUR_HPP
#define QFN_SCHUR_HPP

#include <map>

#include "qfn/identities.hpp"
#include "qfn/partitions.hpp"
#include "qfn/series.hpp"

namespace qfn {

// chi(r) = 2 for r > 0 and 1 for r = 0.
unsigned chi(unsigned r);

std::vector<unsigned> range_vars(unsigned begin, unsigned count);

// D(x) = prod_{i<j} (x_j - x_i)/(x_j + x_i).
RationalFunction alternant(const std::vector<unsigned>& vars);

Polynomial elementary_symmetric(const std::vector<unsigned>& vars, unsigned k);

struct NimmoMatrices {
  SkewMatrix a;                // alternating-ratio kernel A(x)
  RectMatrix v;                // x_i^{alpha_j}
  RectMatrix w;                // chi(alpha_j) x_i^{alpha_j}
  std::vector<unsigned> alpha; // parts, zero-padded so n + |alpha| is even
};

NimmoMatrices build_nimmo_matrices(const StrictPartition& lambda,
                                   const std::vector<unsigned>& vars);

// Schur P- and Q-functions as Pfaffian quotients; the division by D(x) is
// exact (InexactDivision would indicate a bug) and the result is 0 when
// the partition is longer than the alphabet.
Polynomial nimmo_q(const StrictPartition& lambda, const std::vector<unsigned>& vars);
Polynomial nimmo_p(const StrictPartition& lambda, const std::vector<unsigned>& vars);

// One- and two-row Q-functions from their generating functions; the pair
// table is filled through the (z+w)-cleared coefficient recurrence, so no
// expansion of (z-w)/(z+w) at the origin is ever needed.
class QTable {
public:
  explicit QTable(std::vector<unsigned> vars);

  const Polynomial& row(unsigned r);
  const Polynomial& pair(unsigned r, unsigned s);
  const std::vector<unsigned>& vars() const { return vars_; }

private:
  void ensure_rows(unsigned r_max);
  void ensure_pairs(unsigned weight_max);

  std::vector<unsigned> vars_;
  unsigned z_, w_;
  std::vector<Polynomial> rows_;
  bool rows_valid_ = false;
  std::map<std::pair<unsigned, unsigned>, Polynomial> pairs_;
  unsigned pair_weight_ = 0;
  bool pairs_valid_ = false;
};

std::vector<Polynomial> q_row_series(unsigned r_max, const std::vector<unsigned>& vars);
Polynomial q_pair(unsigned r, unsigned s, const std::vector<unsigned>& vars);

// Pf of the pair matrix (Q_{(alpha_i, alpha_j)}) with a zero part appended
// when the length is odd; equals nimmo_q.
Polynomial schur_def_q(const StrictPartition& lambda, const std::vector<unsigned>& vars);

// {lambda_1, ..., lambda_l}, plus 0 when n + l is odd; |result| = n (mod 2).
std::vector<unsigned> nimmo_index_set(const StrictPartition& lambda, unsigned n);

// Skew Q-function via the block Pfaffian of pair values and row values.
Polynomial skew_q(const StrictPartition& lambda, const StrictPartition& mu, QTable& table);
Polynomial skew_q(const StrictPartition& lambda, const StrictPartition& mu,
                  const std::vector<unsigned>& vars);

// Independent route: expand Q_lambda over a split alphabet and project the
// coefficient of each Q_mu(y) by triangular peeling on leading y-monomials.
std::map<StrictPartition, Polynomial> skew_q_all_from_expansion(
    const StrictPartition& lambda, const std::vector<unsigned>& x_vars, unsigned y_count);
Polynomial skew_q_from_expansion(const StrictPartition& lambda, const StrictPartition& mu,
                                 const std::vector<unsigned>& x_vars, unsigned y_count);

// Identity checks returning both sides.
IdentityReport ns_check(const StrictPartition& lambda, const std::vector<unsigned>& x_vars,
                        const std::vector<unsigned>& y_vars);
IdentityReport cauchy_check(unsigned n, unsigned degree);
IdentityReport littlewood_check(unsigned n, unsigned degree);
IdentityReport littlewood_split_check(unsigned n, unsigned degree, bool imaginary_part);
IdentityReport skew_expansion_check(const StrictPartition& lambda, unsigned n, unsigned k);
IdentityReport stability_check(const StrictPartition& lambda, unsigned n);

// Coefficient table (a_l, b_l) with a_l + b_l i = (1+i)^l.
std::pair<GaussianRational, GaussianRational> littlewood_coeffs(unsigned l);

} // namespace qfn

#endif
