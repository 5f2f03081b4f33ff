#include "qfn/schur.hpp"

#include <algorithm>

#include "qfn/error.hpp"

namespace qfn {

unsigned chi(unsigned r) { return r > 0 ? 2 : 1; }

std::vector<unsigned> range_vars(unsigned begin, unsigned count) {
  std::vector<unsigned> v(count);
  for (unsigned i = 0; i < count; ++i) v[i] = begin + i;
  return v;
}

RationalFunction alternant(const std::vector<unsigned>& vars) {
  RationalFunction d(1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      d *= schur_entry(RationalFunction::variable(vars[i]), RationalFunction::variable(vars[j]));
  return d;
}

Polynomial elementary_symmetric(const std::vector<unsigned>& vars, unsigned k) {
  // coefficient of t^k in prod (1 + x_i t), built degree by degree
  std::vector<Polynomial> e(k + 1);
  e[0] = Polynomial(GaussianRational(1));
  for (unsigned v : vars)
    for (unsigned d = k; d >= 1; --d) e[d] += e[d - 1] * Polynomial::variable(v);
  return e[k];
}

NimmoMatrices build_nimmo_matrices(const StrictPartition& lambda,
                                   const std::vector<unsigned>& vars) {
  unsigned n = static_cast<unsigned>(vars.size());
  std::vector<unsigned> alpha = lambda.parts();
  if ((n + alpha.size()) % 2 != 0) alpha.push_back(0);
  unsigned cols = static_cast<unsigned>(alpha.size());

  SkewMatrix a(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      a.set_upper(i, j, schur_entry(RationalFunction::variable(vars[i]),
                                    RationalFunction::variable(vars[j])));

  RectMatrix v(n, cols), w(n, cols);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < cols; ++j) {
      Polynomial p = alpha[j] == 0 ? Polynomial(GaussianRational(1))
                                   : Polynomial::variable(vars[i], alpha[j]);
      v.at(i, j) = p;
      w.at(i, j) = p * GaussianRational(static_cast<long>(chi(alpha[j])));
    }
  return NimmoMatrices{std::move(a), std::move(v), std::move(w), std::move(alpha)};
}

namespace {

Polynomial nimmo_function(const StrictPartition& lambda, const std::vector<unsigned>& vars,
                          bool q_kind) {
  NimmoMatrices mats = build_nimmo_matrices(lambda, vars);
  const RectMatrix& cols = q_kind ? mats.w : mats.v;
  SkewMatrix block = block_skew(mats.a, cols, SkewMatrix(cols.cols()));
  RationalFunction pf = pfaffian(block, PfaffianMethod::Expansion);
  RationalFunction quotient = pf / alternant(vars);
  auto poly = quotient.to_polynomial();
  if (!poly)
    throw Error(ErrorKind::InexactDivision, "Pfaffian quotient failed to divide exactly");
  return *poly;
}

} // namespace

Polynomial nimmo_q(const StrictPartition& lambda, const std::vector<unsigned>& vars) {
  return nimmo_function(lambda, vars, true);
}

Polynomial nimmo_p(const StrictPartition& lambda, const std::vector<unsigned>& vars) {
  return nimmo_function(lambda, vars, false);
}

QTable::QTable(std::vector<unsigned> vars) : vars_(std::move(vars)) {
  unsigned top = 0;
  for (unsigned v : vars_) top = std::max(top, v + 1);
  z_ = top;
  w_ = top + 1;
}

namespace {

// prod_i (1 + x_i t)/(1 - x_i t) as a truncated series in t and the alphabet.
TruncatedSeries alphabet_product(const std::vector<unsigned>& vars, unsigned t, unsigned bound) {
  TruncatedSeries s = TruncatedSeries::one(bound);
  for (unsigned v : vars) {
    Polynomial xt = Polynomial::variable(v) * Polynomial::variable(t);
    RationalFunction f(Polynomial(GaussianRational(1)) + xt,
                       Polynomial(GaussianRational(1)) - xt);
    s *= series_expand(f, bound);
  }
  return s;
}

} // namespace

void QTable::ensure_rows(unsigned r_max) {
  if (rows_valid_ && rows_.size() > r_max) return;
  unsigned bound = 2 * r_max;
  TruncatedSeries f = alphabet_product(vars_, z_, bound);
  rows_.clear();
  for (unsigned r = 0; r <= r_max; ++r) rows_.push_back(f.coefficient_of(z_, r));
  rows_valid_ = true;
}

void QTable::ensure_pairs(unsigned weight_max) {
  if (pairs_valid_ && pair_weight_ >= weight_max) return;
  unsigned bound = 2 * weight_max + 2;
  TruncatedSeries fz = alphabet_product(vars_, z_, bound);
  TruncatedSeries fw = alphabet_product(vars_, w_, bound);
  Polynomial zw = Polynomial::variable(z_) - Polynomial::variable(w_);
  TruncatedSeries r_series =
      TruncatedSeries(zw, bound) * (fz * fw - TruncatedSeries::one(bound));
  const Polynomial& r_poly = r_series.poly();

  pairs_.clear();
  // (z+w) * sum Q_{(r,s)} z^r w^s = r_series; match coefficients diagonal
  // by diagonal, ascending in the w-exponent.
  for (unsigned total = 0; total <= weight_max; ++total) {
    for (unsigned b = 0; b <= total; ++b) {
      unsigned a = total - b;
      Polynomial value = r_poly.coefficient_of(z_, a + 1).coefficient_of(w_, b);
      if (b > 0) value -= pairs_.at({a + 1, b - 1});
      pairs_.emplace(std::make_pair(a, b), std::move(value));
    }
  }
  pair_weight_ = weight_max;
  pairs_valid_ = true;
}

const Polynomial& QTable::row(unsigned r) {
  ensure_rows(std::max(r, 8u));
  return rows_[r];
}

const Polynomial& QTable::pair(unsigned r, unsigned s) {
  ensure_pairs(std::max(r + s, 8u));
  return pairs_.at({r, s});
}

std::vector<Polynomial> q_row_series(unsigned r_max, const std::vector<unsigned>& vars) {
  QTable table(vars);
  std::vector<Polynomial> out;
  for (unsigned r = 0; r <= r_max; ++r) out.push_back(table.row(r));
  return out;
}

Polynomial q_pair(unsigned r, unsigned s, const std::vector<unsigned>& vars) {
  QTable table(vars);
  return table.pair(r, s);
}

Polynomial schur_def_q(const StrictPartition& lambda, const std::vector<unsigned>& vars) {
  std::vector<unsigned> alpha = lambda.parts();
  if (alpha.size() % 2 != 0) alpha.push_back(0);
  QTable table(vars);
  SkewMatrix s(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      s.set_upper(i, j, Polynomial(table.pair(alpha[i], alpha[j])));
  auto poly = pfaffian(s, PfaffianMethod::Expansion).to_polynomial();
  if (!poly) throw Error(ErrorKind::InexactDivision, "pair-matrix Pfaffian not polynomial");
  return *poly;
}

std::vector<unsigned> nimmo_index_set(const StrictPartition& lambda, unsigned n) {
  std::vector<unsigned> out = lambda.parts();
  if ((n + out.size()) % 2 != 0) out.push_back(0);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial skew_q(const StrictPartition& lambda, const StrictPartition& mu, QTable& table) {
  std::vector<unsigned> alpha = lambda.parts();
  std::vector<unsigned> beta = mu.parts();
  if ((alpha.size() + beta.size()) % 2 != 0) beta.push_back(0);
  std::size_t l = alpha.size(), m = beta.size();

  SkewMatrix s(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      s.set_upper(i, j, Polynomial(table.pair(alpha[i], alpha[j])));

  RectMatrix coupling(l, m);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      unsigned b = beta[m - 1 - j];
      if (alpha[i] >= b) coupling.at(i, j) = Polynomial(table.row(alpha[i] - b));
    }

  auto poly =
      pfaffian(block_skew(s, coupling, SkewMatrix(m)), PfaffianMethod::Expansion).to_polynomial();
  if (!poly) throw Error(ErrorKind::InexactDivision, "skew Pfaffian not polynomial");
  return *poly;
}

Polynomial skew_q(const StrictPartition& lambda, const StrictPartition& mu,
                  const std::vector<unsigned>& vars) {
  QTable table(vars);
  return skew_q(lambda, mu, table);
}

std::map<StrictPartition, Polynomial> skew_q_all_from_expansion(
    const StrictPartition& lambda, const std::vector<unsigned>& x_vars, unsigned y_count) {
  unsigned base = 0;
  for (unsigned v : x_vars) base = std::max(base, v + 1);
  std::vector<unsigned> y_vars = range_vars(base, y_count);

  std::vector<unsigned> all_vars = x_vars;
  all_vars.insert(all_vars.end(), y_vars.begin(), y_vars.end());
  Polynomial full = nimmo_q(lambda, all_vars);

  auto is_y = [&](unsigned v) { return v >= base && v < base + y_count; };

  // Split every term into x-part and y-part, grouped by y-weight.
  std::map<unsigned, std::map<Monomial, Polynomial, GrevlexLess>> by_weight;
  for (const auto& [mono, coeff] : full.terms()) {
    Monomial::Factors xf, yf;
    for (const auto& fac : mono.factors()) (is_y(fac.first) ? yf : xf).push_back(fac);
    Monomial ym = Monomial::from_factors(yf);
    by_weight[ym.degree()][ym] += Polynomial::term(Monomial::from_factors(xf), coeff);
  }

  std::map<StrictPartition, Polynomial> out;
  for (const StrictPartition& mu : strict_partitions(lambda.weight())) {
    if (mu.length() > y_count) continue;
    auto grp = by_weight.find(mu.weight());
    Polynomial coeff;
    if (grp != by_weight.end()) {
      // leading y-monomial of Q_mu(y) is y^mu; candidates peel in
      // descending lex order, which strict_partitions provides per weight
      Monomial::Factors lead;
      for (std::size_t i = 0; i < mu.length(); ++i) lead.emplace_back(y_vars[i], mu.parts()[i]);
      Monomial lead_mono = Monomial::from_factors(lead);
      auto slot = grp->second.find(lead_mono);
      if (slot != grp->second.end() && !slot->second.is_zero()) {
        Polynomial q_mu = nimmo_q(mu, y_vars);
        GaussianRational lc = q_mu.coefficient(lead_mono);
        coeff = slot->second.divided_by_scalar(lc);
        for (const auto& [ym, yc] : q_mu.terms()) {
          grp->second[ym] -= coeff * yc;
          if (grp->second[ym].is_zero()) grp->second.erase(ym);
        }
      }
    }
    out.emplace(mu, std::move(coeff));
  }
  for (const auto& [w, grp] : by_weight)
    if (!grp.empty())
      throw Error(ErrorKind::InexactDivision, "split-alphabet expansion left a remainder");
  return out;
}

Polynomial skew_q_from_expansion(const StrictPartition& lambda, const StrictPartition& mu,
                                 const std::vector<unsigned>& x_vars, unsigned y_count) {
  auto all = skew_q_all_from_expansion(lambda, x_vars, y_count);
  auto it = all.find(mu);
  return it == all.end() ? Polynomial() : it->second;
}

IdentityReport ns_check(const StrictPartition& lambda, const std::vector<unsigned>& x_vars,
                        const std::vector<unsigned>& y_vars) {
  unsigned k = static_cast<unsigned>(y_vars.size());
  std::vector<unsigned> alpha = lambda.parts();
  if ((alpha.size() + k) % 2 != 0) alpha.push_back(0);
  std::size_t l = alpha.size();

  QTable table(x_vars);
  SkewMatrix s(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      s.set_upper(i, j, Polynomial(table.pair(alpha[i], alpha[j])));

  RectMatrix coupling(l, k);
  for (unsigned j = 0; j < k; ++j) {
    std::vector<unsigned> xy = x_vars;
    xy.push_back(y_vars[j]);
    QTable column_table(xy);
    for (std::size_t i = 0; i < l; ++i) coupling.at(i, j) = Polynomial(column_table.row(alpha[i]));
  }

  SkewMatrix a_y(k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = i + 1; j < k; ++j)
      a_y.set_upper(i, j, schur_entry(RationalFunction::variable(y_vars[i]),
                                      RationalFunction::variable(y_vars[j])));

  RationalFunction lhs =
      pfaffian(block_skew(s, coupling, a_y), PfaffianMethod::Expansion) / alternant(y_vars);

  std::vector<unsigned> all_vars = x_vars;
  all_vars.insert(all_vars.end(), y_vars.begin(), y_vars.end());
  RationalFunction rhs(nimmo_q(lambda, all_vars));
  return make_report("ns",
                     "lambda=" + lambda.to_string() + " n=" + std::to_string(x_vars.size()) +
                         " k=" + std::to_string(k),
                     std::move(lhs), std::move(rhs));
}

IdentityReport cauchy_check(unsigned n, unsigned degree) {
  std::vector<unsigned> x = range_vars(0, n);
  std::vector<unsigned> y = range_vars(n, n);

  Polynomial lhs;
  for (const StrictPartition& mu : strict_partitions(degree)) {
    if (2 * mu.weight() > degree) continue;
    lhs += nimmo_p(mu, x) * nimmo_q(mu, y);
  }
  lhs = lhs.truncate(degree);

  TruncatedSeries rhs = TruncatedSeries::one(degree);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Polynomial xy = Polynomial::variable(x[i]) * Polynomial::variable(y[j]);
      RationalFunction f(Polynomial(GaussianRational(1)) + xy,
                         Polynomial(GaussianRational(1)) - xy);
      rhs *= series_expand(f, degree);
    }
  return make_report("cauchy", "n=" + std::to_string(n) + " d=" + std::to_string(degree),
                     RationalFunction(lhs), RationalFunction(rhs.poly()));
}

namespace {

TruncatedSeries littlewood_pair_product(const std::vector<unsigned>& x, unsigned degree) {
  TruncatedSeries s = TruncatedSeries::one(degree);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Polynomial xx = Polynomial::variable(x[i]) * Polynomial::variable(x[j]);
      RationalFunction f(Polynomial(GaussianRational(1)) + xx,
                         Polynomial(GaussianRational(1)) - xx);
      s *= series_expand(f, degree);
    }
  return s;
}

} // namespace

IdentityReport littlewood_check(unsigned n, unsigned degree) {
  std::vector<unsigned> x = range_vars(0, n);
  GaussianRational one_plus_i(mpq_class(1), mpq_class(1));

  Polynomial lhs;
  for (const StrictPartition& mu : strict_partitions(degree))
    lhs += nimmo_p(mu, x) * one_plus_i.pow(static_cast<unsigned>(mu.length()));
  lhs = lhs.truncate(degree);

  TruncatedSeries rhs = littlewood_pair_product(x, degree);
  for (unsigned i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::variable(x[i]);
    RationalFunction f(Polynomial(GaussianRational(1)) + xi * GaussianRational::i(),
                       Polynomial(GaussianRational(1)) - xi);
    rhs *= series_expand(f, degree);
  }
  return make_report("littlewood", "n=" + std::to_string(n) + " d=" + std::to_string(degree),
                     RationalFunction(lhs), RationalFunction(rhs.poly()));
}

IdentityReport littlewood_split_check(unsigned n, unsigned degree, bool imaginary_part) {
  std::vector<unsigned> x = range_vars(0, n);

  Polynomial lhs;
  for (const StrictPartition& mu : strict_partitions(degree)) {
    auto [a, b] = littlewood_coeffs(static_cast<unsigned>(mu.length()));
    GaussianRational c = imaginary_part ? b : a;
    if (!c.is_zero()) lhs += nimmo_p(mu, x) * c;
  }
  lhs = lhs.truncate(degree);

  Polynomial num, den;
  for (unsigned k = 0; k <= n; ++k) {
    Polynomial e = elementary_symmetric(x, k);
    int sign = (k / 2) % 2 == 0 ? 1 : -1; // sign of the alternating series term
    bool odd = k % 2 != 0;
    if (odd == imaginary_part) num += sign > 0 ? e : -e;
    den += k % 2 == 0 ? e : -e;
  }
  TruncatedSeries rhs = series_expand(RationalFunction(num, den), degree) *
                        littlewood_pair_product(x, degree);
  return make_report(imaginary_part ? "littlewood-split-im" : "littlewood-split-re",
                     "n=" + std::to_string(n) + " d=" + std::to_string(degree),
                     RationalFunction(lhs), RationalFunction(rhs.poly()));
}

std::pair<GaussianRational, GaussianRational> littlewood_coeffs(unsigned l) {
  unsigned k = l / 4;
  mpz_class p22k = mpz_class(1) << (2 * k);     // 2^{2k}
  mpz_class p2k1 = mpz_class(1) << (2 * k + 1); // 2^{2k+1}
  int sk = k % 2 == 0 ? 1 : -1;
  mpq_class a, b;
  switch (l % 4) {
    case 0:
      a = sk * p22k;
      b = 0;
      break;
    case 1:
      a = sk * p22k;
      b = sk * p22k;
      break;
    case 2:
      a = 0;
      b = sk * p2k1;
      break;
    default:
      a = -sk * p2k1;
      b = sk * p2k1;
      break;
  }
  return {GaussianRational(a), GaussianRational(b)};
}

IdentityReport skew_expansion_check(const StrictPartition& lambda, unsigned n, unsigned k) {
  std::vector<unsigned> x = range_vars(0, n);
  std::vector<unsigned> y = range_vars(n, k);
  std::vector<unsigned> all_vars = x;
  all_vars.insert(all_vars.end(), y.begin(), y.end());

  Polynomial lhs = nimmo_q(lambda, all_vars);

  QTable table(x);
  Polynomial rhs;
  for (const StrictPartition& mu : strict_partitions(lambda.weight())) {
    if (mu.first() > lambda.first()) continue;
    rhs += skew_q(lambda, mu, table) * nimmo_q(mu, y);
  }
  return make_report("skew-expansion",
                     "lambda=" + lambda.to_string() + " n=" + std::to_string(n) +
                         " k=" + std::to_string(k),
                     RationalFunction(lhs), RationalFunction(rhs));
}

IdentityReport stability_check(const StrictPartition& lambda, unsigned n) {
  Polynomial extended = nimmo_q(lambda, range_vars(0, n + 1));
  Polynomial specialized = extended.substitute({{n, Polynomial()}});
  Polynomial base = nimmo_q(lambda, range_vars(0, n));
  return make_report("stability", "lambda=" + lambda.to_string() + " n=" + std::to_string(n),
                     RationalFunction(specialized), RationalFunction(base));
}

} // namespace qfn
