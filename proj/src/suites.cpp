#include "qfn/suites.hpp"

#include <array>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "qfn/error.hpp"
#include "qfn/schur.hpp"

namespace qfn {

namespace {

using Job = std::function<IdentityReport()>;

std::vector<IdentityReport> run_jobs(const std::vector<Job>& jobs, int threads) {
  std::size_t count = jobs.size();
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : (hw ? hw : 1);
  workers = std::min(workers, count);
  std::vector<IdentityReport> out(count);
  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = jobs[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// Fresh symbolic entries, or seeded random rationals in specialized mode.
class EntryGen {
public:
  EntryGen(bool specialized, std::uint64_t seed) : specialized_(specialized), rng_(seed) {}

  RationalFunction next() {
    if (!specialized_) return RationalFunction::variable(counter_++);
    long num = 1 + static_cast<long>(rng_() % 99);
    long den = 1 + static_cast<long>(rng_() % 99);
    if (rng_() % 2) num = -num;
    return RationalFunction(Polynomial(GaussianRational::ratio(num, den)));
  }

  SkewMatrix skew(unsigned n) {
    SkewMatrix m(n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) m.set_upper(i, j, next());
    return m;
  }

  RectMatrix rect(unsigned rows, unsigned cols) {
    RectMatrix m(rows, cols);
    for (unsigned i = 0; i < rows; ++i)
      for (unsigned j = 0; j < cols; ++j) m.at(i, j) = next();
    return m;
  }

  // Pairwise distinct values in (0,1) in specialized mode, else variables.
  std::vector<RationalFunction> alphabet(unsigned n) {
    std::vector<RationalFunction> out;
    std::set<std::pair<long, long>> used;
    for (unsigned i = 0; i < n; ++i) {
      if (!specialized_) {
        out.push_back(RationalFunction::variable(counter_++));
        continue;
      }
      for (;;) {
        long num = 1 + static_cast<long>(rng_() % 98);
        long den = num + 1 + static_cast<long>(rng_() % (99 - num));
        mpq_class q(num, den);
        q.canonicalize();
        if (used.insert({q.get_num().get_si(), q.get_den().get_si()}).second) {
          out.push_back(RationalFunction(Polynomial(GaussianRational(q))));
          break;
        }
      }
    }
    return out;
  }

private:
  unsigned counter_ = 0;
  bool specialized_;
  std::mt19937_64 rng_;
};

void collect_vars(const Polynomial& p, std::set<unsigned>& out) {
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) out.insert(v);
}

void collect_vars(const RationalFunction& f, std::set<unsigned>& out) {
  collect_vars(f.num(), out);
  for (const auto& [g, mult] : f.den_factors()) collect_vars(g, out);
}

// Evaluates both sides of a symbolic report at seeded points in (0,1).
IdentityReport specialize_report(const IdentityReport& rep, std::uint64_t seed) {
  std::set<unsigned> vars;
  collect_vars(rep.lhs, vars);
  collect_vars(rep.rhs, vars);
  std::mt19937_64 rng(seed);
  std::set<std::pair<long, long>> used;
  std::map<unsigned, Polynomial> assign;
  for (unsigned v : vars) {
    for (;;) {
      long num = 1 + static_cast<long>(rng() % 98);
      long den = num + 1 + static_cast<long>(rng() % (99 - num));
      mpq_class q(num, den);
      q.canonicalize();
      if (used.insert({q.get_num().get_si(), q.get_den().get_si()}).second) {
        assign.emplace(v, Polynomial(GaussianRational(q)));
        break;
      }
    }
  }
  return make_report(rep.name, rep.params + " specialized", rep.lhs.substitute(assign),
                     rep.rhs.substitute(assign));
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  return seed * 1000003ull + 17ull * index + 1ull;
}

// ---- pfaffian-identity suites -------------------------------------------

void suite_schur_pfaffian(const SuiteOptions& o, std::vector<Job>& jobs) {
  std::vector<unsigned> sizes = o.vars > 0 ? std::vector<unsigned>{unsigned(o.vars)}
                                           : std::vector<unsigned>{2, 4, 6};
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    unsigned n = sizes[idx];
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([n, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      return schur_pfaffian_check(gen.alphabet(n));
    });
  }
}

void suite_laplace(const SuiteOptions& o, std::vector<Job>& jobs) {
  std::vector<std::pair<unsigned, unsigned>> shapes = {{1, 1}, {2, 2}, {3, 1}, {2, 4}};
  if (o.vars > 0) shapes = {{unsigned(o.vars), unsigned(o.vars)}};
  for (auto [m, n] : shapes) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([m = m, n = n, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      SkewMatrix z = gen.skew(m);
      SkewMatrix zp = gen.skew(n);
      RectMatrix w = gen.rect(m, n);
      return laplace_expand(z, zp, w);
    });
  }
  // corollary branch: square coupling block and zero lower-right corner
  for (unsigned m : {2u, 3u}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([m, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      SkewMatrix z = gen.skew(m);
      RectMatrix w = gen.rect(m, m);
      RationalFunction lhs = pfaffian(block_skew(z, w, SkewMatrix(m)));
      RationalFunction rhs = determinant(w);
      if ((m * (m - 1) / 2) % 2 != 0) rhs = -rhs;
      return make_report("laplace1", "m=n=" + std::to_string(m) + " branch=square",
                         std::move(lhs), std::move(rhs));
    });
  }
  // corollary branch: wide coupling block forces zero
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 4}}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([m = m, n = n, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      SkewMatrix z = gen.skew(m);
      RectMatrix w = gen.rect(m, n);
      return make_report("laplace1", "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                         " branch=zero",
                         pfaffian(block_skew(z, w, SkewMatrix(n))), RationalFunction());
    });
  }
  // corollary branch: tall coupling block against the one-sided sum
  {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([seed, rnd = o.specialized]() {
      unsigned m = 3, n = 1;
      EntryGen gen(rnd, seed);
      SkewMatrix z = gen.skew(m);
      RectMatrix w = gen.rect(m, n);
      RationalFunction lhs = pfaffian(block_skew(z, w, SkewMatrix(n)));
      RationalFunction rhs;
      for (const IndexSet& i : even_subsets(m)) {
        if (m - i.size() != n) continue;
        RationalFunction term =
            sub_pfaffian(z, i) * minor_det(w, i.complement(), IndexSet::full(n));
        unsigned long e = i.sigma() + m * (m - 1) / 2;
        rhs += e % 2 == 0 ? term : -term;
      }
      return make_report("laplace1", "m=3 n=1 branch=sum", std::move(lhs), std::move(rhs));
    });
  }
  // corollary: block diagonal splits into a product (or vanishes)
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {1, 3}, {2, 4}}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([m = m, n = n, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      SkewMatrix z = gen.skew(m);
      SkewMatrix zp = gen.skew(n);
      RationalFunction lhs = pfaffian(block_skew(z, RectMatrix(m, n), zp));
      RationalFunction rhs;
      if (m % 2 == 0 && n % 2 == 0) rhs = pfaffian(z) * pfaffian(zp);
      return make_report("laplace2", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                         std::move(lhs), std::move(rhs));
    });
  }
}

void suite_cbiw(const SuiteOptions& o, std::vector<Job>& jobs) {
  std::vector<std::array<unsigned, 3>> shapes = {{0, 0, 2}, {1, 1, 1}, {2, 0, 2}, {2, 2, 2}};
  for (auto [m, n, l] : shapes) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([m = m, n = n, l = l, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      return cbiw_sum(gen.skew(m + l), gen.skew(n + l), m, n, l);
    });
  }
}

void suite_cauchy_binet(const SuiteOptions& o, std::vector<Job>& jobs, CauchyBinetVariant v) {
  for (unsigned l : {2u, 3u, 4u}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([l, v, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      SkewMatrix a = gen.skew(2);
      SkewMatrix b = gen.skew(2);
      RectMatrix s = gen.rect(2, l);
      RectMatrix t = gen.rect(2, l);
      return cauchy_binet_pf(a, b, s, t, v);
    });
  }
  // A = B = O specialization, including the rank-deficient zero case
  for (auto [m, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 3}, {2, 3}, {3, 2}}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([m = m, l = l, v, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      RectMatrix s = gen.rect(m, l);
      RectMatrix t = gen.rect(m, l);
      IdentityReport rep = cauchy_binet_pf(SkewMatrix(m), SkewMatrix(m), s, t, v);
      rep.params += " branch=det";
      rep.equal = rep.equal && [&]() {
        // determinant Cauchy-Binet, checked in its own terms
        RationalFunction lhs;
        for (const IndexSet& k : subsets_of_size(l, m))
          lhs += minor_det(s, IndexSet::full(m), k) * minor_det(t, IndexSet::full(m), k);
        return lhs == determinant(s * t.transpose());
      }();
      return rep;
    });
  }
}

void suite_minor_summation(const SuiteOptions& o, std::vector<Job>& jobs) {
  for (unsigned l : {2u, 3u, 4u}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([l, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      return minor_summation_pf(gen.skew(2), gen.skew(l), gen.rect(2, l));
    });
  }
  { // B = O: every K but the empty one drops out
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      IdentityReport rep = minor_summation_pf(gen.skew(2), SkewMatrix(2), gen.rect(2, 2));
      rep.params += " branch=B0";
      return rep;
    });
  }
  // A = O reduction to the determinant-weighted form
  for (auto [m, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([m = m, l = l, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      SkewMatrix b = gen.skew(l);
      RectMatrix s = gen.rect(m, l);
      RationalFunction lhs;
      for (const IndexSet& k : subsets_of_size(l, m))
        lhs += sub_pfaffian(b, k) * minor_det(s, IndexSet::full(m), k);
      RectMatrix sbs = s * b.to_rect() * s.transpose();
      RationalFunction rhs = pfaffian(SkewMatrix::from_full(sbs));
      return make_report("iw", "m=" + std::to_string(m) + " l=" + std::to_string(l),
                         std::move(lhs), std::move(rhs));
    });
  }
}

void suite_iw2(const SuiteOptions& o, std::vector<Job>& jobs) {
  for (unsigned l : {2u, 3u, 4u}) {
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([l, seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      return iw2_sum(gen.skew(l), gen.skew(l), gen.rect(l, l));
    });
  }
  { // A = B = O at l = 2: both sides are the constant -1
    jobs.push_back([]() {
      IdentityReport rep = iw2_sum(SkewMatrix(2), SkewMatrix(2), RectMatrix(2, 2));
      rep.params += " branch=zero";
      rep.equal = rep.equal && rep.lhs == RationalFunction(-1);
      return rep;
    });
  }
  { // identity transfer matrix
    std::uint64_t seed = instance_seed(o.seed, jobs.size());
    jobs.push_back([seed, rnd = o.specialized]() {
      EntryGen gen(rnd, seed);
      IdentityReport rep = iw2_sum(gen.skew(2), gen.skew(2), RectMatrix::identity(2));
      rep.params += " branch=identity";
      return rep;
    });
  }
}

void suite_sylvester(const SuiteOptions& o, std::vector<Job>& jobs) {
  for (auto [n, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 4}, {4, 2}}) {
    for (SylvesterVariant v : {SylvesterVariant::PivotFirst, SylvesterVariant::PivotLast}) {
      std::uint64_t seed = instance_seed(o.seed, jobs.size());
      jobs.push_back([n = n, l = l, v, seed, rnd = o.specialized]() {
        EntryGen gen(rnd, seed);
        return sylvester_check(gen.skew(n + l), n, v);
      });
    }
  }
}

// ---- Schur Q-function suites --------------------------------------------

// wraps a symbolic check so specialized mode evaluates it at seeded points
Job wrap(const SuiteOptions& o, std::size_t index, std::function<IdentityReport()> f) {
  if (!o.specialized) return f;
  std::uint64_t seed = instance_seed(o.seed, index);
  return [f = std::move(f), seed]() { return specialize_report(f(), seed); };
}

std::vector<unsigned> default_ns(const SuiteOptions& o, std::vector<unsigned> defaults) {
  if (o.vars >= 0) return {unsigned(o.vars)};
  return defaults;
}

void suite_nimmo_polynomiality(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned wmax = o.degree >= 0 ? unsigned(o.degree) : 8;
  for (unsigned n : default_ns(o, {2, 3, 4})) {
    for (const StrictPartition& lambda : strict_partitions(wmax)) {
      jobs.push_back(wrap(o, jobs.size(), [lambda, n]() {
        std::vector<unsigned> vars = range_vars(0, n);
        NimmoMatrices mats = build_nimmo_matrices(lambda, vars);
        SkewMatrix block = block_skew(mats.a, mats.w, SkewMatrix(mats.w.cols()));
        RationalFunction pf = pfaffian(block, PfaffianMethod::Expansion);
        Polynomial q = nimmo_q(lambda, vars); // throws InexactDivision on failure
        IdentityReport rep =
            make_report("nimmo-polynomiality",
                        "lambda=" + lambda.to_string() + " n=" + std::to_string(n), pf,
                        alternant(vars) * RationalFunction(q));
        rep.equal = rep.equal && pfaffian(block, PfaffianMethod::Definition) == pf &&
                    pfaffian(block, PfaffianMethod::Elimination) == pf;
        return rep;
      }));
    }
  }
}

void suite_schur3(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned wmax = o.degree >= 0 ? unsigned(o.degree) : 6;
  for (unsigned n : default_ns(o, {2, 3, 4}))
    for (const StrictPartition& lambda : strict_partitions(wmax))
      jobs.push_back(wrap(o, jobs.size(), [lambda, n]() {
        std::vector<unsigned> vars = range_vars(0, n);
        return make_report("schur3", "lambda=" + lambda.to_string() + " n=" + std::to_string(n),
                           RationalFunction(schur_def_q(lambda, vars)),
                           RationalFunction(nimmo_q(lambda, vars)));
      }));
}

void suite_gen_fn_1(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned rmax = o.degree >= 0 ? unsigned(o.degree) : 8;
  for (unsigned n : default_ns(o, {2, 3})) {
    for (unsigned r = 0; r <= rmax; ++r)
      jobs.push_back(wrap(o, jobs.size(), [r, n]() {
        std::vector<unsigned> vars = range_vars(0, n);
        QTable table(vars);
        Polynomial rhs = r == 0 ? Polynomial(GaussianRational(1))
                                : nimmo_q(StrictPartition({r}), vars);
        return make_report("gen-fn-1", "r=" + std::to_string(r) + " n=" + std::to_string(n),
                           RationalFunction(table.row(r)), RationalFunction(rhs));
      }));
  }
}

void suite_gen_fn_2(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned rmax = o.degree >= 0 ? unsigned(o.degree) : 8;
  for (unsigned n : default_ns(o, {2, 3})) {
    jobs.push_back(wrap(o, jobs.size(), [n]() {
      QTable table(range_vars(0, n));
      return make_report("gen-fn-2", "convention=Q(0,0) n=" + std::to_string(n),
                         RationalFunction(table.pair(0, 0)), RationalFunction());
    }));
    for (unsigned r = 1; r <= rmax; ++r)
      jobs.push_back(wrap(o, jobs.size(), [r, n]() {
        QTable table(range_vars(0, n));
        return make_report("gen-fn-2",
                           "convention=Q(r,0) r=" + std::to_string(r) + " n=" + std::to_string(n),
                           RationalFunction(table.pair(r, 0)), RationalFunction(table.row(r)));
      }));
    for (unsigned r = 0; r <= 5; ++r)
      for (unsigned s = 0; s <= 5; ++s)
        jobs.push_back(wrap(o, jobs.size(), [r, s, n]() {
          QTable table(range_vars(0, n));
          return make_report("gen-fn-2",
                             "antisymmetry r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                 " n=" + std::to_string(n),
                             RationalFunction(table.pair(r, s)),
                             RationalFunction(-Polynomial(table.pair(s, r))));
        }));
    for (unsigned r = 2; r <= rmax; ++r)
      for (unsigned s = 1; s < r && r + s <= rmax; ++s)
        jobs.push_back(wrap(o, jobs.size(), [r, s, n]() {
          std::vector<unsigned> vars = range_vars(0, n);
          QTable table(vars);
          return make_report("gen-fn-2",
                             "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                 " n=" + std::to_string(n),
                             RationalFunction(table.pair(r, s)),
                             RationalFunction(nimmo_q(StrictPartition({r, s}), vars)));
        }));
  }
}

void suite_stability(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned wmax = o.degree >= 0 ? unsigned(o.degree) : 6;
  for (unsigned n : default_ns(o, {1, 2, 3}))
    for (const StrictPartition& lambda : strict_partitions(wmax))
      jobs.push_back(wrap(o, jobs.size(), [lambda, n]() { return stability_check(lambda, n); }));
}

void suite_bijection(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned wmax = o.degree >= 0 ? unsigned(o.degree) : 8;
  for (unsigned n : default_ns(o, {1, 2})) {
    jobs.push_back([n, wmax]() {
      auto partitions = strict_partitions(wmax);
      std::set<std::vector<unsigned>> images;
      for (const StrictPartition& p : partitions) images.insert(nimmo_index_set(p, n));
      return make_report("bijection", "branch=injective n=" + std::to_string(n),
                         RationalFunction(long(images.size())),
                         RationalFunction(long(partitions.size())));
    });
    jobs.push_back([n, wmax]() {
      auto partitions = strict_partitions(wmax);
      long ok = 0;
      for (const StrictPartition& p : partitions)
        if (nimmo_index_set(p, n).size() % 2 == n % 2) ++ok;
      return make_report("bijection", "branch=parity n=" + std::to_string(n),
                         RationalFunction(ok), RationalFunction(long(partitions.size())));
    });
  }
}

void suite_cauchy(const SuiteOptions& o, std::vector<Job>& jobs) {
  std::vector<std::pair<unsigned, unsigned>> shapes = {{1, 4}, {2, 6}, {3, 4}};
  if (o.vars >= 0 || o.degree >= 0)
    shapes = {{o.vars >= 0 ? unsigned(o.vars) : 2u, o.degree >= 0 ? unsigned(o.degree) : 6u}};
  for (auto [n, d] : shapes)
    jobs.push_back(wrap(o, jobs.size(), [n = n, d = d]() { return cauchy_check(n, d); }));
}

void suite_littlewood(const SuiteOptions& o, std::vector<Job>& jobs) {
  std::vector<std::pair<unsigned, unsigned>> shapes = {{2, 6}, {3, 4}};
  if (o.vars >= 0 || o.degree >= 0)
    shapes = {{o.vars >= 0 ? unsigned(o.vars) : 2u, o.degree >= 0 ? unsigned(o.degree) : 6u}};
  for (auto [n, d] : shapes)
    jobs.push_back(wrap(o, jobs.size(), [n = n, d = d]() { return littlewood_check(n, d); }));
  for (bool im : {false, true})
    jobs.push_back(
        wrap(o, jobs.size(), [im]() { return littlewood_split_check(2, 4, im); }));
}

void suite_littlewood_coeffs(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned lmax = o.degree >= 0 ? unsigned(o.degree) : 12;
  GaussianRational one_plus_i(mpq_class(1), mpq_class(1));
  for (unsigned l = 0; l <= lmax; ++l)
    jobs.push_back([l, one_plus_i]() {
      auto [a, b] = littlewood_coeffs(l);
      GaussianRational lhs = a + b * GaussianRational::i();
      return make_report("littlewood-coeffs", "l=" + std::to_string(l),
                         RationalFunction(Polynomial(lhs)),
                         RationalFunction(Polynomial(one_plus_i.pow(l))));
    });
}

void suite_pjn(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned wmax = o.degree >= 0 ? unsigned(o.degree) : 6;
  std::vector<unsigned> ns = default_ns(o, {1, 2});
  std::vector<unsigned> ks =
      o.yvars >= 0 ? std::vector<unsigned>{unsigned(o.yvars)} : std::vector<unsigned>{1, 2};
  for (unsigned n : ns)
    for (unsigned k : ks)
      for (const StrictPartition& lambda : strict_partitions(wmax))
        for (const StrictPartition& mu : strict_partitions(lambda.weight())) {
          if (!lambda.contains(mu) || mu.length() > k) continue;
          jobs.push_back(wrap(o, jobs.size(), [lambda, mu, n, k]() {
            std::vector<unsigned> x = range_vars(0, n);
            return make_report("pjn",
                               "lambda=" + lambda.to_string() + " mu=" + mu.to_string() +
                                   " n=" + std::to_string(n) + " k=" + std::to_string(k),
                               RationalFunction(skew_q(lambda, mu, x)),
                               RationalFunction(skew_q_from_expansion(lambda, mu, x, k)));
          }));
        }
  // support guard: the Pfaffian vanishes outside mu <= lambda by weight/width
  for (unsigned n : ns)
    for (const StrictPartition& lambda : strict_partitions(wmax))
      jobs.push_back([lambda, n]() {
        std::vector<unsigned> x = range_vars(0, n);
        QTable table(x);
        long nonzero = 0;
        for (const StrictPartition& mu : strict_partitions(lambda.weight() + 2)) {
          if (mu.weight() <= lambda.weight() && mu.first() <= lambda.first()) continue;
          if (!skew_q(lambda, mu, table).is_zero()) ++nonzero;
        }
        return make_report("pjn-support",
                           "lambda=" + lambda.to_string() + " n=" + std::to_string(n),
                           RationalFunction(nonzero), RationalFunction());
      });
}

void suite_ns(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned wmax = o.degree >= 0 ? unsigned(o.degree) : 6;
  std::vector<unsigned> ns = o.vars >= 0 ? std::vector<unsigned>{unsigned(o.vars)}
                                         : std::vector<unsigned>{0, 1, 2};
  std::vector<unsigned> ks = o.yvars >= 0 ? std::vector<unsigned>{unsigned(o.yvars)}
                                          : std::vector<unsigned>{0, 1, 2};
  for (unsigned n : ns)
    for (unsigned k : ks) {
      if (n + k == 0) continue;
      for (const StrictPartition& lambda : strict_partitions(wmax))
        jobs.push_back(wrap(o, jobs.size(), [lambda, n, k]() {
          return ns_check(lambda, range_vars(0, n), range_vars(n, k));
        }));
    }
}

void suite_skew_expansion(const SuiteOptions& o, std::vector<Job>& jobs) {
  unsigned wmax = o.degree >= 0 ? unsigned(o.degree) : 6;
  std::vector<unsigned> ns = default_ns(o, {1, 2});
  std::vector<unsigned> ks =
      o.yvars >= 0 ? std::vector<unsigned>{unsigned(o.yvars)} : std::vector<unsigned>{1, 2};
  for (unsigned n : ns)
    for (unsigned k : ks)
      for (const StrictPartition& lambda : strict_partitions(wmax))
        jobs.push_back(wrap(o, jobs.size(),
                            [lambda, n, k]() { return skew_expansion_check(lambda, n, k); }));
}

using SuiteFn = void (*)(const SuiteOptions&, std::vector<Job>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"laplace", suite_laplace},
      {"cbiw", suite_cbiw},
      {"cauchy-binet-1",
       [](const SuiteOptions& o, std::vector<Job>& j) {
         suite_cauchy_binet(o, j, CauchyBinetVariant::CB1);
       }},
      {"cauchy-binet-2",
       [](const SuiteOptions& o, std::vector<Job>& j) {
         suite_cauchy_binet(o, j, CauchyBinetVariant::CB2);
       }},
      {"minor-summation", suite_minor_summation},
      {"iw2", suite_iw2},
      {"sylvester", suite_sylvester},
      {"schur-pfaffian", suite_schur_pfaffian},
      {"nimmo-polynomiality", suite_nimmo_polynomiality},
      {"schur3", suite_schur3},
      {"gen-fn-1", suite_gen_fn_1},
      {"gen-fn-2", suite_gen_fn_2},
      {"stability", suite_stability},
      {"bijection", suite_bijection},
      {"cauchy", suite_cauchy},
      {"littlewood", suite_littlewood},
      {"littlewood-coeffs", suite_littlewood_coeffs},
      {"pjn", suite_pjn},
      {"ns", suite_ns},
      {"skew-expansion", suite_skew_expansion},
  };
  return table;
}

} // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

bool suite_exists(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

std::vector<IdentityReport> run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    std::vector<Job> jobs;
    fn(opts, jobs);
    return run_jobs(jobs, opts.threads);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite: " + name);
}

} // namespace qfn
