#include "qfn.h"

#include <json.hpp>

#include "qfn/error.hpp"
#include "qfn/schur.hpp"
#include "qfn/suites.hpp"
#include "qfn/text.hpp"

using json = nlohmann::ordered_json;

struct qfn_buffer {
  std::string data;
};

namespace {

qfn_buffer* make_buffer(std::string s) { return new qfn_buffer{std::move(s)}; }

int fail(qfn_buffer** out, int code, const std::string& message) {
  if (out) *out = make_buffer(message + "\n");
  return code;
}

int map_error(qfn_buffer** out, const qfn::Error& e) {
  return fail(out, QFN_BAD_ARGUMENT, e.what());
}

json term_array(const qfn::Polynomial& p, unsigned var_count) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    json exps = json::array();
    for (unsigned v = 0; v < var_count; ++v) exps.push_back(mono.exponent(v));
    terms.push_back(json{{"coeff_re", coeff.re().get_str()},
                         {"coeff_im", coeff.im().get_str()},
                         {"exponents", exps}});
  }
  return terms;
}

std::string csv_terms(const qfn::Polynomial& p, unsigned var_count) {
  std::string s = "coeff_re,coeff_im";
  for (unsigned v = 0; v < var_count; ++v) s += ",e" + std::to_string(v + 1);
  s += "\n";
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    s += coeff.re().get_str();
    s += ",";
    s += coeff.im().get_str();
    for (unsigned v = 0; v < var_count; ++v) s += "," + std::to_string(mono.exponent(v));
    s += "\n";
  }
  return s;
}

bool check_format(const char* format, std::string& out) {
  out = format && *format ? format : "json";
  return out == "json" || out == "csv" || out == "pretty";
}

} // namespace

extern "C" {

const char* qfn_buffer_data(const qfn_buffer* buf) { return buf ? buf->data.c_str() : ""; }

size_t qfn_buffer_size(const qfn_buffer* buf) { return buf ? buf->data.size() : 0; }

void qfn_buffer_free(qfn_buffer* buf) { delete buf; }

const char* qfn_version(void) { return "0.1.0"; }

const char* qfn_suite_list(void) {
  static const std::string joined = [] {
    std::string s;
    for (const std::string& name : qfn::suite_names()) {
      if (!s.empty()) s += ",";
      s += name;
    }
    return s;
  }();
  return joined.c_str();
}

int qfn_compute(const char* kind, const char* lambda, const char* mu, int vars,
                const char* format, qfn_buffer** out) {
  if (!out) return QFN_BAD_ARGUMENT;
  try {
    std::string kind_s = kind ? kind : "";
    std::string fmt;
    if (!check_format(format, fmt)) return fail(out, QFN_BAD_ARGUMENT, "unknown format");
    if (vars < 0) return fail(out, QFN_BAD_ARGUMENT, "vars must be nonnegative");
    auto lam = qfn::StrictPartition::parse(lambda ? lambda : "");
    if (!lam)
      return fail(out, QFN_BAD_ARGUMENT,
                  "lambda must be a strictly decreasing list of positive integers");
    std::vector<unsigned> alphabet = qfn::range_vars(0, static_cast<unsigned>(vars));

    qfn::Polynomial value;
    if (kind_s == "P") {
      value = qfn::nimmo_p(*lam, alphabet);
    } else if (kind_s == "Q") {
      value = qfn::nimmo_q(*lam, alphabet);
    } else if (kind_s == "skew") {
      if (!mu) return fail(out, QFN_BAD_ARGUMENT, "kind skew requires mu");
      auto inner = qfn::StrictPartition::parse(mu);
      if (!inner)
        return fail(out, QFN_BAD_ARGUMENT,
                    "mu must be a strictly decreasing list of positive integers");
      value = qfn::skew_q(*lam, *inner, alphabet);
    } else {
      return fail(out, QFN_BAD_ARGUMENT, "kind must be P, Q or skew");
    }

    if (fmt == "csv") {
      *out = make_buffer(csv_terms(value, static_cast<unsigned>(vars)));
    } else if (fmt == "pretty") {
      *out = make_buffer(qfn::to_string(value) + "\n");
    } else {
      json doc{{"kind", kind_s},
               {"lambda", lam->parts()},
               {"vars", vars},
               {"terms", term_array(value, static_cast<unsigned>(vars))}};
      if (kind_s == "skew") doc["mu"] = qfn::StrictPartition::parse(mu)->parts();
      *out = make_buffer(doc.dump() + "\n");
    }
    return QFN_OK;
  } catch (const qfn::Error& e) {
    return map_error(out, e);
  } catch (const std::exception& e) {
    return fail(out, QFN_INTERNAL, e.what());
  }
}

int qfn_verify(const char* suite, int vars, int yvars, int degree, const char* mode,
               uint64_t seed, int threads, const char* format, qfn_buffer** out) {
  if (!out) return QFN_BAD_ARGUMENT;
  try {
    std::string fmt;
    if (!check_format(format, fmt)) return fail(out, QFN_BAD_ARGUMENT, "unknown format");
    std::string suite_s = suite ? suite : "";
    if (!qfn::suite_exists(suite_s))
      return fail(out, QFN_BAD_ARGUMENT, "unknown suite: " + suite_s);
    std::string mode_s = mode && *mode ? mode : "symbolic";
    if (mode_s != "symbolic" && mode_s != "specialized")
      return fail(out, QFN_BAD_ARGUMENT, "mode must be symbolic or specialized");

    qfn::SuiteOptions opts;
    opts.vars = vars;
    opts.yvars = yvars;
    opts.degree = degree;
    opts.specialized = mode_s == "specialized";
    opts.seed = seed;
    opts.threads = threads;
    std::vector<qfn::IdentityReport> reports = qfn::run_suite(suite_s, opts);

    std::string text;
    bool all_equal = true;
    for (const qfn::IdentityReport& r : reports) {
      all_equal = all_equal && r.equal;
      if (fmt == "csv") {
        text += r.name + ";" + r.params + ";" + (r.equal ? "true" : "false") + "\n";
      } else if (fmt == "pretty") {
        text += std::string(r.equal ? "ok   " : "FAIL ") + r.name + " [" + r.params + "]\n";
      } else {
        json line{{"identity", r.name}, {"params", r.params}, {"equal", r.equal}};
        if (!r.equal) {
          line["lhs"] = qfn::to_string(r.lhs);
          line["rhs"] = qfn::to_string(r.rhs);
        }
        text += line.dump() + "\n";
      }
    }
    *out = make_buffer(std::move(text));
    return all_equal ? QFN_OK : QFN_VERIFY_FAILED;
  } catch (const qfn::Error& e) {
    return map_error(out, e);
  } catch (const std::exception& e) {
    return fail(out, QFN_INTERNAL, e.what());
  }
}

int qfn_table(int degree, int vars, const char* format, qfn_buffer** out) {
  if (!out) return QFN_BAD_ARGUMENT;
  try {
    std::string fmt;
    if (!check_format(format, fmt)) return fail(out, QFN_BAD_ARGUMENT, "unknown format");
    if (degree < 0 || vars < 0)
      return fail(out, QFN_BAD_ARGUMENT, "degree and vars must be nonnegative");
    std::vector<unsigned> alphabet = qfn::range_vars(0, static_cast<unsigned>(vars));

    std::string text;
    json rows = json::array();
    if (fmt == "csv") text = "lambda,weight,length,q\n";
    for (const qfn::StrictPartition& lambda : qfn::strict_partitions(unsigned(degree))) {
      qfn::Polynomial q = qfn::nimmo_q(lambda, alphabet);
      if (fmt == "csv") {
        std::string parts;
        for (std::size_t i = 0; i < lambda.length(); ++i) {
          if (i) parts += " ";
          parts += std::to_string(lambda.parts()[i]);
        }
        text += parts + "," + std::to_string(lambda.weight()) + "," +
                std::to_string(lambda.length()) + "," + qfn::to_string(q) + "\n";
      } else if (fmt == "pretty") {
        text += lambda.to_string() + ": " + qfn::to_string(q) + "\n";
      } else {
        rows.push_back(json{{"lambda", lambda.parts()},
                            {"weight", lambda.weight()},
                            {"length", lambda.length()},
                            {"terms", term_array(q, static_cast<unsigned>(vars))}});
      }
    }
    if (fmt == "json") text = rows.dump() + "\n";
    *out = make_buffer(std::move(text));
    return QFN_OK;
  } catch (const qfn::Error& e) {
    return map_error(out, e);
  } catch (const std::exception& e) {
    return fail(out, QFN_INTERNAL, e.what());
  }
}

} // extern "C"
