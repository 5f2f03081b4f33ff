#include "qfn/text.hpp"

namespace qfn {

namespace {

std::string var_name(unsigned v, const VariableMap* names) {
  if (names) return names->name(v);
  return "x" + std::to_string(v + 1);
}

// Renders a coefficient for use in front of a monomial; pure imaginary
// parts use the suffix "i", mixed values are parenthesized.
std::string coeff_str(const GaussianRational& c) {
  if (c.im() == 0) return c.re().get_str();
  std::string im = c.im().get_str();
  if (im == "1") im.clear();
  if (im == "-1") im = "-";
  if (c.re() == 0) return im + "i";
  std::string s = "(" + c.re().get_str();
  if (c.im() > 0) s += "+";
  return s + im + "i)";
}

} // namespace

std::string to_string(const GaussianRational& c) { return coeff_str(c); }

std::string to_string(const Monomial& m, const VariableMap* names) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += var_name(v, names);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string to_string(const Polynomial& p, const VariableMap* names) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = coeff_str(c);
    if (!s.empty()) {
      if (cs[0] == '-') {
        s += " - ";
        cs.erase(0, 1);
      } else {
        s += " + ";
      }
    }
    if (m.is_one()) {
      s += cs;
    } else if (cs == "1") {
      s += to_string(m, names);
    } else if (cs == "-1") {
      s += "-" + to_string(m, names);
    } else {
      s += cs + "*" + to_string(m, names);
    }
  }
  return s;
}

std::string to_string(const RationalFunction& f, const VariableMap* names) {
  if (f.is_polynomial()) return to_string(f.num(), names);
  return "(" + to_string(f.num(), names) + ")/(" + to_string(f.den(), names) + ")";
}

} // namespace qfn
