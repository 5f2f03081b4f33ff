#ifndef QFN_TEXT_HPP
#define QFN_TEXT_HPP

#include <string>

#include "qfn/rational_function.hpp"
#include "qfn/variables.hpp"

namespace qfn {

// Canonical textual forms. Polynomial terms are emitted in descending
// grevlex order (leading term first), so output is stable across runs.
std::string to_string(const GaussianRational& c);
std::string to_string(const Monomial& m, const VariableMap* names = nullptr);
std::string to_string(const Polynomial& p, const VariableMap* names = nullptr);
std::string to_string(const RationalFunction& f, const VariableMap* names = nullptr);

} // namespace qfn

#endif
