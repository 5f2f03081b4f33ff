#ifndef QFN_ERROR_HPP
#define QFN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qfn {

enum class ErrorKind {
  DivisionByZero,
  NotExpandable,
  DenominatorVanishes,
  ShapeMismatch,
  ParityViolation,
  ZeroPivot,
  InexactDivision,
  NotSkewSymmetric,
  InvalidArgument,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace qfn

#endif
