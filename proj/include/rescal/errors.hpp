#pragma once

#include <stdexcept>
#include <string>

namespace rescal {

// All mathematical failure modes carry a stable name so the CLI can
// report them and map them to exit codes.
class MathError : public std::runtime_error {
public:
  MathError(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define RESCAL_DEFINE_ERROR(Name)                                   \
  class Name : public MathError {                                   \
  public:                                                           \
    explicit Name(const std::string& what) : MathError(#Name, what) {} \
  }

RESCAL_DEFINE_ERROR(ZeroConstantTerm);
RESCAL_DEFINE_ERROR(TruncationOverflow);
RESCAL_DEFINE_ERROR(UnsupportedSignedCase);
RESCAL_DEFINE_ERROR(DegreeMismatch);
RESCAL_DEFINE_ERROR(QuadraticRequired);
RESCAL_DEFINE_ERROR(DifferentialNotSquareZero);
RESCAL_DEFINE_ERROR(NonIntegralRank);
RESCAL_DEFINE_ERROR(NegativeRank);
RESCAL_DEFINE_ERROR(OddDegreeUnsupported);
RESCAL_DEFINE_ERROR(NotPrimitive);
RESCAL_DEFINE_ERROR(NotNilpotent);
RESCAL_DEFINE_ERROR(InvalidArgument);
RESCAL_DEFINE_ERROR(WorkLimitExceeded);

#undef RESCAL_DEFINE_ERROR

}  // namespace rescal
