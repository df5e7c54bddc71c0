#ifndef TODA_ERRORS_HPP
#define TODA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toda {

// Base class of all library failures. The CLI prints name() to stderr and
// maps any Error to exit code 3.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define TODA_DEFINE_ERROR(E)                    \
  class E : public Error {                      \
   public:                                      \
    explicit E(const std::string& detail)       \
        : Error(#E, detail) {}                  \
  };

TODA_DEFINE_ERROR(PreconditionViolation)
TODA_DEFINE_ERROR(IndexOutOfBackground)
TODA_DEFINE_ERROR(ConvergenceFailure)
TODA_DEFINE_ERROR(PoleAtZ)
TODA_DEFINE_ERROR(RankDeficient)
TODA_DEFINE_ERROR(LossOfOrthogonality)
TODA_DEFINE_ERROR(DegenerateDisk)
TODA_DEFINE_ERROR(NearSpectrum)
TODA_DEFINE_ERROR(PoleHit)
TODA_DEFINE_ERROR(ChainEdgeFailure)
TODA_DEFINE_ERROR(ExtrapolationDivergence)
TODA_DEFINE_ERROR(NonPositiveASquared)
TODA_DEFINE_ERROR(EnergyInsideSpectrum)
TODA_DEFINE_ERROR(SignChange)
TODA_DEFINE_ERROR(OverflowGuard)
TODA_DEFINE_ERROR(StepSizeUnderflow)
TODA_DEFINE_ERROR(DomainError)
TODA_DEFINE_ERROR(EnvelopeViolation)
TODA_DEFINE_ERROR(InternalError)

#undef TODA_DEFINE_ERROR

}  // namespace toda

#endif
