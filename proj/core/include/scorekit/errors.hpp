#pragma once

#include <stdexcept>
#include <string>

namespace scorekit {

// Base class for all scorekit errors. Subtypes mirror the failure modes of
// the public API so callers can catch precisely what they can handle.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SCOREKIT_DEFINE_ERROR(NAME)          \
  class NAME : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// divergence
SCOREKIT_DEFINE_ERROR(LengthMismatchError);
SCOREKIT_DEFINE_ERROR(NormalizationError);
SCOREKIT_DEFINE_ERROR(AbsoluteContinuityError);
SCOREKIT_DEFINE_ERROR(ZeroBinMassError);

// binning
SCOREKIT_DEFINE_ERROR(SingleClassLabelsError);
SCOREKIT_DEFINE_ERROR(NonFiniteValueError);
SCOREKIT_DEFINE_ERROR(EmptyClassError);

// woe / inference
SCOREKIT_DEFINE_ERROR(BinStructureMismatchError);
SCOREKIT_DEFINE_ERROR(EmptyEpochError);
SCOREKIT_DEFINE_ERROR(NegativeIvError);

// fairness / pareto
SCOREKIT_DEFINE_ERROR(NonpositiveDenominatorError);
SCOREKIT_DEFINE_ERROR(EmptyGroupError);

// models
SCOREKIT_DEFINE_ERROR(RankDeficientError);
SCOREKIT_DEFINE_ERROR(SingleClassError);

// data
SCOREKIT_DEFINE_ERROR(InvalidConfigError);
SCOREKIT_DEFINE_ERROR(MissingColumnError);
SCOREKIT_DEFINE_ERROR(ParseError);
SCOREKIT_DEFINE_ERROR(EmptyFileError);
SCOREKIT_DEFINE_ERROR(DegenerateSplitError);

#undef SCOREKIT_DEFINE_ERROR

}  // namespace scorekit
