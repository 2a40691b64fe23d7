#ifndef CFH_ERRORS_HPP
#define CFH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfh {

// exit-code-1 family: bad input / hypothesis violation at parse level
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exit-code-2 family: internal invariant or theorem violation
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : InputError { using InputError::InputError; };
struct NotEmbedded : InputError { using InputError::InputError; };
struct BadDeck : InputError { using InputError::InputError; };
struct DegenerateSegment : InputError { using InputError::InputError; };
struct NotTransverse : InputError { using InputError::InputError; };
struct Unsupported : InputError { using InputError::InputError; };
struct PathObstructed : InputError { using InputError::InputError; };
struct NotPrimitive : InputError { using InputError::InputError; };
struct ClearanceFailure : InputError { using InputError::InputError; };
struct PivotNotUnit : InputError { using InputError::InputError; };
struct PivotNotAdjacent : InputError { using InputError::InputError; };
struct NotAComplex : InputError { using InputError::InputError; };
struct EndpointMismatch : InputError { using InputError::InputError; };
struct ArcConditionRequired : InputError { using InputError::InputError; };
struct PointOnLoop : InputError { using InputError::InputError; };
struct IoError : InputError { using InputError::InputError; };

struct DegenerateContact : InternalError { using InternalError::InternalError; };
struct InconsistentPropagation : InternalError { using InternalError::InternalError; };
struct OddTraceSum : InternalError { using InternalError::InternalError; };
struct PointClassificationFailed : InternalError { using InternalError::InternalError; };
struct ClassificationFailed : InternalError { using InternalError::InternalError; };
struct TheoremViolated : InternalError { using InternalError::InternalError; };
struct InvariantViolated : InternalError { using InternalError::InternalError; };

} // namespace cfh

#endif // CFH_ERRORS_HPP
