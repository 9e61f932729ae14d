#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

// Bad inputs or violated preconditions.  The CLI maps these to exit code 2.
struct BadParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requests beyond what can be enumerated or stored at desk scale.  Exit code 3.
struct InfeasibleScale : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : BadParams { using BadParams::BadParams; };
struct ReducibleModulus : BadParams { using BadParams::BadParams; };
struct DegreeMismatch : BadParams { using BadParams::BadParams; };
struct DivisionByZero : BadParams { using BadParams::BadParams; };
struct FieldMismatch : BadParams { using BadParams::BadParams; };
struct OddDegree : BadParams { using BadParams::BadParams; };
struct NotAKernelElement : BadParams { using BadParams::BadParams; };
struct NotIndependent : BadParams { using BadParams::BadParams; };
struct EmptyEvaluationSet : BadParams { using BadParams::BadParams; };
struct TooLargeToEnumerate : InfeasibleScale { using InfeasibleScale::InfeasibleScale; };
struct TooLarge : InfeasibleScale { using InfeasibleScale::InfeasibleScale; };
struct LTooLarge : BadParams { using BadParams::BadParams; };
struct RankDeficient : std::runtime_error { using std::runtime_error::runtime_error; };
struct LengthMismatch : BadParams { using BadParams::BadParams; };
struct MalformedFiber : std::runtime_error { using std::runtime_error::runtime_error; };
struct RepeatedAbscissa : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotEnoughSurvivors : BadParams { using BadParams::BadParams; };
struct LOutOfRange : BadParams { using BadParams::BadParams; };
struct PoolTooSmall : BadParams { using BadParams::BadParams; };
struct FieldTooSmall : BadParams { using BadParams::BadParams; };
struct NoValidMu : BadParams { using BadParams::BadParams; };
struct UnknownTable : BadParams { using BadParams::BadParams; };

}  // namespace lrc
