#pragma once

#include <stdexcept>
#include <string>

namespace escalier {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

struct InvalidCode : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };

struct BoxOutOfShape : Error { using Error::Error; };
struct NotARibbon : Error { using Error::Error; };
struct NotHorizontalStrip : Error { using Error::Error; };
struct NotVerticalStrip : Error { using Error::Error; };

struct NotDominant : Error { using Error::Error; };
struct NotGrassmannian : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

struct LengthMismatch : Error { using Error::Error; };
struct InvalidStaircase : Error { using Error::Error; };
struct NotAnAsm : Error { using Error::Error; };
struct NotFullStaircase : Error { using Error::Error; };
struct NoCanonicalCompletion : Error { using Error::Error; };
struct EmptyColumn : Error { using Error::Error; };
struct InvalidColumn : Error { using Error::Error; };
struct NotInterleaving : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

} // namespace escalier
