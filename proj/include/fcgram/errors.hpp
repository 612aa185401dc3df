#pragma once

#include <stdexcept>
#include <string>

namespace fcgram {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInAdmissibleSet : Error { using Error::Error; };
struct BadPeriod : Error { using Error::Error; };
struct BadBasisSize : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegenerateNodes : Error { using Error::Error; };
struct ConfigMismatch : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct SingularBoundaryMatrix : Error { using Error::Error; };
struct UnknownFunction : Error { using Error::Error; };
struct UnknownProblem : Error { using Error::Error; };
struct NonDyadicSequence : Error { using Error::Error; };
struct ZeroFunction : Error { using Error::Error; };
struct RowMismatch : Error { using Error::Error; };

}  // namespace fcgram
