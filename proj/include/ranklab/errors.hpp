#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotABijection : Error { using Error::Error; };
struct CutoffOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NonFiniteScore : Error { using Error::Error; };
struct BinaryRelevanceRequired : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct NoPositiveLoss : Error { using Error::Error; };
struct FamilyMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct PointOutOfRange : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct NotRealizable : Error { using Error::Error; };
struct FamilyCutoffMismatch : Error { using Error::Error; };
struct VersionSpaceEmpty : Error { using Error::Error; };
struct NoExperts : Error { using Error::Error; };
struct ExpertBudgetExceeded : Error { using Error::Error; };
struct TooManyHypotheses : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace ranklab
