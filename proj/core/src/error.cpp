#include "gcdens/error.hpp"

namespace gcdens {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonResidue: return "NonResidue";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::MismatchedCount: return "MismatchedCount";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::MissingComponent: return "MissingComponent";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace gcdens
