#include "dlab/error.hpp"

namespace dlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfDimension: return "OutOfDimension";
    case ErrorCode::kInvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kNumerical: return "Numerical";
    case ErrorCode::kEmptySlice: return "EmptySlice";
    case ErrorCode::kNotPolyhedral: return "NotPolyhedral";
    case ErrorCode::kNotInBall: return "NotInBall";
    case ErrorCode::kNegativeFirstCoordinate: return "NegativeFirstCoordinate";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kNotOnSphere: return "NotOnSphere";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace dlab
