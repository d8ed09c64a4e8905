#include "kritwahl/error.hpp"

namespace kritwahl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInstance: return "DegenerateInstance";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfComparison: return "SelfComparison";
    case ErrorCode::Contradiction: return "Contradiction";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::EmptyLog: return "EmptyLog";
    case ErrorCode::StalePair: return "StalePair";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::NoScores: return "NoScores";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaVersionUnsupported: return "SchemaVersionUnsupported";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::SessionExists: return "SessionExists";
  }
  return "Unknown";
}

}  // namespace kritwahl
