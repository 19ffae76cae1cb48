#include "berge/error.hpp"

namespace berge {

auto to_string(ErrorCode code) -> const char* {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::EmptyHyperedge: return "EmptyHyperedge";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UndefinedWeight: return "UndefinedWeight";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::ExceedsCap: return "ExceedsCap";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace berge
