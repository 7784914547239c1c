#include "sevac/error.hpp"

namespace sevac {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotSelfInverse: return "NotSelfInverse";
    case ErrorCode::NotSelfEvacuated: return "NotSelfEvacuated";
    case ErrorCode::MalformedTableau: return "MalformedTableau";
    case ErrorCode::MalformedBiword: return "MalformedBiword";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
  }
  return "Unknown";
}

}  // namespace sevac
