// Copyright 2026 The imatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMATCH_ERRORS_HPP
#define IMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace imatch {

enum class ErrorCode {
  OutOfRangeVertex,
  LoopEdge,
  DuplicateEdge,
  NonDisjointSets,
  InvalidEdgeId,
  NotInducedMatching,
  EdgeNotInMatching,
  InvalidCycleLength,
  TooLarge,
  ParityError,
  DegreeTooLarge,
  RetriesExhausted,
  UnknownName,
  ParseError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonDisjointSets: return "NonDisjointSets";
    case ErrorCode::InvalidEdgeId: return "InvalidEdgeId";
    case ErrorCode::NotInducedMatching: return "NotInducedMatching";
    case ErrorCode::EdgeNotInMatching: return "EdgeNotInMatching";
    case ErrorCode::InvalidCycleLength: return "InvalidCycleLength";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace imatch

#endif  // IMATCH_ERRORS_HPP
