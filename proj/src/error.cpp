// Copyright 2026 The Hoten Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoten/error.hpp"

namespace hoten {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUnsortedTimestamps: return "UnsortedTimestamps";
    case ErrorCode::kOutOfGrid: return "OutOfGrid";
    case ErrorCode::kSeriesTooShort: return "SeriesTooShort";
    case ErrorCode::kConstantSeries: return "ConstantSeries";
    case ErrorCode::kNoUsableCandidate: return "NoUsableCandidate";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kAllPlaceholders: return "AllPlaceholders";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigInvalid:
    case ErrorCode::kInvalidArgument:
      return 1;
    default:
      return 2;
  }
}

}  // namespace hoten
