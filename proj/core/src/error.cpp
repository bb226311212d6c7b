// Copyright 2026 The subplanck Authors
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

#include "subplanck/error.hpp"

namespace subplanck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::cutoff_exhausted: return "cutoff-exhausted";
    case ErrorKind::nonfinite_term: return "nonfinite-term";
    case ErrorKind::singular_parameter: return "singular-parameter";
    case ErrorKind::zero_norm: return "zero-norm";
    case ErrorKind::imaginary_residue: return "imaginary-residue";
    case ErrorKind::negative_overlap: return "negative-overlap";
    case ErrorKind::degenerate_normalization: return "degenerate-normalization";
    case ErrorKind::grid_mismatch: return "grid-mismatch";
    case ErrorKind::no_crossing: return "no-crossing";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace subplanck
