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

#ifndef SUBPLANCK_ERROR_HPP
#define SUBPLANCK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace subplanck {

enum class ErrorKind {
  invalid_argument,
  cutoff_exhausted,
  nonfinite_term,
  singular_parameter,
  zero_norm,
  imaginary_residue,
  negative_overlap,
  degenerate_normalization,
  grid_mismatch,
  no_crossing,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can tell usage problems from numerical ones.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures of the numerics rather than of the request.
  bool is_numeric() const noexcept { return kind_ != ErrorKind::invalid_argument; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::invalid_argument, message);
}

}  // namespace subplanck

#endif  // SUBPLANCK_ERROR_HPP
