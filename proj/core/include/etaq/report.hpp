// Copyright 2026 The etaq Authors
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

#ifndef ETAQ_REPORT_HPP
#define ETAQ_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace etaq {

/// Outcome of a numerical check. A failed check is a result, not an error.
struct VerificationReport {
  std::string check;
  bool passed = false;
  /// Number of individual comparisons made.
  std::uint64_t checked = 0;
  /// Index (coefficient or progression term) of the first mismatch.
  std::optional<std::uint64_t> first_failure;
  std::string detail;
};

}  // namespace etaq

#endif  // ETAQ_REPORT_HPP
