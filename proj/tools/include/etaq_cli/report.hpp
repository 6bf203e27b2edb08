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


#ifndef ETAQ_CLI_REPORT_HPP
#define ETAQ_CLI_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace etaq::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kText };

Format parse_format(std::string_view name);

/// Outcome of a command; maps onto the process exit code.
enum class Outcome {
  kPass,   ///< every check succeeded (exit 0)
  kData,   ///< plain data output (exit 0)
  kFail,   ///< a counterexample or mismatch was found (exit 1)
  kError,  ///< usage or domain error (exit 2)
};

const char* to_string(Outcome outcome);
int exit_code(Outcome outcome);

/// Row-oriented view of a report, used for csv and text output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// A command's canonical result. JSON output is the full record with fields
/// in a fixed order; csv and text output render `table`.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Outcome outcome = Outcome::kData;
  Json payload = Json::object();
  Table table;
};

std::string tool_version();

Json to_json(const Report& report);
std::string render(const Report& report, Format format);

}  // namespace etaq::cli

#endif  // ETAQ_CLI_REPORT_HPP
