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


#include "etaq_cli/report.hpp"

#include <sstream>

#include "etaq/errors.hpp"

#ifndef ETAQ_VERSION
#define ETAQ_VERSION "0.0.0"
#endif

namespace etaq::cli {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass: return "pass";
    case Outcome::kData: return "data";
    case Outcome::kFail: return "fail";
    case Outcome::kError: return "error";
  }
  return "error";
}

int exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass:
    case Outcome::kData: return 0;
    case Outcome::kFail: return 1;
    case Outcome::kError: return 2;
  }
  return 2;
}

std::string tool_version() { return ETAQ_VERSION; }

Json to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["tool_version"] = tool_version();
  j["inputs"] = report.inputs;
  j["outcome"] = to_string(report.outcome);
  j["payload"] = report.payload;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Text values are single tokens; embedded whitespace is replaced so that a
// record always stays on one line and splits cleanly on spaces.
std::string text_field(std::string s) {
  for (char& c : s)
    if (c == ' ' || c == '\n' || c == '\t') c = '_';
  return s;
}

}  // namespace

std::string render(const Report& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kJson:
      out << to_json(report).dump(2) << '\n';
      break;
    case Format::kCsv: {
      const auto& cols = report.table.columns;
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_field(cols[i]);
      out << '\n';
      for (const auto& row : report.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
      }
      break;
    }
    case Format::kText: {
      out << "command=" << report.command << " outcome=" << to_string(report.outcome)
          << " tool_version=" << tool_version() << '\n';
      const auto& cols = report.table.columns;
      for (const auto& row : report.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out << (i ? " " : "") << cols[i] << '=' << text_field(row[i]);
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace etaq::cli
