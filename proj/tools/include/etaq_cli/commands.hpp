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


#ifndef ETAQ_CLI_COMMANDS_HPP
#define ETAQ_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "etaq_cli/report.hpp"

namespace etaq::cli {

inline constexpr std::size_t kDefaultMaxOrder = 20000;

/// Safety cap on every order parameter: ETAQ_MAX_ORDER, default 20000.
/// Throws InvalidArgument when the variable is set but not a positive integer.
std::size_t max_order();

/// Each command validates its inputs (throwing etaq::Error on usage or domain
/// errors) and returns a canonical report.
Report cmd_expand(const std::string& k, std::size_t n);
Report cmd_verify(const std::string& k, std::uint64_t ell, unsigned s, std::optional<std::uint64_t> progression,
                  std::uint64_t r, std::size_t n);
Report cmd_theorem2(std::int64_t a, std::int64_t b, std::uint64_t ell_max);
Report cmd_discover(const std::string& k, std::uint64_t ell_min, std::uint64_t ell_max, unsigned s, std::size_t n);
Report cmd_identity(int d, std::size_t n);
Report cmd_denom(const std::string& k, std::size_t n);
Report cmd_modproof(std::size_t n_check, std::size_t image_order);
Report cmd_tau(std::size_t n);
Report cmd_frobenius(const std::string& k, std::uint64_t p, unsigned j, std::uint64_t t, std::size_t n);
Report cmd_convolution(std::size_t n);
/// Lists or verifies the published / conjectured catalogue. With `n` every
/// claim is checked to that order; with `witnesses` each family is checked
/// far enough to give every residue that many progression terms.
Report cmd_catalog(const std::string& set, std::optional<std::size_t> n, std::optional<std::uint64_t> witnesses);

/// Report describing an error; outcome kError.
Report error_report(const std::string& command, const std::string& type, const std::string& message);

/// Parses arguments (without the program name), runs the command and writes
/// the rendered report to `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaq::cli

#endif  // ETAQ_CLI_COMMANDS_HPP
