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


#include "etaq_cli/commands.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>

#include "CLI11.hpp"
#include "etaq/arith.hpp"
#include "etaq/catalog.hpp"
#include "etaq/congruence.hpp"
#include "etaq/errors.hpp"
#include "etaq/identities.hpp"
#include "etaq/modforms.hpp"
#include "etaq/qseries.hpp"

namespace etaq::cli {

namespace {

using congruence::Congruence;
using congruence::Provenance;

std::size_t checked_order(std::size_t n, const char* what) {
  const std::size_t cap = max_order();
  if (n > cap)
    throw InvalidArgument(std::string(what) + " = " + std::to_string(n) + " exceeds ETAQ_MAX_ORDER = " +
                          std::to_string(cap));
  return n;
}

Json optional_index(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json report_json(const VerificationReport& r) {
  Json j;
  j["check"] = r.check;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["first_failure"] = optional_index(r.first_failure);
  j["detail"] = r.detail;
  return j;
}

const std::vector<std::string> kReportColumns = {"check", "passed", "checked", "first_failure", "detail"};

std::vector<std::string> report_row(const VerificationReport& r) {
  return {r.check, r.passed ? "true" : "false", std::to_string(r.checked),
          r.first_failure ? std::to_string(*r.first_failure) : std::string(), r.detail};
}

Json provenance_json(const Provenance& p) {
  Json j;
  j["kind"] = congruence::to_string(p.kind);
  if (p.kind == Provenance::Kind::kCriterion) j["case"] = p.criterion_case;
  if (p.d != 0) j["d"] = p.d;
  if (!p.label.empty()) j["label"] = p.label;
  if (p.kind == Provenance::Kind::kDiscovered) j["samples"] = p.samples;
  return j;
}

Json congruence_json(const Congruence& c) {
  Json j;
  j["statement"] = c.statement();
  j["k"] = c.k.to_string();
  j["ell"] = c.modulus.prime();
  j["s"] = c.modulus.exponent();
  j["progression_modulus"] = c.progression_modulus;
  j["residue"] = c.residue;
  Json prov = Json::array();
  for (const auto& p : c.provenance) prov.push_back(provenance_json(p));
  j["provenance"] = prov;
  j["verified_to"] = optional_index(c.verified_to);
  return j;
}

const std::vector<std::string> kCongruenceColumns = {"statement", "k", "ell", "s", "progression_modulus", "residue",
                                                     "provenance"};

std::vector<std::string> congruence_row(const Congruence& c) {
  std::string prov;
  for (const auto& p : c.provenance) {
    if (!prov.empty()) prov += ";";
    prov += congruence::to_string(p.kind);
    if (p.kind == Provenance::Kind::kCriterion) prov += ":case" + std::to_string(p.criterion_case);
    if (p.d != 0) prov += ":d=" + std::to_string(p.d);
    if (p.kind == Provenance::Kind::kDiscovered) prov += ":samples=" + std::to_string(p.samples);
  }
  return {c.statement(),
          c.k.to_string(),
          std::to_string(c.modulus.prime()),
          std::to_string(c.modulus.exponent()),
          std::to_string(c.progression_modulus),
          std::to_string(c.residue),
          prov};
}

Outcome pass_or_fail(bool passed) { return passed ? Outcome::kPass : Outcome::kFail; }

}  // namespace

std::size_t max_order() {
  const char* env = std::getenv("ETAQ_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0 || env[0] == '-')
    throw InvalidArgument(std::string("ETAQ_MAX_ORDER must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

Report cmd_expand(const std::string& k_text, std::size_t n) {
  const auto k = FracExponent::parse(k_text);
  checked_order(n, "n");
  Report rep;
  rep.command = "expand";
  rep.inputs = {{"k", k_text}, {"n", n}};
  rep.outcome = Outcome::kData;
  const auto series = eta_pow_fractional(k, n);
  Json coeffs = Json::array();
  rep.table.columns = {"n", "coefficient"};
  for (std::size_t i = 0; i <= n; ++i) {
    const auto s = etaq::to_string(series[i]);
    coeffs.push_back(s);
    rep.table.rows.push_back({std::to_string(i), s});
  }
  rep.payload = {{"k", k.to_string()}, {"order", n}, {"coefficients", coeffs}};
  return rep;
}

Report cmd_verify(const std::string& k_text, std::uint64_t ell, unsigned s, std::optional<std::uint64_t> progression,
                  std::uint64_t r, std::size_t n) {
  const auto k = FracExponent::parse(k_text);
  checked_order(n, "N");
  auto c = congruence::make_congruence(k, arith::PrimePower(ell, s), progression.value_or(ell), r);
  const auto res = congruence::verify_congruence(c, n);
  Report rep;
  rep.command = "verify";
  rep.inputs = {{"k", k_text}, {"ell", ell}, {"s", s}, {"progression_modulus", c.progression_modulus},
                {"r", r}, {"N", n}};
  rep.outcome = pass_or_fail(res.passed);
  rep.payload = {{"congruence", congruence_json(c)}, {"report", report_json(res)}};
  rep.table.columns = kReportColumns;
  rep.table.rows.push_back(report_row(res));
  return rep;
}

Report cmd_theorem2(std::int64_t a, std::int64_t b, std::uint64_t ell_max) {
  if (b <= 0) throw InvalidArgument("b must be positive");
  if (std::gcd(a, b) != 1) throw InvalidArgument("a and b must be coprime");
  const auto list = congruence::theorem2_congruences(a, b, ell_max);
  Report rep;
  rep.command = "theorem2";
  rep.inputs = {{"a", a}, {"b", b}, {"ell_max", ell_max}};
  rep.outcome = Outcome::kData;
  Json arr = Json::array();
  rep.table.columns = kCongruenceColumns;
  for (const auto& c : list) {
    arr.push_back(congruence_json(c));
    rep.table.rows.push_back(congruence_row(c));
  }
  rep.payload = {{"k", FracExponent(-a, b).to_string()}, {"count", list.size()}, {"congruences", arr}};
  return rep;
}

Report cmd_discover(const std::string& k_text, std::uint64_t ell_min, std::uint64_t ell_max, unsigned s,
                    std::size_t n) {
  const auto k = FracExponent::parse(k_text);
  checked_order(n, "N");
  const auto list = congruence::discover(k, ell_min, ell_max, s, n);
  Report rep;
  rep.command = "discover";
  rep.inputs = {{"k", k_text}, {"ell_min", ell_min}, {"ell_max", ell_max}, {"s", s}, {"N", n}};
  rep.outcome = Outcome::kData;
  Json arr = Json::array();
  rep.table.columns = kCongruenceColumns;
  for (const auto& c : list) {
    arr.push_back(congruence_json(c));
    rep.table.rows.push_back(congruence_row(c));
  }
  rep.payload = {{"label", congruence::kDiscoveryLabel}, {"count", list.size()}, {"candidates", arr}};
  return rep;
}

Report cmd_identity(int d, std::size_t n) {
  if (!identities::is_supported(d)) throw UnsupportedD("d = " + std::to_string(d) + " has no lattice-sum form");
  checked_order(n, "N");
  const auto res = identities::verify_identity(d, n);
  Report rep;
  rep.command = "identity";
  rep.inputs = {{"d", d}, {"N", n}};
  rep.outcome = pass_or_fail(res.passed);
  rep.payload = {{"report", report_json(res)}};
  rep.table.columns = kReportColumns;
  rep.table.rows.push_back(report_row(res));
  return rep;
}

Report cmd_denom(const std::string& k_text, std::size_t n) {
  const auto k = FracExponent::parse(k_text);
  checked_order(n, "N");
  const auto res = congruence::denominator_theorem_check(k, n);
  Report rep;
  rep.command = "denom";
  rep.inputs = {{"k", k_text}, {"N", n}};
  rep.outcome = pass_or_fail(res.report.passed);
  Json observed = Json::array();
  Json predicted = Json::array();
  rep.table.columns = {"n", "observed", "predicted"};
  for (std::size_t i = 0; i < res.observed.size(); ++i) {
    observed.push_back(etaq::to_string(res.observed[i]));
    predicted.push_back(etaq::to_string(res.predicted[i]));
    rep.table.rows.push_back({std::to_string(i), etaq::to_string(res.observed[i]), etaq::to_string(res.predicted[i])});
  }
  rep.payload = {{"report", report_json(res.report)}, {"observed", observed}, {"predicted", predicted}};
  return rep;
}

Report cmd_modproof(std::size_t n_check, std::size_t image_order) {
  checked_order(n_check, "N");
  checked_order(image_order * 289, "image order * 289");
  if (image_order < 6) throw InvalidArgument("image order must be at least 6");
  const auto proof = modforms::modular_proof_289(n_check, image_order);
  Report rep;
  rep.command = "modproof";
  rep.inputs = {{"N", n_check}, {"image_order", image_order}};
  const bool ok = proof.valuations_ok && proof.residue_check.passed && proof.agree;
  rep.outcome = pass_or_fail(ok);
  Json coeffs = Json::array();
  Json vals = Json::array();
  rep.table.columns = {"i", "a_i", "ord_17"};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto a = etaq::to_string(proof.decomposition.coefficients[i]);
    coeffs.push_back(a);
    vals.push_back(proof.valuations[i]);
    rep.table.rows.push_back({std::to_string(i + 1), a, std::to_string(proof.valuations[i])});
  }
  rep.payload = {{"coefficients", coeffs},
                 {"residual_checked_to", proof.decomposition.residual_checked_to},
                 {"valuations", vals},
                 {"valuations_ok", proof.valuations_ok},
                 {"residue_check", report_json(proof.residue_check)},
                 {"agree", proof.agree}};
  return rep;
}

Report cmd_tau(std::size_t n) {
  checked_order(n, "N");
  const auto res = modforms::tau_congruence_checks(n);
  const auto tau = modforms::tau_values(std::min<std::size_t>(n, 12));
  Report rep;
  rep.command = "tau";
  rep.inputs = {{"N", n}};
  rep.outcome = pass_or_fail(res.passed);
  Json first = Json::array();
  for (std::size_t i = 1; i < tau.size(); ++i) first.push_back(etaq::to_string(tau[i]));
  rep.payload = {{"tau", first}, {"report", report_json(res)}};
  rep.table.columns = kReportColumns;
  rep.table.rows.push_back(report_row(res));
  return rep;
}

Report cmd_frobenius(const std::string& k_text, std::uint64_t p, unsigned j, std::uint64_t t, std::size_t n) {
  const auto k = FracExponent::parse(k_text);
  checked_order(n, "N");
  const auto res = congruence::frobenius_lemma_check(k, p, j, t, n);
  Report rep;
  rep.command = "frobenius";
  rep.inputs = {{"k", k_text}, {"p", p}, {"j", j}, {"t", t}, {"N", n}};
  rep.outcome = pass_or_fail(res.passed);
  rep.payload = {{"report", report_json(res)}};
  rep.table.columns = kReportColumns;
  rep.table.rows.push_back(report_row(res));
  return rep;
}

Report cmd_convolution(std::size_t n) {
  checked_order(n, "N");
  const auto res = congruence::convolution_identity_check(n);
  Report rep;
  rep.command = "convolution";
  rep.inputs = {{"N", n}};
  rep.outcome = pass_or_fail(res.passed());
  rep.payload = {{"thirds", report_json(res.thirds)},
                 {"halves", report_json(res.halves)},
                 {"mod5", report_json(res.mod5)},
                 {"mod7", report_json(res.mod7)}};
  rep.table.columns = kReportColumns;
  for (const auto* r : {&res.thirds, &res.halves, &res.mod5, &res.mod7}) rep.table.rows.push_back(report_row(*r));
  return rep;
}

Report cmd_catalog(const std::string& set, std::optional<std::size_t> n, std::optional<std::uint64_t> witnesses) {
  std::vector<catalog::Family> families;
  if (set == "published" || set == "all") families = catalog::published_families();
  if (set == "conjectured" || set == "all") {
    const auto& conj = catalog::conjectured_families();
    families.insert(families.end(), conj.begin(), conj.end());
  }
  if (families.empty()) throw InvalidArgument("set must be published, conjectured or all");
  if (n && witnesses) throw InvalidArgument("give at most one of --N and --witnesses");
  if (n) checked_order(*n, "N");
  if (witnesses && *witnesses == 0) throw InvalidArgument("witnesses must be positive");

  Report rep;
  rep.command = "catalog";
  rep.inputs = {{"set", set}, {"N", n ? Json(*n) : Json(nullptr)},
                {"witnesses", witnesses ? Json(*witnesses) : Json(nullptr)}};
  const bool verifying = n || witnesses;
  rep.outcome = Outcome::kData;
  rep.table.columns = kCongruenceColumns;
  if (verifying) rep.table.columns.insert(rep.table.columns.end(), {"passed", "checked", "detail"});

  bool all_passed = true;
  Json arr = Json::array();
  for (const auto& f : families) {
    auto claims = f.congruences();
    std::vector<VerificationReport> reports;
    if (verifying) {
      const std::size_t order = n ? *n : checked_order(f.order_for_witnesses(*witnesses), "family order");
      reports = congruence::verify_all(claims, order);
    }
    for (std::size_t i = 0; i < claims.size(); ++i) {
      Json j = congruence_json(claims[i]);
      auto row = congruence_row(claims[i]);
      if (verifying) {
        j["report"] = report_json(reports[i]);
        all_passed = all_passed && reports[i].passed;
        row.insert(row.end(), {reports[i].passed ? "true" : "false", std::to_string(reports[i].checked),
                               reports[i].detail});
      }
      arr.push_back(j);
      rep.table.rows.push_back(row);
    }
  }
  if (verifying) rep.outcome = pass_or_fail(all_passed);
  rep.payload = {{"count", arr.size()}, {"congruences", arr}};
  return rep;
}

Report error_report(const std::string& command, const std::string& type, const std::string& message) {
  Report rep;
  rep.command = command;
  rep.outcome = Outcome::kError;
  rep.payload = {{"error", type}, {"message", message}};
  rep.table.columns = {"error", "message"};
  rep.table.rows.push_back({type, message});
  return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series engine for fractional powers of the Euler product"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  std::string k;
  std::size_t n = 0;
  std::uint64_t ell = 0, r = 0, ell_min = 2, ell_max = 0, p = 0, t = 1, witnesses = 0;
  std::int64_t a = 0, b = 1;
  unsigned s = 1, j = 1;
  int d = 0;
  std::uint64_t progression = 0;
  std::size_t image_order = 12;
  std::string set = "published";
  std::function<Report()> action;

  auto sub = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  auto* expand = sub("expand", "Coefficients p_k(0..n) of (q;q)^k as exact fractions");
  expand->add_option("--k", k, "Exponent a/b")->required();
  expand->add_option("--n,--N", n, "Truncation order")->required();
  expand->callback([&] { action = [&] { return cmd_expand(k, n); }; });

  auto* verify = sub("verify", "Check p_k(P n + r) = 0 mod l^s numerically");
  verify->add_option("--k", k, "Exponent a/b")->required();
  verify->add_option("--ell", ell, "Prime l")->required();
  verify->add_option("--s", s, "Power of l in the modulus")->capture_default_str();
  auto* prog_opt = verify->add_option("--progression-modulus,--P", progression,
                                      "Progression modulus, a power of l (default l)");
  verify->add_option("--r", r, "Residue")->required();
  verify->add_option("--N,--n", n, "Largest coefficient index checked")->required();
  verify->callback([&] {
    action = [&, prog_opt] {
      return cmd_verify(k, ell, s, prog_opt->count() ? std::optional(progression) : std::nullopt, r, n);
    };
  });

  auto* thm = sub("theorem2", "Congruences implied by the lattice-sum criterion for k = -a/b");
  thm->add_option("--a", a, "Numerator a")->required();
  thm->add_option("--b", b, "Denominator b")->required();
  thm->add_option("--ell-max", ell_max, "Largest prime considered")->required();
  thm->callback([&] { action = [&] { return cmd_theorem2(a, b, ell_max); }; });

  auto* disc = sub("discover", "Numerical scan for congruences (results are unproved)");
  disc->add_option("--k", k, "Exponent a/b")->required();
  disc->add_option("--ell-min", ell_min, "Smallest prime")->capture_default_str();
  disc->add_option("--ell-max", ell_max, "Largest prime")->required();
  disc->add_option("--s", s, "Power of l in the modulus")->capture_default_str();
  disc->add_option("--N,--n", n, "Truncation order")->required();
  disc->callback([&] { action = [&] { return cmd_discover(k, ell_min, ell_max, s, n); }; });

  auto* ident = sub("identity", "Compare a lattice-sum expansion of (q;q)^d with the direct power");
  ident->add_option("--d", d, "Exponent d in {1,3,4,6,8,10,14,26}")->required();
  ident->add_option("--N,--n", n, "Truncation order")->required();
  ident->callback([&] { action = [&] { return cmd_identity(d, n); }; });

  auto* denom = sub("denom", "Compare denominators of p_k(n) with the closed form");
  denom->add_option("--k", k, "Exponent a/b")->required();
  denom->add_option("--N,--n", n, "Truncation order")->required();
  denom->callback([&] { action = [&] { return cmd_denom(k, n); }; });

  auto* modp = sub("modproof", "Hecke-operator proof of p_{-1/2}(289n+283) = 0 mod 289");
  modp->add_option("--N,--n", n, "Order of the independent residue check")->required();
  modp->add_option("--image-order", image_order, "Order of the Hecke image used for reconstruction")
      ->capture_default_str();
  modp->callback([&] { action = [&] { return cmd_modproof(n, image_order); }; });

  auto* tau = sub("tau", "Ramanujan tau congruences modulo 7 and 49");
  tau->add_option("--N,--n", n, "Largest index")->required();
  tau->callback([&] { action = [&] { return cmd_tau(n); }; });

  auto* frob = sub("frobenius", "Check (q^t;q^t)^{p^j k} = (q^{pt};q^{pt})^{p^{j-1} k} mod p^j");
  frob->add_option("--k", k, "Exponent a/b")->required();
  frob->add_option("--p", p, "Prime p")->required();
  frob->add_option("--j", j, "Power j >= 1")->capture_default_str();
  frob->add_option("--t", t, "Dilation t >= 1")->capture_default_str();
  frob->add_option("--N,--n", n, "Truncation order")->required();
  frob->callback([&] { action = [&] { return cmd_frobenius(k, p, j, t, n); }; });

  auto* conv = sub("convolution", "Partition convolution identities and the classical congruences mod 5 and 7");
  conv->add_option("--N,--n", n, "Truncation order")->required();
  conv->callback([&] { action = [&] { return cmd_convolution(n); }; });

  auto* cat = sub("catalog", "List or verify the published and conjectured congruence families");
  cat->add_option("--set", set, "published, conjectured or all")
      ->check(CLI::IsMember({"published", "conjectured", "all"}))
      ->capture_default_str();
  auto* cat_n = cat->add_option("--N,--n", n, "Verify every claim to this order");
  auto* cat_w = cat->add_option("--witnesses", witnesses, "Verify each family with this many progression terms");
  cat->callback([&, cat_n, cat_w] {
    action = [&, cat_n, cat_w] {
      return cmd_catalog(set, cat_n->count() ? std::optional(n) : std::nullopt,
                         cat_w->count() ? std::optional(witnesses) : std::nullopt);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto format = parse_format(format_name);
  const std::string command = app.get_subcommands().front()->get_name();
  Report rep;
  try {
    rep = action();
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    rep = error_report(command, e.name(), e.what());
  }
  out << render(rep, format);
  return exit_code(rep.outcome);
}

}  // namespace etaq::cli
