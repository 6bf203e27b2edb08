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

#include "etaq/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "etaq/errors.hpp"
#include "etaq/identities.hpp"
#include "etaq/qseries.hpp"

namespace etaq::congruence {

using arith::PrimePower;

const char* to_string(Provenance::Kind kind) {
  switch (kind) {
    case Provenance::Kind::kCriterion: return "criterion";
    case Provenance::Kind::kPublished: return "published";
    case Provenance::Kind::kConjecture: return "conjecture";
    case Provenance::Kind::kDiscovered: return "discovered";
  }
  return "unknown";
}

std::string Congruence::statement() const {
  std::string k_text = k.is_integer() ? std::to_string(k.num()) : k.to_string();
  return "p_{" + k_text + "}(" + std::to_string(progression_modulus) + "n+" + std::to_string(residue) +
         ") = 0 mod " + std::to_string(modulus.modulus());
}

namespace {

void require_coprime(const FracExponent& k, std::uint64_t l) {
  if (static_cast<std::uint64_t>(k.den()) % l == 0)
    throw PrimeDividesDenominator("prime " + std::to_string(l) + " divides the denominator of k = " + k.to_string());
}

bool is_power_of(std::uint64_t x, std::uint64_t l) {
  if (x < l) return false;
  while (x % l == 0) x /= l;
  return x == 1;
}

}  // namespace

Congruence make_congruence(const FracExponent& k, const PrimePower& modulus, std::uint64_t progression_modulus,
                           std::uint64_t residue, std::vector<Provenance> provenance) {
  require_coprime(k, modulus.prime());
  if (!is_power_of(progression_modulus, modulus.prime()))
    throw InvalidArgument("progression modulus " + std::to_string(progression_modulus) + " is not a power of " +
                          std::to_string(modulus.prime()));
  if (residue >= progression_modulus)
    throw InvalidArgument("residue " + std::to_string(residue) + " out of range for progression modulus " +
                          std::to_string(progression_modulus));
  return Congruence{k, modulus, progression_modulus, residue, std::move(provenance), std::nullopt};
}

Congruence make_congruence(const FracExponent& k, const PrimePower& modulus, std::uint64_t residue,
                           std::vector<Provenance> provenance) {
  return make_congruence(k, modulus, modulus.prime(), residue, std::move(provenance));
}

int criterion_case(int d) {
  switch (d) {
    case 1: return 1;
    case 3: return 2;
    case 4:
    case 8:
    case 14: return 3;
    case 6:
    case 10: return 4;
    case 26: return 5;
    default: throw UnsupportedD("d = " + std::to_string(d) + " has no lattice-sum criterion");
  }
}

bool theorem2_condition(int d, std::uint64_t l, std::uint64_t r) {
  const int which = criterion_case(d);
  if (!arith::is_prime(l)) throw NotPrime(std::to_string(l) + " is not prime");
  if (r >= l) throw InvalidArgument("residue must lie in [0, l)");
  const auto li = static_cast<std::int64_t>(l);
  const auto ri = static_cast<std::int64_t>(r);
  const bool vanishes = (24 * ri + d) % li == 0;
  switch (which) {
    case 1:
      return l != 2 && arith::legendre_symbol(24 * ri + 1, l) == -1;
    case 2:
      if ((8 * ri + 1) % li == 0) return true;
      return l != 2 && arith::legendre_symbol(8 * ri + 1, l) == -1;
    case 3:
      return l % 6 == 5 && vanishes;
    case 4:
      return l >= 5 && l % 4 == 3 && vanishes;
    default:
      return l % 12 == 11 && vanishes;
  }
}

std::vector<Congruence> theorem2_congruences(std::int64_t a, std::int64_t b, std::uint64_t l_max) {
  if (b < 1) throw InvalidArgument("b must be positive");
  if (std::gcd(a, b) != 1) throw InvalidArgument("a and b must be coprime");
  const FracExponent k(-a, b);
  const auto primes = arith::primes_between(2, l_max);

  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Provenance>> found;
  for (int d : identities::kSupportedD) {
    const std::int64_t target = a + d * b;
    for (auto l : primes) {
      // Every prime divides 0.
      if (target != 0 && target % static_cast<std::int64_t>(l) != 0) continue;
      if (static_cast<std::uint64_t>(b) % l == 0) continue;
      for (std::uint64_t r = 0; r < l; ++r) {
        if (!theorem2_condition(d, l, r)) continue;
        Provenance p;
        p.kind = Provenance::Kind::kCriterion;
        p.criterion_case = criterion_case(d);
        p.d = d;
        p.label = "case " + std::to_string(p.criterion_case) + ", d=" + std::to_string(d);
        found[{l, r}].push_back(std::move(p));
      }
    }
  }

  std::vector<Congruence> out;
  out.reserve(found.size());
  for (auto& [key, prov] : found)
    out.push_back(make_congruence(k, PrimePower(key.first), key.second, std::move(prov)));
  return out;
}

namespace {

// r <- r * sum_j e[j] q^{m j} over Z/M, in place from the top down.
void multiply_sparse_factor(std::vector<std::uint64_t>& r, const std::vector<std::uint64_t>& e, std::size_t m,
                            std::uint64_t modulus) {
  const std::size_t n = r.size() - 1;
  if (m > n) return;
  const unsigned __int128 sq = static_cast<unsigned __int128>(modulus - 1) * (modulus - 1);
  if (modulus <= (std::uint64_t{1} << 32)) {
    // Each product is below M^2 < 2^64; reduce the running sum only when
    // the next product could overflow.
    const std::uint64_t limit = sq == 0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(~std::uint64_t{0} / sq);
    for (std::size_t idx = n; idx >= m; --idx) {
      std::uint64_t acc = r[idx];
      std::uint64_t pending = 1;
      const std::size_t jmax = idx / m;
      const std::uint64_t* lo = r.data() + idx;
      for (std::size_t j = 1; j <= jmax; ++j) {
        lo -= m;
        acc += e[j] * *lo;
        if (++pending >= limit) {
          acc %= modulus;
          pending = 1;
        }
      }
      r[idx] = acc % modulus;
      if (idx == m) break;
    }
    return;
  }
  for (std::size_t idx = n; idx >= m; --idx) {
    unsigned __int128 acc = r[idx];
    for (std::size_t j = 1; j * m <= idx; ++j) {
      acc += static_cast<unsigned __int128>(e[j]) * r[idx - j * m];
      if ((j & 0xff) == 0) acc %= modulus;
    }
    r[idx] = static_cast<std::uint64_t>(acc % modulus);
    if (idx == m) break;
  }
}

}  // namespace

ResidueSeries residue_series_pk(const FracExponent& k, const PrimePower& modulus, std::size_t n) {
  require_coprime(k, modulus.prime());
  const std::uint64_t mod = modulus.modulus();

  // Signed binomial coefficients (-1)^j c_k(j) mod M. The exact rational is
  // carried along because the recurrence divides by j, which l may divide;
  // den(c_k(j)) itself is a power of primes of b and so a unit mod M.
  std::vector<std::uint64_t> e(n + 1);
  {
    const Integer a(static_cast<long>(k.num()));
    const Integer b(static_cast<long>(k.den()));
    Rational c = 1, step;
    e[0] = 1 % mod;
    for (std::size_t j = 1; j <= n; ++j) {
      step.get_num() = a - b * static_cast<unsigned long>(j - 1);
      step.get_den() = b * static_cast<unsigned long>(j);
      step.canonicalize();
      c *= step;
      const std::uint64_t v = arith::reduce_mod(c, mod);
      e[j] = (j % 2 == 0 || v == 0) ? v : mod - v;
    }
  }

  ResidueSeries out;
  out.modulus = mod;
  out.coeffs.assign(n + 1, 0);
  out.coeffs[0] = 1 % mod;
  for (std::size_t m = 1; m <= n; ++m) multiply_sparse_factor(out.coeffs, e, m, mod);
  return out;
}

ResidueSeries residue_mul(const ResidueSeries& f, const ResidueSeries& g) {
  if (f.modulus != g.modulus) throw InvalidArgument("residue series moduli differ");
  const std::size_t n = std::min(f.order(), g.order());
  ResidueSeries out;
  out.modulus = f.modulus;
  out.coeffs.assign(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      out.coeffs[i + j] = (out.coeffs[i + j] + arith::mul_mod(f.coeffs[i], g.coeffs[j], f.modulus)) % f.modulus;
  }
  return out;
}

VerificationReport verify_congruence(Congruence& c, const ResidueSeries& series) {
  require_coprime(c.k, c.modulus.prime());
  if (series.modulus != c.modulus.modulus()) throw InvalidArgument("residue series has the wrong modulus");
  VerificationReport report;
  report.check = c.statement();
  for (std::uint64_t idx = c.residue; idx <= series.order(); idx += c.progression_modulus) {
    ++report.checked;
    if (series[idx] != 0) {
      report.first_failure = idx;
      report.detail = "p_k(" + std::to_string(idx) + ") = " + std::to_string(series[idx]) + " mod " +
                      std::to_string(series.modulus);
      return report;
    }
  }
  report.passed = true;
  report.detail = std::to_string(report.checked) + " progression terms vanish up to index " +
                  std::to_string(series.order());
  c.verified_to = series.order();
  return report;
}

VerificationReport verify_congruence(Congruence& c, std::size_t n_max) {
  const auto series = residue_series_pk(c.k, c.modulus, n_max);
  return verify_congruence(c, series);
}

std::vector<VerificationReport> verify_all(std::vector<Congruence>& claims, std::size_t n_max, unsigned threads) {
  using Key = std::tuple<std::int64_t, std::int64_t, std::uint64_t, unsigned>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const auto& c = claims[i];
    require_coprime(c.k, c.modulus.prime());
    groups[{c.k.num(), c.k.den(), c.modulus.prime(), c.modulus.exponent()}].push_back(i);
  }
  std::vector<const std::vector<std::size_t>*> work;
  for (const auto& [key, members] : groups) work.push_back(&members);

  std::vector<VerificationReport> reports(claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w = next++; w < work.size(); w = next++) {
      const auto& members = *work[w];
      const auto& first = claims[members.front()];
      const auto series = residue_series_pk(first.k, first.modulus, n_max);
      for (auto i : members) reports[i] = verify_congruence(claims[i], series);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, work.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

std::vector<Congruence> discover(const FracExponent& k, std::uint64_t l_min, std::uint64_t l_max, unsigned s,
                                 std::size_t n) {
  if (s == 0) throw InvalidArgument("congruence exponent s must be at least 1");
  std::vector<Congruence> out;
  for (auto l : arith::primes_between(l_min, l_max)) {
    if (static_cast<std::uint64_t>(k.den()) % l == 0) continue;
    const PrimePower modulus(l, s);
    if (n + 1 < kMinWitnesses * modulus.modulus())
      throw InsufficientSamples("order " + std::to_string(n) + " gives fewer than " + std::to_string(kMinWitnesses) +
                                " terms per progression mod " + std::to_string(modulus.modulus()));
    const auto series = residue_series_pk(k, modulus, n);

    std::set<std::pair<std::uint64_t, std::uint64_t>> kept;  // (progression modulus, residue)
    std::uint64_t p = 1;
    for (unsigned j = 1; j <= s; ++j) {
      p *= l;
      for (std::uint64_t r = 0; r < p; ++r) {
        bool implied = false;
        for (std::uint64_t coarse = l; coarse < p && !implied; coarse *= l) implied = kept.count({coarse, r % coarse}) > 0;
        if (implied) continue;
        std::uint64_t samples = 0;
        bool all_zero = true;
        for (std::uint64_t idx = r; idx <= n; idx += p) {
          ++samples;
          if (series[idx] != 0) {
            all_zero = false;
            break;
          }
        }
        if (!all_zero || samples < kMinWitnesses) continue;
        kept.insert({p, r});
        Provenance prov;
        prov.kind = Provenance::Kind::kDiscovered;
        prov.label = kDiscoveryLabel;
        prov.samples = samples;
        auto c = make_congruence(k, modulus, p, r, {prov});
        c.verified_to = n;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

VerificationReport frobenius_lemma_check(const FracExponent& k, std::uint64_t p, unsigned j, std::uint64_t t,
                                         std::size_t n) {
  if (t == 0) throw InvalidArgument("t must be positive");
  const PrimePower modulus(p, j);
  require_coprime(k, p);
  std::int64_t pj1 = 1;
  for (unsigned i = 1; i < j; ++i) pj1 *= static_cast<std::int64_t>(p);
  const FracExponent high = k * (pj1 * static_cast<std::int64_t>(p));
  const FracExponent low = k * pj1;

  // Left: (q^t;q^t)^{p^j k}; right: (q^{pt};q^{pt})^{p^{j-1} k}.
  const auto left = residue_series_pk(high, modulus, n / t);
  const auto right = residue_series_pk(low, modulus, n / (p * t));
  auto at = [n](const ResidueSeries& s, std::uint64_t dil, std::size_t idx) -> std::uint64_t {
    (void)n;
    return idx % dil == 0 ? s[idx / dil] : 0;
  };

  VerificationReport report;
  report.check = "(q^" + std::to_string(t) + ";q^" + std::to_string(t) + ")^{" + high.to_string() + "} = (q^" +
                 std::to_string(p * t) + ";q^" + std::to_string(p * t) + ")^{" + low.to_string() + "} mod " +
                 std::to_string(modulus.modulus());
  for (std::size_t idx = 0; idx <= n; ++idx) {
    ++report.checked;
    const auto lv = at(left, t, idx);
    const auto rv = at(right, p * t, idx);
    if (lv != rv) {
      report.first_failure = idx;
      report.detail = "coefficient " + std::to_string(idx) + ": " + std::to_string(lv) + " vs " + std::to_string(rv);
      return report;
    }
  }
  report.passed = true;
  report.detail = "agree to order " + std::to_string(n);
  return report;
}

DenominatorCheck denominator_theorem_check(const FracExponent& k, std::size_t n) {
  DenominatorCheck out;
  out.report.check = "denominators of p_{" + k.to_string() + "}(n)";
  const auto series = eta_pow_fractional(k, n);
  for (std::size_t i = 0; i <= n; ++i) {
    out.observed.push_back(series[i].get_den());
    out.predicted.push_back(arith::denom_prediction(k, i));
    ++out.report.checked;
    if (!out.report.first_failure && out.observed.back() != out.predicted.back()) {
      out.report.first_failure = i;
      out.report.detail = "n = " + std::to_string(i) + ": observed " + etaq::to_string(out.observed.back()) +
                          ", predicted " + etaq::to_string(out.predicted.back());
    }
  }
  out.report.passed = !out.report.first_failure.has_value();
  if (out.report.passed) out.report.detail = "all " + std::to_string(n + 1) + " denominators match";
  return out;
}

namespace {

VerificationReport compare_series(std::string name, const RationalSeries& want, const RationalSeries& got) {
  VerificationReport r;
  r.check = std::move(name);
  const std::size_t n = std::min(want.order(), got.order());
  for (std::size_t i = 0; i <= n; ++i) {
    ++r.checked;
    if (want[i] != got[i]) {
      r.first_failure = i;
      r.detail = "coefficient " + std::to_string(i) + ": " + etaq::to_string(want[i]) + " vs " + etaq::to_string(got[i]);
      return r;
    }
  }
  r.passed = true;
  r.detail = "equal to order " + std::to_string(n);
  return r;
}

// Re-derives p(l n + target) = 0 mod l from p = f * g, where f vanishes mod l
// on residues `f_zero` and g on residues `g_zero`: every term of the
// convolution at index l n + target must hit one of those classes.
VerificationReport corollary(std::string name, std::uint64_t l, std::uint64_t target, const FracExponent& kf,
                             const std::set<std::uint64_t>& f_zero, const FracExponent& kg,
                             const std::set<std::uint64_t>& g_zero, const RationalSeries& partitions) {
  VerificationReport r;
  r.check = std::move(name);
  const std::size_t n = partitions.order();
  const PrimePower mod(l);
  const auto f = residue_series_pk(kf, mod, n);
  const auto g = residue_series_pk(kg, mod, n);

  for (std::size_t i = 0; i <= n; ++i) {
    if ((f_zero.count(i % l) && f[i] != 0) || (g_zero.count(i % l) && g[i] != 0)) {
      r.first_failure = i;
      r.detail = "vanishing class premise fails at index " + std::to_string(i);
      return r;
    }
  }
  for (std::uint64_t idx = target; idx <= n; idx += l) {
    ++r.checked;
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i <= idx; ++i) {
      const bool covered = f_zero.count(i % l) || g_zero.count((idx - i) % l);
      if (!covered) {
        r.first_failure = idx;
        r.detail = "term " + std::to_string(i) + " of index " + std::to_string(idx) + " is not covered";
        return r;
      }
      sum = (sum + f[i] * g[idx - i]) % l;
    }
    if (sum != 0 || arith::reduce_mod(partitions[idx], l) != 0) {
      r.first_failure = idx;
      r.detail = "p(" + std::to_string(idx) + ") is not 0 mod " + std::to_string(l);
      return r;
    }
  }
  r.passed = true;
  r.detail = "derived for " + std::to_string(r.checked) + " progression terms";
  return r;
}

}  // namespace

ConvolutionReport convolution_identity_check(std::size_t n) {
  const auto partitions = series_invert(euler_product(n));
  const FracExponent third(-1, 3), two_thirds(-2, 3), half(-1, 2);
  const auto a = eta_pow_fractional(third, n);
  const auto b = eta_pow_fractional(two_thirds, n);
  const auto h = eta_pow_fractional(half, n);

  ConvolutionReport out;
  out.thirds = compare_series("p = p_{-1/3} * p_{-2/3}", partitions, series_mul(a, b));
  out.halves = compare_series("p = p_{-1/2} * p_{-1/2}", partitions, series_mul(h, h));
  out.mod5 = corollary("p(5n+4) = 0 mod 5", 5, 4, third, {2, 3, 4}, two_thirds, {3, 4}, partitions);
  out.mod7 = corollary("p(7n+5) = 0 mod 7", 7, 5, half, {2, 4, 5, 6}, half, {2, 4, 5, 6}, partitions);
  return out;
}

}  // namespace etaq::congruence
