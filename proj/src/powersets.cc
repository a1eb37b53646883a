/*
 * Copyright 2026 The polydot-cmpc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "polydot/powersets.h"

#include <stdexcept>
#include <string>

namespace polydot {
namespace {

Exponent E(std::int64_t v) {
  if (v < 0) throw std::logic_error("negative exponent " + std::to_string(v));
  return static_cast<Exponent>(v);
}

void RequireSize(const ExponentSet& set, std::int64_t z, const char* what) {
  if (static_cast<std::int64_t>(set.size()) != z) {
    throw std::logic_error(std::string(what) + " has " +
                           std::to_string(set.size()) + " exponents, expected " +
                           std::to_string(z));
  }
}

void CollectViolations(const ExponentSet& important, const ExponentSet& lhs,
                       const ExponentSet& rhs, int condition,
                       ConditionReport& report) {
  for (Exponent v : important) {
    for (Exponent a : lhs) {
      if (a > v) break;
      if (rhs.contains(v - a)) {
        report.ok = false;
        report.violations.push_back({v, condition, a, v - a});
      }
    }
  }
}

}  // namespace

SecretACase SelectSecretACase(const SchemeParams& params) {
  return params.z() > params.ts() - params.t() && params.generic()
             ? SecretACase::kFA1
             : SecretACase::kFA2;
}

SecretBCase SelectSecretBCase(const SchemeParams& params) {
  if (params.z() > params.tau() || !params.generic()) return SecretBCase::kFB1;
  if (2 * params.z() > params.tau() + 1) return SecretBCase::kFB2;
  return SecretBCase::kFB3;
}

Exponent CodedExponentA(const SchemeParams& params, std::int64_t i,
                        std::int64_t j) {
  return E(i + params.t() * j);
}

Exponent CodedExponentB(const SchemeParams& params, std::int64_t k,
                        std::int64_t l) {
  return E(params.t() * (params.s() - 1 - k) + params.theta() * l);
}

Exponent ImportantExponent(const SchemeParams& params, std::int64_t i,
                           std::int64_t l) {
  return E(i + params.t() * (params.s() - 1) + params.theta() * l);
}

ExponentSet CodedPowersA(const SchemeParams& params) {
  return ExponentSet::Range(0, static_cast<std::size_t>(params.ts()));
}

ExponentSet CodedPowersB(const SchemeParams& params) {
  std::vector<Exponent> out;
  for (std::int64_t k = 0; k < params.s(); ++k) {
    for (std::int64_t l = 0; l < params.t(); ++l) {
      out.push_back(CodedExponentB(params, k, l));
    }
  }
  return ExponentSet(std::move(out));
}

ExponentSet SecretPowersA(const SchemeParams& params) {
  const std::int64_t ts = params.ts();
  const std::int64_t theta = params.theta();
  const std::int64_t p = params.p();
  const std::int64_t z = params.z();
  std::vector<Exponent> out;
  if (SelectSecretACase(params) == SecretACase::kFA1) {
    // p full windows of width t(s-1) in the gaps of C_A * C_B, then the rest.
    const std::int64_t width = params.t() * (params.s() - 1);
    for (std::int64_t l = 0; l < p; ++l) {
      for (std::int64_t w = 0; w < width; ++w) out.push_back(E(ts + theta * l + w));
    }
    for (std::int64_t u = 0; u <= z - 1 - p * width; ++u) {
      out.push_back(E(ts + theta * p + u));
    }
  } else {
    for (std::int64_t u = 0; u < z; ++u) out.push_back(E(ts + theta * p + u));
  }
  ExponentSet set(std::move(out));
  RequireSize(set, z, "P(S_A)");
  return set;
}

ExponentSet SecretPowersB(const SchemeParams& params) {
  const std::int64_t ts = params.ts();
  const std::int64_t theta = params.theta();
  const std::int64_t z = params.z();
  std::vector<Exponent> out;
  switch (SelectSecretBCase(params)) {
    case SecretBCase::kFB1:
      for (std::int64_t r = 0; r < z; ++r) {
        out.push_back(E(ts + theta * (params.t() - 1) + r));
      }
      break;
    case SecretBCase::kFB2: {
      const std::int64_t pp = *params.p_prime();
      const std::int64_t width = params.tau() - z + 1;
      for (std::int64_t l = 0; l < pp; ++l) {
        for (std::int64_t d = 0; d < width; ++d) out.push_back(E(ts + theta * l + d));
      }
      for (std::int64_t v = 0; v <= z - 1 - pp * width; ++v) {
        out.push_back(E(ts + theta * pp + v));
      }
      break;
    }
    case SecretBCase::kFB3:
      for (std::int64_t v = 0; v < z; ++v) out.push_back(E(ts + v));
      break;
  }
  ExponentSet set(std::move(out));
  RequireSize(set, z, "P(S_B)");
  return set;
}

ExponentSet ImportantPowers(const SchemeParams& params) {
  std::vector<Exponent> out;
  for (std::int64_t i = 0; i < params.t(); ++i) {
    for (std::int64_t l = 0; l < params.t(); ++l) {
      out.push_back(ImportantExponent(params, i, l));
    }
  }
  return ExponentSet(std::move(out));
}

ConditionReport CheckConditions(const SchemeParams& params) {
  return CheckConditions(params, SecretPowersA(params), SecretPowersB(params));
}

ConditionReport CheckConditions(const SchemeParams& params,
                                const ExponentSet& secret_a,
                                const ExponentSet& secret_b) {
  const ExponentSet important = ImportantPowers(params);
  ConditionReport report;
  CollectViolations(important, secret_a, CodedPowersB(params), 1, report);
  CollectViolations(important, secret_a, secret_b, 2, report);
  CollectViolations(important, secret_b, CodedPowersA(params), 3, report);
  return report;
}

ExponentSet SupportParts::Union() const {
  return coded_coded.Union(coded_secret)
      .Union(secret_coded)
      .Union(secret_secret);
}

SupportParts SupportDecomposition(const SchemeParams& params) {
  const ExponentSet ca = CodedPowersA(params);
  const ExponentSet cb = CodedPowersB(params);
  const ExponentSet sa = SecretPowersA(params);
  const ExponentSet sb = SecretPowersB(params);
  return {Sumset(ca, cb), Sumset(ca, sb), Sumset(sa, cb), Sumset(sa, sb)};
}

ExponentSet SupportH(const SchemeParams& params) {
  return SupportDecomposition(params).Union();
}

}  // namespace polydot
