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

#ifndef POLYDOT_POWERSETS_H_
#define POLYDOT_POWERSETS_H_

#include <vector>

#include "polydot/exponent_set.h"
#include "polydot/scheme_params.h"

namespace polydot {

enum class SecretACase { kFA1, kFA2 };
enum class SecretBCase { kFB1, kFB2, kFB3 };

SecretACase SelectSecretACase(const SchemeParams& params);
SecretBCase SelectSecretBCase(const SchemeParams& params);

// Coded exponents of F_A: {i + tj} = {0, ..., ts-1}.
ExponentSet CodedPowersA(const SchemeParams& params);
// Coded exponents of F_B: {t(s-1-k) + theta*l}.
ExponentSet CodedPowersB(const SchemeParams& params);
// The z exponents carrying random masks in F_A / F_B.
ExponentSet SecretPowersA(const SchemeParams& params);
ExponentSet SecretPowersB(const SchemeParams& params);

// Exponent of the coded term of F_A holding block (i, j) of A^T.
Exponent CodedExponentA(const SchemeParams& params, std::int64_t i,
                        std::int64_t j);
// Exponent of the coded term of F_B holding block (k, l) of B.
Exponent CodedExponentB(const SchemeParams& params, std::int64_t k,
                        std::int64_t l);
// i + t(s-1) + theta*l: where output block (i, l) appears in F_A * F_B.
Exponent ImportantExponent(const SchemeParams& params, std::int64_t i,
                           std::int64_t l);
ExponentSet ImportantPowers(const SchemeParams& params);

struct ConditionViolation {
  Exponent important;
  int condition;  // 1, 2 or 3
  Exponent lhs;   // element of the first set of the sumset
  Exponent rhs;   // element of the second set

  friend bool operator==(const ConditionViolation&,
                         const ConditionViolation&) = default;
};

struct ConditionReport {
  bool ok = true;
  std::vector<ConditionViolation> violations;
};

// C1: no important power in P(S_A) + P(C_B)
// C2: no important power in P(S_A) + P(S_B)
// C3: no important power in P(S_B) + P(C_A)
ConditionReport CheckConditions(const SchemeParams& params);
// Same check with caller-supplied secret supports.
ConditionReport CheckConditions(const SchemeParams& params,
                                const ExponentSet& secret_a,
                                const ExponentSet& secret_b);

// The four sumsets whose union is the support of H(x) = F_A(x) F_B(x).
struct SupportParts {
  ExponentSet coded_coded;    // D1 = P(C_A) + P(C_B)
  ExponentSet coded_secret;   // D2 = P(C_A) + P(S_B)
  ExponentSet secret_coded;   // D3 = P(S_A) + P(C_B)
  ExponentSet secret_secret;  // D4 = P(S_A) + P(S_B)

  ExponentSet Union() const;
};

SupportParts SupportDecomposition(const SchemeParams& params);
// Exact support of F_A * F_B assuming no coefficient cancellation. Its size
// is the number of workers the scheme needs.
ExponentSet SupportH(const SchemeParams& params);

}  // namespace polydot

#endif  // POLYDOT_POWERSETS_H_
