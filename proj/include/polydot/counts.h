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

// Worker counts: the closed form for PolyDot-CMPC, the three baselines it is
// compared against, and the published regions where PolyDot-CMPC wins.

#ifndef POLYDOT_COUNTS_H_
#define POLYDOT_COUNTS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "polydot/scheme_params.h"

namespace polydot {

enum class PsiRegion { kPsi1, kPsi2, kPsi3, kPsi4, kPsi5, kPsi6 };

// "psi1" ... "psi6"
std::string_view RegionLabel(PsiRegion region);

// Which of the six cases applies. Throws kRegionDispatch if the guards do not
// select exactly one case.
PsiRegion SelectRegion(const SchemeParams& params);

struct PolyDotCount {
  std::int64_t workers;
  PsiRegion region;
};

// psi1 = (p+2)ts + theta(t-1) + 2z - 1    ts < z or t = 1
// psi2 = 2ts + theta(t-1) + 3z - 1        ts-t < z <= ts
// psi3 = 2ts + theta(t-1) + 2z - 1        ts-2t < z <= ts-t
// psi4 = (t+1)ts + (t-1)(z+t-1) + 2z - 1  upsilon < z <= ts-2t
// psi5 = theta*t + z                      z <= upsilon
// psi6 = t^2 + 2t + tz - 1                s = 1, z <= t, t != 1
// (psi2..psi5 require s, t != 1)
PolyDotCount NPolyDot(const SchemeParams& params);

std::int64_t NEntangled(const SchemeParams& params);
std::int64_t NSsmm(const SchemeParams& params);
// Batch size one.
std::int64_t NGcsa(const SchemeParams& params);

enum class Scheme { kPolyDot, kEntangled, kSsmm, kGcsa };

// "polydot", "entangled", "ssmm", "gcsa"
std::string_view SchemeName(Scheme scheme);

struct WorkerCountReport {
  SchemeParams params;
  std::int64_t n_polydot;
  std::int64_t n_entangled;
  std::int64_t n_ssmm;
  std::int64_t n_gcsa;
  PsiRegion region;
  // Minimum count. Ties go to the first of Entangled, SSMM, GCSA-NA, PolyDot,
  // so PolyDot is reported only when it needs strictly fewer workers.
  Scheme winner;

  std::int64_t count(Scheme scheme) const;
  bool PolyDotStrictlyBest() const;
};

WorkerCountReport BestScheme(const SchemeParams& params);

enum class Baseline { kEntangled, kSsmm, kGcsa };

std::string_view BaselineName(Baseline baseline);
std::int64_t BaselineCount(Baseline baseline, const SchemeParams& params);

// 1-based indices of the enumerated region conditions that hold at params:
// sixteen for Entangled-CMPC, two for SSMM, four for GCSA-NA.
std::vector<int> LemmaConditions(Baseline baseline, const SchemeParams& params);
bool LemmaRegion(Baseline baseline, const SchemeParams& params);

}  // namespace polydot

#endif  // POLYDOT_COUNTS_H_
