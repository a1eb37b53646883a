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

#include "polydot/counts.h"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "polydot/error.h"

namespace polydot {
namespace {

// Exact rational for the fractional region bounds; den > 0.
struct Frac {
  std::int64_t num;
  std::int64_t den = 1;
};

Frac MakeFrac(std::int64_t num, std::int64_t den) {
  return den < 0 ? Frac{-num, -den} : Frac{num, den};
}

int Compare(Frac a, Frac b) {
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Frac Sub(Frac a, Frac b) {
  return MakeFrac(a.num * b.den - b.num * a.den, a.den * b.den);
}

Frac Add(Frac a, Frac b) {
  return MakeFrac(a.num * b.den + b.num * a.den, a.den * b.den);
}

Frac Max(Frac a, Frac b) { return Compare(a, b) >= 0 ? a : b; }
Frac Min(Frac a, Frac b) { return Compare(a, b) <= 0 ? a : b; }

Frac Int(std::int64_t v) { return {v, 1}; }

bool Greater(std::int64_t z, Frac bound) { return Compare(Int(z), bound) > 0; }
bool AtMost(std::int64_t z, Frac bound) { return Compare(Int(z), bound) <= 0; }

std::vector<int> EntangledConditions(const SchemeParams& pr) {
  const std::int64_t s = pr.s();
  const std::int64_t t = pr.t();
  const std::int64_t z = pr.z();
  const std::int64_t ts = pr.ts();
  const bool generic = pr.generic();
  const Frac upsilon = MakeFrac(pr.upsilon_doubled(), 2);
  std::array<bool, 16> c{};

  c[0] = z > ts && pr.p() * s < t - 1 && t != 1;
  c[1] = ts - s < z && z <= ts && t - 1 > s && generic;
  c[2] = (t - 1) * (t - 1) < z && z < t * (t - 1) && s == t - 1 && generic;
  if (t > 3 && s != 1) {
    const Frac slack = Min(Int(0), Sub(Int(1), MakeFrac(2 * s - 5, t - 3)));
    c[3] = Greater(z, Sub(Int(ts - t), slack)) && z <= ts - s;
  }
  c[4] = s == 2 && t == 3 && z == 4;
  c[5] = t == 2 && s == 2 && (z == 1 || z == 2);
  if (t > 2 && t >= s && s != 1) {
    const Frac lower =
        Max(Sub(Int(s * t - t - s), MakeFrac(2, t - 2)), Int(ts - 2 * t));
    c[6] = Greater(z, lower) && z <= ts - t;
  }
  c[7] = t < s && s <= 2 * t && ts - s < z && z <= ts - t && generic;
  c[8] = t == 2 && 3 <= s && s <= 4 && 2 * (s - 2) < z && z <= 2 * (s - 1);
  c[9] = t > 2 && t < s && s <= 2 * t && s * t - 2 * t < z && z <= ts - s;
  c[10] = s > 2 * t && ts - 2 * t < z && z <= ts - t && generic;
  c[11] = 2 * t >= s && generic && Greater(z, upsilon) &&
          z <= std::min(s * t - 2 * t, 2 * ts - t * t + t - 2 * s + 1);
  c[12] = s > 2 * t && ts - s < z && z <= ts - 2 * t && t != 1 && t != 2;
  c[13] = t == 2 && 4 < s && s < z && z < 2 * s - 4;
  c[14] = ts - 2 * t - s + 2 < z && z < ts - s && 2 * t < s && generic;
  if (generic) {
    c[15] = Greater(z, Sub(Int(s * t - 2 * s - t), MakeFrac(1, t - 1))) &&
            AtMost(z, upsilon);
  }

  std::vector<int> fired;
  for (int i = 0; i < 16; ++i) {
    if (c[static_cast<std::size_t>(i)]) fired.push_back(i + 1);
  }
  return fired;
}

std::vector<int> SsmmConditions(const SchemeParams& pr) {
  const std::int64_t t = pr.t();
  const std::int64_t z = pr.z();
  const std::int64_t ts = pr.ts();
  std::vector<int> fired;
  if (t != 1) {
    const Frac bound =
        Max(Int(ts), Add(Int(ts - t), MakeFrac(pr.p() * ts, t - 1)));
    if (Greater(z, bound)) fired.push_back(1);
  }
  // Derived inside the ts-t < z <= ts case, which needs s, t != 1. At t = 2
  // the lower bound has a zero denominator and is read as +infinity.
  if (pr.generic() && t != 2) {
    const Frac lower = MakeFrac((t - 1) * (pr.s() * t - t), t - 2);
    if (Greater(z, lower) && z <= ts) fired.push_back(2);
  }
  return fired;
}

std::vector<int> GcsaConditions(const SchemeParams& pr) {
  const std::int64_t s = pr.s();
  const std::int64_t t = pr.t();
  const std::int64_t z = pr.z();
  const std::int64_t ts = pr.ts();
  std::vector<int> fired;
  if (z > ts && pr.p() * s < t - 1 && t != 1) fired.push_back(1);
  // Conditions 2 and 3 come from the psi2..psi5 cases, all with s, t != 1.
  if (pr.generic() && s < t && ts - t < z && z <= std::min(ts, t * (t - 1) - 1)) {
    fired.push_back(2);
  }
  if (pr.generic() && z <= ts - t) fired.push_back(3);
  if (s == 1 && t > z && t != 2) fired.push_back(4);
  return fired;
}

}  // namespace

std::string_view RegionLabel(PsiRegion region) {
  switch (region) {
    case PsiRegion::kPsi1: return "psi1";
    case PsiRegion::kPsi2: return "psi2";
    case PsiRegion::kPsi3: return "psi3";
    case PsiRegion::kPsi4: return "psi4";
    case PsiRegion::kPsi5: return "psi5";
    case PsiRegion::kPsi6: return "psi6";
  }
  return "?";
}

PsiRegion SelectRegion(const SchemeParams& pr) {
  const std::int64_t s = pr.s();
  const std::int64_t t = pr.t();
  const std::int64_t z = pr.z();
  const std::int64_t ts = pr.ts();
  const bool generic = pr.generic();
  const std::int64_t ups2 = pr.upsilon_doubled();

  std::vector<PsiRegion> hits;
  if (ts < z || t == 1) hits.push_back(PsiRegion::kPsi1);
  if (ts - t < z && z <= ts && generic) hits.push_back(PsiRegion::kPsi2);
  if (ts - 2 * t < z && z <= ts - t && generic) hits.push_back(PsiRegion::kPsi3);
  if (ups2 < 2 * z && z <= ts - 2 * t && generic) hits.push_back(PsiRegion::kPsi4);
  if (2 * z <= ups2 && generic) hits.push_back(PsiRegion::kPsi5);
  if (s == 1 && t >= z && t != 1) hits.push_back(PsiRegion::kPsi6);

  if (hits.size() != 1) {
    std::ostringstream msg;
    msg << hits.size() << " regions match (s=" << s << ",t=" << t << ",z=" << z
        << ")";
    throw Error(ErrorCode::kRegionDispatch, msg.str());
  }
  return hits.front();
}

PolyDotCount NPolyDot(const SchemeParams& pr) {
  const std::int64_t t = pr.t();
  const std::int64_t z = pr.z();
  const std::int64_t ts = pr.ts();
  const std::int64_t theta = pr.theta();
  const PsiRegion region = SelectRegion(pr);
  std::int64_t n = 0;
  switch (region) {
    case PsiRegion::kPsi1:
      n = (pr.p() + 2) * ts + theta * (t - 1) + 2 * z - 1;
      break;
    case PsiRegion::kPsi2:
      n = 2 * ts + theta * (t - 1) + 3 * z - 1;
      break;
    case PsiRegion::kPsi3:
      n = 2 * ts + theta * (t - 1) + 2 * z - 1;
      break;
    case PsiRegion::kPsi4:
      n = (t + 1) * ts + (t - 1) * (z + t - 1) + 2 * z - 1;
      break;
    case PsiRegion::kPsi5:
      n = theta * t + z;
      break;
    case PsiRegion::kPsi6:
      n = t * t + 2 * t + t * z - 1;
      break;
  }
  return {n, region};
}

std::int64_t NEntangled(const SchemeParams& pr) {
  const std::int64_t s = pr.s();
  const std::int64_t t = pr.t();
  const std::int64_t z = pr.z();
  if (z > pr.ts() - s) return 2 * s * t * t + 2 * z - 1;
  return s * t * t + 3 * s * t - 2 * s + t * (z - 1) + 1;
}

std::int64_t NSsmm(const SchemeParams& pr) {
  return (pr.t() + 1) * (pr.ts() + pr.z()) - 1;
}

std::int64_t NGcsa(const SchemeParams& pr) {
  return 2 * pr.s() * pr.t() * pr.t() + 2 * pr.z() - 1;
}

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kPolyDot: return "polydot";
    case Scheme::kEntangled: return "entangled";
    case Scheme::kSsmm: return "ssmm";
    case Scheme::kGcsa: return "gcsa";
  }
  return "?";
}

std::int64_t WorkerCountReport::count(Scheme scheme) const {
  switch (scheme) {
    case Scheme::kPolyDot: return n_polydot;
    case Scheme::kEntangled: return n_entangled;
    case Scheme::kSsmm: return n_ssmm;
    case Scheme::kGcsa: return n_gcsa;
  }
  return 0;
}

bool WorkerCountReport::PolyDotStrictlyBest() const {
  return n_polydot < n_entangled && n_polydot < n_ssmm && n_polydot < n_gcsa;
}

WorkerCountReport BestScheme(const SchemeParams& params) {
  const PolyDotCount poly = NPolyDot(params);
  WorkerCountReport report{params,        poly.workers,
                           NEntangled(params), NSsmm(params),
                           NGcsa(params),  poly.region,
                           Scheme::kEntangled};
  constexpr std::array kTieOrder = {Scheme::kEntangled, Scheme::kSsmm,
                                    Scheme::kGcsa, Scheme::kPolyDot};
  for (Scheme candidate : kTieOrder) {
    if (report.count(candidate) < report.count(report.winner)) {
      report.winner = candidate;
    }
  }
  return report;
}

std::string_view BaselineName(Baseline baseline) {
  switch (baseline) {
    case Baseline::kEntangled: return "entangled";
    case Baseline::kSsmm: return "ssmm";
    case Baseline::kGcsa: return "gcsa";
  }
  return "?";
}

std::int64_t BaselineCount(Baseline baseline, const SchemeParams& params) {
  switch (baseline) {
    case Baseline::kEntangled: return NEntangled(params);
    case Baseline::kSsmm: return NSsmm(params);
    case Baseline::kGcsa: return NGcsa(params);
  }
  return 0;
}

std::vector<int> LemmaConditions(Baseline baseline, const SchemeParams& params) {
  switch (baseline) {
    case Baseline::kEntangled: return EntangledConditions(params);
    case Baseline::kSsmm: return SsmmConditions(params);
    case Baseline::kGcsa: return GcsaConditions(params);
  }
  return {};
}

bool LemmaRegion(Baseline baseline, const SchemeParams& params) {
  return !LemmaConditions(baseline, params).empty();
}

}  // namespace polydot
