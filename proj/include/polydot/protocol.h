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

// In-process simulation of the secure multiplication protocol: two sources,
// N workers and a master, plus a rank-based privacy auditor.

#ifndef POLYDOT_PROTOCOL_H_
#define POLYDOT_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polydot/block_matrix.h"
#include "polydot/exponent_set.h"
#include "polydot/field.h"
#include "polydot/scheme_params.h"
#include "polydot/shares.h"

namespace polydot {

inline constexpr int kMaxSetupAttempts = 64;

class ProtocolConfig {
 public:
  // Throws kIndivisibleDimensions unless s | m and t | m, and kInvalidConfig
  // unless m >= 1, z < N/2 and N + 1 < q. N is the PolyDot worker count.
  static ProtocolConfig Create(const SchemeParams& params, std::size_t m,
                               std::uint64_t modulus = PrimeField::kDefaultModulus,
                               std::uint64_t seed = 1);

  const SchemeParams& params() const { return params_; }
  std::size_t m() const { return m_; }
  const PrimeField& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t workers() const { return workers_; }
  // t^2 + z: the degree of I(x) plus one.
  std::size_t master_evaluations() const;

 private:
  ProtocolConfig(SchemeParams params, std::size_t m, PrimeField field,
                 std::uint64_t seed, std::size_t workers)
      : params_(params), m_(m), field_(field), seed_(seed), workers_(workers) {}

  SchemeParams params_;
  std::size_t m_;
  PrimeField field_;
  std::uint64_t seed_;
  std::size_t workers_;
};

// {0, ..., t^2 + z - 1}: support of every G_n and of I(x).
ExponentSet MasterSupport(const SchemeParams& params);

// Draws `workers` distinct nonzero points from stream (seed, "P", attempt)
// until the generalized Vandermonde matrices on SupportH(params) and on
// MasterSupport(params) are both invertible on the leading points.
// Throws kSetupExhausted after kMaxSetupAttempts draws.
EvaluationPoints SetupPoints(const PrimeField& f, const SchemeParams& params,
                             std::size_t workers, std::uint64_t seed);
EvaluationPoints SetupPoints(const ProtocolConfig& config);

// rows[i + t*l][n] = r_n^{(i,l)}. Computed from the first |support_H| points;
// any further workers get zero weight.
std::vector<std::vector<FieldElement>> ExtractionRows(
    const PrimeField& f, const EvaluationPoints& alphas,
    const SchemeParams& params);

// Throws kShapeMismatch.
FieldMatrix WorkerComputeH(const PrimeField& f, const FieldMatrix& fa_eval,
                           const FieldMatrix& fb_eval);

// G_n(x) = sum_{i,l} r_n^{(i,l)} H(alpha_n) x^{i+tl} + sum_w R_w x^{t^2+w},
// with R_w drawn from stream (seed, "W", n). `extraction` holds the t^2
// scalars r_n^{(i,l)} indexed by i + t*l. Throws kLengthMismatch.
SharePolynomial WorkerBuildG(std::size_t n, const FieldMatrix& h_eval,
                             std::span<const FieldElement> extraction,
                             const ProtocolConfig& config);

// Matrix-valued interpolation: coefficient k of the result is the matrix
// coefficient of x^support[k]. Uses the first |support| points and values.
std::vector<FieldMatrix> InterpolateMatrices(const PrimeField& f,
                                             const EvaluationPoints& points,
                                             const ExponentSet& support,
                                             std::span<const FieldMatrix> values);

struct Transcript {
  EvaluationPoints alphas;
  SharePolynomial fa;
  SharePolynomial fb;
  std::vector<FieldMatrix> fa_evals;
  std::vector<FieldMatrix> fb_evals;
  std::vector<FieldMatrix> h_evals;
  std::vector<std::vector<FieldElement>> extraction;
  std::vector<SharePolynomial> g_polys;
  // g_messages[n][n'] is what worker n sent to worker n'.
  std::vector<std::vector<FieldMatrix>> g_messages;
  std::vector<FieldMatrix> i_evals;
  std::size_t master_evals = 0;
  FieldMatrix y;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

struct RunOptions {
  // Order in which worker-phase computations are dispatched; empty means
  // ascending. Must be a permutation of [0, N) otherwise.
  std::vector<std::size_t> worker_order;
  unsigned threads = 1;
  // Test hook forwarded to both sources' share builders.
  bool corrupt_masks = false;
};

// Computes Y = A^T B. Throws kShapeMismatch on inputs that are not m x m.
Transcript RunProtocol(const FieldMatrix& a, const FieldMatrix& b,
                       const ProtocolConfig& config,
                       const RunOptions& options = {});

struct SubsetAudit {
  std::vector<std::size_t> workers;
  bool passed = true;
  // "F_A", "F_B" or "G_<n>" for the first matrix found rank deficient.
  std::string failing_matrix;
};

struct AuditReport {
  std::vector<SubsetAudit> subsets;

  std::size_t passed() const;
  std::size_t failed() const { return subsets.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

// For each sampled z-subset S, checks that the masks of F_A, F_B and every
// G_n look uniform to S: with the mask coefficients grouped by equal value,
// the matrix [sum_{e in group} alpha_n^e] over n in S must have rank z.
// Subsets come from stream (seed, "S").
AuditReport AuditPrivacy(const Transcript& transcript,
                         const ProtocolConfig& config, std::size_t samples);

// Same check on an explicit subset.
SubsetAudit AuditSubset(const Transcript& transcript,
                        const ProtocolConfig& config,
                        std::span<const std::size_t> workers);

}  // namespace polydot

#endif  // POLYDOT_PROTOCOL_H_
