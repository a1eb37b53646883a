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

#include "polydot/protocol.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "polydot/counts.h"
#include "polydot/error.h"
#include "polydot/powersets.h"
#include "polydot/rng.h"

namespace polydot {
namespace {

std::vector<std::size_t> DispatchOrder(const RunOptions& options,
                                       std::size_t workers) {
  if (options.worker_order.empty()) {
    std::vector<std::size_t> order(workers);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<std::size_t> sorted = options.worker_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t n = 0; n < sorted.size(); ++n) {
    if (sorted[n] != n || sorted.size() != workers) {
      throw Error(ErrorCode::kInvalidConfig,
                  "worker order is not a permutation of the workers");
    }
  }
  return options.worker_order;
}

// Runs fn(n) for every n in `order`. Each call writes only to slot n of its
// outputs, so results do not depend on scheduling.
void ForEachWorker(const std::vector<std::size_t>& order, unsigned threads,
                   const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || order.size() <= 1) {
    for (std::size_t n : order) fn(n);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned count =
      static_cast<unsigned>(std::min<std::size_t>(threads, order.size()));
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::mutex failure_mu;
  for (unsigned k = 0; k < count; ++k) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < order.size(); i = next++) {
        try {
          fn(order[i]);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

bool LeadingVandermondeInvertible(const PrimeField& f,
                                  const std::vector<FieldElement>& points,
                                  const ExponentSet& support) {
  if (points.size() < support.size()) return false;
  std::span<const FieldElement> lead(points.data(), support.size());
  return Rank(f, GeneralizedVandermonde(f, lead, support)) == support.size();
}

// Mask exponents grouped by equal coefficient value. Independent uniform masks
// give singleton groups; a reused mask merges its exponents.
std::vector<std::vector<Exponent>> MaskGroups(const SharePolynomial& poly) {
  std::vector<std::vector<Exponent>> groups;
  std::vector<const FieldMatrix*> reps;
  for (const auto& [e, m] : poly.secret_terms()) {
    auto it = std::find_if(reps.begin(), reps.end(),
                           [&](const FieldMatrix* r) { return *r == m; });
    if (it == reps.end()) {
      reps.push_back(&m);
      groups.push_back({e});
    } else {
      groups[static_cast<std::size_t>(it - reps.begin())].push_back(e);
    }
  }
  return groups;
}

bool MaskFullRank(const PrimeField& f, const EvaluationPoints& alphas,
                  std::span<const std::size_t> workers,
                  const std::vector<std::vector<Exponent>>& groups) {
  FieldMatrix mask(workers.size(), groups.size());
  for (std::size_t a = 0; a < workers.size(); ++a) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      FieldElement sum{0};
      for (Exponent e : groups[g]) {
        sum = f.Add(sum, f.Pow(alphas[workers[a]], e));
      }
      mask(a, g) = sum;
    }
  }
  return Rank(f, mask) == workers.size();
}

}  // namespace

ProtocolConfig ProtocolConfig::Create(const SchemeParams& params,
                                      std::size_t m, std::uint64_t modulus,
                                      std::uint64_t seed) {
  PrimeField field(modulus);
  if (m == 0) throw Error(ErrorCode::kInvalidConfig, "m must be >= 1");
  const auto s = static_cast<std::size_t>(params.s());
  const auto t = static_cast<std::size_t>(params.t());
  if (m % s != 0 || m % t != 0) {
    throw Error(ErrorCode::kIndivisibleDimensions,
                "s=" + std::to_string(s) + " and t=" + std::to_string(t) +
                    " must both divide m=" + std::to_string(m));
  }
  const auto workers = static_cast<std::size_t>(NPolyDot(params).workers);
  if (2 * static_cast<std::size_t>(params.z()) >= workers) {
    throw Error(ErrorCode::kInvalidConfig, "z must be below N/2");
  }
  if (workers + 1 >= modulus) {
    throw Error(ErrorCode::kInvalidConfig,
                "modulus too small for N=" + std::to_string(workers));
  }
  return ProtocolConfig(params, m, field, seed, workers);
}

std::size_t ProtocolConfig::master_evaluations() const {
  return static_cast<std::size_t>(params_.t() * params_.t() + params_.z());
}

ExponentSet MasterSupport(const SchemeParams& params) {
  return ExponentSet::Range(0, static_cast<std::size_t>(
                                   params.t() * params.t() + params.z()));
}

EvaluationPoints SetupPoints(const PrimeField& f, const SchemeParams& params,
                             std::size_t workers, std::uint64_t seed) {
  const ExponentSet support_h = SupportH(params);
  const ExponentSet master = MasterSupport(params);
  for (int attempt = 0; attempt < kMaxSetupAttempts; ++attempt) {
    CounterRng rng(seed, "P", static_cast<std::uint64_t>(attempt));
    std::vector<FieldElement> points;
    std::set<std::uint64_t> seen;
    // Give up on this attempt once duplicates dominate (tiny fields).
    for (std::size_t draws = 0; points.size() < workers && draws < 4 * workers + 16;
         ++draws) {
      FieldElement x = rng.UniformNonzero(f);
      if (seen.insert(x.value).second) points.push_back(x);
    }
    if (points.size() < workers) continue;
    if (!LeadingVandermondeInvertible(f, points, support_h)) continue;
    if (!LeadingVandermondeInvertible(f, points, master)) continue;
    return EvaluationPoints(std::move(points));
  }
  throw Error(ErrorCode::kSetupExhausted,
              "no usable evaluation points after " +
                  std::to_string(kMaxSetupAttempts) + " draws");
}

EvaluationPoints SetupPoints(const ProtocolConfig& config) {
  return SetupPoints(config.field(), config.params(), config.workers(),
                     config.seed());
}

std::vector<std::vector<FieldElement>> ExtractionRows(
    const PrimeField& f, const EvaluationPoints& alphas,
    const SchemeParams& params) {
  const ExponentSet support = SupportH(params);
  if (alphas.size() < support.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "need " + std::to_string(support.size()) + " points, have " +
                    std::to_string(alphas.size()));
  }
  const EvaluationPoints lead = alphas.Prefix(support.size());
  const FieldMatrix v_inv =
      Inverse(f, GeneralizedVandermonde(f, lead.values(), support));
  const auto t = params.t();
  std::vector<std::vector<FieldElement>> rows(
      static_cast<std::size_t>(t * t),
      std::vector<FieldElement>(alphas.size()));
  for (std::int64_t l = 0; l < t; ++l) {
    for (std::int64_t i = 0; i < t; ++i) {
      const Exponent target = ImportantExponent(params, i, l);
      const auto k = support.IndexOf(target);
      if (!k) {
        throw Error(ErrorCode::kTargetNotInSupport,
                    "important power " + std::to_string(target));
      }
      auto& row = rows[static_cast<std::size_t>(i + t * l)];
      for (std::size_t n = 0; n < lead.size(); ++n) row[n] = v_inv(*k, n);
    }
  }
  return rows;
}

FieldMatrix WorkerComputeH(const PrimeField& f, const FieldMatrix& fa_eval,
                           const FieldMatrix& fb_eval) {
  if (fa_eval.cols() != fb_eval.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "share evaluations " + std::to_string(fa_eval.rows()) + "x" +
                    std::to_string(fa_eval.cols()) + " and " +
                    std::to_string(fb_eval.rows()) + "x" +
                    std::to_string(fb_eval.cols()));
  }
  return MatMul(f, fa_eval, fb_eval);
}

SharePolynomial WorkerBuildG(std::size_t n, const FieldMatrix& h_eval,
                             std::span<const FieldElement> extraction,
                             const ProtocolConfig& config) {
  const PrimeField& f = config.field();
  const auto t2 = static_cast<std::size_t>(config.params().t() *
                                           config.params().t());
  const auto z = static_cast<std::size_t>(config.params().z());
  if (extraction.size() != t2) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected t^2=" + std::to_string(t2) + " extraction scalars");
  }
  SharePolynomial::Terms coded;
  for (std::size_t k = 0; k < t2; ++k) {
    coded.emplace(k, MatScale(f, extraction[k], h_eval));
  }
  CounterRng rng(config.seed(), "W", n);
  SharePolynomial::Terms secret;
  for (std::size_t w = 0; w < z; ++w) {
    secret.emplace(t2 + w, rng.UniformMatrix(f, h_eval.rows(), h_eval.cols()));
  }
  return SharePolynomial(h_eval.rows(), h_eval.cols(), std::move(coded),
                         std::move(secret));
}

std::vector<FieldMatrix> InterpolateMatrices(const PrimeField& f,
                                             const EvaluationPoints& points,
                                             const ExponentSet& support,
                                             std::span<const FieldMatrix> values) {
  const std::size_t k = support.size();
  if (points.size() < k || values.size() < k) {
    throw Error(ErrorCode::kLengthMismatch,
                "interpolation on " + std::to_string(k) + " exponents needs " +
                    std::to_string(k) + " points and values");
  }
  const EvaluationPoints lead = points.Prefix(k);
  const FieldMatrix v_inv =
      Inverse(f, GeneralizedVandermonde(f, lead.values(), support));
  std::vector<FieldMatrix> coeffs;
  coeffs.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    FieldMatrix acc(values[0].rows(), values[0].cols());
    for (std::size_t n = 0; n < k; ++n) MatAxpy(f, v_inv(c, n), values[n], acc);
    coeffs.push_back(std::move(acc));
  }
  return coeffs;
}

Transcript RunProtocol(const FieldMatrix& a, const FieldMatrix& b,
                       const ProtocolConfig& config, const RunOptions& options) {
  const std::size_t m = config.m();
  if (a.rows() != m || a.cols() != m || b.rows() != m || b.cols() != m) {
    throw Error(ErrorCode::kShapeMismatch,
                "inputs must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  const PrimeField& f = config.field();
  const SchemeParams& params = config.params();
  const auto s = static_cast<std::size_t>(params.s());
  const auto t = static_cast<std::size_t>(params.t());
  const std::size_t workers = config.workers();
  const std::vector<std::size_t> order = DispatchOrder(options, workers);

  Transcript tr;
  tr.alphas = SetupPoints(config);

  // Sources.
  ShareOptions share_options{.reuse_first_mask = options.corrupt_masks};
  tr.fa = BuildFA(f, TransposeBlockwise(Partition(a, s, t)), params,
                  config.seed(), share_options);
  tr.fb = BuildFB(f, Partition(b, s, t), params, config.seed(), share_options);
  tr.extraction = ExtractionRows(f, tr.alphas, params);

  // Workers: shares, H, G and the outgoing G evaluations.
  tr.fa_evals.resize(workers);
  tr.fb_evals.resize(workers);
  tr.h_evals.resize(workers);
  tr.g_polys.resize(workers);
  tr.g_messages.assign(workers, std::vector<FieldMatrix>(workers));
  ForEachWorker(order, options.threads, [&](std::size_t n) {
    tr.fa_evals[n] = tr.fa.Evaluate(f, tr.alphas[n]);
    tr.fb_evals[n] = tr.fb.Evaluate(f, tr.alphas[n]);
    tr.h_evals[n] = WorkerComputeH(f, tr.fa_evals[n], tr.fb_evals[n]);
    std::vector<FieldElement> r(t * t);
    for (std::size_t k = 0; k < t * t; ++k) r[k] = tr.extraction[k][n];
    tr.g_polys[n] = WorkerBuildG(n, tr.h_evals[n], r, config);
    for (std::size_t dest = 0; dest < workers; ++dest) {
      tr.g_messages[n][dest] = tr.g_polys[n].Evaluate(f, tr.alphas[dest]);
    }
  });

  // Workers: I(alpha_n') = sum_n G_n(alpha_n').
  tr.i_evals.resize(workers);
  ForEachWorker(order, options.threads, [&](std::size_t dest) {
    FieldMatrix acc(m / t, m / t);
    for (std::size_t n = 0; n < workers; ++n) {
      acc = MatAdd(f, acc, tr.g_messages[n][dest]);
    }
    tr.i_evals[dest] = std::move(acc);
  });

  // Master.
  tr.master_evals = config.master_evaluations();
  const std::vector<FieldMatrix> coeffs = InterpolateMatrices(
      f, tr.alphas, MasterSupport(params),
      std::span<const FieldMatrix>(tr.i_evals.data(), tr.master_evals));
  BlockMatrix y(t, t, m / t, m / t);
  for (std::size_t l = 0; l < t; ++l) {
    for (std::size_t i = 0; i < t; ++i) y.set_block(i, l, coeffs[i + t * l]);
  }
  tr.y = Assemble(y);
  return tr;
}

std::size_t AuditReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      subsets.begin(), subsets.end(),
      [](const SubsetAudit& a) { return a.passed; }));
}

SubsetAudit AuditSubset(const Transcript& transcript,
                        const ProtocolConfig& config,
                        std::span<const std::size_t> workers) {
  const PrimeField& f = config.field();
  SubsetAudit result;
  result.workers.assign(workers.begin(), workers.end());
  // Every G_n usually shares one grouping; check each distinct grouping once.
  std::map<std::vector<std::vector<Exponent>>, bool> seen;
  auto check = [&](const SharePolynomial& poly, std::string label) {
    auto groups = MaskGroups(poly);
    auto it = seen.find(groups);
    if (it == seen.end()) {
      bool ok = MaskFullRank(f, transcript.alphas, workers, groups);
      it = seen.emplace(std::move(groups), ok).first;
    }
    if (!it->second && result.passed) {
      result.passed = false;
      result.failing_matrix = std::move(label);
    }
  };
  check(transcript.fa, "F_A");
  check(transcript.fb, "F_B");
  for (std::size_t n = 0; n < transcript.g_polys.size(); ++n) {
    check(transcript.g_polys[n], "G_" + std::to_string(n));
  }
  return result;
}

AuditReport AuditPrivacy(const Transcript& transcript,
                         const ProtocolConfig& config, std::size_t samples) {
  const std::size_t workers = transcript.alphas.size();
  const auto z = static_cast<std::size_t>(config.params().z());
  CounterRng rng(config.seed(), "S");
  AuditReport report;
  std::vector<std::size_t> pool(workers);
  for (std::size_t k = 0; k < samples; ++k) {
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates for a uniform z-subset.
    for (std::size_t i = 0; i < z; ++i) {
      std::size_t j = i + rng.UniformBelow(workers - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(z));
    std::sort(subset.begin(), subset.end());
    report.subsets.push_back(AuditSubset(transcript, config, subset));
  }
  return report;
}

}  // namespace polydot
