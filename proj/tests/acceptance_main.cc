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

// Acceptance suite: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the listed numbers (1-10). Exits nonzero if
// any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.h"
#include "oracles.h"
#include "polydot/block_matrix.h"
#include "polydot/counts.h"
#include "polydot/powersets.h"
#include "polydot/protocol.h"
#include "polydot/rng.h"
#include "polydot/scheme_params.h"
#include "polydot/shares.h"

namespace polydot {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

SchemeParams P(std::int64_t s, std::int64_t t, std::int64_t z) {
  return SchemeParams::Create(s, t, z);
}

std::string Triple(const SchemeParams& p) {
  std::ostringstream os;
  os << "(" << p.s() << "," << p.t() << "," << p.z() << ")";
  return os.str();
}

// 1 <= s, t <= 8, s*t <= 48, 1 <= z <= 2ts + 8.
std::vector<SchemeParams> Grid() {
  std::vector<SchemeParams> grid;
  for (std::int64_t s = 1; s <= 8; ++s) {
    for (std::int64_t t = 1; t <= 8; ++t) {
      if (s * t > 48) continue;
      for (std::int64_t z = 1; z <= 2 * t * s + 8; ++z) grid.push_back(P(s, t, z));
    }
  }
  return grid;
}

oracle::Matrix ToRows(const FieldMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).value;
  }
  return out;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Exact equality of the closed-form count with the brute-force support.
Outcome OracleEquivalence() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (const SchemeParams& p : Grid()) {
    ++checked;
    const auto support = oracle::ProductSupport(
        oracle::SharePowers(p.s(), p.t(), p.z()));
    const std::size_t lib_support = SupportH(p).size();
    const std::int64_t n = NPolyDot(p).workers;
    if (lib_support != support.size() ||
        n != static_cast<std::int64_t>(support.size())) {
      if (bad++ == 0) {
        first = Triple(p) + " support=" + std::to_string(support.size()) +
                " n_polydot=" + std::to_string(n);
      }
    }
  }
  Outcome o{bad == 0, "triples=" + std::to_string(checked) +
                          " mismatches=" + std::to_string(bad)};
  if (bad) o.detail += " first=" + first;
  return o;
}

Outcome ConditionsHold() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (const SchemeParams& p : Grid()) {
    ++checked;
    if (!CheckConditions(p).ok && bad++ == 0) first = Triple(p);
  }
  Outcome o{bad == 0, "triples=" + std::to_string(checked) +
                          " failures=" + std::to_string(bad)};
  if (bad) o.detail += " first=" + first;
  return o;
}

Outcome SingleColumnExample() {
  const SchemeParams p = P(2, 1, 2);
  const ProtocolConfig config = ProtocolConfig::Create(p, 2);
  const PrimeField& f = config.field();
  CounterRng rng(1, "acceptance");
  const FieldMatrix a = rng.UniformMatrix(f, 2, 2), b = rng.UniformMatrix(f, 2, 2);
  const Transcript tr = RunProtocol(a, b, config);
  const bool ok = config.workers() == 7 && tr.master_evals == 3 &&
                  tr.fa.support() == ExponentSet{0, 1, 2, 3} &&
                  tr.fb.support() == ExponentSet{0, 1, 2, 3} &&
                  tr.fa.secret_support() == ExponentSet{2, 3} &&
                  tr.fb.secret_support() == ExponentSet{2, 3} &&
                  SupportH(p).size() == 7 &&
                  tr.y == MatMul(f, Transpose(a), b);
  std::ostringstream os;
  os << "N=" << config.workers() << " master_evals=" << tr.master_evals
     << " F_A=" << tr.fa.support() << " F_B=" << tr.fb.support()
     << " secret=" << tr.fa.secret_support();
  return {ok, os.str()};
}

Outcome CollidingWorkersSweep() {
  std::size_t wrong = 0;
  std::string first;
  for (std::int64_t z = 1; z <= 300; ++z) {
    const WorkerCountReport r = BestScheme(P(4, 15, z));
    bool ok;
    if (z <= 48) {
      ok = r.winner == Scheme::kSsmm;
    } else if (z <= 180) {
      ok = r.winner == Scheme::kPolyDot;
    } else {
      ok = r.winner == Scheme::kEntangled && r.n_entangled == r.n_gcsa;
    }
    if (!ok && wrong++ == 0) {
      first = "z=" + std::to_string(z) + " winner=" + std::string(SchemeName(r.winner));
    }
  }
  const std::int64_t n100 = NPolyDot(P(4, 15, 100)).workers;
  const std::int64_t ssmm48 = NSsmm(P(4, 15, 48));
  Outcome o{wrong == 0 && n100 == 1909 && ssmm48 == 1727,
            "winner_mismatches=" + std::to_string(wrong) +
                " n_polydot(4,15,100)=" + std::to_string(n100) +
                " n_ssmm(4,15,48)=" + std::to_string(ssmm48)};
  if (wrong) o.detail += " first=" + first;
  return o;
}

Outcome ShapeSweep() {
  std::vector<std::string> strict;
  for (std::int64_t s = 1; s <= 36; ++s) {
    if (36 % s) continue;
    if (BestScheme(P(s, 36 / s, 42)).PolyDotStrictlyBest()) {
      strict.push_back("(" + std::to_string(s) + "," + std::to_string(36 / s) + ")");
    }
  }
  std::string joined;
  for (const auto& x : strict) joined += x;
  return {joined == "(2,18)(3,12)(4,9)", "polydot_strictly_best=" + joined};
}

Outcome EndToEnd() {
  CounterRng pick(2026, "acceptance-e2e");
  const std::size_t dims[] = {4, 6, 8, 12, 24};
  std::size_t runs = 0, wrong = 0, max_n = 0;
  std::string first;
  while (runs < 50) {
    const std::size_t m = dims[pick.UniformBelow(5)];
    std::vector<std::pair<std::int64_t, std::int64_t>> shapes;
    for (std::size_t s = 1; s <= m; ++s) {
      for (std::size_t t = 1; t <= m; ++t) {
        // Same (s, t) range as the count grid.
        if (m % s == 0 && m % t == 0 && s <= 8 && t <= 8 && s * t <= 48) {
          shapes.emplace_back(static_cast<std::int64_t>(s), static_cast<std::int64_t>(t));
        }
      }
    }
    const auto [s, t] = shapes[pick.UniformBelow(shapes.size())];
    const auto z = 1 + static_cast<std::int64_t>(pick.UniformBelow(static_cast<std::uint64_t>(s * t + 3)));
    const SchemeParams p = P(s, t, z);
    const ProtocolConfig config = ProtocolConfig::Create(
        p, m, PrimeField::kDefaultModulus, 1000 + runs);
    CounterRng rng(config.seed(), "acceptance-inputs");
    const FieldMatrix a = rng.UniformMatrix(config.field(), m, m);
    const FieldMatrix b = rng.UniformMatrix(config.field(), m, m);
    RunOptions options;
    options.threads = 4;
    const Transcript tr = RunProtocol(a, b, config, options);
    const bool ok = ToRows(tr.y) == oracle::TransposeProduct(
                                        config.field().modulus(), ToRows(a), ToRows(b)) &&
                    tr.master_evals == static_cast<std::size_t>(t * t + z);
    max_n = std::max(max_n, config.workers());
    if (!ok && wrong++ == 0) first = Triple(p) + " m=" + std::to_string(m);
    ++runs;
  }
  Outcome o{wrong == 0, "runs=" + std::to_string(runs) + " wrong=" +
                            std::to_string(wrong) + " max_N=" + std::to_string(max_n)};
  if (wrong) o.detail += " first=" + first;
  return o;
}

Outcome Privacy() {
  const std::tuple<std::int64_t, std::int64_t, std::int64_t, std::size_t> cases[] = {
      {2, 2, 2, 4}, {2, 2, 5, 4}, {3, 2, 3, 6}, {2, 3, 4, 6}, {4, 2, 7, 4},
      {1, 3, 2, 3}, {3, 1, 4, 3}, {2, 4, 9, 8}, {4, 4, 6, 8}, {3, 3, 12, 6}};
  std::size_t subsets = 0, failed = 0;
  for (const auto& [s, t, z, m] : cases) {
    const ProtocolConfig config =
        ProtocolConfig::Create(P(s, t, z), m, PrimeField::kDefaultModulus,
                               static_cast<std::uint64_t>(s * 100 + t * 10 + z));
    CounterRng rng(config.seed(), "acceptance-inputs");
    const FieldMatrix a = rng.UniformMatrix(config.field(), m, m);
    const FieldMatrix b = rng.UniformMatrix(config.field(), m, m);
    const AuditReport report = AuditPrivacy(RunProtocol(a, b, config), config, 200);
    subsets += report.subsets.size();
    failed += report.failed();
  }
  // Mutation: one mask reused.
  const ProtocolConfig config = ProtocolConfig::Create(P(2, 2, 3), 4);
  RunOptions corrupt;
  corrupt.corrupt_masks = true;
  const FieldMatrix id = FieldMatrix::Identity(4);
  const AuditReport bad = AuditPrivacy(RunProtocol(id, id, config, corrupt), config, 200);
  return {failed == 0 && subsets >= 2000 && !bad.ok(),
          "runs=10 subsets=" + std::to_string(subsets) +
              " failed=" + std::to_string(failed) +
              " corrupted_detected=" + (bad.ok() ? "no" : "yes")};
}

Outcome Identities() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (const SchemeParams& p : Grid()) {
    bool ok = true;
    if (p.t() == 1 || (p.s() == 1 && p.z() <= p.t())) {
      ++checked;
      ok = ok && NPolyDot(p).workers == NEntangled(p);
    }
    if (p.z() > p.ts() - p.s()) {
      ++checked;
      ok = ok && NGcsa(p) == NEntangled(p);
    }
    if (!ok && bad++ == 0) first = Triple(p);
  }
  Outcome o{bad == 0, "identities=" + std::to_string(checked) +
                          " violations=" + std::to_string(bad)};
  if (bad) o.detail += " first=" + first;
  return o;
}

Outcome LemmaSoundness() {
  std::size_t violations[3] = {0, 0, 0};
  const Baseline baselines[3] = {Baseline::kEntangled, Baseline::kSsmm, Baseline::kGcsa};
  std::vector<SchemeParams> entangled_findings;
  for (const SchemeParams& p : Grid()) {
    for (int k = 0; k < 3; ++k) {
      if (LemmaRegion(baselines[k], p) &&
          NPolyDot(p).workers >= BaselineCount(baselines[k], p)) {
        ++violations[k];
        if (k == 0) entangled_findings.push_back(p);
      }
    }
  }
  std::ostringstream out, err;
  cli::RunCli({"verify", "--s", "8", "--t", "8", "--zslack", "8"}, out, err);
  std::size_t echoed = 0;
  for (const SchemeParams& p : entangled_findings) {
    std::ostringstream line;
    line << "region-violation baseline=entangled s=" << p.s() << " t=" << p.t()
         << " z=" << p.z() << " conditions=";
    if (out.str().find(line.str()) != std::string::npos) ++echoed;
  }
  std::string listed;
  for (const SchemeParams& p : entangled_findings) listed += Triple(p);
  return {violations[1] == 0 && violations[2] == 0 && echoed == entangled_findings.size(),
          "ssmm_violations=" + std::to_string(violations[1]) +
              " gcsa_violations=" + std::to_string(violations[2]) +
              " entangled_findings=" + std::to_string(violations[0]) + " " + listed +
              " reported_by_verify=" + std::to_string(echoed)};
}

Outcome Determinism() {
  const fs::path dir = fs::temp_directory_path() / "polydot_acceptance";
  fs::create_directories(dir);
  PrimeField f;
  CounterRng rng(9, "acceptance-files");
  for (const char* name : {"a.txt", "b.txt"}) {
    std::ofstream file(dir / name, std::ios::binary);
    WriteMatrixFile(file, MatrixFile{f.modulus(), rng.UniformMatrix(f, 6, 6)});
  }
  auto call = [&](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::RunCli(args, out, err);
    return std::make_tuple(code, out.str());
  };
  const std::string a = (dir / "a.txt").string(), b = (dir / "b.txt").string();
  auto run = [&](const std::string& out_name) {
    return call({"run", a, b, "--s", "3", "--t", "2", "--z", "3", "--seed", "4",
                 "--out", (dir / out_name).string()});
  };
  auto sweep = [&](const std::string& out_name) {
    return call({"sweep", "--s", "4", "--t", "15", "--zmin", "1", "--zmax", "300",
                 "--out", (dir / out_name).string()});
  };
  const auto r1 = run("y1.txt"), r2 = run("y2.txt");
  const auto s1 = sweep("s1.csv"), s2 = sweep("s2.csv");
  const bool run_same = std::get<0>(r1) == 0 && r1 == r2 &&
                        Slurp(dir / "y1.txt") == Slurp(dir / "y2.txt");
  const bool sweep_same = std::get<0>(s1) == 0 && s1 == s2 &&
                          Slurp(dir / "s1.csv") == Slurp(dir / "s2.csv");
  fs::remove_all(dir);
  return {run_same && sweep_same, std::string("run_identical=") + (run_same ? "yes" : "no") +
                                      " sweep_identical=" + (sweep_same ? "yes" : "no")};
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;  // 0: no runtime requirement
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace polydot

int main(int argc, char** argv) {
  using namespace polydot;
  const std::vector<Criterion> criteria = {
      {1, "count equals product support over the grid (exact)", 30, OracleEquivalence},
      {2, "secret supports avoid important powers over the grid (exact)", 0, ConditionsHold},
      {3, "single-column example: 7 workers, 3 master evaluations, supports", 0,
       SingleColumnExample},
      {4, "workers vs colluders sweep s=4 t=15 winners and spot values", 1,
       CollidingWorkersSweep},
      {5, "workers vs shape sweep z=42 st=36 strict PolyDot region", 1, ShapeSweep},
      {6, "50 randomized runs reconstruct A^T B exactly", 60, EndToEnd},
      {7, "privacy audit: 10 runs x 200 subsets pass, reused mask detected", 0, Privacy},
      {8, "baseline equivalence identities (exact)", 0, Identities},
      {9, "lemma region soundness", 0, LemmaSoundness},
      {10, "run and sweep are byte-identical across invocations", 0, Determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string budget;
    if (c.budget_seconds > 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " budget=%.0fs", c.budget_seconds);
      budget = buf;
      if (secs >= c.budget_seconds) o.pass = false;
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << (c.number < 10 ? "0" : "")
              << c.number << " " << c.name << " | " << o.detail << " | time=" << timing
              << budget << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
