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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polydot/block_matrix.h"
#include "polydot/counts.h"
#include "polydot/error.h"
#include "polydot/field.h"
#include "polydot/powersets.h"
#include "polydot/protocol.h"
#include "polydot/rng.h"
#include "polydot/scheme_params.h"

namespace polydot::cli {
namespace {

constexpr char kCsvHeader[] =
    "s,t,z,n_polydot,region,n_entangled,n_ssmm,n_gcsa,winner\n";

// Bad user input that CLI11 cannot catch on its own.
struct UsageError {
  std::string message;
};

struct UnwritableError {
  std::string path;
};

std::string Triple(const SchemeParams& p) {
  std::ostringstream os;
  os << "s=" << p.s() << " t=" << p.t() << " z=" << p.z();
  return os.str();
}

std::string CsvRow(const WorkerCountReport& r) {
  std::ostringstream os;
  os << r.params.s() << ',' << r.params.t() << ',' << r.params.z() << ','
     << r.n_polydot << ',' << RegionLabel(r.region) << ',' << r.n_entangled
     << ',' << r.n_ssmm << ',' << r.n_gcsa << ',' << SchemeName(r.winner)
     << '\n';
  return os.str();
}

// Writes to `path`, or to `out` when path is empty or "-".
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UnwritableError{path};
  file << text;
  file.flush();
  if (!file) throw UnwritableError{path};
}

// Flag wins over POLYDOT_SEED, which wins over 1.
std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("POLYDOT_SEED");
  if (env == nullptr || *env == '\0') return 1;
  std::uint64_t seed = 0;
  std::istringstream in(env);
  if (!(in >> seed) || !in.eof()) {
    throw UsageError{std::string("POLYDOT_SEED is not an unsigned integer: ") +
                     env};
  }
  return seed;
}

MatrixFile LoadMatrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot open " + path};
  try {
    return ReadMatrixFile(in);
  } catch (const Error& e) {
    throw UsageError{path + ": " + e.what()};
  }
}

int CmdCount(std::int64_t s, std::int64_t t, std::int64_t z,
             std::ostream& out) {
  const WorkerCountReport r = BestScheme(SchemeParams::Create(s, t, z));
  out << Triple(r.params) << '\n'
      << "polydot=" << r.n_polydot << '\n'
      << "region=" << RegionLabel(r.region) << '\n'
      << "entangled=" << r.n_entangled << '\n'
      << "ssmm=" << r.n_ssmm << '\n'
      << "gcsa=" << r.n_gcsa << '\n'
      << "winner=" << SchemeName(r.winner) << '\n';
  return kExitOk;
}

struct SweepArgs {
  std::optional<std::int64_t> s, t, z, zmin, zmax, product;
  std::string out;
};

int CmdSweep(const SweepArgs& a, std::ostream& out) {
  std::vector<SchemeParams> points;
  if (a.product) {
    if (a.s || a.t || a.zmin || a.zmax || !a.z) {
      throw UsageError{"shape sweep takes exactly --z and --product"};
    }
    if (*a.product < 1) throw UsageError{"product must be >= 1"};
    for (std::int64_t s = 1; s <= *a.product; ++s) {
      if (*a.product % s == 0) {
        points.push_back(SchemeParams::Create(s, *a.product / s, *a.z));
      }
    }
  } else {
    if (!a.s || !a.t || !a.zmin || !a.zmax || a.z) {
      throw UsageError{"z sweep takes exactly --s, --t, --zmin and --zmax"};
    }
    if (*a.zmin > *a.zmax) {
      throw UsageError{"empty z range " + std::to_string(*a.zmin) + ".." +
                       std::to_string(*a.zmax)};
    }
    for (std::int64_t z = *a.zmin; z <= *a.zmax; ++z) {
      points.push_back(SchemeParams::Create(*a.s, *a.t, z));
    }
  }
  std::string csv = kCsvHeader;
  for (const auto& p : points) csv += CsvRow(BestScheme(p));
  Emit(a.out, csv, out);
  return kExitOk;
}

struct RunArgs {
  std::string a_path, b_path, out;
  std::int64_t s = 0, t = 0, z = 0;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

int CmdRun(const RunArgs& a, std::ostream& out, std::ostream& err) {
  const MatrixFile fa = LoadMatrix(a.a_path);
  const MatrixFile fb = LoadMatrix(a.b_path);
  if (fa.modulus != fb.modulus) throw UsageError{"A and B use different moduli"};
  if (fa.matrix.rows() != fb.matrix.rows()) {
    throw UsageError{"A and B have different dimensions"};
  }
  const SchemeParams params = SchemeParams::Create(a.s, a.t, a.z);
  const ProtocolConfig config = ProtocolConfig::Create(
      params, fa.matrix.rows(), fa.modulus, ResolveSeed(a.seed));
  RunOptions options;
  options.threads = a.threads;
  const Transcript tr = RunProtocol(fa.matrix, fb.matrix, config, options);
  const PrimeField& f = config.field();
  const bool ok = tr.y == MatMul(f, Transpose(fa.matrix), fb.matrix);

  std::ostringstream file;
  WriteMatrixFile(file, MatrixFile{fa.modulus, tr.y});
  Emit(a.out, file.str(), out);
  std::ostream& summary = (a.out.empty() || a.out == "-") ? err : out;
  summary << "seed=" << config.seed() << '\n'
          << "N=" << config.workers() << '\n'
          << "master_evals=" << tr.master_evals << '\n'
          << "self_check=" << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kExitOk : kExitSelfCheck;
}

struct VerifyArgs {
  std::int64_t s_min = 1, t_min = 1, s_max = 6, t_max = 6, z_slack = 5;
  bool mutate_psi3 = false;
};

int CmdVerify(const VerifyArgs& a, std::ostream& out) {
  if (a.s_min < 1 || a.t_min < 1 || a.s_min > a.s_max || a.t_min > a.t_max ||
      a.z_slack < 0) {
    throw UsageError{"empty or invalid grid bounds"};
  }
  std::int64_t triples = 0, mismatches = 0, condition_failures = 0;
  std::int64_t region_violations[3] = {0, 0, 0};
  const Baseline baselines[3] = {Baseline::kEntangled, Baseline::kSsmm,
                                 Baseline::kGcsa};
  for (std::int64_t s = a.s_min; s <= a.s_max; ++s) {
    for (std::int64_t t = a.t_min; t <= a.t_max; ++t) {
      for (std::int64_t z = 1; z <= 2 * t * s + a.z_slack; ++z) {
        const SchemeParams p = SchemeParams::Create(s, t, z);
        ++triples;
        PolyDotCount n = NPolyDot(p);
        if (a.mutate_psi3 && n.region == PsiRegion::kPsi3) ++n.workers;
        const auto support = static_cast<std::int64_t>(SupportH(p).size());
        if (support != n.workers) {
          ++mismatches;
          out << "support-mismatch " << Triple(p) << " support_h=" << support
              << " n_polydot=" << n.workers
              << " region=" << RegionLabel(n.region) << '\n';
        }
        const ConditionReport cond = CheckConditions(p);
        if (!cond.ok) {
          ++condition_failures;
          const ConditionViolation& v = cond.violations.front();
          out << "condition-failure " << Triple(p) << " condition=C"
              << v.condition << " important=" << v.important << " = " << v.lhs
              << " + " << v.rhs << '\n';
        }
        for (int k = 0; k < 3; ++k) {
          const std::vector<int> fired = LemmaConditions(baselines[k], p);
          if (fired.empty()) continue;
          const std::int64_t other = BaselineCount(baselines[k], p);
          if (n.workers < other) continue;
          ++region_violations[k];
          out << "region-violation baseline=" << BaselineName(baselines[k])
              << ' ' << Triple(p)
              << " conditions=";
          for (std::size_t i = 0; i < fired.size(); ++i) {
            out << (i ? "," : "") << fired[i];
          }
          out << " n_polydot=" << n.workers << " n_baseline=" << other
              << (k == 0 ? " (reported)" : " (fatal)") << '\n';
        }
      }
    }
  }
  out << "summary triples=" << triples << " support_mismatches=" << mismatches
      << " condition_failures=" << condition_failures
      << " entangled_region_violations=" << region_violations[0]
      << " ssmm_region_violations=" << region_violations[1]
      << " gcsa_region_violations=" << region_violations[2] << '\n';
  // Entangled-region findings are reported only; see README.
  const bool fatal = mismatches + condition_failures + region_violations[1] +
                         region_violations[2] > 0;
  return fatal ? kExitVerifyDiscrepancy : kExitOk;
}

struct AuditArgs {
  std::int64_t s = 0, t = 0, z = 0, m = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t q = PrimeField::kDefaultModulus;
  std::size_t subsets = 100;
  bool corrupt = false;
};

int CmdAudit(const AuditArgs& a, std::ostream& out) {
  if (a.m < 1) throw UsageError{"m must be >= 1"};
  const SchemeParams params = SchemeParams::Create(a.s, a.t, a.z);
  if (a.corrupt && a.z < 2) {
    throw UsageError{"--corrupt needs z >= 2 to reuse a mask"};
  }
  const ProtocolConfig config = ProtocolConfig::Create(
      params, static_cast<std::size_t>(a.m), a.q, ResolveSeed(a.seed));
  const auto m = static_cast<std::size_t>(a.m);
  CounterRng rng_a(config.seed(), "XA");
  CounterRng rng_b(config.seed(), "XB");
  const FieldMatrix ma = rng_a.UniformMatrix(config.field(), m, m);
  const FieldMatrix mb = rng_b.UniformMatrix(config.field(), m, m);
  RunOptions options;
  options.corrupt_masks = a.corrupt;
  const Transcript tr = RunProtocol(ma, mb, config, options);
  const AuditReport report = AuditPrivacy(tr, config, a.subsets);
  for (const SubsetAudit& sub : report.subsets) {
    if (sub.passed) continue;
    out << "fail workers=";
    for (std::size_t i = 0; i < sub.workers.size(); ++i) {
      out << (i ? "," : "") << sub.workers[i];
    }
    out << " matrix=" << sub.failing_matrix << '\n';
  }
  out << Triple(params) << " seed=" << config.seed() << " N=" << config.workers()
      << " subsets=" << report.subsets.size() << " passed=" << report.passed()
      << " failed=" << report.failed() << '\n';
  return report.ok() ? kExitOk : kExitAuditFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Secure coded matrix multiplication: worker counts, sweeps, "
               "protocol runs, verification and audits."};
  app.name("polydot");
  app.require_subcommand(1);

  std::int64_t s = 0, t = 0, z = 0;
  auto* count = app.add_subcommand("count", "Worker counts for one (s, t, z)");
  count->add_option("--s", s, "row partitions")->required();
  count->add_option("--t", t, "column partitions")->required();
  count->add_option("--z", z, "colluding workers")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over z or over shapes");
  sweep->add_option("--s", sweep_args.s);
  sweep->add_option("--t", sweep_args.t);
  sweep->add_option("--z", sweep_args.z);
  sweep->add_option("--zmin", sweep_args.zmin);
  sweep->add_option("--zmax", sweep_args.zmax);
  sweep->add_option("--product", sweep_args.product, "fixed s*t");
  sweep->add_option("--out", sweep_args.out, "CSV path (default stdout)");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run the protocol on matrix files");
  run->add_option("A", run_args.a_path)->required();
  run->add_option("B", run_args.b_path)->required();
  run->add_option("--s", run_args.s)->required();
  run->add_option("--t", run_args.t)->required();
  run->add_option("--z", run_args.z)->required();
  run->add_option("--seed", run_args.seed);
  run->add_option("--out", run_args.out, "output path (default stdout)");
  run->add_option("--threads", run_args.threads)->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check counts against supports");
  verify->add_option("--smin", verify_args.s_min, "smallest s");
  verify->add_option("--tmin", verify_args.t_min, "smallest t");
  verify->add_option("--s", verify_args.s_max, "largest s");
  verify->add_option("--t", verify_args.t_max, "largest t");
  verify->add_option("--zslack", verify_args.z_slack, "z runs to 2ts+zslack");
  verify->add_flag("--mutate-psi3", verify_args.mutate_psi3)
      ->group("");  // harness sensitivity test

  AuditArgs audit_args;
  auto* audit = app.add_subcommand("audit", "Privacy audit of one run");
  audit->add_option("--s", audit_args.s)->required();
  audit->add_option("--t", audit_args.t)->required();
  audit->add_option("--z", audit_args.z)->required();
  audit->add_option("--m", audit_args.m)->required();
  audit->add_option("--seed", audit_args.seed);
  audit->add_option("--q", audit_args.q);
  audit->add_option("--subsets", audit_args.subsets);
  audit->add_flag("--corrupt", audit_args.corrupt)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return CmdCount(s, t, z, out);
    if (*sweep) return CmdSweep(sweep_args, out);
    if (*run) return CmdRun(run_args, out, err);
    if (*verify) return CmdVerify(verify_args, out);
    if (*audit) return CmdAudit(audit_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const UnwritableError& e) {
    err << "error: cannot write " << e.path << '\n';
    return kExitUnwritable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kSetupExhausted:
        return kExitSetupExhausted;
      case ErrorCode::kInvalidParams:
      case ErrorCode::kInvalidConfig:
      case ErrorCode::kIndivisibleDimensions:
      case ErrorCode::kParse:
      case ErrorCode::kNotPrime:
      case ErrorCode::kShapeMismatch:
        return kExitUsage;
      default:
        return kExitInternal;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace polydot::cli
