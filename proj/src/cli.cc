// Copyright 2026 The padiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "padiff/cli.h"

#include <chrono>
#include <set>
#include <sstream>

#include "padiff/ode_solver.h"
#include "padiff/pade.h"

namespace padiff {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void CheckKeys(const Json& job, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok{"command", "seed", "comment"};
  for (const char* k : allowed) ok.insert(k);
  for (const auto& [key, value] : job.items()) {
    if (!ok.count(key)) throw SchemaError("unknown field '" + key + "'");
  }
}

int64_t IntOr(const Json& job, const std::string& key, int64_t def) {
  return Has(job, key) ? IntFromJson(job.at(key), key) : def;
}

int PositiveInt(const Json& job, const std::string& key, int64_t def) {
  int64_t v = IntOr(job, key, def);
  if (v < 1 || v > (1 << 24)) throw SchemaError(key + ": out of range");
  return static_cast<int>(v);
}

bool BoolOr(const Json& job, const std::string& key, bool def) {
  if (!Has(job, key)) return def;
  if (!job.at(key).is_boolean()) throw SchemaError(key + ": expected a boolean");
  return job.at(key).get<bool>();
}

uint64_t Seed(const Json& job) {
  return Has(job, "seed") ? UIntFromJson(job.at("seed"), "seed") : 0;
}

Json PointJson(const CurvePoint& pt) {
  return Json::array({ToJson(pt.x), ToJson(pt.y)});
}

// ---- solve-ode ----

JobOutcome SolveOde(const Json& job) {
  CheckKeys(job, {"p", "N", "n", "order", "precision", "H", "G", "check_naive"});
  const uint64_t p = UIntFromJson(Member(job, "p"), "p");
  const int N = PositiveInt(job, "N", 1);
  const size_t n = Has(job, "order")
                       ? static_cast<size_t>(PositiveInt(job, "order", 1))
                       : static_cast<size_t>(PositiveInt(job, "n", 1));
  const int M = Has(job, "precision") ? PositiveInt(job, "precision", 1)
                                      : RequiredPrecision(p, N, n);
  const Json& hj = Member(job, "H");
  const Json& gj = Member(job, "G");
  if (!hj.is_array() || hj.empty()) throw SchemaError("H: expected a g x g array");
  const size_t g = hj.size();
  if (!gj.is_array() || gj.size() != g) throw SchemaError("G: expected g series");

  ContextPtr ctx = PadicContext::Create(p, M);
  std::vector<std::vector<Poly>> f(g);
  for (size_t i = 0; i < g; ++i) {
    if (!hj[i].is_array() || hj[i].size() != g) throw SchemaError("H: row length must be g");
    for (size_t j = 0; j < g; ++j) {
      const std::string w = "H[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      f[i].push_back(Poly::FromInts(ctx, IntVectorFromJson(hj[i][j], w)));
    }
  }
  OdeProblem prob;
  std::vector<Series> gs;
  for (size_t i = 0; i < g; ++i) {
    gs.push_back(Series::FromInts(
        ctx, IntVectorFromJson(gj[i], "G[" + std::to_string(i) + "]"), n));
  }
  prob.G = SeriesVector(std::move(gs));
  prob.H = std::make_shared<GenericSeriesH>(std::move(f));
  prob.n = n;
  prob.N = N;

  JobOutcome out;
  Json& r = out.report;
  r["params"] = Json{{"p", std::to_string(p)}, {"N", N}, {"n", n},
                     {"g", g}, {"precision", M}};
  auto t0 = Clock::now();
  DiffSolveResult res = DiffSolve(prob);
  const double t_diff = Seconds(t0);
  const int digits = std::min(N, M);
  SeriesVector x = res.X.ReduceLift(digits);
  Json xs = Json::array();
  for (size_t i = 0; i < g; ++i) xs.push_back(ToJson(x[i]));
  r["outputs"] = Json{{"X", std::move(xs)}};
  r["timings"] = Json{{"diff_solve", t_diff}};
  if (BoolOr(job, "check_naive", false)) {
    t0 = Clock::now();
    SeriesVector naive = NaiveSolve(prob).ReduceLift(digits);
    r["timings"]["naive_solve"] = Seconds(t0);
    r["verification"] = Json{{"naive_agrees", naive == x}};
    if (!(naive == x)) {
      r["error"] = Json{{"name", "VerificationFailure"},
                        {"message", "DiffSolve and NaiveSolve disagree"}};
      out.exit_code = kExitVerification;
    }
  }
  return out;
}

// ---- mult-ell / isogeny ----

IsogenyConfig ConfigFromJson(const Json& job, IsogenyMode mode) {
  IsogenyConfig cfg;
  cfg.mode = mode;
  cfg.p = UIntFromJson(Member(job, "p"), "p");
  cfg.N = PositiveInt(job, "N", 1);
  cfg.l = PositiveInt(job, "l", 2);
  cfg.seed = Seed(job);
  if (Has(job, "f1")) {
    cfg.f1 = IntVectorFromJson(job.at("f1"), "f1");
  } else if (mode == IsogenyMode::kMultiplicationByL && Has(job, "g")) {
    cfg.f1 = RandomCurveCoefficients(cfg.p, PositiveInt(job, "g", 2), cfg.seed);
  } else {
    throw SchemaError("missing required field 'f1'");
  }
  if (Has(job, "base_point")) cfg.base_point = PointFromJson(job.at("base_point"), "base_point");
  if (Has(job, "order")) cfg.order = static_cast<size_t>(PositiveInt(job, "order", 1));
  if (Has(job, "precision")) cfg.precision = PositiveInt(job, "precision", 1);
  cfg.fast_gcd = BoolOr(job, "fast_gcd", true);
  cfg.max_attempts = PositiveInt(job, "max_attempts", 10);
  if (mode == IsogenyMode::kSupplied) {
    cfg.f2 = IntVectorFromJson(Member(job, "f2"), "f2");
    cfg.norm_matrix = IntMatrixFromJson(Member(job, "normalization_matrix"),
                                        "normalization_matrix");
    const Json& pts = Member(job, "initial_points");
    if (!pts.is_array()) throw SchemaError("initial_points: expected an array");
    for (size_t i = 0; i < pts.size(); ++i) {
      cfg.initial_points.push_back(
          PointFromJson(pts[i], "initial_points[" + std::to_string(i) + "]"));
    }
  }
  return cfg;
}

JobOutcome Isogeny(const Json& job, IsogenyMode mode) {
  const bool mult = mode == IsogenyMode::kMultiplicationByL;
  if (mult) {
    CheckKeys(job, {"p", "N", "l", "g", "f1", "base_point", "order", "precision",
                    "fast_gcd", "max_attempts", "trials", "series_terms"});
  } else {
    CheckKeys(job, {"p", "N", "l", "f1", "f2", "normalization_matrix",
                    "base_point", "initial_points", "order", "precision",
                    "fast_gcd", "max_attempts", "series_terms"});
  }
  IsogenyConfig cfg = ConfigFromJson(job, mode);
  const int trials = mult ? static_cast<int>(IntOr(job, "trials", 50)) : 0;
  if (trials < 0) throw SchemaError("trials: must be non-negative");

  IsogenyResult res = RunIsogeny(cfg);
  const IsogenyProblem& prob = res.problem;
  const size_t terms = static_cast<size_t>(
      IntOr(job, "series_terms", mult ? 0 : static_cast<int64_t>(prob.n + 1)));

  JobOutcome out;
  Json& r = out.report;
  r["params"] = Json{{"mode", mult ? "multiplication" : "supplied"},
                     {"p", std::to_string(prob.p())},
                     {"N", prob.N},
                     {"g", prob.genus()},
                     {"l", prob.l},
                     {"precision", prob.precision()},
                     {"n", prob.n},
                     {"bounds", ToJson(prob.bounds)},
                     {"bounds_capped", prob.bounds_capped},
                     {"extension_degree", prob.work_context()->degree()},
                     {"attempts", res.attempts},
                     {"seed", std::to_string(cfg.seed)}};
  if (mult) r["params"]["f1"] = ToJson(prob.c1.f());
  Json outputs;
  outputs["base_point"] = PointJson(prob.q);
  Json support = Json::array();
  for (const auto& pt : prob.support) support.push_back(PointJson(pt));
  outputs["support"] = std::move(support);
  if (terms > 0) {
    Json xs = Json::array(), ys = Json::array();
    for (size_t i = 0; i < res.series.x.size(); ++i) {
      xs.push_back(ToJson(res.series.x[i].Resize(std::min(terms, res.series.x[i].order()))));
      ys.push_back(ToJson(res.series.y[i].Resize(std::min(terms, res.series.y[i].order()))));
    }
    outputs["series"] = Json{{"x", std::move(xs)}, {"y", std::move(ys)}};
  }
  outputs["representation"] = ToJson(res.rep);
  r["outputs"] = std::move(outputs);
  r["timings"] = Json{{"solve", res.solve_seconds},
                      {"reconstruct", res.reconstruct_seconds}};
  if (!res.rep.complete()) {
    r["error"] = Json{{"name", "ReconstructionError"},
                      {"message", "some components could not be reconstructed"}};
    out.exit_code = kExitMath;
    return out;
  }
  if (trials > 0) {
    auto t0 = Clock::now();
    VerifyReport vr = VerifyRepresentation(
        res.rep, prob.c1.ReduceLift(1), static_cast<uint64_t>(cfg.l), trials, cfg.seed);
    r["timings"]["verify"] = Seconds(t0);
    r["verification"] = ToJson(vr);
    if (vr.failed > 0) {
      r["error"] = Json{{"name", "VerificationFailure"},
                        {"message", vr.first_counterexample}};
      out.exit_code = kExitVerification;
    }
  }
  return out;
}

// ---- verify ----

JobOutcome Verify(const Json& job) {
  CheckKeys(job, {"p", "l", "f1", "representation", "trials"});
  const uint64_t p = UIntFromJson(Member(job, "p"), "p");
  const int l = PositiveInt(job, "l", 1);
  const int trials = PositiveInt(job, "trials", 50);
  const uint64_t seed = Seed(job);
  ContextPtr ctx = PadicContext::Create(p, 1);
  HyperellipticCurve curve(Poly::FromInts(ctx, IntVectorFromJson(Member(job, "f1"), "f1")));
  RationalRepresentation rep = RepresentationFromJson(Member(job, "representation"), ctx);
  if (static_cast<int>(rep.sigma.size()) != curve.genus()) {
    throw SchemaError("representation must have g sigma components");
  }
  JobOutcome out;
  Json& r = out.report;
  r["params"] = Json{{"p", std::to_string(p)}, {"g", curve.genus()}, {"l", l},
                     {"trials", trials}, {"seed", std::to_string(seed)}};
  auto t0 = Clock::now();
  VerifyReport vr = VerifyRepresentation(rep, curve, static_cast<uint64_t>(l), trials, seed);
  r["verification"] = ToJson(vr);
  r["timings"] = Json{{"verify", Seconds(t0)}};
  if (vr.failed > 0) {
    r["error"] = Json{{"name", "VerificationFailure"}, {"message", vr.first_counterexample}};
    out.exit_code = kExitVerification;
  }
  return out;
}

// ---- bench ----

JobOutcome Bench(const Json& job) {
  CheckKeys(job, {"p", "g", "N", "sizes", "degree", "pade"});
  const uint64_t p = Has(job, "p") ? UIntFromJson(job.at("p"), "p") : 7;
  const int g = PositiveInt(job, "g", 2);
  const int N = PositiveInt(job, "N", 1);
  const int degree = PositiveInt(job, "degree", 3);
  const bool pade = BoolOr(job, "pade", true);
  std::vector<int64_t> sizes = Has(job, "sizes")
                                   ? IntVectorFromJson(job.at("sizes"), "sizes")
                                   : std::vector<int64_t>{256, 512, 1024, 2048};
  std::mt19937_64 rng(Seed(job));
  JobOutcome out;
  Json rows = Json::array(), times = Json::array();
  for (int64_t sz : sizes) {
    if (sz < 2 || sz > (1 << 22)) throw SchemaError("sizes: out of range");
    const size_t n = static_cast<size_t>(sz);
    const int M = RequiredPrecision(p, N, n);
    ContextPtr ctx = PadicContext::Create(p, M);
    PlantedProblem pp = RandomPlantedProblem(ctx, g, n, degree, rng);
    pp.problem.N = N;
    auto t0 = Clock::now();
    DiffSolveResult res = DiffSolve(pp.problem);
    Json time{{"n", n}, {"diff_solve", Seconds(t0)}};
    Json row{{"n", n}, {"precision", M},
             {"solution_matches", res.X.ReduceLift(N) == pp.solution.ReduceLift(N)}};
    if (pade) {
      // A random fraction of degrees (n/2 - 1, n/2 - 1) over F_p.
      ContextPtr fp = PadicContext::Create(p, 1);
      const int d = static_cast<int>(n / 2) - 1;
      std::vector<int64_t> a(d + 1), b(d + 1);
      std::uniform_int_distribution<uint64_t> dist(0, p - 1);
      for (auto& c : a) c = static_cast<int64_t>(dist(rng));
      for (auto& c : b) c = static_cast<int64_t>(dist(rng));
      b[0] = 1;
      Series s = Poly::FromInts(fp, a).ToSeries(n) *
                 Poly::FromInts(fp, b).ToSeries(n).Inverse();
      t0 = Clock::now();
      PadeResult fast = PadeReconstruct(s, d, d, true);
      time["pade_half_gcd"] = Seconds(t0);
      t0 = Clock::now();
      PadeResult slow = PadeReconstruct(s, d, d, false);
      time["pade_euclid"] = Seconds(t0);
      row["pade_agree"] = fast.numerator == slow.numerator &&
                          fast.denominator == slow.denominator;
    }
    rows.push_back(std::move(row));
    times.push_back(std::move(time));
  }
  out.report["params"] = Json{{"p", std::to_string(p)}, {"g", g}, {"N", N},
                              {"degree", degree}, {"seed", std::to_string(Seed(job))}};
  out.report["outputs"] = Json{{"rows", std::move(rows)}};
  out.report["timings"] = Json{{"rows", std::move(times)}};
  return out;
}

JobOutcome Dispatch(const Json& job) {
  if (!job.is_object()) throw SchemaError("job must be a JSON object");
  const Json& cmd = Member(job, "command");
  if (!cmd.is_string()) throw SchemaError("command: expected a string");
  const std::string c = cmd.get<std::string>();
  if (c == "solve-ode") return SolveOde(job);
  if (c == "mult-ell") return Isogeny(job, IsogenyMode::kMultiplicationByL);
  if (c == "isogeny") return Isogeny(job, IsogenyMode::kSupplied);
  if (c == "verify") return Verify(job);
  if (c == "bench") return Bench(job);
  throw SchemaError("unknown command '" + c + "'");
}

JobOutcome Failure(int code, const std::string& name, const std::string& msg) {
  JobOutcome out;
  out.exit_code = code;
  out.report["error"] = Json{{"name", name}, {"message", msg}};
  return out;
}

// Fixed key order: command, status, params, outputs, verification, error,
// timings.
Json Finish(const Json& job, JobOutcome& out) {
  Json r;
  r["command"] = job.is_object() && job.contains("command") ? job.at("command") : Json();
  r["status"] = out.exit_code == kExitOk ? "ok" : "error";
  r["exit_code"] = out.exit_code;
  for (const char* k : {"params", "outputs", "verification", "error", "timings"}) {
    if (out.report.contains(k)) r[k] = out.report.at(k);
  }
  return r;
}

}  // namespace

JobOutcome RunJob(const Json& job) {
  JobOutcome out;
  try {
    out = Dispatch(job);
  } catch (const SchemaError& e) {
    out = Failure(kExitSchema, e.name(), e.what());
  } catch (const Json::exception& e) {
    out = Failure(kExitSchema, "SchemaError", e.what());
  } catch (const InternalError& e) {
    out = Failure(kExitInternal, e.name(), e.what());
  } catch (const Error& e) {
    out = Failure(kExitMath, e.name(), e.what());
  } catch (const std::exception& e) {
    out = Failure(kExitInternal, "InternalError", e.what());
  }
  out.report = Finish(job, out);
  return out;
}

JobOutcome RunJobText(std::string_view text, const JobOverrides& overrides) {
  Json job;
  try {
    job = Json::parse(text);
  } catch (const Json::parse_error& e) {
    JobOutcome out = Failure(kExitSchema, "SchemaError", e.what());
    out.report = Finish(Json(), out);
    return out;
  }
  if (job.is_object()) {
    if (overrides.command) job["command"] = *overrides.command;
    if (overrides.seed) job["seed"] = std::to_string(*overrides.seed);
    if (overrides.order) job["order"] = *overrides.order;
    if (overrides.precision) job["precision"] = *overrides.precision;
    if (overrides.fast_gcd) job["fast_gcd"] = *overrides.fast_gcd;
  }
  return RunJob(job);
}

std::string Summarize(const Json& report) {
  std::ostringstream os;
  os << (report.contains("command") && report["command"].is_string()
             ? report["command"].get<std::string>()
             : std::string("?"))
     << ": " << report.value("status", "?");
  if (report.contains("params")) {
    const Json& p = report["params"];
    for (const char* k : {"p", "g", "l", "n", "precision"}) {
      if (p.contains(k)) os << " " << k << "=" << (p[k].is_string() ? p[k].get<std::string>() : p[k].dump());
    }
  }
  if (report.contains("outputs") && report["outputs"].contains("representation")) {
    const Json& rep = report["outputs"]["representation"];
    for (const char* part : {"sigma", "rho_over_v"}) {
      for (const auto& c : rep[part]) {
        os << "\n  " << c.value("name", "?") << ": ";
        if (c.contains("num")) {
          os << "deg " << static_cast<int>(c["num"].size()) - 1 << "/"
             << static_cast<int>(c["den"].size()) - 1;
        } else {
          os << "failed (" << c.value("error", "") << ")";
        }
      }
    }
  }
  if (report.contains("verification")) os << "\n  verification " << report["verification"].dump();
  if (report.contains("error")) {
    os << "\n  " << report["error"].value("name", "") << ": "
       << report["error"].value("message", "");
  }
  return os.str();
}

}  // namespace padiff
