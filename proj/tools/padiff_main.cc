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


// padiff: command line front end. Reads a JSON job, runs it and writes a
// JSON report; see docs/schema.md.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "padiff/cli.h"

namespace {

bool ReadFile(const std::string& path, std::string* out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic differential solver and isogeny rational representations"};
  app.require_subcommand(0, 1);

  std::string config, out_path;
  uint64_t seed = 0;
  size_t order = 0;
  int precision = 0;
  bool fast = false, naive = false, quiet = false;

  auto add_common = [&](CLI::App* a) {
    a->add_option("--config", config, "JSON job file (- for stdin)");
    a->add_option("--out", out_path, "write the report here instead of stdout");
    a->add_option("--seed", seed, "seed for every randomized choice");
    a->add_option("--order", order, "series order n");
    a->add_option("--precision", precision, "working precision M");
    auto* f = a->add_flag("--fast-gcd", fast, "half-gcd reconstruction");
    auto* s = a->add_flag("--naive-gcd", naive, "quadratic Euclid reconstruction");
    f->excludes(s);
    a->add_flag("-q,--quiet", quiet, "no summary on stderr");
  };
  add_common(&app);
  for (const char* name : {"solve-ode", "mult-ell", "isogeny", "verify", "bench"}) {
    add_common(app.add_subcommand(name, std::string("run a ") + name + " job"));
  }
  CLI11_PARSE(app, argc, argv);

  padiff::JobOverrides ov;
  std::string command;
  for (CLI::App* sub : app.get_subcommands()) command = sub->get_name();
  if (!command.empty()) ov.command = command;
  auto given = [&](const char* flag) {
    if (app.count(flag) > 0) return true;
    for (CLI::App* sub : app.get_subcommands())
      if (sub->count(flag) > 0) return true;
    return false;
  };
  if (given("--seed")) ov.seed = seed;
  if (given("--order")) ov.order = order;
  if (given("--precision")) ov.precision = precision;
  if (fast) ov.fast_gcd = true;
  if (naive) ov.fast_gcd = false;

  std::string text;
  if (config.empty()) {
    if (command.empty()) {
      std::cerr << "need a subcommand or --config\n";
      return padiff::kExitSchema;
    }
    text = "{}";
  } else if (config == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!ReadFile(config, &text)) {
    std::cerr << "cannot read " << config << "\n";
    return padiff::kExitSchema;
  }

  padiff::JobOutcome res = padiff::RunJobText(text, ov);
  const std::string body = res.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out || !(out << body)) {
      std::cerr << "cannot write " << out_path << "\n";
      return padiff::kExitInternal;
    }
  }
  if (!quiet) std::cerr << padiff::Summarize(res.report) << "\n";
  return res.exit_code;
}
