// Copyright 2026 The symcap Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "symcap/cli.hpp"

namespace symcap::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symplectic capacities of ellipsoids, polydiscs and their unions"};
  app.require_subcommand(1);

  std::string region, capacity, figure, target, output, input = "-", strategy_name = "auto";
  std::vector<std::string> capacities;
  std::int64_t samples = 200;
  std::size_t n = 0, n0 = 0;

  auto* compute = app.add_subcommand("compute", "Evaluate one capacity of a region");
  compute->add_option("-r,--region", region, "Region, e.g. E(1,2)xP(1,1)")->required();
  compute->add_option("-c,--capacity", capacity, "Capacity, e.g. eh:3 or neh:2")->required();

  auto* table = app.add_subcommand("table", "CSV table of several capacities of one region");
  table->add_option("-r,--region", region, "Region")->required();
  table->add_option("-c,--capacity", capacities, "Capacities; eh:a..b expands to a range")
      ->required();
  table->add_option("-o,--output", output, "Write CSV to this file");

  auto* plot = app.add_subcommand("plotdata", "CSV data for the 4d capacity plots");
  plot->add_option("figure", figure, "fi0, fi1 or fi2")->required();
  plot->add_option("--samples", samples, "Number of uniform sample points")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  plot->add_option("-o,--output", output, "Write CSV to this file");

  auto* verify = app.add_subcommand("verify", "Run an exact verification and print a JSON report");
  verify->add_option("target", target,
                     "limell | xk:k | xk2:k | pol:k | cor2ml:r,s | chekanov | ex333:n | lipschitz:k")
      ->required();

  auto* recon = app.add_subcommand("reconstruct", "Recover ellipsoid axes from an EH spectrum");
  recon->add_option("--n", n, "Half dimension")->required()->check(CLI::Range(1, 1000));
  recon->add_option("--n0", n0, "Number of missing values");
  recon->add_option("file", input, "Spectrum file, '-' for stdin");
  const std::map<std::string, ReconstructStrategy> strategies{
      {"auto", ReconstructStrategy::kAuto},
      {"blocks", ReconstructStrategy::kBlocks},
      {"search", ReconstructStrategy::kSearch}};
  recon->add_option("--strategy", strategy_name, "auto, blocks or search")
      ->check(CLI::IsMember({"auto", "blocks", "search"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  // Output redirection for table and plotdata.
  std::ofstream file;
  auto sink = [&]() -> std::ostream* {
    if (output.empty()) return &out;
    file.open(output);
    if (!file) return nullptr;
    return &file;
  };

  if (*compute) return cmd_compute(region, capacity, out, err);
  if (*table || *plot) {
    std::ostream* dst = sink();
    if (dst == nullptr) {
      err << "error: cannot open '" << output << "' for writing\n";
      return kUsage;
    }
    return *table ? cmd_table(region, capacities, *dst, err)
                  : cmd_plotdata(figure, samples, *dst, err);
  }
  if (*verify) return cmd_verify(target, out, err);
  if (*recon) {
    const ReconstructStrategy s = strategies.at(strategy_name);
    if (input == "-") return cmd_reconstruct(std::cin, n, n0, s, out, err);
    std::ifstream in(input);
    if (!in) {
      err << "error: cannot open '" << input << "'\n";
      return kUsage;
    }
    return cmd_reconstruct(in, n, n0, s, out, err);
  }
  return kUsage;
}

}  // namespace symcap::cli
