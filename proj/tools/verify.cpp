// verify: run the full certification pipeline for one prime.
//
// Exit status: 0 obstructed, 1 a check failed, 2 usage error or infeasible input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roquette/errors.hpp"
#include "roquette/report.hpp"

namespace {

std::vector<std::uint32_t> parse_ell_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size() || v > 0xffffffffUL) throw std::invalid_argument("bad l value '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify the lifting obstruction for the Roquette curve y^2 = x^p - x"};
  std::uint32_t p = 0;
  std::string ells;
  std::string format = "json";
  std::string out;
  roquette::PipelineOptions opts;
  app.add_option("--prime", p, "prime p >= 5")->required();
  app.add_option("--ell", ells, "comma-separated primes l for the torsion witness");
  app.add_option("--ell-bound", opts.ell_bound, "largest admissible l^(2g)")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for random divisor classes")->capture_default_str();
  app.add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--precision", opts.precision, "series precision (0 = 2p + 4)")->capture_default_str();
  app.add_option("--max-prime", opts.max_prime, "largest prime accepted")->capture_default_str();
  app.add_flag("--timings", opts.timings, "include per-stage timings (output is then not reproducible)");
  std::string inject;
  app.add_option("--inject-failure", inject, "force the named check to fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!ells.empty()) opts.ells = parse_ell_list(ells);
    if (!inject.empty()) opts.inject_failure = inject;
    roquette::validate_options(p, opts);
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  roquette::VerificationReport report;
  try {
    report = roquette::run_pipeline(p, opts);
  } catch (const roquette::ResourceLimitError& e) {
    std::cerr << "verify: infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 1;
  }

  const std::string text = format == "json" ? roquette::emit_json(report) : roquette::emit_markdown(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "verify: cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return roquette::exit_code(report);
}
