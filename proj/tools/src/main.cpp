#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "padyn/errors.hpp"
#include "padyn_cli/report.hpp"

namespace {

using padyn::cli::Json;

enum ExitCode { kOk = 0, kCaseFailure = 1, kInput = 2, kPrecision = 3, kInternal = 4 };

Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw padyn::InvalidInput("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return Json::parse(text);
}

void emit(const Json& doc, const std::string& json_out) {
  const std::string text = doc.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(json_out, std::ios::binary);
  if (!out) throw padyn::InvalidInput("cannot write '" + json_out + "'");
  out << text;
}

int exit_code_for(const padyn::Error& e) {
  if (dynamic_cast<const padyn::PrecisionExhausted*>(&e)) return kPrecision;
  if (dynamic_cast<const padyn::InvalidInput*>(&e) || dynamic_cast<const padyn::SingularInput*>(&e) ||
      dynamic_cast<const padyn::NotCoprime*>(&e) || dynamic_cast<const padyn::IncompatibleTails*>(&e) ||
      dynamic_cast<const padyn::NotProductType*>(&e) || dynamic_cast<const padyn::ExponentOverflow*>(&e)) {
    return kInput;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"padyn: expansive automorphisms of p-adic and related groups"};
  app.require_subcommand(1);

  padyn::cli::Options options;
  std::string json_out;
  std::string case_name;
  app.add_option("--prime", options.prime, "prime p")->check(CLI::PositiveNumber);
  app.add_option("--precision", options.precision, "p-adic working precision K")->check(CLI::PositiveNumber);
  app.add_option("--depth", options.depth, "search depth")->check(CLI::PositiveNumber);
  app.add_option("--json-out", json_out, "write the report to PATH instead of stdout");

  std::string input_path = "-";
  std::uint64_t q = 3;
  bool q_given = false;
  bool prime_given = false;
  std::string family = "all";

  auto* matrix = app.add_subcommand("analyze-matrix", "slope analysis of a rational matrix");
  auto* heis = app.add_subcommand("heisenberg", "diagonal automorphisms of Heisenberg carriers");
  auto* shift = app.add_subcommand("shift", "shift systems over a finite group");
  auto* bs = app.add_subcommand("bs", "Baumslag-Solitar group BS(p,q) and its metabelian image");
  auto* suite = app.add_subcommand("suite", "replay the built-in cases");
  for (auto* sub : {matrix, heis, shift, bs}) sub->add_option("input", input_path, "input JSON file or '-'");
  bs->add_option("--q", q, "second prime q")->check(CLI::PositiveNumber)->each([&](const std::string&) { q_given = true; });
  suite->add_option("family", family, "all, heisenberg, shift, bs or linear");
  suite->add_option("--case", case_name, "run a single case");
  for (auto* sub : {matrix, heis, shift, bs, suite}) {
    sub->add_option("--prime", options.prime, "prime p")->check(CLI::PositiveNumber);
    sub->add_option("--precision", options.precision, "p-adic working precision K")->check(CLI::PositiveNumber);
    sub->add_option("--depth", options.depth, "search depth")->check(CLI::PositiveNumber);
    sub->add_option("--json-out", json_out, "write the report to PATH instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  prime_given = app.count("--prime") > 0 || bs->count("--prime") > 0;

  try {
    if (*suite) {
      const auto reports = padyn::cli::run_suite(family, case_name, options);
      emit(padyn::cli::suite_json(family, reports, options), json_out);
      for (const auto& r : reports) {
        if (!r.passed()) return kCaseFailure;
      }
      return kOk;
    }
    Json input = read_input(input_path);
    padyn::cli::AnalysisReport report;
    if (*matrix) {
      report = padyn::cli::analyze_matrix(input, options);
    } else if (*heis) {
      report = padyn::cli::analyze_heisenberg(input, options);
    } else if (*shift) {
      report = padyn::cli::analyze_shift(input, options);
    } else {
      if (input.is_object()) {
        if (q_given && !input.contains("q")) input["q"] = q;
        // p defaults to 2 so that a bare invocation describes BS(2,3).
        if (!prime_given && !input.contains("p")) input["p"] = 2;
      }
      report = padyn::cli::analyze_bs(input, options);
    }
    padyn::cli::verify_witnesses(report);
    emit(report.to_json(), json_out);
    return kOk;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kInput;
  } catch (const padyn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
