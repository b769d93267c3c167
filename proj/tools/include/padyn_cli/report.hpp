#pragma once

#include <string>
#include <vector>

#include "padyn_cli/json_io.hpp"

namespace padyn::cli {

struct AnalysisReport {
  std::string case_name;
  Json inputs = Json::object();
  Json verdicts = Json::object();
  Json witnesses = Json::array();
  std::vector<std::string> citations;
  /// Failed expectations; a case passes when this stays empty.
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  /// Records a failure message unless `ok`.
  void expect(bool ok, const std::string& what);
  Json to_json() const;
};

struct Options {
  std::uint64_t prime = 3;
  int precision = PrimeContext::kDefaultPrecision;
  int depth = 4;
};

/// Recomputes a serialized witness from its JSON alone.
bool replay_witness(const Json& witness);

Json closure_witness_json(const ClosureWitness& w, const DiagAuto& alpha, const PrimeContext& ctx);
Json normalization_witness_json(const NormalizationWitness& w, Direction inner, const DiagAuto& alpha,
                                const PrimeContext& ctx);
Json shift_witness_json(const NormalizerWitness& w, const ShiftSystem& sys, const Json& declaration);
Json bs_kernel_witness_json(const BSWord& w, const BSParams& params);
Json probe_json(const DerivedProbe& probe);

AnalysisReport analyze_matrix(const Json& input, const Options& options);
AnalysisReport analyze_heisenberg(const Json& input, const Options& options);
AnalysisReport analyze_shift(const Json& input, const Options& options);
AnalysisReport analyze_bs(const Json& input, const Options& options);

/// Families: all, heisenberg, shift, bs, linear. An empty case name runs
/// every case of the family; an unknown name throws InvalidInput.
std::vector<AnalysisReport> run_suite(const std::string& family, const std::string& case_name,
                                      const Options& options);
std::vector<std::string> suite_case_names(const std::string& family);
Json suite_json(const std::string& family, const std::vector<AnalysisReport>& reports, const Options& options);

/// Replays every witness; throws InvariantFailure naming the first that
/// does not re-verify.
void verify_witnesses(const AnalysisReport& report);

}  // namespace padyn::cli
