// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "padyn/bs.hpp"
#include "padyn/heisenberg.hpp"
#include "padyn/lattice.hpp"
#include "padyn/shift.hpp"
#include "padyn/slope.hpp"
#include "padyn_cli/report.hpp"

namespace {

using namespace padyn;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kPrime = 3;
constexpr std::size_t kCorpusSize = 200;
constexpr int kConjugations = 50;
constexpr double kCorpusSeconds = 5.0;
constexpr double kWordProblemSeconds = 60.0;

struct Outcome {
  bool ok;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<testing::CorpusEntry>& corpus() {
  static const std::vector<testing::CorpusEntry> c = [] {
    std::mt19937 rng(20240601);
    return testing::eigenvalue_corpus(rng, kPrime, kCorpusSize);
  }();
  return c;
}

Outcome expansiveness_decision() {
  const PrimeContext ctx(kPrime);
  const auto& entries = corpus();
  const auto start = Clock::now();
  std::size_t mismatches = 0, expansive = 0;
  for (const auto& e : entries) {
    const bool truth = std::none_of(e.valuations.begin(), e.valuations.end(), [](long s) { return s == 0; });
    const bool got = is_expansive_linear(e.matrix, ctx).expansive;
    mismatches += got != truth ? 1 : 0;
    expansive += truth ? 1 : 0;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << entries.size() << " matrices (" << expansive << " expansive), " << mismatches << " mismatches, " << t << " s";
  return {mismatches == 0 && t < kCorpusSeconds, d.str()};
}

Outcome slope_decomposition() {
  const PrimeContext ctx(kPrime);
  std::mt19937 rng(77);
  std::size_t dim_mismatch = 0, residual_fail = 0, conj_fail = 0;
  for (const auto& e : corpus()) {
    const SlopeDecomposition d = slope_decompose(e.matrix, ctx);
    for (const auto& b : d.blocks) {
      const long expected = std::count(e.valuations.begin(), e.valuations.end(), b.slope);
      if (b.multiplicity != expected || static_cast<long>(b.basis.size()) != expected) ++dim_mismatch;
    }
    if (d.invariance_residual < Valuation(d.residual_threshold)) ++residual_fail;
    const auto reference = d.polygon.slope_multiset();
    for (int i = 0; i < kConjugations; ++i) {
      const Matrix c = testing::random_invertible(rng, e.matrix.rows());
      if (is_expansive_linear(c * e.matrix * c.inverse(), ctx).polygon.slope_multiset() != reference) ++conj_fail;
    }
  }
  std::ostringstream d;
  d << dim_mismatch << " block-size mismatches, " << residual_fail << " residuals outside the guard band, "
    << conj_fail << " slope changes over " << kConjugations << " conjugations per matrix";
  return {dim_mismatch == 0 && residual_fail == 0 && conj_fail == 0, d.str()};
}

Outcome module_bounds() {
  const PrimeContext ctx(kPrime);
  const ModuleReport a = module_report(Matrix::diagonal({ctx.power(1), ctx.power(-1)}), ctx);
  const ModuleReport b = module_report(Matrix::diagonal({ctx.power(1), ctx.power(-2)}), ctx);
  std::ostringstream d;
  d << "(" << a.ell_alpha << "," << a.ell_alpha_inverse << ") bound " << a.series_bound << "; (" << b.ell_alpha << ","
    << b.ell_alpha_inverse << ") bound " << b.series_bound;
  const bool ok = a.ell_alpha == 1 && a.ell_alpha_inverse == 1 && a.series_bound == 2 && b.ell_alpha == 1 &&
                  b.ell_alpha_inverse == 2 && b.series_bound == 3;
  return {ok, d.str()};
}

Outcome window_shrinkage() {
  const PrimeContext ctx(kPrime);
  const auto v = v0_shrinkage(Lattice::standard(2), Matrix::diagonal({ctx.power(1), ctx.power(-1)}), ctx, 8);
  std::ostringstream d;
  for (long x : v) d << x << " ";
  return {v == std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7, 8}, d.str()};
}

Outcome quotient_product_set() {
  const PrimeContext ctx(kPrime);
  const DiagAuto a{Carrier::HmodN, {1, -1, 0}};
  SearchLimits limits;
  limits.depth = 2;
  const ClosureResult r = product_set_closure_witness(a, ctx, limits);
  const Rational pinv = ctx.power(-1);
  const HeisElement s1 = make_element(Carrier::HmodN, {0, pinv, 0}, ctx);
  const HeisElement s2 = make_element(Carrier::HmodN, {pinv, 0, 0}, ctx);
  const HeisElement prod = make_element(Carrier::HmodN, {pinv, pinv, 0}, ctx);
  bool found = false, all_verify = true;
  for (const auto& w : r.witnesses) {
    all_verify = all_verify && verify(w, a, ctx);
    found = found || (w.s1 == s1 && w.s2 == s2 && w.product == prod);
  }
  const bool first_ok = r.first && verify(*r.first, a, ctx);
  std::ostringstream d;
  d << r.witnesses.size() << " violating pairs, first " << (r.first ? to_string(r.first->s1) + " * " + to_string(r.first->s2) : "none")
    << ", expected pair " << (found ? "present" : "missing");
  return {!r.closed && first_ok && all_verify && found, d.str()};
}

Outcome product_normalization() {
  const PrimeContext ctx(kPrime);
  const DiagAuto a{Carrier::HxH, {1, -2, -1, 2, -1, 1}};
  const NormalizationResult r = normalization_witness(a, ctx);
  const bool ok1 = verify(r.u_moves_v, a, Direction::Backward, ctx);
  const bool ok2 = verify(r.v_moves_u, a, Direction::Forward, ctx);
  return {ok1 && ok2, to_string(r.u_moves_v.conj) + " and " + to_string(r.v_moves_u.conj)};
}

Outcome central_series() {
  const PrimeContext ctx(kPrime);
  const DiagAuto full{Carrier::H, {1, -2, -1}};
  const DiagAuto quot{Carrier::HmodN, {1, -1, 0}};
  const bool split = central_series_check(full, ctx);
  const bool closed = product_set_closure_witness(full, ctx).closed;
  const bool quot_split = central_series_check(quot, ctx);
  const ClosureResult q = product_set_closure_witness(quot, ctx);
  const bool witness = q.first && verify(*q.first, quot, ctx);
  std::ostringstream d;
  d << "H: check " << split << ", closed " << closed << "; H/N: check " << quot_split << ", witness " << witness;
  return {split && closed && !quot_split && !q.closed && witness, d.str()};
}

Outcome shift_nubs() {
  const ShiftSystem full = ShiftSystem::plain(FiniteGroup::cyclic(kPrime), false, false, ShiftDirection::Right);
  const bool whole = nub(full) == carrier_subgroup(full);
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const ShiftSystem g = ShiftSystem::semidirect(s3, s3_splitting(s3), true, false, ShiftDirection::Right);
  ProductSubgroup hz = trivial_subgroup(g);
  hz.parts[1].left = hz.parts[1].right = g.components()[1].image;
  const bool is_hz = nub(g) == hz;
  const NormalizerWitness w = normalizer_witness(g);
  const bool verified = verify(g, w);
  std::ostringstream d;
  d << "full shift nub whole: " << whole << "; S3 nub = H^Z: " << is_hz << "; witness " << to_string(g, w.conjugate);
  return {whole && is_hz && verified, d.str()};
}

Outcome torsion_closure() {
  const ShiftSystem full = ShiftSystem::plain(FiniteGroup::cyclic(kPrime), false, false, ShiftDirection::Right);
  const TorsionReport t = torsion_divisible_report(full);
  const bool eq = t.torsion_times_nub && t.closure_of_torsion == *t.torsion_times_nub;
  std::ostringstream d;
  d << "exponent " << t.exponent << ", closure(T) = " << to_string(full, t.closure_of_torsion);
  return {eq && t.closure_matches && t.exponent == static_cast<long>(kPrime), d.str()};
}

// Every word with at most four syllables and exponents in [-bound, bound].
void for_each_word(long bound, const std::function<void(const BSWord&)>& f) {
  std::vector<Syllable> s;
  std::function<void(int, Gen)> rec = [&](int remaining, Gen next) {
    f(BSWord(s));
    if (remaining == 0) return;
    for (long k = -bound; k <= bound; ++k) {
      if (k == 0) continue;
      s.push_back({next, Integer(k)});
      rec(remaining - 1, next == Gen::A ? Gen::T : Gen::A);
      s.pop_back();
    }
  };
  for (Gen first : {Gen::A, Gen::T}) {
    for (long k = -bound; k <= bound; ++k) {
      if (k == 0) continue;
      s.assign(1, {first, Integer(k)});
      rec(3, first == Gen::A ? Gen::T : Gen::A);
    }
  }
  s.clear();
  f(BSWord(s));
}

Outcome baumslag_solitar() {
  bool audits = true;
  for (auto [p, q] : {std::pair<int, int>{2, 3}, {3, 5}, {2, 5}}) audits = audits && relation_audit(BSParams(p, q)).ok();
  const BSParams params(2, 3);
  const bool relator_empty = britton_reduce(relator(params), params).empty();
  const BSWord k = commutator(BSWord::a(), BSWord::t() * BSWord::a() * BSWord::t(-1));
  const BSWord kr = britton_reduce(k, params);
  const bool kernel = !kr.empty() && is_pinch_free(kr, params) && is_identity(phi_eval(k, params));

  const long bound = 2 * static_cast<long>(params.p() * params.q());
  std::size_t words = 0, violations = 0, trivial = 0;
  const auto start = Clock::now();
  for_each_word(bound, [&](const BSWord& w) {
    ++words;
    const BSWord r = britton_reduce(w, params);
    const SemiDirElement image = phi_eval(w, params);
    if (!is_pinch_free(r, params) || phi_eval(r, params) != image) ++violations;
    if (r.empty()) {
      ++trivial;
      if (!is_identity(image)) ++violations;
    }
  });
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "audits " << audits << ", relator reduces " << relator_empty << ", kernel witness " << kr.to_string() << "; "
    << words << " words (" << trivial << " trivial), " << violations << " violations, " << t << " s";
  return {audits && relator_empty && kernel && violations == 0 && t < kWordProblemSeconds, d.str()};
}

Outcome determinism() {
  const cli::Options options;
  const std::string a = cli::suite_json("all", cli::run_suite("all", "", options), options).dump(2);
  const std::string b = cli::suite_json("all", cli::run_suite("all", "", options), options).dump(2);
  return {a == b, std::to_string(a.size()) + " bytes, identical: " + (a == b ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"expansiveness decision on the eigenvalue corpus", expansiveness_decision},
      {"slope decomposition sizes, residuals and conjugation invariance", slope_decomposition},
      {"module exponents for diag(p,1/p) and diag(p,1/p^2)", module_bounds},
      {"two-sided window shrinkage for diag(p,1/p)", window_shrinkage},
      {"product set of the Heisenberg quotient is not a subgroup", quotient_product_set},
      {"normalization witnesses on H x H", product_normalization},
      {"central series split versus product-set closure", central_series},
      {"nubs of the full shift and the S3 semidirect system", shift_nubs},
      {"closure of the torsion part on the full shift", torsion_closure},
      {"Baumslag-Solitar relations, kernel witness and word problem", baumslag_solitar},
      {"suite determinism", determinism},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%d] %s: %s\n", o.ok ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
