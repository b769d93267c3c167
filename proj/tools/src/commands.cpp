#include <optional>

#include "padyn/errors.hpp"
#include "padyn_cli/report.hpp"

namespace padyn::cli {

void AnalysisReport::expect(bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

Json AnalysisReport::to_json() const {
  return Json{{"case_name", case_name},   {"inputs", inputs},       {"verdicts", verdicts},
              {"witnesses", witnesses}, {"citations", citations}, {"passed", passed()},
              {"failures", failures}};
}

void verify_witnesses(const AnalysisReport& report) {
  for (const auto& w : report.witnesses) {
    if (!replay_witness(w)) {
      throw InvariantFailure("witness '" + w.value("kind", std::string("?")) + "' in case '" + report.case_name +
                             "' does not re-verify");
    }
  }
}

namespace {

std::uint64_t prime_of(const Json& input, const char* key, std::uint64_t fallback) {
  if (!input.contains(key)) return fallback;
  const Json& v = input.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) throw InvalidInput(std::string(key) + " must be a positive integer");
  return v.get<std::uint64_t>();
}

int int_of(const Json& input, const char* key, int fallback) {
  if (!input.contains(key)) return fallback;
  if (!input.at(key).is_number_integer()) throw InvalidInput(std::string(key) + " must be an integer");
  return input.at(key).get<int>();
}

Json coordinate_names(Carrier c) {
  if (c == Carrier::HxH) return Json::array({"x1", "y1", "z1", "x2", "y2", "z2"});
  return Json::array({"x", "y", "z"});
}

// Names of coordinates allowed to be nonzero in the subgroup.
Json support(const DiagAuto& a, int sign) {
  const Json names = coordinate_names(a.carrier);
  Json out = Json::array();
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    const long e = a.exponents[i];
    if ((sign > 0 && e > 0) || (sign < 0 && e < 0) || (sign == 0 && e == 0)) out.push_back(names[i]);
  }
  return out;
}

std::string direction_name(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

Direction parse_direction(const std::string& s) {
  if (s == "forward") return Direction::Forward;
  if (s == "backward") return Direction::Backward;
  throw InvalidInput("direction must be forward or backward");
}

}  // namespace

Json closure_witness_json(const ClosureWitness& w, const DiagAuto& alpha, const PrimeContext& ctx) {
  return Json{{"kind", "heisenberg-closure"},
              {"prime", ctx.prime()},
              {"automorphism", to_json(alpha)},
              {"s1", to_json(w.s1)},
              {"s2", to_json(w.s2)},
              {"product", to_json(w.product)},
              {"trace", trace_json(w.trace)}};
}

Json normalization_witness_json(const NormalizationWitness& w, Direction inner, const DiagAuto& alpha,
                                const PrimeContext& ctx) {
  return Json{{"kind", "heisenberg-normalization"},
              {"prime", ctx.prime()},
              {"automorphism", to_json(alpha)},
              {"inner_direction", direction_name(inner)},
              {"outer", to_json(w.outer)},
              {"inner", to_json(w.inner)},
              {"conjugate", to_json(w.conj)},
              {"trace", trace_json(w.trace)}};
}

Json shift_witness_json(const NormalizerWitness& w, const ShiftSystem& sys, const Json& declaration) {
  Json trace = Json::array();
  for (const auto& s : w.trace) {
    Json ops = Json::array();
    for (const auto& o : s.operands) ops.push_back(to_json(sys, o));
    trace.push_back(Json{{"op", s.op}, {"operands", ops}, {"result", to_json(sys, s.result)}});
  }
  return Json{{"kind", "shift-normalizer"},
              {"system", declaration},
              {"g", to_json(sys, w.g)},
              {"u", to_json(sys, w.u)},
              {"conjugate", to_json(sys, w.conjugate)},
              {"trace", trace}};
}

Json bs_kernel_witness_json(const BSWord& w, const BSParams& params) {
  return Json{{"kind", "bs-kernel"},
              {"p", params.p()},
              {"q", params.q()},
              {"word", w.to_string()},
              {"reduced", britton_reduce(w, params).to_string()},
              {"image", to_json(phi_eval(w, params))}};
}

bool replay_witness(const Json& w) {
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "heisenberg-closure") {
    const PrimeContext ctx(w.at("prime").get<std::uint64_t>());
    const DiagAuto alpha = diag_auto_from_json(w.at("automorphism"));
    const ClosureWitness cw{heis_element_from_json(w.at("s1"), ctx), heis_element_from_json(w.at("s2"), ctx),
                            heis_element_from_json(w.at("product"), ctx), trace_from_json(w.at("trace"), ctx)};
    return verify(cw, alpha, ctx);
  }
  if (kind == "heisenberg-normalization") {
    const PrimeContext ctx(w.at("prime").get<std::uint64_t>());
    const DiagAuto alpha = diag_auto_from_json(w.at("automorphism"));
    const NormalizationWitness nw{heis_element_from_json(w.at("outer"), ctx), heis_element_from_json(w.at("inner"), ctx),
                                  heis_element_from_json(w.at("conjugate"), ctx), trace_from_json(w.at("trace"), ctx)};
    return verify(nw, alpha, parse_direction(w.at("inner_direction").get<std::string>()), ctx);
  }
  if (kind == "shift-normalizer") {
    const ShiftSystem sys = shift_system_from_json(w.at("system"));
    NormalizerWitness nw{seq_element_from_json(sys, w.at("g")), seq_element_from_json(sys, w.at("u")),
                         seq_element_from_json(sys, w.at("conjugate")), {}};
    for (const auto& s : w.at("trace")) {
      SeqStep step{s.at("op").get<std::string>(), {}, seq_element_from_json(sys, s.at("result"))};
      for (const auto& o : s.at("operands")) step.operands.push_back(seq_element_from_json(sys, o));
      nw.trace.push_back(std::move(step));
    }
    return verify(sys, nw);
  }
  if (kind == "bs-kernel") {
    const BSParams params(w.at("p").get<std::uint64_t>(), w.at("q").get<std::uint64_t>());
    const BSWord word = BSWord::parse(w.at("word").get<std::string>());
    const BSWord reduced = britton_reduce(word, params);
    const SemiDirElement image = phi_eval(word, params);
    return reduced == BSWord::parse(w.at("reduced").get<std::string>()) && !reduced.empty() &&
           is_pinch_free(reduced, params) && image == semidir_from_json(w.at("image")) && is_identity(image);
  }
  throw InvalidInput("unknown witness kind '" + kind + "'");
}

AnalysisReport analyze_matrix(const Json& input, const Options& options) {
  if (!input.is_object() || !input.contains("matrix")) throw InvalidInput("input must be an object with \"matrix\"");
  const PrimeContext ctx(prime_of(input, "prime", options.prime), int_of(input, "precision", options.precision));
  const Matrix beta = matrix_from_json(input.at("matrix"));
  const long m_max = int_of(input, "m_max", 8);
  const long m_cap = int_of(input, "m_cap", 32);
  if (m_max < 0 || m_cap < 0) throw InvalidInput("m_max and m_cap must be non-negative");
  const Lattice lattice = input.contains("lattice") ? Lattice(matrix_from_json(input.at("lattice")).transpose())
                                                    : Lattice::standard(beta.rows());

  AnalysisReport r;
  r.case_name = input.value("name", std::string("analyze-matrix"));
  r.inputs = Json{{"prime", ctx.prime()}, {"precision", ctx.precision()}, {"matrix", to_json(beta)}};
  if (input.contains("lattice")) r.inputs["lattice"] = input.at("lattice");
  r.citations = {"expansive linear automorphisms: no eigenvalue of absolute value 1",
                 "slope decomposition into contraction, Levi and expansion subspaces"};

  const ExpansivenessResult e = is_expansive_linear(beta, ctx, true);
  const SlopeDecomposition& dec = *e.decomposition;
  Json coeffs = Json::array();
  const Polynomial chi = char_poly(beta);
  for (const auto& c : chi.coefficients()) coeffs.push_back(to_json(c));
  r.verdicts["char_poly"] = coeffs;
  r.verdicts["expansive"] = e.expansive;
  r.verdicts["slopes"] = slopes_json(e.polygon);
  r.verdicts["dims"] = Json::array({dec.contracting_dim, dec.levi_dim, dec.expanding_dim});
  Json blocks = Json::array();
  for (const auto& b : dec.blocks) {
    Json basis = Json::array();
    for (const auto& v : b.basis) basis.push_back(vector_json(v));
    blocks.push_back(Json{{"slope", to_json(b.slope)}, {"multiplicity", b.multiplicity}, {"basis", basis}});
  }
  r.verdicts["decomposition"] = Json{{"blocks", blocks},
                                     {"exact", dec.exact},
                                     {"invariance_residual", to_json(dec.invariance_residual)},
                                     {"residual_threshold", dec.residual_threshold}};
  if (!e.expansive) {
    r.verdicts["module_report"] = nullptr;
    r.verdicts["v0_shrinkage"] = nullptr;
    r.verdicts["tidy_lattice"] = nullptr;
    r.verdicts["skipped"] = "not expansive: the Levi subspace is nonzero";
    return r;
  }
  const ModuleReport mr = module_report(beta, ctx);
  r.verdicts["module_report"] = Json{{"scale_alpha", to_json(mr.scale_of_alpha)},
                                     {"scale_alpha_inverse", to_json(mr.scale_of_alpha_inverse)},
                                     {"ell_alpha", mr.ell_alpha},
                                     {"ell_alpha_inverse", mr.ell_alpha_inverse},
                                     {"series_bound", mr.series_bound}};
  r.verdicts["v0_shrinkage"] = v0_shrinkage(lattice, beta, ctx, m_max);
  try {
    const TidyResult t = tidy_lattice(lattice, beta, ctx, m_cap);
    Json basis = Json::array();
    for (std::size_t j = 0; j < t.lattice.basis().cols(); ++j) basis.push_back(vector_json(t.lattice.basis().column(j)));
    r.verdicts["tidy_lattice"] = Json{{"m", t.m}, {"basis", basis}};
  } catch (const CapExceeded& ex) {
    r.verdicts["tidy_lattice"] = Json{{"error", ex.what()}};
  }
  return r;
}

AnalysisReport analyze_heisenberg(const Json& input, const Options& options) {
  if (!input.is_object()) throw InvalidInput("input must be an object with carrier and exponents");
  const PrimeContext ctx(prime_of(input, "prime", options.prime));
  const DiagAuto alpha = diag_auto_from_json(input);
  SearchLimits limits;
  limits.depth = int_of(input, "depth", options.depth);

  AnalysisReport r;
  r.case_name = input.value("name", std::string("heisenberg"));
  r.inputs = Json{{"prime", ctx.prime()}, {"automorphism", to_json(alpha)}, {"depth", limits.depth}};
  r.citations = {"Heisenberg group law with cocycle x1 y2", "contraction groups of diagonal automorphisms"};

  bool expansive = true;
  for (std::size_t i = 0; i < alpha.exponents.size(); ++i) {
    // A fixed coordinate is discrete only as the centre of the quotient.
    if (alpha.exponents[i] == 0 && !(alpha.carrier == Carrier::HmodN && i == 2)) expansive = false;
  }
  r.verdicts["U_alpha"] = support(alpha, 1);
  r.verdicts["U_alpha_inverse"] = support(alpha, -1);
  r.verdicts["levi"] = support(alpha, 0);
  r.verdicts["expansive"] = expansive;

  const ClosureResult cr = product_set_closure_witness(alpha, ctx, limits);
  r.verdicts["product_set"] = Json{{"closed", cr.closed},
                                   {"pairs_examined", cr.pairs_examined},
                                   {"violating_pairs", cr.witnesses.size()},
                                   {"budget_exhausted", cr.budget_exhausted}};
  if (cr.first) r.witnesses.push_back(closure_witness_json(*cr.first, alpha, ctx));

  r.verdicts["central_series_check"] = central_series_check(alpha, ctx, limits);

  Json normalization = Json::object();
  try {
    const NormalizationResult nr = normalization_witness(alpha, ctx, limits);
    normalization["U_alpha_normalizes_U_alpha_inverse"] = false;
    normalization["U_alpha_inverse_normalizes_U_alpha"] = false;
    r.witnesses.push_back(normalization_witness_json(nr.u_moves_v, Direction::Backward, alpha, ctx));
    r.witnesses.push_back(normalization_witness_json(nr.v_moves_u, Direction::Forward, alpha, ctx));
  } catch (const NoWitness& ex) {
    normalization["no_witness"] = ex.what();
  }
  r.verdicts["normalization"] = normalization;

  if (input.contains("points")) {
    Json pts = Json::array();
    for (const auto& p : input.at("points")) {
      std::vector<Rational> coords;
      for (const auto& x : p) coords.push_back(rational_from_json(x));
      const HeisElement g = make_element(alpha.carrier, std::move(coords), ctx);
      pts.push_back(Json{{"point", to_json(g)},
                         {"U_alpha", contraction_membership(g, alpha, Direction::Forward, ctx)},
                         {"U_alpha_inverse", contraction_membership(g, alpha, Direction::Backward, ctx)},
                         {"levi", levi_membership(g, alpha, ctx)},
                         {"product_set", product_set_membership(g, alpha, ctx)}});
    }
    r.verdicts["points"] = pts;
  }
  return r;
}

AnalysisReport analyze_shift(const Json& input, const Options&) {
  const ShiftSystem sys = shift_system_from_json(input);
  AnalysisReport r;
  r.case_name = input.value("name", std::string("shift"));
  Json declaration = input;
  declaration.erase("name");
  declaration.erase("elements");
  r.inputs = Json{{"system", declaration}};
  r.citations = {"contraction groups and nub of shifts on sequence groups"};

  const ProductSubgroup ua = contraction_subgroup(sys, true);
  const ProductSubgroup ub = contraction_subgroup(sys, false);
  const ProductSubgroup u0 = nub(sys);
  r.verdicts["U_alpha"] = to_json(sys, ua);
  r.verdicts["U_alpha_inverse"] = to_json(sys, ub);
  r.verdicts["levi"] = to_json(sys, levi_subgroup(sys));
  r.verdicts["closure_U_alpha"] = to_json(sys, closure(sys, ua));
  r.verdicts["closure_U_alpha_inverse"] = to_json(sys, closure(sys, ub));
  r.verdicts["nub"] = to_json(sys, u0);
  r.verdicts["nub_is_whole_group"] = u0 == carrier_subgroup(sys);
  r.verdicts["nub_is_trivial"] = u0 == trivial_subgroup(sys);
  const TorsionReport t = torsion_divisible_report(sys);
  r.verdicts["torsion"] = Json{{"exponent", t.exponent},
                               {"divisible_part_trivial", t.divisible_trivial},
                               {"closure_of_torsion", to_json(sys, t.closure_of_torsion)},
                               {"torsion_times_nub", t.torsion_times_nub ? to_json(sys, *t.torsion_times_nub) : Json()},
                               {"closure_matches", t.closure_matches}};
  if (sys.splitting()) {
    try {
      const NormalizerWitness w = normalizer_witness(sys);
      r.verdicts["nub_normal"] = false;
      r.witnesses.push_back(shift_witness_json(w, sys, declaration));
    } catch (const NoWitness& ex) {
      r.verdicts["nub_normal"] = Json{{"no_witness", ex.what()}};
    }
  }
  if (input.contains("elements")) {
    Json els = Json::array();
    for (const auto& ej : input.at("elements")) {
      const SeqElement e = seq_element_from_json(sys, ej);
      els.push_back(Json{{"element", to_json(sys, e)},
                         {"U_alpha", membership(sys, e, ShiftClass::Contraction)},
                         {"U_alpha_inverse", membership(sys, e, ShiftClass::InverseContraction)},
                         {"levi", membership(sys, e, ShiftClass::Levi)},
                         {"nub", membership(sys, e, ShiftClass::Nub)}});
    }
    r.verdicts["elements"] = els;
  }
  return r;
}

Json probe_json(const DerivedProbe& probe) {
  Json levels = Json::array();
  for (const auto& level : probe.levels) {
    Json entries = Json::array();
    for (const auto& e : level) {
      entries.push_back(Json{{"word", e.word.to_string()},
                             {"reduced", e.reduced.to_string()},
                             {"nontrivial", e.nontrivial},
                             {"image", to_json(e.image)}});
    }
    levels.push_back(entries);
  }
  return Json{{"levels", levels},
              {"metabelian_image", probe.metabelian_image},
              {"kernel_witness_found", probe.kernel_witness_found}};
}

AnalysisReport analyze_bs(const Json& input, const Options& options) {
  const BSParams params(prime_of(input, "p", options.prime), prime_of(input, "q", 3));
  const int depth = int_of(input, "depth", options.depth);
  AnalysisReport r;
  r.case_name = input.value("name", std::string("bs"));
  r.inputs = Json{{"p", params.p()}, {"q", params.q()}, {"depth", depth}};
  r.citations = {"Baumslag-Solitar relation t a^p t^-1 = a^q", "Britton's lemma"};

  const RelationAudit audit = relation_audit(params);
  r.verdicts["relation_audit"] = Json{{"conjugation_identity", audit.conjugation_identity},
                                      {"a_image_integral", audit.a_image_integral},
                                      {"relator_reduces", audit.relator_reduces},
                                      {"relator_in_kernel", audit.relator_in_kernel},
                                      {"ok", audit.ok()}};
  const BetaReport beta = beta_expansiveness_report(params);
  Json samples = Json::array();
  for (const auto& s : beta.samples) {
    Json fu = Json::array(), fv = Json::array();
    for (const auto& v : s.forward_u) fu.push_back(to_json(v));
    for (const auto& v : s.forward_v) fv.push_back(to_json(v));
    samples.push_back(Json{{"point", to_json(s.point)},
                           {"forward_vp_u", fu},
                           {"forward_vq_v", fv},
                           {"U_beta", s.in_contraction},
                           {"U_beta_inverse", s.in_inverse_contraction},
                           {"levi", s.in_levi}});
  }
  r.verdicts["beta"] = Json{{"vp_ratio", beta.vp_ratio},
                            {"vq_ratio", beta.vq_ratio},
                            {"U_beta", "{(0,0,v)}"},
                            {"U_beta_inverse", "{(0,u,0)}"},
                            {"levi", "Z x 0 x 0"},
                            {"levi_discrete", beta.levi_discrete},
                            {"expansive", beta.expansive},
                            {"samples", samples}};

  std::vector<BSWord> gens;
  if (input.contains("generators")) {
    for (const auto& g : input.at("generators")) gens.push_back(BSWord::parse(g.get<std::string>()));
  } else {
    gens = {BSWord::a(), BSWord::t()};
  }
  const DerivedProbe probe = derived_series_probe(depth, gens, params);
  r.verdicts["derived_series"] = probe_json(probe);
  for (const auto& level : probe.levels) {
    for (const auto& e : level) {
      if (e.nontrivial && is_identity(e.image)) {
        r.witnesses.push_back(bs_kernel_witness_json(e.word, params));
        break;
      }
    }
    if (!r.witnesses.empty()) break;
  }

  if (input.contains("words")) {
    Json words = Json::array();
    for (const auto& wj : input.at("words")) {
      const BSWord w = BSWord::parse(wj.get<std::string>());
      const BSWord red = britton_reduce(w, params);
      words.push_back(Json{{"word", w.to_string()},
                           {"reduced", red.to_string()},
                           {"identity", red.empty()},
                           {"image", to_json(phi_eval(w, params))}});
    }
    r.verdicts["words"] = words;
  }
  return r;
}

}  // namespace padyn::cli
