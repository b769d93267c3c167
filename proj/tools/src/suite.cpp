#include <functional>

#include "padyn/errors.hpp"
#include "padyn_cli/report.hpp"

namespace padyn::cli {

namespace {

struct Case {
  const char* family;
  const char* name;
  std::function<void(AnalysisReport&, const Options&)> run;
};

HeisElement el(Carrier c, std::vector<Rational> coords, const PrimeContext& ctx) {
  return make_element(c, std::move(coords), ctx);
}

Json heis_json(const HeisPoint& g) { return vector_json({g.x, g.y, g.z}); }

void heisenberg_group_law(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  const Rational pinv = ctx.power(-1);
  const HeisPoint prod = heis_mul({1, 0, 0}, {0, 1, 0});
  const HeisPoint g{2, Rational(-1, 3), 5};
  const HeisQuotPoint q = quot_mul(HeisQuotPoint(0, pinv, 0, ctx), HeisQuotPoint(pinv, 0, 0, ctx), ctx);
  r.inputs = Json{{"prime", o.prime}};
  r.citations = {"Heisenberg group law with cocycle x1 y2"};
  r.verdicts["(1,0,0)(0,1,0)"] = heis_json(prod);
  r.verdicts["g g^-1"] = heis_json(heis_mul(g, heis_inv(g)));
  r.verdicts["quotient (0,1/p,0)(1/p,0,0)"] = to_string(q);
  r.expect(prod == HeisPoint{1, 1, 1}, "(1,0,0)(0,1,0) = (1,1,1)");
  r.expect(heis_mul(g, heis_inv(g)) == HeisPoint{0, 0, 0}, "g g^-1 = e");
  r.expect(q == HeisQuotPoint(pinv, pinv, 0, ctx), "quotient product has zero centre class");
}

void quotient_contraction_groups(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  const DiagAuto a{Carrier::HmodN, {1, -1, 0}};
  r.inputs = Json{{"prime", o.prime}, {"automorphism", to_json(a)}};
  r.citations = {"contraction groups of diagonal automorphisms of the Heisenberg quotient"};
  const HeisElement x = el(Carrier::HmodN, {5, 0, 0}, ctx);
  const HeisElement y = el(Carrier::HmodN, {0, 1, 0}, ctx);
  const HeisElement z = el(Carrier::HmodN, {0, 0, ctx.power(-1)}, ctx);
  const bool x_fwd = contraction_membership(x, a, Direction::Forward, ctx);
  const bool y_fwd = contraction_membership(y, a, Direction::Forward, ctx);
  const bool z_fwd = contraction_membership(z, a, Direction::Forward, ctx);
  const bool z_bwd = contraction_membership(z, a, Direction::Backward, ctx);
  const bool z_levi = levi_membership(z, a, ctx);
  r.verdicts["(5,0,0) in U_alpha"] = x_fwd;
  r.verdicts["(0,1,0) in U_alpha"] = y_fwd;
  r.verdicts["(0,0,1/p) in U_alpha"] = z_fwd;
  r.verdicts["(0,0,1/p) in U_alpha_inverse"] = z_bwd;
  r.verdicts["(0,0,1/p) in levi"] = z_levi;
  r.expect(x_fwd && !y_fwd && !z_fwd && !z_bwd && z_levi, "memberships match U = {(x,0,0)} and M = {(0,0,z)}");
}

void quotient_product_set_not_closed(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  const DiagAuto a{Carrier::HmodN, {1, -1, 0}};
  SearchLimits limits;
  limits.depth = 2;
  r.inputs = Json{{"prime", o.prime}, {"automorphism", to_json(a)}, {"depth", limits.depth}};
  r.citations = {"U_alpha U_alpha^-1 = {(x, y, xy + Z_p)} is not a subgroup of the Heisenberg quotient"};
  const ClosureResult cr = product_set_closure_witness(a, ctx, limits);
  const Rational pinv = ctx.power(-1);
  const HeisElement s1 = el(Carrier::HmodN, {0, pinv, 0}, ctx);
  const HeisElement s2 = el(Carrier::HmodN, {pinv, 0, 0}, ctx);
  const ClosureWitness* expected = nullptr;
  for (const auto& w : cr.witnesses) {
    if (w.s1 == s1 && w.s2 == s2) expected = &w;
  }
  r.verdicts["closed"] = cr.closed;
  r.verdicts["violating_pairs"] = cr.witnesses.size();
  r.verdicts["expected_pair_found"] = expected != nullptr;
  r.expect(!cr.closed && cr.first.has_value(), "the product set is not closed under multiplication");
  r.expect(expected != nullptr, "(0,1/p,0+Z_p)(1/p,0,0+Z_p) is among the violating pairs");
  if (cr.first) r.witnesses.push_back(closure_witness_json(*cr.first, a, ctx));
  if (expected) {
    r.verdicts["expected_product"] = to_json(expected->product);
    r.expect(expected->product == el(Carrier::HmodN, {pinv, pinv, 0}, ctx), "product is (1/p,1/p,0+Z_p)");
    r.witnesses.push_back(closure_witness_json(*expected, a, ctx));
  }
}

void product_normalization(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  const DiagAuto a{Carrier::HxH, {1, -2, -1, 2, -1, 1}};
  r.inputs = Json{{"prime", o.prime}, {"automorphism", to_json(a)}};
  r.citations = {"on H x H neither U_alpha nor U_alpha^-1 normalizes the other"};
  const NormalizationResult nr = normalization_witness(a, ctx);
  const bool ok1 = verify(nr.u_moves_v, a, Direction::Backward, ctx);
  const bool ok2 = verify(nr.v_moves_u, a, Direction::Forward, ctx);
  r.verdicts["U_alpha_normalizes_U_alpha_inverse"] = !ok1;
  r.verdicts["U_alpha_inverse_normalizes_U_alpha"] = !ok2;
  r.expect(ok1 && ok2, "witnesses verify in both directions");
  r.witnesses.push_back(normalization_witness_json(nr.u_moves_v, Direction::Backward, a, ctx));
  r.witnesses.push_back(normalization_witness_json(nr.v_moves_u, Direction::Forward, a, ctx));
}

void central_series(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  const DiagAuto a1{Carrier::H, {1, -2, -1}};
  const DiagAuto contractive{Carrier::H, {1, 1, 2}};
  const DiagAuto neutral_centre{Carrier::H, {1, -1, 0}};
  const DiagAuto quotient{Carrier::HmodN, {1, -1, 0}};
  r.inputs = Json{{"prime", o.prime}};
  r.citations = {"G = U_alpha U_alpha^-1 when every central series layer splits"};
  const bool c1 = central_series_check(a1, ctx);
  const ClosureResult cr1 = product_set_closure_witness(a1, ctx);
  const bool c2 = central_series_check(contractive, ctx);
  const bool c3 = central_series_check(neutral_centre, ctx);
  const bool c4 = central_series_check(quotient, ctx);
  const ClosureResult cr4 = product_set_closure_witness(quotient, ctx);
  r.verdicts["H (1,-2,-1)"] = Json{{"central_series_check", c1}, {"product_set_closed", cr1.closed}};
  r.verdicts["H (1,1,2)"] = Json{{"central_series_check", c2}};
  r.verdicts["H (1,-1,0)"] = Json{{"central_series_check", c3}};
  r.verdicts["HmodN (1,-1,0)"] = Json{{"central_series_check", c4}, {"product_set_closed", cr4.closed}};
  r.expect(c1 && cr1.closed, "(1,-2,-1) on H splits and the product set is closed");
  r.expect(c2, "contractive (1,1,2) splits");
  r.expect(!c3, "(1,-1,0) on H has centre exponent 0");
  r.expect(!c4 && !cr4.closed, "(1,-1,0) on the quotient has a violating pair");
  if (cr4.first) r.witnesses.push_back(closure_witness_json(*cr4.first, quotient, ctx));
}

void one_parameter_subgroups(AnalysisReport& r, const Options&) {
  const HeisPoint g{1, 1, 1};
  const HeisPoint two = one_param(g, 2);
  const Matrix e = exp_nilpotent(Matrix::from_rows({{0, 1}, {0, 0}}));
  bool homomorphism = true;
  const std::vector<Rational> grid{Rational(-2), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(3, 2)};
  const HeisPoint h{Rational(2, 3), Rational(-5), Rational(7, 2)};
  for (const auto& s : grid)
    for (const auto& t : grid) homomorphism = homomorphism && one_param(h, s + t) == heis_mul(one_param(h, s), one_param(h, t));
  const bool centre_adjoint = adjoint({0, 0, 5}) == Matrix::identity(3);
  const bool noncentral_adjoint = adjoint({1, 0, 0}) == Matrix::identity(3);
  r.citations = {"one-parameter subgroups t -> exp(t log g)", "centre equals the kernel of Ad"};
  r.verdicts["one_param((1,1,1), 2)"] = heis_json(two);
  r.verdicts["exp([[0,1],[0,0]])"] = to_json(e);
  r.verdicts["homomorphism_on_grid"] = homomorphism;
  r.verdicts["adjoint((0,0,5)) is identity"] = centre_adjoint;
  r.verdicts["adjoint((1,0,0)) is identity"] = noncentral_adjoint;
  r.expect(two == heis_mul(g, g), "one_param(g, 2) = g g");
  r.expect(one_param(g, 1) == g, "one_param(g, 1) = g");
  r.expect(e == Matrix::from_rows({{1, 1}, {0, 1}}), "exp of the 2x2 nilpotent");
  r.expect(homomorphism, "one_param(h, s + t) = one_param(h, s) one_param(h, t)");
  r.expect(centre_adjoint && !noncentral_adjoint, "Ad(g) = 1 exactly on the centre");
}

Json plain_decl(std::uint64_t p, const char* left, const char* right, const char* shift = "right") {
  return Json{{"F", "C" + std::to_string(p)}, {"left", left}, {"right", right}, {"shift", shift}};
}

void full_shift_nub(AnalysisReport& r, const Options& o) {
  if (o.prime > 64) throw InvalidInput("shift cases need p <= 64");
  const Json decl = plain_decl(o.prime, "full", "full");
  const ShiftSystem sys = shift_system_from_json(decl);
  r.inputs = Json{{"system", decl}};
  r.citations = {"the right shift of C_p^Z has nub equal to the whole group"};
  const ProductSubgroup u0 = nub(sys);
  const SeqElement delta = SeqElement::delta(0, 1, 0);
  r.verdicts["nub"] = to_json(sys, u0);
  r.verdicts["nub_is_whole_group"] = u0 == carrier_subgroup(sys);
  r.verdicts["delta_0 in U_alpha"] = membership(sys, delta, ShiftClass::Contraction);
  r.verdicts["delta_0 in U_alpha_inverse"] = membership(sys, delta, ShiftClass::InverseContraction);
  r.expect(u0 == carrier_subgroup(sys), "nub = C_p^Z");
  r.expect(membership(sys, delta, ShiftClass::Contraction) && membership(sys, delta, ShiftClass::InverseContraction),
           "finitely supported elements contract both ways");
  const SeqElement periodic(0, {}, Tail({0, 1}), Tail({0, 1}));
  const auto approx = density_approximants(sys, periodic, 4);
  r.verdicts["density_approximants"] = approx.size();
}

void contraction_case_c(AnalysisReport& r, const Options& o) {
  const Json decl = plain_decl(o.prime, "restricted", "full");
  const ShiftSystem sys = shift_system_from_json(decl);
  r.inputs = Json{{"system", decl}};
  r.citations = {"C_p^(-N) x C_p^N0 with the right shift is a contraction group"};
  const bool all = contraction_subgroup(sys, true) == carrier_subgroup(sys);
  const SeqElement sample(-3, {1, 0, 1, 1}, Tail::constant(0), Tail({1, 0}));
  r.verdicts["U_alpha_is_whole_group"] = all;
  r.verdicts["sample in U_alpha"] = membership(sys, sample, ShiftClass::Contraction);
  r.expect(all && membership(sys, sample, ShiftClass::Contraction), "every element contracts");
}

void contraction_case_d(AnalysisReport& r, const Options& o) {
  const Json decl = plain_decl(o.prime, "restricted", "full", "left");
  const ShiftSystem sys = shift_system_from_json(decl);
  r.inputs = Json{{"system", decl}};
  r.citations = {"C_p^(-N) x C_p^N0 with the left shift: the inverse is a contraction"};
  const bool inverse_all = contraction_subgroup(sys, false) == carrier_subgroup(sys);
  const bool forward_trivial = contraction_subgroup(sys, true) == trivial_subgroup(sys);
  r.verdicts["U_alpha_inverse_is_whole_group"] = inverse_all;
  r.verdicts["U_alpha_is_trivial"] = forward_trivial;
  r.expect(inverse_all && forward_trivial, "left shift contracts under the inverse only");
}

void s3_nub_not_normal(AnalysisReport& r, const Options&) {
  const Json decl{{"F", "S3"}, {"split", {{"N", {"e", "r", "r2"}}, {"H", {"e", "s"}}}}, {"left", "restricted"},
                  {"right", "full"}, {"semidirect", true}, {"shift", "right"}};
  const ShiftSystem sys = shift_system_from_json(decl);
  r.inputs = Json{{"system", decl}};
  r.citations = {"the nub need not have an open normalizer: F = C3 x| C2"};
  ProductSubgroup h_z = trivial_subgroup(sys);
  h_z.parts[1].left = h_z.parts[1].right = sys.components()[1].image;
  const ProductSubgroup u0 = nub(sys);
  r.verdicts["nub"] = to_json(sys, u0);
  r.verdicts["nub_is_H^Z"] = u0 == h_z;
  const SeqElement h(0, {}, Tail::constant(3), Tail::constant(3));
  r.verdicts["constant s in U_alpha_inverse"] = membership(sys, h, ShiftClass::InverseContraction);
  r.verdicts["constant s in levi"] = membership(sys, h, ShiftClass::Levi);
  r.expect(u0 == h_z, "nub = H^Z");
  r.expect(!membership(sys, h, ShiftClass::InverseContraction) && membership(sys, h, ShiftClass::Levi),
           "a constant H-sequence is in the Levi factor but not in U_alpha^-1");
  const NormalizerWitness w = normalizer_witness(sys);
  const bool ok = verify(sys, w);
  r.verdicts["nub_normal"] = !ok;
  r.expect(ok, "normalizer witness verifies");
  r.witnesses.push_back(shift_witness_json(w, sys, decl));
}

void torsion_full_shift(AnalysisReport& r, const Options& o) {
  const Json decl = plain_decl(o.prime, "full", "full");
  const ShiftSystem sys = shift_system_from_json(decl);
  r.inputs = Json{{"system", decl}};
  r.citations = {"closure of the torsion part equals T_alpha U_0"};
  const TorsionReport t = torsion_divisible_report(sys);
  r.verdicts["exponent"] = t.exponent;
  r.verdicts["divisible_part_trivial"] = t.divisible_trivial;
  r.verdicts["closure_of_torsion"] = to_json(sys, t.closure_of_torsion);
  r.verdicts["closure_matches"] = t.closure_matches;
  r.expect(t.exponent == static_cast<long>(o.prime), "exponent is p");
  r.expect(t.divisible_trivial && t.closure_matches, "closure(T_alpha) = T_alpha U_0");
}

void mirrored_product_nub(AnalysisReport& r, const Options& o) {
  const Json decl{{"F", "C" + std::to_string(o.prime)},
                  {"components", {{{"left", "restricted"}, {"right", "full"}}, {{"left", "full"}, {"right", "restricted"}}}},
                  {"shift", "right"}};
  const ShiftSystem sys = shift_system_from_json(decl);
  r.inputs = Json{{"system", decl}};
  r.citations = {"two mirrored restricted products: U_alpha and U_alpha^-1 are closed"};
  const ProductSubgroup u0 = nub(sys);
  r.verdicts["nub"] = to_json(sys, u0);
  r.verdicts["nub_is_trivial"] = u0 == trivial_subgroup(sys);
  r.expect(u0 == trivial_subgroup(sys), "nub is trivial");
}

void relation_audit_case(AnalysisReport& r, std::uint64_t p, std::uint64_t q) {
  const BSParams params(p, q);
  const RelationAudit a = relation_audit(params);
  r.inputs = Json{{"p", p}, {"q", q}};
  r.citations = {"(1,0,0)(0,p,p)(-1,0,0) = (0,q,q) in Z x| (Q_p x Q_q)"};
  r.verdicts["conjugation_identity"] = a.conjugation_identity;
  r.verdicts["a_image_integral"] = a.a_image_integral;
  r.verdicts["relator_reduces"] = a.relator_reduces;
  r.verdicts["relator_in_kernel"] = a.relator_in_kernel;
  r.verdicts["ok"] = a.ok();
  r.expect(a.ok(), "relation audit");
}

void relator_reduces(AnalysisReport& r, const Options&) {
  const BSParams params(2, 3);
  const BSWord w = relator(params);
  const BSWord red = britton_reduce(w, params);
  r.inputs = Json{{"p", 2}, {"q", 3}, {"word", w.to_string()}};
  r.citations = {"Britton reduction of the defining relator"};
  r.verdicts["reduced"] = red.to_string();
  r.verdicts["image"] = to_json(phi_eval(w, params));
  r.expect(red.empty() && is_identity(phi_eval(w, params)), "relator reduces to the empty word");
}

void kernel_witness(AnalysisReport& r, const Options&) {
  const BSParams params(2, 3);
  const BSWord a = BSWord::a(), t = BSWord::t();
  const BSWord w = commutator(a, t * a * t.inverse());
  const BSWord red = britton_reduce(w, params);
  r.inputs = Json{{"p", 2}, {"q", 3}, {"word", w.to_string()}};
  r.citations = {"phi is not injective: a nontrivial commutator with trivial image"};
  r.verdicts["reduced"] = red.to_string();
  r.verdicts["pinch_free"] = is_pinch_free(red, params);
  r.verdicts["image"] = to_json(phi_eval(w, params));
  r.expect(!red.empty() && is_pinch_free(red, params), "[a, t a t^-1] is nontrivial");
  r.expect(is_identity(phi_eval(w, params)), "[a, t a t^-1] maps to the identity");
  r.witnesses.push_back(bs_kernel_witness_json(w, params));
}

void derived_series_contrast(AnalysisReport& r, const Options&) {
  const BSParams params(2, 3);
  const DerivedProbe probe = derived_series_probe(2, {BSWord::a(), BSWord::t()}, params);
  const DerivedProbe powers = derived_series_probe(1, {BSWord::a(), BSWord::a(3)}, params);
  bool level2_nontrivial = false;
  for (const auto& e : probe.levels[2]) level2_nontrivial = level2_nontrivial || e.nontrivial;
  bool powers_trivial = true;
  for (const auto& e : powers.levels[1]) powers_trivial = powers_trivial && !e.nontrivial;
  r.inputs = Json{{"p", 2}, {"q", 3}, {"depth", 2}, {"generators", {"a", "t"}}};
  r.citations = {"BS(p,q) is not solvable while its image is metabelian"};
  r.verdicts["probe"] = probe_json(probe);
  r.verdicts["level_2_nontrivial"] = level2_nontrivial;
  r.verdicts["powers_of_a_commute"] = powers_trivial;
  r.expect(level2_nontrivial, "some second derived commutator is nontrivial");
  r.expect(probe.metabelian_image, "second derived commutators have trivial image");
  r.expect(powers_trivial, "[a, a^3] is trivial");
}

void beta_expansive(AnalysisReport& r, const Options&) {
  const BSParams params(2, 3);
  const BetaReport b = beta_expansiveness_report(params);
  r.inputs = Json{{"p", 2}, {"q", 3}};
  r.citations = {"conjugation by (1,0,0) is expansive: its Levi factor Z x 0 x 0 is discrete"};
  r.verdicts["vp_ratio"] = b.vp_ratio;
  r.verdicts["vq_ratio"] = b.vq_ratio;
  r.verdicts["expansive"] = b.expansive;
  r.expect(b.vp_ratio == -1 && b.vq_ratio == 1, "v_p(q/p) = -1 and v_q(q/p) = 1");
  r.expect(b.expansive && b.levi_discrete, "expansive with discrete Levi factor");
}

Matrix diag(std::initializer_list<Rational> d) { return Matrix::diagonal(std::vector<Rational>(d)); }

void linear_case(AnalysisReport& r, const Options& o, const Matrix& m, const Json& extra,
                 const std::function<void(AnalysisReport&, const Json&)>& check) {
  Json input = extra;
  input["matrix"] = to_json(m);
  input["prime"] = o.prime;
  input["precision"] = o.precision;
  const std::string name = r.case_name;
  r = analyze_matrix(input, o);
  r.case_name = name;
  check(r, r.verdicts);
}

void diag_p_pinv(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  linear_case(r, o, diag({ctx.power(1), ctx.power(-1)}), Json::object(), [](AnalysisReport& rr, const Json& v) {
    rr.expect(v["expansive"] == true, "expansive");
    rr.expect(v["slopes"] == Json::parse("[[1,1,1],[-1,1,1]]"), "slopes [[1,1,1],[-1,1,1]]");
    rr.expect(v["module_report"]["ell_alpha"] == 1 && v["module_report"]["ell_alpha_inverse"] == 1, "ell = (1,1)");
    rr.expect(v["module_report"]["series_bound"] == 2, "series bound 2");
    rr.expect(v["v0_shrinkage"] == Json::parse("[0,1,2,3,4,5,6,7,8]"), "v0 shrinkage [0..8]");
  });
}

void diag_p_pm2(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  linear_case(r, o, diag({ctx.power(1), ctx.power(-2)}), Json::object(), [](AnalysisReport& rr, const Json& v) {
    rr.expect(v["module_report"]["ell_alpha"] == 1 && v["module_report"]["ell_alpha_inverse"] == 2, "ell = (1,2)");
    rr.expect(v["module_report"]["series_bound"] == 3, "series bound 3");
  });
}

void unipotent(AnalysisReport& r, const Options& o) {
  linear_case(r, o, Matrix::from_rows({{1, 1}, {0, 1}}), Json::object(), [](AnalysisReport& rr, const Json& v) {
    rr.expect(v["expansive"] == false, "unipotent matrices are not expansive");
  });
}

void heisenberg_linearization(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  linear_case(r, o, diag({ctx.power(1), ctx.power(-2), ctx.power(-1)}), Json::object(),
              [](AnalysisReport& rr, const Json& v) {
                rr.expect(v["dims"] == Json::parse("[1,0,2]"), "dims (1,0,2)");
              });
}

void tidy_shear(AnalysisReport& r, const Options& o) {
  const PrimeContext ctx(o.prime);
  const Json extra{{"lattice", Json::array({Json::array({"1", "1"}), Json::array({"0", std::to_string(o.prime)})})}};
  const Json expected = Json::array({Json::array({format_rational(ctx.power(2)), "0"}),
                                     Json::array({"0", format_rational(ctx.power(1))})});
  linear_case(r, o, diag({ctx.power(1), ctx.power(-1)}), extra, [expected](AnalysisReport& rr, const Json& v) {
    rr.expect(v["tidy_lattice"]["m"] == 1, "tidy after one step");
    rr.expect(v["tidy_lattice"]["basis"] == expected, "tidy lattice p^2 Z_p + p Z_p");
  });
}

const std::vector<Case>& cases() {
  static const std::vector<Case> all{
      {"heisenberg", "heisenberg-group-law", heisenberg_group_law},
      {"heisenberg", "quotient-contraction-groups", quotient_contraction_groups},
      {"heisenberg", "Hei1-not-subgroup", quotient_product_set_not_closed},
      {"heisenberg", "product-normalization", product_normalization},
      {"heisenberg", "central-series-split", central_series},
      {"heisenberg", "one-parameter-subgroups", one_parameter_subgroups},
      {"shift", "full-shift-nub", full_shift_nub},
      {"shift", "contraction-right-shift", contraction_case_c},
      {"shift", "contraction-left-shift", contraction_case_d},
      {"shift", "notnormal-S3", s3_nub_not_normal},
      {"shift", "torsion-full-shift", torsion_full_shift},
      {"shift", "mirrored-product-nub", mirrored_product_nub},
      {"bs", "relation-audit", [](AnalysisReport& r, const Options&) { relation_audit_case(r, 2, 3); }},
      {"bs", "relation-audit-3-5", [](AnalysisReport& r, const Options&) { relation_audit_case(r, 3, 5); }},
      {"bs", "relation-audit-2-5", [](AnalysisReport& r, const Options&) { relation_audit_case(r, 2, 5); }},
      {"bs", "relator-reduces", relator_reduces},
      {"bs", "kernel-witness", kernel_witness},
      {"bs", "derived-series-contrast", derived_series_contrast},
      {"bs", "beta-expansive", beta_expansive},
      {"linear", "diag-p-pinv", diag_p_pinv},
      {"linear", "diag-p-pm2", diag_p_pm2},
      {"linear", "unipotent", unipotent},
      {"linear", "heisenberg-linearization", heisenberg_linearization},
      {"linear", "tidy-shear", tidy_shear},
  };
  return all;
}

void check_family(const std::string& family) {
  if (family != "all" && family != "heisenberg" && family != "shift" && family != "bs" && family != "linear") {
    throw InvalidInput("unknown suite '" + family + "' (expected all, heisenberg, shift, bs or linear)");
  }
}

}  // namespace

std::vector<std::string> suite_case_names(const std::string& family) {
  check_family(family);
  std::vector<std::string> out;
  for (const auto& c : cases()) {
    if (family == "all" || family == c.family) out.emplace_back(c.name);
  }
  return out;
}

std::vector<AnalysisReport> run_suite(const std::string& family, const std::string& case_name, const Options& options) {
  check_family(family);
  std::vector<AnalysisReport> out;
  for (const auto& c : cases()) {
    if (family != "all" && family != c.family) continue;
    if (!case_name.empty() && case_name != c.name) continue;
    AnalysisReport r;
    r.case_name = c.name;
    c.run(r, options);
    for (const auto& w : r.witnesses) r.expect(replay_witness(w), "witness " + w["kind"].get<std::string>() + " replays");
    out.push_back(std::move(r));
  }
  if (!case_name.empty() && out.empty()) throw InvalidInput("no case named '" + case_name + "' in suite " + family);
  return out;
}

Json suite_json(const std::string& family, const std::vector<AnalysisReport>& reports, const Options& options) {
  Json cases_json = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    cases_json.push_back(r.to_json());
    passed += r.passed() ? 1 : 0;
  }
  return Json{{"suite", family},
              {"options", {{"prime", options.prime}, {"precision", options.precision}, {"depth", options.depth}}},
              {"cases", cases_json},
              {"summary", {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}}};
}

}  // namespace padyn::cli
