#include "padyn/heisenberg.hpp"

#include "padyn/errors.hpp"

namespace padyn {

HeisPoint heis_mul(const HeisPoint& a, const HeisPoint& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
}

HeisPoint heis_inv(const HeisPoint& a) { return {-a.x, -a.y, -a.z + a.x * a.y}; }

std::string to_string(const HeisPoint& a) {
  return "(" + format_rational(a.x) + ", " + format_rational(a.y) + ", " + format_rational(a.z) + ")";
}

HeisQuotPoint::HeisQuotPoint(Rational x, Rational y, const Rational& z, const PrimeContext& ctx)
    : x_(std::move(x)), y_(std::move(y)), z_(fractional_part(z, ctx)), p_(ctx.prime()) {}

HeisQuotPoint quot_mul(const HeisQuotPoint& a, const HeisQuotPoint& b, const PrimeContext& ctx) {
  return HeisQuotPoint(a.x() + b.x(), a.y() + b.y(), a.z_class() + b.z_class() + a.x() * b.y(), ctx);
}

HeisQuotPoint quot_inv(const HeisQuotPoint& a, const PrimeContext& ctx) {
  return HeisQuotPoint(-a.x(), -a.y(), -a.z_class() + a.x() * a.y(), ctx);
}

HeisQuotPoint project(const HeisPoint& a, const PrimeContext& ctx) { return HeisQuotPoint(a.x, a.y, a.z, ctx); }

std::string to_string(const HeisQuotPoint& a) {
  return "(" + format_rational(a.x()) + ", " + format_rational(a.y()) + ", " + format_rational(a.z_class()) +
         "+Z_p)";
}

std::string to_string(Carrier c) {
  switch (c) {
    case Carrier::H: return "H";
    case Carrier::HmodN: return "HmodN";
    case Carrier::HxH: return "HxH";
  }
  return "?";
}

Carrier parse_carrier(const std::string& name) {
  if (name == "H") return Carrier::H;
  if (name == "HmodN") return Carrier::HmodN;
  if (name == "HxH") return Carrier::HxH;
  throw InvalidInput("unknown carrier '" + name + "' (expected H, HmodN or HxH)");
}

std::size_t coordinate_count(Carrier c) { return c == Carrier::HxH ? 6 : 3; }

namespace {

void check_shape(const HeisElement& g) {
  if (g.coords.size() != coordinate_count(g.carrier)) throw InvalidInput("element has the wrong number of coordinates");
}

void check_pair(const HeisElement& g, const DiagAuto& alpha) {
  check_shape(g);
  if (g.carrier != alpha.carrier) throw InvalidInput("element and automorphism live on different carriers");
}

}  // namespace

void DiagAuto::validate() const {
  if (exponents.size() != coordinate_count(carrier)) {
    throw InvalidInput("carrier " + to_string(carrier) + " needs " + std::to_string(coordinate_count(carrier)) +
                       " exponents");
  }
  for (std::size_t f = 0; f < exponents.size(); f += 3) {
    if (exponents[f] + exponents[f + 1] != exponents[f + 2]) {
      throw InvalidInput("exponents must satisfy e_x + e_y = e_z to respect the group law");
    }
  }
  if (carrier == Carrier::HmodN && exponents[2] != 0) {
    throw InvalidInput("the quotient by Z_p needs centre exponent 0");
  }
}

DiagAuto DiagAuto::inverse() const {
  DiagAuto out = *this;
  for (auto& e : out.exponents) e = -e;
  return out;
}

HeisElement identity_element(Carrier c) { return {c, std::vector<Rational>(coordinate_count(c), Rational(0))}; }

HeisElement make_element(Carrier c, std::vector<Rational> coords, const PrimeContext& ctx) {
  HeisElement g{c, std::move(coords)};
  check_shape(g);
  if (c == Carrier::HmodN) g.coords[2] = fractional_part(g.coords[2], ctx);
  return g;
}

HeisElement mul(const HeisElement& a, const HeisElement& b, const PrimeContext& ctx) {
  check_shape(a);
  check_shape(b);
  if (a.carrier != b.carrier) throw InvalidInput("cannot multiply elements of different carriers");
  std::vector<Rational> c(a.coords.size());
  for (std::size_t f = 0; f < c.size(); f += 3) {
    c[f] = a.coords[f] + b.coords[f];
    c[f + 1] = a.coords[f + 1] + b.coords[f + 1];
    c[f + 2] = a.coords[f + 2] + b.coords[f + 2] + a.coords[f] * b.coords[f + 1];
  }
  return make_element(a.carrier, std::move(c), ctx);
}

HeisElement inv(const HeisElement& a, const PrimeContext& ctx) {
  check_shape(a);
  std::vector<Rational> c(a.coords.size());
  for (std::size_t f = 0; f < c.size(); f += 3) {
    c[f] = -a.coords[f];
    c[f + 1] = -a.coords[f + 1];
    c[f + 2] = -a.coords[f + 2] + a.coords[f] * a.coords[f + 1];
  }
  return make_element(a.carrier, std::move(c), ctx);
}

HeisElement apply(const DiagAuto& alpha, const HeisElement& g, long n, const PrimeContext& ctx) {
  check_pair(g, alpha);
  std::vector<Rational> c = g.coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= ctx.power(n * alpha.exponents[i]);
  return make_element(g.carrier, std::move(c), ctx);
}

std::string to_string(const HeisElement& a) {
  std::string out;
  for (std::size_t f = 0; f < a.coords.size(); f += 3) {
    if (f > 0) out += " x ";
    out += "(" + format_rational(a.coords[f]) + ", " + format_rational(a.coords[f + 1]) + ", " +
           format_rational(a.coords[f + 2]) + (a.carrier == Carrier::HmodN ? "+Z_p)" : ")");
  }
  return out;
}

bool contraction_membership(const HeisElement& g, const DiagAuto& alpha, Direction direction,
                            const PrimeContext&) {
  check_pair(g, alpha);
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (g.coords[i] == 0) continue;
    const long e = alpha.exponents[i];
    if (direction == Direction::Forward ? e <= 0 : e >= 0) return false;
  }
  return true;
}

bool levi_membership(const HeisElement& g, const DiagAuto& alpha, const PrimeContext&) {
  check_pair(g, alpha);
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (g.coords[i] != 0 && alpha.exponents[i] != 0) return false;
  }
  return true;
}

bool product_set_membership(const HeisElement& g, const DiagAuto& alpha, const PrimeContext& ctx) {
  check_pair(g, alpha);
  for (std::size_t f = 0; f < g.coords.size(); f += 3) {
    const Rational& x = g.coords[f];
    const Rational& y = g.coords[f + 1];
    const long ex = alpha.exponents[f], ey = alpha.exponents[f + 1], ez = alpha.exponents[f + 2];
    if ((ex == 0 && x != 0) || (ey == 0 && y != 0)) return false;
    if (ez != 0) continue;
    // u w = g forces the u-part of x and the w-part of y; the centre must
    // then match their cocycle term.
    const Rational xu = ex > 0 ? x : Rational(0);
    const Rational yw = ey < 0 ? y : Rational(0);
    const Rational d = g.coords[f + 2] - xu * yw;
    if (g.carrier == Carrier::HmodN ? fractional_part(d, ctx) != 0 : d != 0) return false;
  }
  return true;
}

std::vector<Rational> search_grid(const PrimeContext& ctx, int depth) {
  if (depth < 0) throw InvalidInput("search depth must be non-negative");
  std::vector<Rational> grid{Rational(0)};
  for (int k = 0; k <= depth; ++k) {
    grid.push_back(ctx.power(-k));
    grid.push_back(-ctx.power(-k));
  }
  return grid;
}

namespace {

// Elements supported on the coordinates contracted in `direction`, in
// odometer order over the grid (last free coordinate fastest).
std::vector<HeisElement> subgroup_grid(const DiagAuto& alpha, Direction direction,
                                       const std::vector<Rational>& grid, const PrimeContext& ctx,
                                       std::size_t cap) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < alpha.exponents.size(); ++i) {
    const long e = alpha.exponents[i];
    if (direction == Direction::Forward ? e > 0 : e < 0) free.push_back(i);
  }
  std::vector<HeisElement> out;
  std::vector<std::size_t> idx(free.size(), 0);
  while (out.size() < cap) {
    HeisElement g = identity_element(alpha.carrier);
    for (std::size_t k = 0; k < free.size(); ++k) g.coords[free[k]] = grid[idx[k]];
    out.push_back(make_element(alpha.carrier, std::move(g.coords), ctx));
    std::size_t k = free.size();
    while (k > 0) {
      --k;
      if (++idx[k] < grid.size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (free.empty()) return out;
  }
  return out;
}

struct ProductElement {
  HeisElement u, w, s;
};

}  // namespace

ClosureResult product_set_closure_witness(const DiagAuto& alpha, const PrimeContext& ctx, const SearchLimits& limits,
                                          const CancellationToken& cancel) {
  alpha.validate();
  const auto grid = search_grid(ctx, limits.depth);
  const auto us = subgroup_grid(alpha, Direction::Forward, grid, ctx, limits.pair_budget);
  const auto ws = subgroup_grid(alpha, Direction::Backward, grid, ctx, limits.pair_budget);
  std::vector<ProductElement> s;
  for (const auto& u : us) {
    for (const auto& w : ws) {
      if (s.size() >= limits.pair_budget) break;
      s.push_back({u, w, mul(u, w, ctx)});
    }
  }
  ClosureResult out;
  for (const auto& a : s) {
    cancel.poll();
    for (const auto& b : s) {
      if (out.pairs_examined >= limits.pair_budget) {
        out.budget_exhausted = true;
        return out;
      }
      ++out.pairs_examined;
      HeisElement prod = mul(a.s, b.s, ctx);
      if (product_set_membership(prod, alpha, ctx)) continue;
      out.closed = false;
      ClosureWitness w{a.s, b.s, prod,
                       {{"mul", {a.u, a.w}, a.s}, {"mul", {b.u, b.w}, b.s}, {"mul", {a.s, b.s}, prod}}};
      if (!out.first) out.first = w;
      if (out.witnesses.size() < limits.witness_cap) out.witnesses.push_back(std::move(w));
    }
  }
  return out;
}

namespace {

bool replay(const std::vector<TraceStep>& trace, const PrimeContext& ctx) {
  for (const auto& step : trace) {
    HeisElement r;
    if (step.op == "mul" && step.operands.size() == 2) {
      r = mul(step.operands[0], step.operands[1], ctx);
    } else if (step.op == "inv" && step.operands.size() == 1) {
      r = inv(step.operands[0], ctx);
    } else {
      return false;
    }
    if (!(r == step.result)) return false;
  }
  return true;
}

}  // namespace

bool verify(const ClosureWitness& w, const DiagAuto& alpha, const PrimeContext& ctx) {
  if (w.trace.size() != 3 || !replay(w.trace, ctx)) return false;
  const auto& t = w.trace;
  if (!contraction_membership(t[0].operands[0], alpha, Direction::Forward, ctx) ||
      !contraction_membership(t[0].operands[1], alpha, Direction::Backward, ctx) ||
      !contraction_membership(t[1].operands[0], alpha, Direction::Forward, ctx) ||
      !contraction_membership(t[1].operands[1], alpha, Direction::Backward, ctx)) {
    return false;
  }
  if (!(t[0].result == w.s1) || !(t[1].result == w.s2) || !(t[2].result == w.product)) return false;
  if (!(t[2].operands[0] == w.s1) || !(t[2].operands[1] == w.s2)) return false;
  return product_set_membership(w.s1, alpha, ctx) && product_set_membership(w.s2, alpha, ctx) &&
         !product_set_membership(w.product, alpha, ctx);
}

namespace {

std::optional<NormalizationWitness> find_conjugation(const DiagAuto& alpha, Direction inner_direction,
                                                     const PrimeContext& ctx, const SearchLimits& limits,
                                                     const CancellationToken& cancel) {
  const Direction outer_direction = inner_direction == Direction::Forward ? Direction::Backward : Direction::Forward;
  const auto grid = search_grid(ctx, limits.depth);
  const auto outers = subgroup_grid(alpha, outer_direction, grid, ctx, limits.conjugation_budget);
  const auto inners = subgroup_grid(alpha, inner_direction, grid, ctx, limits.conjugation_budget);
  std::size_t pairs = 0;
  for (const auto& o : outers) {
    cancel.poll();
    const HeisElement o_inv = inv(o, ctx);
    for (const auto& i : inners) {
      if (++pairs > limits.conjugation_budget) return std::nullopt;
      const HeisElement left = mul(o, i, ctx);
      const HeisElement conj = mul(left, o_inv, ctx);
      if (contraction_membership(conj, alpha, inner_direction, ctx)) continue;
      return NormalizationWitness{o, i, conj, {{"inv", {o}, o_inv}, {"mul", {o, i}, left}, {"mul", {left, o_inv}, conj}}};
    }
  }
  return std::nullopt;
}

}  // namespace

NormalizationResult normalization_witness(const DiagAuto& alpha, const PrimeContext& ctx, const SearchLimits& limits,
                                          const CancellationToken& cancel) {
  alpha.validate();
  auto a = find_conjugation(alpha, Direction::Backward, ctx, limits, cancel);
  if (!a) throw NoWitness("U_alpha normalizes U_alpha^-1 on the searched grid");
  auto b = find_conjugation(alpha, Direction::Forward, ctx, limits, cancel);
  if (!b) throw NoWitness("U_alpha^-1 normalizes U_alpha on the searched grid");
  return {std::move(*a), std::move(*b)};
}

bool verify(const NormalizationWitness& w, const DiagAuto& alpha, Direction inner_direction, const PrimeContext& ctx) {
  const Direction outer_direction = inner_direction == Direction::Forward ? Direction::Backward : Direction::Forward;
  if (w.trace.size() != 3 || !replay(w.trace, ctx)) return false;
  const auto& t = w.trace;
  if (!(t[0].operands[0] == w.outer) || !(t[1].operands[0] == w.outer) || !(t[1].operands[1] == w.inner) ||
      !(t[2].operands[0] == t[1].result) || !(t[2].operands[1] == t[0].result) || !(t[2].result == w.conj)) {
    return false;
  }
  return contraction_membership(w.outer, alpha, outer_direction, ctx) &&
         contraction_membership(w.inner, alpha, inner_direction, ctx) &&
         !contraction_membership(w.conj, alpha, inner_direction, ctx);
}

bool central_series_check(const DiagAuto& alpha, const PrimeContext& ctx, const SearchLimits& limits) {
  alpha.validate();
  bool ok = true;
  for (std::size_t i = 0; i < alpha.exponents.size(); ++i) {
    if (alpha.exponents[i] == 0) ok = false;
  }
  if (ok && !product_set_closure_witness(alpha, ctx, limits).closed) {
    throw InvariantFailure("central series layers are split but the product set is not closed");
  }
  return ok;
}

Matrix exp_nilpotent(const Matrix& x) {
  if (!x.is_square()) throw InvalidInput("exp needs a square matrix");
  const std::size_t n = x.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = Rational(1, static_cast<long>(k)) * (term * x);
    if (term.is_zero()) return result;
    result = result + term;
  }
  throw NotNilpotent("matrix power x^" + std::to_string(n) + " is nonzero");
}

HeisPoint one_param(const HeisPoint& g, const Rational& t) {
  return {t * g.x, t * g.y, t * g.z + (t * t - t) * g.x * g.y / 2};
}

Matrix heis_matrix(const HeisPoint& g) {
  return Matrix::from_rows({{1, g.x, g.z}, {0, 1, g.y}, {0, 0, 1}});
}

Matrix adjoint(const HeisPoint& g) {
  const Matrix gm = heis_matrix(g);
  const Matrix gi = heis_matrix(heis_inv(g));
  const std::pair<std::size_t, std::size_t> slots[3] = {{0, 1}, {1, 2}, {0, 2}};
  Matrix out(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    Matrix e(3, 3);
    e(slots[j].first, slots[j].second) = 1;
    const Matrix img = gm * e * gi;
    for (std::size_t i = 0; i < 3; ++i) out(i, j) = img(slots[i].first, slots[i].second);
  }
  return out;
}

}  // namespace padyn
