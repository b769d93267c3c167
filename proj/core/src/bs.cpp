#include "padyn/bs.hpp"

#include <cctype>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

const Integer& exponent_cap() {
  static const Integer cap = [] {
    Integer c;
    mpz_ui_pow_ui(c.get_mpz_t(), 2, 512);
    return c;
  }();
  return cap;
}

void check_exponent(const Integer& k) {
  if (abs(k) > exponent_cap()) throw ExponentOverflow("word exponent exceeds 2^512");
}

Rational ratio_power(const BSParams& params, long n) {
  Integer num, den;
  const unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_ui_pow_ui(num.get_mpz_t(), params.q(), e);
  mpz_ui_pow_ui(den.get_mpz_t(), params.p(), e);
  Rational r = n >= 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace

BSParams::BSParams(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
  if (!is_prime_u64(p) || !is_prime_u64(q)) throw InvalidInput("BS parameters must be primes");
  if (p == q) throw InvalidInput("BS parameters must be distinct primes");
}

BSWord::BSWord(std::vector<Syllable> syllables) {
  for (auto& s : syllables) {
    if (s.exp == 0) continue;
    if (!syllables_.empty() && syllables_.back().gen == s.gen) {
      syllables_.back().exp += s.exp;
      if (syllables_.back().exp == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(std::move(s));
    }
  }
}

BSWord BSWord::parse(std::string_view text) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i) == "1") return BSWord();
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    const char c = text[i++];
    Gen gen;
    int sign;
    switch (c) {
      case 'a': gen = Gen::A; sign = 1; break;
      case 'A': gen = Gen::A; sign = -1; break;
      case 't': gen = Gen::T; sign = 1; break;
      case 'T': gen = Gen::T; sign = -1; break;
      default: throw InvalidInput("unexpected character '" + std::string(1, c) + "' in word");
    }
    Integer exp = 1;
    std::size_t j = i;
    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
    std::size_t digits = j;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
    if (digits > j) {
      const std::size_t start = text[i] == '+' ? i + 1 : i;
      exp = Integer(std::string(text.substr(start, digits - start)).c_str(), 10);
      i = digits;
    } else if (j > i) {
      throw InvalidInput("sign without digits in word exponent");
    }
    check_exponent(exp);
    out.push_back({gen, sign * exp});
  }
  return BSWord(std::move(out));
}

std::size_t BSWord::t_syllables() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += s.gen == Gen::T ? 1 : 0;
  return n;
}

BSWord BSWord::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (auto& s : out) s.exp = -s.exp;
  return BSWord(std::move(out));
}

std::string BSWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    const char lower = s.gen == Gen::A ? 'a' : 't';
    if (s.exp == 1) {
      out += lower;
    } else if (s.exp == -1) {
      out += static_cast<char>(std::toupper(lower));
    } else {
      out += lower + s.exp.get_str();
    }
  }
  return out;
}

BSWord operator*(const BSWord& x, const BSWord& y) {
  std::vector<Syllable> s = x.syllables_;
  s.insert(s.end(), y.syllables_.begin(), y.syllables_.end());
  return BSWord(std::move(s));
}

BSWord relator(const BSParams& params) {
  return BSWord::t() * BSWord::a(Integer(params.p())) * BSWord::t(-1) * BSWord::a(-Integer(params.q()));
}

BSWord commutator(const BSWord& x, const BSWord& y) { return x.inverse() * y.inverse() * x * y; }

namespace {

// Position of the leftmost pinch at or after `from`, or npos.
std::size_t find_pinch(const std::vector<Syllable>& s, std::size_t from, const BSParams& params) {
  for (std::size_t i = from; i + 2 < s.size(); ++i) {
    const Syllable& x = s[i];
    const Syllable& y = s[i + 1];
    const Syllable& z = s[i + 2];
    if (x.gen != Gen::T || y.gen != Gen::A || z.gen != Gen::T) continue;
    if (x.exp > 0 && z.exp < 0 && mpz_divisible_ui_p(y.exp.get_mpz_t(), params.p())) return i;
    if (x.exp < 0 && z.exp > 0 && mpz_divisible_ui_p(y.exp.get_mpz_t(), params.q())) return i;
  }
  return std::string::npos;
}

}  // namespace

BSWord britton_reduce(const BSWord& w, const BSParams& params) {
  std::vector<Syllable> s = w.syllables();
  std::size_t from = 0;
  while (true) {
    const std::size_t i = find_pinch(s, from, params);
    if (i == std::string::npos) break;
    Syllable& x = s[i];
    Syllable& y = s[i + 1];
    Syllable& z = s[i + 2];
    if (x.exp > 0) {
      y.exp = y.exp / Integer(params.p()) * Integer(params.q());
      x.exp -= 1;
      z.exp += 1;
    } else {
      y.exp = y.exp / Integer(params.q()) * Integer(params.p());
      x.exp += 1;
      z.exp -= 1;
    }
    check_exponent(y.exp);
    s = BSWord(std::move(s)).syllables();
    from = i >= 2 ? i - 2 : 0;
  }
  return BSWord(std::move(s));
}

bool is_pinch_free(const BSWord& w, const BSParams& params) {
  return find_pinch(w.syllables(), 0, params) == std::string::npos;
}

SemiDirElement semidir_mul(const SemiDirElement& x, const SemiDirElement& y, const BSParams& params) {
  const Rational r = ratio_power(params, x.n);
  return {x.n + y.n, x.u + r * y.u, x.v + r * y.v};
}

SemiDirElement semidir_inv(const SemiDirElement& x, const BSParams& params) {
  const Rational r = ratio_power(params, -x.n);
  return {-x.n, -r * x.u, -r * x.v};
}

bool is_identity(const SemiDirElement& x) { return x.n == 0 && x.u == 0 && x.v == 0; }

std::string to_string(const SemiDirElement& x) {
  return "(" + std::to_string(x.n) + ", " + format_rational(x.u) + ", " + format_rational(x.v) + ")";
}

SemiDirElement phi_eval(const BSWord& w, const BSParams& params) {
  SemiDirElement acc;
  for (const auto& s : w.syllables()) {
    SemiDirElement g;
    if (s.gen == Gen::A) {
      g = {0, Rational(s.exp), Rational(s.exp)};
    } else {
      if (!s.exp.fits_slong_p()) throw ExponentOverflow("t-exponent does not fit the Z coordinate");
      g = {s.exp.get_si(), 0, 0};
    }
    acc = semidir_mul(acc, g, params);
  }
  return acc;
}

SemiDirElement beta_apply(const SemiDirElement& g, long n, const BSParams& params) {
  const Rational r = ratio_power(params, n);
  return {g.n, r * g.u, r * g.v};
}

BetaReport beta_expansiveness_report(const BSParams& params, int steps) {
  if (steps < 2) throw InvalidInput("orbit tracking needs at least two steps");
  const PrimeContext cp(params.p()), cq(params.q());
  const Rational ratio(Integer(params.q()), Integer(params.p()));
  BetaReport report{valuation(ratio, cp).value(), valuation(ratio, cq).value(), false, false, {}};
  const std::vector<SemiDirElement> points{{0, 0, 1}, {0, 1, 0}, {3, 0, 0}, {0, 1, 1}};
  for (const auto& g : points) {
    OrbitSample s{g, {}, {}, {}, {}, false, false, false};
    for (int k = 0; k <= steps; ++k) {
      const SemiDirElement f = beta_apply(g, k, params);
      const SemiDirElement b = beta_apply(g, -k, params);
      s.forward_u.push_back(valuation(f.u, cp));
      s.forward_v.push_back(valuation(f.v, cq));
      s.backward_u.push_back(valuation(b.u, cp));
      s.backward_v.push_back(valuation(b.v, cq));
    }
    // A coordinate tends to 0 iff its valuation grows along the orbit and
    // stays bounded iff the valuation is constant (or the coordinate is 0).
    auto trend = [](const std::vector<Valuation>& vs) {
      if (vs.front().is_infinite()) return 0;
      const long d = vs[1].value() - vs[0].value();
      for (std::size_t k = 1; k < vs.size(); ++k) {
        if (vs[k].value() - vs[k - 1].value() != d) throw InvariantFailure("valuation orbit is not arithmetic");
      }
      return d > 0 ? 1 : (d < 0 ? -1 : 2);
    };
    const int fu = trend(s.forward_u), fv = trend(s.forward_v);
    const int bu = trend(s.backward_u), bv = trend(s.backward_v);
    auto contracts = [](int t) { return t == 0 || t == 1; };
    auto bounded = [](int t) { return t != -1; };
    s.in_contraction = g.n == 0 && contracts(fu) && contracts(fv);
    s.in_inverse_contraction = g.n == 0 && contracts(bu) && contracts(bv);
    s.in_levi = bounded(fu) && bounded(fv) && bounded(bu) && bounded(bv);
    report.samples.push_back(std::move(s));
  }
  // U_beta = {(0,0,v)}, U_beta^-1 = {(0,u,0)}, M_beta = Z x 0 x 0: the
  // ratio is a non-unit at both primes, so no nonzero u or v coordinate is
  // bounded in both directions and M_beta meets Q_p x Q_q trivially.
  report.levi_discrete = report.vp_ratio != 0 && report.vq_ratio != 0;
  report.expansive = report.levi_discrete;
  const auto& s = report.samples;
  if (!s[0].in_contraction || s[1].in_contraction || !s[1].in_inverse_contraction || !s[2].in_levi ||
      s[3].in_levi) {
    throw InvariantFailure("orbit samples disagree with the coordinate description of U, U^-1 and M");
  }
  return report;
}

RelationAudit relation_audit(const BSParams& params) {
  const SemiDirElement t{1, 0, 0};
  const SemiDirElement ap{0, Integer(params.p()), Integer(params.p())};
  const SemiDirElement aq{0, Integer(params.q()), Integer(params.q())};
  RelationAudit r{};
  r.conjugation_identity = semidir_mul(semidir_mul(t, ap, params), semidir_inv(t, params), params) == aq;
  const SemiDirElement a = phi_eval(BSWord::a(), params);
  r.a_image_integral = is_integral(a.u, PrimeContext(params.p())) && is_integral(a.v, PrimeContext(params.q()));
  r.relator_reduces = britton_reduce(relator(params), params).empty();
  r.relator_in_kernel = is_identity(phi_eval(relator(params), params));
  return r;
}

DerivedProbe derived_series_probe(int depth, const std::vector<BSWord>& generators, const BSParams& params,
                                  std::size_t cap) {
  if (depth < 0 || depth > 6) throw InvalidInput("derived series depth must be between 0 and 6");
  if (generators.empty()) throw InvalidInput("derived series probe needs generators");
  auto entry = [&](const BSWord& w) {
    BSWord red = britton_reduce(w, params);
    const bool nontrivial = !red.empty();
    return ProbeEntry{w, std::move(red), nontrivial, phi_eval(w, params)};
  };
  DerivedProbe out{{}, true, false};
  std::vector<ProbeEntry> level;
  for (const auto& g : generators) level.push_back(entry(g));
  out.levels.push_back(level);
  for (int d = 1; d <= depth; ++d) {
    const auto& prev = out.levels.back();
    std::vector<BSWord> words;
    auto add = [&](BSWord w) {
      if (words.size() >= cap) return;
      for (const auto& x : words) {
        if (x == w) return;
      }
      words.push_back(std::move(w));
    };
    for (std::size_t i = 0; i < prev.size(); ++i) {
      for (std::size_t j = i + 1; j < prev.size(); ++j) add(commutator(prev[i].word, prev[j].word));
    }
    for (const auto& x : prev) {
      for (const auto& g : generators) add(commutator(x.word, g * x.word * g.inverse()));
    }
    std::vector<ProbeEntry> next;
    for (auto& w : words) next.push_back(entry(w));
    out.levels.push_back(std::move(next));
  }
  for (std::size_t d = 1; d < out.levels.size(); ++d) {
    for (const auto& e : out.levels[d]) {
      if (d >= 2 && !is_identity(e.image)) out.metabelian_image = false;
      if (e.nontrivial && is_identity(e.image)) out.kernel_witness_found = true;
    }
  }
  return out;
}

}  // namespace padyn
