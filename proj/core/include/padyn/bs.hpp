#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "padyn/rational.hpp"

namespace padyn {

/// Parameters of BS(p, q) = <a, t | t a^p t^-1 = a^q>, p and q distinct primes.
class BSParams {
 public:
  BSParams(std::uint64_t p, std::uint64_t q);
  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  friend bool operator==(const BSParams&, const BSParams&) = default;

 private:
  std::uint64_t p_, q_;
};

enum class Gen { A, T };

struct Syllable {
  Gen gen;
  Integer exp;
  friend bool operator==(const Syllable& x, const Syllable& y) { return x.gen == y.gen && x.exp == y.exp; }
};

/// Word in a and t with adjacent equal generators merged and zero exponents
/// dropped.
class BSWord {
 public:
  BSWord() = default;
  explicit BSWord(std::vector<Syllable> syllables);
  static BSWord a(const Integer& k = 1) { return BSWord({{Gen::A, k}}); }
  static BSWord t(const Integer& k = 1) { return BSWord({{Gen::T, k}}); }

  /// Grammar: letters a, A, t, T (capitals are inverses), each with an
  /// optional signed decimal exponent; "1" or "" is the identity; spaces
  /// are ignored. "ta2Ta-3" is t a^2 t^-1 a^-3.
  static BSWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t t_syllables() const;
  BSWord inverse() const;
  /// Inverse of parse.
  std::string to_string() const;

  friend BSWord operator*(const BSWord& x, const BSWord& y);
  friend bool operator==(const BSWord&, const BSWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// t a^p t^-1 a^-q.
BSWord relator(const BSParams& params);
/// x^-1 y^-1 x y.
BSWord commutator(const BSWord& x, const BSWord& y);

/// Removes pinches t a^m t^-1 (p | m) -> a^(mq/p) and t^-1 a^m t (q | m) ->
/// a^(mp/q), always rewriting the leftmost one. The result is pinch-free, and
/// by Britton's lemma it is empty iff the word is the identity. Throws
/// ExponentOverflow past 2^512.
BSWord britton_reduce(const BSWord& w, const BSParams& params);
bool is_pinch_free(const BSWord& w, const BSParams& params);

/// Element (n, u, v) of Z x| (Q_p x Q_q) with
/// (n, u, v)(m, u', v') = (n + m, u + r^n u', v + r^n v'), r = q/p.
struct SemiDirElement {
  long n = 0;
  Rational u, v;
  friend bool operator==(const SemiDirElement&, const SemiDirElement&) = default;
};

SemiDirElement semidir_mul(const SemiDirElement& x, const SemiDirElement& y, const BSParams& params);
SemiDirElement semidir_inv(const SemiDirElement& x, const BSParams& params);
bool is_identity(const SemiDirElement& x);
std::string to_string(const SemiDirElement& x);

/// The homomorphism a -> (0, 1, 1), t -> (1, 0, 0).
SemiDirElement phi_eval(const BSWord& w, const BSParams& params);
/// beta^n(g) = (1,0,0)^n g (1,0,0)^-n = (g.n, r^n u, r^n v).
SemiDirElement beta_apply(const SemiDirElement& g, long n, const BSParams& params);

struct OrbitSample {
  SemiDirElement point;
  /// v_p(u) and v_q(v) along beta^k(point), k = 0..steps ("inf" for zero).
  std::vector<Valuation> forward_u, forward_v, backward_u, backward_v;
  bool in_contraction;          // U_beta
  bool in_inverse_contraction;  // U_{beta^-1}
  bool in_levi;                 // M_beta
};

struct BetaReport {
  long vp_ratio;  // v_p(q/p)
  long vq_ratio;  // v_q(q/p)
  bool expansive;
  bool levi_discrete;
  std::vector<OrbitSample> samples;
};

BetaReport beta_expansiveness_report(const BSParams& params, int steps = 6);

struct RelationAudit {
  bool conjugation_identity;  // (1,0,0)(0,p,p)(-1,0,0) = (0,q,q)
  bool a_image_integral;      // phi(a) in Z_p x Z_q
  bool relator_reduces;       // britton_reduce(relator) is empty
  bool relator_in_kernel;     // phi(relator) is the identity
  bool ok() const { return conjugation_identity && a_image_integral && relator_reduces && relator_in_kernel; }
};

RelationAudit relation_audit(const BSParams& params);

struct ProbeEntry {
  BSWord word;
  BSWord reduced;
  bool nontrivial;
  SemiDirElement image;
};

struct DerivedProbe {
  /// levels[0] are the generators; level k holds commutators of level k-1.
  std::vector<std::vector<ProbeEntry>> levels;
  /// Every level >= 2 entry has trivial image (G is metabelian).
  bool metabelian_image;
  /// Some entry is nontrivial in BS(p, q) with trivial image.
  bool kernel_witness_found;
};

/// Level k+1 collects [x, y] for pairs of level-k words and [x, g x g^-1]
/// for generators g, at most `cap` per level. depth must be in 0..6.
DerivedProbe derived_series_probe(int depth, const std::vector<BSWord>& generators, const BSParams& params,
                                  std::size_t cap = 8);

}  // namespace padyn
