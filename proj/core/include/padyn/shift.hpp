#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padyn {

/// Subset of a finite group of order at most 64, one bit per element.
using Subset = std::uint64_t;

/// Finite group given by its multiplication table. Group axioms are checked
/// on construction.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 64;

  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);
  /// "C<n>" for the cyclic group of order n, or "S3".
  static FiniteGroup named(const std::string& name);
  static FiniteGroup cyclic(int n);
  /// S3 with elements e, r, r2 (rotations) and s, sr, sr2 (reflections).
  static FiniteGroup symmetric3();
  /// F^k with labels "(a,b,...)".
  static FiniteGroup direct_power(const FiniteGroup& f, int k);

  int size() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int order(int a) const;
  /// lcm of element orders.
  long exponent() const;
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Throws InvalidInput for unknown labels.
  int index_of(const std::string& label) const;

  Subset all() const;
  Subset trivial() const { return Subset{1} << identity_; }
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  bool is_subgroup(Subset s) const;
  bool is_normal(Subset s) const;
  /// {a b : a in s, b in t}.
  Subset product(Subset s, Subset t) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

inline bool contains(Subset s, int a) { return (s >> a) & 1U; }

/// F = N x| H with N normal, N n H = {1} and N H = F.
struct Splitting {
  Subset n;
  Subset h;
  bool h_normal;
};

/// Throws InvalidInput unless (n, h) is a semidirect splitting of f.
Splitting make_splitting(const FiniteGroup& f, Subset n, Subset h);
/// The splitting S3 = C3 x| <s>.
Splitting s3_splitting(const FiniteGroup& s3);

/// Periodic sequence anchored at absolute indices: value(k) = word[k mod P],
/// stored with minimal period.
class Tail {
 public:
  static constexpr std::size_t kMaxPeriod = 8;

  /// Throws IncompatibleTails when the minimal period exceeds kMaxPeriod.
  explicit Tail(std::vector<int> word);
  static Tail constant(int a) { return Tail({a}); }

  int value(long k) const;
  std::size_t period() const { return word_.size(); }
  const std::vector<int>& word() const { return word_; }
  bool is_constant() const { return word_.size() == 1; }
  /// value'(k) = value(k - n).
  Tail shifted(long n) const;

  friend bool operator==(const Tail&, const Tail&) = default;

 private:
  std::vector<int> word_;
};

/// Element of F^Z: a finite window [lo, lo + window.size()) between a left
/// tail (indices below lo) and a right tail. Always kept in canonical form,
/// so == is equality of sequences.
class SeqElement {
 public:
  SeqElement(long lo, std::vector<int> window, Tail left, Tail right);
  static SeqElement identity(int e) { return {0, {}, Tail::constant(e), Tail::constant(e)}; }
  /// a at index k, e elsewhere.
  static SeqElement delta(long k, int a, int e) { return {k, {a}, Tail::constant(e), Tail::constant(e)}; }

  int value(long k) const;
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  const Tail& left() const { return left_; }
  const Tail& right() const { return right_; }

  friend bool operator==(const SeqElement&, const SeqElement&) = default;

 private:
  long lo_;
  std::vector<int> window_;
  Tail left_, right_;
};

/// Indices translated by n: result(k) = e(k - n).
SeqElement shift(const SeqElement& e, long n);

enum class ShiftDirection { Right, Left };
enum class Side { Left, Right };

/// One factor of the carrier: the coordinate group is a product of
/// components, each read off through a retraction of the coordinate group
/// onto a subset, and each side of Z is either full (compact product) or
/// restricted (only finitely many nontrivial coordinates, discrete).
struct Component {
  std::string name;
  std::vector<int> projection;
  Subset image;
  bool left_restricted;
  bool right_restricted;
  bool restricted(Side s) const { return s == Side::Left ? left_restricted : right_restricted; }
};

/// Closed subgroup of the carrier read in the product topology declared by
/// the components, with a shift automorphism.
class ShiftSystem {
 public:
  /// F^Z (restricted sides as declared).
  static ShiftSystem plain(FiniteGroup f, bool left_restricted, bool right_restricted, ShiftDirection dir);
  /// {(n_k h_k)} in F^Z with the N-part restricted as declared and the
  /// H-part full; F must carry a splitting with H not normal.
  static ShiftSystem semidirect(FiniteGroup f, const Splitting& split, bool n_left_restricted,
                                bool n_right_restricted, ShiftDirection dir);
  /// Product of copies of F^Z, one per (left_restricted, right_restricted).
  static ShiftSystem product(const FiniteGroup& f, const std::vector<std::pair<bool, bool>>& sides,
                             ShiftDirection dir);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Component>& components() const { return components_; }
  ShiftDirection direction() const { return dir_; }
  const std::optional<Splitting>& splitting() const { return split_; }

  /// alpha^n as an index translation.
  long translation(long n) const { return dir_ == ShiftDirection::Right ? n : -n; }
  /// The side whose data must vanish for forward contraction.
  Side source_side() const { return dir_ == ShiftDirection::Right ? Side::Left : Side::Right; }

  SeqElement apply(const SeqElement& e, long n) const { return shift(e, translation(n)); }
  SeqElement mul(const SeqElement& a, const SeqElement& b) const;
  SeqElement inv(const SeqElement& a) const;
  SeqElement identity() const { return SeqElement::identity(group_.identity()); }
  bool in_carrier(const SeqElement& e) const;

 private:
  ShiftSystem(FiniteGroup group, std::vector<Component> components, ShiftDirection dir,
              std::optional<Splitting> split);

  FiniteGroup group_;
  std::vector<Component> components_;
  ShiftDirection dir_;
  std::optional<Splitting> split_;
};

/// Per component: subgroup assignment k -> subset, constant outside a finite
/// window, plus restriction flags. `clipped` marks a side kept restricted by
/// a closure because the carrier itself is restricted there; it is
/// informational and ignored by ==.
struct ComponentAssignment {
  Subset left;
  long lo;
  std::vector<Subset> window;
  Subset right;
  bool left_restricted = false;
  bool right_restricted = false;
  bool left_clipped = false;
  bool right_clipped = false;

  Subset at(long k) const;
  bool restricted(Side s) const { return s == Side::Left ? left_restricted : right_restricted; }
};

struct ProductSubgroup {
  std::vector<ComponentAssignment> parts;
};

bool operator==(const ComponentAssignment& a, const ComponentAssignment& b);
inline bool operator==(const ProductSubgroup& a, const ProductSubgroup& b) { return a.parts == b.parts; }

/// Trims windows and clears flags on trivial sides.
ProductSubgroup canonical(const ShiftSystem& sys, ProductSubgroup s);

ProductSubgroup carrier_subgroup(const ShiftSystem& sys);
ProductSubgroup trivial_subgroup(const ShiftSystem& sys);
/// U_alpha (forward) or U_{alpha^-1} (backward).
ProductSubgroup contraction_subgroup(const ShiftSystem& sys, bool forward);
ProductSubgroup levi_subgroup(const ShiftSystem& sys);
/// Throws InvalidInput when some assigned subset is not a subgroup.
void validate(const ShiftSystem& sys, const ProductSubgroup& s);

bool contains(const ShiftSystem& sys, const ProductSubgroup& s, const SeqElement& e);
ProductSubgroup closure(const ShiftSystem& sys, const ProductSubgroup& s);
ProductSubgroup intersect(const ShiftSystem& sys, const ProductSubgroup& a, const ProductSubgroup& b);
/// a . b; throws NotProductType when the product has no product description.
ProductSubgroup product(const ShiftSystem& sys, const ProductSubgroup& a, const ProductSubgroup& b);
/// closure(U_alpha) n closure(U_alpha^-1).
ProductSubgroup nub(const ShiftSystem& sys);

enum class ShiftClass { Contraction, InverseContraction, Levi, Nub };
bool membership(const ShiftSystem& sys, const SeqElement& e, ShiftClass cls);

/// Elements of U_alpha n U_0 agreeing with e on [-m, m] for m = 0..m_max.
/// Throws InvalidInput unless e lies in U_0.
std::vector<SeqElement> density_approximants(const ShiftSystem& sys, const SeqElement& e, long m_max);

struct SeqStep {
  std::string op;  // "mul" or "inv"
  std::vector<SeqElement> operands;
  SeqElement result;
};

struct NormalizerWitness {
  SeqElement g, u, conjugate;
  std::vector<SeqStep> trace;
};

/// g in U_alpha with finite support in the N-part and u in H^Z with
/// g u g^-1 outside the nub. Throws NoWitness.
NormalizerWitness normalizer_witness(const ShiftSystem& sys);
bool verify(const ShiftSystem& sys, const NormalizerWitness& w);

struct TorsionReport {
  long exponent;
  bool divisible_trivial;
  ProductSubgroup closure_of_torsion;
  std::optional<ProductSubgroup> torsion_times_nub;
  bool closure_matches;
};

TorsionReport torsion_divisible_report(const ShiftSystem& sys);

std::string to_string(const ShiftSystem& sys, const SeqElement& e);
std::string to_string(const ShiftSystem& sys, const ProductSubgroup& s);

}  // namespace padyn
