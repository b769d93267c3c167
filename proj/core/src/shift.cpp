#include "padyn/shift.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

long floor_mod(long k, long m) {
  const long r = k % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const int n = size();
  if (n == 0 || n > kMaxOrder) throw InvalidInput("finite group order must be between 1 and 64");
  if (static_cast<int>(table_.size()) != n) throw InvalidInput("multiplication table has the wrong number of rows");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidInput("multiplication table entry out of range");
    }
  }
  {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidInput("duplicate group label");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidInput("multiplication table has no identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] < 0) throw InvalidInput("element '" + labels_[a] + "' has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw InvalidInput("multiplication is not associative");
      }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1 || n > kMaxOrder) throw InvalidInput("cyclic group order must be between 1 and 64");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2}: r = x+1, s = -x, composed right to left.
  using Perm = std::array<int, 3>;
  const Perm id{0, 1, 2}, r{1, 2, 0}, s{0, 2, 1};
  auto compose = [](const Perm& a, const Perm& b) { return Perm{a[b[0]], a[b[1]], a[b[2]]}; };
  const Perm r2 = compose(r, r);
  const std::vector<Perm> perms{id, r, r2, s, compose(s, r), compose(s, r2)};
  const std::vector<std::string> labels{"e", "r", "r2", "s", "sr", "sr2"};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const Perm c = compose(perms[a], perms[b]);
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(labels, std::move(table));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name.size() >= 2 && name[0] == 'C') {
    const std::string digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() <= 2) {
      return cyclic(std::stoi(digits));
    }
  }
  throw InvalidInput("unknown group name '" + name + "' (expected C<n> or S3)");
}

FiniteGroup FiniteGroup::direct_power(const FiniteGroup& f, int k) {
  if (k < 1) throw InvalidInput("direct power needs at least one factor");
  long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= f.size();
    if (total > kMaxOrder) throw InvalidInput("direct power exceeds the supported group order");
  }
  const int n = static_cast<int>(total);
  auto digits = [&](int a) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i) {
      d[i] = a % f.size();
      a /= f.size();
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int x : d) a = a * f.size() + x;
    return a;
  };
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a);
    std::string label = "(";
    for (int i = 0; i < k; ++i) label += (i ? "," : "") + f.label(da[i]);
    labels.push_back(label + ")");
    for (int b = 0; b < n; ++b) {
      const auto db = digits(b);
      std::vector<int> dc(k);
      for (int i = 0; i < k; ++i) dc[i] = f.mul(da[i], db[i]);
      table[a][b] = encode(dc);
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

int FiniteGroup::order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < size(); ++a) e = std::lcm(e, static_cast<long>(order(a)));
  return e;
}

int FiniteGroup::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidInput("unknown group element '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

Subset FiniteGroup::all() const { return size() == 64 ? ~Subset{0} : (Subset{1} << size()) - 1; }

Subset FiniteGroup::subset_of(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) s |= Subset{1} << index_of(l);
  return s;
}

std::vector<std::string> FiniteGroup::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int a = 0; a < size(); ++a) {
    if (padyn::contains(s, a)) out.push_back(labels_[a]);
  }
  return out;
}

bool FiniteGroup::is_subgroup(Subset s) const {
  if (!padyn::contains(s, identity_)) return false;
  for (int a = 0; a < size(); ++a) {
    if (!padyn::contains(s, a)) continue;
    if (!padyn::contains(s, inv(a))) return false;
    for (int b = 0; b < size(); ++b) {
      if (padyn::contains(s, b) && !padyn::contains(s, mul(a, b))) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_normal(Subset s) const {
  if (!is_subgroup(s)) return false;
  for (int g = 0; g < size(); ++g)
    for (int a = 0; a < size(); ++a) {
      if (padyn::contains(s, a) && !padyn::contains(s, mul(mul(g, a), inv(g)))) return false;
    }
  return true;
}

Subset FiniteGroup::product(Subset s, Subset t) const {
  Subset out = 0;
  for (int a = 0; a < size(); ++a) {
    if (!padyn::contains(s, a)) continue;
    for (int b = 0; b < size(); ++b) {
      if (padyn::contains(t, b)) out |= Subset{1} << mul(a, b);
    }
  }
  return out;
}

Splitting make_splitting(const FiniteGroup& f, Subset n, Subset h) {
  if (!f.is_normal(n)) throw InvalidInput("split: N must be a normal subgroup");
  if (!f.is_subgroup(h)) throw InvalidInput("split: H must be a subgroup");
  if ((n & h) != f.trivial()) throw InvalidInput("split: N and H must intersect trivially");
  if (f.product(n, h) != f.all()) throw InvalidInput("split: N H must be the whole group");
  return {n, h, f.is_normal(h)};
}

Splitting s3_splitting(const FiniteGroup& s3) {
  return make_splitting(s3, s3.subset_of({"e", "r", "r2"}), s3.subset_of({"e", "s"}));
}

Tail::Tail(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw InvalidInput("tail word must not be empty");
  const std::size_t p = word_.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < p && periodic; ++i) periodic = word_[i] == word_[i % d];
    if (periodic) {
      word_.resize(d);
      break;
    }
  }
  if (word_.size() > kMaxPeriod) {
    throw IncompatibleTails("tail period " + std::to_string(word_.size()) + " exceeds the cap of " +
                            std::to_string(kMaxPeriod));
  }
}

int Tail::value(long k) const { return word_[floor_mod(k, static_cast<long>(word_.size()))]; }

Tail Tail::shifted(long n) const {
  std::vector<int> w(word_.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = value(static_cast<long>(j) - n);
  return Tail(std::move(w));
}

SeqElement::SeqElement(long lo, std::vector<int> window, Tail left, Tail right)
    : lo_(lo), window_(std::move(window)), left_(std::move(left)), right_(std::move(right)) {
  std::size_t front = 0;
  while (front < window_.size() && window_[front] == left_.value(lo_ + static_cast<long>(front))) ++front;
  window_.erase(window_.begin(), window_.begin() + static_cast<long>(front));
  lo_ += static_cast<long>(front);
  while (!window_.empty() && window_.back() == right_.value(hi() - 1)) window_.pop_back();
  if (window_.empty()) {
    if (left_ == right_) {
      lo_ = 0;
    } else {
      while (left_.value(lo_ - 1) == right_.value(lo_ - 1)) --lo_;
    }
  }
}

int SeqElement::value(long k) const {
  if (k < lo_) return left_.value(k);
  if (k < hi()) return window_[static_cast<std::size_t>(k - lo_)];
  return right_.value(k);
}

SeqElement shift(const SeqElement& e, long n) {
  return SeqElement(e.lo() + n, e.window(), e.left().shifted(n), e.right().shifted(n));
}

namespace {

Tail combine(const Tail& a, const Tail& b, const FiniteGroup& g) {
  const std::size_t l = std::lcm(a.period(), b.period());
  std::vector<int> w(l);
  for (std::size_t j = 0; j < l; ++j) w[j] = g.mul(a.value(static_cast<long>(j)), b.value(static_cast<long>(j)));
  return Tail(std::move(w));
}

Tail invert(const Tail& a, const FiniteGroup& g) {
  std::vector<int> w = a.word();
  for (auto& x : w) x = g.inv(x);
  return Tail(std::move(w));
}

bool projects_trivially(const Tail& t, const Component& c, const FiniteGroup& g) {
  return std::all_of(t.word().begin(), t.word().end(),
                     [&](int a) { return c.projection[a] == g.identity(); });
}

const Tail& tail_on(const SeqElement& e, Side s) { return s == Side::Left ? e.left() : e.right(); }

Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

}  // namespace

ShiftSystem::ShiftSystem(FiniteGroup group, std::vector<Component> components, ShiftDirection dir,
                         std::optional<Splitting> split)
    : group_(std::move(group)), components_(std::move(components)), dir_(dir), split_(split) {}

ShiftSystem ShiftSystem::plain(FiniteGroup f, bool left_restricted, bool right_restricted, ShiftDirection dir) {
  std::vector<int> id(f.size());
  std::iota(id.begin(), id.end(), 0);
  Component c{"F", std::move(id), f.all(), left_restricted, right_restricted};
  return ShiftSystem(std::move(f), {std::move(c)}, dir, std::nullopt);
}

ShiftSystem ShiftSystem::semidirect(FiniteGroup f, const Splitting& split, bool n_left_restricted,
                                    bool n_right_restricted, ShiftDirection dir) {
  if (split.h_normal) throw InvalidInput("the semidirect example needs H not normal in F");
  std::vector<int> to_n(f.size()), to_h(f.size());
  for (int a = 0; a < f.size(); ++a) {
    for (int h = 0; h < f.size(); ++h) {
      if (!contains(split.h, h)) continue;
      const int n = f.mul(a, f.inv(h));
      if (contains(split.n, n)) {
        to_n[a] = n;
        to_h[a] = h;
      }
    }
  }
  std::vector<Component> comps{{"N", std::move(to_n), split.n, n_left_restricted, n_right_restricted},
                               {"H", std::move(to_h), split.h, false, false}};
  return ShiftSystem(std::move(f), std::move(comps), dir, split);
}

ShiftSystem ShiftSystem::product(const FiniteGroup& f, const std::vector<std::pair<bool, bool>>& sides,
                                 ShiftDirection dir) {
  if (sides.empty()) throw InvalidInput("a product system needs at least one component");
  const int k = static_cast<int>(sides.size());
  FiniteGroup g = FiniteGroup::direct_power(f, k);
  std::vector<Component> comps;
  long stride = 1;
  for (int i = k - 1; i >= 0; --i) {
    std::vector<int> proj(g.size());
    Subset image = 0;
    for (int a = 0; a < g.size(); ++a) {
      const int digit = static_cast<int>((a / stride) % f.size());
      proj[a] = static_cast<int>(digit * stride);
      image |= Subset{1} << proj[a];
    }
    comps.push_back({"F" + std::to_string(i + 1), std::move(proj), image, sides[i].first, sides[i].second});
    stride *= f.size();
  }
  std::reverse(comps.begin(), comps.end());
  return ShiftSystem(std::move(g), std::move(comps), dir, std::nullopt);
}

SeqElement ShiftSystem::mul(const SeqElement& a, const SeqElement& b) const {
  const long lo = std::min(a.lo(), b.lo());
  const long hi = std::max(a.hi(), b.hi());
  std::vector<int> w;
  for (long k = lo; k < hi; ++k) w.push_back(group_.mul(a.value(k), b.value(k)));
  return SeqElement(lo, std::move(w), combine(a.left(), b.left(), group_), combine(a.right(), b.right(), group_));
}

SeqElement ShiftSystem::inv(const SeqElement& a) const {
  std::vector<int> w = a.window();
  for (auto& x : w) x = group_.inv(x);
  return SeqElement(a.lo(), std::move(w), invert(a.left(), group_), invert(a.right(), group_));
}

bool ShiftSystem::in_carrier(const SeqElement& e) const {
  for (const auto& c : components_) {
    for (Side s : {Side::Left, Side::Right}) {
      if (c.restricted(s) && !projects_trivially(tail_on(e, s), c, group_)) return false;
    }
  }
  return true;
}

Subset ComponentAssignment::at(long k) const {
  if (k < lo) return left;
  if (k < lo + static_cast<long>(window.size())) return window[static_cast<std::size_t>(k - lo)];
  return right;
}

bool operator==(const ComponentAssignment& a, const ComponentAssignment& b) {
  return a.left == b.left && a.lo == b.lo && a.window == b.window && a.right == b.right &&
         a.left_restricted == b.left_restricted && a.right_restricted == b.right_restricted;
}

ProductSubgroup canonical(const ShiftSystem& sys, ProductSubgroup s) {
  const Subset e = sys.group().trivial();
  for (auto& p : s.parts) {
    std::size_t front = 0;
    while (front < p.window.size() && p.window[front] == p.left) ++front;
    p.window.erase(p.window.begin(), p.window.begin() + static_cast<long>(front));
    p.lo += static_cast<long>(front);
    while (!p.window.empty() && p.window.back() == p.right) p.window.pop_back();
    if (p.window.empty() && p.left == p.right) p.lo = 0;
    if (p.left == e) p.left_restricted = p.left_clipped = false;
    if (p.right == e) p.right_restricted = p.right_clipped = false;
  }
  return s;
}

namespace {

ComponentAssignment constant_assignment(Subset mask) { return {mask, 0, {}, mask}; }

void set_flag(ComponentAssignment& p, Side s, bool value) {
  (s == Side::Left ? p.left_restricted : p.right_restricted) = value;
}

void set_clipped(ComponentAssignment& p, Side s, bool value) {
  (s == Side::Left ? p.left_clipped : p.right_clipped) = value;
}

bool clipped(const ComponentAssignment& p, Side s) { return s == Side::Left ? p.left_clipped : p.right_clipped; }

Subset side_mask(const ComponentAssignment& p, Side s) { return s == Side::Left ? p.left : p.right; }

void check_shape(const ShiftSystem& sys, const ProductSubgroup& s) {
  if (s.parts.size() != sys.components().size()) throw InvalidInput("subgroup descriptor does not match the system");
}

// Assignment built coordinate-wise over the union of both windows.
template <typename F>
ComponentAssignment combine_parts(const ComponentAssignment& a, const ComponentAssignment& b, F&& op) {
  const long hi = std::max(a.lo + static_cast<long>(a.window.size()), b.lo + static_cast<long>(b.window.size()));
  ComponentAssignment out{op(a.left, b.left), std::min(a.lo, b.lo), {}, op(a.right, b.right)};
  for (long k = out.lo; k < hi; ++k) out.window.push_back(op(a.at(k), b.at(k)));
  return out;
}

}  // namespace

ProductSubgroup carrier_subgroup(const ShiftSystem& sys) {
  ProductSubgroup out;
  for (const auto& c : sys.components()) {
    ComponentAssignment p = constant_assignment(c.image);
    p.left_restricted = c.left_restricted;
    p.right_restricted = c.right_restricted;
    out.parts.push_back(p);
  }
  return canonical(sys, out);
}

ProductSubgroup trivial_subgroup(const ShiftSystem& sys) {
  ProductSubgroup out;
  for (std::size_t i = 0; i < sys.components().size(); ++i) {
    out.parts.push_back(constant_assignment(sys.group().trivial()));
  }
  return out;
}

ProductSubgroup contraction_subgroup(const ShiftSystem& sys, bool forward) {
  const Side src = forward ? sys.source_side() : opposite(sys.source_side());
  const Side dst = opposite(src);
  ProductSubgroup out;
  for (const auto& c : sys.components()) {
    if (c.restricted(dst)) {
      out.parts.push_back(constant_assignment(sys.group().trivial()));
      continue;
    }
    ComponentAssignment p = constant_assignment(c.image);
    set_flag(p, src, true);
    out.parts.push_back(p);
  }
  return canonical(sys, out);
}

ProductSubgroup levi_subgroup(const ShiftSystem& sys) {
  ProductSubgroup out;
  for (const auto& c : sys.components()) {
    const bool compact = !c.left_restricted && !c.right_restricted;
    out.parts.push_back(constant_assignment(compact ? c.image : sys.group().trivial()));
  }
  return canonical(sys, out);
}

void validate(const ShiftSystem& sys, const ProductSubgroup& s) {
  check_shape(sys, s);
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const auto& p = s.parts[i];
    std::vector<Subset> masks = p.window;
    masks.push_back(p.left);
    masks.push_back(p.right);
    for (Subset m : masks) {
      if (!sys.group().is_subgroup(m) || (m & ~sys.components()[i].image) != 0) {
        throw InvalidInput("assigned subset is not a subgroup of component " + sys.components()[i].name);
      }
    }
  }
}

bool contains(const ShiftSystem& sys, const ProductSubgroup& s, const SeqElement& e) {
  check_shape(sys, s);
  const auto& g = sys.group();
  const long span = static_cast<long>(std::lcm(e.left().period(), e.right().period()));
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const auto& p = s.parts[i];
    const auto& c = sys.components()[i];
    const long lo = std::min(e.lo(), p.lo) - span;
    const long hi = std::max(e.hi(), p.lo + static_cast<long>(p.window.size())) + span;
    for (long k = lo; k < hi; ++k) {
      if (!padyn::contains(p.at(k), c.projection[e.value(k)])) return false;
    }
    for (Side side : {Side::Left, Side::Right}) {
      if (p.restricted(side) && !projects_trivially(tail_on(e, side), c, g)) return false;
    }
  }
  return true;
}

ProductSubgroup closure(const ShiftSystem& sys, const ProductSubgroup& s) {
  check_shape(sys, s);
  ProductSubgroup out = s;
  for (std::size_t i = 0; i < out.parts.size(); ++i) {
    auto& p = out.parts[i];
    for (Side side : {Side::Left, Side::Right}) {
      if (!p.restricted(side)) continue;
      if (sys.components()[i].restricted(side)) {
        set_clipped(p, side, true);
      } else {
        set_flag(p, side, false);
      }
    }
  }
  return canonical(sys, out);
}

ProductSubgroup intersect(const ShiftSystem& sys, const ProductSubgroup& a, const ProductSubgroup& b) {
  check_shape(sys, a);
  check_shape(sys, b);
  ProductSubgroup out;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    const auto& pa = a.parts[i];
    const auto& pb = b.parts[i];
    ComponentAssignment p = combine_parts(pa, pb, [](Subset x, Subset y) { return x & y; });
    for (Side side : {Side::Left, Side::Right}) {
      set_flag(p, side, pa.restricted(side) || pb.restricted(side));
      set_clipped(p, side, clipped(pa, side) || clipped(pb, side));
    }
    out.parts.push_back(std::move(p));
  }
  return canonical(sys, out);
}

ProductSubgroup product(const ShiftSystem& sys, const ProductSubgroup& a, const ProductSubgroup& b) {
  check_shape(sys, a);
  check_shape(sys, b);
  const auto& g = sys.group();
  const Subset e = g.trivial();
  ProductSubgroup out;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    const auto& pa = a.parts[i];
    const auto& pb = b.parts[i];
    ComponentAssignment p = combine_parts(pa, pb, [&](Subset x, Subset y) {
      const Subset xy = g.product(x, y);
      if (!g.is_subgroup(xy)) throw NotProductType("coordinate product of subgroups is not a subgroup");
      return xy;
    });
    for (Side side : {Side::Left, Side::Right}) {
      const Subset ma = side_mask(pa, side), mb = side_mask(pb, side);
      const bool ra = pa.restricted(side), rb = pb.restricted(side);
      bool restricted;
      if (ma == e) {
        restricted = rb;
      } else if (mb == e) {
        restricted = ra;
      } else if (ra == rb) {
        restricted = ra;
      } else {
        const Subset small = ra ? ma : mb;
        const Subset big = ra ? mb : ma;
        if ((small & ~big) != 0) {
          throw NotProductType("a restricted side is not absorbed by the full side of the other factor");
        }
        restricted = false;
      }
      set_flag(p, side, restricted);
      set_clipped(p, side, clipped(pa, side) || clipped(pb, side));
    }
    out.parts.push_back(std::move(p));
  }
  return canonical(sys, out);
}

ProductSubgroup nub(const ShiftSystem& sys) {
  return intersect(sys, closure(sys, contraction_subgroup(sys, true)), closure(sys, contraction_subgroup(sys, false)));
}

bool membership(const ShiftSystem& sys, const SeqElement& e, ShiftClass cls) {
  switch (cls) {
    case ShiftClass::Contraction: return contains(sys, contraction_subgroup(sys, true), e);
    case ShiftClass::InverseContraction: return contains(sys, contraction_subgroup(sys, false), e);
    case ShiftClass::Levi: return contains(sys, levi_subgroup(sys), e);
    case ShiftClass::Nub: return contains(sys, nub(sys), e);
  }
  return false;
}

std::vector<SeqElement> density_approximants(const ShiftSystem& sys, const SeqElement& e, long m_max) {
  if (m_max < 0) throw InvalidInput("m_max must be non-negative");
  const ProductSubgroup u0 = nub(sys);
  const ProductSubgroup ua = contraction_subgroup(sys, true);
  if (!contains(sys, u0, e)) throw InvalidInput("element does not lie in the nub");
  const Tail trivial = Tail::constant(sys.group().identity());
  std::vector<SeqElement> out;
  for (long m = 0; m <= m_max; ++m) {
    std::vector<int> w;
    std::optional<SeqElement> approx;
    if (sys.source_side() == Side::Left) {
      const long hi = std::max(e.hi(), m + 1);
      for (long k = -m; k < hi; ++k) w.push_back(e.value(k));
      approx.emplace(-m, std::move(w), trivial, e.right());
    } else {
      const long lo = std::min(e.lo(), -m);
      for (long k = lo; k <= m; ++k) w.push_back(e.value(k));
      approx.emplace(lo, std::move(w), e.left(), trivial);
    }
    for (long k = -m; k <= m; ++k) {
      if (approx->value(k) != e.value(k)) throw InvariantFailure("approximant disagrees on its window");
    }
    if (!contains(sys, ua, *approx) || !contains(sys, u0, *approx)) {
      throw InvariantFailure("approximant left U_alpha n U_0");
    }
    out.push_back(std::move(*approx));
  }
  return out;
}

NormalizerWitness normalizer_witness(const ShiftSystem& sys) {
  if (!sys.splitting()) throw InvalidInput("normalizer witness needs a semidirect system");
  const auto& g = sys.group();
  const Splitting& sp = *sys.splitting();
  const ProductSubgroup u0 = nub(sys);
  for (int n = 0; n < g.size(); ++n) {
    if (!contains(sp.n, n) || n == g.identity()) continue;
    for (int h = 0; h < g.size(); ++h) {
      if (!contains(sp.h, h) || contains(sp.h, g.mul(g.mul(n, h), g.inv(n)))) continue;
      const SeqElement gn = SeqElement::delta(0, n, g.identity());
      const SeqElement u(0, {}, Tail::constant(h), Tail::constant(h));
      const SeqElement g_inv = sys.inv(gn);
      const SeqElement gu = sys.mul(gn, u);
      const SeqElement conj = sys.mul(gu, g_inv);
      NormalizerWitness w{gn, u, conj, {{"inv", {gn}, g_inv}, {"mul", {gn, u}, gu}, {"mul", {gu, g_inv}, conj}}};
      if (verify(sys, w)) return w;
    }
  }
  throw NoWitness("every conjugate of H^Z by a finitely supported N-element stays in the nub");
}

bool verify(const ShiftSystem& sys, const NormalizerWitness& w) {
  if (w.trace.size() != 3) return false;
  for (const auto& step : w.trace) {
    if (step.op == "inv" && step.operands.size() == 1) {
      if (!(sys.inv(step.operands[0]) == step.result)) return false;
    } else if (step.op == "mul" && step.operands.size() == 2) {
      if (!(sys.mul(step.operands[0], step.operands[1]) == step.result)) return false;
    } else {
      return false;
    }
  }
  const auto& t = w.trace;
  if (!(t[0].operands[0] == w.g) || !(t[1].operands[0] == w.g) || !(t[1].operands[1] == w.u) ||
      !(t[2].operands[0] == t[1].result) || !(t[2].operands[1] == t[0].result) || !(t[2].result == w.conjugate)) {
    return false;
  }
  const ProductSubgroup u0 = nub(sys);
  return sys.in_carrier(w.g) && sys.in_carrier(w.u) && membership(sys, w.g, ShiftClass::Contraction) &&
         contains(sys, u0, w.u) && !contains(sys, u0, w.conjugate);
}

TorsionReport torsion_divisible_report(const ShiftSystem& sys) {
  // The coordinate group is finite, so U_alpha has finite exponent: it is
  // its own torsion part and its divisible part is trivial.
  const ProductSubgroup t = contraction_subgroup(sys, true);
  TorsionReport r{sys.group().exponent(), true, closure(sys, t), std::nullopt, false};
  try {
    r.torsion_times_nub = product(sys, t, nub(sys));
    r.closure_matches = *r.torsion_times_nub == r.closure_of_torsion;
  } catch (const NotProductType&) {
    r.closure_matches = false;
  }
  return r;
}

namespace {

std::string word_string(const FiniteGroup& g, const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + g.label(w[i]);
  return out;
}

std::string mask_string(const FiniteGroup& g, Subset s) {
  std::string out = "{";
  const auto labels = g.labels_of(s);
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

}  // namespace

std::string to_string(const ShiftSystem& sys, const SeqElement& e) {
  const auto& g = sys.group();
  return "(" + word_string(g, e.left().word()) + ")* [" + std::to_string(e.lo()) + ": " +
         word_string(g, e.window()) + "] (" + word_string(g, e.right().word()) + ")*";
}

std::string to_string(const ShiftSystem& sys, const ProductSubgroup& s) {
  const auto& g = sys.group();
  std::string out;
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const auto& p = s.parts[i];
    if (i) out += " x ";
    out += sys.components()[i].name + ":" + mask_string(g, p.left) + (p.left_restricted ? "(fin)" : "") + " [" +
           std::to_string(p.lo) + ":";
    for (Subset m : p.window) out += " " + mask_string(g, m);
    out += "] " + mask_string(g, p.right) + (p.right_restricted ? "(fin)" : "");
  }
  return out;
}

}  // namespace padyn
