#include "padyn_cli/json_io.hpp"

#include <algorithm>

#include "padyn/errors.hpp"

namespace padyn::cli {

Json to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected an integer or a \"num/den\" string, got " + j.dump());
}

Json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
  return rows;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != j.size()) throw InvalidInput("matrix must be square");
    std::vector<Rational> row;
    for (const auto& x : r) row.push_back(rational_from_json(x));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Json slopes_json(const NewtonPolygon& polygon) {
  Json out = Json::array();
  const auto& segs = polygon.segments();
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    out.push_back(Json::array({Json(it->slope.get_num().get_str()), Json(it->slope.get_den().get_str()),
                               it->multiplicity}));
  }
  // Integers that fit are emitted as numbers.
  for (auto& s : out) {
    for (int k = 0; k < 2; ++k) {
      const Integer v(s[k].get<std::string>());
      if (v.fits_slong_p()) s[k] = v.get_si();
    }
  }
  return out;
}

Json to_json(const HeisElement& g) {
  Json coords = Json::array();
  for (const auto& c : g.coords) coords.push_back(to_json(c));
  return Json{{"carrier", to_string(g.carrier)}, {"coords", coords}, {"text", to_string(g)}};
}

HeisElement heis_element_from_json(const Json& j, const PrimeContext& ctx) {
  const Carrier c = parse_carrier(j.at("carrier").get<std::string>());
  std::vector<Rational> coords;
  for (const auto& x : j.at("coords")) coords.push_back(rational_from_json(x));
  return make_element(c, std::move(coords), ctx);
}

Json to_json(const DiagAuto& alpha) {
  return Json{{"carrier", to_string(alpha.carrier)}, {"exponents", alpha.exponents}};
}

DiagAuto diag_auto_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("automorphism must be an object with carrier and exponents");
  DiagAuto a{parse_carrier(j.at("carrier").get<std::string>()), {}};
  for (const auto& e : j.at("exponents")) {
    if (!e.is_number_integer()) throw InvalidInput("exponents must be integers");
    a.exponents.push_back(e.get<long>());
  }
  a.validate();
  return a;
}

Json trace_json(const std::vector<TraceStep>& trace) {
  Json out = Json::array();
  for (const auto& s : trace) {
    Json ops = Json::array();
    for (const auto& o : s.operands) ops.push_back(to_json(o));
    out.push_back(Json{{"op", s.op}, {"operands", ops}, {"result", to_json(s.result)}});
  }
  return out;
}

std::vector<TraceStep> trace_from_json(const Json& j, const PrimeContext& ctx) {
  std::vector<TraceStep> out;
  for (const auto& s : j) {
    TraceStep step{s.at("op").get<std::string>(), {}, heis_element_from_json(s.at("result"), ctx)};
    for (const auto& o : s.at("operands")) step.operands.push_back(heis_element_from_json(o, ctx));
    out.push_back(std::move(step));
  }
  return out;
}

namespace {

bool restricted_flag(const Json& j, const char* key) {
  if (!j.contains(key)) return false;
  const std::string v = j.at(key).get<std::string>();
  if (v == "restricted") return true;
  if (v == "full") return false;
  throw InvalidInput(std::string(key) + " must be \"restricted\" or \"full\"");
}

FiniteGroup group_from_json(const Json& j) {
  if (j.is_string()) return FiniteGroup::named(j.get<std::string>());
  if (!j.is_object()) throw InvalidInput("F must be a group name or {\"elements\", \"mul\"}");
  const auto labels = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("mul")) {
    std::vector<int> r;
    for (const auto& x : row) {
      if (x.is_number_integer()) {
        r.push_back(x.get<int>());
      } else {
        const auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
        if (it == labels.end()) throw InvalidInput("unknown label in multiplication table: " + x.dump());
        r.push_back(static_cast<int>(it - labels.begin()));
      }
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup(labels, std::move(table));
}

Tail tail_from_json(const FiniteGroup& g, const Json& j) {
  if (j.is_string() && j.get<std::string>() == "trivial") return Tail::constant(g.identity());
  if (j.is_object() && j.contains("constant")) return Tail::constant(g.index_of(j.at("constant").get<std::string>()));
  if (j.is_object() && j.contains("periodic")) {
    std::vector<int> w;
    for (const auto& l : j.at("periodic")) w.push_back(g.index_of(l.get<std::string>()));
    return Tail(std::move(w));
  }
  throw InvalidInput("tail must be \"trivial\", {\"constant\": label} or {\"periodic\": [labels]}");
}

Json tail_json(const FiniteGroup& g, const Tail& t) {
  if (t.is_constant() && t.word()[0] == g.identity()) return "trivial";
  if (t.is_constant()) return Json{{"constant", g.label(t.word()[0])}};
  Json w = Json::array();
  for (int a : t.word()) w.push_back(g.label(a));
  return Json{{"periodic", w}};
}

Json labels_json(const FiniteGroup& g, Subset s) { return g.labels_of(s); }

}  // namespace

ShiftSystem shift_system_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("system declaration must be an object");
  FiniteGroup f = group_from_json(j.at("F"));
  ShiftDirection dir = ShiftDirection::Right;
  if (j.contains("shift")) {
    const std::string s = j.at("shift").get<std::string>();
    if (s == "left") {
      dir = ShiftDirection::Left;
    } else if (s != "right") {
      throw InvalidInput("shift must be \"right\" or \"left\"");
    }
  }
  if (j.contains("components")) {
    std::vector<std::pair<bool, bool>> sides;
    for (const auto& c : j.at("components")) sides.emplace_back(restricted_flag(c, "left"), restricted_flag(c, "right"));
    return ShiftSystem::product(f, sides, dir);
  }
  const bool left = restricted_flag(j, "left");
  const bool right = restricted_flag(j, "right");
  if (j.value("semidirect", false)) {
    Splitting split{};
    if (j.contains("split")) {
      const auto& s = j.at("split");
      split = make_splitting(f, f.subset_of(s.at("N").get<std::vector<std::string>>()),
                             f.subset_of(s.at("H").get<std::vector<std::string>>()));
    } else if (j.at("F").is_string() && j.at("F").get<std::string>() == "S3") {
      split = s3_splitting(f);
    } else {
      throw InvalidInput("a semidirect system needs a split {\"N\", \"H\"}");
    }
    return ShiftSystem::semidirect(std::move(f), split, left, right, dir);
  }
  return ShiftSystem::plain(std::move(f), left, right, dir);
}

Json to_json(const ShiftSystem& sys, const SeqElement& e) {
  const auto& g = sys.group();
  Json window = Json::object();
  for (long k = e.lo(); k < e.hi(); ++k) window[std::to_string(k)] = g.label(e.value(k));
  return Json{{"window", window},
              {"left_tail", tail_json(g, e.left())},
              {"right_tail", tail_json(g, e.right())},
              {"text", to_string(sys, e)}};
}

SeqElement seq_element_from_json(const ShiftSystem& sys, const Json& j) {
  const auto& g = sys.group();
  const Tail left = j.contains("left_tail") ? tail_from_json(g, j.at("left_tail")) : Tail::constant(g.identity());
  const Tail right = j.contains("right_tail") ? tail_from_json(g, j.at("right_tail")) : Tail::constant(g.identity());
  std::vector<std::pair<long, int>> entries;
  if (j.contains("window")) {
    for (const auto& [k, v] : j.at("window").items()) {
      std::size_t used = 0;
      long idx = 0;
      try {
        idx = std::stol(k, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != k.size() || k.empty()) throw InvalidInput("window keys must be integers, got '" + k + "'");
      entries.emplace_back(idx, g.index_of(v.get<std::string>()));
    }
  }
  std::sort(entries.begin(), entries.end());
  if (entries.empty()) return SeqElement(0, {}, left, right);
  const long lo = entries.front().first;
  std::vector<int> w(static_cast<std::size_t>(entries.back().first - lo + 1), g.identity());
  for (const auto& [k, v] : entries) w[static_cast<std::size_t>(k - lo)] = v;
  const SeqElement e(lo, std::move(w), left, right);
  if (!sys.in_carrier(e)) throw InvalidInput("element has infinite support on a restricted side of the carrier");
  return e;
}

Json to_json(const ShiftSystem& sys, const ProductSubgroup& s) {
  const auto& g = sys.group();
  Json parts = Json::array();
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const auto& p = s.parts[i];
    Json window = Json::object();
    for (std::size_t k = 0; k < p.window.size(); ++k) {
      window[std::to_string(p.lo + static_cast<long>(k))] = labels_json(g, p.window[k]);
    }
    parts.push_back(Json{{"name", sys.components()[i].name},
                         {"left", labels_json(g, p.left)},
                         {"left_restricted", p.left_restricted},
                         {"left_clipped", p.left_clipped},
                         {"window", window},
                         {"right", labels_json(g, p.right)},
                         {"right_restricted", p.right_restricted},
                         {"right_clipped", p.right_clipped}});
  }
  return Json{{"components", parts}, {"text", to_string(sys, s)}};
}

Json to_json(const SemiDirElement& g) { return Json{{"n", g.n}, {"u", to_json(g.u)}, {"v", to_json(g.v)}}; }

SemiDirElement semidir_from_json(const Json& j) {
  return {j.at("n").get<long>(), rational_from_json(j.at("u")), rational_from_json(j.at("v"))};
}

}  // namespace padyn::cli
