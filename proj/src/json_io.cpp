#include "plord/json_io.hpp"

#include "plord/error.hpp"

namespace plord {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Sign sign_from_json(const Json& j) {
  return sign_from_string(as_string(j, "sign"));
}

SignAssignment signs_from_json(const Json& j) {
  SignAssignment s;
  if (j.contains("signs")) {
    const Json& tbl = field(j, "signs");
    if (!tbl.is_object()) bad("'signs' must be an object");
    for (const auto& [key, val] : tbl.items()) {
      BigInt idx;
      if (mpz_set_str(idx.get_mpz_t(), key.c_str(), 10) != 0 || idx < 0)
        bad("sign table keys must be nonnegative integers");
      s.table[idx] = sign_from_json(val);
    }
  }
  if (j.contains("default"))
    s.default_sign = sign_from_json(j.at("default"));
  s.validate();
  return s;
}

Json signs_to_json_into(const SignAssignment& s, Json& out) {
  Json tbl = Json::object();
  for (const auto& [k, v] : s.table) tbl[k.get_str()] = sign_to_string(v);
  out["signs"] = std::move(tbl);
  out["default"] = sign_to_string(s.default_sign);
  return out;
}

std::vector<Rat> rat_list_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

Json rat_list_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rat_to_json(r));
  return out;
}

}  // namespace

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  return rat_from_string(as_string(j, "rational"));
}

Json interval_set_to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& iv : s.parts()) {
    Json pair = Json::array();
    pair.push_back(iv.lo ? rat_to_string(*iv.lo) : "-inf");
    pair.push_back(iv.hi ? rat_to_string(*iv.hi) : "inf");
    out.push_back(std::move(pair));
  }
  return out;
}

IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) bad("interval set must be an array");
  std::vector<Interval> parts;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad("interval must be a pair");
    Interval iv;
    std::string lo = as_string(e.at(0), "interval end");
    std::string hi = as_string(e.at(1), "interval end");
    if (lo != "-inf") iv.lo = rat_from_string(lo);
    if (hi != "inf") iv.hi = rat_from_string(hi);
    if (iv.lo && iv.hi && *iv.lo >= *iv.hi) bad("interval needs lo < hi");
    parts.push_back(std::move(iv));
  }
  return IntervalSet(std::move(parts));
}

Json pl_homeo_to_json(const PLHomeo& f) {
  Json out;
  Json breaks = Json::array();
  for (const auto& [x, y] : f.breaks()) {
    Json pair = Json::array();
    pair.push_back(rat_to_string(x));
    pair.push_back(rat_to_string(y));
    breaks.push_back(std::move(pair));
  }
  out["breaks"] = std::move(breaks);
  out["left_slope"] = rat_to_string(f.left_slope());
  out["right_slope"] = rat_to_string(f.right_slope());
  return out;
}

PLHomeo pl_homeo_from_json(const Json& j) {
  const Json& breaks = field(j, "breaks");
  if (!breaks.is_array()) bad("'breaks' must be an array");
  std::vector<std::pair<Rat, Rat>> bs;
  for (const auto& e : breaks) {
    if (!e.is_array() || e.size() != 2) bad("break must be an [x, y] pair");
    bs.emplace_back(rat_from_json(e.at(0)), rat_from_json(e.at(1)));
  }
  return PLHomeo::from_breaks(std::move(bs),
                              rat_from_json(field(j, "left_slope")),
                              rat_from_json(field(j, "right_slope")));
}

Json standard_ordering_to_json(const StandardOrdering& o) {
  Json out;
  out["kind"] = "standard";
  out["prefix"] = rat_list_to_json(o.stream.prefix);
  signs_to_json_into(o.signs, out);
  return out;
}

StandardOrdering standard_ordering_from_json(const Json& j) {
  StandardOrdering o;
  o.stream.region = IntervalSet::whole_line();
  if (j.contains("prefix"))
    o.stream.prefix = rat_list_from_json(j.at("prefix"), "'prefix'");
  o.signs = signs_from_json(j);
  o.validate();
  return o;
}

Json staged_ordering_to_json(const StagedOrdering& o) {
  Json out;
  out["kind"] = "staged";
  Json stages = Json::array();
  for (const auto& st : o.stages) {
    Json s;
    s["region"] = interval_set_to_json(st.stream.region);
    s["prefix"] = rat_list_to_json(st.stream.prefix);
    signs_to_json_into(st.signs, s);
    stages.push_back(std::move(s));
  }
  out["stages"] = std::move(stages);
  return out;
}

StagedOrdering staged_ordering_from_json(const Json& j) {
  StagedOrdering o;
  const Json& stages = field(j, "stages");
  if (!stages.is_array()) bad("'stages' must be an array");
  for (const auto& e : stages) {
    StagedOrdering::Stage st;
    st.stream.region = interval_set_from_json(field(e, "region"));
    if (e.contains("prefix"))
      st.stream.prefix = rat_list_from_json(e.at("prefix"), "'prefix'");
    st.signs = signs_from_json(e);
    o.stages.push_back(std::move(st));
  }
  o.validate();
  return o;
}

Json composite_ordering_to_json(const CompositeOrdering& o) {
  Json out;
  out["kind"] = "composite";
  Json germ;
  germ["variant"] = o.germ.variant == GermOrdering::Variant::EventuallyAbove
                        ? "eventually_above"
                        : "eval_lex";
  if (o.germ.variant == GermOrdering::Variant::EvalLex)
    germ["points"] = rat_list_to_json(o.germ.points);
  out["germ"] = std::move(germ);
  Json interior = standard_ordering_to_json(o.interior);
  interior.erase("kind");
  out["interior"] = std::move(interior);
  return out;
}

CompositeOrdering composite_ordering_from_json(const Json& j) {
  CompositeOrdering o;
  const Json& germ = field(j, "germ");
  std::string variant = as_string(field(germ, "variant"), "'variant'");
  if (variant == "eventually_above") {
    o.germ.variant = GermOrdering::Variant::EventuallyAbove;
  } else if (variant == "eval_lex") {
    o.germ.variant = GermOrdering::Variant::EvalLex;
    o.germ.points = rat_list_from_json(field(germ, "points"), "'points'");
  } else {
    bad("unknown germ variant '" + variant + "'");
  }
  o.interior = standard_ordering_from_json(field(j, "interior"));
  o.validate();
  return o;
}

OrderingSpec ordering_spec_from_json(const Json& j) {
  std::string kind = as_string(field(j, "kind"), "'kind'");
  if (kind == "standard") return standard_ordering_from_json(j);
  if (kind == "staged") return staged_ordering_from_json(j);
  if (kind == "composite") return composite_ordering_from_json(j);
  bad("unknown ordering kind '" + kind + "'");
}

Json ordering_spec_to_json(const OrderingSpec& spec) {
  return std::visit(
      [](const auto& o) -> Json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, StandardOrdering>)
          return standard_ordering_to_json(o);
        else if constexpr (std::is_same_v<T, StagedOrdering>)
          return staged_ordering_to_json(o);
        else
          return composite_ordering_to_json(o);
      },
      spec);
}

Json anb_result_to_json(const AnBResult& r) {
  Json out;
  Json gp = Json::array(), hp = Json::array();
  for (const auto& p : r.g_parts) gp.push_back(pl_homeo_to_json(p));
  for (const auto& p : r.h_parts) hp.push_back(pl_homeo_to_json(p));
  out["g_parts"] = std::move(gp);
  out["h_parts"] = std::move(hp);
  out["g"] = pl_homeo_to_json(r.g);
  out["h"] = pl_homeo_to_json(r.h);
  out["gamma"] = pl_homeo_to_json(r.gamma);
  out["rounds"] = r.rounds;
  Json cert;
  cert["common"] = interval_set_to_json(r.certificate.common);
  cert["g_above"] = interval_set_to_json(r.certificate.g_above);
  cert["g_below"] = interval_set_to_json(r.certificate.g_below);
  cert["h_above"] = interval_set_to_json(r.certificate.h_above);
  cert["h_below"] = interval_set_to_json(r.certificate.h_below);
  Json pa = Json::array(), pb = Json::array();
  for (const auto& s : r.certificate.part_above)
    pa.push_back(interval_set_to_json(s));
  for (const auto& s : r.certificate.part_below)
    pb.push_back(interval_set_to_json(s));
  cert["part_above"] = std::move(pa);
  cert["part_below"] = std::move(pb);
  out["certificate"] = std::move(cert);
  return out;
}

Json cone_report_to_json(const ConeReport& r) {
  Json out;
  out["samples_checked"] = r.samples_checked;
  out["products_checked"] = r.products_checked;
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json e;
    switch (viol.kind) {
      case ConeViolation::Kind::IdentityNotZero: e["kind"] = "identity"; break;
      case ConeViolation::Kind::Trichotomy: e["kind"] = "trichotomy"; break;
      case ConeViolation::Kind::ProductSign: e["kind"] = "product"; break;
    }
    e["description"] = viol.description;
    e["witnesses"] = viol.witnesses;
    v.push_back(std::move(e));
  }
  out["violations"] = std::move(v);
  return out;
}

Json typicality_report_to_json(const TypicalityReport& r) {
  Json out;
  out["pairs_checked"] = r.pairs_checked;
  Json m = Json::array();
  for (const auto& mm : r.mismatches) {
    Json e;
    e["pair"] = mm.pair_index;
    e["sign_f"] = sign_to_string(mm.sign_f);
    e["sign_g"] = sign_to_string(mm.sign_g);
    m.push_back(std::move(e));
  }
  out["mismatches"] = std::move(m);
  return out;
}

Json realization_to_json(const RealizationResult& r) {
  Json out;
  Json els = Json::array(), ts = Json::array(), rhos = Json::array();
  for (const auto& w : r.elements) els.push_back(word_to_string(w));
  for (const auto& t : r.t) ts.push_back(rat_to_string(t));
  for (const auto& f : r.rho) rhos.push_back(pl_homeo_to_json(f));
  out["elements"] = std::move(els);
  out["t"] = std::move(ts);
  out["rho"] = std::move(rhos);
  return out;
}

Json recovery_report_to_json(const RecoveryReport& r) {
  Json out;
  out["order_pairs_checked"] = r.order_pairs_checked;
  out["sign_checks"] = r.sign_checks;
  out["action_pairs_checked"] = r.action_pairs_checked;
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json e;
    e["kind"] = viol.kind;
    e["description"] = viol.description;
    v.push_back(std::move(e));
  }
  out["violations"] = std::move(v);
  return out;
}

}  // namespace plord
