// plord command-line interface: sign queries, witness constructions,
// dynamical realizations, convergence probes, and the three separation
// demonstrations, all with JSON input and output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "plord/error.hpp"
#include "plord/harness.hpp"
#include "plord/json_io.hpp"
#include "plord/limits.hpp"
#include "plord/random_gen.hpp"
#include "plord/realization.hpp"
#include "plord/witness.hpp"

using namespace plord;

namespace {

constexpr int kSchemaVersion = 1;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

struct Output {
  std::string path;    // empty = stdout
  std::string format;  // "json" or "text"

  void emit(Json j, const std::string& text_summary) const {
    j["schema_version"] = kSchemaVersion;
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file)
        throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
      out = &file;
    }
    if (format == "text")
      *out << text_summary << "\n";
    else
      *out << j.dump(2) << "\n";
  }
};

Json sign_result_json(const OrderingSpec& spec, const PLHomeo& f,
                      const PLHomeo& g) {
  Json out;
  if (const auto* std_ord = std::get_if<StandardOrdering>(&spec)) {
    CompareResult r = compare_standard(*std_ord, f, g);
    out["sign"] = sign_to_string(r.sign);
    if (r.witness_index) {
      out["witness_index"] = r.witness_index->get_str();
      out["witness_point"] = rat_to_string(*r.witness_point);
    }
  } else if (const auto* staged = std::get_if<StagedOrdering>(&spec)) {
    StagedCompareResult r = compare_staged(*staged, f, g);
    out["sign"] = sign_to_string(r.sign);
    if (r.witness) {
      out["witness"] = {{"stage", r.witness->first},
                        {"index", r.witness->second.get_str()}};
      out["witness_point"] = rat_to_string(*r.witness_point);
    }
  } else {
    const auto& comp = std::get<CompositeOrdering>(spec);
    // left order: f vs g is the sign of g^-1 f against the identity
    PLHomeo rel = compose(invert(g), f);
    out["sign"] = sign_to_string(sign_composite(comp, rel));
    out["via"] = germ_at_infinity(rel).is_trivial() ? "interior" : "germ";
  }
  return out;
}

std::string sign_text(const Json& j) {
  std::string s = "sign: " + j.at("sign").get<std::string>();
  if (j.contains("witness_point"))
    s += "  at " + j.at("witness_point").get<std::string>();
  return s;
}

int cmd_sign(const std::string& ordering_path, const std::string& fn_path,
             const std::string& gn_path, const Output& output) {
  OrderingSpec spec = ordering_spec_from_json(load_json(ordering_path));
  PLHomeo f = pl_homeo_from_json(load_json(fn_path));
  PLHomeo g = gn_path.empty() ? PLHomeo::identity()
                              : pl_homeo_from_json(load_json(gn_path));
  Json out = sign_result_json(spec, f, g);
  output.emit(out, sign_text(out));
  return 0;
}

int cmd_absets(const std::string& fn_path, const Output& output) {
  PLHomeo f = pl_homeo_from_json(load_json(fn_path));
  SignSets s = sign_sets(f, PLHomeo::identity());
  Json out;
  out["above"] = interval_set_to_json(s.above);
  out["below"] = interval_set_to_json(s.below);
  out["germ"] = {{"slope", rat_to_string(germ_at_infinity(f).slope)},
                 {"offset", rat_to_string(germ_at_infinity(f).offset)}};
  output.emit(out, "above: " + s.above.to_string() +
                       "\nbelow: " + s.below.to_string());
  return 0;
}

int cmd_anb(const std::string& inputs_path, const Output& output) {
  Json j = load_json(inputs_path);
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "inputs must be an array of maps");
  std::vector<PLHomeo> fs;
  for (const auto& e : j) fs.push_back(pl_homeo_from_json(e));
  AnBResult r = build_anb(fs);
  output.emit(anb_result_to_json(r),
              "common set: " + r.certificate.common.to_string() +
                  "\nrounds: " + std::to_string(r.rounds));
  return 0;
}

int cmd_approximate(const std::string& inputs_path, const Output& output) {
  Json j = load_json(inputs_path);
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "inputs must be an array of maps");
  std::vector<PLHomeo> fs;
  for (const auto& e : j) fs.push_back(pl_homeo_from_json(e));
  StandardOrdering ord = approximate_typical(fs);
  Json out = standard_ordering_to_json(ord);
  std::string text = "prefix:";
  for (const auto& p : ord.stream.prefix) text += " " + rat_to_string(p);
  output.emit(out, text);
  return 0;
}

int cmd_realize(const std::string& group, int radius, int dim,
                const std::string& generators_path,
                const std::string& ordering_path, const Output& output) {
  std::unique_ptr<GroupOracle> oracle;
  if (group == "z") {
    oracle = std::make_unique<ZdLexOracle>(1);
  } else if (group == "z2lex") {
    oracle = std::make_unique<ZdLexOracle>(2);
  } else if (group == "zdlex") {
    oracle = std::make_unique<ZdLexOracle>(dim);
  } else if (group == "pl") {
    if (generators_path.empty() || ordering_path.empty())
      throw Error(ErrorCode::ParseError,
                  "--group pl needs --generators and --ordering");
    Json gens_json = load_json(generators_path);
    if (!gens_json.is_array())
      throw Error(ErrorCode::ParseError, "generators must be an array");
    std::vector<PLHomeo> gens;
    for (const auto& e : gens_json) gens.push_back(pl_homeo_from_json(e));
    OrderingSpec spec = ordering_spec_from_json(load_json(ordering_path));
    const auto* std_ord = std::get_if<StandardOrdering>(&spec);
    if (!std_ord)
      throw Error(ErrorCode::ParseError,
                  "PL subgroup realization needs a standard ordering");
    oracle = std::make_unique<PLSubgroupOracle>(gens, *std_ord);
  } else {
    throw Error(ErrorCode::ParseError, "unknown group '" + group + "'");
  }
  RealizationResult r = realize(*oracle, radius);
  RecoveryReport report = check_recovery(r, *oracle);
  Json out = realization_to_json(r);
  out["recovery"] = recovery_report_to_json(report);
  output.emit(out, "elements: " + std::to_string(r.elements.size()) +
                       ", recovery violations: " +
                       std::to_string(report.violations.size()));
  return report.ok() ? 0 : 1;
}

OrderingSequence sequence_from_json(const Json& j,
                                    std::vector<StandardOrdering>& storage,
                                    std::shared_ptr<StagedOrdering>& staged,
                                    int budget) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    storage.push_back(standard_ordering_from_json(j.at("standard")));
    StandardOrdering fixed = storage.back();
    return OrderingSequence{[fixed](int) { return fixed; }, budget};
  }
  if (kind == "approximating") {
    staged = std::make_shared<StagedOrdering>(
        staged_ordering_from_json(j.at("staged")));
    auto held = staged;
    return OrderingSequence{
        [held](int n) { return approximating_sequence(*held, n); }, budget};
  }
  if (kind == "list") {
    const Json& arr = j.at("orderings");
    if (!arr.is_array() || arr.empty())
      throw Error(ErrorCode::ParseError, "'orderings' must be a nonempty array");
    for (const auto& e : arr)
      storage.push_back(standard_ordering_from_json(e));
    std::vector<StandardOrdering> list = storage;
    int capped = std::min<int>(budget, static_cast<int>(list.size()));
    return OrderingSequence{
        [list](int n) { return list[static_cast<size_t>(n - 1)]; }, capped};
  }
  throw Error(ErrorCode::ParseError, "unknown sequence kind '" + kind + "'");
}

int cmd_limits(const std::string& sequence_path, const std::string& tests_path,
               int budget, int prefix_len, const Output& output) {
  Json seq_json = load_json(sequence_path);
  std::vector<StandardOrdering> storage;
  std::shared_ptr<StagedOrdering> staged;
  OrderingSequence seq =
      sequence_from_json(seq_json, storage, staged, budget);
  Json tests_json = load_json(tests_path);
  if (!tests_json.is_array())
    throw Error(ErrorCode::ParseError, "tests must be an array of maps");
  std::vector<PLHomeo> tests;
  for (const auto& e : tests_json) tests.push_back(pl_homeo_from_json(e));
  StabilizationReport report = stabilization_probe(seq, tests);
  Json rows = Json::array();
  size_t stable_count = 0;
  for (const auto& row : report.rows) {
    Json r;
    Json trace = Json::array();
    for (Sign s : row.trace) trace.push_back(sign_to_string(s));
    r["trace"] = std::move(trace);
    r["stabilized"] = row.stabilized;
    if (row.first_stable) r["first_stable"] = *row.first_stable;
    if (row.stabilized) ++stable_count;
    rows.push_back(std::move(r));
  }
  Json out;
  out["budget"] = seq.budget;
  out["rows"] = std::move(rows);
  if (prefix_len > 0) {
    auto entries = limit_prefix(seq, static_cast<size_t>(prefix_len));
    Json lp = Json::array();
    for (const auto& e : entries) {
      if (e)
        lp.push_back({{"point", rat_to_string(e->point)},
                      {"sign", sign_to_string(e->sign)}});
      else
        lp.push_back("not_stabilized");
    }
    out["limit_prefix"] = std::move(lp);
  }
  output.emit(out, "stabilized " + std::to_string(stable_count) + "/" +
                       std::to_string(report.rows.size()) + " test functions");
  return 0;
}

// The three demonstrations that the ordering classes are strictly nested:
// staged beyond standard, composite (germ-first) beyond staged, and an
// order that no crossing-set data can explain.
int cmd_hierarchy_demo(uint64_t seed, const Output& output) {
  Json out;
  bool ok = true;

  {  // staged orderings reach beyond single-stream ones
    StagedOrdering two;
    StagedOrdering::Stage pos, neg;
    pos.stream.region = IntervalSet::ray_above(0);
    neg.stream.region = IntervalSet::ray_below(0);
    two.stages = {pos, neg};
    Json section;
    auto pts = relevant_prefix(two, 12);
    Json outside = Json::array();
    for (const auto& rp : pts)
      if (rp.stage == 1 && rp.relevant)
        outside.push_back(rat_to_string(rp.point));
    section["stage2_relevant_points"] = outside;
    PLHomeo probe = pl_bump(-2, -1, make_rat(-1, 4));
    auto decided = compare_staged(two, probe, PLHomeo::identity());
    section["probe_sign"] = sign_to_string(decided.sign);
    section["probe_stage"] = decided.witness->first + 1;
    bool pass = !outside.empty() && decided.witness->first == 1;
    section["pass"] = pass;
    ok = ok && pass;
    out["staged_beyond_standard"] = std::move(section);
  }

  {  // germ-first composite beyond staged: same-germ pairs
    CompositeOrdering comp;
    comp.germ = {GermOrdering::Variant::EventuallyAbove, {}};
    comp.interior.stream.region = IntervalSet::whole_line();
    SeededGen gen(seed);
    Json samples = Json::array();
    bool pass = true;
    for (int i = 0; i < 8; ++i) {
      Rat x = gen.rat(20, 4);
      auto [hi, lo] = same_germ_pair(x);
      Sign s_hi = sign_composite(comp, hi);
      Sign s_lo = sign_composite(comp, lo);
      StagedOrdering first_at_x;
      StagedOrdering::Stage lead, rest_lo, rest_hi;
      lead.stream.prefix = {x};
      lead.stream.region = IntervalSet::whole_line();
      first_at_x.stages = {lead};
      auto r_hi = compare_staged(first_at_x, hi, PLHomeo::identity());
      auto r_lo = compare_staged(first_at_x, lo, PLHomeo::identity());
      bool sample_ok = s_hi == Sign::Positive && s_lo == Sign::Positive &&
                       r_hi.sign == flip(r_lo.sign);
      samples.push_back({{"x", rat_to_string(x)},
                         {"composite_signs", {sign_to_string(s_hi),
                                              sign_to_string(s_lo)}},
                         {"staged_signs", {sign_to_string(r_hi.sign),
                                           sign_to_string(r_lo.sign)}},
                         {"pass", sample_ok}});
      pass = pass && sample_ok;
    }
    Json section;
    section["samples"] = std::move(samples);
    section["pass"] = pass;
    ok = ok && pass;
    out["composite_beyond_staged"] = std::move(section);
  }

  {  // an ordering whose signs no crossing-set data can explain
    CompositeOrdering comp;
    comp.germ = {GermOrdering::Variant::EvalLex, {Rat(1), Rat(0)}};
    comp.interior.stream.region = IntervalSet::whole_line();
    auto [f, g] = separating_pair();
    Json section;
    section["f_sign"] = sign_to_string(sign_composite(comp, f));
    section["g_sign"] = sign_to_string(sign_composite(comp, g));
    section["f_above"] = interval_set_to_json(above_set(f));
    section["g_above"] = interval_set_to_json(above_set(g));
    auto report = typicality_probe(
        [&comp](const PLHomeo& h) { return sign_composite(comp, h); },
        {{f, g}});
    section["mismatch_certificate"] = typicality_report_to_json(report);
    bool pass = sign_composite(comp, f) == Sign::Positive &&
                sign_composite(comp, g) == Sign::Negative &&
                above_set(f).is_whole_line() && above_set(g).is_whole_line() &&
                !report.ok();
    section["pass"] = pass;
    ok = ok && pass;
    out["beyond_crossing_data"] = std::move(section);
  }

  out["pass"] = ok;
  output.emit(out, std::string("hierarchy demo: ") + (ok ? "pass" : "FAIL"));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orderings of piecewise-linear line homeomorphisms"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  output.format = "json";
  app.add_option("--out", output.path, "write output to a file")->capture_default_str();
  app.add_option("--format", output.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string ordering_path, fn_path, gn_path, inputs_path;
  std::string group, generators_path, sequence_path, tests_path;
  int radius = 2, dim = 2, budget = 12, prefix_len = 0;
  uint64_t seed = 1;

  auto* sign = app.add_subcommand("sign", "sign of a map under an ordering");
  sign->add_option("--ordering", ordering_path)->required();
  sign->add_option("--fn", fn_path)->required();

  auto* cmp = app.add_subcommand("compare", "compare two maps under an ordering");
  cmp->add_option("--ordering", ordering_path)->required();
  cmp->add_option("--f", fn_path)->required();
  cmp->add_option("--g", gn_path)->required();

  auto* absets = app.add_subcommand("absets", "crossing sets and germ of a map");
  absets->add_option("--fn", fn_path)->required();

  auto* anb = app.add_subcommand("anb", "one-sided products sharing the inputs' crossing sets");
  anb->add_option("--inputs", inputs_path)->required();

  auto* approx = app.add_subcommand("approximate", "standard ordering making the inputs positive");
  approx->add_option("--inputs", inputs_path)->required();

  auto* real = app.add_subcommand("realize", "dynamical realization of a left-ordered group");
  real->add_option("--group", group, "z, z2lex, zdlex, or pl")->required();
  real->add_option("--radius", radius)->required();
  real->add_option("--dim", dim, "dimension for zdlex");
  real->add_option("--generators", generators_path, "PL generators (JSON array)");
  real->add_option("--ordering", ordering_path, "ordering for pl groups");

  auto* limits = app.add_subcommand("limits", "sign stabilization along a sequence of orderings");
  auto* probe = limits->add_subcommand("probe", "per-function sign traces");
  probe->add_option("--sequence", sequence_path)->required();
  probe->add_option("--tests", tests_path)->required();
  probe->add_option("--budget", budget)->required();
  probe->add_option("--limit-prefix", prefix_len, "also recover this many prefix positions");

  auto* demo = app.add_subcommand("hierarchy-demo", "the three strict-inclusion demonstrations");
  demo->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sign->parsed()) return cmd_sign(ordering_path, fn_path, "", output);
    if (cmp->parsed()) return cmd_sign(ordering_path, fn_path, gn_path, output);
    if (absets->parsed()) return cmd_absets(fn_path, output);
    if (anb->parsed()) return cmd_anb(inputs_path, output);
    if (approx->parsed()) return cmd_approximate(inputs_path, output);
    if (real->parsed())
      return cmd_realize(group, radius, dim, generators_path, ordering_path,
                         output);
    if (limits->parsed())
      return cmd_limits(sequence_path, tests_path, budget, prefix_len, output);
    if (demo->parsed()) return cmd_hierarchy_demo(seed, output);
  } catch (const Error& e) {
    Json err;
    err["schema_version"] = kSchemaVersion;
    err["error"] = error_code_name(e.code());
    err["message"] = e.what();
    if (!e.detail().empty()) err["detail"] = e.detail();
    std::cerr << err.dump(2) << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << R"({"error":"internal","message":")" << e.what() << "\"}\n";
    return 1;
  }
  return 2;
}
