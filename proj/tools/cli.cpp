#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "binact/action.hpp"
#include "binact/continuum.hpp"
#include "binact/enumerate.hpp"
#include "binact/gallery.hpp"
#include "binact/io.hpp"
#include "binact/morphisms.hpp"
#include "binact/properties.hpp"

namespace binact::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string space;
  std::string group;
  std::string point;
  std::string target;
  std::string output;
  std::string action;
  std::string format = "json";
  std::string ms = "3,5,8,12,16";
  std::vector<std::string> subgroups;
  std::size_t carrier = 0;
  bool enumerate = false;
  std::size_t budget = 10'000'000;
  std::size_t max_order = 64;
  std::uint64_t seed = 1;
  std::size_t dim = 2;
  std::size_t samples = 1000;
  std::size_t random = 0;
  std::optional<std::size_t> k;
  double tol_axiom = 1e-9;
  double tol_reach = 1e-6;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::string verdict = "pass";
  int exit_code = kPass;
  std::string summary;
};

// Space or windowed space resolved from --space.
struct ResolvedSpace {
  std::optional<BinaryGSpace> space;
  std::optional<WindowedIntSpace> windowed;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

void guard_order(std::size_t order, const Options& opt) {
  if (order > opt.max_order) {
    throw BudgetExceeded("group order " + std::to_string(order) + " exceeds --max-order " +
                         std::to_string(opt.max_order));
  }
}

FiniteGroup resolve_group(const std::string& ref, const Options& opt) {
  if (ref.empty()) throw UsageError("--group is required");
  auto group = parse_group_name(ref);
  if (!group) {
    if (!std::filesystem::exists(ref)) throw ShapeError("unknown group '" + ref + "'");
    group = load_group(ref);
  }
  guard_order(group->order(), opt);
  return *group;
}

ResolvedSpace resolve_space(const Options& opt) {
  if (opt.space.empty()) throw UsageError("--space is required");
  ResolvedSpace out;
  if (auto entry = resolve_gallery(opt.space)) {
    out.space = std::move(entry->space);
    out.windowed = std::move(entry->windowed);
  } else if (std::filesystem::exists(opt.space)) {
    out.space = load_space(opt.space);
  } else {
    throw ShapeError("unknown space '" + opt.space + "' (not a gallery name or file)");
  }
  if (out.space) guard_order(out.space->group_order(), opt);
  return out;
}

BinaryGSpace require_finite(const ResolvedSpace& r, const std::string& command) {
  if (!r.space) throw ShapeError(command + " needs a finite binary G-space, not a windowed one");
  return *r.space;
}

Index resolve_point(const BinaryGSpace& space, const std::string& ref, const char* flag) {
  if (ref.empty()) throw UsageError(std::string(flag) + " is required");
  const auto p = space.find_point(ref);
  if (!p) throw ShapeError(std::string(flag) + " '" + ref + "' is not a carrier point");
  return *p;
}

std::int64_t resolve_int(const std::string& ref, const char* flag) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(ref, &used);
    if (used == ref.size()) return v;
  } catch (const std::exception&) {
  }
  throw ShapeError(std::string(flag) + " '" + ref + "' is not an integer");
}

json labels_of(const BinaryGSpace& space, const PointSet& points) {
  json out = json::array();
  for (Index p : points) out.push_back(space.label(p));
  return out;
}

json step_json(const std::optional<std::size_t>& step) {
  return step ? json(*step) : json(nullptr);
}

json space_summary(const BinaryGSpace& space) {
  json labels = json::array();
  for (Index x = 0; x < space.carrier_size(); ++x) labels.push_back(space.label(x));
  json group_names = json::array();
  for (Index g = 0; g < space.group_order(); ++g) group_names.push_back(space.group().name(g));
  return {{"carrier", space.carrier_size()},
          {"group_order", space.group_order()},
          {"labels", labels},
          {"group_elements", group_names}};
}

json orbit_json(const BinaryGSpace& space, const OrbitReport& r) {
  json chain = json::array();
  for (const auto& level : r.chain) chain.push_back(labels_of(space, level));
  json witnesses = json::array();
  for (Index p = 0; p < r.witnesses.size(); ++p) {
    if (!r.witnesses[p]) continue;
    const auto& w = *r.witnesses[p];
    witnesses.push_back({{"point", space.label(p)},
                         {"g", space.group().name(w.g)},
                         {"first", space.label(w.first)},
                         {"second", space.label(w.second)},
                         {"level", w.level}});
  }
  return {{"base", space.label(r.base)},
          {"chain", chain},
          {"orbit", labels_of(space, r.orbit())},
          {"step", step_json(r.step)},
          {"witnesses", witnesses}};
}

json windowed_orbit_json(const WindowedIntSpace& w, const OrbitReport& r) {
  const auto values = [&](const PointSet& s) {
    json out = json::array();
    for (Index p : s) out.push_back(w.point_value(p));
    return out;
  };
  json chain = json::array();
  for (const auto& level : r.chain) chain.push_back(values(level));
  return {{"base", w.point_value(r.base)},
          {"window", w.window()},
          {"group_window", w.group_radius()},
          {"chain_sizes",
           [&] {
             json s = json::array();
             for (const auto& level : r.chain) s.push_back(level.size());
             return s;
           }()},
          {"orbit", values(r.orbit())},
          {"chain", chain},
          {"step", step_json(r.step)},
          {"escapes", r.escapes},
          {"partial", WindowedIntSpace::partial}};
}

json bimap_json(const BiMap& map) {
  json j = bimap_to_json(map);
  j["biequimorphism"] = map.is_biequimorphism();
  return j;
}

json members_json(const FiniteGroup& group, const Subgroup& h) {
  json out = json::array();
  for (Index g : h.members()) out.push_back(group.name(g));
  return out;
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ShapeError("--target entry '" + tok + "' is not a real number");
    }
  }
  return out;
}

json term_json(const ReachTerm& t) {
  if (t.is_base()) return "x0";
  return {{"g", t.g()}, {"first", term_json(t.first())}, {"second", term_json(t.second())}};
}

// --- commands ---------------------------------------------------------------

void cmd_validate(const Options& opt, Report& rep) {
  if (!opt.space.empty()) {
    rep.inputs["space"] = opt.space;
    const auto resolved = resolve_space(opt);
    const auto space = require_finite(resolved, "validate");
    try {
      const auto cert = validate_action(space);
      rep.results = space_summary(space);
      rep.results["identity_checks"] = cert.identity_checks;
      rep.results["composition_checks"] = cert.composition_checks;
      rep.summary = "valid binary action on " + std::to_string(space.carrier_size()) + " points";
    } catch (const AxiomViolation& e) {
      const auto& w = e.witness();
      rep.results = {{"law", to_string(e.law())},
                     {"witness", {{"g", w.g}, {"h", w.h}, {"x", w.x}, {"y", w.y}}},
                     {"message", e.what()}};
      rep.verdict = "fail";
      rep.exit_code = kInputError;
      rep.summary = e.what();
    }
    return;
  }
  rep.inputs["group"] = opt.group;
  try {
    const auto group = resolve_group(opt.group, opt);
    rep.results = {{"order", group.order()}};
    rep.summary = "valid group of order " + std::to_string(group.order());
  } catch (const NotAGroup& e) {
    rep.results = {{"reason", to_string(e.reason())}, {"triple", e.triple()}, {"message", e.what()}};
    rep.verdict = "fail";
    rep.exit_code = kInputError;
    rep.summary = e.what();
  }
}

void cmd_orbit(const Options& opt, Report& rep) {
  rep.inputs = {{"space", opt.space}, {"point", opt.point}};
  const auto resolved = resolve_space(opt);
  if (resolved.windowed) {
    const auto& w = *resolved.windowed;
    const auto x = resolve_int(opt.point, "--point");
    rep.results = windowed_orbit_json(w, w.orbit(x));
  } else {
    const auto& space = *resolved.space;
    const auto report = orbit(space, resolve_point(space, opt.point, "--point"));
    rep.results = orbit_json(space, report);
  }
  rep.summary = "step " + (rep.results["step"].is_null() ? std::string("none")
                                                          : rep.results["step"].dump());
}

void cmd_steps(const Options& opt, Report& rep) {
  rep.inputs = {{"space", opt.space}};
  const auto resolved = resolve_space(opt);
  json steps = json::array();
  json points = json::array();
  if (resolved.windowed) {
    const auto& w = *resolved.windowed;
    for (std::int64_t x = -w.window(); x <= w.window(); ++x) {
      const auto r = w.orbit(x);
      steps.push_back({{"point", x}, {"step", step_json(r.step)}, {"escapes", r.escapes}});
      if (r.step) points.push_back(x);
    }
  } else {
    const auto& space = *resolved.space;
    for (Index x = 0; x < space.carrier_size(); ++x) {
      const auto r = orbit(space, x);
      steps.push_back({{"point", space.label(x)},
                       {"step", step_json(r.step)},
                       {"orbit_size", r.orbit().size()}});
      if (r.step) points.push_back(space.label(x));
    }
  }
  rep.results = {{"steps", steps},
                 {"stabilization_points", points},
                 {"homogeneous", !points.empty()}};
  rep.summary = std::to_string(points.size()) + " stabilization point(s)";
}

void cmd_classify(const Options& opt, Report& rep) {
  rep.inputs = {{"space", opt.space}};
  const auto space = require_finite(resolve_space(opt), "classify");
  const auto dist = distributivity_counterexample(space);
  const auto trans = transitivity_failure(space);
  const auto homog = is_homogeneous(space);
  json isotropy_json = json::array();
  for (Index x = 0; x < space.carrier_size(); ++x) {
    isotropy_json.push_back(
        {{"point", space.label(x)}, {"subgroup", members_json(space.group(), isotropy(space, x))}});
  }
  rep.results = {{"distributive", !dist},
                 {"distributivity_counterexample", dist ? json(*dist) : json(nullptr)},
                 {"transitive", !trans},
                 {"transitivity_failure", trans ? json(space.label(*trans)) : json(nullptr)},
                 {"homogeneous", homog.homogeneous},
                 {"stabilization_points", labels_of(space, homog.stabilization_points)},
                 {"free", is_free(space)},
                 {"isotropy", isotropy_json}};
  const CensusFlags flags{!dist, !trans, homog.homogeneous, is_free(space)};
  rep.summary = flags.key();
}

EnumerationLimits limits_from(const Options& opt) {
  EnumerationLimits lim;
  lim.max_candidates = opt.budget;
  lim.max_group_order = std::max<std::size_t>(lim.max_group_order, 0);
  return lim;
}

json census_row_json(const CensusRow& row) {
  json steps = json::array();
  for (const auto& s : row.steps) steps.push_back(step_json(s));
  json partition = row.orbit_partition ? json(*row.orbit_partition) : json("overlapping");
  return {{"space_id", row.space_id},
          {"flags",
           {{"distributive", row.flags.distributive},
            {"transitive", row.flags.transitive},
            {"homogeneous", row.flags.homogeneous},
            {"free", row.flags.free}}},
          {"steps", steps},
          {"orbit_partition", partition}};
}

// Emits rows directly; the summary report follows as the last line.
void cmd_census(const Options& opt, Report& rep, std::ostream& out) {
  rep.inputs = {{"group", opt.group}, {"carrier", opt.carrier}, {"budget", opt.budget}};
  const auto group = resolve_group(opt.group, opt);
  if (opt.carrier == 0) throw UsageError("--carrier is required");
  const auto result = census(group, opt.carrier, limits_from(opt));
  for (const auto& row : result.rows) out << census_row_json(row).dump() << "\n";
  rep.results = {{"total", result.rows.size()}, {"counts", result.summary}};
  rep.summary = std::to_string(result.rows.size()) + " binary actions";
}

// Spaces selected by --space, or by --group with --enumerate --carrier.
std::vector<BinaryGSpace> selected_spaces(const Options& opt, Report& rep) {
  std::vector<BinaryGSpace> out;
  if (!opt.space.empty()) {
    rep.inputs["space"] = opt.space;
    out.push_back(require_finite(resolve_space(opt), rep.command));
  } else if (opt.enumerate) {
    rep.inputs["group"] = opt.group;
    rep.inputs["carrier"] = opt.carrier;
    rep.inputs["budget"] = opt.budget;
    if (opt.carrier == 0) throw UsageError("--enumerate needs --carrier");
    out = enumerate_binary_actions(resolve_group(opt.group, opt), opt.carrier, limits_from(opt));
  }
  return out;
}

void cmd_verify_thm1(const Options& opt, Report& rep) {
  const Index base = opt.point.empty() ? 0 : static_cast<Index>(resolve_int(opt.point, "--point"));
  rep.inputs["base"] = base;
  json cases = json::array();
  std::size_t examined = 0;
  if (!opt.space.empty() || opt.enumerate) {
    const auto spaces = selected_spaces(opt, rep);
    examined = spaces.size();
    for (const auto& space : spaces) {
      if (opt.enumerate && !(is_transitive(space) && is_distributive(space))) continue;
      const auto cls = classify_transitive_distributive(space, base);
      cases.push_back({{"space_id", space_hash(space)},
                       {"subgroup", members_json(space.group(), cls.subgroup)},
                       {"map", bimap_json(cls.map)}});
    }
  } else {
    rep.inputs["group"] = opt.group;
    const auto group = resolve_group(opt.group, opt);
    for (const auto& h : normal_subgroups(group)) {
      ++examined;
      const auto space = coset_action(group, h);
      const auto cls = classify_transitive_distributive(space, std::min<Index>(base, static_cast<Index>(space.carrier_size() - 1)));
      if (!(cls.subgroup == h)) {
        throw RefutedProposition("classification of G|H returned a different subgroup");
      }
      cases.push_back({{"normal_subgroup", members_json(group, h)},
                       {"recovered", members_json(group, cls.subgroup)},
                       {"map", bimap_json(cls.map)}});
    }
  }
  rep.results = {{"examined", examined}, {"classified", cases.size()}, {"cases", cases}};
  rep.summary = std::to_string(cases.size()) + " space(s) classified";
}

void cmd_verify_thm2(const Options& opt, Report& rep) {
  json cases = json::array();
  std::size_t examined = 0;
  std::vector<BinaryGSpace> spaces;
  if (!opt.space.empty() || opt.enumerate) {
    spaces = selected_spaces(opt, rep);
  } else {
    rep.inputs["group"] = opt.group;
    spaces.push_back(standard_distributive_action(resolve_group(opt.group, opt)));
  }
  for (const auto& space : spaces) {
    ++examined;
    if (opt.enumerate && !(is_free(space) && is_transitive(space) && is_distributive(space))) {
      continue;
    }
    const auto map = verify_theorem2(space);
    cases.push_back({{"space_id", space_hash(space)}, {"map", bimap_json(map)}});
  }
  rep.results = {{"examined", examined}, {"verified", cases.size()}, {"cases", cases}};
  rep.summary = std::to_string(cases.size()) + " free transitive distributive space(s) verified";
}

void cmd_verify_prop2(const Options& opt, Report& rep) {
  rep.inputs = {{"group", opt.group}, {"budget", opt.budget}, {"subgroups", opt.subgroups}};
  const auto group = resolve_group(opt.group, opt);
  std::vector<std::pair<Subgroup, Subgroup>> pairs;
  if (opt.subgroups.empty()) {
    const auto normals = normal_subgroups(group);
    for (const auto& h : normals) {
      for (const auto& k : normals) pairs.emplace_back(h, k);
    }
  } else if (opt.subgroups.size() == 2) {
    const auto h = subgroup_closure(group, parse_element_list(group, opt.subgroups[0]));
    const auto k = subgroup_closure(group, parse_element_list(group, opt.subgroups[1]));
    pairs.emplace_back(h, k);
  } else {
    throw UsageError("--subgroup must be given exactly twice (H then K) or not at all");
  }
  json cases = json::array();
  for (const auto& [h, k] : pairs) {
    const auto res = verify_prop2(group, h, k, SearchBudget{opt.budget});
    cases.push_back({{"H", members_json(group, h)},
                     {"K", members_json(group, k)},
                     {"contained", res.contained},
                     {"map_count", res.map_count},
                     {"example", res.example ? json(*res.example) : json(nullptr)},
                     {"holds", res.holds}});
  }
  rep.results = {{"pairs", cases.size()}, {"cases", cases}};
  rep.summary = std::to_string(cases.size()) + " ordered pair(s) agree with H <= K";
}

void cmd_verify_implications(const Options& opt, Report& rep) {
  rep.inputs = {{"group", opt.group},
                {"carrier", opt.carrier},
                {"random", opt.random},
                {"seed", opt.seed},
                {"budget", opt.budget}};
  const auto group = resolve_group(opt.group, opt);
  if (opt.carrier == 0) throw UsageError("--carrier is required");
  PropertyTally tally;
  std::mt19937_64 rng(opt.seed);
  json witnesses = json::array();
  std::size_t examined = 0;
  const auto check = [&](const BinaryGSpace& space) {
    const std::size_t before = tally.violations.size();
    check_implications(space, rng, tally);
    check_translations(space, tally);
    ++examined;
    for (std::size_t i = before; i < tally.violations.size(); ++i) {
      const auto& v = tally.violations[i];
      witnesses.push_back({{"property", v.property},
                           {"space_id", v.space_id},
                           {"detail", v.detail},
                           {"space", space_to_json(space)}});
    }
  };
  if (opt.random > 0) {
    const auto homs = enumerate_homomorphisms(group, opt.carrier, limits_from(opt));
    for (std::size_t i = 0; i < opt.random; ++i) {
      check(random_binary_action(group, homs, opt.carrier, rng));
    }
  } else {
    for_each_binary_action(group, opt.carrier, check, limits_from(opt));
  }
  rep.results = {{"spaces", examined}, {"checks", tally.checks}, {"violations", witnesses}};
  if (!tally.clean()) {
    rep.verdict = "refuted";
    rep.exit_code = kRefuted;
  }
  rep.summary = std::to_string(examined) + " space(s), " +
                std::to_string(tally.violations.size()) + " violation(s)";
}

void cmd_gallery(const Options& opt, Report& rep) {
  rep.inputs = {{"action", opt.action}};
  if (opt.action == "list") {
    json list = json::array();
    for (const auto& [name, text] : gallery_catalog()) {
      list.push_back({{"name", name}, {"description", text}});
    }
    rep.results = {{"spaces", list}};
    rep.summary = std::to_string(list.size()) + " gallery entries";
    return;
  }
  if (opt.action == "family") {
    std::vector<std::size_t> ms;
    for (const auto& tok : split(opt.ms, ',')) ms.push_back(static_cast<std::size_t>(resolve_int(tok, "--ms")));
    rep.inputs["ms"] = opt.ms;
    rep.results = dihedral_family(ms);
    rep.summary = "dihedral family steps";
    return;
  }
  rep.inputs["space"] = opt.space;
  const auto resolved = resolve_space(opt);
  if (opt.action == "construct") {
    if (resolved.windowed) {
      const auto& w = *resolved.windowed;
      rep.results = {{"window", w.window()},
                     {"carrier", w.carrier_size()},
                     {"group_window", w.group_radius()},
                     {"partial", WindowedIntSpace::partial}};
    } else {
      const auto& space = *resolved.space;
      const auto cert = validate_action(space);
      rep.results = space_summary(space);
      rep.results["composition_checks"] = cert.composition_checks;
    }
    rep.summary = "constructed " + opt.space;
  } else if (opt.action == "export") {
    const auto space = require_finite(resolved, "gallery export");
    const json doc = space_to_json(space);
    if (!opt.output.empty()) {
      std::ofstream file(opt.output);
      if (!file) throw ShapeError("cannot write " + opt.output);
      file << doc.dump(2) << "\n";
      rep.inputs["output"] = opt.output;
    }
    rep.results = {{"space", doc}};
    rep.summary = "exported " + opt.space;
  } else {
    throw UsageError("gallery action must be list, construct, export or family");
  }
}

void cmd_continuum(const Options& opt, Report& rep) {
  rep.inputs = {{"action", opt.action},
                {"dim", opt.dim},
                {"seed", opt.seed},
                {"samples", opt.samples},
                {"tol_axiom", opt.tol_axiom},
                {"tol_reach", opt.tol_reach}};
  const EuclideanAction action(opt.dim, opt.tol_axiom, opt.tol_reach);
  bool pass = true;
  if (opt.action == "axioms") {
    const auto r = check_axioms_sampled(action, opt.samples, opt.seed);
    rep.results = {{"samples", r.samples},
                   {"box", r.box},
                   {"max_identity_residual", r.max_identity},
                   {"max_composition_residual", r.max_composition},
                   {"pass", r.pass}};
    pass = r.pass;
  } else if (opt.action == "reach") {
    if (opt.target.empty()) throw UsageError("continuum reach needs --target");
    rep.inputs["target"] = opt.target;
    const auto z = parse_vector(opt.target);
    const auto term = reach(action, z);
    const auto value = term.evaluate(action);
    double err = 0;
    for (std::size_t i = 0; i < z.size(); ++i) err = std::max(err, std::abs(value[i] - z[i]));
    pass = err < action.tol_reach() && term.depth() <= action.dim();
    rep.results = {{"term", term_json(term)},
                   {"depth", term.depth()},
                   {"evaluated", value},
                   {"error", err},
                   {"pass", pass}};
  } else if (opt.action == "witness") {
    json levels = json::array();
    const std::size_t lo = opt.k ? *opt.k : 0, hi = opt.k ? *opt.k : opt.dim;
    if (hi > opt.dim) throw UsageError("--k exceeds --dim");
    for (std::size_t k = lo; k <= hi; ++k) {
      const auto w = subspace_witness(action, k, opt.seed, opt.samples, 100);
      levels.push_back({{"k", k},
                        {"max_tail", w.max_tail},
                        {"inclusion_pass", w.inclusion_pass},
                        {"max_reach_error", w.max_reach_error},
                        {"max_depth", w.max_depth},
                        {"surjectivity_pass", w.surjectivity_pass}});
      pass = pass && w.inclusion_pass && w.surjectivity_pass;
    }
    rep.results = {{"levels", levels}, {"stabilization_step", opt.dim}, {"pass", pass}};
  } else {
    throw UsageError("continuum action must be axioms, reach or witness");
  }
  if (!pass) {
    rep.verdict = "refuted";
    rep.exit_code = kRefuted;
  }
  rep.summary = std::string("continuum ") + opt.action + (pass ? " pass" : " FAIL");
}

void cmd_translate(const Options& opt, Report& rep) {
  rep.inputs = {{"space", opt.space}, {"point", opt.point}, {"target", opt.target}};
  const auto space = require_finite(resolve_space(opt), "translate");
  const Index source = resolve_point(space, opt.point, "--point");
  const auto report = orbit(space, source);
  PointSet targets = report.orbit();
  if (!opt.target.empty()) targets = {resolve_point(space, opt.target, "--target")};
  json cases = json::array();
  bool all_ok = true;
  for (Index t : targets) {
    const auto tr = point_translation(space, report, t);
    json factors = json::array();
    for (const auto& f : tr.factors) {
      factors.push_back({{"g", space.group().name(f.g)}, {"anchor", space.label(f.anchor)}});
    }
    json map = json::array();
    for (Index y = 0; y < space.carrier_size(); ++y) map.push_back(space.label(tr.map(y)));
    const bool ok = tr.map(source) == t && Permutation::is_bijection(tr.map.images());
    all_ok = all_ok && ok;
    cases.push_back({{"target", space.label(t)},
                     {"factors", factors},
                     {"map", map},
                     {"verified", ok}});
  }
  rep.results = {{"source", space.label(source)}, {"translations", cases}};
  if (!all_ok) {
    rep.verdict = "refuted";
    rep.exit_code = kRefuted;
  }
  rep.summary = std::to_string(cases.size()) + " translation(s)";
}

json error_json(const std::exception& e, const char* type) {
  return {{"error", {{"type", type}, {"message", e.what()}}}};
}

}  // namespace

json dihedral_family(std::span<const std::size_t> ms) {
  json family = json::array();
  for (std::size_t m : ms) {
    const auto space = dihedral_conjugation_space(m);
    const auto r = orbit(space, dihedral_base_point(m));
    json sizes = json::array();
    for (const auto& level : r.chain) sizes.push_back(level.size());
    family.push_back({{"m", m},
                      {"carrier", space.carrier_size()},
                      {"chain_sizes", sizes},
                      {"orbit_size", r.orbit().size()},
                      {"step", step_json(r.step)}});
  }
  return {{"family", family}};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite binary G-spaces: orbits, stabilization steps, classification", "binact"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options opt;

  const auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", opt.space, "gallery name or binary-action JSON file");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json"}));
    sub->add_option("--max-order", opt.max_order, "largest accepted group order");
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "candidate cap for exhaustive searches");
  };

  std::map<std::string, CLI::App*> subs;
  const auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_common(s);
    subs[name] = s;
    return s;
  };

  auto* validate = sub("validate", "validate a group or binary action");
  add_space(validate);
  validate->add_option("--group", opt.group, "group name or JSON file");

  auto* orbit_cmd = sub("orbit", "orbit chain, witnesses and step at one point");
  add_space(orbit_cmd);
  orbit_cmd->add_option("--point", opt.point, "carrier label or index")->required();

  add_space(sub("steps", "stabilization step at every point"));
  add_space(sub("classify", "distributive / transitive / homogeneous / free flags"));

  auto* census_cmd = sub("census", "all binary actions of a group on m points (JSON lines)");
  census_cmd->add_option("--group", opt.group)->required();
  census_cmd->add_option("--carrier", opt.carrier)->required();
  add_budget(census_cmd);

  for (const char* name : {"verify-thm1", "verify-thm2"}) {
    auto* s = sub(name, name[8] == '1' ? "classify transitive distributive spaces as G|H"
                                       : "free transitive distributive spaces vs the eta-space");
    add_space(s);
    s->add_option("--group", opt.group);
    s->add_flag("--enumerate", opt.enumerate, "run over every binary action on --carrier points");
    s->add_option("--carrier", opt.carrier);
    s->add_option("--point", opt.point, "base point index");
    add_budget(s);
  }

  auto* prop2 = sub("verify-prop2", "biequivariant G|H -> G|K exists iff H <= K");
  prop2->add_option("--group", opt.group)->required();
  prop2->add_option("--subgroup", opt.subgroups, "generator list; give twice for H and K");
  add_budget(prop2);

  auto* impl = sub("verify-implications", "implication suite over a census or random sample");
  impl->add_option("--group", opt.group)->required();
  impl->add_option("--carrier", opt.carrier)->required();
  impl->add_option("--random", opt.random, "sample this many random spaces instead");
  impl->add_option("--seed", opt.seed);
  add_budget(impl);

  auto* gallery = sub("gallery", "list, construct or export gallery spaces");
  gallery->add_option("action", opt.action, "list | construct | export | family")->required();
  add_space(gallery);
  gallery->add_option("--output", opt.output, "write the exported action file here");
  gallery->add_option("--ms", opt.ms, "dihedral family parameters");

  auto* cont = sub("continuum", "the R^n hyperspherical binary action");
  cont->add_option("action", opt.action, "axioms | reach | witness")->required();
  cont->add_option("--dim", opt.dim);
  cont->add_option("--samples", opt.samples);
  cont->add_option("--seed", opt.seed);
  cont->add_option("--tol-axiom", opt.tol_axiom);
  cont->add_option("--tol-reach", opt.tol_reach);
  cont->add_option("--target", opt.target, "comma-separated reals");
  cont->add_option("--k", opt.k, "single subspace level");

  auto* translate = sub("translate", "point translation audit");
  add_space(translate);
  translate->add_option("--point", opt.point, "source point")->required();
  translate->add_option("--target", opt.target, "target point (default: whole orbit)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  std::string command;
  for (const auto& [name, s] : subs) {
    if (s->parsed()) command = name;
  }
  Report rep;
  rep.command = command;
  std::ostringstream census_rows;
  try {
    if (command == "validate") cmd_validate(opt, rep);
    else if (command == "orbit") cmd_orbit(opt, rep);
    else if (command == "steps") cmd_steps(opt, rep);
    else if (command == "classify") cmd_classify(opt, rep);
    else if (command == "census") cmd_census(opt, rep, census_rows);
    else if (command == "verify-thm1") cmd_verify_thm1(opt, rep);
    else if (command == "verify-thm2") cmd_verify_thm2(opt, rep);
    else if (command == "verify-prop2") cmd_verify_prop2(opt, rep);
    else if (command == "verify-implications") cmd_verify_implications(opt, rep);
    else if (command == "gallery") cmd_gallery(opt, rep);
    else if (command == "continuum") cmd_continuum(opt, rep);
    else if (command == "translate") cmd_translate(opt, rep);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  } catch (const RefutedProposition& e) {
    rep.results = error_json(e, "RefutedProposition");
    rep.verdict = "refuted";
    rep.exit_code = kRefuted;
    rep.summary = e.what();
  } catch (const BudgetExceeded& e) {
    rep.results = error_json(e, "BudgetExceeded");
    rep.verdict = "fail";
    rep.exit_code = kBudgetExceeded;
    rep.summary = e.what();
  } catch (const NotNormal& e) {
    const auto& w = e.witness();
    rep.results = error_json(e, "NotNormal");
    rep.results["witness"] = {{"g", w.g},           {"g1", w.g1},       {"g2", w.g2},
                              {"g1_alt", w.g1_alt}, {"g2_alt", w.g2_alt}, {"coset", w.coset},
                              {"coset_alt", w.coset_alt}};
    rep.verdict = "fail";
    rep.exit_code = kInputError;
    rep.summary = e.what();
  } catch (const Error& e) {
    rep.results = error_json(e, "InputError");
    rep.verdict = "fail";
    rep.exit_code = kInputError;
    rep.summary = e.what();
  } catch (const nlohmann::json::exception& e) {
    rep.results = error_json(e, "InputError");
    rep.verdict = "fail";
    rep.exit_code = kInputError;
    rep.summary = e.what();
  }

  const json report{{"command", rep.command},
                    {"inputs", rep.inputs},
                    {"results", rep.results},
                    {"verdict", rep.verdict},
                    {"version", kVersion}};
  if (command == "census") {
    out << census_rows.str() << report.dump() << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  err << command << ": " << rep.verdict << " - " << rep.summary << "\n";
  return rep.exit_code;
}

}  // namespace binact::cli
