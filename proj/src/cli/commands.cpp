#include "rlab/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <regex>
#include <sstream>

#include "rlab/charvar/charvar.hpp"
#include "rlab/fingerprint/fingerprint.hpp"
#include "rlab/groups/invariants.hpp"
#include "rlab/groups/low_index.hpp"
#include "rlab/groups/perm.hpp"
#include "rlab/groups/rewriting.hpp"
#include "rlab/repvar/gamma4.hpp"

namespace rlab::cli {

namespace {

// ---------------------------------------------------------------- JSON helpers

Json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json big_list(const std::vector<BigInt>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(big_json(v));
  return out;
}

Json words_json(const std::vector<GroupWord>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

Json presentation_json(const Presentation& p) {
  return Json{{"name", p.name()}, {"generators", p.generators()}, {"relators", words_json(p.relators())}};
}

Json invariants_json(const InvariantVector& v) {
  Json hist = Json::array();
  for (auto [ord, count] : v.order_histogram) hist.push_back(Json::array({ord, count}));
  return Json{{"order", v.order},
              {"abelian", big_list(v.abelian)},
              {"derived_length", v.derived_length},
              {"classes", v.classes},
              {"order_histogram", hist}};
}

Json quotient_json(const FiniteQuotient& q) {
  return Json{{"label", q.label()}, {"invariants", invariants_json(q.invariants())}, {"generators", q.generator_cycles()}};
}

Json table_permutations(const CosetTable& t) {
  Json out = Json::array();
  for (std::size_t g = 0; g < t.rank(); ++g) out.push_back(perm_cycles(t.permutation(g)));
  return out;
}

Json uni_list(const std::vector<UniPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json factor_list(const std::vector<FactorRecord>& fs) {
  Json out = Json::array();
  for (const auto& f : fs)
    out.push_back(Json{{"factor", f.factor.to_string()}, {"multiplicity", f.multiplicity}, {"spurious", f.spurious}});
  return out;
}

// ---------------------------------------------------------------- checks

class Checks {
 public:
  void add(const std::string& name, const Json& expected, const Json& actual) {
    add(name, expected, actual, expected == actual);
  }
  void add(const std::string& name, const Json& expected, const Json& actual, bool ok) {
    items_.push_back(Json{{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
    if (!ok) failures_.push_back(name + ": expected " + expected.dump() + ", got " + actual.dump());
  }
  Json json() const { return items_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  Json items_ = Json::array();
  std::vector<std::string> failures_;
};

// ---------------------------------------------------------------- inputs

struct Input {
  std::string spec;
  std::string base;  // fixture name without a subgroup suffix, or "" for files and subgroups
  Presentation presentation;
  std::size_t subgroup_index = 0;  // index in the base group, when spec names a subgroup
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<GroupWord> parse_words(const Presentation& p, const std::vector<std::string>& texts) {
  std::vector<GroupWord> out;
  for (const auto& t : texts) {
    GroupWord w;
    try {
      w = parse_word(t);
    } catch (const WordParseError& e) {
      throw ConfigError("cannot parse word '" + t + "': " + e.what());
    }
    for (const auto& s : w.syllables())
      if (std::find(p.generators().begin(), p.generators().end(), s.gen) == p.generators().end())
        throw ConfigError("word '" + t + "' uses " + s.gen + ", which is not a generator of " + p.name());
    out.push_back(w);
  }
  return out;
}

Input resolve_input(const std::string& spec, bool is_file, std::size_t limit) {
  Input in;
  in.spec = spec;
  if (is_file) {
    try {
      in.presentation = load_presentation(spec);
    } catch (const PresentationParseError& e) {
      throw ConfigError(spec + ": " + e.what());
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    return in;
  }
  std::string name = spec, sub;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (rest.rfind("sub=", 0) != 0) throw ConfigError("bad fixture spec '" + spec + "' (expected NAME:sub=w1,w2)");
    sub = rest.substr(4);
  }
  Presentation base;
  try {
    base = fixture(name);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (sub.empty()) {
    in.base = name;
    in.presentation = base;
    return in;
  }
  auto words = parse_words(base, split(sub, ','));
  CosetOptions opt;
  opt.max_cosets = limit;
  CosetTable t = coset_enumerate(base, words, opt);
  if (!t.complete())
    throw ResourceOverflow("subgroup " + spec + " has no finite index within " + std::to_string(limit) + " cosets");
  SubgroupPresentation sp = reidemeister_schreier(base, t);
  in.presentation = Presentation(spec, sp.presentation.generators(), sp.presentation.relators());
  in.subgroup_index = t.index();
  return in;
}

std::vector<Input> resolve_inputs(const RunConfig& c) {
  std::vector<Input> out;
  for (const auto& f : c.fixtures) out.push_back(resolve_input(f, false, c.limit));
  for (const auto& f : c.files) out.push_back(resolve_input(f, true, c.limit));
  return out;
}

const Input& single_input(const std::vector<Input>& ins, const std::string& command) {
  if (ins.size() != 1) throw ConfigError(command + " needs exactly one --fixture or --file");
  return ins[0];
}

int exit_for(const Checks& checks, int otherwise = kOk) {
  return checks.failures().empty() ? otherwise : kMismatch;
}

struct Result {
  std::string schema;
  Json payload;
  int exit_code = kOk;
  std::vector<std::string> problems;
};

Result finish(std::string schema, Json payload, const Checks& checks, int code) {
  payload["checks"] = checks.json();
  Result r{std::move(schema), std::move(payload), code, checks.failures()};
  return r;
}

bool same_up_to_normalization(const UniPoly& a, const UniPoly& b) {
  return !a.is_zero() && a.primitive() == b.primitive();
}

// ---------------------------------------------------------------- rigidity

// Expected eliminants for the two-generator cover group.
constexpr const char* kExpectedX = "x^4 - x^3 + 3*x^2 - x + 1";
constexpr const char* kExpectedY1 = "y^4 - y^3 + 3*y^2 - y + 1";
constexpr const char* kExpectedY2 = "y^4 + y^3 + 3*y^2 + y + 1";
constexpr const char* kExpectedR = "r^4 - 9*r^2 + 36";
constexpr const char* kExpectedChar = "X^2 - X + 1";

Json certificate_json(const RigidityCertificate& c) {
  Json r = Json::array();
  for (const auto& e : c.R.entries()) r.push_back(e.to_string());
  Json s = Json::array(), sden = Json::array(), elim = Json::array();
  for (int i = 0; i < 4; ++i) {
    s.push_back(c.s[i].to_string());
    sden.push_back(c.s_denominators[i].to_string());
    elim.push_back(Json{{"degree", c.x_eliminants[i].degree()}, {"factors", factor_list(c.x_eliminant_factors[i])}});
  }
  return Json{{"R", r},
              {"r12_numerator", c.r12_numerator.to_string()},
              {"r12_sign", c.r12_sign},
              {"r_solution", c.r_solution.to_string()},
              {"r1_22_discarded", factor_list(c.r1_22_discarded)},
              {"constraint", c.constraint.to_string()},
              {"s", s},
              {"s_signs", c.s_signs},
              {"s_denominators", sden},
              {"x_eliminants", elim},
              {"x_gcd", c.x_gcd.to_string()},
              {"x_gcd_factors", factor_list(c.x_gcd_factors)},
              {"x_poly_by_gcd", c.x_poly_by_gcd.to_string()},
              {"x_poly_by_intersection", c.x_poly_by_intersection.to_string()},
              {"x_poly", c.x_poly.to_string()},
              {"x_poly_palindromic", c.x_poly_palindromic},
              {"y_eliminant_factors", factor_list(c.y_eliminant_factors)},
              {"y_polys", uni_list(c.y_polys)},
              {"y_polys_related_by_sign", c.y_polys_related_by_sign},
              {"r_gcd", c.r_gcd.to_string()},
              {"r_poly", c.r_poly.to_string()},
              {"character_poly", c.character_poly.to_string()},
              {"character_identity", c.character_identity}};
}

Json numeric_json(const NumericReport& n) {
  return Json{{"precision", n.precision},
              {"working_digits", n.working_digits},
              {"x0", n.x0},
              {"y0", n.y0},
              {"r0", n.r0},
              {"r_matches_reference", n.r_matches_reference},
              {"r_root_of_r_poly", n.r_root_of_r_poly},
              {"first_residual_log10", n.first_residual_log10},
              {"second_residual_log10", n.second_residual_log10},
              {"residual_log10", n.residual_log10},
              {"residual_ok", n.residual_ok},
              {"offending_entry", n.offending_entry},
              {"equal_xy_residual_log10", n.equal_xy_residual_log10},
              {"equal_xy_solved_residual_log10", n.equal_xy_solved_residual_log10},
              {"equal_xy_no_solution", n.equal_xy_no_solution},
              {"passed", n.passed}};
}

Result cmd_rigidity(const RunConfig& c) {
  if (c.subcommand != "gamma4") throw ConfigError("unknown rigidity subcommand '" + c.subcommand + "'");
  if (!c.fixtures.empty() || !c.files.empty()) throw ConfigError("rigidity gamma4 takes no input presentation");
  Gamma4Options opt = Gamma4Options::defaults();
  opt.parallel = c.workers > 1;
  RigidityCertificate cert = gamma4_pipeline(opt);

  Json payload{{"certificate", certificate_json(cert)}};
  Checks checks;
  checks.add("x_poly", kExpectedX, cert.x_poly.to_string(),
             same_up_to_normalization(cert.x_poly, UniPoly::parse(kExpectedX, "x")));
  std::vector<std::string> ys;
  for (const auto& y : cert.y_polys) ys.push_back(y.primitive().to_string());
  std::sort(ys.begin(), ys.end());
  std::vector<std::string> want_y{UniPoly::parse(kExpectedY1, "y").primitive().to_string(),
                                  UniPoly::parse(kExpectedY2, "y").primitive().to_string()};
  std::sort(want_y.begin(), want_y.end());
  checks.add("y_polys", want_y, ys);
  checks.add("r_poly", kExpectedR, cert.r_poly.to_string(),
             same_up_to_normalization(cert.r_poly, UniPoly::parse(kExpectedR, "r")));
  checks.add("character_poly", kExpectedChar, cert.character_poly.to_string(),
             same_up_to_normalization(cert.character_poly, UniPoly::parse(kExpectedChar, "X")));
  checks.add("character_identity", true, cert.character_identity);

  if (!c.skip_numeric) {
    NumericReport n = numeric_check(cert, c.precision, opt);
    payload["numeric"] = numeric_json(n);
    double bound = -(c.precision - 10);
    checks.add("residual_log10_below", bound, n.residual_log10, n.residual_log10 < bound);
    checks.add("r_matches_reference", true, n.r_matches_reference);
    checks.add("equal_xy_no_solution", true, n.equal_xy_no_solution);
  }
  return finish("rigidity-lab/rigidity/v1", std::move(payload), checks, exit_for(checks));
}

// ---------------------------------------------------------------- charvar

Json report_json(const RigidityReport& r, std::optional<int> k) {
  Json specs = Json::array();
  for (const auto& v : r.specializations) {
    if (k && v.k != *k) continue;
    specs.push_back(Json{{"k", v.k},
                         {"T", v.T},
                         {"T_minpoly", v.T_minpoly.to_string()},
                         {"T_approx", v.T_approx},
                         {"meridian_order", v.meridian_order},
                         {"admissible", v.admissible},
                         {"discriminant", v.discriminant},
                         {"discriminant_minpoly", v.discriminant_minpoly.to_string()},
                         {"discriminant_sign", v.discriminant_sign},
                         {"discriminant_zero", v.discriminant_zero},
                         {"irreducible", v.irreducible},
                         {"method", v.method},
                         {"irreducible_by_norm", v.irreducible_by_norm},
                         {"on_component", v.on_component}});
  }
  Json abs_t = Json::array();
  for (const auto& [p, approx] : r.admissible_abs_T) abs_t.push_back(Json{{"minpoly", p.to_string()}, {"approx", approx}});
  return Json{{"n", r.n},
              {"field_minpoly", r.field_minpoly.to_string()},
              {"specializations", specs},
              {"admissible_k", r.admissible_k},
              {"admissible_abs_T", abs_t},
              {"all_admissible_irreducible", r.all_admissible_irreducible},
              {"sign_pairing", r.sign_pairing},
              {"sl2_character_count", r.sl2_character_count},
              {"psl2_character_count", r.psl2_character_count},
              {"trace_field_degree", r.trace_field_degree},
              {"trace_field_minpoly", r.trace_field_minpoly.to_string()},
              {"trace_field_shift", r.trace_field_shift},
              {"discriminant_identity", r.discriminant_identity}};
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Runs f over items with at most `workers` tasks in flight; results keep input order.
template <class T, class F>
auto bounded_map(const std::vector<T>& items, int workers, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  for (std::size_t start = 0; start < items.size(); start += w) {
    std::vector<std::future<R>> batch;
    for (std::size_t i = start; i < std::min(items.size(), start + w); ++i)
      batch.push_back(std::async(w > 1 ? std::launch::async : std::launch::deferred, f, items[i]));
    for (auto& fut : batch) out.push_back(fut.get());
  }
  return out;
}

Result cmd_charvar(const RunConfig& c) {
  if (c.n.empty()) throw ConfigError("charvar needs --n");
  for (int n : c.n) {
    if (n == 8)
      throw ConfigError(
          "n = 8 is rejected: Delta_8 admits an epimorphism onto Delta_4, so the rigidity argument does not apply");
    if (!rigidity_supported(n)) throw ConfigError("n = " + std::to_string(n) + " unsupported (need a prime >= 5 or 4, 6, 9)");
    if (c.k && (*c.k < 1 || *c.k > n - 1))
      throw ConfigError("--k must lie in 1.." + std::to_string(n - 1) + " for n = " + std::to_string(n));
  }
  auto reports = bounded_map(c.n, c.workers, [](int n) { return rigidity_report(n); });

  Json list = Json::array();
  Checks checks;
  for (const auto& r : reports) {
    list.push_back(report_json(r, c.k));
    std::string tag = "n=" + std::to_string(r.n) + " ";
    checks.add(tag + "discriminant_identity", true, r.discriminant_identity);
    if (is_prime(r.n)) {
      checks.add(tag + "trace_field_degree", r.n - 1, r.trace_field_degree);
      checks.add(tag + "psl2_character_count", r.n - 1, r.psl2_character_count);
    } else {
      checks.add(tag + "all_admissible_irreducible", true, r.all_admissible_irreducible);
    }
    if (r.n == 9) {
      Json got = Json::array();
      for (const auto& [p, approx] : r.admissible_abs_T) got.push_back(p.with_var("t").to_string());
      checks.add(tag + "admissible_abs_T", Json::array({"t^3 - 3*t - 1", "t^3 - 3*t + 1", "t^3 - 3*t + 1"}), got);
    }
  }
  return finish("rigidity-lab/charvar/v1", Json{{"reports", list}}, checks, exit_for(checks));
}

// ---------------------------------------------------------------- group

Result cmd_abelianize(const Input& in) {
  auto inv = abelianization(in.presentation);
  Checks checks;
  if (in.base == "gamma4" || in.base == "fib8") checks.add("abelian_invariants", Json::array({3, 15}), big_list(inv));
  if (in.base == "delta4") checks.add("abelian_invariants", Json::array({4}), big_list(inv));
  Json payload{{"group", presentation_json(in.presentation)},
               {"invariants", big_list(inv)},
               {"betti", betti_number(in.presentation)}};
  return finish("rigidity-lab/abelianize/v1", std::move(payload), checks, exit_for(checks));
}

Json stats_json(const CosetStats& s) {
  return Json{{"defined", s.defined}, {"max_live", s.max_live}, {"coincidences", s.coincidences}, {"lookaheads", s.lookaheads}};
}

Result cmd_cosets(const RunConfig& c, const Input& in) {
  CosetOptions opt;
  try {
    opt.strategy = parse_strategy(c.strategy);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  opt.max_cosets = c.limit;
  auto sub = parse_words(in.presentation, c.subgroup);
  CosetTable t = coset_enumerate(in.presentation, sub, opt);

  Json payload{{"group", presentation_json(in.presentation)},
               {"subgroup", words_json(sub)},
               {"strategy", to_string(opt.strategy)},
               {"limit", c.limit},
               {"status", to_string(t.status())},
               {"stats", stats_json(t.stats)}};
  Checks checks;
  if (!t.complete()) {
    payload["index"] = nullptr;
    return finish("rigidity-lab/cosets/v1", std::move(payload), checks, kOverflow);
  }
  payload["index"] = t.index();
  std::vector<Perm> perms;
  for (std::size_t g = 0; g < t.rank(); ++g) perms.push_back(t.permutation(g));
  payload["action_order"] = big_json(perm_group_order(t.index(), perms));
  if (t.index() <= 256) payload["permutations"] = table_permutations(t);
  if (sub.empty() && t.index() <= kMaxFingerprintBound) {
    FiniteQuotient q = FiniteQuotient::from_regular_table(t);
    payload["quotient"] = quotient_json(q);
    if (in.base == "delta2") {
      checks.add("order", 8, t.index());
      bool dihedral = q.label().rfind("D", 0) == 0;
      checks.add("dihedral", true, dihedral);
    }
  }
  return finish("rigidity-lab/cosets/v1", std::move(payload), checks, exit_for(checks));
}

Json record_json(const SubgroupRecord& r) {
  return Json{{"index", r.index},
              {"invariants", big_list(r.invariants)},
              {"normal", r.normal},
              {"core_index", big_json(r.core_index)},
              {"generators", words_json(r.generators)},
              {"permutations", table_permutations(r.table)}};
}

Result cmd_subgroups(const RunConfig& c, const Input& in) {
  if (c.min_index > c.index) throw ConfigError("--min-index exceeds --index");
  SubgroupListing l = low_index_subgroups(in.presentation, c.index, c.min_index, c.normal, c.max_nodes);
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t i = c.min_index; i <= c.index; ++i) counts[i] = 0;
  Json recs = Json::array();
  for (const auto& r : l.records) {
    ++counts[r.index];
    recs.push_back(record_json(r));
  }
  Json count_list = Json::array();
  for (auto [i, n] : counts) count_list.push_back(Json{{"index", i}, {"count", n}});
  Json payload{{"group", presentation_json(in.presentation)},
               {"max_index", c.index},
               {"min_index", c.min_index},
               {"normal_only", c.normal},
               {"complete", l.complete},
               {"nodes", l.nodes},
               {"counts", count_list},
               {"subgroups", recs}};

  Checks checks;
  auto in_range = [&](std::size_t i) { return c.min_index <= i && i <= c.index; };
  auto count_with = [&](std::size_t index, std::vector<long> inv, bool normal) {
    std::size_t n = 0;
    for (const auto& r : l.records) {
      if (r.index != index || (normal && !r.normal)) continue;
      std::vector<BigInt> want(inv.begin(), inv.end());
      if (r.invariants == want) ++n;
    }
    return n;
  };
  if (l.complete && in.base == "gamma-empty") {
    if (in_range(4) && !c.normal) {
      checks.add("index4_classes", 11, counts[4]);
      checks.add("index4_with_invariants_[4]", 1, count_with(4, {4}, false));
    }
    if (in_range(8)) {
      std::size_t n = count_with(8, {3, 6}, true);
      checks.add("index8_normal_with_[3,6]", ">= 1", n, n >= 1);
    }
  }
  if (l.complete && in.base == "delta4" && in_range(4)) {
    std::size_t n = count_with(4, {3, 15}, true);
    checks.add("index4_normal_with_[3,15]", ">= 1", n, n >= 1);
  }
  return finish("rigidity-lab/subgroups/v1", std::move(payload), checks, exit_for(checks, l.complete ? kOk : kOverflow));
}

Result cmd_rs(const RunConfig& c, const Input& in) {
  if (c.subgroup.empty()) throw ConfigError("group rs needs --subgroup words");
  auto sub = parse_words(in.presentation, c.subgroup);
  CosetOptions opt;
  opt.max_cosets = c.limit;
  CosetTable t = coset_enumerate(in.presentation, sub, opt);
  Json payload{{"group", presentation_json(in.presentation)}, {"subgroup", words_json(sub)}, {"status", to_string(t.status())}};
  Checks checks;
  if (!t.complete()) {
    payload["index"] = nullptr;
    return finish("rigidity-lab/rs/v1", std::move(payload), checks, kOverflow);
  }
  SubgroupPresentation sp = reidemeister_schreier(in.presentation, t);
  Json gen_words = Json::array();
  for (std::size_t i = 0; i < sp.generator_words.size(); ++i)
    gen_words.push_back(Json{{"generator", sp.presentation.generators()[i]}, {"word", sp.generator_words[i].to_string()}});
  payload["index"] = t.index();
  payload["presentation"] = presentation_json(sp.presentation);
  payload["generator_words"] = gen_words;
  payload["invariants"] = big_list(abelianization(sp.presentation));
  return finish("rigidity-lab/rs/v1", std::move(payload), checks, kOk);
}

// Greedy chain of nested normal subgroups of index <= max_index, starting at the whole group.
std::vector<CosetTable> greedy_normal_chain(const Presentation& p, std::size_t max_index, long max_nodes, bool& complete) {
  LowIndexOptions opt;
  opt.max_index = max_index;
  opt.normal_only = true;
  opt.max_nodes = max_nodes;
  LowIndexResult res = low_index_tables(p, opt);
  complete = res.complete;
  std::vector<CosetTable> chain;
  for (const auto& t : res.tables) {
    if (chain.empty()) {
      if (t.index() == 1) chain.push_back(t);
      continue;
    }
    const CosetTable& cur = chain.back();
    if (t.index() > cur.index() && t.index() % cur.index() == 0 && table_contains(p, cur, t)) chain.push_back(t);
  }
  return chain;
}

Result cmd_luck(const RunConfig& c, const Input& in) {
  bool complete = true;
  auto chain = greedy_normal_chain(in.presentation, c.index, c.max_nodes, complete);
  auto values = luck_sequence(in.presentation, chain);
  Json entries = Json::array();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    SubgroupRecord r = make_subgroup_record(in.presentation, chain[i]);
    std::size_t b1 = static_cast<std::size_t>(std::count(r.invariants.begin(), r.invariants.end(), BigInt(0)));
    entries.push_back(Json{{"index", chain[i].index()},
                           {"invariants", big_list(r.invariants)},
                           {"b1", b1},
                           {"value", values[i].get_str()},
                           {"generators", words_json(r.generators)}});
  }
  Checks checks;
  std::smatch m;
  static const std::regex free_re("free([0-9]+)"), surface_re("surface([0-9]+)");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    BigInt d = static_cast<unsigned long>(chain[i].index());
    std::string tag = "value at index " + std::to_string(chain[i].index());
    std::optional<BigRational> want;
    if (std::regex_match(in.base, m, free_re))
      want = BigRational(std::stol(m[1]) - 1) + BigRational(1) / BigRational(d);
    else if (std::regex_match(in.base, m, surface_re))
      want = BigRational(2 * std::stol(m[1]) - 2) + BigRational(2) / BigRational(d);
    else if (in.base == "gamma4")
      want = BigRational(0);
    if (want) {
      want->canonicalize();
      checks.add(tag, want->get_str(), values[i].get_str(), *want == values[i]);
    }
  }
  Json payload{{"group", presentation_json(in.presentation)},
               {"max_index", c.index},
               {"complete", complete},
               {"chain", entries}};
  return finish("rigidity-lab/luck/v1", std::move(payload), checks, exit_for(checks, complete ? kOk : kOverflow));
}

Result cmd_group(const RunConfig& c) {
  auto ins = resolve_inputs(c);
  const Input& in = single_input(ins, "group " + c.subcommand);
  if (c.subcommand == "abelianize") return cmd_abelianize(in);
  if (c.subcommand == "cosets") return cmd_cosets(c, in);
  if (c.subcommand == "subgroups") return cmd_subgroups(c, in);
  if (c.subcommand == "rs") return cmd_rs(c, in);
  if (c.subcommand == "luck") return cmd_luck(c, in);
  throw ConfigError("unknown group subcommand '" + c.subcommand + "'");
}

// ---------------------------------------------------------------- fingerprint

Json fingerprint_json(const Input& in, const QuotientFingerprint& fp) {
  Json classes = Json::array();
  for (const auto& q : fp.classes) {
    Json j = quotient_json(q.group);
    j["multiplicity"] = q.multiplicity;
    classes.push_back(j);
  }
  return Json{{"input", in.spec},
              {"group", presentation_json(in.presentation)},
              {"bound", fp.bound},
              {"complete", fp.complete},
              {"nodes", fp.nodes},
              {"diagnostics", fp.diagnostics},
              {"classes", classes}};
}

Json optional_quotient(const std::optional<FiniteQuotient>& q) { return q ? quotient_json(*q) : Json(nullptr); }

constexpr const char* kEqualNote =
    "equal means the two sets of quotients of order <= bound agree up to isomorphism; it does not certify "
    "isomorphic profinite completions";

Result cmd_fingerprint(const RunConfig& c) {
  if (c.bound > kMaxFingerprintBound)
    throw ConfigError("--bound " + std::to_string(c.bound) + " exceeds the ceiling " + std::to_string(kMaxFingerprintBound));
  auto ins = resolve_inputs(c);
  if (ins.empty() || ins.size() > 2) throw ConfigError("fingerprint needs one or two inputs");
  FingerprintOptions opt;
  opt.iso_bound = kMaxFingerprintBound;
  opt.max_nodes = c.max_nodes;
  std::vector<std::size_t> which(ins.size());
  for (std::size_t i = 0; i < ins.size(); ++i) which[i] = i;
  auto fps = bounded_map(which, c.workers, [&](std::size_t i) { return quotients_up_to(ins[i].presentation, c.bound, opt); });

  Checks checks;
  if (ins.size() == 1) {
    Json payload{{"bound", c.bound}, {"fingerprint", fingerprint_json(ins[0], fps[0])}};
    std::vector<std::string> problems;
    if (!fps[0].complete) problems.push_back("partial fingerprint: " + fps[0].diagnostics);
    Result r = finish("rigidity-lab/fingerprint/v1", std::move(payload), checks, fps[0].complete ? kOk : kOverflow);
    r.problems = problems;
    return r;
  }

  Json payload{{"bound", c.bound}, {"G", fingerprint_json(ins[0], fps[0])}, {"H", fingerprint_json(ins[1], fps[1])}};
  if (!fps[0].complete || !fps[1].complete) {
    payload["verdict"] = "refused";
    Result r = finish("rigidity-lab/compare/v1", std::move(payload), checks, kOverflow);
    for (std::size_t i = 0; i < 2; ++i)
      if (!fps[i].complete) r.problems.push_back(ins[i].spec + ": partial fingerprint: " + fps[i].diagnostics);
    return r;
  }
  CompareResult cr = compare_fingerprints(fps[0], fps[1], opt.iso_bound);
  payload["verdict"] = cr.equal ? "equal" : "distinguished";
  payload["note"] = kEqualNote;
  payload["distinguisher"] =
      cr.distinguisher ? Json{{"side", to_string(cr.side)}, {"quotient", quotient_json(*cr.distinguisher)}} : Json(nullptr);
  payload["only_g"] = optional_quotient(cr.only_g);
  payload["only_h"] = optional_quotient(cr.only_h);

  const std::string &g = ins[0].spec, &h = ins[1].spec;
  auto label = [](const std::optional<FiniteQuotient>& q) { return q ? Json(q->label()) : Json(nullptr); };
  if (g == "delta4" && h == "gamma4" && c.bound == 3) checks.add("only_h", "Z/3", label(cr.only_h));
  if ((g == "b1" && h == "b2") || (g == "b2" && h == "b1") || g == h) checks.add("verdict", "equal", payload["verdict"]);
  if (g == "free2" && ins[1].subgroup_index == 2 && h.rfind("free2:", 0) == 0 && c.bound == 8) {
    checks.add("distinguisher", "(Z/2)^3", label(cr.distinguisher));
    checks.add("distinguisher_side", "H", cr.distinguisher ? Json(to_string(cr.side)) : Json(nullptr));
  }
  return finish("rigidity-lab/compare/v1", std::move(payload), checks, exit_for(checks));
}

}  // namespace

Json RunConfig::to_json() const {
  std::vector<std::string> inputs = fixtures;
  inputs.insert(inputs.end(), files.begin(), files.end());
  return Json{{"command", command},
              {"subcommand", subcommand},
              {"inputs", inputs},
              {"n", n},
              {"k", k ? Json(*k) : Json(nullptr)},
              {"index", index},
              {"min_index", min_index},
              {"bound", bound},
              {"limit", limit},
              {"max_nodes", max_nodes},
              {"precision", precision},
              {"strategy", strategy},
              {"workers", workers},
              {"skip_numeric", skip_numeric},
              {"normal", normal},
              {"subgroup", subgroup}};
}

Presentation resolve_fixture(const std::string& spec) {
  return std::filesystem::exists(spec) ? resolve_input(spec, true, 100000).presentation
                                       : resolve_input(spec, false, 100000).presentation;
}

Outcome run_command(const RunConfig& c) {
  if (c.index < 1 || c.min_index < 1 || c.bound < 1 || c.limit < 1 || c.precision < 1 || c.workers < 1 ||
      c.max_nodes < 1)
    throw ConfigError("all bounds must be positive");
  Result r;
  if (c.command == "rigidity")
    r = cmd_rigidity(c);
  else if (c.command == "charvar")
    r = cmd_charvar(c);
  else if (c.command == "group")
    r = cmd_group(c);
  else if (c.command == "fingerprint")
    r = cmd_fingerprint(c);
  else
    throw ConfigError("unknown command '" + c.command + "'");

  std::string name = c.command + (c.subcommand.empty() ? "" : " " + c.subcommand);
  Outcome out{make_envelope(name, c.argv, c.to_json(), r.schema, std::move(r.payload)), r.exit_code,
              std::move(r.problems)};
  return out;
}

}  // namespace rlab::cli
