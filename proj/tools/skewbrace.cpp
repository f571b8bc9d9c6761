// skewbrace: analyze, verify and enumerate finite skew braces.

#include <algorithm>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "skewbrace/catalog.hpp"
#include "skewbrace/classify.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/io.hpp"

using namespace skewbrace;

namespace {

struct Options {
  std::string file;
  bool json_out = false;
  std::string checks;
  std::size_t max_n = 0;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string suite = "all";
  std::string builtin;
  std::string group_file;
  std::size_t max_order = 12;
  bool profile = false;
  std::string kind;
  std::uint32_t p = 5;
};

void emit(const json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_text(report);
}

// Runs f(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) f(i);
    });
  for (auto& th : pool) th.join();
}

struct Loaded {
  BraceSpec spec;
  SkewBrace brace;
};

Loaded load(const Options& o) {
  BraceSpec spec = read_brace_file(o.file);
  SkewBrace a = build_brace(spec, o.seed);
  return {std::move(spec), std::move(a)};
}

json brace_summary(const SkewBrace& a) {
  json j;
  j["order"] = a.order();
  j["backing"] = a.is_table_backed() ? "table" : "formula";
  if (const FormulaBrace* f = a.formula()) {
    j["p"] = f->prime();
    j["d_B"] = f->dim_b();
    j["d_C"] = f->dim_c();
  }
  return j;
}

std::vector<InclusionLabel> parse_labels(const std::string& s) {
  std::vector<InclusionLabel> out;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    auto l = inclusion_from_char(c);
    if (!l) throw Error(ErrorCode::ParseError, std::string("unknown inclusion label '") + c + "'");
    out.push_back(*l);
  }
  return out;
}

int cmd_analyze(const Options& o) {
  Loaded l = load(o);
  const SkewBrace& a = l.brace;
  SeriesCache cache(a, SeriesOptions{});
  json r;
  r["brace"] = brace_summary(a);
  r["profile"] = profile_json(nilpotency_profile(cache));
  json series;
  series["left"] = chain_json(a, cache.left());
  series["right"] = chain_json(a, cache.right());
  series["smoktunowicz"] = chain_json(a, cache.smoktunowicz());
  series["socle"] = chain_json(a, cache.socle());
  series["annihilator"] = chain_json(a, cache.annihilator());
  series["gamma"] = chain_json(a, cache.gamma());
  r["series"] = series;
  r["socle"] = set_json(a, cache.socle().term(1));
  r["annihilator"] = set_json(a, cache.annihilator().term(1));
  if (!o.checks.empty()) {
    const std::size_t top = o.max_n != 0 ? o.max_n : 3;
    json checks = json::array();
    for (InclusionLabel label : parse_labels(o.checks))
      for (std::size_t n = 1; n <= top; ++n)
        for (std::size_t k = 0; k < n; ++k) checks.push_back(inclusion_json(a, check_inclusion(cache, label, n, k)));
    r["checks"] = checks;
  }
  emit(r, o.json_out);
  return 0;
}

// Inclusions whose failure is expected for a given catalog family.
std::vector<std::tuple<InclusionLabel, std::size_t, std::size_t>> expected_failures(const BraceSpec& spec) {
  if (const auto* pq = std::get_if<PqSpec>(&spec); pq && pq->variant == PqVariant::i)
    return {{InclusionLabel::A, 2, 0}, {InclusionLabel::B, 2, 0}, {InclusionLabel::C, 1, 0}, {InclusionLabel::D, 1, 0}};
  if (std::holds_alternative<CounterexampleSpec>(spec)) return {{InclusionLabel::F, 3, 0}};
  return {};
}

int cmd_verify(const Options& o) {
  Loaded l = load(o);
  const SkewBrace& a = l.brace;
  SeriesCache cache(a, SeriesOptions{});
  const bool all = o.suite == "all";
  if (!all && o.suite != "identities" && o.suite != "ideals" && o.suite != "inclusions" && o.suite != "theorems")
    throw Error(ErrorCode::ParseError, "unknown suite '" + o.suite + "'");
  bool ok = true;
  json r;
  r["brace"] = brace_summary(a);

  if (all || o.suite == "identities") {
    const IdentityReport ids = check_identities(a, o.seed);
    const IdentityReport lam = check_lambda_properties(a, o.seed);
    r["identities"] = {{"star_identities", identity_json(ids)}, {"lambda_properties", identity_json(lam)}};
    ok = ok && ids.passed && lam.passed;
  }

  if (all || o.suite == "ideals") {
    json j;
    auto check_chain = [&](const SeriesChain& c, bool need_ideal) {
      bool good = true;
      for (const auto& t : c.terms) good = good && (need_ideal ? is_ideal(a, t) : is_left_ideal(a, t));
      j[std::string(to_string(c.kind))] = good;
      ok = ok && good;
    };
    check_chain(cache.left(), false);
    check_chain(cache.smoktunowicz(), false);
    check_chain(cache.right(), true);
    check_chain(cache.gamma(), true);
    check_chain(cache.socle(), true);
    check_chain(cache.annihilator(), true);
    bool sub = true;
    for (const auto& t : cache.left().terms) sub = sub && is_subbrace(a, t);
    j["left_ideals_are_subbraces"] = sub;
    ok = ok && sub;
    r["ideals"] = j;
  }

  if (all || o.suite == "inclusions") {
    const std::size_t top = o.max_n != 0 ? o.max_n : 5;
    json j;
    bool e_ok = true;
    json e_fail = nullptr;
    for (std::size_t n = 1; n <= top && e_ok; ++n)
      for (std::size_t k = 0; k < n && e_ok; ++k) {
        auto res = check_inclusion(cache, InclusionLabel::E, n, k);
        if (!res.holds) {
          e_ok = false;
          e_fail = inclusion_json(a, res);
        }
      }
    j["E_holds_up_to_n"] = top;
    j["E_passed"] = e_ok;
    if (!e_ok) j["E_failure"] = e_fail;
    ok = ok && e_ok;
    json expected = json::array();
    for (auto [label, n, k] : expected_failures(l.spec)) {
      auto res = check_inclusion(cache, label, n, k);
      json e = inclusion_json(a, res);
      e["expected_holds"] = false;
      e["passed"] = !res.holds;
      ok = ok && !res.holds;
      expected.push_back(e);
    }
    j["expected_failures"] = expected;
    r["inclusions"] = j;
  }

  if (all || o.suite == "theorems") {
    const TheoremReport t = check_equivalence_theorems(cache);
    const BkpReport b = check_bkp(cache);
    const bool incl = check_series_inclusions(cache);
    r["theorems"] = {{"equivalences", theorem_json(t)},
                     {"bkp", {{"hypothesis", b.hypothesis}, {"right_nilpotent", b.right_nilpotent}, {"holds", b.holds}}},
                     {"ann_soc_center_inclusions", incl}};
    ok = ok && t.all_agree() && b.holds && incl;
  }

  r["passed"] = ok;
  emit(r, o.json_out);
  return ok ? 0 : 2;
}

int cmd_enumerate(const Options& o) {
  GroupTable g;
  if (!o.builtin.empty()) {
    try {
      g = builtin_group(o.builtin);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  } else if (!o.group_file.empty()) {
    const json doc = read_json_file(o.group_file);
    g = validate_group(parse_table(doc.is_object() && doc.contains("group") ? doc.at("group") : doc, "group"));
  } else {
    throw Error(ErrorCode::ParseError, "enumerate needs --builtin or --group");
  }
  const auto braces = enumerate_braces(g, o.max_order);
  std::vector<json> entries(braces.size());
  parallel_for(braces.size(), o.threads, [&](std::size_t i) {
    json e = tables_json(braces[i]);
    if (o.profile) {
      SeriesCache cache(braces[i]);
      e["profile"] = profile_json(nilpotency_profile(cache));
      e["theorems_agree"] = check_equivalence_theorems(cache).all_agree();
    }
    entries[i] = std::move(e);
  });
  json out = json::array();
  for (auto& e : entries) out.push_back(std::move(e));
  std::cout << out.dump(o.json_out ? 2 : -1) << "\n";
  return 0;
}

int cmd_series(const Options& o) {
  Loaded l = load(o);
  const SkewBrace& a = l.brace;
  SeriesOptions opt{o.max_n};
  json r;
  const std::string& k = o.kind;
  if (k == "left") r = chain_json(a, left_series(a, opt));
  else if (k == "right") r = chain_json(a, right_series(a, opt));
  else if (k == "smoktunowicz") r = chain_json(a, smoktunowicz_series(a, opt));
  else if (k == "socle") r = chain_json(a, socle_series(a, opt));
  else if (k == "annihilator") r = chain_json(a, annihilator_series(a, opt));
  else if (k == "gamma") r = chain_json(a, gamma_series(a, opt));
  else if (k == "gamma_prime") r = chain_json(a, gamma_prime_series(a, opt));
  else if (k == "group_lower") r = chain_json(a, lower_central_series(DotGroup(a)));
  else if (k == "group_upper") r = chain_json(a, upper_central_series(DotGroup(a)));
  else if (k == "socle_sv") {
    const auto sv = socle_series_sv(a);
    r["kind"] = "socle_sv";
    r["orders"] = sv.orders;
  } else {
    throw Error(ErrorCode::ParseError, "unknown series kind '" + k + "'");
  }
  emit(r, o.json_out);
  return 0;
}

int cmd_counterexample(const Options& o) {
  const CounterexampleReport rep = verify_counterexample_F(o.p, o.seed);
  const SkewBrace a = make_counterexample_F(o.p, o.seed, 0);
  emit(counterexample_json(a, rep), o.json_out);
  return rep.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite skew brace toolkit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json_out, "Emit JSON instead of text");
    sub->add_option("--seed", o.seed, "Sampling seed for formula-backed validation");
    sub->add_option("--threads", o.threads, "Worker threads for sweeps");
    sub->add_option("--max-n", o.max_n, "Series depth / inclusion sweep bound");
  };

  auto* analyze = app.add_subcommand("analyze", "Profile, series and optional inclusion checks");
  analyze->add_option("file", o.file, "Brace JSON file")->required();
  analyze->add_option("--checks", o.checks, "Inclusion labels to evaluate, e.g. A,F");
  common(analyze);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("file", o.file, "Brace JSON file")->required();
  verify->add_option("--suite", o.suite, "identities|ideals|inclusions|theorems|all");
  common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate braces on an additive group");
  enumerate->add_option("--builtin", o.builtin, "Builtin group name (C6, S3, C2^3, ...)");
  enumerate->add_option("--group", o.group_file, "JSON file holding a group table");
  enumerate->add_option("--max-order", o.max_order, "Largest order accepted");
  enumerate->add_flag("--profile", o.profile, "Attach nilpotency profiles");
  common(enumerate);

  auto* series = app.add_subcommand("series", "Compute one series");
  series->add_option("file", o.file, "Brace JSON file")->required();
  series->add_option("--kind", o.kind, "left|right|smoktunowicz|socle|annihilator|gamma|gamma_prime|group_lower|group_upper|socle_sv")
      ->required();
  common(series);

  auto* counter = app.add_subcommand("counterexample", "Check the order-p^8 counterexample");
  counter->add_option("--p", o.p, "Prime >= 5");
  common(counter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (verify->parsed()) return cmd_verify(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (series->parsed()) return cmd_series(o);
    if (counter->parsed()) return cmd_counterexample(o);
  } catch (const Error& e) {
    json err;
    err["error"] = to_string(e.code());
    err["message"] = e.what();
    if (!e.witness().empty()) err["witness"] = e.witness();
    std::cerr << err.dump() << "\n";
    return exit_code_for(e.code());
  }
  return 1;
}
