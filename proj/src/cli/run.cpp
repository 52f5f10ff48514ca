#include "cantorlab/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "cantorlab/cli/reports.hpp"
#include "cantorlab/cli/scales.hpp"
#include "cantorlab/cli/spec_file.hpp"
#include "cantorlab/covers/covers.hpp"
#include "cantorlab/covers/profile.hpp"
#include "cantorlab/dims/assouad.hpp"
#include "cantorlab/dims/estimates.hpp"
#include "cantorlab/dims/product.hpp"
#include "cantorlab/setlab/sequence_set.hpp"

namespace cantorlab::cli {

namespace {

constexpr double kTolerance = 0.05;

struct Options {
  std::optional<std::string> set_path;
  std::optional<std::string> scales;
  std::optional<std::string> q;
  std::optional<std::string> alpha;
  std::string rule = "lemma44";
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<std::string> value;
  std::optional<std::string> a;
  std::string side = "C";
  std::uint64_t jmin = 0;
  std::uint64_t jmax = 32;
  std::uint64_t samples = 64;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::uint64_t kmax = 6;
  std::uint64_t nlevel = 12;
  std::uint64_t mmax = 6;
  std::optional<std::uint64_t> nmax;
  std::uint64_t count = 500;
  std::uint64_t max_level = 60;
  std::optional<std::string> toml_prefix;
  std::optional<std::string> center;
};

/// A finished command: the text to emit and whether its check passed.
struct Outcome {
  std::string text;
  bool pass = true;
};

Json table_json(const TomlTable& t) {
  Json j = Json::object();
  for (const auto& [key, value] : t) {
    if (value.is_array()) {
      j[key] = std::get<std::vector<std::string>>(value.data);
    } else {
      j[key] = value.text();
    }
  }
  return j;
}

ResolvedSet resolve_input(const Options& o) {
  if (o.set_path) return parse_spec(*o.set_path);
  if (o.q || o.alpha) {
    return resolve_spec(pair_table(o.q, o.alpha, o.rule, o.beta, o.gamma, o.value, o.a, o.side));
  }
  throw InvalidInput("a set is required: give --set FILE or --q/--alpha with --rule");
}

Json base_params(const std::string& command, const Options& o, const ResolvedSet* set) {
  Json p;
  p["command"] = command;
  if (set) p["set"] = table_json(set->source);
  if (o.set_path) p["set_path"] = *o.set_path;
  if (o.scales) p["scales"] = *o.scales;
  p["samples"] = o.samples;
  p["seed"] = o.seed;
  return p;
}

std::vector<Rational> require_scales(const Options& o, const ResolvedSet& set) {
  if (!o.scales) throw InvalidInput("--scales is required");
  return parse_scales(*o.scales, &set);
}

void require_json(const Options& o, const std::string& command) {
  if (o.format && *o.format != "json") {
    throw InvalidInput(command + " only writes json, got --format " + *o.format);
  }
}

std::vector<dims::Window> cantor_lattice(const setlab::CantorSet& set, const Options& o) {
  if (o.kmax == 0) throw InvalidInput("--kmax must be at least 1");
  return dims::lattice_windows(set, 0, o.nlevel, 1, o.kmax);
}

// describe

Outcome cmd_describe(const Options& o) {
  require_json(o, "describe");
  const ResolvedSet set = resolve_input(o);
  Json r;
  r["command"] = "describe";
  r["params"] = base_params("describe", o, &set);
  r["type"] = set.type;
  if (set.handle) {
    r["description"] = covers::describe(*set.handle);
    r["diameter"] = covers::diameter(*set.handle).str();
  } else {
    r["description"] = set.pair->describe() + " side " + setlab::side_name(set.side);
  }
  if (set.generators) {
    Json lambdas = Json::array();
    Json exps = Json::array();
    for (std::uint64_t i = 1; i <= 12; ++i) {
      if (set.generators->is_exact()) lambdas.push_back(set.generators->lambda(i).str());
      if (set.generators->kind() == setlab::GeneratorSequence::Kind::q_power) {
        exps.push_back(set.generators->exponent(i));
      }
    }
    if (!lambdas.empty()) r["lambdas"] = lambdas;
    if (!exps.empty()) r["q_exponents"] = exps;
    if (set.handle) {
      Json lengths = Json::array();
      const auto& c = set.cantor("describe");
      for (std::uint64_t d = 0; d <= 12; ++d) lengths.push_back(c.length(d).str());
      r["lengths"] = lengths;
    }
  }
  if (set.pair) {
    Json a = Json::array();
    for (std::size_t i = 1; i <= 12; ++i) a.push_back(set.pair->a(i).get_str());
    r["a"] = a;
  }
  return Outcome{serialize(r), true};
}

// cover

Outcome cmd_cover(const Options& o) {
  const ResolvedSet set = resolve_input(o);
  const auto scales = require_scales(o, set);
  const auto profile = covers::cover_profile(set.set("cover"), scales);
  const std::string format = o.format.value_or("csv");
  if (format == "csv") return Outcome{profile.to_csv(), true};
  if (format != "json") throw InvalidInput("--format must be csv or json, got " + format);
  Json entries = Json::array();
  for (const auto& e : profile.entries) entries.push_back(to_json(e));
  Json r;
  r["command"] = "cover";
  r["params"] = base_params("cover", o, &set);
  r["entries"] = entries;
  return Outcome{serialize(r), true};
}

// boxdim

Outcome cmd_boxdim(const Options& o) {
  require_json(o, "boxdim");
  const ResolvedSet set = resolve_input(o);
  Json params = base_params("boxdim", o, &set);
  dims::DimEstimate est;
  if (o.nmax) {
    if (!set.generators) throw InvalidInput("--nmax needs a cantor or pair set");
    params["nmax"] = *o.nmax;
    est = dims::box_dims_from_generators(*set.generators, *o.nmax);
  } else {
    const auto scales = require_scales(o, set);
    est = dims::box_dims_from_profile(covers::cover_profile(set.set("boxdim"), scales));
  }
  Json r = to_json(est);
  r["command"] = "boxdim";
  r["params"] = params;
  return Outcome{serialize(r), true};
}

// assouad

Outcome cmd_assouad(const Options& o) {
  require_json(o, "assouad");
  const ResolvedSet set = resolve_input(o);
  const auto& handle = set.set("assouad");
  Json params = base_params("assouad", o, &set);
  std::vector<dims::Window> windows;
  if (std::holds_alternative<setlab::CantorSet>(handle)) {
    windows = cantor_lattice(std::get<setlab::CantorSet>(handle), o);
    params["nlevel"] = o.nlevel;
    params["kmax"] = o.kmax;
  } else {
    for (const auto& d : require_scales(o, set)) windows.push_back(dims::Window{d, d * d});
    params["rho"] = "delta^2";
  }

  Json r;
  r["command"] = "assouad";
  Json entries = Json::array();
  if (o.center) {
    const Rational x = Rational::parse(*o.center);
    params["center"] = x.str();
    double best = 0.0;
    for (const auto& w : windows) {
      if (!(w.rho < w.delta)) throw InvalidInput("centred windows need rho < delta");
      const auto c = covers::local_cover_count(handle, x, w.delta, w.rho);
      const double slope = c <= 1 ? 0.0 : std::log(static_cast<double>(c)) / (w.delta / w.rho).log();
      best = std::max(best, slope);
      entries.push_back(Json{{"delta", w.delta.str()}, {"rho", w.rho.str()}, {"count", c},
                             {"slope", slope}});
    }
    r["best_slope"] = best;
  } else {
    const auto rep = dims::assouad_windows(handle, windows, o.samples, o.seed);
    for (const auto& w : rep.windows) entries.push_back(to_json(w));
    r["best_slope"] = rep.best_slope;
    if (rep.upper_bound_from_lambda) r["upper_bound_from_lambda"] = *rep.upper_bound_from_lambda;
  }
  r["params"] = params;
  r["entries"] = entries;
  return Outcome{serialize(r), true};
}

// equihom and verify equihom6

Json equihom_json(const dims::EquiHomReport& rep) {
  Json entries = Json::array();
  for (const auto& w : rep.windows) {
    Json j = to_json(w);
    j["ratio"] = Rational(numerics::to_big(w.sup_sampled), numerics::to_big(w.inf_sampled)).str();
    entries.push_back(j);
  }
  return entries;
}

Outcome cmd_equihom(const Options& o, bool as_check) {
  require_json(o, "equihom");
  const ResolvedSet set = resolve_input(o);
  const auto& c = set.cantor("equihom");
  const auto rep =
      dims::equihom_check(covers::SetHandle{c}, cantor_lattice(c, o), o.samples, o.seed);
  Json params = base_params(as_check ? "verify equihom6" : "equihom", o, &set);
  params["nlevel"] = o.nlevel;
  params["kmax"] = o.kmax;
  Json r;
  if (as_check) {
    r = make_report("equihom6", params, equihom_json(rep), rep.within_bound());
  } else {
    r["command"] = "equihom";
    r["params"] = params;
    r["entries"] = equihom_json(rep);
  }
  r["max_ratio"] = rep.max_ratio.str();
  r["window_count"] = rep.window_count;
  r["c1"] = rep.c1.str();
  r["c2"] = rep.c2.str();
  r["M_bound"] = rep.m_bound.str();
  r["within_bound"] = rep.within_bound();
  return Outcome{serialize(r), as_check ? rep.within_bound() : true};
}

// pair

Outcome cmd_pair(const Options& o) {
  require_json(o, "pair");
  if (o.set_path) throw InvalidInput("pair builds its sets from --q/--alpha and --rule");
  const TomlTable tc = pair_table(o.q, o.alpha, o.rule, o.beta, o.gamma, o.value, o.a, "C");
  const TomlTable td = pair_table(o.q, o.alpha, o.rule, o.beta, o.gamma, o.value, o.a, "D");
  const ResolvedSet c = resolve_spec(tc);
  const ResolvedSet d = resolve_spec(td);
  const auto& pair = *c.pair;

  Json r;
  r["command"] = "pair";
  Json params = base_params("pair", o, nullptr);
  params["pair"] = table_json(tc);
  params.erase("samples");
  params.erase("seed");
  r["params"] = params;
  r["description"] = pair.describe();
  Json a = Json::array(), s = Json::array(), n = Json::array(), m = Json::array();
  for (std::size_t k = 1; k <= o.kmax; ++k) {
    n.push_back(pair.n(k).get_str());
    m.push_back(pair.m(k).get_str());
  }
  for (std::size_t i = 1; i <= 2 * o.kmax + 1; ++i) {
    a.push_back(pair.a(i).get_str());
    s.push_back(pair.s(i).get_str());
  }
  r["a"] = a;
  r["s"] = s;
  r["n"] = n;
  r["m"] = m;
  for (const auto* side : {&c, &d}) {
    Json exps = Json::array();
    for (std::uint64_t i = 1; i <= 32; ++i) exps.push_back(side->generators->exponent(i));
    r["q_exponents_" + setlab::side_name(side->side)] = exps;
  }
  if (o.toml_prefix) {
    Json files = Json::array();
    for (const auto* t : {&tc, &td}) {
      const std::string path = *o.toml_prefix + "_" + t->at("side").text() + ".toml";
      std::ofstream f(path);
      if (!f) throw InvalidInput("cannot write " + path);
      f << to_toml(*t);
      files.push_back(path);
    }
    r["files"] = files;
  }
  return Outcome{serialize(r), true};
}

// verify

Outcome verify_theorem41(const Options& o) {
  const ResolvedSet set = resolve_input(o);
  if (!set.pair) throw InvalidInput("theorem41 needs a pair set");
  const auto rep = dims::verify_product_theorem(*set.pair, o.jmin, o.jmax);
  Json params = base_params("verify theorem41", o, &set);
  params["jmin"] = o.jmin;
  params["jmax"] = o.jmax;
  params.erase("samples");
  params.erase("seed");
  Json entries = Json::array();
  for (const auto& e : rep.entries) entries.push_back(to_json(e));
  Json r = make_report("theorem41", params, entries, rep.pass);
  r["a1"] = rep.a1;
  r["s2"] = rep.s2;
  return Outcome{serialize(r), rep.pass};
}

Outcome verify_theorem42(const Options& o) {
  const ResolvedSet set = resolve_input(o);
  if (!set.pair) throw InvalidInput("theorem42 needs a pair set");
  const std::uint64_t n_max = o.nmax.value_or(400);
  const std::uint64_t k_max = std::max<std::uint64_t>(o.kmax, 2);
  const auto rep = dims::verify_theorem42(*set.pair, n_max, k_max);
  Json params = base_params("verify theorem42", o, &set);
  params["nmax"] = n_max;
  params["kmax"] = k_max;
  params.erase("samples");
  params.erase("seed");
  Json entries = Json::array();
  for (const auto& b : rep.blocks) entries.push_back(to_json(b));
  Json r = make_report("theorem42", params, entries, rep.pass);
  Json rc = Json::array(), rd = Json::array();
  for (const auto& x : rep.ratios.c) rc.push_back(x.str());
  for (const auto& x : rep.ratios.d) rd.push_back(x.str());
  r["ratios_C"] = rc;
  r["ratios_D"] = rd;
  r["tail_limsup_C"] = rep.tail_c;
  r["tail_limsup_D"] = rep.tail_d;
  r["formula_C"] = to_json(rep.formula_c);
  r["formula_D"] = to_json(rep.formula_d);
  return Outcome{serialize(r), rep.pass};
}

Outcome verify_lemma35(const Options& o) {
  const ResolvedSet set = resolve_input(o);
  const auto& c = set.cantor("lemma35");
  const auto entries = dims::assouad_lower_witness(c, o.mmax, o.max_level);
  bool any_found = false;
  bool all_pass = true;
  for (const auto& w : entries) {
    any_found = any_found || w.found;
    if (w.found) all_pass = all_pass && w.pass;
  }
  const bool pass = any_found && all_pass;
  Json params = base_params("verify lemma35", o, &set);
  params["mmax"] = o.mmax;
  params["max_level"] = o.max_level;
  params.erase("samples");
  params.erase("seed");
  Json list = Json::array();
  for (const auto& w : entries) list.push_back(to_json(w));
  return Outcome{serialize(make_report("lemma35", params, list, pass)), pass};
}

Outcome verify_chain(const Options& o) {
  const ResolvedSet set = resolve_input(o);
  const auto& handle = set.set("chain");
  const auto scales = require_scales(o, set);
  std::vector<covers::ChainEntry> chain;
  for (const auto& d : scales) chain.push_back(covers::chain_at(handle, d));
  bool pass = true;
  Json entries = Json::array();
  for (const auto& e : chain) {
    pass = pass && e.holds();
    entries.push_back(to_json(e));
  }
  Json params = base_params("verify chain", o, &set);
  params.erase("samples");
  params.erase("seed");
  return Outcome{serialize(make_report("chain", params, entries, pass)), pass};
}

Outcome verify_appendix(const Options& o) {
  const ResolvedSet set = resolve_input(o);
  const auto& handle = set.set("appendix");
  const auto scales = require_scales(o, set);
  const auto profile = covers::cover_profile(handle, scales);
  const auto doubled = dims::self_product_dims(profile);
  bool pass = true;
  Json entries = Json::array();
  double finest_lower = 0.0, finest_upper = 0.0;
  for (const auto& e : profile.entries) {
    const auto b = dims::product_bracket(handle, handle, e.scale);
    const double neg_log = -e.scale.log();
    const bool ordered = b.lower <= b.upper;
    pass = pass && ordered;
    Json j{{"delta", e.scale.str()},
           {"lower", b.lower},
           {"upper", b.upper},
           {"lower_scale", b.lower_scale.str()},
           {"upper_scale", b.upper_scale.str()},
           {"countD", e.count_d},
           {"ordered", ordered}};
    if (neg_log > 0.0) {
      finest_lower = std::log(static_cast<double>(b.lower)) / neg_log;
      finest_upper = std::log(static_cast<double>(b.upper)) / neg_log;
      j["lower_dim"] = finest_lower;
      j["upper_dim"] = finest_upper;
    }
    entries.push_back(j);
  }
  const bool straddles = finest_lower <= doubled.upper + kTolerance &&
                         finest_upper >= doubled.lower - kTolerance;
  pass = pass && straddles;
  Json params = base_params("verify appendix", o, &set);
  params["m1"] = dims::kDefaultM1.str();
  params["m2"] = dims::kDefaultM2.str();
  params["tolerance"] = kTolerance;
  params.erase("samples");
  params.erase("seed");
  Json r = make_report("appendix", params, entries, pass);
  r["self_product_estimate"] = to_json(doubled);
  r["finest_bracket_dims"] = Json::array({finest_lower, finest_upper});
  return Outcome{serialize(r), pass};
}

// oracle-selftest

Outcome cmd_selftest(const Options& o) {
  require_json(o, "oracle-selftest");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> size_dist(1, 14);
  std::uniform_int_distribution<long> num_dist(0, 64);
  std::uniform_int_distribution<long> delta_dist(1, 32);
  std::uint64_t cover_ok = 0, packing_ok = 0, chain_ok = 0;
  Json failures = Json::array();
  for (std::uint64_t i = 0; i < o.count; ++i) {
    std::vector<Rational> pts;
    const int n = size_dist(rng);
    for (int k = 0; k < n; ++k) pts.emplace_back(numerics::BigInt(num_dist(rng)), numerics::BigInt(64));
    const covers::FinitePointSet set(pts);
    const Rational delta(numerics::BigInt(delta_dist(rng)), numerics::BigInt(64));
    const auto& sorted = set.points();
    const auto g = covers::greedy_min_cover(sorted, delta);
    const auto b = covers::brute_force_min_cover(sorted, delta);
    const auto gp = covers::greedy_packing(sorted, delta);
    const auto bp = covers::brute_force_packing(sorted, delta);
    const auto chain = covers::chain_at(covers::SetHandle{set}, delta);
    cover_ok += g == b;
    packing_ok += gp == bp;
    chain_ok += chain.holds();
    if ((g != b || gp != bp || !chain.holds()) && failures.size() < 20) {
      Json p = Json::array();
      for (const auto& x : sorted) p.push_back(x.str());
      failures.push_back(Json{{"points", p}, {"delta", delta.str()}, {"greedy", g}, {"dp", b},
                              {"greedy_packing", gp}, {"exhaustive_packing", bp},
                              {"chain", chain.holds()}});
    }
  }

  Json sweeps = Json::array();
  bool sweeps_ok = true;
  const std::vector<std::pair<std::string, Rational>> sets = {
      {"1/3", Rational(numerics::BigInt(1), numerics::BigInt(3))},
      {"2/5", Rational(numerics::BigInt(2), numerics::BigInt(5))}};
  const std::vector<std::string> scale_texts = {"1/4", "1/10", "1/50", "1/200", "1/243", "1/1000"};
  for (const auto& [name, lambda] : sets) {
    const setlab::CantorSet c(setlab::GeneratorSequence::constant(lambda), "lambda " + name);
    for (const auto& text : scale_texts) {
      const Rational d = Rational::parse(text);
      const auto kernel = covers::min_cover_count(covers::SetHandle{c}, d);
      const auto literal =
          covers::literal_sweep_cover(c, d, setlab::default_depth_cap(c.level_for_scale(d)));
      sweeps_ok = sweeps_ok && kernel == literal;
      sweeps.push_back(Json{{"lambda", name}, {"delta", text}, {"sweep", kernel},
                            {"literal", literal}, {"pass", kernel == literal}});
    }
  }

  const bool pass = cover_ok == o.count && packing_ok == o.count && chain_ok == o.count && sweeps_ok;
  Json params = base_params("oracle-selftest", o, nullptr);
  params["count"] = o.count;
  params.erase("samples");
  Json r = make_report("oracle-selftest", params, sweeps, pass);
  r["finite_instances"] = o.count;
  r["cover_agree"] = cover_ok;
  r["packing_agree"] = packing_ok;
  r["chain_hold"] = chain_ok;
  r["failures"] = failures;
  return Outcome{serialize(r), pass};
}

void add_options(CLI::App* app, Options& o) {
  app->add_option("--set", o.set_path, "Set spec file (TOML)");
  app->add_option("--scales", o.scales, "Scales: B^E1..B^E2, q^a..q^b, L^a..L^b or a list");
  app->add_option("--q", o.q, "Pair base q in (0,1/2)");
  app->add_option("--alpha", o.alpha, "Pair base q = 2^(-1/alpha)");
  app->add_option("--rule", o.rule, "a-sequence rule: lemma44, lemma45, constant, custom");
  app->add_option("--beta", o.beta, "Rule parameter beta");
  app->add_option("--gamma", o.gamma, "Rule parameter gamma");
  app->add_option("--value", o.value, "Constant rule value");
  app->add_option("--a", o.a, "Custom rule terms, comma separated");
  app->add_option("--side", o.side, "Pair side C or D");
  app->add_option("--jmin", o.jmin, "First exponent j");
  app->add_option("--jmax", o.jmax, "Last exponent j");
  app->add_option("--samples", o.samples, "Random centres per window");
  app->add_option("--seed", o.seed, "Sampling seed");
  app->add_option("--out", o.out, "Report path (default stdout)");
  app->add_option("--format", o.format, "json or csv");
  app->add_option("--kmax", o.kmax, "Largest window depth k, or ratio index");
  app->add_option("--nlevel", o.nlevel, "Largest window level n");
  app->add_option("--mmax", o.mmax, "Largest witness run m");
  app->add_option("--nmax", o.nmax, "Formula levels (boxdim, theorem42)");
  app->add_option("--count", o.count, "Random finite instances");
  app->add_option("--max-level", o.max_level, "Witness search depth");
  app->add_option("--toml-prefix", o.toml_prefix, "Write <prefix>_C.toml and <prefix>_D.toml");
  app->add_option("--center", o.center, "Fixed window centre in F");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised Cantor sets: covers, dimensions and verification"};
  app.name("cantorlab");
  app.require_subcommand(1);
  Options o;
  std::string check;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const char* name :
       {"describe", "cover", "boxdim", "assouad", "equihom", "pair", "verify", "oracle-selftest"}) {
    auto* sub = app.add_subcommand(name);
    add_options(sub, o);
    subs.emplace_back(name, sub);
  }
  subs[6].second
      ->add_option("check", check, "theorem41|theorem42|lemma35|chain|equihom6|appendix")
      ->required()
      ->check(CLI::IsMember(
          {"theorem41", "theorem42", "lemma35", "chain", "equihom6", "appendix"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  try {
    Outcome result;
    if (command == "describe") result = cmd_describe(o);
    else if (command == "cover") result = cmd_cover(o);
    else if (command == "boxdim") result = cmd_boxdim(o);
    else if (command == "assouad") result = cmd_assouad(o);
    else if (command == "equihom") result = cmd_equihom(o, false);
    else if (command == "pair") result = cmd_pair(o);
    else if (command == "oracle-selftest") result = cmd_selftest(o);
    else if (check == "theorem41") result = verify_theorem41(o);
    else if (check == "theorem42") result = verify_theorem42(o);
    else if (check == "lemma35") result = verify_lemma35(o);
    else if (check == "chain") result = verify_chain(o);
    else if (check == "equihom6") result = cmd_equihom(o, true);
    else result = verify_appendix(o);

    if (o.out) {
      std::ofstream f(*o.out);
      if (!f) throw InvalidInput("cannot write --out " + *o.out);
      f << result.text;
    } else {
      out << result.text;
    }
    if (command == "verify" || command == "oracle-selftest") {
      err << (command == "verify" ? check : command) << ": " << (result.pass ? "pass" : "FAIL")
          << "\n";
    }
    return result.pass ? kOk : kCheckFailed;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Undecidable& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace cantorlab::cli
