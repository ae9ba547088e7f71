// Copyright 2026 The picard-cycles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// picard-cycles: command-line front end.
//
//   series   cusp / higher-weight intersection series or the theta series,
//            optional modularity check
//   lattice  standard or dual lattice, its rank-one form on e_2 and counts
//   hida     Eisenstein families, specializations, congruences, projectors
//   levels   level-subgroup verification reports
//   bigpair  Lambda-adic pairing, phi expansions and specializations
//   verify   named verification targets with pass/fail items
//
// Exit codes: 0 pass, 1 I/O or internal error, 2 bad configuration,
// 3 inconclusive modularity, 4 property failure.

#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "picard/big_pairing.hpp"
#include "picard/cogdell_series.hpp"
#include "picard/herm_lattice.hpp"
#include "picard/hida.hpp"
#include "picard/json_io.hpp"
#include "picard/level_groups.hpp"
#include "picard/qexp.hpp"
#include "picard/rng.hpp"

namespace {

using namespace picard;
using cli::Item;
using io::Json;

struct Common {
  std::uint64_t seed = 1;
  std::string out;
};

// Subcommand options. Defaults double as the documented CLI defaults.
struct SeriesOpts {
  std::int64_t D = 0;
  int weight_k = 0;
  std::string n0 = "1", hsigma = "1", constant = "0";
  std::int64_t terms = 200;
  bool theta = false;
  bool check = false;
  int samples = 200;
  std::int64_t max_c = 1;
  double min_imag = 0.8;
  double tol = 1e-8;
};

struct LatticeOpts {
  std::int64_t D = 0;
  bool dual = false;
  std::int64_t counts = 20;
};

struct HidaOpts {
  std::string family = "eisenstein";
  std::int64_t D = 7, p = 11;
  int M = 8;
  std::int64_t terms = 50;
  std::optional<std::int64_t> specialize;
  bool congruence = false;
  std::int64_t k = 3, kprime = 113;
  int m = 1;
  std::string project;
};

struct LevelsOpts {
  std::int64_t p = 3;
  int r = 2;
  std::string verify = "all";
  int samples = 10000;
  std::int64_t D = 0;
};

struct BigpairOpts {
  std::string context, xis, zeta, emit_context;
  bool regular = false;
  std::optional<std::int64_t> bind_series;
  std::int64_t p = 3;
  int M = 8, R = 4;
  std::size_t rank = 2;
  std::int64_t terms = 50;
  std::vector<std::string> specialize;
};

struct VerifyOpts {
  std::string target = "all";
  std::int64_t p = 3;
  int r = 2;
  int instances = 100;
  std::int64_t D = 0;
};

FieldCtx field_or_config_error(std::int64_t d) { return FieldCtx::make(d); }

// Smallest squarefree D with p split and an element of norm p in O_K.
FieldCtx auto_field(std::int64_t p) {
  for (std::int64_t d = 1; d < 1000; ++d) {
    if (!is_squarefree(d)) continue;
    FieldCtx k = FieldCtx::make(d);
    if (k.split_type(p) != SplitType::kSplit) continue;
    try {
      (void)default_varpi(k, p);
      return k;
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("no field with a principal prime above p found");
}

Item report_item(const std::string& id, bool pass, Json detail) { return Item{id, pass, std::move(detail)}; }

// ---- series -----------------------------------------------------------------

int run_series(const SeriesOpts& o, const Common& c, const std::string& cfg) {
  FieldCtx k = field_or_config_error(o.D);
  SeriesParams params = standard_params(k, o.terms);
  params.n0_norm = parse_rational(o.n0);
  params.h_sigma = parse_rational(o.hsigma);
  params.constant_term = parse_rational(o.constant);
  params.weight_k = o.weight_k;
  validate(params);
  const QExpansion f = o.theta ? theta_series(k, params.form, o.terms)
                       : o.weight_k == 0 ? cusp_series(params)
                                         : higher_weight_series(params);
  Json doc{{"schema", "picard.series_run/1"}, {"run", cli::run_info("series", c.seed, cfg)}, {"series", io::to_json(f)}};
  int code = cli::kOk;
  if (o.check) {
    ModularityOptions mo;
    mo.samples = o.samples;
    mo.seed = c.seed;
    mo.max_c_multiple = o.max_c;
    mo.min_imag = o.min_imag;
    mo.tol = o.tol;
    const ModularityReport rep = modularity_check(f, mo);
    doc["modularity"] = io::to_json(rep);
    if (rep.verdict == Verdict::kInconclusive) code = cli::kInconclusive;
    if (rep.verdict == Verdict::kFail) code = cli::kPropertyFailure;
  }
  cli::emit(doc, cli::resolve_output(c.out, "series"));
  return code;
}

// ---- lattice ----------------------------------------------------------------

int run_lattice(const LatticeOpts& o, const Common& c, const std::string& cfg) {
  FieldCtx k = field_or_config_error(o.D);
  HermLattice l = standard_lattice(k);
  if (o.dual) l = dual_lattice(l);
  const RankOneForm form = rank_one(l, unit_vector(1));
  const auto counts = representation_counts(form, o.counts);
  Json doc{{"schema", "picard.lattice_run/1"},
           {"run", cli::run_info("lattice", c.seed, cfg)},
           {"lattice", io::to_json(l)},
           {"integral", l.is_integral()},
           {"dual_index", to_string(dual_index(l))},
           {"rank_one_e2", io::to_json(form)},
           {"counts", counts}};
  cli::emit(doc, cli::resolve_output(c.out, "lattice"));
  return cli::kOk;
}

// ---- hida -------------------------------------------------------------------

int run_hida(const HidaOpts& o, const Common& c, const std::string& cfg) {
  Json doc{{"schema", "picard.hida_run/1"}, {"run", cli::run_info("hida", c.seed, cfg)}};
  int code = cli::kOk;
  if (!o.project.empty()) {
    const FiniteUpModel model = io::model_from_json(io::read_file(o.project));
    const ProjectorResult res = ordinary_projector(model);
    const Int& m = model.padic.modulus();
    const bool idempotent = mat_mul_mod(res.e, res.e, m) == res.e;
    const bool commutes = mat_mul_mod(res.e, model.matrix, m) == mat_mul_mod(model.matrix, res.e, m);
    doc["projector"] = io::to_json(res, model.padic);
    doc["idempotent"] = idempotent;
    doc["commutes"] = commutes;
    if (!idempotent || !commutes) code = cli::kPropertyFailure;
    cli::emit(doc, cli::resolve_output(c.out, "hida"));
    return code;
  }
  if (o.family != "eisenstein") throw std::invalid_argument("unknown family '" + o.family + "'");
  FieldCtx k = field_or_config_error(o.D);
  const PadicCtx padic = PadicCtx::make(o.p, o.M, k);
  const LambdaFamily fam = eisenstein_family(k, padic, o.terms);
  doc["family"] = io::to_json(fam);
  if (o.specialize) doc["specialization"] = io::to_json(specialize(fam, ArithPoint{*o.specialize}, o.terms));
  if (o.congruence) {
    const auto witness = congruence_witness(fam, o.k, o.kprime, o.m, o.terms);
    doc["congruence"] = Json{{"k", o.k}, {"kprime", o.kprime}, {"m", o.m}, {"terms", o.terms}, {"pass", !witness}};
    doc["congruence"]["witness"] = witness ? Json(*witness) : Json(nullptr);
    if (witness) code = cli::kPropertyFailure;
  }
  cli::emit(doc, cli::resolve_output(c.out, "hida"));
  return code;
}

// ---- level groups -----------------------------------------------------------

std::vector<Item> gamma_items(std::int64_t p, int r, int samples, std::uint64_t seed) {
  const GammaReport g = verify_gamma(p, r, samples, seed);
  const Json d = io::to_json(g);
  return {report_item("gamma-lemma.i", g.k1_preserved == g.samples, Json{{"preserved", g.k1_preserved}, {"samples", g.samples}}),
          report_item("gamma-lemma.ii", g.v1_preserved == g.samples, Json{{"preserved", g.v1_preserved}, {"samples", g.samples}}),
          report_item("gamma-lemma.iii", g.cube && g.cube_prime, Json{{"cube", g.cube}, {"cube_prime", g.cube_prime}}),
          report_item("gamma-lemma.iv", g.tau && g.tau_prime, Json{{"tau", g.tau}, {"tau_prime", g.tau_prime}})};
}

std::vector<Item> inclusion_items(std::int64_t p, int r, int samples, std::uint64_t seed) {
  std::vector<Item> out;
  const InclusionReport a = check_inclusion(Level::kK, r + 1, Level::kKPrime, r, p, samples, seed);
  const InclusionReport b = check_inclusion(Level::kKPrime, r, Level::kK, r, p, samples, seed + 1);
  const InclusionReport c = check_kprime_intersection(p, r, samples, seed + 2);
  out.push_back(report_item("levels.k_next_in_kprime", a.failures == 0, io::to_json(a)));
  out.push_back(report_item("levels.kprime_in_k", b.failures == 0, io::to_json(b)));
  out.push_back(report_item("levels.kprime_intersection", c.failures == 0, io::to_json(c)));
  return out;
}

std::vector<Item> lemma46_items(std::int64_t p, std::int64_t d) {
  const FieldCtx k = d > 0 ? FieldCtx::make(d) : auto_field(p);
  Lemma46Options opt;
  opt.p = p;
  int s = 1;
  std::int64_t size = p;
  while (size * p <= 243 && s < 5) {
    size *= p;
    ++s;
  }
  opt.s = s;
  std::vector<Item> out;
  const Lemma46Report rep = lemma46_check(k, opt);
  Json det = io::to_json(rep);
  det["D"] = k.D();
  out.push_back(report_item("lemma46.varpi", rep.holds(), det));
  Lemma46Options conj_opt = opt;
  conj_opt.varpi = k.conj(rep.varpi);
  const Lemma46Report rc = lemma46_check(k, conj_opt);
  Json det2 = io::to_json(rc);
  det2["D"] = k.D();
  out.push_back(report_item("lemma46.conj_varpi", rc.holds(), det2));
  return out;
}

std::vector<Item> normality_items(std::int64_t p, int r, int samples, std::uint64_t seed) {
  const NormalityReport a = check_normality(Level::kK1, Level::kK, p, r, samples, seed);
  const NormalityReport b = check_normality(Level::kK, Level::kK0, p, r, samples, seed + 1);
  return {report_item("levels.k1_normal_in_k", a.failures == 0, io::to_json(a)),
          report_item("levels.k_normal_in_k0", b.failures == 0, io::to_json(b))};
}

int run_levels(const LevelsOpts& o, const Common& c, const std::string& cfg) {
  if (!is_prime(o.p)) throw std::invalid_argument("p must be prime");
  if (o.r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<Item> items;
  auto add = [&](std::vector<Item> more) { items.insert(items.end(), more.begin(), more.end()); };
  const bool all = o.verify == "all";
  bool known = all;
  if (all || o.verify == "gamma") add(gamma_items(o.p, o.r, o.samples, c.seed)), known = true;
  if (all || o.verify == "inclusions") add(inclusion_items(o.p, o.r, o.samples, c.seed)), known = true;
  if (all || o.verify == "lemma46") add(lemma46_items(o.p, o.D)), known = true;
  // Normality is reported on request only: the displayed congruence shapes
  // are not normal, and the report carries the witnesses.
  if (o.verify == "normality") add(normality_items(o.p, o.r, o.samples, c.seed)), known = true;
  if (!known) throw std::invalid_argument("unknown --verify target '" + o.verify + "'");
  Json doc{{"schema", "picard.levels_run/1"},
           {"run", cli::run_info("levels", c.seed, cfg)},
           {"p", o.p},
           {"r", o.r},
           {"items", cli::items_json(items)},
           {"pass", cli::all_pass(items)}};
  cli::emit(doc, cli::resolve_output(c.out, "levels"));
  return cli::all_pass(items) ? cli::kOk : cli::kPropertyFailure;
}

// ---- big pairing ------------------------------------------------------------

int run_bigpair(const BigpairOpts& o, const Common& c, const std::string& cfg) {
  std::vector<std::pair<int, int>> points;
  for (const auto& s : o.specialize) points.push_back(cli::parse_specialization(s));
  const int sources = (o.context.empty() ? 0 : 1) + (o.regular ? 1 : 0) + (o.bind_series ? 1 : 0);
  if (sources != 1) throw std::invalid_argument("give exactly one of --context, --regular, --bind-series");

  PairingContext ctx;
  std::vector<BigClass> xis;
  BigClass zeta;
  std::int64_t tame = 1, chi = 1;
  if (o.bind_series) {
    const FieldCtx k = field_or_config_error(*o.bind_series);
    SeriesParams params = standard_params(k, o.terms);
    SeriesBinding b = bind_series(params, o.p, o.M, o.R);
    ctx = std::move(b.ctx);
    xis = std::move(b.xis);
    zeta = std::move(b.zeta);
    tame = k.abs_disc();
    chi = k.disc();
  } else {
    if (o.regular) {
      RegularModelOptions ro;
      ro.p = o.p;
      ro.precision = o.M;
      ro.max_level = o.R;
      ro.rank = o.rank;
      ro.seed = c.seed;
      ctx = regular_context(ro);
    } else {
      ctx = io::context_from_json(io::read_file(o.context));
    }
    if (!o.xis.empty()) {
      xis = io::big_classes_from_json(io::read_file(o.xis));
    } else {
      if (!o.regular) throw std::invalid_argument("--xis is required with --context");
      std::mt19937_64 rng = make_rng(c.seed, 0x78697331);
      for (std::int64_t n = 0; n < o.terms; ++n) {
        ModVec top(ctx.level(ctx.max_level()).dim());
        for (auto& x : top) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ctx.modulus));
        xis.push_back(tower_from_top(ctx, top));
      }
    }
    if (!o.zeta.empty()) {
      zeta = io::big_class_from_json(io::read_file(o.zeta));
    } else {
      if (!o.regular) throw std::invalid_argument("--zeta is required with --context");
      std::mt19937_64 rng = make_rng(c.seed, 0x7a657461);
      ModVec top(ctx.level(ctx.max_level()).dim());
      for (auto& x : top) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ctx.modulus));
      zeta = tower_from_top(ctx, top);
    }
  }
  if (!o.emit_context.empty()) io::write_file(o.emit_context, io::to_json(ctx));

  const ContextCheck check = check_context(ctx);
  const PhiExpansion phi = phi_expansion(ctx, xis, zeta, o.terms, tame, chi);
  const auto incoherent = check_coherence(phi);
  Json specs = Json::array();
  for (const auto& [k, r] : points) specs.push_back(Json{{"k", k}, {"r", r}, {"series", io::to_json(nu_specialize(phi, k, r))}});
  Json doc{{"schema", "picard.bigpair_run/1"},
           {"run", cli::run_info("bigpair", c.seed, cfg)},
           {"context_ok", check.ok},
           {"context_failures", check.failures},
           {"coherent", !incoherent.has_value()}};
  if (incoherent) doc["incoherent_at"] = Json{{"n", incoherent->first}, {"r", incoherent->second}};
  doc["phi"] = io::to_json(phi);
  doc["specializations"] = specs;
  cli::emit(doc, cli::resolve_output(c.out, "bigpair"));
  return check.ok && !incoherent ? cli::kOk : cli::kPropertyFailure;
}

// ---- verify -----------------------------------------------------------------

std::vector<Item> pairing_items(std::int64_t p, int instances, std::uint64_t seed) {
  RegularModelOptions ro;
  ro.p = p;
  ro.seed = seed;
  const PairingContext ctx = regular_context(ro);
  const ContextCheck check = check_context(ctx);
  const PairingProperties props = pairing_properties(ctx, instances, seed);
  auto frac = [&](int passed) { return Json{{"passed", passed}, {"instances", props.instances}}; };
  return {report_item("pairing.context", check.ok, Json(check.failures)),
          report_item("pairing.semilinear", props.semilinear == instances, frac(props.semilinear)),
          report_item("pairing.semilinear_second", props.semilinear_second == instances, frac(props.semilinear_second)),
          report_item("pairing.hecke_self_adjoint", props.hecke == instances, frac(props.hecke)),
          report_item("pairing.diagram", props.diagram == instances, frac(props.diagram))};
}

std::vector<Item> projector_items(std::int64_t p, int instances, std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed, 0x70726f6a);
  const PadicCtx padic = PadicCtx::make(p, 6);
  int idem = 0, comm = 0;
  for (int t = 0; t < instances; ++t) {
    const std::size_t d = 1 + rng() % 6;
    IntMatrix a(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a(i, j) = static_cast<long>(rng() % 1000);
    const FiniteUpModel model = make_model(padic, a);
    const ProjectorResult res = ordinary_projector(model);
    const Int& m = padic.modulus();
    if (mat_mul_mod(res.e, res.e, m) == res.e) ++idem;
    if (mat_mul_mod(res.e, model.matrix, m) == mat_mul_mod(model.matrix, res.e, m)) ++comm;
  }
  return {report_item("projector.idempotent", idem == instances, Json{{"passed", idem}, {"instances", instances}}),
          report_item("projector.commutes", comm == instances, Json{{"passed", comm}, {"instances", instances}})};
}

std::vector<Item> congruence_items(std::int64_t p, std::int64_t d, int instances, std::uint64_t seed) {
  FieldCtx k = d > 0 ? FieldCtx::make(d) : auto_field(p);
  const PadicCtx padic = PadicCtx::make(p, 4, k);
  const LambdaFamily fam = eisenstein_family(k, padic, 100);
  std::mt19937_64 rng = make_rng(seed, 0x636f6e67);
  int passed = 0;
  for (int t = 0; t < instances; ++t) {
    const int m = static_cast<int>(rng() % 3);
    std::int64_t period = p - 1;
    for (int i = 0; i < m; ++i) period *= p;
    const std::int64_t w = 2 + static_cast<std::int64_t>(rng() % 40);
    const std::int64_t w2 = w + period * (1 + static_cast<std::int64_t>(rng() % 3));
    if (congruence_check(fam, w, w2, m, 100)) ++passed;
  }
  return {report_item("hida.congruence", passed == instances,
                      Json{{"passed", passed}, {"instances", instances}, {"D", k.D()}, {"p", p}})};
}

std::vector<Item> shadow_items(std::int64_t d) {
  const FieldCtx k = FieldCtx::make(d > 0 ? d : 7);
  std::int64_t p = 11;
  while (k.abs_disc() % p == 0) p += 2;
  SeriesParams params = standard_params(k, 100);
  const SeriesBinding b = bind_series(params, p, 8, 2);
  std::vector<Item> out;
  for (int wk = 0; wk <= 2; ++wk)
    for (int r = 1; r <= 2; ++r) {
      const ShadowReport rep = series_shadow(b, params, wk, r, 100);
      Json det{{"k", wk}, {"r", r}, {"checked", rep.checked}, {"mismatches", rep.mismatches}};
      out.push_back(report_item("bigcog.shadow.k" + std::to_string(wk) + ".r" + std::to_string(r), rep.mismatches == 0, det));
    }
  return out;
}

int run_verify(const VerifyOpts& o, const Common& c, const std::string& cfg) {
  if (!is_prime(o.p)) throw std::invalid_argument("p must be prime");
  std::vector<Item> items;
  auto add = [&](std::vector<Item> more) { items.insert(items.end(), more.begin(), more.end()); };
  const bool all = o.target == "all";
  bool known = all;
  if (all || o.target == "gamma-lemma") add(gamma_items(o.p, o.r, 1000, c.seed)), known = true;
  if (all || o.target == "inclusions") add(inclusion_items(o.p, o.r, 1000, c.seed)), known = true;
  if (all || o.target == "lemma46") add(lemma46_items(o.p, o.D)), known = true;
  if (all || o.target == "projector") add(projector_items(o.p, o.instances, c.seed)), known = true;
  if (all || o.target == "congruence") add(congruence_items(o.p, o.D, o.instances, c.seed)), known = true;
  if (all || o.target == "pairing-diagram") {
    if (o.p == 2) throw std::invalid_argument("pairing-diagram needs an odd prime");
    add(pairing_items(o.p, o.instances, c.seed));
    known = true;
  }
  if (all || o.target == "series-shadow") add(shadow_items(o.D)), known = true;
  if (!known) throw std::invalid_argument("unknown --target '" + o.target + "'");
  Json doc{{"schema", "picard.verify_run/1"},
           {"run", cli::run_info("verify", c.seed, cfg)},
           {"target", o.target},
           {"items", cli::items_json(items)},
           {"pass", cli::all_pass(items)}};
  cli::emit(doc, cli::resolve_output(c.out, "verify"));
  return cli::all_pass(items) ? cli::kOk : cli::kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special-cycle generating series on Picard modular surfaces and their p-adic families", "picard-cycles"};
  app.set_version_flag("--version", std::string(PICARD_VERSION));
  app.set_config("--config", "", "Key-value config file: key = value, subcommand keys under [subcommand]");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--out", common.out, "Output file (default: $PICARD_OUT_DIR/<subcommand>.json, else stdout)");

  SeriesOpts so;
  auto* series = app.add_subcommand("series", "Cusp-intersection and higher-weight series");
  series->add_option("--D", so.D, "Squarefree D > 0 for K = Q(sqrt(-D))")->required();
  series->add_option("--weight-k", so.weight_k, "Series of weight 2k + 3")->capture_default_str()->check(CLI::NonNegativeNumber);
  series->add_option("--n0", so.n0, "N(n0) as p/q")->capture_default_str();
  series->add_option("--hsigma", so.hsigma, "|H_sigma| as p/q")->capture_default_str();
  series->add_option("--const", so.constant, "Constant term as p/q")->capture_default_str();
  series->add_option("--terms", so.terms, "Truncation N")->capture_default_str()->check(CLI::PositiveNumber);
  series->add_flag("--theta", so.theta, "Emit the weight-1 theta series of the rank-one form instead");
  series->add_flag("--check", so.check, "Run the modularity check");
  series->add_option("--samples", so.samples, "Sampled matrices")->capture_default_str()->check(CLI::PositiveNumber);
  series->add_option("--max-c", so.max_c, "Sample |c| = level * c' with |c'| <= max-c")->capture_default_str()->check(CLI::PositiveNumber);
  series->add_option("--min-imag", so.min_imag, "Lower bound for Im z")->capture_default_str();
  series->add_option("--tol", so.tol, "Defect tolerance")->capture_default_str();

  LatticeOpts lo;
  auto* lattice = app.add_subcommand("lattice", "Hermitian lattices and rank-one forms");
  lattice->add_option("--D", lo.D, "Squarefree D > 0")->required();
  lattice->add_flag("--dual", lo.dual, "Use the dual of O_K^3");
  lattice->add_option("--counts", lo.counts, "Representation counts up to this n")->capture_default_str()->check(CLI::NonNegativeNumber);

  HidaOpts ho;
  auto* hida = app.add_subcommand("hida", "Lambda-adic families and ordinary projectors");
  hida->add_option("--family", ho.family, "Family (eisenstein)")->capture_default_str();
  hida->add_option("--D", ho.D, "Squarefree D > 0")->capture_default_str();
  hida->add_option("--p", ho.p, "Prime, split in K")->capture_default_str();
  hida->add_option("--M", ho.M, "Precision p^M")->capture_default_str()->check(CLI::PositiveNumber);
  hida->add_option("--terms", ho.terms, "Truncation")->capture_default_str()->check(CLI::PositiveNumber);
  hida->add_option("--specialize", ho.specialize, "Specialize at weight k");
  hida->add_flag("--congruence", ho.congruence, "Check the Kummer congruence between --k and --kprime");
  hida->add_option("--k", ho.k, "First weight")->capture_default_str();
  hida->add_option("--kprime", ho.kprime, "Second weight")->capture_default_str();
  hida->add_option("--m", ho.m, "Congruence depth: k = k' mod (p-1)p^m")->capture_default_str()->check(CLI::NonNegativeNumber);
  hida->add_option("--project", ho.project, "Ordinary projector of a picard.up_model/1 file");

  LevelsOpts lv;
  auto* levels = app.add_subcommand("levels", "Level-subgroup verification");
  levels->add_option("--p", lv.p, "Prime")->capture_default_str();
  levels->add_option("--r", lv.r, "Level exponent")->capture_default_str()->check(CLI::PositiveNumber);
  levels->add_option("--verify", lv.verify, "all | gamma | inclusions | lemma46 | normality")->capture_default_str();
  levels->add_option("--samples", lv.samples, "Samples per check")->capture_default_str()->check(CLI::PositiveNumber);
  levels->add_option("--D", lv.D, "Field for lemma46 (0: smallest suitable)")->capture_default_str();

  BigpairOpts bo;
  auto* bigpair = app.add_subcommand("bigpair", "Lambda-adic pairing and phi expansions");
  bigpair->add_option("--context", bo.context, "picard.pairing_context/1 file");
  bigpair->add_option("--xis", bo.xis, "picard.big_classes/1 file");
  bigpair->add_option("--zeta", bo.zeta, "picard.big_class/1 file");
  bigpair->add_flag("--regular", bo.regular, "Generate a regular-representation context from the seed");
  bigpair->add_option("--bind-series", bo.bind_series, "Bind the cusp series of Q(sqrt(-D)) to the trivial context");
  bigpair->add_option("--p", bo.p, "Odd prime")->capture_default_str();
  bigpair->add_option("--M", bo.M, "Precision p^M")->capture_default_str()->check(CLI::PositiveNumber);
  bigpair->add_option("--R", bo.R, "Number of levels")->capture_default_str()->check(CLI::PositiveNumber);
  bigpair->add_option("--rank", bo.rank, "Rank of the regular model")->capture_default_str()->check(CLI::PositiveNumber);
  bigpair->add_option("--terms", bo.terms, "Truncation")->capture_default_str()->check(CLI::PositiveNumber);
  bigpair->add_option("--specialize", bo.specialize, "k=<int>,r=<int>; repeatable");
  bigpair->add_option("--emit-context", bo.emit_context, "Also write the context used");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Named verification targets");
  verify->add_option("--target", vo.target,
                     "all | gamma-lemma | inclusions | lemma46 | projector | congruence | pairing-diagram | series-shadow")
      ->capture_default_str();
  verify->add_option("--p", vo.p, "Prime")->capture_default_str();
  verify->add_option("--r", vo.r, "Level exponent")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--instances", vo.instances, "Randomized instances")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--D", vo.D, "Field (0: automatic)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string cfg = "seed=" + std::to_string(common.seed) + "\n" + sub->config_to_str(true, false);
  try {
    if (sub == series) return run_series(so, common, cfg);
    if (sub == lattice) return run_lattice(lo, common, cfg);
    if (sub == hida) return run_hida(ho, common, cfg);
    if (sub == levels) return run_levels(lv, common, cfg);
    if (sub == bigpair) return run_bigpair(bo, common, cfg);
    if (sub == verify) return run_verify(vo, common, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "picard-cycles: " << e.what() << "\n";
    return cli::kConfig;
  } catch (const std::exception& e) {
    std::cerr << "picard-cycles: " << e.what() << "\n";
    return cli::kError;
  }
  return cli::kError;
}
