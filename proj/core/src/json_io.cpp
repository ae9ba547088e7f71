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


#include "picard/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace picard::io {

namespace {

Json rat_json(const Rat& q) { return to_string(q); }
Rat rat_of(const Json& j) { return parse_rational(j.get<std::string>()); }
Json int_json(const Int& z) { return z.get_str(); }
Int int_of(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  return parse_integer(j.get<std::string>());
}

Json kvec_json(const KVec& v) {
  Json out = Json::array();
  for (const KElem& e : v) out.push_back(Json::array({rat_json(e.x), rat_json(e.y)}));
  return out;
}

KVec kvec_of(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("vector: expected 3 entries");
  KVec v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = KElem{rat_of(j[i].at(0)), rat_of(j[i].at(1))};
  return v;
}

Json rat_matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json int_matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix int_matrix_of(const Json& j) {
  const std::size_t n = j.size();
  const std::size_t c = n == 0 ? 0 : j[0].size();
  IntMatrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (j[i].size() != c) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = int_of(j[i][k]);
  }
  return m;
}

Json mod_matrix_json(const ModMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

ModMatrix mod_matrix_of(const Json& j, std::int64_t modulus) {
  const std::size_t n = j.size();
  const std::size_t c = n == 0 ? 0 : j[0].size();
  ModMatrix m(n, c, modulus);
  for (std::size_t i = 0; i < n; ++i) {
    if (j[i].size() != c) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t k = 0; k < c; ++k) m.set(i, k, j[i][k].get<std::int64_t>());
  }
  return m;
}

Json level_element_json(const LevelElement& e) { return Json{{"g", rat_matrix_json(e.g)}, {"x", int_json(e.x)}}; }

const char* atom_kind(IwasawaAtom::Kind k) {
  switch (k) {
    case IwasawaAtom::Kind::kConstant: return "constant";
    case IwasawaAtom::Kind::kDivisorSum: return "divisor_sum";
    case IwasawaAtom::Kind::kPolynomialT: return "polynomial_t";
    case IwasawaAtom::Kind::kPolynomialK: return "polynomial_k";
  }
  return "constant";
}

IwasawaFn atom_of(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  auto coeffs = [&]() {
    std::vector<Int> c;
    for (const auto& x : j.at("coeffs")) c.push_back(int_of(x));
    return c;
  };
  if (kind == "constant") return IwasawaFn::constant(int_of(j.at("value")));
  if (kind == "divisor_sum")
    return IwasawaFn::divisor_sum(j.at("n").get<std::int64_t>(), j.at("disc").get<std::int64_t>(),
                                  j.at("shift").get<std::int64_t>());
  if (kind == "polynomial_t") return IwasawaFn::polynomial_t(coeffs());
  if (kind == "polynomial_k") return IwasawaFn::polynomial_k(coeffs());
  throw std::invalid_argument("unknown Iwasawa atom kind '" + kind + "'");
}

Json vec_json(const ModVec& v) { return Json(v); }

ModVec vec_of(const Json& j, std::int64_t modulus) {
  ModVec v = j.get<ModVec>();
  if (modulus > 0)
    for (auto& x : v) x = ((x % modulus) + modulus) % modulus;
  return v;
}

}  // namespace

void expect_schema(const Json& doc, const std::string& expected) {
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != expected)
    throw std::invalid_argument("expected a document with schema '" + expected + "'");
}

// ---- field, lattices -------------------------------------------------------

Json to_json(const FieldCtx& ctx) { return Json{{"schema", "picard.field/1"}, {"D", ctx.D()}, {"disc", ctx.disc()}}; }

FieldCtx field_from_json(const Json& doc) {
  expect_schema(doc, "picard.field/1");
  FieldCtx ctx = FieldCtx::make(doc.at("D").get<std::int64_t>());
  if (doc.contains("disc") && doc["disc"].get<std::int64_t>() != ctx.disc())
    throw std::invalid_argument("field: disc does not match D");
  return ctx;
}

Json to_json(const HermLattice& lattice) {
  Json basis = Json::array();
  for (const KVec& v : lattice.zbasis()) basis.push_back(kvec_json(v));
  return Json{{"schema", "picard.lattice/1"},
              {"D", lattice.field().D()},
              {"zbasis", basis},
              {"gram", rat_matrix_json(lattice.gram())}};
}

HermLattice lattice_from_json(const Json& doc) {
  expect_schema(doc, "picard.lattice/1");
  FieldCtx ctx = FieldCtx::make(doc.at("D").get<std::int64_t>());
  std::vector<KVec> basis;
  for (const auto& v : doc.at("zbasis")) basis.push_back(kvec_of(v));
  return HermLattice::from_basis(ctx, std::move(basis));
}

Json to_json(const RankOneForm& form) {
  return Json{{"schema", "picard.rank_one_form/1"},
              {"field_disc", form.field_disc},
              {"q", Json::array({rat_json(form.qa), rat_json(form.qb), rat_json(form.qc)})},
              {"shift", Json::array({rat_json(form.shift_a), rat_json(form.shift_b)})},
              {"gen1", kvec_json(form.gen1)},
              {"gen2", kvec_json(form.gen2)},
              {"disc_lattice", rat_json(form.disc_lattice)},
              {"disc_dual", rat_json(form.disc_dual)}};
}

// ---- q-expansions ----------------------------------------------------------

Json to_json(const QExpansion& f) {
  Json coeffs = Json::array();
  for (std::int64_t n = 0; n <= f.trunc(); ++n) coeffs.push_back(Json::array({n, rat_json(f[n])}));
  Json out{{"schema", "picard.qexp/1"},
           {"weight", f.weight()},
           {"level", f.level()},
           {"character_disc", f.character_disc()},
           {"trunc", f.trunc()}};
  out["modulus"] = f.is_exact() ? Json(nullptr) : int_json(f.modulus());
  out["coeffs"] = std::move(coeffs);
  return out;
}

QExpansion qexp_from_json(const Json& doc) {
  expect_schema(doc, "picard.qexp/1");
  const std::int64_t trunc = doc.at("trunc").get<std::int64_t>();
  if (trunc < 0) throw std::invalid_argument("qexp: negative truncation");
  std::vector<Rat> c(static_cast<std::size_t>(trunc) + 1);
  for (const auto& entry : doc.at("coeffs")) {
    const std::int64_t n = entry.at(0).get<std::int64_t>();
    if (n < 0 || n > trunc) throw std::invalid_argument("qexp: coefficient index out of range");
    c[static_cast<std::size_t>(n)] = rat_of(entry.at(1));
  }
  const Int modulus = doc.contains("modulus") && !doc["modulus"].is_null() ? int_of(doc["modulus"]) : Int(0);
  return QExpansion(std::move(c), doc.at("weight").get<int>(), doc.at("level").get<std::int64_t>(),
                    doc.value("character_disc", std::int64_t{1}), modulus);
}

Json to_json(const ModularityReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(Json{{"gamma", Json::array({w.gamma.a, w.gamma.b, w.gamma.c, w.gamma.d})},
                             {"z", Json::array({w.z.real(), w.z.imag()})},
                             {"defect", w.defect},
                             {"tail", w.tail}});
  return Json{{"schema", "picard.modularity_report/1"},
              {"verdict", to_string(report.verdict)},
              {"max_defect", report.max_defect},
              {"tail_bound", report.tail_bound},
              {"samples", report.samples},
              {"seed", report.seed},
              {"witnesses", witnesses}};
}

// ---- hida ------------------------------------------------------------------

Json to_json(const LambdaFamily& family) {
  Json rules = Json::array();
  for (const IwasawaFn& fn : family.rules) {
    Json factors = Json::array();
    for (const IwasawaAtom& a : fn.factors()) {
      Json atom{{"kind", atom_kind(a.kind)}};
      switch (a.kind) {
        case IwasawaAtom::Kind::kConstant: atom["value"] = int_json(a.value); break;
        case IwasawaAtom::Kind::kDivisorSum:
          atom["n"] = a.n;
          atom["disc"] = a.disc;
          atom["shift"] = a.shift;
          break;
        default: {
          Json c = Json::array();
          for (const Int& x : a.coeffs) c.push_back(int_json(x));
          atom["coeffs"] = c;
        }
      }
      factors.push_back(std::move(atom));
    }
    rules.push_back(std::move(factors));
  }
  return Json{{"schema", "picard.family/1"},
              {"p", family.padic.p()},
              {"M", family.padic.precision()},
              {"tame_level", family.tame_level},
              {"char_disc", family.char_disc},
              {"weight_shift", family.weight_shift},
              {"rules", rules}};
}

LambdaFamily family_from_json(const Json& doc) {
  expect_schema(doc, "picard.family/1");
  LambdaFamily f{PadicCtx::make(doc.at("p").get<std::int64_t>(), doc.at("M").get<int>()),
                 doc.at("tame_level").get<std::int64_t>(), doc.value("char_disc", std::int64_t{1}),
                 doc.value("weight_shift", 0), {}};
  for (const auto& rule : doc.at("rules")) {
    IwasawaFn fn;
    for (const auto& atom : rule) fn = fn * atom_of(atom);
    f.rules.push_back(std::move(fn));
  }
  return f;
}

Json to_json(const FiniteUpModel& model) {
  return Json{{"schema", "picard.up_model/1"},
              {"p", model.padic.p()},
              {"M", model.padic.precision()},
              {"matrix", int_matrix_json(model.matrix)},
              {"basis", model.basis}};
}

FiniteUpModel model_from_json(const Json& doc) {
  expect_schema(doc, "picard.up_model/1");
  PadicCtx padic = PadicCtx::make(doc.at("p").get<std::int64_t>(), doc.at("M").get<int>());
  std::vector<std::string> basis;
  if (doc.contains("basis")) basis = doc["basis"].get<std::vector<std::string>>();
  return make_model(padic, int_matrix_of(doc.at("matrix")), std::move(basis));
}

Json to_json(const ProjectorResult& result, const PadicCtx& padic) {
  return Json{{"schema", "picard.projector/1"},
              {"p", padic.p()},
              {"M", padic.precision()},
              {"rank", result.rank},
              {"iterations", result.iterations},
              {"e", int_matrix_json(result.e)}};
}

// ---- big pairing -----------------------------------------------------------

Json to_json(const PairingContext& ctx) {
  Json levels = Json::array();
  for (const LevelModel& lv : ctx.levels) {
    Json l{{"form", mod_matrix_json(lv.form)},
           {"diamond", mod_matrix_json(lv.diamond)},
           {"lambda_push", mod_matrix_json(lv.lambda_push)},
           {"lambda_pull", mod_matrix_json(lv.lambda_pull)},
           {"up", mod_matrix_json(lv.up)}};
    if (lv.hecke) l["hecke"] = mod_matrix_json(*lv.hecke);
    levels.push_back(std::move(l));
  }
  Json push = Json::array(), pull = Json::array();
  for (const auto& m : ctx.push) push.push_back(mod_matrix_json(m));
  for (const auto& m : ctx.pull) pull.push_back(mod_matrix_json(m));
  return Json{{"schema", "picard.pairing_context/1"},
              {"p", ctx.p},
              {"M", ctx.precision},
              {"levels", levels},
              {"push", push},
              {"pull", pull}};
}

PairingContext context_from_json(const Json& doc) {
  expect_schema(doc, "picard.pairing_context/1");
  PairingContext ctx;
  ctx.p = doc.at("p").get<std::int64_t>();
  ctx.precision = doc.at("M").get<int>();
  ctx.modulus = GroupRingElt(ctx.p, 1, ctx.precision).modulus();
  const std::int64_t m = ctx.modulus;
  for (const auto& l : doc.at("levels")) {
    LevelModel lv{mod_matrix_of(l.at("form"), m), mod_matrix_of(l.at("diamond"), m),
                  mod_matrix_of(l.at("lambda_push"), m), mod_matrix_of(l.at("lambda_pull"), m),
                  mod_matrix_of(l.at("up"), m), std::nullopt};
    if (l.contains("hecke")) lv.hecke = mod_matrix_of(l["hecke"], m);
    ctx.levels.push_back(std::move(lv));
  }
  for (const auto& x : doc.at("push")) ctx.push.push_back(mod_matrix_of(x, m));
  for (const auto& x : doc.at("pull")) ctx.pull.push_back(mod_matrix_of(x, m));
  return ctx;
}

Json to_json(const BigClass& b) {
  Json tower = Json::array();
  for (const auto& v : b.tower) tower.push_back(vec_json(v));
  return Json{{"schema", "picard.big_class/1"}, {"tower", tower}};
}

BigClass big_class_from_json(const Json& doc) {
  expect_schema(doc, "picard.big_class/1");
  BigClass b;
  for (const auto& v : doc.at("tower")) b.tower.push_back(vec_of(v, 0));
  return b;
}

Json to_json(const std::vector<BigClass>& classes) {
  Json arr = Json::array();
  for (const auto& b : classes) arr.push_back(to_json(b));
  return Json{{"schema", "picard.big_classes/1"}, {"classes", arr}};
}

std::vector<BigClass> big_classes_from_json(const Json& doc) {
  expect_schema(doc, "picard.big_classes/1");
  std::vector<BigClass> out;
  for (const auto& c : doc.at("classes")) out.push_back(big_class_from_json(c));
  return out;
}

Json to_json(const PhiExpansion& phi) {
  Json coeffs = Json::array();
  for (const auto& row : phi.coeffs) {
    Json levels = Json::array();
    for (const auto& e : row) levels.push_back(Json(e.coeffs()));
    coeffs.push_back(std::move(levels));
  }
  return Json{{"schema", "picard.phi/1"},
              {"p", phi.p},
              {"M", phi.precision},
              {"tame_level", phi.tame_level},
              {"char_disc", phi.char_disc},
              {"coeffs", coeffs}};
}

PhiExpansion phi_from_json(const Json& doc) {
  expect_schema(doc, "picard.phi/1");
  PhiExpansion phi;
  phi.p = doc.at("p").get<std::int64_t>();
  phi.precision = doc.at("M").get<int>();
  phi.tame_level = doc.value("tame_level", std::int64_t{1});
  phi.char_disc = doc.value("char_disc", std::int64_t{1});
  for (const auto& row : doc.at("coeffs")) {
    std::vector<GroupRingElt> levels;
    int r = 1;
    for (const auto& c : row) {
      GroupRingElt e(phi.p, r, phi.precision);
      const auto v = c.get<std::vector<std::int64_t>>();
      if (static_cast<std::int64_t>(v.size()) != e.order()) throw std::invalid_argument("phi: wrong group ring size");
      for (std::size_t i = 0; i < v.size(); ++i) e.set(static_cast<std::int64_t>(i), v[i]);
      levels.push_back(std::move(e));
      ++r;
    }
    phi.coeffs.push_back(std::move(levels));
  }
  return phi;
}

// ---- level groups ----------------------------------------------------------

Json to_json(const GammaReport& r) {
  return Json{{"schema", "picard.gamma_report/1"},
              {"p", r.p},
              {"r", r.r},
              {"cube", r.cube},
              {"cube_prime", r.cube_prime},
              {"tau", r.tau},
              {"tau_prime", r.tau_prime},
              {"samples", r.samples},
              {"k1_preserved", r.k1_preserved},
              {"v1_preserved", r.v1_preserved},
              {"ok", r.ok()}};
}

Json to_json(const InclusionReport& r) {
  Json out{{"schema", "picard.inclusion_report/1"},
           {"small", to_string(r.small)},
           {"small_r", r.small_r},
           {"big", to_string(r.big)},
           {"big_r", r.big_r},
           {"samples", r.samples},
           {"failures", r.failures}};
  out["witness"] = r.witness ? level_element_json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const NormalityReport& r) {
  Json out{{"schema", "picard.normality_report/1"},
           {"sub", to_string(r.sub)},
           {"group", to_string(r.group)},
           {"samples", r.samples},
           {"failures", r.failures}};
  out["n"] = r.n ? level_element_json(*r.n) : Json(nullptr);
  out["g"] = r.g ? level_element_json(*r.g) : Json(nullptr);
  return out;
}

Json to_json(const Lemma46Report& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(Json{{"a", s.a}, {"b", s.b}, {"x", s.x}});
  return Json{{"schema", "picard.lemma46_report/1"},
              {"p", r.p},
              {"s", r.s},
              {"varpi", Json::array({int_json(r.varpi.a), int_json(r.varpi.b)})},
              {"iota_omega", r.iota_omega},
              {"iota_delta", r.iota_delta},
              {"iota_varpi", r.iota_varpi},
              {"checked", r.checked},
              {"solution_count", r.solution_count},
              {"solutions", sols},
              {"holds", r.holds()}};
}

// ---- files -------------------------------------------------------------------

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << dump(doc);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace picard::io
