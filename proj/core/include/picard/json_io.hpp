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


// JSON forms of the library objects. Every document carries a "schema" field
// "picard.<kind>/<version>"; readers reject other schemas. Rationals are
// strings "p/q" (or "p"), integers beyond 2^53 are strings as well, and
// residues mod p^M are plain integers.

#ifndef PICARD_JSON_IO_HPP_
#define PICARD_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "picard/big_pairing.hpp"
#include "picard/herm_lattice.hpp"
#include "picard/hida.hpp"
#include "picard/level_groups.hpp"
#include "picard/qexp.hpp"
#include "picard/quad_field.hpp"

namespace picard::io {

using Json = nlohmann::ordered_json;

// Throws std::invalid_argument unless doc["schema"] == expected.
void expect_schema(const Json& doc, const std::string& expected);

Json to_json(const FieldCtx& ctx);
FieldCtx field_from_json(const Json& doc);

Json to_json(const HermLattice& lattice);
HermLattice lattice_from_json(const Json& doc);
Json to_json(const RankOneForm& form);

Json to_json(const QExpansion& f);
QExpansion qexp_from_json(const Json& doc);
Json to_json(const ModularityReport& report);

Json to_json(const LambdaFamily& family);
LambdaFamily family_from_json(const Json& doc);
Json to_json(const FiniteUpModel& model);
FiniteUpModel model_from_json(const Json& doc);
Json to_json(const ProjectorResult& result, const PadicCtx& padic);

Json to_json(const PairingContext& ctx);
PairingContext context_from_json(const Json& doc);
Json to_json(const BigClass& b);
BigClass big_class_from_json(const Json& doc);
// {"schema": "picard.big_classes/1", "classes": [...]}; classes[n - 1] is for q^n.
Json to_json(const std::vector<BigClass>& classes);
std::vector<BigClass> big_classes_from_json(const Json& doc);
Json to_json(const PhiExpansion& phi);
PhiExpansion phi_from_json(const Json& doc);

Json to_json(const GammaReport& report);
Json to_json(const InclusionReport& report);
Json to_json(const NormalityReport& report);
Json to_json(const Lemma46Report& report);

// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& doc);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& doc);

}  // namespace picard::io

#endif  // PICARD_JSON_IO_HPP_
