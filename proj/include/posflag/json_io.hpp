/*
   Copyright 2026 The posflag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


/*
   JSON encodings. A rational is "p/q" (or "p"); an element of Q(t) is
   {"num": [...], "den": [...]} with ascending integer coefficient strings.
   Parsing under FieldKind::ratfunc lifts rationals to constants; parsing
   under FieldKind::rational rejects Q(t) values. Object keys are emitted
   sorted, so dump() output is canonical.
*/

#ifndef POSFLAG_JSON_IO_HPP
#define POSFLAG_JSON_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "posflag/bd_coords.hpp"
#include "posflag/positivity.hpp"
#include "posflag/reps.hpp"

namespace posflag::io {

using json = nlohmann::json;

json to_json(const FieldElement& x);
FieldElement field_from_json(const json& j, FieldKind k);
// Rational unless some value in the document is a Q(t) object.
FieldKind detect_kind(const json& j);

json to_json(const Vector& v);
Vector vector_from_json(const json& j, FieldKind k);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, FieldKind k);

json to_json(const UPoly& p);

json to_json(const Flag& f);
Flag flag_from_json(const json& j, FieldKind k);
json to_json(const FlagTuple& t);
FlagTuple tuple_from_json(const json& j, FieldKind k);

json to_json(const IdealTriangulation& t);
IdealTriangulation triangulation_from_json(const json& j);

json to_json(const PositivityCoordinates& c);
PositivityCoordinates positivity_coords_from_json(const json& j, const IdealTriangulation& tri, size_t n, FieldKind k);

json to_json(const LaminationGraph& lam);
LaminationGraph lamination_from_json(const json& j);

// {"n": n, "coordinates": {key: value}}
json to_json(const CoordinateVector& c);
// Entries are placed in schema order; missing or extra keys are a SchemaMismatch.
CoordinateVector coordinates_from_json(const json& j, const LaminationGraph& lam, FieldKind k);

json to_json(const FlagDecoration& d);
FlagDecoration decoration_from_json(const json& j, FieldKind k);

json to_json(const Representation& r);
Representation representation_from_json(const json& j, FieldKind k);

WitnessOrder witness_from_json(const json& j);

json to_json(const RelationReport& r);

// Lamination fixture: a lamination together with the data that decorates it.
struct Fixture {
    LaminationGraph lamination;
    std::map<std::string, std::string> points;      // label -> word
    std::map<std::string, std::string> holonomies;  // closed leaf -> word
    std::map<std::string, FieldElement> eigenvalue_ratios;
    Representation representation;
};

Fixture fixture_from_json(const json& j, FieldKind k);

json read_json_file(const std::string& path);  // "-" reads standard input

}  // namespace posflag::io

#endif
