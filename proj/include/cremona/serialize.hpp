/*
   Copyright 2026 The cremona-kit Authors

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

#ifndef CREMONA_SERIALIZE_HPP
#define CREMONA_SERIALIZE_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "cremona/dejonquieres.hpp"
#include "cremona/equivalence.hpp"
#include "cremona/interpolation.hpp"
#include "cremona/monoid.hpp"

namespace cremona {

// Insertion-ordered so that equal objects always print to equal bytes.
using Json = nlohmann::ordered_json;

// Every *_from_json throws Error(Parse) on malformed input.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"nvars", "degree", "terms": [{"exps": [...], "coeff": "p/q"}, ...]}
Json to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const Json& j);
// Also accepts the text notation ("x0*x1 - 2/3*x2^2") over nvars variables;
// the text "0" needs the degree.
HomogeneousForm form_from_json(const Json& j, std::size_t nvars, std::optional<unsigned> degree = {});

Json to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json to_json(const LinearAutomorphism& a);
LinearAutomorphism automorphism_from_json(const Json& j);

// {"degree", "forms": [...]}
Json to_json(const RationalMap& m);
RationalMap map_from_json(const Json& j);

// {"phi", "delta", "delta_prime"}
Json to_json(const InverseCertificate& c);
InverseCertificate certificate_from_json(const Json& j);

// {"ambient_dim", "components": [{"arity", "degree", "forms"}]}; a component
// with "arity" may give its forms as text.
Json to_json(const ParamScheme& z);
ParamScheme scheme_from_json(const Json& j);

Json to_json(const DeJonquieresMap& m);
DeJonquieresMap dejonquieres_from_json(const Json& j);

Json to_json(const Monoid& m);
Monoid monoid_from_json(const Json& j);

Json to_json(const BiVertexMonoid& w);
BiVertexMonoid bivertex_from_json(const Json& j);

Json to_json(const MonoidSystem& s);

Json to_json(const CremonaChain& c);
CremonaChain chain_from_json(const Json& j);

Json read_json_file(const std::string& path);
// Two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace cremona

#endif
