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

#ifndef CREMONA_INTERPOLATION_HPP
#define CREMONA_INTERPOLATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cremona/monoid.hpp"
#include "cremona/projective.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

// One group of unknowns: the coefficients of `monomials`, each multiplied by
// `multiplier` when the frame equation is assembled.
struct MonomialBlock {
    std::string name;
    unsigned degree = 0;
    Exponents multiplier;
    std::vector<Exponents> monomials;
};

enum class SystemKind { Monoid, BiVertex };

// Monoids (or bi-vertex monoids) of degree d containing a parametrized
// scheme, as a basis of coefficient vectors over `layout`.
struct MonoidSystem {
    SystemKind kind = SystemKind::Monoid;
    std::size_t ambient_dim = 0;
    unsigned degree = 0;
    LinearAutomorphism frame = LinearAutomorphism::identity(0);
    std::vector<MonomialBlock> layout;
    std::vector<Vector> basis;

    std::size_t unknowns() const;
};

// The linear system in the frame vertex_frame(vertex). Conditions are the
// coefficients of the pulled-back equation. Throws VertexOnScheme.
MonoidSystem monoid_system(const ParamScheme& z, const ProjectivePoint& vertex, unsigned d);

// Bi-vertex monoids with `first` at frame e_r and `second` at e_{r-1}. A
// frame may be supplied; it must send those coordinate points to the
// vertices. Throws VertexOnScheme, NonDistinctPoints or DegenerateFrame.
// With check_second = false the second vertex may lie on z.
MonoidSystem bivertex_system(const ParamScheme& z, const ProjectivePoint& first, const ProjectivePoint& second,
                             unsigned d, const std::optional<LinearAutomorphism>& frame = {},
                             bool check_second = true);

// Projective dimension; -1 for the empty system.
int system_dimension(const MonoidSystem& s);

// Projective dimension of all monoids of degree d with a fixed vertex in P^r.
int full_monoid_dimension(std::size_t r, unsigned d);

HomogeneousForm assemble_frame_equation(const MonoidSystem& s, const Vector& coefficients);
HomogeneousForm assemble_equation(const MonoidSystem& s, const Vector& coefficients);
Monoid assemble_monoid(const MonoidSystem& s, const Vector& coefficients);
BiVertexMonoid assemble_bivertex(const MonoidSystem& s, const Vector& coefficients);

// True when p lies on the closure of the component's image. Exact for
// points and curves; for higher arity it detects positive-dimensional
// fibres over p and otherwise falls back to parameter samples.
bool point_on_component(const ProjectivePoint& p, const SchemeComponent& c, Sampler& sampler);

// (s, t, u...) -> s * u_0^e * vertex + t * gamma(u), e = deg gamma.
SchemeComponent cone_parametrization(const ProjectivePoint& vertex, const SchemeComponent& c);

struct AvoidOptions {
    unsigned retries = 32;
    std::int64_t box = 8;
};

struct PickedMember {
    Vector coefficients;
    HomogeneousForm equation;  // original coordinates
};

// A random member whose pullback to every cone (each vertex of the system
// over each component) is nonzero and whose layer structure is valid:
// f_low != 0 for monoids; both double projection multipliers and
// F_{d-2} F_d - G_{d-1} F_{d-1} nonzero for bi-vertex monoids. Throws
// AvoidanceExhausted.
PickedMember pick_cone_avoiding(const MonoidSystem& s, const ParamScheme& z, Sampler& sampler,
                                const AvoidOptions& opts = {});

}  // namespace cremona

#endif
