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

#ifndef CREMONA_DEJONQUIERES_HPP
#define CREMONA_DEJONQUIERES_HPP

#include <span>
#include <vector>

#include "cremona/projective.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

// Data of x0 -> (x0 F0 + G0) / (x0 F + G) on the lines through the center.
// All four forms live in the r+1 frame variables and do not involve x0.
struct MoebiusData {
    HomogeneousForm F0;
    HomogeneousForm G0;
    HomogeneousForm F;
    HomogeneousForm G;
};

// De Jonquieres map [x0 F0 + G0, x1 (x0 F + G), ..., xr (x0 F + G)] written in
// frame coordinates y = T^-1 x, so that the center is T e0.
class DeJonquieresMap {
public:
    // Degrees must be (d-1, d, d-2, d-1); zero forms are accepted at any
    // nominal degree, and F must vanish when d = 1. Throws DegreeMismatch,
    // ArityMismatch, InvalidArgument (x0 occurs) or ZeroDeterminant.
    DeJonquieresMap(LinearAutomorphism frame, unsigned degree, MoebiusData data);

    std::size_t ambient_dim() const noexcept { return frame_.dim(); }
    unsigned degree() const noexcept { return degree_; }
    const LinearAutomorphism& frame() const noexcept { return frame_; }
    const MoebiusData& data() const noexcept { return data_; }
    ProjectivePoint center() const { return frame_.apply(ProjectivePoint::coordinate(ambient_dim(), 0)); }

    // D = F0 G - F G0.
    HomogeneousForm determinant() const;

private:
    LinearAutomorphism frame_;
    unsigned degree_;
    MoebiusData data_;
};

// The tuple [x0 F0 + G0, xi (x0 F + G)] itself, with no frame and no checks.
RationalMap dj_normal_form(std::size_t r, const MoebiusData& data);

// T o N o T^-1.
RationalMap dj_forward(const DeJonquieresMap& m);

// Same frame, data (G, -G0, -F, F0).
DeJonquieresMap dj_inverse(const DeJonquieresMap& m);

// dj_forward(m) together with dj_forward(dj_inverse(m)) and its certificate.
CertifiedPair dj_certified(const DeJonquieresMap& m);

struct PointMove {
    ProjectivePoint from;
    ProjectivePoint to;
};

struct ConstraintOptions {
    unsigned resamples = 32;   // random members tried per degree
    std::int64_t box = 8;      // combination coefficients in {-box..box}
};

// A de Jonquieres map of degree d centered at `vertex` sending each
// move.from to move.to and fixing every point of `fixed`, chosen as a random
// member of the solution space that passes the genericity checks (D != 0,
// x0 F + G nonzero at every constrained point, inverse defined at each image
// and sending it back). Throws InvalidArgument for malformed constraints,
// NoSolutionAtDegree, or GenericityExhausted.
DeJonquieresMap dj_from_constraints(const ProjectivePoint& vertex, std::span<const PointMove> moves,
                                    std::span<const ProjectivePoint> fixed, unsigned d, Sampler& sampler,
                                    const ConstraintOptions& opts = {});

// Tries d = 2, 3, ..., max_degree; throws DegreeEscalationExhausted.
DeJonquieresMap dj_solve(const ProjectivePoint& vertex, std::span<const PointMove> moves,
                         std::span<const ProjectivePoint> fixed, Sampler& sampler, unsigned max_degree = 10,
                         const ConstraintOptions& opts = {});

struct QuadroQuadric {
    std::vector<HomogeneousForm> basis;  // the linear system, in grlex pivot order
    CertifiedPair map;                   // forward tuple = basis
};

// Quadrics through p and the quadric {q_eq = 0} of the hyperplane spanned
// by `plane`; q_eq is written in the coordinates of plane's basis. Throws
// InvalidArgument (p on the hyperplane, wrong arities) or WrongSystemDimension.
QuadroQuadric quadro_quadric(const ProjectivePoint& p, const LinearSubspace& plane, const HomogeneousForm& q_eq);

// A o N o B for random automorphisms A, B and the involution
// N = [x1 x2 - x3^2 - ... - xr^2, x0 x1, ..., x0 xr]. Needs r >= 2.
CertifiedPair generic_quadro_quadric(std::size_t r, Sampler& sampler);

}  // namespace cremona

#endif
