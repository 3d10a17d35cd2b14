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

#ifndef CREMONA_MONOID_HPP
#define CREMONA_MONOID_HPP

#include "cremona/dejonquieres.hpp"
#include "cremona/projective.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

// Hypersurface F_{d-1} y0 + F_d = 0 in frame coordinates y = T^-1 x, with
// vertex T e0 of multiplicity exactly d-1. Both parts are forms in the r+1
// frame variables that do not involve y0.
class Monoid {
public:
    // Throws DegreeMismatch, ArityMismatch, InvalidArgument (y0 occurs) or
    // WrongMultiplicity (f_low = 0).
    Monoid(LinearAutomorphism frame, unsigned degree, HomogeneousForm f_low, HomogeneousForm f_high);

    std::size_t ambient_dim() const noexcept { return frame_.dim(); }
    unsigned degree() const noexcept { return degree_; }
    const LinearAutomorphism& frame() const noexcept { return frame_; }
    const HomogeneousForm& f_low() const noexcept { return f_low_; }
    const HomogeneousForm& f_high() const noexcept { return f_high_; }
    ProjectivePoint vertex() const { return frame_.apply(ProjectivePoint::coordinate(ambient_dim(), 0)); }

    HomogeneousForm frame_equation() const;
    // The equation in the original coordinates.
    HomogeneousForm equation() const;

private:
    LinearAutomorphism frame_;
    unsigned degree_;
    HomogeneousForm f_low_;
    HomogeneousForm f_high_;
};

// Splits eq by powers of y0 in the frame vertex_frame(vertex). Throws
// WrongMultiplicity unless the y0-layer is nonzero and higher layers vanish.
Monoid monoid_from_equation(const HomogeneousForm& eq, const ProjectivePoint& vertex);

// proj: P^r -> P^(r-1), the projection from the vertex, (y1, ..., yr).
// inv:  P^(r-1) -> P^r, T [-F_d, F_{d-1} z_1, ..., F_{d-1} z_r], where
//       P^(r-1) has variables z_1..z_r stored as x0..x_{r-1}.
struct Stereographic {
    RationalMap proj;
    RationalMap inv;
};

Stereographic stereographic(const Monoid& m);

// The forms F_{d-1}, F_d shifted down one index to live on P^(r-1).
HomogeneousForm to_hyperplane(const HomogeneousForm& f);

// Data (F0, G0, F, G) = (X_low, X_high, Y_low, Y_high) of the de Jonquieres
// map [X, Y y1, ..., Y yr] in the shared frame.
MoebiusData linearization_data(const Monoid& x, const Monoid& y);

// [X', Y' y1, ..., Y' yr] o T^-1, where X', Y' are the frame equations: the
// source is in original coordinates, the target in frame coordinates. The
// stereographic image of X lands in y0 = 0. Requires equal frames and
// deg y = deg x - 1 >= 1; throws DimensionMismatch or DegreeMismatch.
RationalMap monoid_linearize(const Monoid& x, const Monoid& y);

// monoid_linearize with the inverse T o N^-1 and its certificate.
CertifiedPair monoid_linearize_certified(const Monoid& x, const Monoid& y);

// F_d + y_{r-1} G_{d-1} + y_r F_{d-1} + y_r y_{r-1} F_{d-2} in frame
// coordinates; the vertices are T e_r (projected first) and T e_{r-1}.
// The parts live in the r+1 frame variables and avoid y_{r-1}, y_r.
struct BiVertexParts {
    HomogeneousForm Fd;
    HomogeneousForm Gd1;
    HomogeneousForm Fd1;
    HomogeneousForm Fd2;
};

class BiVertexMonoid {
public:
    // Degrees (d, d-1, d-1, d-2), zeros allowed at any nominal degree, Fd2
    // zero when d = 1. Needs r >= 2. Throws DegreeMismatch, ArityMismatch,
    // InvalidArgument or ZeroInput (equation identically zero).
    BiVertexMonoid(LinearAutomorphism frame, unsigned degree, BiVertexParts parts);

    std::size_t ambient_dim() const noexcept { return frame_.dim(); }
    unsigned degree() const noexcept { return degree_; }
    const LinearAutomorphism& frame() const noexcept { return frame_; }
    const BiVertexParts& parts() const noexcept { return parts_; }
    ProjectivePoint first_vertex() const { return frame_.apply(ProjectivePoint::coordinate(ambient_dim(), ambient_dim())); }
    ProjectivePoint second_vertex() const {
        return frame_.apply(ProjectivePoint::coordinate(ambient_dim(), ambient_dim() - 1));
    }

    HomogeneousForm frame_equation() const;
    HomogeneousForm equation() const;

private:
    LinearAutomorphism frame_;
    unsigned degree_;
    BiVertexParts parts_;
};

// Reads the parts off eq(T y). Throws WrongMultiplicity if eq has degree > 1
// in y_{r-1} or in y_r.
BiVertexMonoid bivertex_from_equation(const HomogeneousForm& eq, const LinearAutomorphism& frame);

// In frame coordinates, from (y0..y_{r-1}) to (y0..y_{r-2}, y_r):
// [(F_{d-2} y_{r-1} + F_{d-1}) y_0, ..., (...) y_{r-2}, -F_d - y_{r-1} G_{d-1}].
// Throws DegenerateDenominator when the multiplier vanishes identically.
RationalMap double_projection(const BiVertexMonoid& w);

// The same construction with the vertices swapped:
// [(F_{d-2} z + G_{d-1}) z_0, ..., -F_d - z F_{d-1}], z = last variable.
RationalMap double_projection_inverse(const BiVertexMonoid& w);

CertifiedPair double_projection_certified(const BiVertexMonoid& w);

}  // namespace cremona

#endif
