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

#ifndef CREMONA_RATMAP_HPP
#define CREMONA_RATMAP_HPP

#include <optional>
#include <vector>

#include "cremona/form.hpp"
#include "cremona/projective.hpp"

namespace cremona {

// A rational map P^s -> P^t given by t+1 forms of one degree in s+1
// variables. Common factors among the forms are allowed and never removed
// implicitly.
class RationalMap {
public:
    explicit RationalMap(FormTuple tuple) : tuple_(std::move(tuple)) {}

    static RationalMap identity(std::size_t dim) { return RationalMap(identity_tuple(dim + 1)); }
    static RationalMap linear(const LinearAutomorphism& a) { return RationalMap(a.as_tuple()); }

    std::size_t source_dim() const noexcept { return tuple_.nvars() - 1; }
    std::size_t target_dim() const noexcept { return tuple_.size() - 1; }
    unsigned degree() const noexcept { return tuple_.degree(); }
    const FormTuple& tuple() const noexcept { return tuple_; }
    const HomogeneousForm& operator[](std::size_t i) const { return tuple_[i]; }

    friend bool operator==(const RationalMap& a, const RationalMap& b) noexcept { return a.tuple_ == b.tuple_; }

private:
    FormTuple tuple_;
};

// Image of p; nullopt when every form vanishes at p.
std::optional<ProjectivePoint> try_apply(const RationalMap& m, const ProjectivePoint& p);

// Throws IndeterminacyPoint when every form vanishes at p.
ProjectivePoint map_apply(const RationalMap& m, const ProjectivePoint& p);

// g o f, by substituting f's tuple into each form of g. No cancellation.
// Throws DimensionMismatch, or ZeroComposite if every composite form is 0.
RationalMap map_compose(const RationalMap& g, const RationalMap& f);

// Substitution of a parametrization (any tuple over the parameters) into m.
FormTuple compose_tuple(const RationalMap& m, const FormTuple& param);

// f_i g_j - f_j g_i = 0 for all i < j.
bool maps_projectively_equal(const RationalMap& f, const RationalMap& g);
bool tuples_projectively_equal(const FormTuple& f, const FormTuple& g);

// Witness that (g o f)_i = phi * x_i for every i.
struct InverseCertificate {
    HomogeneousForm phi;
    unsigned delta = 0;        // degree of f
    unsigned delta_prime = 0;  // degree of g
};

// Throws NotInverse unless g o f is a nonzero form multiple of the identity.
InverseCertificate verify_inverse_pair(const RationalMap& f, const RationalMap& g);

// A map, an inverse, and the certificate tying them together.
struct CertifiedPair {
    RationalMap forward;
    RationalMap inverse;
    InverseCertificate certificate;
};

// Runs verify_inverse_pair(forward, inverse); throws NotInverse on failure.
CertifiedPair certify(RationalMap forward, RationalMap inverse);

// outer o inner, with inverse inner^-1 o outer^-1, re-certified.
CertifiedPair compose_pairs(const CertifiedPair& outer, const CertifiedPair& inner);

// The pair (A, A^-1) for a linear automorphism.
CertifiedPair linear_pair(const LinearAutomorphism& a);

// Recomputes the composite and compares it against the stored certificate.
bool certificate_holds(const RationalMap& f, const RationalMap& g, const InverseCertificate& cert);

// Rank of the coefficient matrix (rows = entries, columns = monomials).
// Rank 1 means the tuple parametrizes a single point.
std::size_t image_rank(const FormTuple& tuple);

// Divides the tuple by the gcd of its nonzero forms.
RationalMap remove_common_factor(const RationalMap& m);
FormTuple remove_common_factor(const FormTuple& t);

// One parametrized component: r+1 forms in `arity` parameter variables.
struct SchemeComponent {
    FormTuple param;
    std::size_t arity() const noexcept { return param.nvars(); }
    unsigned degree() const noexcept { return param.degree(); }
};

// A reduced scheme of P^r given by parametrizations of its components.
struct ParamScheme {
    std::size_t ambient_dim = 0;
    std::vector<SchemeComponent> components;

    // Throws DimensionMismatch if some component has the wrong entry count.
    void validate() const;
};

}  // namespace cremona

#endif
