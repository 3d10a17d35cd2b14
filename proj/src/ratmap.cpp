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

#include "cremona/ratmap.hpp"

#include <map>

#include "cremona/error.hpp"

namespace cremona {

std::optional<ProjectivePoint> try_apply(const RationalMap& m, const ProjectivePoint& p) {
    if (p.dim() != m.source_dim()) throw Error(ErrorCode::DimensionMismatch, "point outside the map's source");
    return to_point(m.tuple().eval(p.coords()));
}

ProjectivePoint map_apply(const RationalMap& m, const ProjectivePoint& p) {
    auto image = try_apply(m, p);
    if (!image) throw Error(ErrorCode::IndeterminacyPoint, "every form vanishes at " + p.to_string());
    return *std::move(image);
}

FormTuple compose_tuple(const RationalMap& m, const FormTuple& param) {
    if (param.size() != m.source_dim() + 1) {
        throw Error(ErrorCode::DimensionMismatch, "tuple length does not match the map's source");
    }
    std::vector<HomogeneousForm> out = substitute_many(m.tuple(), param.forms());
    bool all_zero = true;
    for (const auto& f : out) all_zero = all_zero && f.is_zero();
    if (all_zero) throw Error(ErrorCode::ZeroComposite, "every composite form vanishes identically");
    return FormTuple(std::move(out));
}

RationalMap map_compose(const RationalMap& g, const RationalMap& f) {
    if (f.target_dim() != g.source_dim()) throw Error(ErrorCode::DimensionMismatch, "composition of incompatible maps");
    return RationalMap(compose_tuple(g, f.tuple()));
}

bool tuples_projectively_equal(const FormTuple& f, const FormTuple& g) {
    if (f.size() != g.size() || f.nvars() != g.nvars()) return false;
    const HomogeneousForm zero(f.nvars(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[i] * g[j] - f[j] * g[i] != zero) return false;
        }
    }
    return true;
}

bool maps_projectively_equal(const RationalMap& f, const RationalMap& g) {
    if (f.source_dim() != g.source_dim() || f.target_dim() != g.target_dim()) return false;
    return tuples_projectively_equal(f.tuple(), g.tuple());
}

InverseCertificate verify_inverse_pair(const RationalMap& f, const RationalMap& g) {
    if (f.source_dim() != f.target_dim() || g.source_dim() != g.target_dim() || f.source_dim() != g.source_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "inverse pairs must be self-maps of one P^r");
    }
    RationalMap composite = [&] {
        try {
            return map_compose(g, f);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ZeroComposite) throw Error(ErrorCode::NotInverse, "composite vanishes identically");
            throw;
        }
    }();
    const std::size_t n = f.source_dim() + 1;
    std::optional<HomogeneousForm> phi;
    for (std::size_t i = 0; i < n && !phi; ++i) {
        if (composite[i].is_zero()) continue;
        phi = exact_divide(composite[i], HomogeneousForm::variable(n, i));
        if (!phi) throw Error(ErrorCode::NotInverse, "composite entry " + std::to_string(i) + " is not divisible by x" +
                                                         std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (composite[i] != *phi * HomogeneousForm::variable(n, i)) {
            throw Error(ErrorCode::NotInverse, "composite entry " + std::to_string(i) + " is not phi * x" +
                                                   std::to_string(i));
        }
    }
    return InverseCertificate{*std::move(phi), f.degree(), g.degree()};
}

CertifiedPair certify(RationalMap forward, RationalMap inverse) {
    InverseCertificate cert = verify_inverse_pair(forward, inverse);
    return CertifiedPair{std::move(forward), std::move(inverse), std::move(cert)};
}

CertifiedPair compose_pairs(const CertifiedPair& outer, const CertifiedPair& inner) {
    return certify(map_compose(outer.forward, inner.forward), map_compose(inner.inverse, outer.inverse));
}

CertifiedPair linear_pair(const LinearAutomorphism& a) {
    return certify(RationalMap::linear(a), RationalMap::linear(a.inverse()));
}

bool certificate_holds(const RationalMap& f, const RationalMap& g, const InverseCertificate& cert) {
    try {
        const auto fresh = verify_inverse_pair(f, g);
        return fresh.phi == cert.phi && fresh.delta == cert.delta && fresh.delta_prime == cert.delta_prime &&
               !cert.phi.is_zero() && cert.phi.degree() + 1 == cert.delta * cert.delta_prime;
    } catch (const Error&) {
        return false;
    }
}

std::size_t image_rank(const FormTuple& tuple) {
    std::map<Exponents, std::size_t, GrlexGreater> columns;
    for (const auto& f : tuple) {
        for (const auto& [e, c] : f.terms()) columns.try_emplace(e, 0);
    }
    std::size_t k = 0;
    for (auto& [e, idx] : columns) idx = k++;
    Matrix m(tuple.size(), columns.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (const auto& [e, c] : tuple[i].terms()) m(i, columns.at(e)) = c;
    }
    return rank(m);
}

FormTuple remove_common_factor(const FormTuple& t) {
    HomogeneousForm g(t.nvars(), 0);
    for (const auto& f : t) {
        if (!f.is_zero()) g = gcd(g, f);
    }
    if (g.degree() == 0) return t;
    std::vector<HomogeneousForm> out;
    for (const auto& f : t) out.push_back(*exact_divide(f, g));
    return FormTuple(std::move(out));
}

RationalMap remove_common_factor(const RationalMap& m) {
    return RationalMap(remove_common_factor(m.tuple()));
}

void ParamScheme::validate() const {
    for (const auto& c : components) {
        if (c.param.size() != ambient_dim + 1) {
            throw Error(ErrorCode::DimensionMismatch, "component tuple length differs from ambient dimension + 1");
        }
    }
}

}  // namespace cremona
