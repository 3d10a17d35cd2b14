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

#include "cremona/monoid.hpp"

#include <map>
#include <utility>

#include "cremona/error.hpp"

namespace cremona {

namespace {

HomogeneousForm checked(const HomogeneousForm& f, std::size_t nvars, int degree, std::initializer_list<std::size_t> absent,
                        const char* name) {
    if (f.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, std::string(name) + " has the wrong variable count");
    for (auto v : absent) {
        if (f.polynomial().degree_in(v) != 0) {
            throw Error(ErrorCode::InvalidArgument, std::string(name) + " involves x" + std::to_string(v));
        }
    }
    if (f.is_zero()) return f.with_degree(degree < 0 ? 0 : static_cast<unsigned>(degree));
    if (static_cast<int>(f.degree()) != degree) {
        throw Error(ErrorCode::DegreeMismatch, std::string(name) + " should have degree " + std::to_string(degree));
    }
    return f;
}

HomogeneousForm var(std::size_t n, std::size_t i) { return HomogeneousForm::variable(n, i); }

// Drops the last variable of a form that does not involve it.
HomogeneousForm drop_last(const HomogeneousForm& f) {
    const std::size_t n = f.nvars();
    std::vector<std::size_t> target(n);
    for (std::size_t i = 0; i + 1 < n; ++i) target[i] = i;
    target[n - 1] = kDropVariable;
    return reindex(f, n - 1, target);
}

}  // namespace

Monoid::Monoid(LinearAutomorphism frame, unsigned degree, HomogeneousForm f_low, HomogeneousForm f_high)
    : frame_(std::move(frame)), degree_(degree), f_low_(std::move(f_low)), f_high_(std::move(f_high)) {
    if (degree_ == 0) throw Error(ErrorCode::InvalidArgument, "monoids have degree >= 1");
    const std::size_t n = frame_.dim() + 1;
    f_low_ = checked(f_low_, n, static_cast<int>(degree_) - 1, {0}, "f_low");
    f_high_ = checked(f_high_, n, static_cast<int>(degree_), {0}, "f_high");
    if (f_low_.is_zero()) throw Error(ErrorCode::WrongMultiplicity, "vertex multiplicity exceeds d-1 (f_low = 0)");
}

HomogeneousForm Monoid::frame_equation() const {
    return f_low_ * var(f_low_.nvars(), 0) + f_high_;
}

HomogeneousForm Monoid::equation() const {
    return substitute(frame_equation(), frame_.inverse().as_tuple());
}

Monoid monoid_from_equation(const HomogeneousForm& eq, const ProjectivePoint& vertex) {
    if (eq.is_zero()) throw Error(ErrorCode::ZeroInput, "zero monoid equation");
    if (eq.nvars() != vertex.dim() + 1) throw Error(ErrorCode::DimensionMismatch, "vertex outside the ambient space");
    const std::size_t n = eq.nvars();
    const unsigned d = eq.degree();
    if (d == 0) throw Error(ErrorCode::WrongMultiplicity, "constant equation");
    const LinearAutomorphism frame = vertex_frame(vertex);
    const HomogeneousForm in_frame = substitute(eq, frame.as_tuple());
    HomogeneousForm low(n, d - 1), high(n, d);
    for (const auto& [e, c] : in_frame.terms()) {
        Exponents rest = e;
        rest[0] = 0;
        if (e[0] == 0) {
            high += HomogeneousForm::monomial(rest, c);
        } else if (e[0] == 1) {
            low += HomogeneousForm::monomial(rest, c);
        } else {
            throw Error(ErrorCode::WrongMultiplicity, "vertex multiplicity is below d-1");
        }
    }
    if (low.is_zero()) throw Error(ErrorCode::WrongMultiplicity, "vertex multiplicity is at least d");
    return Monoid(frame, d, std::move(low), std::move(high));
}

HomogeneousForm to_hyperplane(const HomogeneousForm& f) {
    const std::size_t n = f.nvars();
    std::vector<std::size_t> target(n);
    target[0] = kDropVariable;
    for (std::size_t i = 1; i < n; ++i) target[i] = i - 1;
    return reindex(f, n - 1, target);
}

Stereographic stereographic(const Monoid& m) {
    const std::size_t r = m.ambient_dim();
    const Matrix to_frame = m.frame().inverse().matrix();
    std::vector<Vector> rows;
    for (std::size_t i = 1; i <= r; ++i) rows.push_back(to_frame.row(i));
    RationalMap proj(linear_tuple(rows));

    const HomogeneousForm low = to_hyperplane(m.f_low());
    const HomogeneousForm high = to_hyperplane(m.f_high());
    std::vector<HomogeneousForm> y{-high};
    for (std::size_t i = 0; i < r; ++i) y.push_back(low * var(r, i));
    RationalMap inv = map_compose(RationalMap::linear(m.frame()), RationalMap(FormTuple(std::move(y))));
    return Stereographic{std::move(proj), std::move(inv)};
}

namespace {

void check_pair(const Monoid& x, const Monoid& y) {
    if (x.ambient_dim() != y.ambient_dim() || !(x.frame().matrix() == y.frame().matrix())) {
        throw Error(ErrorCode::DimensionMismatch, "linearization needs monoids with one shared frame");
    }
    if (x.degree() < 2 || y.degree() + 1 != x.degree()) {
        throw Error(ErrorCode::DegreeMismatch, "linearization needs deg Y = deg X - 1 >= 1");
    }
}

}  // namespace

MoebiusData linearization_data(const Monoid& x, const Monoid& y) {
    check_pair(x, y);
    return MoebiusData{x.f_low(), x.f_high(), y.f_low(), y.f_high()};
}

RationalMap monoid_linearize(const Monoid& x, const Monoid& y) {
    const RationalMap normal = dj_normal_form(x.ambient_dim(), linearization_data(x, y));
    return map_compose(normal, RationalMap::linear(x.frame().inverse()));
}

CertifiedPair monoid_linearize_certified(const Monoid& x, const Monoid& y) {
    const MoebiusData d = linearization_data(x, y);
    const RationalMap back = dj_normal_form(x.ambient_dim(), MoebiusData{d.G, -d.G0, -d.F, d.F0});
    return certify(monoid_linearize(x, y), map_compose(RationalMap::linear(x.frame()), back));
}

BiVertexMonoid::BiVertexMonoid(LinearAutomorphism frame, unsigned degree, BiVertexParts parts)
    : frame_(std::move(frame)), degree_(degree), parts_(parts) {
    const std::size_t r = frame_.dim();
    if (r < 2) throw Error(ErrorCode::InvalidArgument, "bi-vertex monoids need r >= 2");
    if (degree_ == 0) throw Error(ErrorCode::InvalidArgument, "bi-vertex monoids have degree >= 1");
    const std::size_t n = r + 1;
    const int d = static_cast<int>(degree_);
    parts_.Fd = checked(parts.Fd, n, d, {r - 1, r}, "F_d");
    parts_.Gd1 = checked(parts.Gd1, n, d - 1, {r - 1, r}, "G_{d-1}");
    parts_.Fd1 = checked(parts.Fd1, n, d - 1, {r - 1, r}, "F_{d-1}");
    parts_.Fd2 = checked(parts.Fd2, n, d - 2, {r - 1, r}, "F_{d-2}");
    if (d == 1 && !parts_.Fd2.is_zero()) throw Error(ErrorCode::DegreeMismatch, "F_{d-2} must vanish in degree 1");
    if (frame_equation().is_zero()) throw Error(ErrorCode::ZeroInput, "bi-vertex equation vanishes identically");
}

HomogeneousForm BiVertexMonoid::frame_equation() const {
    const std::size_t r = ambient_dim();
    const std::size_t n = r + 1;
    return parts_.Fd + var(n, r - 1) * parts_.Gd1 + var(n, r) * parts_.Fd1 + var(n, r) * var(n, r - 1) * parts_.Fd2;
}

HomogeneousForm BiVertexMonoid::equation() const {
    return substitute(frame_equation(), frame_.inverse().as_tuple());
}

BiVertexMonoid bivertex_from_equation(const HomogeneousForm& eq, const LinearAutomorphism& frame) {
    if (eq.is_zero()) throw Error(ErrorCode::ZeroInput, "zero bi-vertex equation");
    const std::size_t r = frame.dim();
    const std::size_t n = r + 1;
    if (eq.nvars() != n) throw Error(ErrorCode::DimensionMismatch, "frame and equation in different spaces");
    if (r < 2) throw Error(ErrorCode::InvalidArgument, "bi-vertex monoids need r >= 2");
    const unsigned d = eq.degree();
    const HomogeneousForm in_frame = substitute(eq, frame.as_tuple());
    std::map<std::pair<unsigned, unsigned>, HomogeneousForm> layers;
    for (const auto& [e, c] : in_frame.terms()) {
        const unsigned a = e[r - 1], b = e[r];
        if (a > 1 || b > 1) throw Error(ErrorCode::WrongMultiplicity, "a vertex has multiplicity below d-1");
        Exponents rest = e;
        rest[r - 1] = 0;
        rest[r] = 0;
        auto it = layers.try_emplace({a, b}, n, d - a - b).first;
        it->second += HomogeneousForm::monomial(rest, c);
    }
    auto layer = [&](unsigned a, unsigned b) {
        auto it = layers.find({a, b});
        return it == layers.end() ? HomogeneousForm(n, 0) : it->second;
    };
    return BiVertexMonoid(frame, d, BiVertexParts{layer(0, 0), layer(1, 0), layer(0, 1), layer(1, 1)});
}

namespace {

// Both maps share the shape [(A t + B) x_0, ..., (A t + B) x_{r-2}, -C - t E]
// on P^(r-1), t = last variable.
RationalMap double_projection_shape(const BiVertexMonoid& w, const HomogeneousForm& a_full,
                                    const HomogeneousForm& b_full, const HomogeneousForm& e_full) {
    const std::size_t r = w.ambient_dim();
    const HomogeneousForm a = drop_last(a_full), b = drop_last(b_full), e = drop_last(e_full);
    const HomogeneousForm c = drop_last(w.parts().Fd);
    const HomogeneousForm t = var(r, r - 1);
    const HomogeneousForm mult = a * t + b;
    if (mult.is_zero()) throw Error(ErrorCode::DegenerateDenominator, "double projection multiplier vanishes identically");
    std::vector<HomogeneousForm> forms;
    for (std::size_t i = 0; i + 1 < r; ++i) forms.push_back(mult * var(r, i));
    forms.push_back(-c - t * e);
    return RationalMap(FormTuple(std::move(forms)));
}

}  // namespace

RationalMap double_projection(const BiVertexMonoid& w) {
    const auto& p = w.parts();
    return double_projection_shape(w, p.Fd2, p.Fd1, p.Gd1);
}

RationalMap double_projection_inverse(const BiVertexMonoid& w) {
    const auto& p = w.parts();
    return double_projection_shape(w, p.Fd2, p.Gd1, p.Fd1);
}

CertifiedPair double_projection_certified(const BiVertexMonoid& w) {
    return certify(double_projection(w), double_projection_inverse(w));
}

}  // namespace cremona
