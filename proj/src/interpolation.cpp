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

#include "cremona/interpolation.hpp"

#include <map>
#include <numeric>

#include "cremona/error.hpp"

namespace cremona {

std::size_t MonoidSystem::unknowns() const {
    std::size_t n = 0;
    for (const auto& b : layout) n += b.monomials.size();
    return n;
}

namespace {

Exponents unit(std::size_t n, std::initializer_list<std::size_t> vars) {
    Exponents e(n, 0);
    for (auto v : vars) ++e[v];
    return e;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v;
    for (std::size_t i = from; i < to; ++i) v.push_back(i);
    return v;
}

MonomialBlock block(std::string name, std::size_t n, std::span<const std::size_t> vars, int degree, Exponents mult) {
    MonomialBlock b{std::move(name), degree < 0 ? 0u : static_cast<unsigned>(degree), std::move(mult), {}};
    if (degree >= 0) b.monomials = monomial_basis(n, vars, static_cast<unsigned>(degree));
    return b;
}

std::vector<MonomialBlock> monoid_layout(std::size_t r, unsigned d) {
    const std::size_t n = r + 1;
    const auto tail = range(1, n);
    return {block("F_{d-1}", n, tail, static_cast<int>(d) - 1, unit(n, {0})),
            block("F_d", n, tail, static_cast<int>(d), unit(n, {}))};
}

std::vector<MonomialBlock> bivertex_layout(std::size_t r, unsigned d) {
    const std::size_t n = r + 1;
    const auto base = range(0, r - 1);
    const int di = static_cast<int>(d);
    return {block("F_d", n, base, di, unit(n, {})), block("G_{d-1}", n, base, di - 1, unit(n, {r - 1})),
            block("F_{d-1}", n, base, di - 1, unit(n, {r})), block("F_{d-2}", n, base, di - 2, unit(n, {r - 1, r}))};
}

// Coefficient-wise containment conditions, then the nullspace.
std::vector<Vector> solve_containment(const ParamScheme& z, const LinearAutomorphism& frame,
                                      const std::vector<MonomialBlock>& layout) {
    const std::size_t n = frame.dim() + 1;
    std::vector<HomogeneousForm> unknowns;
    for (const auto& b : layout) {
        for (const auto& e : b.monomials) {
            Exponents full = e;
            for (std::size_t i = 0; i < n; ++i) full[i] += b.multiplier[i];
            unknowns.push_back(HomogeneousForm::monomial(full));
        }
    }
    const std::size_t cols = unknowns.size();
    if (cols == 0) return {};
    const FormTuple unknown_tuple(unknowns);
    const FormTuple to_frame = frame.inverse().as_tuple();

    std::vector<Vector> rows;
    for (const auto& comp : z.components) {
        const auto framed = substitute_many(to_frame, comp.param.forms());
        const auto pulled = substitute_many(unknown_tuple, framed);
        std::map<Exponents, std::size_t, GrlexGreater> row_of;
        const std::size_t first = rows.size();
        for (std::size_t j = 0; j < cols; ++j) {
            for (const auto& [e, c] : pulled[j].terms()) {
                auto [it, fresh] = row_of.try_emplace(e, first + row_of.size());
                if (fresh) rows.emplace_back(cols);
                rows[it->second][j] = c;
            }
        }
    }
    if (rows.empty()) {
        std::vector<Vector> all;
        for (std::size_t j = 0; j < cols; ++j) {
            Vector v(cols);
            v[j] = 1;
            all.push_back(std::move(v));
        }
        return all;
    }
    return nullspace(Matrix::from_rows(rows));
}

void check_vertex_off(const ProjectivePoint& v, const ParamScheme& z) {
    Sampler probe(0x5eed);
    for (std::size_t i = 0; i < z.components.size(); ++i) {
        if (point_on_component(v, z.components[i], probe)) {
            throw Error(ErrorCode::VertexOnScheme, "vertex " + v.to_string() + " lies on component " + std::to_string(i));
        }
    }
}

}  // namespace

MonoidSystem monoid_system(const ParamScheme& z, const ProjectivePoint& vertex, unsigned d) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "monoid degree must be positive");
    if (z.ambient_dim != vertex.dim()) throw Error(ErrorCode::DimensionMismatch, "vertex outside the scheme's space");
    z.validate();
    check_vertex_off(vertex, z);
    MonoidSystem s;
    s.kind = SystemKind::Monoid;
    s.ambient_dim = vertex.dim();
    s.degree = d;
    s.frame = vertex_frame(vertex);
    s.layout = monoid_layout(s.ambient_dim, d);
    s.basis = solve_containment(z, s.frame, s.layout);
    return s;
}

MonoidSystem bivertex_system(const ParamScheme& z, const ProjectivePoint& first, const ProjectivePoint& second,
                             unsigned d, const std::optional<LinearAutomorphism>& frame, bool check_second) {
    const std::size_t r = first.dim();
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "monoid degree must be positive");
    if (r < 2) throw Error(ErrorCode::InvalidArgument, "bi-vertex monoids need r >= 2");
    if (second.dim() != r || z.ambient_dim != r) throw Error(ErrorCode::DimensionMismatch, "vertices outside the scheme's space");
    if (first == second) throw Error(ErrorCode::NonDistinctPoints, "bi-vertex monoid with equal vertices");
    z.validate();
    check_vertex_off(first, z);
    if (check_second) check_vertex_off(second, z);

    MonoidSystem s;
    s.kind = SystemKind::BiVertex;
    s.ambient_dim = r;
    s.degree = d;
    if (frame) {
        if (frame->dim() != r || frame->apply(ProjectivePoint::coordinate(r, r)) != first ||
            frame->apply(ProjectivePoint::coordinate(r, r - 1)) != second) {
            throw Error(ErrorCode::DegenerateFrame, "frame does not place the vertices at e_r and e_{r-1}");
        }
        s.frame = *frame;
    } else {
        std::vector<Vector> cols;
        std::vector<Vector> probe{second.coords(), first.coords()};
        for (std::size_t j = 0; j <= r && cols.size() + 2 <= r; ++j) {
            Vector e(r + 1);
            e[j] = 1;
            auto trial = probe;
            trial.push_back(e);
            if (rank(Matrix::from_rows(trial)) == trial.size()) {
                probe = trial;
                cols.push_back(e);
            }
        }
        cols.push_back(second.coords());
        cols.push_back(first.coords());
        s.frame = LinearAutomorphism(Matrix::from_columns(cols));
    }
    s.layout = bivertex_layout(r, d);
    s.basis = solve_containment(z, s.frame, s.layout);
    return s;
}

int system_dimension(const MonoidSystem& s) { return static_cast<int>(s.basis.size()) - 1; }

int full_monoid_dimension(std::size_t r, unsigned d) {
    return static_cast<int>(monoid_layout(r, d)[0].monomials.size() + monoid_layout(r, d)[1].monomials.size()) - 1;
}

namespace {

std::vector<HomogeneousForm> block_forms(const MonoidSystem& s, const Vector& coefficients) {
    if (coefficients.size() != s.unknowns()) throw Error(ErrorCode::DimensionMismatch, "coefficient vector length");
    const std::size_t n = s.ambient_dim + 1;
    std::vector<HomogeneousForm> out;
    std::size_t k = 0;
    for (const auto& b : s.layout) {
        HomogeneousForm f(n, b.degree);
        for (const auto& e : b.monomials) {
            if (coefficients[k] != 0) f += HomogeneousForm::monomial(e, coefficients[k]);
            ++k;
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

HomogeneousForm assemble_frame_equation(const MonoidSystem& s, const Vector& coefficients) {
    const auto forms = block_forms(s, coefficients);
    HomogeneousForm eq(s.ambient_dim + 1, s.degree);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].is_zero()) continue;
        eq += forms[i] * HomogeneousForm::monomial(s.layout[i].multiplier);
    }
    return eq;
}

HomogeneousForm assemble_equation(const MonoidSystem& s, const Vector& coefficients) {
    return substitute(assemble_frame_equation(s, coefficients), s.frame.inverse().as_tuple());
}

Monoid assemble_monoid(const MonoidSystem& s, const Vector& coefficients) {
    if (s.kind != SystemKind::Monoid) throw Error(ErrorCode::InvalidArgument, "not a single-vertex system");
    const auto forms = block_forms(s, coefficients);
    return Monoid(s.frame, s.degree, forms[0], forms[1]);
}

BiVertexMonoid assemble_bivertex(const MonoidSystem& s, const Vector& coefficients) {
    if (s.kind != SystemKind::BiVertex) throw Error(ErrorCode::InvalidArgument, "not a bi-vertex system");
    const auto forms = block_forms(s, coefficients);
    return BiVertexMonoid(s.frame, s.degree, BiVertexParts{forms[0], forms[1], forms[2], forms[3]});
}

bool point_on_component(const ProjectivePoint& p, const SchemeComponent& c, Sampler& sampler) {
    if (c.param.size() != p.dim() + 1) throw Error(ErrorCode::DimensionMismatch, "point and component in different spaces");
    if (c.arity() == 1) {
        const Vector one{1};
        return to_point(c.param.eval(one)) == p;
    }
    const FormTuple reduced = remove_common_factor(c.param);
    const std::vector<ProjectivePoint> single{p};
    const FormTuple eqs = linear_tuple(LinearSubspace(single).equations());
    const auto pulled = substitute_many(eqs, reduced.forms());
    HomogeneousForm g(c.arity(), 0);
    bool any = false;
    for (const auto& h : pulled) {
        if (h.is_zero()) continue;
        g = any ? gcd(g, h) : h;
        any = true;
    }
    if (!any) return true;  // the component is the point p
    if (g.degree() > 0) return true;
    if (c.arity() == 2) return false;
    for (int k = 0; k < 32; ++k) {
        const Vector u = sampler.next_vector(c.arity(), 16);
        if (to_point(c.param.eval(u)) == p) return true;
    }
    return false;
}

SchemeComponent cone_parametrization(const ProjectivePoint& vertex, const SchemeComponent& c) {
    const std::size_t k = c.arity();
    const std::size_t n = k + 2;
    const unsigned e = c.degree();
    if (vertex.dim() + 1 != c.param.size()) throw Error(ErrorCode::DimensionMismatch, "vertex and component in different spaces");
    std::vector<std::size_t> shift(k);
    std::iota(shift.begin(), shift.end(), std::size_t{2});
    const HomogeneousForm s = HomogeneousForm::variable(n, 0);
    const HomogeneousForm t = HomogeneousForm::variable(n, 1);
    const HomogeneousForm scale = s * pow(HomogeneousForm::variable(n, 2), e);
    std::vector<HomogeneousForm> forms;
    for (std::size_t i = 0; i < c.param.size(); ++i) {
        forms.push_back(vertex[i] * scale + t * reindex(c.param[i], n, shift));
    }
    return SchemeComponent{FormTuple(std::move(forms))};
}

PickedMember pick_cone_avoiding(const MonoidSystem& s, const ParamScheme& z, Sampler& sampler,
                                const AvoidOptions& opts) {
    if (s.basis.empty()) throw Error(ErrorCode::AvoidanceExhausted, "empty linear system");
    std::vector<ProjectivePoint> vertices;
    const std::size_t r = s.ambient_dim;
    if (s.kind == SystemKind::Monoid) {
        vertices.push_back(s.frame.apply(ProjectivePoint::coordinate(r, 0)));
    } else {
        vertices.push_back(s.frame.apply(ProjectivePoint::coordinate(r, r)));
        vertices.push_back(s.frame.apply(ProjectivePoint::coordinate(r, r - 1)));
    }
    std::vector<SchemeComponent> cones;
    for (const auto& v : vertices) {
        for (const auto& c : z.components) cones.push_back(cone_parametrization(v, c));
    }
    const std::size_t cols = s.unknowns();
    for (unsigned attempt = 0; attempt < opts.retries; ++attempt) {
        Vector v(cols);
        bool nonzero = false;
        for (const auto& b : s.basis) {
            const Rational c = sampler.next_int(opts.box);
            if (c == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) v[j] += c * b[j];
        }
        for (const auto& x : v) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        try {
            if (s.kind == SystemKind::Monoid) {
                (void)assemble_monoid(s, v);
            } else {
                const BiVertexMonoid w = assemble_bivertex(s, v);
                (void)double_projection(w);
                (void)double_projection_inverse(w);
                const auto& p = w.parts();
                if ((p.Fd2 * p.Fd - p.Gd1 * p.Fd1).is_zero()) continue;
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::WrongMultiplicity || e.code() == ErrorCode::DegenerateDenominator ||
                e.code() == ErrorCode::ZeroInput) {
                continue;
            }
            throw;
        }
        const HomogeneousForm eq = assemble_equation(s, v);
        bool avoids = true;
        for (const auto& cone : cones) {
            if (substitute(eq, cone.param).is_zero()) {
                avoids = false;
                break;
            }
        }
        if (avoids) return PickedMember{std::move(v), eq};
    }
    throw Error(ErrorCode::AvoidanceExhausted,
                "no member avoiding the cones after " + std::to_string(opts.retries) + " draws");
}

}  // namespace cremona
