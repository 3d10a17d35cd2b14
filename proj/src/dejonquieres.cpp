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

#include "cremona/dejonquieres.hpp"

#include <numeric>

#include "cremona/error.hpp"

namespace cremona {

namespace {

HomogeneousForm checked_part(const HomogeneousForm& f, std::size_t nvars, int degree, const char* name) {
    if (f.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, std::string(name) + " has the wrong variable count");
    if (f.polynomial().degree_in(0) != 0) throw Error(ErrorCode::InvalidArgument, std::string(name) + " involves x0");
    if (f.is_zero()) return f.with_degree(degree < 0 ? 0 : static_cast<unsigned>(degree));
    if (static_cast<int>(f.degree()) != degree) {
        throw Error(ErrorCode::DegreeMismatch, std::string(name) + " should have degree " + std::to_string(degree));
    }
    return f;
}

HomogeneousForm x0_times(const HomogeneousForm& f) { return HomogeneousForm::variable(f.nvars(), 0) * f; }

std::vector<std::size_t> tail_variables(std::size_t r) {
    std::vector<std::size_t> v(r);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return v;
}

Rational monomial_value(const Exponents& e, const Vector& pt) {
    Rational v = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) v *= pt[i];
    }
    return v;
}

}  // namespace

DeJonquieresMap::DeJonquieresMap(LinearAutomorphism frame, unsigned degree, MoebiusData data)
    : frame_(std::move(frame)), degree_(degree), data_(data) {
    if (degree_ == 0) throw Error(ErrorCode::InvalidArgument, "de Jonquieres maps have degree >= 1");
    const std::size_t n = frame_.dim() + 1;
    const int d = static_cast<int>(degree_);
    data_.F0 = checked_part(data.F0, n, d - 1, "F0");
    data_.G0 = checked_part(data.G0, n, d, "G0");
    data_.F = checked_part(data.F, n, d - 2, "F");
    data_.G = checked_part(data.G, n, d - 1, "G");
    if (d == 1 && !data_.F.is_zero()) throw Error(ErrorCode::DegreeMismatch, "F must vanish in degree 1");
    if (determinant().is_zero()) throw Error(ErrorCode::ZeroDeterminant, "F0 G - F G0 vanishes identically");
}

HomogeneousForm DeJonquieresMap::determinant() const {
    return data_.F0 * data_.G - data_.F * data_.G0;
}

RationalMap dj_normal_form(std::size_t r, const MoebiusData& data) {
    const std::size_t n = r + 1;
    const HomogeneousForm head = x0_times(data.F0) + data.G0;
    const HomogeneousForm denom = x0_times(data.F) + data.G;
    std::vector<HomogeneousForm> forms{head};
    for (std::size_t i = 1; i < n; ++i) forms.push_back(HomogeneousForm::variable(n, i) * denom);
    return RationalMap(FormTuple(std::move(forms)));
}

RationalMap dj_forward(const DeJonquieresMap& m) {
    const RationalMap n = dj_normal_form(m.ambient_dim(), m.data());
    const RationalMap to_frame = RationalMap::linear(m.frame().inverse());
    return map_compose(RationalMap::linear(m.frame()), map_compose(n, to_frame));
}

DeJonquieresMap dj_inverse(const DeJonquieresMap& m) {
    const auto& d = m.data();
    return DeJonquieresMap(m.frame(), m.degree(), MoebiusData{d.G, -d.G0, -d.F, d.F0});
}

CertifiedPair dj_certified(const DeJonquieresMap& m) {
    return certify(dj_forward(m), dj_forward(dj_inverse(m)));
}

namespace {

struct FramedMove {
    Vector a;  // source in frame coordinates
    Vector b;  // target in frame coordinates, tail rescaled to a's tail
};

bool tail_is_zero(const Vector& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] != 0) return false;
    }
    return true;
}

FramedMove frame_move(const LinearAutomorphism& to_frame, const ProjectivePoint& p, const ProjectivePoint& q) {
    FramedMove out{to_frame.matrix().apply(p.coords()), to_frame.matrix().apply(q.coords())};
    std::size_t k = 1;
    while (out.a[k] == 0) ++k;
    const Rational scale = out.a[k] / out.b[k];
    for (auto& x : out.b) x *= scale;
    for (std::size_t i = 1; i < out.a.size(); ++i) {
        if (out.a[i] != out.b[i]) throw Error(ErrorCode::InvalidArgument, "move is not along a line through the vertex");
    }
    return out;
}

bool round_trips(const CertifiedPair& pair, const ProjectivePoint& p, const ProjectivePoint& q) {
    const auto image = try_apply(pair.forward, p);
    if (!image || *image != q) return false;
    const auto back = try_apply(pair.inverse, q);
    return back && *back == p;
}

}  // namespace

DeJonquieresMap dj_from_constraints(const ProjectivePoint& vertex, std::span<const PointMove> moves,
                                    std::span<const ProjectivePoint> fixed, unsigned d, Sampler& sampler,
                                    const ConstraintOptions& opts) {
    const std::size_t r = vertex.dim();
    const std::size_t n = r + 1;
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "de Jonquieres maps need r >= 1");
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");

    const LinearAutomorphism frame = vertex_frame(vertex);
    const LinearAutomorphism to_frame = frame.inverse();

    std::vector<FramedMove> constraints;
    std::vector<PointMove> checks;
    for (const auto& mv : moves) {
        if (mv.from.dim() != r || mv.to.dim() != r) throw Error(ErrorCode::DimensionMismatch, "move outside P^r");
        if (mv.from == vertex || mv.to == vertex) throw Error(ErrorCode::InvalidArgument, "move touches the vertex");
        constraints.push_back(frame_move(to_frame, mv.from, mv.to));
        checks.push_back(mv);
    }
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (fixed[i].dim() != r) throw Error(ErrorCode::DimensionMismatch, "fixed point outside P^r");
        if (fixed[i] == vertex) throw Error(ErrorCode::InvalidArgument, "fixed point equals the vertex");
        for (std::size_t j = 0; j < i; ++j) {
            if (fixed[i] == fixed[j] || are_aligned(vertex, fixed[i], fixed[j])) {
                throw Error(ErrorCode::InvalidArgument, "two fixed points on one line through the vertex");
            }
        }
        constraints.push_back(frame_move(to_frame, fixed[i], fixed[i]));
        checks.push_back(PointMove{fixed[i], fixed[i]});
    }
    for (const auto& c : constraints) {
        if (tail_is_zero(c.a)) throw Error(ErrorCode::InvalidArgument, "constraint point equals the vertex");
    }

    // Unknowns: coefficients of F0, G0, F, G over monomials in x1..xr.
    const auto tail = tail_variables(r);
    const std::vector<Exponents> m_f0 = monomial_basis(n, tail, d - 1);
    const std::vector<Exponents> m_g0 = monomial_basis(n, tail, d);
    const std::vector<Exponents> m_f = d >= 2 ? monomial_basis(n, tail, d - 2) : std::vector<Exponents>{};
    const std::vector<Exponents> m_g = monomial_basis(n, tail, d - 1);
    const std::size_t cols = m_f0.size() + m_g0.size() + m_f.size() + m_g.size();

    // a0 F0(a) + G0(a) - b0 (a0 F(a) + G(a)) = 0.
    Matrix system(constraints.size(), cols);
    for (std::size_t row = 0; row < constraints.size(); ++row) {
        const Vector& a = constraints[row].a;
        const Rational& b0 = constraints[row].b[0];
        std::size_t col = 0;
        for (const auto& e : m_f0) system(row, col++) = a[0] * monomial_value(e, a);
        for (const auto& e : m_g0) system(row, col++) = monomial_value(e, a);
        for (const auto& e : m_f) system(row, col++) = -b0 * a[0] * monomial_value(e, a);
        for (const auto& e : m_g) system(row, col++) = -b0 * monomial_value(e, a);
    }
    const std::vector<Vector> basis = constraints.empty() ? [&] {
        std::vector<Vector> all;
        for (std::size_t j = 0; j < cols; ++j) {
            Vector v(cols);
            v[j] = 1;
            all.push_back(std::move(v));
        }
        return all;
    }()
                                                         : nullspace(system);
    if (basis.empty()) throw Error(ErrorCode::NoSolutionAtDegree, "no de Jonquieres map of degree " + std::to_string(d));

    auto assemble = [&](const Vector& v) {
        std::size_t col = 0;
        auto block = [&](const std::vector<Exponents>& monos, unsigned deg) {
            HomogeneousForm f(n, deg);
            for (const auto& e : monos) {
                if (v[col] != 0) f += HomogeneousForm::monomial(e, v[col]);
                ++col;
            }
            return f;
        };
        MoebiusData out{block(m_f0, d - 1), block(m_g0, d), HomogeneousForm(n, 0), HomogeneousForm(n, 0)};
        out.F = block(m_f, d >= 2 ? d - 2 : 0);
        out.G = block(m_g, d - 1);
        return out;
    };

    for (unsigned attempt = 0; attempt < opts.resamples; ++attempt) {
        Vector v(cols);
        for (const auto& b : basis) {
            const Rational c = sampler.next_int(opts.box);
            if (c == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) v[j] += c * b[j];
        }
        MoebiusData data = assemble(v);
        bool denominators_ok = true;
        for (const auto& c : constraints) {
            const Rational denom = c.a[0] * data.F.eval(c.a) + data.G.eval(c.a);
            if (denom == 0) denominators_ok = false;
        }
        if (!denominators_ok) continue;
        try {
            DeJonquieresMap candidate(frame, d, std::move(data));
            const CertifiedPair pair = dj_certified(candidate);
            bool ok = true;
            for (const auto& c : checks) ok = ok && round_trips(pair, c.from, c.to);
            if (ok) return candidate;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ZeroDeterminant && e.code() != ErrorCode::NotInverse) throw;
        }
    }
    throw Error(ErrorCode::GenericityExhausted,
                "no generic member among " + std::to_string(opts.resamples) + " samples at degree " + std::to_string(d));
}

DeJonquieresMap dj_solve(const ProjectivePoint& vertex, std::span<const PointMove> moves,
                         std::span<const ProjectivePoint> fixed, Sampler& sampler, unsigned max_degree,
                         const ConstraintOptions& opts) {
    for (unsigned d = 2; d <= max_degree; ++d) {
        try {
            return dj_from_constraints(vertex, moves, fixed, d, sampler, opts);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoSolutionAtDegree && e.code() != ErrorCode::GenericityExhausted) throw;
        }
    }
    throw Error(ErrorCode::DegreeEscalationExhausted,
                "no de Jonquieres map up to degree " + std::to_string(max_degree));
}

namespace {

// [q(x1..xr), x0 x1, ..., x0 xr]; an involution with Phi = x0 q.
RationalMap quadric_normal_form(const HomogeneousForm& q_tail) {
    const std::size_t n = q_tail.nvars();
    std::vector<HomogeneousForm> forms{q_tail};
    for (std::size_t i = 1; i < n; ++i) {
        forms.push_back(HomogeneousForm::variable(n, 0) * HomogeneousForm::variable(n, i));
    }
    return RationalMap(FormTuple(std::move(forms)));
}

}  // namespace

QuadroQuadric quadro_quadric(const ProjectivePoint& p, const LinearSubspace& plane, const HomogeneousForm& q_eq) {
    const std::size_t r = p.dim();
    const std::size_t n = r + 1;
    if (plane.ambient_dim() != r || plane.dim() != static_cast<int>(r) - 1) {
        throw Error(ErrorCode::InvalidArgument, "plane must be a hyperplane of P^r");
    }
    if (q_eq.nvars() != r || q_eq.degree() != 2 || q_eq.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "q_eq must be a nonzero quadric in the plane coordinates");
    }
    if (plane.contains(p)) throw Error(ErrorCode::InvalidArgument, "p lies on the hyperplane of Q");

    // Unknowns: coefficients of the quadric E, then c; conditions
    // E(B s) - c q_eq(s) = 0 coefficient-wise and E(p) = 0.
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const std::vector<Exponents> monos = monomial_basis(n, all, 2);
    std::vector<HomogeneousForm> embed;  // x_i as a linear form in s
    for (std::size_t i = 0; i < n; ++i) {
        HomogeneousForm f(r, 1);
        for (std::size_t j = 0; j < r; ++j) {
            const Rational& c = plane.basis()[j][i];
            if (c != 0) f += c * HomogeneousForm::variable(r, j);
        }
        embed.push_back(std::move(f));
    }
    std::vector<std::size_t> plane_vars(r);
    std::iota(plane_vars.begin(), plane_vars.end(), std::size_t{0});
    const std::vector<Exponents> s_monos = monomial_basis(r, plane_vars, 2);

    Matrix system(s_monos.size() + 1, monos.size() + 1);
    for (std::size_t col = 0; col < monos.size(); ++col) {
        const HomogeneousForm pulled = substitute(HomogeneousForm::monomial(monos[col]), embed);
        for (std::size_t row = 0; row < s_monos.size(); ++row) system(row, col) = pulled.coefficient(s_monos[row]);
        system(s_monos.size(), col) = monomial_value(monos[col], p.coords());
    }
    for (std::size_t row = 0; row < s_monos.size(); ++row) system(row, monos.size()) = -q_eq.coefficient(s_monos[row]);

    const std::vector<Vector> sols = nullspace(system);
    if (sols.size() != n) {
        throw Error(ErrorCode::WrongSystemDimension,
                    "quadrics through p and Q form a system of projective dimension " +
                        std::to_string(static_cast<long>(sols.size()) - 1));
    }
    std::vector<HomogeneousForm> basis;
    for (const auto& v : sols) {
        HomogeneousForm f(n, 2);
        for (std::size_t col = 0; col < monos.size(); ++col) {
            if (v[col] != 0) f += HomogeneousForm::monomial(monos[col], v[col]);
        }
        basis.push_back(std::move(f));
    }
    const RationalMap forward{FormTuple(basis)};

    // Frame e0 -> p, e_i -> plane basis. In frame coordinates the system is
    // spanned by N = [q_eq, y0 y1, ..., y0 yr], so forward = C o N o T^-1.
    std::vector<Vector> cols{p.coords()};
    for (const auto& b : plane.basis()) cols.push_back(b.coords());
    const LinearAutomorphism frame(Matrix::from_columns(cols));
    std::vector<std::size_t> shift(r);
    std::iota(shift.begin(), shift.end(), std::size_t{1});
    const RationalMap normal = quadric_normal_form(reindex(q_eq, n, shift));

    Matrix c(n, n);
    const FormTuple frame_tuple = frame.as_tuple();
    for (std::size_t k = 0; k < n; ++k) {
        const HomogeneousForm in_frame = substitute(basis[k], frame_tuple);
        c(k, 0) = sols[k][monos.size()];
        for (std::size_t l = 1; l < n; ++l) {
            Exponents e(n, 0);
            e[0] = 1;
            e[l] = 1;
            c(k, l) = in_frame.coefficient(e);
        }
    }
    const LinearAutomorphism change(c);
    const RationalMap inverse =
        map_compose(RationalMap::linear(frame), map_compose(normal, RationalMap::linear(change.inverse())));
    return QuadroQuadric{std::move(basis), certify(forward, inverse)};
}

CertifiedPair generic_quadro_quadric(std::size_t r, Sampler& sampler) {
    if (r < 2) throw Error(ErrorCode::InvalidArgument, "quadro-quadric maps need r >= 2");
    const std::size_t n = r + 1;
    HomogeneousForm q = HomogeneousForm::variable(n, 1) * HomogeneousForm::variable(n, 2);
    for (std::size_t i = 3; i < n; ++i) q -= HomogeneousForm::variable(n, i) * HomogeneousForm::variable(n, i);
    const RationalMap normal = quadric_normal_form(q);
    const CertifiedPair middle = certify(normal, normal);
    const auto a = sample_automorphism(sampler, r);
    const auto b = sample_automorphism(sampler, r);
    return compose_pairs(linear_pair(a), compose_pairs(middle, linear_pair(b)));
}

}  // namespace cremona
