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

#include "cremona/equivalence.hpp"

#include <algorithm>
#include <map>

#include "cremona/dejonquieres.hpp"
#include "cremona/error.hpp"
#include "cremona/interpolation.hpp"
#include "cremona/monoid.hpp"

namespace cremona {

std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Linear: return "linear";
        case StepKind::DeJonquieres: return "dejonquieres";
        case StepKind::DoubleProjection: return "double_projection";
        case StepKind::QuadroQuadric: return "quadro_quadric";
    }
    return "unknown";
}

StepKind parse_step_kind(const std::string& name) {
    for (StepKind k : {StepKind::Linear, StepKind::DeJonquieres, StepKind::DoubleProjection, StepKind::QuadroQuadric}) {
        if (step_kind_name(k) == name) return k;
    }
    throw Error(ErrorCode::Parse, "unknown step kind '" + name + "'");
}

namespace {

std::optional<ProjectivePoint> at(const FormTuple& t, const Vector& u) { return to_point(t.eval(u)); }

// Empty when the step sends from(u) to to(u), and to(u) back to from(u)
// unless the component is contracted.
std::optional<std::string> sample_trip(const CertifiedPair& m, const FormTuple& from, const FormTuple& to,
                                       const Vector& u, bool contracted) {
    const auto x = at(from, u);
    const auto y = at(to, u);
    if (!x || !y) return "stage vanishes at the sample";
    const auto fx = try_apply(m.forward, *x);
    if (!fx || !(*fx == *y)) return "forward image of " + x->to_string() + " is not " + y->to_string();
    if (contracted) return std::nullopt;
    const auto gy = try_apply(m.inverse, *y);
    if (!gy || !(*gy == *x)) return "inverse does not send " + y->to_string() + " back";
    return std::nullopt;
}

bool sends(const CertifiedPair& m, const FormTuple& from, const FormTuple& to) {
    try {
        return tuples_projectively_equal(compose_tuple(m.forward, from), to);
    } catch (const Error&) {
        return false;
    }
}

// Rows of m applied to the entries of t.
FormTuple apply_rows(const Matrix& m, const FormTuple& t) {
    std::vector<HomogeneousForm> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        HomogeneousForm f(t.nvars(), t.degree());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0) f += t[j] * m(i, j);
        }
        out.push_back(std::move(f));
    }
    return FormTuple(std::move(out));
}

ParamScheme map_scheme(const Matrix& m, const ParamScheme& z) {
    ParamScheme out{z.ambient_dim, {}};
    for (const auto& c : z.components) out.components.push_back({apply_rows(m, c.param)});
    return out;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::size_t vector_rank(const std::vector<Vector>& rows) { return rank(Matrix::from_rows(rows)); }

Vector random_nonzero(Sampler& s, std::size_t n, std::int64_t box) {
    for (;;) {
        Vector v = s.next_vector(n, box);
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) return v;
    }
}

// Parameter samples at which every listed tuple is nonzero, pairwise
// distinct as parameter points. Arity 1 gets the single sample [1].
std::vector<Vector> draw_samples(const std::vector<const FormTuple*>& tuples, unsigned n, Sampler& s) {
    const std::size_t arity = tuples.front()->nvars();
    if (arity == 1) return {Vector{Rational(1)}};
    std::vector<Vector> out;
    std::vector<ProjectivePoint> seen;
    for (unsigned tries = 0; out.size() < n; ++tries) {
        if (tries > 64 * n) throw Error(ErrorCode::RejectionExhausted, "no usable parameter samples");
        // Entries nonzero and spread out, away from coordinate parameters.
        Vector u(arity);
        for (auto& x : u) x = s.next_nonzero(64);
        ProjectivePoint pu(u);
        if (std::find(seen.begin(), seen.end(), pu) != seen.end()) continue;
        if (std::any_of(tuples.begin(), tuples.end(), [&](const FormTuple* t) { return !at(*t, u); })) continue;
        seen.push_back(pu);
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<std::vector<Vector>> draw_scheme_samples(const ParamScheme& z, unsigned n, Sampler& s) {
    std::vector<std::vector<Vector>> out;
    for (const auto& c : z.components) out.push_back(draw_samples({&c.param}, n, s));
    return out;
}

}  // namespace

std::optional<ProjectivePoint> chain_forward(const CremonaChain& c, const ProjectivePoint& p) {
    std::optional<ProjectivePoint> x = p;
    for (const auto& step : c.steps) {
        x = try_apply(step.map.forward, *x);
        if (!x) return std::nullopt;
    }
    return x;
}

std::optional<ProjectivePoint> chain_backward(const CremonaChain& c, const ProjectivePoint& p) {
    std::optional<ProjectivePoint> x = p;
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        x = try_apply(it->map.inverse, *x);
        if (!x) return std::nullopt;
    }
    return x;
}

VerifyReport verify_chain(const CremonaChain& c) {
    VerifyReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };
    const std::size_t n = c.steps.size();
    const std::size_t ncomp = c.source.components.size();
    if (c.stages.size() != n + 1) {
        fail("expected " + std::to_string(n + 1) + " stages, found " + std::to_string(c.stages.size()));
        return rep;
    }
    if (c.samples.size() != ncomp) {
        fail("sample lists do not match the component count");
        return rep;
    }
    for (std::size_t i = 0; i <= n; ++i) {
        const auto& st = c.stages[i];
        bool good = st.ambient_dim == c.ambient_dim && st.components.size() == ncomp;
        for (std::size_t j = 0; good && j < ncomp; ++j) {
            good = st.components[j].param.size() == c.ambient_dim + 1 &&
                   st.components[j].arity() == c.source.components[j].arity();
        }
        if (!good) {
            fail("stage " + std::to_string(i) + " has the wrong shape");
            return rep;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& step = c.steps[i];
        const std::string tag = "step " + std::to_string(i) + " (" + step_kind_name(step.kind) + ")";
        const auto& m = step.map;
        if (m.forward.source_dim() != c.ambient_dim || m.forward.target_dim() != c.ambient_dim ||
            m.inverse.source_dim() != c.ambient_dim || m.inverse.target_dim() != c.ambient_dim) {
            fail(tag + ": not a self-map of P^" + std::to_string(c.ambient_dim));
            continue;
        }
        if (!certificate_holds(m.forward, m.inverse, m.certificate)) fail(tag + ": certificate does not hold");
        for (std::size_t j = 0; j < ncomp; ++j) {
            const FormTuple& from = c.stages[i].components[j].param;
            const FormTuple& to = c.stages[i + 1].components[j].param;
            if (!sends(m, from, to)) fail(tag + ": component " + std::to_string(j) + " is not sent to the next stage");
            for (const auto& u : c.samples[j]) {
                if (auto why = sample_trip(m, from, to, u, contains(step.contracts, j))) {
                    fail(tag + ": component " + std::to_string(j) + ": " + *why);
                }
            }
        }
    }
    for (std::size_t j = 0; j < ncomp; ++j) {
        if (!tuples_projectively_equal(c.stages.front().components[j].param, c.source.components[j].param)) {
            fail("first stage differs from the source on component " + std::to_string(j));
        }
    }
    if (c.target) {
        if (c.target->components.size() != ncomp) {
            fail("target has the wrong component count");
        } else {
            for (std::size_t j = 0; j < ncomp; ++j) {
                if (!tuples_projectively_equal(c.stages.back().components[j].param, c.target->components[j].param)) {
                    fail("last stage differs from the target on component " + std::to_string(j));
                }
            }
        }
    }
    if (c.contracted) {
        std::vector<ProjectivePoint> pts;
        for (std::size_t j = 0; j < ncomp; ++j) {
            const FormTuple& t = c.stages.back().components[j].param;
            if (image_rank(t) != 1) {
                fail("component " + std::to_string(j) + " is not contracted to a point");
                continue;
            }
            pts.push_back(*at(t, c.samples[j].front()));
        }
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                if (pts[a] == pts[b]) fail("two components contract to the same point " + pts[a].to_string());
            }
        }
    }
    // End to end, independent of the per-step bookkeeping.
    bool contracting = false;
    for (const auto& step : c.steps) contracting = contracting || !step.contracts.empty();
    for (std::size_t j = 0; j < ncomp; ++j) {
        for (const auto& u : c.samples[j]) {
            const auto x = at(c.stages.front().components[j].param, u);
            const auto y = at(c.stages.back().components[j].param, u);
            if (!x || !y) continue;  // already reported per step
            const auto fx = chain_forward(c, *x);
            if (!fx || !(*fx == *y)) fail("chain does not send the sample of component " + std::to_string(j));
            if (contracting) continue;
            const auto gy = chain_backward(c, *y);
            if (!gy || !(*gy == *x)) fail("inverse chain does not return the sample of component " + std::to_string(j));
        }
    }
    return rep;
}

ParamScheme point_scheme(std::span<const ProjectivePoint> points) {
    if (points.empty()) throw Error(ErrorCode::ZeroInput, "no points");
    ParamScheme z{points.front().dim(), {}};
    const auto u = HomogeneousForm::variable(1, 0);
    for (const auto& p : points) {
        std::vector<HomogeneousForm> forms;
        for (const auto& c : p.coords()) forms.push_back(u * c);
        z.components.push_back({FormTuple(std::move(forms))});
    }
    return z;
}

namespace {

// Rank of {a, b, w} <= 2, coincidences included.
bool on_line(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& w) {
    return vector_rank({a.coords(), b.coords(), w.coords()}) <= 2;
}

// For every pair still to move, the line through it meets the union of both
// configurations only in the pair itself.
bool points_in_position(const std::vector<ProjectivePoint>& cur, std::span<const ProjectivePoint> dst) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i] == dst[i]) continue;
        for (std::size_t h = 0; h < cur.size(); ++h) {
            if (h == i) continue;
            if (on_line(cur[i], dst[i], cur[h]) || on_line(cur[i], dst[i], dst[h])) return false;
        }
    }
    return true;
}

bool pairwise_distinct(const std::vector<ProjectivePoint>& pts) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (pts[a] == pts[b]) return false;
        }
    }
    return true;
}

class ChainBuilder {
public:
    explicit ChainBuilder(CremonaChain& c) : c_(c) {}

    void push(StepKind kind, CertifiedPair map, ParamScheme next, std::vector<std::size_t> contracts = {}) {
        c_.steps.push_back({kind, std::move(map), std::move(contracts)});
        c_.stages.push_back(std::move(next));
    }

    const ParamScheme& current() const { return c_.stages.back(); }

private:
    CremonaChain& c_;
};

}  // namespace

CremonaChain points_equivalence(std::span<const ProjectivePoint> z, std::span<const ProjectivePoint> z_prime,
                                Sampler& sampler, const SearchOptions& opts) {
    if (z.empty() || z.size() != z_prime.size()) {
        throw Error(ErrorCode::InvalidArgument, "point lists must be nonempty and of equal length");
    }
    const std::size_t r = z.front().dim();
    for (const auto& p : z) {
        if (p.dim() != r) throw Error(ErrorCode::DimensionMismatch, "points in different spaces");
    }
    for (const auto& p : z_prime) {
        if (p.dim() != r) throw Error(ErrorCode::DimensionMismatch, "points in different spaces");
    }
    if (r < 2) throw Error(ErrorCode::InvalidArgument, "point-set equivalence needs r >= 2");
    std::vector<ProjectivePoint> cur(z.begin(), z.end());
    if (!pairwise_distinct(cur) || !pairwise_distinct({z_prime.begin(), z_prime.end()})) {
        throw Error(ErrorCode::NonDistinctPoints, "repeated point in a configuration");
    }

    CremonaChain chain;
    chain.ambient_dim = r;
    chain.source = point_scheme(z);
    chain.target = point_scheme(z_prime);
    chain.stages.push_back(chain.source);
    chain.samples.assign(z.size(), {Vector{Rational(1)}});
    ChainBuilder out(chain);

    if (!points_in_position(cur, z_prime)) {
        bool placed = false;
        for (unsigned attempt = 0; attempt < opts.resamples && !placed; ++attempt) {
            CertifiedPair m = generic_quadro_quadric(r, sampler);
            std::vector<ProjectivePoint> moved;
            for (const auto& p : cur) {
                const auto q = try_apply(m.forward, p);
                if (!q) break;
                const auto back = try_apply(m.inverse, *q);
                if (!back || !(*back == p)) break;
                moved.push_back(*q);
            }
            if (moved.size() != cur.size() || !pairwise_distinct(moved) || !points_in_position(moved, z_prime)) continue;
            cur = std::move(moved);
            out.push(StepKind::QuadroQuadric, std::move(m), point_scheme(cur));
            placed = true;
        }
        if (!placed) throw Error(ErrorCode::GenericityExhausted, "no quadro-quadric modification reached general position");
    }

    for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i] == z_prime[i]) continue;
        std::vector<ProjectivePoint> fixed;
        for (std::size_t h = 0; h < cur.size(); ++h) {
            if (h != i) fixed.push_back(cur[h]);
        }
        // Vertex on the line through the pair, off every line through two
        // fixed points.
        std::optional<ProjectivePoint> vertex;
        for (unsigned attempt = 0; attempt < 4 * opts.resamples && !vertex; ++attempt) {
            const Rational a = sampler.next_nonzero(8), b = sampler.next_nonzero(8);
            Vector v(r + 1);
            for (std::size_t k = 0; k <= r; ++k) v[k] = a * cur[i][k] + b * z_prime[i][k];
            auto cand = to_point(std::move(v));
            if (!cand || *cand == cur[i] || *cand == z_prime[i]) continue;
            bool bad = false;
            for (std::size_t f = 0; f < fixed.size() && !bad; ++f) {
                bad = fixed[f] == *cand;
                for (std::size_t g = f + 1; g < fixed.size() && !bad; ++g) bad = on_line(fixed[f], fixed[g], *cand);
            }
            if (!bad) vertex = std::move(cand);
        }
        if (!vertex) throw Error(ErrorCode::GenericityExhausted, "no admissible vertex for point " + std::to_string(i));
        const PointMove move{cur[i], z_prime[i]};
        const DeJonquieresMap dj = dj_solve(*vertex, std::span(&move, 1), fixed, sampler, opts.max_degree);
        cur[i] = z_prime[i];
        out.push(StepKind::DeJonquieres, dj_certified(dj), point_scheme(cur));
    }
    return chain;
}

namespace {

// One round of the pipeline: from X (in P^r) and the next target function
// psi_k, the double projection sending X onto X' = [L X, psi_k].
struct Round {
    CertifiedPair omega;
    ParamScheme next;
};

std::optional<Round> try_round(const ParamScheme& x, const ParamScheme& target, std::size_t k,
                               const std::vector<std::vector<Vector>>& samples, Sampler& sampler,
                               const SearchOptions& opts) {
    const std::size_t r = x.ambient_dim;
    const std::size_t big = r + 1;  // Z lives in P^{r+1}
    const std::size_t ncomp = x.components.size();

    ParamScheme zk{big, {}};
    for (std::size_t j = 0; j < ncomp; ++j) {
        std::vector<HomogeneousForm> forms = x.components[j].param.forms();
        forms.push_back(target.components[j].param[k]);
        zk.components.push_back({FormTuple(std::move(forms))});
    }
    const ProjectivePoint first = ProjectivePoint::coordinate(big, big);

    for (unsigned attempt = 0; attempt < opts.resamples; ++attempt) {
        // p in {x_{r-k+1} = ... = x_{r+1} = 0}.
        const std::size_t free = r - k + 1;
        Vector pc = random_nonzero(sampler, free, 8);
        pc.resize(big + 1, Rational(0));
        const ProjectivePoint p(pc);
        // In the last round p is forced to e_0, which lies on Z as soon as
        // the target was padded; the step is then certified by the checks
        // below only.
        const bool last = k == r;
        bool on_scheme = false;
        for (const auto& c : zk.components) on_scheme = on_scheme || point_on_component(p, c, sampler);
        if (on_scheme && !last) continue;

        // Frame coordinates y = S^-1 x: the kernel of the projection from p
        // inside the free block, then the target coordinates copied over,
        // then y_r = x_{j0}/p_{j0} and y_{r+1} = x_{r+1}. S e_r = p.
        std::size_t j0 = 0;
        while (p[j0] == 0) ++j0;
        Matrix sinv(big + 1, big + 1);
        std::size_t row = 0;
        for (std::size_t j = 0; j < free; ++j) {
            if (j == j0) continue;
            sinv(row, j) = 1;
            sinv(row, j0) = -p[j] / p[j0];
            ++row;
        }
        for (std::size_t j = free; j <= r; ++j) sinv(row++, j) = 1;
        sinv(r, j0) = 1 / p[j0];
        sinv(big, big) = 1;
        const Matrix s = *inverse(sinv);
        const LinearAutomorphism frame(s);

        // Projection from the line through p and e_{r+1}: y_0..y_{r-1}.
        Matrix proj(r, big + 1);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j <= big; ++j) proj(i, j) = sinv(i, j);
        }
        // Images of different components may meet; only collisions within
        // one component count.
        bool injective = true;
        for (std::size_t j = 0; j < ncomp && injective; ++j) {
            std::vector<std::pair<ProjectivePoint, ProjectivePoint>> seen;  // (point, projection)
            for (const auto& u : samples[j]) {
                const auto pt = at(zk.components[j].param, u);
                if (!pt) continue;
                const auto im = to_point(proj.apply(pt->coords()));
                if (!im) {
                    injective = false;
                    break;
                }
                for (const auto& [q, qi] : seen) {
                    if (!(q == *pt) && qi == *im) injective = false;
                }
                seen.emplace_back(*pt, *im);
            }
        }
        if (!injective) continue;

        // The next stage and the linear pieces of omega.
        Matrix lin_inv(big, big), lin(big, big);
        for (std::size_t i = 0; i <= r; ++i) {
            for (std::size_t j = 0; j <= r; ++j) {
                lin_inv(i, j) = sinv(i, j);
                lin(i, j) = s(i, j);
            }
        }
        ParamScheme next{r, {}};
        for (std::size_t j = 0; j < ncomp; ++j) {
            Matrix top(r, big);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t c = 0; c <= r; ++c) top(i, c) = sinv(i, c);
            }
            std::vector<HomogeneousForm> forms = apply_rows(top, x.components[j].param).forms();
            forms.push_back(target.components[j].param[k]);
            next.components.push_back({FormTuple(std::move(forms))});
            // The last k+1 coordinates must be the target's first k+1.
            for (std::size_t c = 0; c <= k; ++c) {
                if (next.components[j].param[r - k + c] != target.components[j].param[c]) {
                    throw Error(ErrorCode::StepVerificationFailed, "stage coordinates drifted from the target");
                }
            }
        }
        const RationalMap to_frame(linear_tuple(lin_inv.to_rows()));
        const RationalMap from_frame(linear_tuple(lin.to_rows()));

        for (unsigned d = 1; d <= opts.max_degree; ++d) {
            const MonoidSystem sys = bivertex_system(zk, first, p, d, frame, !last);
            if (system_dimension(sys) < 0) continue;
            for (unsigned pick = 0; pick < 4; ++pick) {
                std::optional<PickedMember> member;
                try {
                    member = pick_cone_avoiding(sys, zk, sampler);
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::AvoidanceExhausted) break;
                    throw;
                }
                std::optional<CertifiedPair> omega;
                try {
                    const CertifiedPair dp = double_projection_certified(assemble_bivertex(sys, member->coefficients));
                    omega = certify(map_compose(dp.forward, to_frame), map_compose(from_frame, dp.inverse));
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::NotInverse && e.code() != ErrorCode::DegenerateDenominator &&
                        e.code() != ErrorCode::ZeroComposite) {
                        throw;
                    }
                    continue;
                }
                bool good = true;
                for (std::size_t j = 0; j < ncomp && good; ++j) {
                    const FormTuple& from = x.components[j].param;
                    const FormTuple& to = next.components[j].param;
                    good = sends(*omega, from, to);
                    for (std::size_t t = 0; t < samples[j].size() && good; ++t) {
                        good = !sample_trip(*omega, from, to, samples[j][t], false);
                    }
                }
                if (good) return Round{*std::move(omega), std::move(next)};
            }
        }
        throw Error(ErrorCode::MonoidSearchExhausted,
                    "round " + std::to_string(k) + ": no usable bi-vertex monoid up to degree " +
                        std::to_string(opts.max_degree));
    }
    return std::nullopt;
}

// Pipeline over fixed parameter samples; samples[j] must keep both inputs
// nonzero.
CremonaChain pipeline_with_samples(const ParamScheme& phi, const ParamScheme& psi,
                                   std::vector<std::vector<Vector>> samples, Sampler& sampler,
                                   const SearchOptions& opts) {
    phi.validate();
    psi.validate();
    const std::size_t r = phi.ambient_dim;
    if (psi.ambient_dim != r) throw Error(ErrorCode::DimensionMismatch, "schemes in different spaces");
    if (r < 3) throw Error(ErrorCode::InvalidArgument, "the pipeline needs r >= 3");
    const std::size_t ncomp = phi.components.size();
    if (ncomp == 0 || psi.components.size() != ncomp) {
        throw Error(ErrorCode::InvalidArgument, "schemes must have the same nonzero number of components");
    }

    // Equal degrees per component: the lower one is multiplied by a power of
    // a random linear form that stays nonzero at the samples.
    ParamScheme a{r, {}}, b{r, {}};
    for (std::size_t j = 0; j < ncomp; ++j) {
        const FormTuple& f = phi.components[j].param;
        const FormTuple& g = psi.components[j].param;
        if (f.nvars() != g.nvars()) {
            throw Error(ErrorCode::ArityMismatch, "component " + std::to_string(j) + " has different arities");
        }
        const unsigned df = f.degree(), dg = g.degree();
        const FormTuple& low = df < dg ? f : g;
        const unsigned delta = df < dg ? dg - df : df - dg;
        std::optional<FormTuple> padded;
        if (delta == 0) {
            padded = low;
        } else {
            for (unsigned attempt = 0; attempt < opts.resamples && !padded; ++attempt) {
                Vector c(low.nvars());
                for (auto& x : c) x = sampler.next_nonzero(8);
                HomogeneousForm ell(low.nvars(), 1);
                for (std::size_t v = 0; v < c.size(); ++v) ell += HomogeneousForm::variable(low.nvars(), v) * c[v];
                bool ok = true;
                for (const auto& u : samples[j]) ok = ok && ell.eval(u) != 0;
                if (!ok) continue;
                const HomogeneousForm power = pow(ell, delta);
                std::vector<HomogeneousForm> forms;
                for (const auto& form : low) forms.push_back(form * power);
                padded = FormTuple(std::move(forms));
            }
            if (!padded) throw Error(ErrorCode::GenericityExhausted, "no padding form avoids the samples");
        }
        a.components.push_back({df < dg ? *padded : f});
        b.components.push_back({df < dg ? g : *padded});
    }

    CremonaChain chain;
    chain.ambient_dim = r;
    chain.source = phi;
    chain.target = psi;
    chain.samples = std::move(samples);
    chain.stages.push_back(a);
    ChainBuilder out(chain);

    // Coordinate genericity: random automorphisms on both sides.
    const LinearAutomorphism ga = sample_automorphism(sampler, r);
    const LinearAutomorphism gb = sample_automorphism(sampler, r);
    const ParamScheme target = map_scheme(gb.matrix(), b);
    out.push(StepKind::Linear, linear_pair(ga), map_scheme(ga.matrix(), a));

    for (std::size_t k = 0; k <= r; ++k) {
        std::optional<Round> round = try_round(out.current(), target, k, chain.samples, sampler, opts);
        if (!round) {
            throw Error(ErrorCode::InjectivityScreenFailed,
                        "round " + std::to_string(k) + ": projection screen failed " + std::to_string(opts.resamples) +
                            " times");
        }
        out.push(StepKind::DoubleProjection, std::move(round->omega), std::move(round->next));
    }
    for (std::size_t j = 0; j < ncomp; ++j) {
        if (!(out.current().components[j].param == target.components[j].param)) {
            throw Error(ErrorCode::StepVerificationFailed, "final stage is not the target");
        }
    }
    const LinearAutomorphism gb_inv = gb.inverse();
    out.push(StepKind::Linear, linear_pair(gb_inv), b);

    const VerifyReport rep = verify_chain(chain);
    if (!rep.ok) throw Error(ErrorCode::VerificationFailed, rep.failures.front());
    return chain;
}

}  // namespace

CremonaChain pipeline_equivalence(const ParamScheme& phi, const ParamScheme& psi, Sampler& sampler,
                                  const SearchOptions& opts) {
    phi.validate();
    psi.validate();
    if (phi.components.size() != psi.components.size()) {
        throw Error(ErrorCode::InvalidArgument, "schemes must have the same number of components");
    }
    std::vector<std::vector<Vector>> samples;
    for (std::size_t j = 0; j < phi.components.size(); ++j) {
        if (phi.components[j].arity() != psi.components[j].arity()) {
            throw Error(ErrorCode::ArityMismatch, "component " + std::to_string(j) + " has different arities");
        }
        samples.push_back(draw_samples({&phi.components[j].param, &psi.components[j].param}, opts.samples, sampler));
    }
    return pipeline_with_samples(phi, psi, std::move(samples), sampler, opts);
}

namespace {

// Column space of a linear parametrization.
std::vector<Vector> linear_span(const FormTuple& t) {
    Matrix m(t.nvars(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t v = 0; v < t.nvars(); ++v) {
            Exponents e(t.nvars(), 0);
            e[v] = 1;
            m(v, i) = t[i].coefficient(e);
        }
    }
    const Echelon ech = row_echelon(m);
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) basis.push_back(ech.rref.row(i));
    return basis;
}

// Combination of the given vectors by a random nonzero coefficient vector.
Vector random_combination(const std::vector<Vector>& vs, Sampler& s) {
    for (;;) {
        const Vector c = random_nonzero(s, vs.size(), 8);
        Vector out(vs.front().size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t k = 0; k < out.size(); ++k) out[k] += c[i] * vs[i][k];
        }
        if (std::any_of(out.begin(), out.end(), [](const Rational& x) { return x != 0; })) return out;
    }
}

// Intersection of linear spans (projective, as vector bases).
std::vector<Vector> intersect(const std::vector<std::vector<Vector>>& spans, std::size_t n) {
    std::vector<Vector> eqs;
    for (const auto& sp : spans) {
        std::vector<ProjectivePoint> pts;
        for (const auto& v : sp) pts.emplace_back(v);
        for (auto& e : LinearSubspace(pts).equations()) eqs.push_back(std::move(e));
    }
    if (eqs.empty()) {
        std::vector<Vector> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(ProjectivePoint::coordinate(n - 1, i).coords());
        return all;
    }
    return nullspace(Matrix::from_rows(eqs));
}

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Coordinates of v in the basis (columns), assuming v lies in their span.
Vector coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
    std::vector<Vector> cols = basis;
    cols.push_back(v);
    const auto ns = nullspace(Matrix::from_columns(cols));
    for (const auto& n : ns) {
        if (n.back() == 0) continue;
        Vector out(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) out[i] = -n[i] / n.back();
        return out;
    }
    throw Error(ErrorCode::InvalidArgument, "vector outside the span");
}

// Nonzero quadratic forms in plane coordinates vanishing on every listed
// linear space (given by plane-coordinate bases).
std::vector<HomogeneousForm> quadrics_through(std::size_t nvars, const std::vector<std::vector<Vector>>& spaces) {
    std::vector<std::size_t> vars(nvars);
    for (std::size_t i = 0; i < nvars; ++i) vars[i] = i;
    const auto monos = monomial_basis(nvars, vars, 2);
    std::vector<Vector> rows;
    for (const auto& sp : spaces) {
        const std::size_t m = sp.size();
        std::vector<HomogeneousForm> images;
        for (std::size_t v = 0; v < nvars; ++v) {
            HomogeneousForm f(m, 1);
            for (std::size_t i = 0; i < m; ++i) f += HomogeneousForm::variable(m, i) * sp[i][v];
            images.push_back(std::move(f));
        }
        std::map<Exponents, std::size_t, GrlexGreater> index;
        std::vector<HomogeneousForm> pulled;
        for (const auto& e : monos) {
            pulled.push_back(substitute(HomogeneousForm::monomial(e), images));
            for (const auto& [t, c] : pulled.back().terms()) index.try_emplace(t, 0);
        }
        const std::size_t base = rows.size();
        std::size_t k = 0;
        for (auto& [t, idx] : index) idx = base + k++;
        rows.resize(base + k, Vector(monos.size()));
        for (std::size_t col = 0; col < monos.size(); ++col) {
            for (const auto& [t, c] : pulled[col].terms()) rows[index.at(t)][col] = c;
        }
    }
    std::vector<Vector> ns;
    if (rows.empty()) {
        for (std::size_t i = 0; i < monos.size(); ++i) {
            Vector v(monos.size());
            v[i] = 1;
            ns.push_back(std::move(v));
        }
    } else {
        ns = nullspace(Matrix::from_rows(rows));
    }
    std::vector<HomogeneousForm> out;
    for (const auto& v : ns) {
        HomogeneousForm q(nvars, 2);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (v[i] != 0) q += HomogeneousForm::monomial(monos[i], v[i]);
        }
        out.push_back(std::move(q));
    }
    return out;
}

struct ComponentShape {
    std::size_t dim = 0;
    bool linear = false;
    std::vector<Vector> span;  // for linear components
};

ComponentShape shape_of(const FormTuple& t) {
    ComponentShape s;
    const std::size_t rk = image_rank(t);
    if (rk == 1) {
        s.linear = true;
        s.dim = 0;
        s.span = {to_point(t.eval(Vector(t.nvars(), Rational(1))))
                      .value_or(ProjectivePoint::coordinate(t.size() - 1, 0))
                      .coords()};
        return s;
    }
    if (t.degree() == 1) {
        s.linear = true;
        s.span = linear_span(t);
        s.dim = s.span.size() - 1;
        return s;
    }
    s.dim = t.nvars() - 1;
    return s;
}

// A random nonzero member of the span of qs.
HomogeneousForm random_member(const std::vector<HomogeneousForm>& qs, Sampler& s) {
    for (;;) {
        const Vector c = random_nonzero(s, qs.size(), 8);
        HomogeneousForm q(qs.front().nvars(), qs.front().degree());
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (c[i] != 0) q += qs[i] * c[i];
        }
        if (!q.is_zero()) return q;
    }
}

// u -> sum_v u_v images[v].
FormTuple linear_param(const std::vector<Vector>& images) {
    const std::size_t n = images.size();
    std::vector<HomogeneousForm> forms;
    for (std::size_t i = 0; i < images.front().size(); ++i) {
        HomogeneousForm f(n, 1);
        for (std::size_t v = 0; v < n; ++v) {
            if (images[v][i] != 0) f += HomogeneousForm::variable(n, v) * images[v][i];
        }
        forms.push_back(std::move(f));
    }
    return FormTuple(std::move(forms));
}

// Linear map sending the basis `span` to `images` (same count), extended by
// standard vectors sent to zero.
Matrix span_map(const std::vector<Vector>& span, const std::vector<Vector>& images) {
    const std::size_t n = span.front().size();
    std::vector<Vector> cols = span;
    std::vector<Vector> dst = images;
    for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
        auto trial = cols;
        trial.push_back(ProjectivePoint::coordinate(n - 1, e).coords());
        if (rank(Matrix::from_columns(trial)) == trial.size()) {
            cols = std::move(trial);
            dst.push_back(Vector(n));
        }
    }
    return Matrix::from_columns(dst) * *inverse(Matrix::from_columns(cols));
}

}  // namespace

CremonaChain contract_union(const ParamScheme& z, Sampler& sampler, const SearchOptions& opts) {
    z.validate();
    const std::size_t r = z.ambient_dim;
    const std::size_t ncomp = z.components.size();
    if (ncomp == 0) throw Error(ErrorCode::ZeroInput, "no components");

    CremonaChain chain;
    chain.ambient_dim = r;
    chain.source = z;
    chain.contracted = true;
    chain.stages.push_back(z);
    chain.samples = draw_scheme_samples(z, opts.samples, sampler);
    ChainBuilder out(chain);

    for (std::size_t iter = 0; iter <= r; ++iter) {
        std::vector<ComponentShape> shapes;
        for (const auto& c : out.current().components) shapes.push_back(shape_of(c.param));
        std::vector<std::size_t> positive;
        for (std::size_t j = 0; j < ncomp; ++j) {
            if (shapes[j].dim > 0) positive.push_back(j);
        }
        if (positive.empty()) break;
        if (r < 3) throw Error(ErrorCode::InvalidArgument, "contracting positive-dimensional components needs r >= 3");
        for (std::size_t j : positive) {
            if (shapes[j].dim + 2 > r) {
                throw Error(ErrorCode::InvalidArgument, "component " + std::to_string(j) + " has dimension > r - 2");
            }
        }

        // Linear components through one point go straight to the
        // quadro-quadric step; otherwise the pipeline first moves every
        // component onto a cone <A_j, p> over a linear space of a hyperplane.
        bool direct = std::all_of(positive.begin(), positive.end(), [&](std::size_t j) { return shapes[j].linear; });
        std::vector<Vector> common;
        if (direct) {
            std::vector<std::vector<Vector>> spans;
            for (std::size_t j : positive) spans.push_back(shapes[j].span);
            common = intersect(spans, r + 1);
            direct = !common.empty();
        }

        bool done = false;
        for (unsigned attempt = 0; attempt < opts.resamples && !done; ++attempt) {
            const Vector p = direct ? random_combination(common, sampler) : random_nonzero(sampler, r + 1, 8);
            // Hyperplane {h . x = 0} missing p, with a basis of r vectors.
            const Vector h = random_nonzero(sampler, r + 1, 8);
            if (dot(h, p) == 0) continue;
            // Basis normalized as the quadro-quadric construction will see it.
            std::vector<Vector> plane;
            for (const auto& v : nullspace(Matrix::from_rows({h}))) plane.push_back(ProjectivePoint(v).coords());
            auto ambient = [&](const Vector& c) {
                Vector v(r + 1);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t k = 0; k <= r; ++k) v[k] += c[i] * plane[i][k];
                }
                return v;
            };

            // A_j inside the hyperplane, as plane-coordinate bases.
            std::vector<std::vector<Vector>> a_plane(ncomp);
            for (std::size_t j : positive) {
                if (direct) {
                    const auto& sp = shapes[j].span;
                    Vector hv(sp.size());
                    for (std::size_t i = 0; i < sp.size(); ++i) hv[i] = dot(h, sp[i]);
                    for (const auto& c : nullspace(Matrix::from_rows({hv}))) {
                        Vector v(r + 1);
                        for (std::size_t i = 0; i < sp.size(); ++i) {
                            for (std::size_t k = 0; k <= r; ++k) v[k] += c[i] * sp[i][k];
                        }
                        a_plane[j].push_back(coordinates_in(plane, v));
                    }
                } else {
                    for (std::size_t i = 0; i < shapes[j].dim; ++i) a_plane[j].push_back(random_nonzero(sampler, r, 8));
                    if (vector_rank(a_plane[j]) != shapes[j].dim) a_plane[j].clear();
                }
            }
            if (std::any_of(positive.begin(), positive.end(), [&](std::size_t j) { return a_plane[j].empty(); })) continue;

            std::vector<std::vector<Vector>> spaces;
            for (std::size_t j : positive) spaces.push_back(a_plane[j]);
            const auto quadrics = quadrics_through(r, spaces);
            if (quadrics.empty()) {
                throw Error(ErrorCode::GenericityExhausted, "no quadric of the hyperplane contains every A_j");
            }

            CremonaChain segment;
            ParamScheme before = out.current();
            if (!direct) {
                ParamScheme targets{r, {}};
                for (std::size_t j = 0; j < ncomp; ++j) {
                    const FormTuple& cur = before.components[j].param;
                    if (shapes[j].dim == 0) {
                        targets.components.push_back({cur});
                        continue;
                    }
                    std::vector<Vector> images{p};
                    for (const auto& c : a_plane[j]) images.push_back(ambient(c));
                    if (shapes[j].linear) {
                        targets.components.push_back({apply_rows(span_map(shapes[j].span, images), cur)});
                    } else {
                        targets.components.push_back({linear_param(images)});
                    }
                }
                segment = pipeline_with_samples(before, targets, chain.samples, sampler, opts);
                before = segment.stages.back();
            }

            std::vector<ProjectivePoint> plane_pts;
            for (const auto& v : plane) plane_pts.emplace_back(v);
            std::optional<QuadroQuadric> qq;
            try {
                qq = quadro_quadric(ProjectivePoint(p), LinearSubspace(plane_pts), random_member(quadrics, sampler));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::WrongSystemDimension && e.code() != ErrorCode::InvalidArgument) throw;
                continue;
            }

            ParamScheme after{r, {}};
            bool good = true;
            for (std::size_t j = 0; j < ncomp && good; ++j) {
                const FormTuple& from = before.components[j].param;
                try {
                    after.components.push_back({remove_common_factor(compose_tuple(qq->map.forward, from))});
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::ZeroComposite) throw;
                    good = false;
                    break;
                }
                const FormTuple& to = after.components[j].param;
                const bool collapsing = shapes[j].dim > 0;
                for (std::size_t t = 0; t < chain.samples[j].size() && good; ++t) {
                    good = !sample_trip(qq->map, from, to, chain.samples[j][t], collapsing);
                }
                if (good && shapes[j].dim == 1) good = image_rank(to) == 1;
            }
            if (!good) continue;
            std::vector<ProjectivePoint> points;
            for (std::size_t j = 0; j < ncomp; ++j) {
                const FormTuple& t = after.components[j].param;
                if (image_rank(t) == 1) points.push_back(*at(t, chain.samples[j].front()));
            }
            if (!pairwise_distinct(points)) continue;

            for (std::size_t i = 0; i < segment.steps.size(); ++i) {
                out.push(segment.steps[i].kind, segment.steps[i].map, segment.stages[i + 1]);
            }
            out.push(StepKind::QuadroQuadric, qq->map, std::move(after), positive);
            done = true;
        }
        if (!done) {
            throw Error(ErrorCode::GenericityExhausted, "no admissible quadro-quadric contraction after " +
                                                            std::to_string(opts.resamples) + " tries");
        }
    }

    const VerifyReport rep = verify_chain(chain);
    if (!rep.ok) throw Error(ErrorCode::VerificationFailed, rep.failures.front());
    return chain;
}

}  // namespace cremona
