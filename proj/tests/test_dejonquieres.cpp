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
#include "cremona/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using cremona::testing::F;

namespace {

LinearAutomorphism id_frame(std::size_t r) { return LinearAutomorphism::identity(r); }

bool same_span(const std::vector<HomogeneousForm>& a, const std::vector<HomogeneousForm>& b) {
    std::vector<HomogeneousForm> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto ra = image_rank(FormTuple(a));
    return ra == image_rank(FormTuple(b)) && ra == image_rank(FormTuple(both));
}

bool proportional(const HomogeneousForm& a, const HomogeneousForm& b) {
    const FormTuple t{a, b};
    return image_rank(t) == 1;
}

HomogeneousForm random_tail_form(Sampler& s, std::size_t n, int degree) {
    if (degree < 0) return HomogeneousForm(n, 0);
    std::vector<std::size_t> tail;
    for (std::size_t i = 1; i < n; ++i) tail.push_back(i);
    HomogeneousForm f(n, static_cast<unsigned>(degree));
    for (const auto& e : monomial_basis(n, tail, static_cast<unsigned>(degree))) {
        const auto c = s.next_int(4);
        if (c != 0) f += HomogeneousForm::monomial(e, c);
    }
    return f;
}

}  // namespace

TEST_CASE("degree one maps are linear automorphisms") {
    const DeJonquieresMap m(id_frame(2), 1, MoebiusData{F("2", 3), F("x1 + x2", 3), F("0", 3), F("3", 3)});
    const auto fwd = dj_forward(m);
    CHECK(fwd.degree() == 1);
    const Matrix mat = Matrix::from_rows({{2, 1, 1}, {0, 3, 0}, {0, 0, 3}});
    CHECK(maps_projectively_equal(fwd, RationalMap(linear_tuple(mat.to_rows()))));
    const auto inv = dj_forward(dj_inverse(m));
    CHECK(maps_projectively_equal(inv, RationalMap(linear_tuple(inverse(mat)->to_rows()))));
    const auto cert = verify_inverse_pair(fwd, inv);
    CHECK(cert.phi.degree() == 0);
}

TEST_CASE("normal form assembly and inverse") {
    const DeJonquieresMap m(id_frame(2), 2, MoebiusData{F("x1", 3), F("2*x1*x2", 3), F("1", 3), F("x1", 3)});
    const auto fwd = dj_forward(m);
    const FormTuple expect{F("x0*x1 + 2*x1*x2", 3), F("x0*x1 + x1^2", 3), F("x0*x2 + x1*x2", 3)};
    CHECK(fwd.tuple() == expect);
    CHECK(map_apply(fwd, {0, 1, 1}) == ProjectivePoint{2, 1, 1});

    const auto inv = dj_forward(dj_inverse(m));
    const RationalMap inv_expect(FormTuple{F("x0*x1 - 2*x1*x2", 3), F("x1^2 - x0*x1", 3), F("x1*x2 - x0*x2", 3)});
    CHECK(maps_projectively_equal(inv, inv_expect));
    const auto cert = verify_inverse_pair(fwd, inv);
    CHECK(cert.phi.degree() == 3);
    CHECK(verify_inverse_pair(inv, fwd).phi.degree() == 3);
    CHECK(m.determinant() == F("x1^2 - 2*x1*x2", 3));
}

TEST_CASE("the quadro-quadric involution is a de Jonquieres map") {
    const DeJonquieresMap n(id_frame(3), 2, MoebiusData{F("0", 4), F("x1*x2 - x3^2", 4), F("1", 4), F("0", 4)});
    const auto fwd = dj_forward(n);
    CHECK(fwd.tuple() == FormTuple{F("x1*x2 - x3^2", 4), F("x0*x1", 4), F("x0*x2", 4), F("x0*x3", 4)});
    const auto inv = dj_forward(dj_inverse(n));
    CHECK(maps_projectively_equal(inv, fwd));
    CHECK(proportional(verify_inverse_pair(inv, fwd).phi, F("x0*x1*x2 - x0*x3^2", 4)));
}

TEST_CASE("invalid Moebius data") {
    CHECK_THROWS_AS(DeJonquieresMap(id_frame(2), 2, MoebiusData{F("x1", 3), F("x1^2", 3), F("1", 3), F("x1", 3)}),
                    Error);  // D = x1*x1 - x1^2 = 0
    CHECK_THROWS_AS(DeJonquieresMap(id_frame(2), 2, MoebiusData{F("x0", 3), F("x1^2", 3), F("1", 3), F("x1", 3)}),
                    Error);
    CHECK_THROWS_AS(DeJonquieresMap(id_frame(2), 2, MoebiusData{F("x1^2", 3), F("x1^2", 3), F("1", 3), F("x1", 3)}),
                    Error);
}

TEST_CASE("random maps invert with the expected fundamental degree") {
    Sampler s(51);
    int built = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 2 + trial % 2;
        const unsigned d = 2 + trial % 3;
        const std::size_t n = r + 1;
        MoebiusData data{random_tail_form(s, n, d - 1), random_tail_form(s, n, d), random_tail_form(s, n, d - 2),
                         random_tail_form(s, n, d - 1)};
        try {
            const DeJonquieresMap m(sample_automorphism(s, r), d, data);
            const auto pair = dj_certified(m);
            CHECK(pair.certificate.phi.degree() == d * d - 1);
            CHECK(pair.forward.degree() == d);
            ++built;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ZeroDeterminant);
        }
    }
    CHECK(built > 30);
}

TEST_CASE("lines through the center map linearly") {
    Sampler s(52);
    const DeJonquieresMap m(sample_automorphism(s, 2), 3,
                            MoebiusData{random_tail_form(s, 3, 2), random_tail_form(s, 3, 3), random_tail_form(s, 3, 1),
                                        random_tail_form(s, 3, 2)});
    const auto fwd = dj_forward(m);
    const auto c = m.center();
    for (int trial = 0; trial < 5; ++trial) {
        const auto q = sample_point(s, 2, {});
        std::vector<HomogeneousForm> line;
        for (std::size_t i = 0; i < 3; ++i) {
            line.push_back(c[i] * HomogeneousForm::variable(2, 0) + q[i] * HomogeneousForm::variable(2, 1));
        }
        const auto img = remove_common_factor(compose_tuple(fwd, FormTuple(line)));
        CHECK(img.degree() == 1);
    }
}

TEST_CASE("constraint solver: the single move example") {
    Sampler s(53);
    const std::vector<PointMove> moves{{{0, 1, 1}, {2, 1, 1}}};
    const auto m = dj_from_constraints({1, 0, 0}, moves, {}, 2, s);
    const auto fwd = dj_forward(m);
    CHECK(map_apply(fwd, {0, 1, 1}) == ProjectivePoint{2, 1, 1});
    CHECK(map_apply(dj_forward(dj_inverse(m)), {2, 1, 1}) == ProjectivePoint{0, 1, 1});

    // The hand-made witness satisfies a0 F0 + G0 = b0 (a0 F + G) at a = (0,1,1), b0 = 2.
    const std::vector<Rational> a{0, 1, 1};
    const auto g0 = F("2*x1*x2", 3), g = F("x1", 3);
    CHECK(g0.eval(a) == 2 * g.eval(a));
}

TEST_CASE("constraint solver: fixed points and consistency") {
    Sampler s(54);
    const ProjectivePoint p{3, -1, 2, 1};
    const std::vector<ProjectivePoint> fixed{p};
    for (unsigned d = 2; d <= 4; ++d) {
        const auto m = dj_from_constraints({1, 0, 0, 0}, {}, fixed, d, s);
        CHECK(map_apply(dj_forward(m), p) == p);
    }
    const std::vector<PointMove> self{{p, p}};
    const auto m2 = dj_from_constraints({1, 0, 0, 0}, self, {}, 2, s);
    CHECK(map_apply(dj_forward(m2), p) == p);

    const std::vector<PointMove> bad{{{0, 1, 1}, {0, 1, 2}}};
    CHECK_THROWS_AS(dj_from_constraints({1, 0, 0}, bad, {}, 2, s), Error);
}

TEST_CASE("constraint solver: several constraints in general position") {
    Sampler s(55);
    for (std::size_t r = 2; r <= 3; ++r) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto p = sample_point(s, r, {});
            const auto q = sample_point(s, r, {});
            if (p == q) continue;
            Vector v(r + 1);
            for (std::size_t i = 0; i <= r; ++i) v[i] = 2 * p[i] + 3 * q[i];
            const ProjectivePoint vertex(v);
            std::vector<ProjectivePoint> fixed;
            while (fixed.size() < 4) {
                const auto f = sample_point(s, r, {});
                bool ok = f != vertex && f != p && f != q && !are_aligned(vertex, p, f);
                for (const auto& g : fixed) ok = ok && f != g && !are_aligned(vertex, f, g);
                if (ok) fixed.push_back(f);
            }
            const std::vector<PointMove> moves{{p, q}};
            const auto m = dj_solve(vertex, moves, fixed, s);
            const auto pair = dj_certified(m);
            CHECK(map_apply(pair.forward, p) == q);
            CHECK(map_apply(pair.inverse, q) == p);
            for (const auto& f : fixed) CHECK(map_apply(pair.forward, f) == f);
        }
    }
}

TEST_CASE("quadro-quadric from a point and a plane conic") {
    const std::vector<ProjectivePoint> plane_basis{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    const auto qq = quadro_quadric({1, 0, 0, 0}, LinearSubspace(plane_basis), F("x0*x1 - x2^2", 3));
    REQUIRE(qq.basis.size() == 4);
    CHECK(same_span(qq.basis, {F("x0*x1", 4), F("x0*x2", 4), F("x0*x3", 4), F("x1*x2 - x3^2", 4)}));
    CHECK(qq.map.certificate.phi.degree() == 3);
    CHECK(proportional(qq.map.certificate.phi, F("x0*x1*x2 - x0*x3^2", 4)));
}

TEST_CASE("quadro-quadric in the plane is the standard quadratic map") {
    const std::vector<ProjectivePoint> line{{0, 1, 0}, {0, 0, 1}};
    const auto qq = quadro_quadric({1, 0, 0}, LinearSubspace(line), F("x0*x1", 2));
    CHECK(same_span(qq.basis, {F("x1*x2", 3), F("x0*x2", 3), F("x0*x1", 3)}));

    // General position: the three base points are p and the two roots.
    const std::vector<ProjectivePoint> l2{{0, 1, 0}, {1, 1, 1}};
    const ProjectivePoint p{1, 2, 3};
    const auto g = quadro_quadric(p, LinearSubspace(l2), F("x0*x1", 2));
    for (const auto& base : {p, ProjectivePoint{0, 1, 0}, ProjectivePoint{1, 1, 1}}) {
        for (const auto& f : g.basis) CHECK(f.eval(base.coords()) == 0);
    }
    CHECK(g.map.certificate.phi.degree() == 3);

    CHECK_THROWS_AS(quadro_quadric({0, 1, 0}, LinearSubspace(line), F("x0*x1", 2)), Error);
}

TEST_CASE("generic quadro-quadric maps certify") {
    Sampler s(56);
    for (std::size_t r = 2; r <= 4; ++r) {
        const auto pair = generic_quadro_quadric(r, s);
        CHECK(pair.forward.degree() == 2);
        CHECK(pair.certificate.phi.degree() == 3);
    }
}
