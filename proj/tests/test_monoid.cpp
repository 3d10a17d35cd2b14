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

#include "cremona/error.hpp"
#include "cremona/monoid.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using cremona::testing::F;

namespace {

bool is_identity_up_to_factor(const FormTuple& t) {
    return tuples_projectively_equal(t, identity_tuple(t.nvars()));
}

HomogeneousForm random_avoiding(Sampler& s, std::size_t n, int degree, std::vector<std::size_t> vars) {
    if (degree < 0) return HomogeneousForm(n, 0);
    HomogeneousForm f(n, static_cast<unsigned>(degree));
    for (const auto& e : monomial_basis(n, vars, static_cast<unsigned>(degree))) {
        const auto c = s.next_int(4);
        if (c != 0) f += HomogeneousForm::monomial(e, c);
    }
    return f;
}

}  // namespace

TEST_CASE("monoid decomposition") {
    const auto m = monoid_from_equation(F("x0*x1 - x2^2", 3), {1, 0, 0});
    CHECK(m.f_low() == F("x1", 3));
    CHECK(m.f_high() == F("-x2^2", 3));
    CHECK(m.equation() == F("x0*x1 - x2^2", 3));

    const auto w = monoid_from_equation(F("x0*x1 + x2*x3", 4), {0, 0, 0, 1});
    CHECK(w.f_low() == F("x2", 4));
    CHECK(w.equation() == F("x0*x1 + x2*x3", 4));
    CHECK(w.vertex() == ProjectivePoint{0, 0, 0, 1});

    try {
        monoid_from_equation(F("x1*x2 - x3^2", 4), {1, 0, 0, 0});
        FAIL("expected WrongMultiplicity");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongMultiplicity);
    }
    CHECK_THROWS_AS(monoid_from_equation(F("x0^2*x1 + x2^3", 3), {1, 0, 0}), Error);
}

TEST_CASE("stereographic projection of a conic") {
    const auto m = monoid_from_equation(F("x0*x1 - x2^2", 3), {1, 0, 0});
    const auto st = stereographic(m);
    // Variables of P^1 are x0 ~ z1, x1 ~ z2.
    CHECK(st.inv.tuple() == FormTuple{F("x1^2", 2), F("x0^2", 2), F("x0*x1", 2)});
    CHECK(substitute(m.equation(), st.inv.tuple()).is_zero());
    CHECK(is_identity_up_to_factor(map_compose(st.proj, st.inv).tuple()));
    CHECK(st.inv.degree() == 2);
}

TEST_CASE("stereographic identities on random monoids") {
    Sampler s(61);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t r = 2 + trial % 3;
        const unsigned d = 1 + trial % 4;
        const std::size_t n = r + 1;
        std::vector<std::size_t> tail;
        for (std::size_t i = 1; i < n; ++i) tail.push_back(i);
        auto low = random_avoiding(s, n, d - 1, tail);
        if (low.is_zero()) low = HomogeneousForm::monomial(monomial_basis(n, tail, d - 1).front());
        const Monoid m(sample_automorphism(s, r), d, low, random_avoiding(s, n, d, tail));
        const auto st = stereographic(m);
        CHECK(substitute(m.equation(), st.inv.tuple()).is_zero());
        CHECK(is_identity_up_to_factor(map_compose(st.proj, st.inv).tuple()));
        CHECK(st.inv.degree() == d);
        const auto again = monoid_from_equation(m.equation(), m.vertex());
        CHECK(again.equation() == m.equation());
    }
}

TEST_CASE("linearization sends the monoid to a hyperplane") {
    const auto x = monoid_from_equation(F("x0*x1 - x2^2", 3), {1, 0, 0});
    const auto y = monoid_from_equation(F("x0", 3), {1, 0, 0});
    const auto lin = monoid_linearize(x, y);
    CHECK(lin.tuple() == FormTuple{F("x0*x1 - x2^2", 3), F("x0*x1", 3), F("x0*x2", 3)});
    const auto st = stereographic(x);
    CHECK(substitute(lin[0], st.inv.tuple()).is_zero());

    const auto data = linearization_data(x, y);
    CHECK(data.F0 == F("x1", 3));
    CHECK(data.G0 == F("-x2^2", 3));
    CHECK(data.F == F("1", 3));
    CHECK(data.G.is_zero());
    CHECK(data.F0 * data.G - data.F * data.G0 == F("x2^2", 3));

    const auto pair = monoid_linearize_certified(x, y);
    CHECK(pair.certificate.phi.degree() == 3);
    CHECK_THROWS_AS(monoid_linearize(x, x), Error);
}

TEST_CASE("double projection of the bi-vertex quadric") {
    const auto w = bivertex_from_equation(F("x0*x1 + x2*x3", 4), LinearAutomorphism::identity(3));
    CHECK(w.parts().Fd == F("x0*x1", 4));
    CHECK(w.parts().Gd1.is_zero());
    CHECK(w.parts().Fd1.is_zero());
    CHECK(w.parts().Fd2 == F("1", 4));
    const auto dp = double_projection(w);
    CHECK(dp.tuple() == FormTuple{F("x0*x2", 3), F("x1*x2", 3), F("-x0*x1", 3)});
    const auto pair = double_projection_certified(w);
    CHECK(pair.certificate.phi.degree() == 3);

    // Degree one: a hyperplane through both vertices gives a linear map.
    const auto h = bivertex_from_equation(F("x0 + 2*x1 + 3*x2 - x3", 4), LinearAutomorphism::identity(3));
    const auto lin = double_projection_certified(h);
    CHECK(lin.forward.degree() == 1);

    CHECK_THROWS_AS(bivertex_from_equation(F("x3^2 + x0*x1", 4), LinearAutomorphism::identity(3)), Error);
    const auto flat = bivertex_from_equation(F("x0*x1 + x2*x0", 4), LinearAutomorphism::identity(3));
    CHECK_THROWS_AS(double_projection(flat), Error);
}

TEST_CASE("double projections of random bi-vertex monoids invert") {
    Sampler s(62);
    int ok = 0;
    for (int trial = 0; trial < 16; ++trial) {
        const std::size_t r = 3 + trial % 2;
        const unsigned d = 1 + trial % 4;
        const std::size_t n = r + 1;
        std::vector<std::size_t> base;
        for (std::size_t i = 0; i + 1 < r; ++i) base.push_back(i);
        const BiVertexParts parts{random_avoiding(s, n, d, base), random_avoiding(s, n, d - 1, base),
                                  random_avoiding(s, n, d - 1, base), random_avoiding(s, n, static_cast<int>(d) - 2, base)};
        try {
            const BiVertexMonoid w(sample_automorphism(s, r), d, parts);
            const auto pair = double_projection_certified(w);
            CHECK(pair.forward.degree() == d);
            CHECK(pair.inverse.degree() == d);
            CHECK(pair.certificate.phi.degree() == d * d - 1);
            const auto again = bivertex_from_equation(w.equation(), w.frame());
            CHECK(again.frame_equation() == w.frame_equation());
            ++ok;
        } catch (const Error& e) {
            CHECK((e.code() == ErrorCode::NotInverse || e.code() == ErrorCode::DegenerateDenominator));
        }
    }
    CHECK(ok >= 12);
}
