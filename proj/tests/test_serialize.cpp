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
#include "cremona/serialize.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using cremona::testing::F;
using cremona::testing::ratio;

TEST_CASE("rationals and forms") {
    CHECK(to_json(ratio(-6, 4)) == "-3/2");
    CHECK(to_json(Rational(5)) == "5/1");
    CHECK(rational_from_json(Json("7")) == 7);
    CHECK(rational_from_json(Json(-3)) == -3);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), Error);

    const auto f = F("x0*x1 - 2/3*x2^2", 3);
    const Json j = to_json(f);
    CHECK(j["nvars"] == 3);
    CHECK(j["degree"] == 2);
    CHECK(j["terms"].size() == 2);
    CHECK(form_from_json(j) == f);
    // The first term in grlex order is x0*x1.
    CHECK(j["terms"][0]["exps"] == Json::parse("[1,1,0]"));
    CHECK(j["terms"][0]["coeff"] == "1/1");

    const HomogeneousForm zero(4, 3);
    const auto back = form_from_json(to_json(zero));
    CHECK(back.is_zero());
    CHECK(back.nvars() == 4);
    CHECK(back.degree() == 3);
}

TEST_CASE("malformed forms are parse errors") {
    auto code = [](const char* text) {
        try {
            form_from_json(Json::parse(text));
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::VerificationFailed;
    };
    CHECK(code(R"({"nvars":2,"degree":2,"terms":[{"exps":[1,0],"coeff":"1"}]})") == ErrorCode::Parse);
    CHECK(code(R"({"nvars":2,"degree":1,"terms":[{"exps":[1,0,0],"coeff":"1"}]})") == ErrorCode::Parse);
    CHECK(code(R"({"nvars":2,"degree":1,"terms":[{"exps":[1,0],"coeff":"1/0"}]})") == ErrorCode::Parse);
    CHECK(code(R"({"nvars":2,"degree":1})") == ErrorCode::Parse);
    CHECK(code(R"({"nvars":2,"degree":1,"terms":[{"exps":[1,0],"coeff":"1"},{"exps":[1,0],"coeff":"2"}]})") ==
          ErrorCode::Parse);
    CHECK(code(R"([1,2])") == ErrorCode::Parse);
}

TEST_CASE("points, frames, maps, certificates") {
    const ProjectivePoint p{2, 4, -6};
    CHECK(to_json(p) == Json::parse(R"(["1/1","2/1","-3/1"])"));
    CHECK(point_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(point_from_json(Json::parse(R"(["0","0"])")), Error);

    Sampler s(1);
    const auto a = sample_automorphism(s, 3);
    CHECK(automorphism_from_json(to_json(a)) == a);
    CHECK_THROWS_AS(automorphism_from_json(Json::parse(R"([["1","2"],["2","4"]])")), Error);

    const RationalMap m(FormTuple{F("x1*x2", 3), F("x0*x2", 3), F("x0*x1", 3)});
    const Json mj = to_json(m);
    CHECK(mj["degree"] == 2);
    CHECK(map_from_json(mj) == m);
    const auto cert = verify_inverse_pair(m, m);
    const auto cj = to_json(cert);
    CHECK(cj["delta"] == 2);
    CHECK(cj["delta_prime"] == 2);
    CHECK(certificate_from_json(cj).phi == cert.phi);
}

TEST_CASE("structured objects round-trip") {
    Sampler s(2);
    const auto frame = sample_automorphism(s, 2);
    const DeJonquieresMap dj(frame, 2, MoebiusData{F("x1", 3), F("x1^2 + x2^2", 3), F("0", 3), F("x2", 3)});
    const auto dj2 = dejonquieres_from_json(to_json(dj));
    CHECK(dj_forward(dj2) == dj_forward(dj));

    const Monoid mo(frame, 2, F("x1", 3), F("x1*x2 - x2^2", 3));
    const auto mo2 = monoid_from_json(to_json(mo));
    CHECK(mo2.equation() == mo.equation());
    CHECK(to_json(mo)["vertex"] == to_json(mo.vertex()));

    const BiVertexMonoid w(LinearAutomorphism::identity(3), 2,
                           BiVertexParts{F("x0*x1", 4), F("0", 4), F("0", 4), F("1", 4)});
    CHECK(bivertex_from_json(to_json(w)).equation() == w.equation());

    const ParamScheme z{3, {SchemeComponent{FormTuple{F("x0^3", 2), F("x0^2*x1", 2), F("x0*x1^2", 2), F("x1^3", 2)}}}};
    const auto z2 = scheme_from_json(to_json(z));
    REQUIRE(z2.components.size() == 1);
    CHECK(z2.components[0].param == z.components[0].param);

    const auto sys = monoid_system(z, ProjectivePoint{0, 1, 0, 0}, 3);
    const Json sj = to_json(sys);
    CHECK(sj["dimension"] == 5);
    CHECK(sj["basis"].size() == 6);
    std::size_t unknowns = 0;
    for (const auto& b : sj["coefficient_layout"]) unknowns += b["monomials"].size();
    CHECK(unknowns == sys.unknowns());
}

TEST_CASE("chains round-trip byte for byte and stay verifiable") {
    Sampler s(7);
    const std::vector<ProjectivePoint> z{ProjectivePoint{1, 0, 0}, ProjectivePoint{0, 1, 0}, ProjectivePoint{1, 1, 1}};
    const std::vector<ProjectivePoint> zp{ProjectivePoint{1, 2, 3}, ProjectivePoint{3, 1, 2}, ProjectivePoint{2, 3, 1}};
    const auto chain = points_equivalence(z, zp, s);
    const Json j = to_json(chain);
    const auto back = chain_from_json(j);
    CHECK(dump(to_json(back)) == dump(j));
    CHECK(verify_chain(back).ok);

    Json broken = j;
    broken["steps"][0]["certificate"]["delta"] = 7;
    CHECK_FALSE(verify_chain(chain_from_json(broken)).ok);
    broken = j;
    broken["format"] = "something";
    CHECK_THROWS_AS(chain_from_json(broken), Error);
    broken = j;
    broken["steps"][0]["kind"] = "mystery";
    CHECK_THROWS_AS(chain_from_json(broken), Error);
}
