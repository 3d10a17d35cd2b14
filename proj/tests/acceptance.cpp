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

// Acceptance run: one PASS/FAIL line per criterion, with the measured time
// next to the limit. Artifacts of every criterion are written to a directory
// so that a second run can be compared byte for byte (criterion 10).
//
//   acceptance [output dir]

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/dejonquieres.hpp"
#include "cremona/equivalence.hpp"
#include "cremona/error.hpp"
#include "cremona/interpolation.hpp"
#include "cremona/monoid.hpp"
#include "cremona/serialize.hpp"

using namespace cremona;
namespace fs = std::filesystem;

namespace {

HomogeneousForm F(const char* text, std::size_t nvars) { return parse_form(text, nvars); }

SchemeComponent curve(std::initializer_list<const char*> forms) {
    std::vector<HomogeneousForm> fs;
    for (const char* f : forms) fs.push_back(F(f, 2));
    return SchemeComponent{FormTuple(std::move(fs))};
}

ParamScheme scheme3(std::vector<SchemeComponent> cs) { return ParamScheme{3, std::move(cs)}; }

// Failures collected by a criterion; empty means pass.
struct Outcome {
    std::vector<std::string> problems;
    Json artifact = Json::object();

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

bool proportional(const HomogeneousForm& a, const HomogeneousForm& b) { return image_rank(FormTuple{a, b}) == 1; }

bool same_span(const std::vector<HomogeneousForm>& a, const std::vector<HomogeneousForm>& b) {
    std::vector<HomogeneousForm> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto ra = image_rank(FormTuple(a));
    return ra == image_rank(FormTuple(b)) && ra == image_rank(FormTuple(both));
}

HomogeneousForm random_in(Sampler& s, std::size_t n, int degree, const std::vector<std::size_t>& vars) {
    if (degree < 0) return HomogeneousForm(n, 0);
    HomogeneousForm f(n, static_cast<unsigned>(degree));
    for (const auto& e : monomial_basis(n, vars, static_cast<unsigned>(degree))) {
        const auto c = s.next_int(4);
        if (c != 0) f += HomogeneousForm::monomial(e, c);
    }
    return f;
}

HomogeneousForm random_nonzero_in(Sampler& s, std::size_t n, int degree, const std::vector<std::size_t>& vars) {
    while (true) {
        auto f = random_in(s, n, degree, vars);
        if (!f.is_zero()) return f;
    }
}

std::vector<std::size_t> tail_vars(std::size_t n) {
    std::vector<std::size_t> v;
    for (std::size_t i = 1; i < n; ++i) v.push_back(i);
    return v;
}

// Raw evaluation of a tuple at a point; nullopt when every entry vanishes.
std::optional<ProjectivePoint> eval_at(const RationalMap& m, const Vector& x) { return to_point(m.tuple().eval(x)); }

std::optional<ProjectivePoint> push(const CremonaChain& c, ProjectivePoint p) {
    for (const auto& st : c.steps) {
        auto q = eval_at(st.map.forward, p.coords());
        if (!q) return std::nullopt;
        p = *q;
    }
    return p;
}

std::optional<ProjectivePoint> pull(const CremonaChain& c, ProjectivePoint p) {
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        auto q = eval_at(it->map.inverse, p.coords());
        if (!q) return std::nullopt;
        p = *q;
    }
    return p;
}

bool certificates_hold(const CremonaChain& c) {
    for (const auto& st : c.steps) {
        if (!certificate_holds(st.map.forward, st.map.inverse, st.map.certificate)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Outcome quadro_quadric_reconstruction() {
    Outcome o;
    const ProjectivePoint p{1, 0, 0, 0};
    const LinearSubspace plane({ProjectivePoint{0, 1, 0, 0}, ProjectivePoint{0, 0, 1, 0}, ProjectivePoint{0, 0, 0, 1}});
    const QuadroQuadric qq = quadro_quadric(p, plane, F("x0*x1 - x2^2", 3));
    const std::vector<HomogeneousForm> expected{F("x0*x1", 4), F("x0*x2", 4), F("x0*x3", 4), F("x1*x2 - x3^2", 4)};
    o.expect(qq.basis.size() == 4, "basis has " + std::to_string(qq.basis.size()) + " forms");
    o.expect(same_span(qq.basis, expected), "basis spans a different space");

    // Normal form with the quadric first; it is its own inverse.
    const RationalMap n(FormTuple{F("x1*x2 - x3^2", 4), F("x0*x1", 4), F("x0*x2", 4), F("x0*x3", 4)});
    const auto cert = verify_inverse_pair(n, n);
    o.expect(cert.phi == F("x0*x1*x2 - x0*x3^2", 4), "normal form certificate is " + cert.phi.to_string());
    o.expect(cert.phi.degree() == 3 && cert.delta * cert.delta_prime - 1 == 3, "wrong certificate degree");
    o.expect(certificate_holds(qq.map.forward, qq.map.inverse, qq.map.certificate), "map certificate fails");
    o.expect(qq.map.certificate.phi.degree() == 3, "map certificate has degree " +
                                                       std::to_string(qq.map.certificate.phi.degree()));
    o.artifact["basis"] = Json::array();
    for (const auto& f : qq.basis) o.artifact["basis"].push_back(to_json(f));
    o.artifact["certificate"] = to_json(qq.map.certificate);
    return o;
}

Outcome dejonquieres_round_trips() {
    Outcome o;
    Sampler s(2002);
    int built = 0;
    int drawn = 0;
    o.artifact["degrees"] = Json::array();
    while (built < 100 && drawn < 1000) {
        const std::size_t r = 2 + drawn % 2;
        const unsigned d = 2 + (drawn / 2) % 3;
        ++drawn;
        const std::size_t n = r + 1;
        const auto tail = tail_vars(n);
        MoebiusData data{random_in(s, n, d - 1, tail), random_in(s, n, d, tail), random_in(s, n, d - 2, tail),
                         random_in(s, n, d - 1, tail)};
        if ((data.F0 * data.G - data.F * data.G0).is_zero()) continue;
        const DeJonquieresMap m(sample_automorphism(s, r), d, data);
        const auto cert = verify_inverse_pair(dj_forward(m), dj_forward(dj_inverse(m)));
        o.expect(cert.phi.degree() == d * d - 1, "map " + std::to_string(built) + ": deg phi = " +
                                                     std::to_string(cert.phi.degree()) + ", d = " + std::to_string(d));
        o.artifact["degrees"].push_back(cert.phi.degree());
        ++built;
    }
    o.expect(built == 100, "only " + std::to_string(built) + " maps with D != 0");
    return o;
}

Outcome stereographic_identities() {
    Outcome o;
    Sampler s(2003);
    o.artifact["inverse_degrees"] = Json::array();
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 2 + trial % 3;
        const unsigned d = 1 + (trial / 3) % 4;
        const std::size_t n = r + 1;
        const auto tail = tail_vars(n);
        const Monoid m(sample_automorphism(s, r), d, random_nonzero_in(s, n, d - 1, tail), random_in(s, n, d, tail));
        const auto st = stereographic(m);
        o.expect(substitute(m.equation(), st.inv.tuple()).is_zero(), "eq o inv != 0 at trial " + std::to_string(trial));
        const FormTuple round = map_compose(st.proj, st.inv).tuple();
        o.expect(tuples_projectively_equal(round, identity_tuple(r)), "proj o inv not ~ id at trial " + std::to_string(trial));
        o.artifact["inverse_degrees"].push_back(st.inv.degree());
    }
    return o;
}

Outcome linearization() {
    Outcome o;
    Sampler s(2004);
    o.artifact["certificate_degrees"] = Json::array();
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r = 2 + trial % 3;
        const unsigned d = 2 + (trial / 3) % 3;
        const std::size_t n = r + 1;
        const auto tail = tail_vars(n);
        const LinearAutomorphism frame = sample_automorphism(s, r);
        const Monoid x(frame, d, random_nonzero_in(s, n, d - 1, tail), random_in(s, n, d, tail));
        const Monoid y(frame, d - 1, random_nonzero_in(s, n, d - 2, tail), random_in(s, n, d - 1, tail));
        if ((x.f_low() * y.f_high() - y.f_low() * x.f_high()).is_zero()) {
            --trial;
            continue;
        }
        const RationalMap lin = monoid_linearize(x, y);
        const auto st = stereographic(x);
        o.expect(substitute(lin[0], st.inv.tuple()).is_zero(), "coordinate 0 survives at trial " + std::to_string(trial));
        const auto pair = monoid_linearize_certified(x, y);
        o.artifact["certificate_degrees"].push_back(pair.certificate.phi.degree());
    }
    return o;
}

ParamScheme twisted_cubic() { return scheme3({curve({"x0^3", "x0^2*x1", "x0*x1^2", "x1^3"})}); }

Outcome monoid_dimensions() {
    Outcome o;
    const ProjectivePoint v{0, 1, 0, 0};
    const int expected[] = {1, 5, 11, 19};
    o.artifact["twisted_cubic"] = Json::array();
    for (unsigned d = 2; d <= 5; ++d) {
        const int dim = system_dimension(monoid_system(twisted_cubic(), v, d));
        o.expect(dim == expected[d - 2], "d = " + std::to_string(d) + ": dimension " + std::to_string(dim));
        o.expect(dim == static_cast<int>(d * d - d - 1), "closed form differs at d = " + std::to_string(d));
        o.artifact["twisted_cubic"].push_back(dim);
    }

    const std::vector<std::pair<std::string, ParamScheme>> schemes{
        {"twisted cubic", twisted_cubic()},
        {"line", scheme3({curve({"x0", "x1", "0", "0"})})},
        {"skew lines", scheme3({curve({"x0", "x1", "0", "0"}), curve({"0", "0", "x0", "x1"})})},
        {"three lines", scheme3({curve({"x0", "x1", "0", "0"}), curve({"x0", "0", "x1", "0"}), curve({"x0", "0", "0", "x1"})})},
        {"conic and line", scheme3({curve({"x0^2", "x0*x1", "x1^2", "0"}), curve({"x0", "0", "x1", "x0 + x1"})})},
        {"points", point_scheme(std::vector<ProjectivePoint>{{1, 2, 3, 4}, {0, 1, 5, -1}, {2, 0, 1, 1}})},
    };
    const std::vector<ProjectivePoint> vertices{{0, 1, 0, 0}, {1, 3, -2, 5}, {2, -1, 7, 1}};
    o.artifact["inequality"] = Json::array();
    for (const auto& [name, z] : schemes) {
        for (const auto& vertex : vertices) {
            for (unsigned d = 2; d <= 5; ++d) {
                std::optional<MonoidSystem> sys;
                try {
                    sys = monoid_system(z, vertex, d);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::VertexOnScheme) throw;
                    break;
                }
                int bound = full_monoid_dimension(3, d);
                for (const auto& c : z.components) {
                    bound -= static_cast<int>(d * (c.arity() == 1 ? 0 : c.degree()) + 1);
                }
                const int dim = system_dimension(*sys);
                o.expect(dim >= bound, name + ", vertex " + vertex.to_string() + ", d = " + std::to_string(d) + ": " +
                                           std::to_string(dim) + " < " + std::to_string(bound));
                o.artifact["inequality"].push_back(Json::array({dim, bound}));
            }
        }
    }
    return o;
}

Outcome double_projection_quadric() {
    Outcome o;
    const auto w = bivertex_from_equation(F("x0*x1 + x2*x3", 4), LinearAutomorphism::identity(3));
    const RationalMap dp = double_projection(w);
    o.expect(dp.tuple() == FormTuple{F("x0*x2", 3), F("x1*x2", 3), F("-x0*x1", 3)}, "map is " + to_json(dp).dump());
    const auto pair = double_projection_certified(w);
    o.expect(certificate_holds(pair.forward, pair.inverse, pair.certificate), "certificate fails");
    // The map is an involution up to the factor -x0 x1 x2.
    o.expect(tuples_projectively_equal(map_compose(dp, dp).tuple(), identity_tuple(3)), "f o f not ~ id");
    o.artifact = Json{{"forward", to_json(pair.forward)},
                      {"inverse", to_json(pair.inverse)},
                      {"certificate", to_json(pair.certificate)}};
    return o;
}

std::vector<ProjectivePoint> distinct_points(Sampler& s, std::size_t r, std::size_t count) {
    std::vector<ProjectivePoint> out;
    while (out.size() < count) {
        auto p = to_point(s.next_vector(r + 1, 6));
        if (!p) continue;
        bool fresh = true;
        for (const auto& q : out) fresh = fresh && !(q == *p);
        if (fresh) out.push_back(*p);
    }
    return out;
}

Outcome point_sets(const fs::path& dir) {
    Outcome o;
    Sampler s(2007);
    o.artifact["chains"] = Json::array();
    for (int inst = 0; inst < 20; ++inst) {
        const std::size_t r = 2 + inst % 2;
        const auto src = distinct_points(s, r, 5);
        const auto dst = distinct_points(s, r, 5);
        const std::string tag = "instance " + std::to_string(inst);
        const CremonaChain chain = points_equivalence(src, dst, s);
        for (std::size_t i = 0; i < 5; ++i) {
            const auto image = push(chain, src[i]);
            o.expect(image && *image == dst[i], tag + ": point " + std::to_string(i) + " lands elsewhere");
            const auto back = pull(chain, dst[i]);
            o.expect(back && *back == src[i], tag + ": point " + std::to_string(i) + " does not come back");
        }
        const fs::path file = dir / ("points_" + std::to_string(inst) + ".json");
        write_json_file(file.string(), to_json(chain));
        const VerifyReport rep = verify_chain(chain_from_json(read_json_file(file.string())));
        o.expect(rep.ok, tag + ": verify fails" + (rep.ok ? "" : ": " + rep.failures.front()));
        o.artifact["chains"].push_back(file.filename().string());
    }
    return o;
}

bool on_twisted_cubic(const ProjectivePoint& p) {
    const auto& x = p.coords();
    return x[0] * x[2] == x[1] * x[1] && x[1] * x[3] == x[2] * x[2] && x[0] * x[3] == x[1] * x[2];
}

bool zero_at(const ProjectivePoint& p, std::initializer_list<std::size_t> idx) {
    for (auto i : idx) {
        if (p[i] != 0) return false;
    }
    return true;
}

using OnComponent = std::function<bool(std::size_t, const ProjectivePoint&)>;

// Fresh parameter values (not the chain's own samples) pushed forward land
// on the matching target component, and target points pulled back land on
// the source. Points where some step is undefined are skipped, but most
// must survive.
void check_images(Outcome& o, const CremonaChain& c, const ParamScheme& x, const ParamScheme& y, const OnComponent& on_x,
                  const OnComponent& on_y, std::uint64_t seed) {
    Sampler s(seed);
    for (std::size_t j = 0; j < x.components.size(); ++j) {
        int good = 0;
        for (int k = 0; k < 20; ++k) {
            const Vector t{Rational(s.next_nonzero(50)), Rational(s.next_nonzero(50))};
            const auto px = to_point(x.components[j].param.eval(t));
            const auto py = to_point(y.components[j].param.eval(t));
            if (!px || !py) continue;
            const auto fwd = push(c, *px);
            const auto bwd = pull(c, *py);
            if (fwd) o.expect(on_y(j, *fwd), "component " + std::to_string(j) + ": image " + fwd->to_string() + " off target");
            if (bwd) o.expect(on_x(j, *bwd), "component " + std::to_string(j) + ": preimage " + bwd->to_string() + " off source");
            good += (fwd && bwd) ? 1 : 0;
        }
        o.expect(good >= 15, "component " + std::to_string(j) + ": only " + std::to_string(good) + " of 20 samples defined");
    }
}

Outcome pipeline_instance(const ParamScheme& x, const ParamScheme& y, const OnComponent& on_x, const OnComponent& on_y,
                          std::uint64_t seed) {
    Outcome o;
    Sampler s(seed);
    try {
        const CremonaChain chain = pipeline_equivalence(x, y, s);
        o.expect(certificates_hold(chain), "a step certificate fails");
        const VerifyReport rep = verify_chain(chain);
        o.expect(rep.ok, rep.ok ? "" : "verify: " + rep.failures.front());
        check_images(o, chain, x, y, on_x, on_y, seed + 1);
        o.artifact = to_json(chain);
    } catch (const Error& e) {
        o.expect(false, e.what());
    }
    return o;
}

Outcome pipeline_cubic_line() {
    const ParamScheme x = twisted_cubic();
    const ParamScheme y = scheme3({curve({"x0", "x1", "0", "0"})});
    return pipeline_instance(
        x, y, [](std::size_t, const ProjectivePoint& p) { return on_twisted_cubic(p); },
        [](std::size_t, const ProjectivePoint& p) { return zero_at(p, {2, 3}); }, 2081);
}

Outcome pipeline_skew_concurrent() {
    const ParamScheme x = scheme3({curve({"x0", "x1", "0", "0"}), curve({"0", "0", "x0", "x1"})});
    const ParamScheme y = scheme3({curve({"x0", "x1", "0", "0"}), curve({"x0", "0", "x1", "0"})});
    return pipeline_instance(
        x, y, [](std::size_t j, const ProjectivePoint& p) { return j == 0 ? zero_at(p, {2, 3}) : zero_at(p, {0, 1}); },
        [](std::size_t j, const ProjectivePoint& p) { return j == 0 ? zero_at(p, {2, 3}) : zero_at(p, {1, 3}); }, 2082);
}

Outcome contraction() {
    Outcome o;
    Sampler s(2009);
    const ParamScheme z = scheme3({curve({"x0", "x1", "0", "0"}), curve({"x0", "0", "x1", "0"}), curve({"x0", "0", "0", "x1"})});
    try {
        const CremonaChain chain = contract_union(z, s);
        const VerifyReport rep = verify_chain(chain);
        o.expect(rep.ok, rep.ok ? "" : "verify: " + rep.failures.front());
        o.expect(certificates_hold(chain), "a step certificate fails");
        std::vector<ProjectivePoint> images;
        for (std::size_t j = 0; j < z.components.size(); ++j) {
            FormTuple t = z.components[j].param;
            for (const auto& st : chain.steps) t = compose_tuple(st.map.forward, t);
            o.expect(image_rank(t) == 1, "component " + std::to_string(j) + " has image rank " +
                                             std::to_string(image_rank(t)));
            const auto p = to_point(t.eval(Vector{3, -7}));
            o.expect(p.has_value(), "component " + std::to_string(j) + " maps to nothing");
            if (p) images.push_back(*p);
        }
        for (std::size_t a = 0; a < images.size(); ++a) {
            for (std::size_t b = a + 1; b < images.size(); ++b) {
                o.expect(!(images[a] == images[b]), "components " + std::to_string(a) + " and " + std::to_string(b) +
                                                        " meet");
            }
        }
        o.artifact = to_json(chain);
    } catch (const Error& e) {
        o.expect(false, e.what());
    }
    return o;
}

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<Outcome(const fs::path&)> run;
};

std::vector<Criterion> criteria() {
    auto plain = [](Outcome (*f)()) { return [f](const fs::path&) { return f(); }; };
    return {
        {1, "quadro-quadric reconstruction", 1, plain(quadro_quadric_reconstruction)},
        {2, "de Jonquieres round trips (100 maps)", 30, plain(dejonquieres_round_trips)},
        {3, "stereographic identities (50 monoids)", 30, plain(stereographic_identities)},
        {4, "linearization (20 pairs)", 20, plain(linearization)},
        {5, "monoid dimensions", 60, plain(monoid_dimensions)},
        {6, "double projection of x0x1 + x2x3", 1, plain(double_projection_quadric)},
        {7, "point sets (20 instances, s = 5)", 120, point_sets},
        {8, "pipeline: twisted cubic <-> line", 600, plain(pipeline_cubic_line)},
        {8, "pipeline: skew lines <-> concurrent lines", 600, plain(pipeline_skew_concurrent)},
        {9, "contraction of three concurrent lines", 120, plain(contraction)},
    };
}

// Runs every criterion once into dir. Returns the number of failures.
int run_all(const fs::path& dir, bool report) {
    fs::create_directories(dir);
    int failures = 0;
    char part = 'a';
    int last = 0;
    for (const auto& c : criteria()) {
        part = c.number == last ? static_cast<char>(part + 1) : 'a';
        const bool split = c.number == 8;
        last = c.number;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(dir);
        } catch (const std::exception& e) {
            o.expect(false, std::string("unexpected error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) o.expect(false, "time limit exceeded");
        std::string name = std::to_string(c.number);
        if (split) name += part;
        write_json_file((dir / ("criterion_" + name + ".json")).string(), o.artifact);
        if (!o.problems.empty()) ++failures;
        if (report) {
            std::ostringstream line;
            line << (o.problems.empty() ? "PASS" : "FAIL") << "  criterion " << name << ": " << c.title << " ["
                 << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds
                 << " s]";
            if (!o.problems.empty()) line << " -- " << o.problems.front();
            std::cout << line.str() << std::endl;
        }
    }
    return failures;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path base = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
    fs::remove_all(base);
    int failures = run_all(base / "first", true);

    // Criterion 10: a second run with the same seeds writes the same bytes.
    const auto t0 = std::chrono::steady_clock::now();
    run_all(base / "second", false);
    std::vector<std::string> differing;
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(base / "first")) {
        const fs::path other = base / "second" / entry.path().filename();
        ++compared;
        if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) differing.push_back(entry.path().filename().string());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool same = differing.empty() && compared > 0;
    std::cout << (same ? "PASS" : "FAIL") << "  criterion 10: determinism (" << compared << " files byte-identical) ["
              << std::fixed << std::setprecision(2) << secs << " s]";
    if (!same) std::cout << " -- differs: " << (differing.empty() ? std::string("no files") : differing.front());
    std::cout << std::endl;
    if (!same) ++failures;
    return failures == 0 ? 0 : 1;
}
