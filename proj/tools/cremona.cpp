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

// Command-line front end. Artifacts go to --out when given and to stdout
// otherwise; a one-line summary goes to stdout alongside --out.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cremona/dejonquieres.hpp"
#include "cremona/equivalence.hpp"
#include "cremona/error.hpp"
#include "cremona/interpolation.hpp"
#include "cremona/monoid.hpp"
#include "cremona/serialize.hpp"

using namespace cremona;

namespace {

struct Common {
    std::optional<std::uint64_t> seed;
    unsigned max_degree = 10;
    unsigned samples = 25;
    std::string out;
};

Json job(const std::string& command, const Common& c) {
    Json j{{"command", command}};
    if (c.seed) j["seed"] = *c.seed;
    j["max_degree"] = c.max_degree;
    j["samples"] = c.samples;
    return j;
}

Sampler sampler_for(const Common& c) {
    if (!c.seed) throw Error(ErrorCode::Parse, "--seed is required for this command");
    return Sampler(*c.seed);
}

SearchOptions search_options(const Common& c) {
    SearchOptions o;
    o.max_degree = c.max_degree;
    o.samples = c.samples;
    return o;
}

// Writes the artifact; returns true when it went to a file.
bool emit(const Common& c, const Json& artifact) {
    if (c.out.empty()) {
        std::cout << dump(artifact);
        return false;
    }
    write_json_file(c.out, artifact);
    return true;
}

ProjectivePoint point_arg(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorCode::Parse, "cannot read point '" + text + "'");
    }
    return point_from_json(j);
}

std::vector<ProjectivePoint> points_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
        throw Error(ErrorCode::Parse, std::string("expected an array '") + key + "'");
    }
    std::vector<ProjectivePoint> out;
    for (const auto& p : j[key]) out.push_back(point_from_json(p));
    return out;
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
    return j[key];
}

Json pair_json(const CertifiedPair& m) {
    return Json{{"forward", to_json(m.forward)}, {"inverse", to_json(m.inverse)}, {"certificate", to_json(m.certificate)}};
}

void print_points(const ParamScheme& z, const std::vector<std::vector<Vector>>& samples) {
    for (std::size_t j = 0; j < z.components.size(); ++j) {
        const auto p = to_point(z.components[j].param.eval(samples[j].front()));
        std::cout << "component " << j << " -> " << (p ? p->to_string() : std::string("?")) << "\n";
    }
}

int run_points_equiv(const Common& c, const std::string& in) {
    const Json j = read_json_file(in);
    const auto src = points_field(j, "source");
    const auto dst = points_field(j, "target");
    Sampler s = sampler_for(c);
    const CremonaChain chain = points_equivalence(src, dst, s, search_options(c));
    Json out = to_json(chain);
    out["job"] = job("points-equiv", c);
    if (emit(c, out)) std::cout << "OK: " << chain.steps.size() << " steps\n";
    return 0;
}

int run_pipeline(const Common& c, const std::string& source, const std::string& target) {
    const ParamScheme x = scheme_from_json(read_json_file(source));
    const ParamScheme y = scheme_from_json(read_json_file(target));
    Sampler s = sampler_for(c);
    const CremonaChain chain = pipeline_equivalence(x, y, s, search_options(c));
    Json out = to_json(chain);
    out["job"] = job("pipeline-equiv", c);
    if (emit(c, out)) {
        std::cout << "OK: " << chain.steps.size() << " steps, degrees";
        for (const auto& st : chain.steps) std::cout << " " << st.map.forward.degree();
        std::cout << "\n";
    }
    return 0;
}

int run_contract(const Common& c, const std::string& scheme) {
    const ParamScheme z = scheme_from_json(read_json_file(scheme));
    Sampler s = sampler_for(c);
    const CremonaChain chain = contract_union(z, s, search_options(c));
    Json out = to_json(chain);
    out["job"] = job("contract", c);
    emit(c, out);
    if (!c.out.empty()) {
        print_points(chain.stages.back(), chain.samples);
        std::cout << z.components.size() << " distinct points\n";
    }
    return 0;
}

int run_monoid_dim(const Common& c, const std::string& scheme, const std::string& vertex, unsigned d,
                   const std::string& second) {
    const ParamScheme z = scheme_from_json(read_json_file(scheme));
    const MonoidSystem sys = second.empty() ? monoid_system(z, point_arg(vertex), d)
                                            : bivertex_system(z, point_arg(vertex), point_arg(second), d);
    std::cout << system_dimension(sys) << "\n";
    if (!c.out.empty()) write_json_file(c.out, to_json(sys));
    return 0;
}

int run_monoid_find(const Common& c, const std::string& scheme, const std::string& vertex, unsigned d,
                    const std::string& second) {
    const ParamScheme z = scheme_from_json(read_json_file(scheme));
    Sampler s = sampler_for(c);
    const MonoidSystem sys = second.empty() ? monoid_system(z, point_arg(vertex), d)
                                            : bivertex_system(z, point_arg(vertex), point_arg(second), d);
    if (system_dimension(sys) < 0) throw Error(ErrorCode::NoSolutionAtDegree, "no monoid of this degree contains the scheme");
    const PickedMember m = pick_cone_avoiding(sys, z, s);
    Json out{{"job", job("monoid-find", c)},
             {"system", to_json(sys)},
             {"coefficients", Json::array()},
             {"equation", to_json(m.equation)}};
    for (const auto& x : m.coefficients) out["coefficients"].push_back(to_json(x));
    out["monoid"] = second.empty() ? to_json(assemble_monoid(sys, m.coefficients))
                                   : to_json(assemble_bivertex(sys, m.coefficients));
    if (emit(c, out)) std::cout << "equation: " << m.equation.to_string() << "\n";
    return 0;
}

int run_dejonquieres(const Common& c, const std::string& in) {
    const Json j = read_json_file(in);
    std::optional<DeJonquieresMap> m;
    Json out{{"job", job("dejonquieres", c)}};
    if (j.is_object() && j.contains("frame")) {
        m = dejonquieres_from_json(j);
    } else {
        const ProjectivePoint vertex = point_from_json(need(j, "vertex"));
        std::vector<PointMove> moves;
        if (!need(j, "moves").is_array()) throw Error(ErrorCode::Parse, "'moves' must be an array");
        for (const auto& mv : j["moves"]) moves.push_back({point_from_json(need(mv, "from")), point_from_json(need(mv, "to"))});
        const std::vector<ProjectivePoint> fixed = j.contains("fixed") ? points_field(j, "fixed") : std::vector<ProjectivePoint>{};
        Sampler s = sampler_for(c);
        m = dj_solve(vertex, moves, fixed, s, c.max_degree);
    }
    const CertifiedPair pair = dj_certified(*m);
    out["map"] = to_json(*m);
    out.update(pair_json(pair));
    if (emit(c, out)) std::cout << "OK: degree " << m->degree() << "\n";
    return 0;
}

int run_quadro_quadric(const Common& c, const std::string& in, std::size_t generic_dim) {
    Json out{{"job", job("quadro-quadric", c)}};
    if (in.empty()) {
        if (generic_dim < 2) throw Error(ErrorCode::Parse, "give --in or --generic r with r >= 2");
        Sampler s = sampler_for(c);
        out.update(pair_json(generic_quadro_quadric(generic_dim, s)));
    } else {
        const Json j = read_json_file(in);
        const ProjectivePoint p = point_from_json(need(j, "point"));
        std::vector<ProjectivePoint> plane = points_field(j, "plane");
        const HomogeneousForm q = form_from_json(need(j, "quadric"), p.dim(), 2);
        const QuadroQuadric qq = quadro_quadric(p, LinearSubspace(std::move(plane)), q);
        Json basis = Json::array();
        for (const auto& f : qq.basis) basis.push_back(to_json(f));
        out["basis"] = std::move(basis);
        out.update(pair_json(qq.map));
    }
    if (emit(c, out)) std::cout << "OK\n";
    return 0;
}

Monoid monoid_input(const Json& j) {
    if (j.contains("f_low")) return monoid_from_json(j);
    const ProjectivePoint v = point_from_json(need(j, "vertex"));
    return monoid_from_equation(form_from_json(need(j, "equation"), v.dim() + 1), v);
}

int run_stereographic(const Common& c, const std::string& in) {
    const Monoid m = monoid_input(read_json_file(in));
    const Stereographic st = stereographic(m);
    const Json out{{"monoid", to_json(m)}, {"proj", to_json(st.proj)}, {"inv", to_json(st.inv)}};
    if (emit(c, out)) std::cout << "OK\n";
    return 0;
}

int run_double_projection(const Common& c, const std::string& in) {
    const Json j = read_json_file(in);
    std::optional<BiVertexMonoid> w;
    if (j.contains("F_d")) {
        w = bivertex_from_json(j);
    } else {
        LinearAutomorphism frame = LinearAutomorphism::identity(0);
        if (j.contains("frame")) {
            frame = automorphism_from_json(j["frame"]);
        } else {
            const Json& eq = need(j, "equation");
            if (!j.contains("ambient_dim") && eq.is_string()) {
                throw Error(ErrorCode::Parse, "a text equation needs 'ambient_dim' or 'frame'");
            }
            const std::size_t r = eq.is_string() ? need(j, "ambient_dim").get<std::size_t>() : form_from_json(eq).nvars() - 1;
            frame = LinearAutomorphism::identity(r);
        }
        w = bivertex_from_equation(form_from_json(need(j, "equation"), frame.dim() + 1), frame);
    }
    const CertifiedPair pair = double_projection_certified(*w);
    Json out{{"monoid", to_json(*w)}};
    out.update(pair_json(pair));
    if (emit(c, out)) std::cout << "OK: degree " << pair.forward.degree() << "\n";
    return 0;
}

int run_compose(const Common& c, const std::vector<std::string>& files) {
    std::optional<RationalMap> fwd;
    std::optional<RationalMap> inv;
    bool have_inverses = true;
    for (const auto& path : files) {
        const Json j = read_json_file(path);
        const RationalMap f = map_from_json(j.contains("forward") ? j["forward"] : j);
        fwd = fwd ? map_compose(f, *fwd) : f;
        if (j.contains("inverse") && have_inverses) {
            const RationalMap g = map_from_json(j["inverse"]);
            inv = inv ? map_compose(*inv, g) : g;
        } else {
            have_inverses = false;
        }
    }
    Json out;
    if (have_inverses) {
        out = pair_json(certify(*fwd, *inv));
    } else {
        out = Json{{"forward", to_json(*fwd)}};
    }
    if (emit(c, out)) std::cout << "OK: degree " << fwd->degree() << "\n";
    return 0;
}

int run_verify(const std::string& path) {
    const CremonaChain chain = chain_from_json(read_json_file(path));
    const VerifyReport rep = verify_chain(chain);
    if (rep.ok) {
        std::cout << "OK: " << chain.steps.size() << " steps verified\n";
        return 0;
    }
    std::cout << "FAILED\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    return exit_status(ErrorCode::VerificationFailed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Cremona transformations: construction and verification"};
    app.require_subcommand(1);
    Common c;
    std::function<int()> action;

    auto common = [&](CLI::App* sub, bool randomized) {
        if (randomized) sub->add_option("--seed", c.seed, "seed for every random choice");
        sub->add_option("--max-degree", c.max_degree, "degree cap for searches")->capture_default_str();
        sub->add_option("--samples", c.samples, "parameter samples per component")->capture_default_str();
        sub->add_option("--out", c.out, "output file (default: stdout)");
    };

    std::string in, source, target, scheme, vertex, second, chain;
    std::vector<std::string> maps;
    unsigned degree = 0;
    std::size_t generic_dim = 0;

    auto* pe = app.add_subcommand("points-equiv", "chain moving one point list onto another");
    common(pe, true);
    pe->add_option("--in", in, "JSON with 'source' and 'target' point lists")->required();
    pe->callback([&] { action = [&] { return run_points_equiv(c, in); }; });

    auto* pipe = app.add_subcommand("pipeline-equiv", "chain of double projections between birational schemes");
    common(pipe, true);
    pipe->add_option("--source", source, "scheme file")->required();
    pipe->add_option("--target", target, "scheme file, components matched with the source")->required();
    pipe->callback([&] { action = [&] { return run_pipeline(c, source, target); }; });

    auto* con = app.add_subcommand("contract", "chain contracting every component to a point");
    common(con, true);
    con->add_option("--scheme", scheme, "scheme file")->required();
    con->callback([&] { action = [&] { return run_contract(c, scheme); }; });

    auto* md = app.add_subcommand("monoid-dim", "dimension of the monoids of degree d containing a scheme");
    common(md, false);
    md->add_option("--scheme", scheme, "scheme file")->required();
    md->add_option("--vertex", vertex, "vertex, e.g. \"[0,1,0,0]\"")->required();
    md->add_option("--second", second, "second vertex for bi-vertex monoids");
    md->add_option("--d", degree, "degree")->required();
    md->callback([&] { action = [&] { return run_monoid_dim(c, scheme, vertex, degree, second); }; });

    auto* mf = app.add_subcommand("monoid-find", "a monoid containing a scheme and avoiding its cones");
    common(mf, true);
    mf->add_option("--scheme", scheme, "scheme file")->required();
    mf->add_option("--vertex", vertex, "vertex, e.g. \"[0,1,0,0]\"")->required();
    mf->add_option("--second", second, "second vertex for bi-vertex monoids");
    mf->add_option("--d", degree, "degree")->required();
    mf->callback([&] { action = [&] { return run_monoid_find(c, scheme, vertex, degree, second); }; });

    auto* dj = app.add_subcommand("dejonquieres", "de Jonquieres map from data or from point constraints");
    common(dj, true);
    dj->add_option("--in", in, "map data or {vertex, moves, fixed}")->required();
    dj->callback([&] { action = [&] { return run_dejonquieres(c, in); }; });

    auto* qq = app.add_subcommand("quadro-quadric", "quadro-quadric map through a point and a quadric");
    common(qq, true);
    qq->add_option("--in", in, "{point, plane, quadric}");
    qq->add_option("--generic", generic_dim, "random map of P^r instead");
    qq->callback([&] { action = [&] { return run_quadro_quadric(c, in, generic_dim); }; });

    auto* st = app.add_subcommand("stereographic", "projection of a monoid from its vertex and its inverse");
    common(st, false);
    st->add_option("--in", in, "monoid data or {equation, vertex}")->required();
    st->callback([&] { action = [&] { return run_stereographic(c, in); }; });

    auto* dp = app.add_subcommand("double-projection", "Cremona map of a bi-vertex monoid");
    common(dp, false);
    dp->add_option("--in", in, "bi-vertex data or {equation, frame}")->required();
    dp->callback([&] { action = [&] { return run_double_projection(c, in); }; });

    auto* cmp = app.add_subcommand("compose", "composite of maps, applied in the given order");
    common(cmp, false);
    cmp->add_option("--maps", maps, "map or certified pair files")->required();
    cmp->callback([&] { action = [&] { return run_compose(c, maps); }; });

    auto* ver = app.add_subcommand("verify", "re-check a chain file without searching");
    ver->add_option("--chain", chain, "chain file")->required();
    ver->callback([&] { action = [&] { return run_verify(chain); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_status(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
