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

#include "cremona/serialize.hpp"

#include <fstream>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object with '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        bad(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
    return v;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array of rationals");
    Vector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Exponents exponents_from_json(const Json& j) {
    if (!j.is_array()) bad("exponents must be an array");
    Exponents e;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) bad("exponents must be nonnegative integers");
        e.push_back(x.get<unsigned>());
    }
    return e;
}

Json forms_to_json(const FormTuple& t) {
    Json out = Json::array();
    for (const auto& f : t) out.push_back(to_json(f));
    return out;
}

// Text entries need nvars; a textual "0" takes the degree of the others.
FormTuple tuple_from_json(const Json& j, std::optional<std::size_t> nvars = {}, std::optional<unsigned> degree = {}) {
    if (!j.is_array() || j.empty()) bad("expected a nonempty array of forms");
    if (nvars && !degree) {
        for (const auto& f : j) {
            if (f.is_string() && f.get<std::string>() != "0") {
                degree = form_from_json(f, *nvars).degree();
                break;
            }
            if (f.is_object()) {
                degree = static_cast<unsigned>(size_field(f, "degree"));
                break;
            }
        }
    }
    std::vector<HomogeneousForm> forms;
    for (const auto& f : j) forms.push_back(nvars ? form_from_json(f, *nvars, degree) : form_from_json(f));
    try {
        return FormTuple(std::move(forms));
    } catch (const Error& e) {
        bad(std::string("bad form tuple: ") + e.what());
    }
}

// Construction errors from the core types count as malformed input here.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        bad(std::string(what) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        bad(std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
    bad("rational must be a \"p/q\" string");
}

Json to_json(const HomogeneousForm& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
    }
    return Json{{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

HomogeneousForm form_from_json(const Json& j) {
    return guarded("form", [&] {
        const std::size_t n = size_field(j, "nvars");
        const auto d = static_cast<unsigned>(size_field(j, "degree"));
        HomogeneousForm f(n, d);
        for (const auto& t : array_field(j, "terms")) {
            const Exponents e = exponents_from_json(field(t, "exps"));
            if (e.size() != n) bad("term has " + std::to_string(e.size()) + " exponents, expected " + std::to_string(n));
            if (total_degree(e) != d) bad("term of degree " + std::to_string(total_degree(e)) + " in a form of degree " +
                                          std::to_string(d));
            const Rational c = rational_from_json(field(t, "coeff"));
            if (c == 0) continue;
            if (f.coefficient(e) != 0) bad("repeated monomial in a form");
            f += HomogeneousForm::monomial(e, c);
        }
        return f;
    });
}

HomogeneousForm form_from_json(const Json& j, std::size_t nvars, std::optional<unsigned> degree) {
    if (!j.is_string()) {
        HomogeneousForm f = form_from_json(j);
        if (f.nvars() != nvars) bad("form over " + std::to_string(f.nvars()) + " variables, expected " + std::to_string(nvars));
        return f;
    }
    return guarded("form", [&] { return parse_form(j.get<std::string>(), nvars, degree); });
}

Json to_json(const ProjectivePoint& p) { return vector_to_json(p.coords()); }

ProjectivePoint point_from_json(const Json& j) {
    return guarded("point", [&] {
        Vector v = vector_from_json(j);
        if (v.empty()) bad("empty point");
        return ProjectivePoint(std::move(v));
    });
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) {
        rows.push_back(vector_from_json(r));
        if (rows.back().size() != rows.front().size()) bad("ragged matrix");
    }
    return Matrix::from_rows(rows);
}

Json to_json(const LinearAutomorphism& a) { return to_json(a.matrix()); }

LinearAutomorphism automorphism_from_json(const Json& j) {
    return guarded("frame", [&] {
        Matrix m = matrix_from_json(j);
        if (m.rows() != m.cols()) bad("frame must be square");
        return LinearAutomorphism(std::move(m));
    });
}

Json to_json(const RationalMap& m) { return Json{{"degree", m.degree()}, {"forms", forms_to_json(m.tuple())}}; }

RationalMap map_from_json(const Json& j) {
    return guarded("map", [&] {
        RationalMap m(tuple_from_json(field(j, "forms")));
        if (size_field(j, "degree") != m.degree()) bad("map degree disagrees with its forms");
        return m;
    });
}

Json to_json(const InverseCertificate& c) {
    return Json{{"phi", to_json(c.phi)}, {"delta", c.delta}, {"delta_prime", c.delta_prime}};
}

InverseCertificate certificate_from_json(const Json& j) {
    return guarded("certificate", [&] {
        return InverseCertificate{form_from_json(field(j, "phi")), static_cast<unsigned>(size_field(j, "delta")),
                                  static_cast<unsigned>(size_field(j, "delta_prime"))};
    });
}

Json to_json(const ParamScheme& z) {
    Json comps = Json::array();
    for (const auto& c : z.components) {
        comps.push_back(Json{{"arity", c.arity()}, {"degree", c.degree()}, {"forms", forms_to_json(c.param)}});
    }
    return Json{{"ambient_dim", z.ambient_dim}, {"components", std::move(comps)}};
}

ParamScheme scheme_from_json(const Json& j) {
    return guarded("scheme", [&] {
        ParamScheme z{size_field(j, "ambient_dim"), {}};
        for (const auto& c : array_field(j, "components")) {
            std::optional<std::size_t> arity;
            std::optional<unsigned> degree;
            if (c.contains("arity")) arity = size_field(c, "arity");
            if (c.contains("degree")) degree = static_cast<unsigned>(size_field(c, "degree"));
            SchemeComponent comp{tuple_from_json(field(c, "forms"), arity, degree)};
            if (c.contains("arity") && size_field(c, "arity") != comp.arity()) bad("component arity disagrees with its forms");
            z.components.push_back(std::move(comp));
        }
        z.validate();
        return z;
    });
}

Json to_json(const DeJonquieresMap& m) {
    const auto& d = m.data();
    return Json{{"frame", to_json(m.frame())}, {"degree", m.degree()}, {"F0", to_json(d.F0)},
                {"G0", to_json(d.G0)},          {"F", to_json(d.F)},        {"G", to_json(d.G)}};
}

DeJonquieresMap dejonquieres_from_json(const Json& j) {
    return guarded("de Jonquieres map", [&] {
        return DeJonquieresMap(automorphism_from_json(field(j, "frame")), static_cast<unsigned>(size_field(j, "degree")),
                               MoebiusData{form_from_json(field(j, "F0")), form_from_json(field(j, "G0")),
                                           form_from_json(field(j, "F")), form_from_json(field(j, "G"))});
    });
}

Json to_json(const Monoid& m) {
    return Json{{"vertex", to_json(m.vertex())}, {"frame", to_json(m.frame())}, {"degree", m.degree()},
                {"f_low", to_json(m.f_low())},   {"f_high", to_json(m.f_high())}};
}

Monoid monoid_from_json(const Json& j) {
    return guarded("monoid", [&] {
        return Monoid(automorphism_from_json(field(j, "frame")), static_cast<unsigned>(size_field(j, "degree")),
                      form_from_json(field(j, "f_low")), form_from_json(field(j, "f_high")));
    });
}

Json to_json(const BiVertexMonoid& w) {
    const auto& p = w.parts();
    return Json{{"frame", to_json(w.frame())}, {"degree", w.degree()},     {"F_d", to_json(p.Fd)},
                {"G_{d-1}", to_json(p.Gd1)},   {"F_{d-1}", to_json(p.Fd1)}, {"F_{d-2}", to_json(p.Fd2)}};
}

BiVertexMonoid bivertex_from_json(const Json& j) {
    return guarded("bi-vertex monoid", [&] {
        return BiVertexMonoid(automorphism_from_json(field(j, "frame")), static_cast<unsigned>(size_field(j, "degree")),
                              BiVertexParts{form_from_json(field(j, "F_d")), form_from_json(field(j, "G_{d-1}")),
                                            form_from_json(field(j, "F_{d-1}")), form_from_json(field(j, "F_{d-2}"))});
    });
}

Json to_json(const MonoidSystem& s) {
    Json layout = Json::array();
    for (const auto& b : s.layout) {
        layout.push_back(Json{{"name", b.name}, {"degree", b.degree}, {"multiplier", b.multiplier}, {"monomials", b.monomials}});
    }
    Json basis = Json::array();
    for (const auto& v : s.basis) basis.push_back(vector_to_json(v));
    return Json{{"kind", s.kind == SystemKind::Monoid ? "monoid" : "bivertex"},
                {"ambient_dim", s.ambient_dim},
                {"degree", s.degree},
                {"frame", to_json(s.frame)},
                {"dimension", system_dimension(s)},
                {"coefficient_layout", std::move(layout)},
                {"basis", std::move(basis)}};
}

Json to_json(const CremonaChain& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        steps.push_back(Json{{"kind", step_kind_name(s.kind)},
                             {"forward", to_json(s.map.forward)},
                             {"inverse", to_json(s.map.inverse)},
                             {"certificate", to_json(s.map.certificate)},
                             {"contracts", s.contracts}});
    }
    Json stages = Json::array();
    for (const auto& z : c.stages) stages.push_back(to_json(z));
    Json samples = Json::array();
    for (const auto& list : c.samples) {
        Json l = Json::array();
        for (const auto& u : list) l.push_back(vector_to_json(u));
        samples.push_back(std::move(l));
    }
    Json claims{{"source", to_json(c.source)}};
    claims["target"] = c.target ? to_json(*c.target) : Json(nullptr);
    claims["contracted"] = c.contracted;
    return Json{{"format", "cremona-chain"}, {"version", 1},         {"ambient_dim", c.ambient_dim},
                {"steps", std::move(steps)},  {"stages", std::move(stages)}, {"samples", std::move(samples)},
                {"claims", std::move(claims)}};
}

CremonaChain chain_from_json(const Json& j) {
    return guarded("chain", [&] {
        if (field(j, "format") != "cremona-chain") bad("not a chain file");
        if (size_field(j, "version") != 1) bad("unsupported chain version");
        CremonaChain c;
        c.ambient_dim = size_field(j, "ambient_dim");
        for (const auto& s : array_field(j, "steps")) {
            const Json& kind = field(s, "kind");
            if (!kind.is_string()) bad("step kind must be a string");
            std::vector<std::size_t> contracts;
            if (s.contains("contracts")) {
                for (const auto& x : array_field(s, "contracts")) {
                    if (!x.is_number_integer() || x.get<long long>() < 0) {
                        bad("contracted component indices must be nonnegative integers");
                    }
                    contracts.push_back(x.get<std::size_t>());
                }
            }
            // The certificate is stored as given; verify_chain re-derives it.
            c.steps.push_back({parse_step_kind(kind.get<std::string>()),
                               CertifiedPair{map_from_json(field(s, "forward")), map_from_json(field(s, "inverse")),
                                             certificate_from_json(field(s, "certificate"))},
                               std::move(contracts)});
        }
        for (const auto& z : array_field(j, "stages")) c.stages.push_back(scheme_from_json(z));
        for (const auto& list : array_field(j, "samples")) {
            if (!list.is_array()) bad("samples must be arrays of parameter vectors");
            std::vector<Vector> l;
            for (const auto& u : list) l.push_back(vector_from_json(u));
            c.samples.push_back(std::move(l));
        }
        const Json& claims = field(j, "claims");
        c.source = scheme_from_json(field(claims, "source"));
        const Json& target = field(claims, "target");
        if (!target.is_null()) c.target = scheme_from_json(target);
        const Json& contracted = field(claims, "contracted");
        if (!contracted.is_boolean()) bad("'contracted' must be a boolean");
        c.contracted = contracted.get<bool>();
        return c;
    });
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << dump(j);
}

}  // namespace cremona
