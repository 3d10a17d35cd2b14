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

#include "cremona/form.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "cremona/error.hpp"

namespace cremona {

HomogeneousForm::HomogeneousForm(Polynomial p, unsigned degree) : poly_(std::move(p)), degree_(degree) {
    for (const auto& [e, c] : poly_.terms()) {
        if (total_degree(e) != degree_) {
            throw Error(ErrorCode::DegreeMismatch, "term of degree " + std::to_string(total_degree(e)) +
                                                       " in a form of degree " + std::to_string(degree_));
        }
    }
}

HomogeneousForm HomogeneousForm::from_polynomial(Polynomial p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot infer the degree of the zero polynomial");
    const auto d = static_cast<unsigned>(p.total_degree());
    return HomogeneousForm(std::move(p), d);
}

HomogeneousForm HomogeneousForm::variable(std::size_t nvars, std::size_t index) {
    return HomogeneousForm(Polynomial::variable(nvars, index), 1);
}

HomogeneousForm HomogeneousForm::constant(std::size_t nvars, const Rational& c) {
    return HomogeneousForm(Polynomial::constant(nvars, c), 0);
}

HomogeneousForm HomogeneousForm::monomial(const Exponents& e, const Rational& c) {
    return HomogeneousForm(Polynomial::monomial(e, c), total_degree(e));
}

void HomogeneousForm::check_additive(const HomogeneousForm& rhs) const {
    if (nvars() != rhs.nvars()) throw Error(ErrorCode::ArityMismatch, "forms over different variable counts");
    if (degree_ != rhs.degree_ && !is_zero() && !rhs.is_zero()) {
        throw Error(ErrorCode::DegreeMismatch, "adding forms of degree " + std::to_string(degree_) + " and " +
                                                   std::to_string(rhs.degree_));
    }
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& rhs) {
    check_additive(rhs);
    if (is_zero()) degree_ = rhs.degree_;
    poly_ += rhs.poly_;
    return *this;
}

HomogeneousForm& HomogeneousForm::operator-=(const HomogeneousForm& rhs) {
    check_additive(rhs);
    if (is_zero()) degree_ = rhs.degree_;
    poly_ -= rhs.poly_;
    return *this;
}

HomogeneousForm& HomogeneousForm::operator*=(const Rational& c) {
    poly_ *= c;
    return *this;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars() != b.nvars()) throw Error(ErrorCode::ArityMismatch, "forms over different variable counts");
    return HomogeneousForm(a.poly_ * b.poly_, a.degree_ + b.degree_);
}

HomogeneousForm operator-(HomogeneousForm a) {
    a.poly_ = -a.poly_;
    return a;
}

bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) noexcept {
    if (a.is_zero() && b.is_zero()) return a.nvars() == b.nvars();
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
}

HomogeneousForm HomogeneousForm::with_degree(unsigned degree) const {
    if (!is_zero() && degree != degree_) throw Error(ErrorCode::DegreeMismatch, "cannot re-tag a nonzero form");
    HomogeneousForm out = *this;
    out.degree_ = degree;
    return out;
}

std::string HomogeneousForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || total_degree(e) == 0) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

HomogeneousForm pow(const HomogeneousForm& f, unsigned exponent) {
    return HomogeneousForm(pow(f.polynomial(), exponent), f.degree() * exponent);
}

FormTuple::FormTuple(std::vector<HomogeneousForm> forms) : forms_(std::move(forms)) {
    if (forms_.empty()) throw Error(ErrorCode::ZeroInput, "empty form tuple");
    const std::size_t n = forms_.front().nvars();
    bool have_degree = false;
    for (const auto& f : forms_) {
        if (f.nvars() != n) throw Error(ErrorCode::ArityMismatch, "tuple forms over different variable counts");
        if (f.is_zero()) continue;
        if (!have_degree) {
            degree_ = f.degree();
            have_degree = true;
        } else if (f.degree() != degree_) {
            throw Error(ErrorCode::DegreeMismatch, "tuple forms of different degrees");
        }
    }
    if (!have_degree) throw Error(ErrorCode::ZeroInput, "all forms of the tuple are zero");
    for (auto& f : forms_) {
        if (f.is_zero()) f = f.with_degree(degree_);
    }
}

std::vector<Rational> FormTuple::eval(std::span<const Rational> point) const {
    std::vector<Rational> out;
    out.reserve(forms_.size());
    for (const auto& f : forms_) out.push_back(f.eval(point));
    return out;
}

FormTuple identity_tuple(std::size_t nvars) {
    std::vector<HomogeneousForm> forms;
    for (std::size_t i = 0; i < nvars; ++i) forms.push_back(HomogeneousForm::variable(nvars, i));
    return FormTuple(std::move(forms));
}

FormTuple linear_tuple(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw Error(ErrorCode::ZeroInput, "no rows for a linear tuple");
    const std::size_t n = rows.front().size();
    std::vector<HomogeneousForm> forms;
    for (const auto& row : rows) {
        if (row.size() != n) throw Error(ErrorCode::ArityMismatch, "ragged coefficient rows");
        HomogeneousForm f(n, 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] != 0) f += row[j] * HomogeneousForm::variable(n, j);
        }
        forms.push_back(std::move(f));
    }
    return FormTuple(std::move(forms));
}

HomogeneousForm substitute(const HomogeneousForm& f, std::span<const HomogeneousForm> images) {
    if (images.size() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
    if (images.empty()) throw Error(ErrorCode::ArityMismatch, "substitution into a form without variables");
    unsigned e = 0;
    bool have = false;
    for (const auto& img : images) {
        if (img.is_zero()) continue;
        if (have && img.degree() != e) throw Error(ErrorCode::DegreeMismatch, "substitution images of different degrees");
        e = img.degree();
        have = true;
    }
    std::vector<Polynomial> polys;
    polys.reserve(images.size());
    for (const auto& img : images) polys.push_back(img.polynomial());
    return HomogeneousForm(substitute(f.polynomial(), polys), f.degree() * e);
}

std::vector<HomogeneousForm> substitute_many(const FormTuple& fs, std::span<const HomogeneousForm> images) {
    if (images.size() != fs.nvars()) throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
    unsigned e = 0;
    bool have = false;
    for (const auto& img : images) {
        if (img.is_zero()) continue;
        if (have && img.degree() != e) throw Error(ErrorCode::DegreeMismatch, "substitution images of different degrees");
        e = img.degree();
        have = true;
    }
    std::vector<Polynomial> polys, imgs;
    for (const auto& f : fs) polys.push_back(f.polynomial());
    for (const auto& img : images) imgs.push_back(img.polynomial());
    std::vector<HomogeneousForm> out;
    for (auto& p : substitute_many(polys, imgs)) out.emplace_back(std::move(p), fs.degree() * e);
    return out;
}

HomogeneousForm substitute(const HomogeneousForm& f, const FormTuple& images) {
    return substitute(f, std::span<const HomogeneousForm>(images.forms()));
}

HomogeneousForm gcd(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars() != b.nvars()) throw Error(ErrorCode::ArityMismatch, "gcd of forms over different variable counts");
    Polynomial g = gcd(a.polynomial(), b.polynomial());
    if (g.is_zero()) return HomogeneousForm(a.nvars(), 0);
    return HomogeneousForm::from_polynomial(std::move(g));
}

bool coprime(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "coprimality of a zero form");
    return gcd(a, b).degree() == 0;
}

std::optional<HomogeneousForm> exact_divide(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.is_zero()) return HomogeneousForm(a.nvars(), a.degree() >= b.degree() ? a.degree() - b.degree() : 0);
    if (b.degree() > a.degree()) return std::nullopt;
    auto q = exact_divide(a.polynomial(), b.polynomial());
    if (!q) return std::nullopt;
    return HomogeneousForm(*std::move(q), a.degree() - b.degree());
}

HomogeneousForm reindex(const HomogeneousForm& f, std::size_t nvars, std::span<const std::size_t> target) {
    if (target.size() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "reindex needs one target per variable");
    HomogeneousForm out(nvars, f.degree());
    for (const auto& [e, c] : f.terms()) {
        Exponents ne(nvars, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] == kDropVariable) {
                throw Error(ErrorCode::ArityMismatch, "form involves x" + std::to_string(i) + ", which is being dropped");
            }
            ne.at(target[i]) += e[i];
        }
        out += HomogeneousForm::monomial(ne, c);
    }
    return out;
}

std::vector<Exponents> monomial_basis(std::size_t nvars, std::span<const std::size_t> vars, unsigned degree) {
    std::vector<Exponents> out;
    if (vars.empty()) {
        if (degree == 0) out.emplace_back(nvars, 0);
        return out;
    }
    Exponents e(nvars, 0);
    // Largest power of the first listed variable first: grlex order when
    // `vars` is increasing.
    auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
        if (k + 1 == vars.size()) {
            e[vars[k]] = left;
            out.push_back(e);
            e[vars[k]] = 0;
            return;
        }
        for (unsigned p = left + 1; p-- > 0;) {
            e[vars[k]] = p;
            self(self, k + 1, left - p);
        }
        e[vars[k]] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

class FormParser {
public:
    FormParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    Polynomial parse() {
        Polynomial out(nvars_);
        skip();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(out, sign);
            skip();
        }
        return out;
    }

private:
    void parse_term(Polynomial& out, int sign) {
        Rational coeff = sign;
        Exponents e(nvars_, 0);
        bool have_factor = false;
        while (true) {
            skip();
            if (at_end()) break;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_number();
            } else if (peek() == 'x') {
                ++pos_;
                const std::size_t idx = parse_unsigned();
                if (idx >= nvars_) fail("variable index out of range");
                unsigned power = 1;
                skip();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip();
                    power = static_cast<unsigned>(parse_unsigned());
                }
                e[idx] += power;
            } else {
                fail("unexpected character");
            }
            have_factor = true;
            skip();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        if (!have_factor) fail("empty term");
        out.add_term(e, coeff);
    }

    Rational parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        return parse_rational(text_.substr(start, pos_ - start));
    }

    std::size_t parse_unsigned() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

HomogeneousForm parse_form(std::string_view text, std::size_t nvars, std::optional<unsigned> degree) {
    Polynomial p = FormParser(text, nvars).parse();
    if (p.is_zero()) return HomogeneousForm(nvars, degree.value_or(0));
    if (!p.is_homogeneous()) throw Error(ErrorCode::Parse, "not homogeneous: '" + std::string(text) + "'");
    if (degree && static_cast<int>(*degree) != p.total_degree()) {
        throw Error(ErrorCode::DegreeMismatch, "form '" + std::string(text) + "' has unexpected degree");
    }
    return HomogeneousForm::from_polynomial(std::move(p));
}

}  // namespace cremona
