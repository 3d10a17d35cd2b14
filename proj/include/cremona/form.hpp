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

#ifndef CREMONA_FORM_HPP
#define CREMONA_FORM_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

class FormTuple;

// Homogeneous polynomial of a fixed degree. The zero form is an empty term
// collection and is compatible with forms of any degree under +/-.
class HomogeneousForm {
public:
    HomogeneousForm(std::size_t nvars, unsigned degree) : poly_(nvars), degree_(degree) {}

    // Throws DegreeMismatch if some term of p has total degree != degree.
    HomogeneousForm(Polynomial p, unsigned degree);

    // Degree read off the leading term; p must be nonzero and homogeneous.
    static HomogeneousForm from_polynomial(Polynomial p);

    static HomogeneousForm variable(std::size_t nvars, std::size_t index);
    static HomogeneousForm constant(std::size_t nvars, const Rational& c);
    static HomogeneousForm monomial(const Exponents& e, const Rational& c = 1);

    std::size_t nvars() const noexcept { return poly_.nvars(); }
    unsigned degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    const TermMap& terms() const noexcept { return poly_.terms(); }
    const Polynomial& polynomial() const noexcept { return poly_; }
    Rational coefficient(const Exponents& e) const { return poly_.coefficient(e); }

    Rational eval(std::span<const Rational> point) const { return poly_.eval(point); }

    HomogeneousForm& operator+=(const HomogeneousForm& rhs);
    HomogeneousForm& operator-=(const HomogeneousForm& rhs);
    HomogeneousForm& operator*=(const Rational& c);

    friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
    friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
    friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
    friend HomogeneousForm operator*(HomogeneousForm a, const Rational& c) { return a *= c; }
    friend HomogeneousForm operator*(const Rational& c, HomogeneousForm a) { return a *= c; }
    friend HomogeneousForm operator-(HomogeneousForm a);

    // Zero forms compare equal regardless of their nominal degree.
    friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) noexcept;

    // Same form re-tagged with another degree; only legal for the zero form
    // or when the degree is unchanged.
    HomogeneousForm with_degree(unsigned degree) const;

    std::string to_string() const;

private:
    void check_additive(const HomogeneousForm& rhs) const;

    Polynomial poly_;
    unsigned degree_;
};

HomogeneousForm pow(const HomogeneousForm& f, unsigned exponent);

// Ordered forms of one degree over one variable count, not all zero.
class FormTuple {
public:
    explicit FormTuple(std::vector<HomogeneousForm> forms);
    FormTuple(std::initializer_list<HomogeneousForm> forms) : FormTuple(std::vector<HomogeneousForm>(forms)) {}

    std::size_t size() const noexcept { return forms_.size(); }
    std::size_t nvars() const noexcept { return forms_.front().nvars(); }
    unsigned degree() const noexcept { return degree_; }
    const HomogeneousForm& operator[](std::size_t i) const { return forms_[i]; }
    const std::vector<HomogeneousForm>& forms() const noexcept { return forms_; }
    auto begin() const noexcept { return forms_.begin(); }
    auto end() const noexcept { return forms_.end(); }

    std::vector<Rational> eval(std::span<const Rational> point) const;

    friend bool operator==(const FormTuple& a, const FormTuple& b) noexcept { return a.forms_ == b.forms_; }

private:
    std::vector<HomogeneousForm> forms_;
    unsigned degree_ = 0;
};

// The identity tuple [x0, ..., x_{n-1}].
FormTuple identity_tuple(std::size_t nvars);

// Linear forms whose coefficient rows are the given rows.
FormTuple linear_tuple(const std::vector<std::vector<Rational>>& rows);

// f(images[0], ..., images[n-1]). Result degree = deg f * deg images.
HomogeneousForm substitute(const HomogeneousForm& f, const FormTuple& images);
HomogeneousForm substitute(const HomogeneousForm& f, std::span<const HomogeneousForm> images);

// Every form of fs under one substitution, sharing monomial images.
std::vector<HomogeneousForm> substitute_many(const FormTuple& fs, std::span<const HomogeneousForm> images);

// True iff gcd(a, b) is constant. Both inputs nonzero.
bool coprime(const HomogeneousForm& a, const HomogeneousForm& b);

// Monic gcd; homogeneous since both inputs are.
HomogeneousForm gcd(const HomogeneousForm& a, const HomogeneousForm& b);

std::optional<HomogeneousForm> exact_divide(const HomogeneousForm& a, const HomogeneousForm& b);

inline constexpr std::size_t kDropVariable = static_cast<std::size_t>(-1);

// Renames variable i to target[i] in a ring of `nvars` variables. A target of
// kDropVariable removes the variable, which must then not occur in f.
HomogeneousForm reindex(const HomogeneousForm& f, std::size_t nvars, std::span<const std::size_t> target);

// All monomials of the given degree in the listed variables (other
// variables of the nvars-variable ring have exponent 0), in grlex order.
std::vector<Exponents> monomial_basis(std::size_t nvars, std::span<const std::size_t> vars, unsigned degree);

// Reads the notation produced by to_string, e.g. "x0*x1 - 2/3*x2^2".
// The text must describe a homogeneous polynomial; "0" needs `degree`.
HomogeneousForm parse_form(std::string_view text, std::size_t nvars, std::optional<unsigned> degree = {});

}  // namespace cremona

#endif
