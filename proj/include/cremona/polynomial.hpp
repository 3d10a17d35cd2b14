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

#ifndef CREMONA_POLYNOMIAL_HPP
#define CREMONA_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e) noexcept;

// Graded lexicographic order with x0 > x1 > ... ; the comparator sorts the
// leading term first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

using TermMap = std::map<Exponents, Rational, GrlexGreater>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(const Exponents& e, const Rational& c);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    // -1 for the zero polynomial.
    int total_degree() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;
    bool is_homogeneous() const noexcept;

    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;
    Rational coefficient(const Exponents& e) const;

    // Accumulates c into the coefficient of e, erasing the term if it cancels.
    void add_term(const Exponents& e, const Rational& c);

    Rational eval(std::span<const Rational> point) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Polynomial& rhs) const;

    std::size_t nvars_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// images[i] replaces variable i; all images share one variable count.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

// Substitutes the same images into several polynomials, sharing the images
// of common monomials.
std::vector<Polynomial> substitute_many(std::span<const Polynomial> fs, std::span<const Polynomial> images);

// The quotient if b divides a exactly, nullopt otherwise. b must be nonzero.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

// Greatest common divisor, normalized to leading coefficient 1 (the zero
// polynomial when both inputs are zero). Recursive content / primitive part
// with a subresultant remainder sequence in the lowest-index variable present.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Divides by the leading coefficient.
Polynomial monic(const Polynomial& p);

}  // namespace cremona

#endif
