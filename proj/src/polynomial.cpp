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

#include "cremona/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <string>
#include <utility>

#include "cremona/error.hpp"

namespace cremona {

unsigned total_degree(const Exponents& e) noexcept {
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int Polynomial::total_degree() const noexcept {
    if (terms_.empty()) return -1;
    return static_cast<int>(cremona::total_degree(terms_.begin()->first));
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const unsigned d = cremona::total_degree(terms_.begin()->first);
    return cremona::total_degree(terms_.rbegin()->first) == d;
}

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "leading term of zero polynomial");
    return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "exponent vector length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            Rational factor;
            mpz_pow_ui(factor.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(factor.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
            term *= factor;
        }
        total += term;
    }
    return total;
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_) throw Error(ErrorCode::ArityMismatch, "polynomials over different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

namespace {

// Radix for packing exponent vectors of a*b into one integer, or 0 when the
// packed keys would not fit.
std::uint64_t packing_base(const Polynomial& a, const Polynomial& b) {
    std::uint64_t base = 1;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        base = std::max<std::uint64_t>(base, std::uint64_t{a.degree_in(i)} + b.degree_in(i) + 1);
    }
    unsigned __int128 span = 1;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        span *= base;
        if (span >> 62) return 0;
    }
    return base;
}

std::uint64_t pack(const Exponents& e, std::uint64_t base) {
    std::uint64_t k = 0;
    for (unsigned x : e) k = k * base + x;
    return k;
}

// Coefficients times the lcm of their denominators.
std::vector<Integer> cleared(const TermMap& terms, Integer& lcm) {
    lcm = 1;
    for (const auto& [e, c] : terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(terms.size());
    for (const auto& [e, c] : terms) {
        Integer v;
        mpz_divexact(v.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        v *= c.get_num();
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    const std::uint64_t base = packing_base(a, b);
    if (base == 0 || a.terms_.size() * b.terms_.size() < 8) {
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    // Integer accumulation on packed keys; one division at the end.
    Integer la, lb;
    const std::vector<Integer> ia = cleared(a.terms_, la);
    const std::vector<Integer> ib = cleared(b.terms_, lb);
    std::vector<std::uint64_t> ka, kb;
    for (const auto& [e, c] : a.terms_) ka.push_back(pack(e, base));
    for (const auto& [e, c] : b.terms_) kb.push_back(pack(e, base));
    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (std::size_t i = 0; i < ka.size(); ++i) {
        for (std::size_t j = 0; j < kb.size(); ++j) {
            Integer& slot = acc[ka[i] + kb[j]];
            mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }
    const Integer denom = la * lb;
    Exponents e(a.nvars_);
    for (auto& [k, v] : acc) {
        if (v == 0) continue;
        std::uint64_t rest = k;
        for (std::size_t i = e.size(); i-- > 0;) {
            e[i] = static_cast<unsigned>(rest % base);
            rest /= base;
        }
        Rational c(v, denom);
        c.canonicalize();
        out.terms_.emplace(e, std::move(c));
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(base.nvars(), 1);
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1;
        if (exponent > 0) square = square * square;
    }
    return result;
}

std::vector<Polynomial> substitute_many(std::span<const Polynomial> fs, std::span<const Polynomial> images) {
    if (images.empty()) throw Error(ErrorCode::ArityMismatch, "substitution without images");
    const std::size_t m = images.front().nvars();
    for (const auto& img : images) {
        if (img.nvars() != m) throw Error(ErrorCode::ArityMismatch, "substitution images over different variable counts");
    }
    // Image of each monomial, built as image(e - e_j) * images[j] with j the
    // last variable of e, and shared by all the input polynomials.
    std::map<Exponents, Polynomial> cache;
    auto image = [&](auto&& self, const Exponents& e) -> const Polynomial& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        std::size_t j = e.size();
        while (j > 0 && e[j - 1] == 0) --j;
        Polynomial value = Polynomial::constant(m, 1);
        if (j > 0) {
            Exponents prev = e;
            --prev[j - 1];
            value = self(self, prev) * images[j - 1];
        }
        return cache.emplace(e, std::move(value)).first->second;
    };
    std::vector<Polynomial> out;
    out.reserve(fs.size());
    for (const auto& f : fs) {
        if (f.nvars() != images.size()) throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
        Polynomial acc(m);
        for (const auto& [e, c] : f.terms()) acc += image(image, e) * c;
        out.push_back(std::move(acc));
    }
    return out;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (images.size() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
    if (images.empty()) return f;
    const Polynomial one[] = {f};
    return std::move(substitute_many(one, images).front());
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
    if (a.nvars() != b.nvars()) throw Error(ErrorCode::ArityMismatch, "division over different variable counts");
    Polynomial remainder = a;
    Polynomial quotient(a.nvars());
    const Exponents& lb = b.leading_exponents();
    const Rational& cb = b.leading_coefficient();
    Exponents shift(a.nvars());
    while (!remainder.is_zero()) {
        const Exponents& lr = remainder.leading_exponents();
        for (std::size_t i = 0; i < lr.size(); ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            shift[i] = lr[i] - lb[i];
        }
        Polynomial step = Polynomial::monomial(shift, remainder.leading_coefficient() / cb);
        remainder -= step * b;
        quotient += step;
    }
    return quotient;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

namespace {

// Coefficients of p as a polynomial in `var`; entry k is free of `var`.
std::vector<Polynomial> split_in(const Polynomial& p, std::size_t var) {
    std::vector<Polynomial> coeffs(p.degree_in(var) + 1, Polynomial(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Exponents reduced = e;
        reduced[var] = 0;
        coeffs[e[var]].add_term(reduced, c);
    }
    return coeffs;
}

Polynomial join_in(const std::vector<Polynomial>& coeffs, std::size_t var, std::size_t nvars) {
    Polynomial out(nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponents shifted = e;
            shifted[var] += static_cast<unsigned>(k);
            out.add_term(shifted, c);
        }
    }
    return out;
}

Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b) {
    auto q = exact_divide(a, b);
    if (!q) throw Error(ErrorCode::InvalidArgument, "internal: expected exact polynomial division");
    return *std::move(q);
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial c(p.nvars());
    for (const auto& coeff : split_in(p, var)) {
        if (coeff.is_zero()) continue;
        c = gcd_recursive(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, as polynomials in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    auto r = split_in(a, var);
    const auto bc = split_in(b, var);
    const std::size_t db = bc.size() - 1;
    const Polynomial& lb = bc.back();
    const std::size_t da = r.size() - 1;
    const auto trim = [&r] {
        while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    };
    std::size_t steps = 0;
    while (!(r.size() == 1 && r[0].is_zero()) && r.size() - 1 >= db) {
        const std::size_t shift = r.size() - 1 - db;
        const Polynomial lr = r.back();
        for (auto& coeff : r) coeff *= lb;
        for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * bc[k];
        r.pop_back();
        trim();
        ++steps;
    }
    Polynomial out = join_in(r, var, a.nvars());
    if (da >= db && steps < da - db + 1) out *= pow(lb, static_cast<unsigned>(da - db + 1 - steps));
    return out;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::size_t nv = a.nvars();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(nv, 1);

    std::size_t var = nv;
    for (std::size_t i = 0; i < nv && var == nv; ++i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) var = i;
    }
    if (a.degree_in(var) == 0) return gcd_recursive(a, content_in(b, var));
    if (b.degree_in(var) == 0) return gcd_recursive(content_in(a, var), b);

    const Polynomial ca = content_in(a, var);
    const Polynomial cb = content_in(b, var);
    Polynomial A = divide_or_throw(a, ca);
    Polynomial B = divide_or_throw(b, cb);
    const Polynomial c = gcd_recursive(ca, cb);
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);

    Polynomial g = Polynomial::constant(nv, 1);
    Polynomial h = Polynomial::constant(nv, 1);
    bool unit = false;
    while (true) {
        const unsigned delta = A.degree_in(var) - B.degree_in(var);
        Polynomial R = pseudo_remainder(A, B, var);
        if (R.is_zero()) break;
        if (R.degree_in(var) == 0) {
            unit = true;
            break;
        }
        A = std::move(B);
        B = divide_or_throw(R, g * pow(h, delta));
        g = split_in(A, var).back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = divide_or_throw(pow(g, delta), pow(h, delta - 1));
        }
    }
    if (unit) return c;
    return c * divide_or_throw(B, content_in(B, var));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw Error(ErrorCode::ArityMismatch, "gcd over different variable counts");
    return monic(gcd_recursive(a, b));
}

}  // namespace cremona
