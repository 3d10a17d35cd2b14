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

#ifndef CREMONA_TESTS_SUPPORT_HPP
#define CREMONA_TESTS_SUPPORT_HPP

#include <vector>

#include "cremona/form.hpp"
#include "cremona/projective.hpp"

namespace cremona::testing {

// mpq_class(a, b) does not canonicalize by itself.
inline Rational ratio(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

inline HomogeneousForm F(const char* text, std::size_t nvars) { return parse_form(text, nvars); }

// Every monomial of the given degree, in grlex order.
inline std::vector<Exponents> monomials(std::size_t nvars, unsigned degree) {
    std::vector<Exponents> out;
    Exponents e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

// Dense random form; each coefficient drawn from {-box..box}.
inline HomogeneousForm random_form(Sampler& s, std::size_t nvars, unsigned degree, std::int64_t box = 5) {
    HomogeneousForm f(nvars, degree);
    for (const auto& e : monomials(nvars, degree)) {
        const auto c = s.next_int(box);
        if (c != 0) f += HomogeneousForm::monomial(e, c);
    }
    return f;
}

inline HomogeneousForm random_nonzero_form(Sampler& s, std::size_t nvars, unsigned degree, std::int64_t box = 5) {
    while (true) {
        auto f = random_form(s, nvars, degree, box);
        if (!f.is_zero()) return f;
    }
}

}  // namespace cremona::testing

#endif
