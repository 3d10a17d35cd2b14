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

#ifndef CREMONA_RATIONAL_HPP
#define CREMONA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cremona {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; construction from raw parts must call
// canonicalize(), which parse_rational does.
using Rational = mpq_class;
using Integer = mpz_class;

// Always "p/q", including q = 1, so serialized output is uniform.
std::string to_string(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace cremona

#endif
