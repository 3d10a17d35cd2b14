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

#ifndef CREMONA_ERROR_HPP
#define CREMONA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cremona {

// Every structured failure carries one of these. The names are stable and
// appear verbatim in CLI diagnostics.
enum class ErrorCode {
    Parse,
    InvalidArgument,
    DegreeMismatch,
    ArityMismatch,
    ZeroInput,
    DimensionMismatch,
    DegenerateFrame,
    NonDistinctPoints,
    RejectionExhausted,
    IndeterminacyPoint,
    ZeroComposite,
    NotInverse,
    WrongMultiplicity,
    DegenerateDenominator,
    ZeroDeterminant,
    NoSolutionAtDegree,
    GenericityExhausted,
    DegreeEscalationExhausted,
    WrongSystemDimension,
    VertexOnScheme,
    AvoidanceExhausted,
    InjectivityScreenFailed,
    MonoidSearchExhausted,
    StepVerificationFailed,
    VerificationFailed,
};

const char* code_name(ErrorCode code) noexcept;

// Process exit status for a code: 2 parse, 3 search exhausted,
// 4 verification failed, 1 anything else.
int exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cremona

#endif
