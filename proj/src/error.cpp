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

#include "cremona/error.hpp"

namespace cremona {

const char* code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DegenerateFrame: return "DegenerateFrame";
        case ErrorCode::NonDistinctPoints: return "NonDistinctPoints";
        case ErrorCode::RejectionExhausted: return "RejectionExhausted";
        case ErrorCode::IndeterminacyPoint: return "IndeterminacyPoint";
        case ErrorCode::ZeroComposite: return "ZeroComposite";
        case ErrorCode::NotInverse: return "NotInverse";
        case ErrorCode::WrongMultiplicity: return "WrongMultiplicity";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
        case ErrorCode::NoSolutionAtDegree: return "NoSolutionAtDegree";
        case ErrorCode::GenericityExhausted: return "GenericityExhausted";
        case ErrorCode::DegreeEscalationExhausted: return "DegreeEscalationExhausted";
        case ErrorCode::WrongSystemDimension: return "WrongSystemDimension";
        case ErrorCode::VertexOnScheme: return "VertexOnScheme";
        case ErrorCode::AvoidanceExhausted: return "AvoidanceExhausted";
        case ErrorCode::InjectivityScreenFailed: return "InjectivityScreenFailed";
        case ErrorCode::MonoidSearchExhausted: return "MonoidSearchExhausted";
        case ErrorCode::StepVerificationFailed: return "StepVerificationFailed";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

int exit_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Parse:
            return 2;
        case ErrorCode::RejectionExhausted:
        case ErrorCode::NoSolutionAtDegree:
        case ErrorCode::GenericityExhausted:
        case ErrorCode::DegreeEscalationExhausted:
        case ErrorCode::AvoidanceExhausted:
        case ErrorCode::InjectivityScreenFailed:
        case ErrorCode::MonoidSearchExhausted:
            return 3;
        case ErrorCode::NotInverse:
        case ErrorCode::StepVerificationFailed:
        case ErrorCode::VerificationFailed:
            return 4;
        default:
            return 1;
    }
}

}  // namespace cremona
