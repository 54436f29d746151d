/*
   Copyright 2026 The posflag authors

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

#ifndef POSFLAG_ERRORS_HPP
#define POSFLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace posflag {

enum class Err {
    // malformed input
    Schema,
    SchemaMismatch,
    UnknownGenerator,
    IndexOutOfRange,
    // mathematical preconditions
    DivisionByZero,
    MixedFieldTags,
    ZeroInput,
    ZeroPolynomial,
    DeterminantNotUnit,
    DeterminantNotOne,
    SpectrumNotInField,
    RepeatedEigenvalue,
    SingularBasis,
    SingularGroupElement,
    NotTransverse,
    NotPositivelyHyperbolic,
    TriangulationMismatch,
    DimensionTooLarge,
    NonPositiveParameter,
    NotPositive,
    WitnessVerificationFailed,
    NonPositiveCoordinate,
    ReconstructionFailed,
    MissingArcData,
    MissingSpiralData,
    NotDynamicsPreserving,
    NoTransverseTriple,
    WellDefinednessViolation,
};

const char* err_name(Err e) noexcept;

// Input errors map to exit code 2, everything else to 3.
bool is_input_error(Err e) noexcept;

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const noexcept { return code_; }

private:
    Err code_;
};

}  // namespace posflag

#endif
