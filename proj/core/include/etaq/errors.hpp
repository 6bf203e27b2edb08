// Copyright 2026 The etaq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ETAQ_ERRORS_HPP
#define ETAQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etaq {

/// Base class for every domain error raised by the library. The CLI maps
/// all of these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Class name, e.g. "PrimeDividesDenominator"; used in reports.
  virtual const char* name() const noexcept { return "Error"; }
};

#define ETAQ_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                       \
    using Error::Error;                                          \
    const char* name() const noexcept override { return #Name; }  \
  }

ETAQ_DEFINE_ERROR(InvalidArgument);
ETAQ_DEFINE_ERROR(ZeroConstantTerm);
ETAQ_DEFINE_ERROR(UndefinedValuation);
ETAQ_DEFINE_ERROR(NotOddPrime);
ETAQ_DEFINE_ERROR(NotPrime);
ETAQ_DEFINE_ERROR(NotInvertible);
ETAQ_DEFINE_ERROR(InexactDivision);
ETAQ_DEFINE_ERROR(NonIntegerExponent);
ETAQ_DEFINE_ERROR(UnsupportedD);
ETAQ_DEFINE_ERROR(PrimeDividesDenominator);
ETAQ_DEFINE_ERROR(InsufficientSamples);
ETAQ_DEFINE_ERROR(ReconstructionMismatch);

#undef ETAQ_DEFINE_ERROR

}  // namespace etaq

#endif  // ETAQ_ERRORS_HPP
