// Copyright 2026 The padiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace padiff {

// Base class of every error raised by the library. `name()` is the stable
// identifier reported by the command line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

#define PADIFF_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                     \
   public:                                                        \
    using Error::Error;                                           \
    const char* name() const noexcept override { return #Name; } \
  }

// Bad arguments: composite primes, reducible moduli, malformed shapes.
PADIFF_DEFINE_ERROR(InvalidArgumentError);
// Operands live in different rings.
PADIFF_DEFINE_ERROR(ContextMismatchError);
// v_p(divisor) > v_p(dividend) under the fixed-point division rule.
PADIFF_DEFINE_ERROR(DivisionPrecisionError);
// A matrix has no unit pivot in some column.
PADIFF_DEFINE_ERROR(NotInvertibleError);
// A polynomial algorithm over Z/p^M needed to invert a non-unit.
PADIFF_DEFINE_ERROR(NonUnitInversionError);
// No fraction within the degree bounds matches the series.
PADIFF_DEFINE_ERROR(ReconstructionError);
// A polynomial that must be squarefree mod p is not.
PADIFF_DEFINE_ERROR(RepeatedRootError);
// A support point of a divisor is a Weierstrass point mod p.
PADIFF_DEFINE_ERROR(WeierstrassError);
// A divisor has the wrong degree for the requested operation.
PADIFF_DEFINE_ERROR(DegreeError);
// Broken internal invariant; always a bug.
PADIFF_DEFINE_ERROR(InternalError);

#undef PADIFF_DEFINE_ERROR

}  // namespace padiff
