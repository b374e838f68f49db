// Copyright 2026 The hairpin Authors
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

#ifndef HAIRPIN_ERRORS_HPP
#define HAIRPIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hairpin {

// Base of every error raised by the library. kind() is the stable name used
// in CLI messages and reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define HAIRPIN_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* kind() const noexcept override { return #Name; }     \
  }

HAIRPIN_DEFINE_ERROR(InvalidAlphabet);
HAIRPIN_DEFINE_ERROR(AlphabetMismatch);
HAIRPIN_DEFINE_ERROR(PrimerSelfComplementary);
HAIRPIN_DEFINE_ERROR(DomainError);
HAIRPIN_DEFINE_ERROR(CrossingError);
HAIRPIN_DEFINE_ERROR(PreconditionError);
HAIRPIN_DEFINE_ERROR(InternalInvariantViolation);

#undef HAIRPIN_DEFINE_ERROR

}  // namespace hairpin

#endif  // HAIRPIN_ERRORS_HPP
