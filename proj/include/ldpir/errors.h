// Copyright 2026 The ldpir Authors.
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

namespace ldpir {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LDPIR_DEFINE_ERROR(Name)                    \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name ": ") + what) {}  \
  }

LDPIR_DEFINE_ERROR(InvalidModulus);
LDPIR_DEFINE_ERROR(ModulusMismatch);
LDPIR_DEFINE_ERROR(DivisionByZero);
LDPIR_DEFINE_ERROR(DuplicatePoint);
LDPIR_DEFINE_ERROR(ZeroPolynomial);
LDPIR_DEFINE_ERROR(InfeasibleParameters);
LDPIR_DEFINE_ERROR(NoSolution);
LDPIR_DEFINE_ERROR(IndexOutOfRange);
LDPIR_DEFINE_ERROR(ShapeError);
LDPIR_DEFINE_ERROR(InsufficientResponses);
LDPIR_DEFINE_ERROR(OracleTooLarge);
LDPIR_DEFINE_ERROR(WireFormatError);
LDPIR_DEFINE_ERROR(FormatError);

#undef LDPIR_DEFINE_ERROR

}  // namespace ldpir
