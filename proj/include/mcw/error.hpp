/*
 *  Copyright 2026 the mcw developers
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#ifndef MCW_ERROR_HPP
#define MCW_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace mcw {

enum class Errc {
  ParseError,
  ValidationError,
  ExpansionOverflow,
  OracleTooLarge,
  SearchTooLarge,
  DivisionByZero,
  MissingAssignment,
  PreconditionViolation,
  InvariantBreach,
  ShapeError,
  InvalidArgument,
};

const char* errc_name(Errc c);

/// All failures in the library are reported through this exception type.
/// `gate` carries the offending gate id when a circuit walk is involved
/// (e.g. ExpansionOverflow names the gate whose expansion tripped a guard).
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::optional<long> gate = std::nullopt)
      : std::runtime_error(std::move(message)), code_(code), gate_(gate) {}

  Errc code() const { return code_; }
  std::optional<long> gate() const { return gate_; }

 private:
  Errc code_;
  std::optional<long> gate_;
};

[[noreturn]] inline void raise(Errc code, std::string message,
                               std::optional<long> gate = std::nullopt) {
  throw Error(code, std::move(message), gate);
}

}  // namespace mcw

#endif
