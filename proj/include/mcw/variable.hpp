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

#ifndef MCW_VARIABLE_HPP
#define MCW_VARIABLE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mcw {

using VarId = std::uint32_t;

/// Declared variable universe: an ordered list of "true" variables (the
/// x-variables of the computed polynomial) followed by the auxiliary
/// variables (bound by quantifiers / projections). Ids are dense indices
/// into the combined list. Immutable; shared between circuits and the
/// polynomials expanded from them.
class Universe {
 public:
  static std::shared_ptr<const Universe> make(std::vector<std::string> true_vars,
                                              std::vector<std::string> aux_vars);

  std::size_t n_vars() const { return names_.size(); }
  std::size_t n_true() const { return n_true_; }
  std::size_t n_aux() const { return names_.size() - n_true_; }

  bool is_true_var(VarId id) const { return id < n_true_; }
  bool is_aux_var(VarId id) const { return id >= n_true_ && id < names_.size(); }

  const std::string& name(VarId id) const { return names_.at(id); }
  std::optional<VarId> find(const std::string& name) const;

  std::vector<VarId> true_ids() const;
  std::vector<VarId> aux_ids() const;

  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::string> true_names() const;
  std::vector<std::string> aux_names() const;

  bool same_layout(const Universe& other) const {
    return n_true_ == other.n_true_ && names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t n_true_ = 0;
  std::map<std::string, VarId> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

}  // namespace mcw

#endif
