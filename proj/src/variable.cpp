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

#include "mcw/variable.hpp"

#include <numeric>

#include "mcw/error.hpp"

namespace mcw {

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> true_vars,
                                               std::vector<std::string> aux_vars) {
  auto u = std::make_shared<Universe>();
  u->n_true_ = true_vars.size();
  u->names_ = std::move(true_vars);
  u->names_.insert(u->names_.end(), aux_vars.begin(), aux_vars.end());
  for (std::size_t i = 0; i < u->names_.size(); ++i) {
    if (u->names_[i].empty())
      raise(Errc::ValidationError, "empty variable name in universe");
    auto [it, fresh] = u->index_.emplace(u->names_[i], static_cast<VarId>(i));
    if (!fresh)
      raise(Errc::ValidationError, "duplicate variable name '" + u->names_[i] + "' in universe");
  }
  return u;
}

std::optional<VarId> Universe::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VarId> Universe::true_ids() const {
  std::vector<VarId> ids(n_true_);
  std::iota(ids.begin(), ids.end(), 0u);
  return ids;
}

std::vector<VarId> Universe::aux_ids() const {
  std::vector<VarId> ids(n_aux());
  std::iota(ids.begin(), ids.end(), static_cast<VarId>(n_true_));
  return ids;
}

std::vector<std::string> Universe::true_names() const {
  return {names_.begin(), names_.begin() + static_cast<long>(n_true_)};
}

std::vector<std::string> Universe::aux_names() const {
  return {names_.begin() + static_cast<long>(n_true_), names_.end()};
}

}  // namespace mcw
