// Copyright 2026 The gbsdks Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbsdks/errors.hpp"

namespace gbsdks {

bool is_configuration_error(const std::exception& e) {
  return dynamic_cast<const ConfigError*>(&e) != nullptr ||
         dynamic_cast<const ParseError*>(&e) != nullptr ||
         dynamic_cast<const ValidationError*>(&e) != nullptr ||
         dynamic_cast<const CapacityError*>(&e) != nullptr;
}

}  // namespace gbsdks
