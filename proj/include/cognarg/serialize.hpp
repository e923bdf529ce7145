/* Copyright 2026 The cognarg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// JSON wire and persistence formats. Every document carries "v": 1; field
// order is fixed so that dump(parse(dump(x))) == dump(x) byte for byte.

#include <string>

#include <json.hpp>

#include "cognarg/compiler.hpp"
#include "cognarg/core.hpp"
#include "cognarg/engine.hpp"

namespace cognarg {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json profile_to_json(const ReasonerProfile& p);
ReasonerProfile profile_from_json(const Json& j);

Json kb_to_json(const KnowledgeBase& kb);
KnowledgeBase kb_from_json(const Json& j);

Json framework_to_json(const Framework& f);
Framework framework_from_json(const Json& j);

Json tree_to_json(const DialecticTree& t, const Framework& f);
Json verdict_to_json(const QueryVerdict& v, const Framework& f);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
Json parse_json(std::string_view text);

}  // namespace cognarg
