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

// Exhaustive reference semantics. Every subset of the scheme set is an
// argument candidate and admissibility quantifies over all of them; nothing
// here shares code with the engine's backward chaining or proof search.

#include <cstdint>
#include <vector>

#include "cognarg/core.hpp"
#include "cognarg/engine.hpp"

namespace cognarg::oracle {

inline constexpr std::size_t kDefaultCap = 14;
inline constexpr std::size_t kHardCap = 24;

class Oracle {
 public:
  using Mask = std::uint32_t;

  Oracle(const Framework& f, const CognitiveState& s, std::size_t cap = kDefaultCap);

  // Every non-empty conflict-free subset.
  std::vector<Argument> all_arguments() const;
  bool admissible(const Argument& a) const;
  bool attacks(const Argument& a, const Argument& b) const;
  bool defends(const Argument& a, const Argument& b) const;
  // Candidate roots are checked in parallel.
  QueryVerdict query(const Literal& l) const;
  // Single-threaded reference loop with early exit.
  QueryVerdict query_serial(const Literal& l) const;

  Mask mask_of(const Argument& a) const;
  Argument argument_of(Mask m) const;

 private:
  using Bits = std::uint64_t;

  Bits complement_bits(Bits b) const;
  bool attacks_mask(Mask b, Mask d) const;
  bool defends_mask(Mask d, Mask b) const;
  bool admissible_mask(Mask d) const;
  std::vector<Mask> supporters(const Literal& l) const;
  DialecticTree witness(const Literal& l, Mask m) const;

  const Framework& f_;
  std::size_t n_ = 0;
  std::vector<Bits> supp_;
  std::vector<Bits> comp_supp_;
  std::vector<Mask> app_;
  std::vector<Mask> conf_app_;
  std::vector<char> cf_;
  std::vector<Mask> cf_masks_;
  std::vector<Mask> conf_;
  // (Dm, Bm) pairs that satisfy the defense condition on their own.
  std::vector<std::pair<Mask, Mask>> defense_pairs_;
  std::vector<LiteralId> comp_;
};

std::vector<Argument> all_arguments(const Framework& f, const CognitiveState& s,
                                    std::size_t cap = kDefaultCap);
bool oracle_admissible(const Argument& a, const Framework& f, const CognitiveState& s,
                       std::size_t cap = kDefaultCap);
QueryVerdict oracle_query(const Literal& l, const Framework& f, const CognitiveState& s,
                          std::size_t cap = kDefaultCap);
QueryVerdict oracle_query_serial(const Literal& l, const Framework& f, const CognitiveState& s,
                                 std::size_t cap = kDefaultCap);

}  // namespace cognarg::oracle
