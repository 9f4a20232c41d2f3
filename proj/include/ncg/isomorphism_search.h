// Copyright 2026 The NCG Authors.
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


#ifndef NCG_ISOMORPHISM_SEARCH_H_
#define NCG_ISOMORPHISM_SEARCH_H_

#include <cstddef>
#include <optional>

#include "ncg/game.h"
#include "ncg/morphism.h"

namespace ncg {

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

// Backtracking search for an isomorphism g1 → g2.
//
// Source nodes are visited breadth-first in declaration order and each is
// matched to an unused child of its parent's image, tried in the target's
// declaration order, among children with the same subtree shape. Every
// assignment fixes δ on the previous choice, ι on its owner and β at each
// terminal; conflicts prune. Players owning no choice are matched last in
// declaration order. The first complete assignment in this order is
// validated and returned, so the result is deterministic.
//
// Throws kSearchBudgetExceeded after `budget` node assignments.
std::optional<IsoWitness> find_isomorphism(
    const Game& g1, const Game& g2, std::size_t budget = kDefaultSearchBudget);

}  // namespace ncg

#endif  // NCG_ISOMORPHISM_SEARCH_H_
