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


#ifndef NCG_NASH_H_
#define NCG_NASH_H_

#include <cstddef>
#include <vector>

#include "ncg/game.h"
#include "ncg/preform.h"

namespace ncg {

// Pure-strategy equilibria in grand-strategy enumeration order. Every
// strategy is tested against both the all-deviations and the
// proper-deviations condition; disagreement raises kInternalConsistency.
// Throws kStrategySpaceTooLarge.
std::vector<GrandStrategy> nash_equilibria(
    const Game& g, std::size_t cap = kDefaultStrategyCap);

// No player gains by switching to any of its strategies. Throws
// kNotAStrategy.
bool is_nash(const Game& g, const GrandStrategy& s);

// As is_nash, but quantifying only over strategies other than the player's
// own.
bool is_nash_star(const Game& g, const GrandStrategy& s);

}  // namespace ncg

#endif  // NCG_NASH_H_
