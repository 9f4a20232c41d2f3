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


#ifndef NCG_SUBGAME_H_
#define NCG_SUBGAME_H_

#include "ncg/game.h"
#include "ncg/labels.h"

namespace ncg {

// Γ is a subgame of Γ′: I ⊆ I′, T is the up-set of its root in T′,
// C_i ⊆ C′_i, ⊗ agrees with ⊗′ on F^gr, H ⊆ H′, and
// U_i(Z) = U′_i(P′(t°) ∪ Z) on every play.
bool is_subgame(const Game& inner, const Game& outer);

// The subgame rooted at a decision node. Every player is kept, possibly
// vacuous. Throws kUnknownNode, kNotDecisionNode or kInformationSetCut when
// an information set straddles the subtree's boundary.
Game subgame_at(const Game& g, const NodeLabel& t_star);

}  // namespace ncg

#endif  // NCG_SUBGAME_H_
