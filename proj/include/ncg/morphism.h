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

#ifndef NCG_MORPHISM_H_
#define NCG_MORPHISM_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncg/form.h"
#include "ncg/game.h"
#include "ncg/tree.h"

namespace ncg {

using UtilityMap = std::map<Utility, Utility>;
// β_i per source player.
using BetaMap = std::map<PlayerId, UtilityMap>;

// [Γ, Γ′, ι, τ, δ, β] with [g1]–[g4] checked. θ and Z^θ are derived.
class GameMorphism {
 public:
  // Throws the form-morphism errors, kUnknownPlayer, kBetaDomainMismatch,
  // kBetaNotMonotone or kUtilityEquationFails.
  static GameMorphism validate(Game source, Game target, PlayerMap iota,
                               NodeMap tau, ChoiceMap delta, BetaMap beta);

  const Game& source() const { return source_; }
  const Game& target() const { return target_; }
  const PlayerMap& iota() const { return iota_; }
  const NodeMap& tau() const { return tau_; }
  const ChoiceMap& delta() const { return delta_; }
  const BetaMap& beta() const { return beta_; }

  // θ.
  const TreeMorphism& theta() const { return theta_; }
  // Z^θ.
  const std::vector<Play>& end_preserved() const { return end_preserved_; }

  friend bool operator==(const GameMorphism& a, const GameMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.iota_ == b.iota_ && a.tau_ == b.tau_ && a.delta_ == b.delta_ &&
           a.beta_ == b.beta_;
  }

 private:
  GameMorphism(Game source, Game target, PlayerMap iota, NodeMap tau,
               ChoiceMap delta, BetaMap beta, TreeMorphism theta,
               std::vector<Play> end_preserved)
      : source_(std::move(source)),
        target_(std::move(target)),
        iota_(std::move(iota)),
        tau_(std::move(tau)),
        delta_(std::move(delta)),
        beta_(std::move(beta)),
        theta_(std::move(theta)),
        end_preserved_(std::move(end_preserved)) {}

  Game source_;
  Game target_;
  PlayerMap iota_;
  NodeMap tau_;
  ChoiceMap delta_;
  BetaMap beta_;
  TreeMorphism theta_;
  std::vector<Play> end_preserved_;
};

inline GameMorphism validate_game_morphism(Game source, Game target,
                                           PlayerMap iota, NodeMap tau,
                                           ChoiceMap delta, BetaMap beta) {
  return GameMorphism::validate(std::move(source), std::move(target),
                                std::move(iota), std::move(tau),
                                std::move(delta), std::move(beta));
}

// id_Γ, with β_i the identity on Ū_i(Z).
GameMorphism identity_morphism(const Game& g);

// second ∘ first. β_i is β′_{ι(i)} ∘ β_i restricted to Ū_i(Z^{θ′∘θ}).
// Throws kTargetSourceMismatch.
GameMorphism compose(const GameMorphism& second, const GameMorphism& first);

// The form morphism underlying a game morphism.
FormMorphism forget(const GameMorphism& m);

struct IsoWitness {
  GameMorphism morphism;
  GameMorphism inverse;
};

// A witness with the explicit inverse (ι⁻¹, τ⁻¹, δ⁻¹, β_{ι⁻¹(i′)}⁻¹) when
// every component is a bijection. The alternative test (ι, τ, δ bijective and
// each β_i strictly increasing) is evaluated as well; disagreement raises
// kInternalConsistency.
std::optional<IsoWitness> is_isomorphism(const GameMorphism& m);

// Strictly increasing on its domain.
bool is_strictly_increasing(const UtilityMap& beta);

}  // namespace ncg

#endif  // NCG_MORPHISM_H_
