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

#ifndef NCG_FORM_H_
#define NCG_FORM_H_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ncg/labels.h"
#include "ncg/preform.h"

namespace ncg {

struct FormInputs {
  PreformInputs preform;
  std::vector<PlayerId> players;
  // Every player needs an entry; a vacuous player owns an empty list.
  std::vector<std::pair<PlayerId, std::vector<ChoiceId>>> ownership;
};

// A node-and-choice form: a preform whose choices are partitioned among
// players so that every decision node belongs to exactly one of them.
class Form {
 public:
  // Throws the preform errors, kDuplicatePlayer, kUnknownPlayer,
  // kMissingAssignment, kUnknownChoice, kChoiceOwnedTwice, kUnassignedChoice
  // or kNodeSplitAcrossPlayers.
  static Form build(const FormInputs& inputs);

  const Preform& preform() const { return preform_; }
  const Tree& tree() const { return preform_.tree(); }
  // Declaration order.
  const std::vector<PlayerId>& players() const { return players_; }
  bool has_player(const PlayerId& i) const { return player_index_.count(i) > 0; }
  std::size_t player_index(const PlayerId& i) const;  // throws kUnknownPlayer

  // C_i.
  ChoiceSet owned(const PlayerId& i) const;
  // The owner of a choice. Throws kUnknownChoice.
  const PlayerId& owner(const ChoiceId& c) const;
  // X_i.
  NodeSet player_nodes(const PlayerId& i) const;
  // H_i as indices into the preform's information sets.
  const std::vector<std::size_t>& player_info_sets(const PlayerId& i) const {
    return info_sets_of_player_[player_index(i)];
  }
  std::vector<NodeSet> player_information_sets(const PlayerId& i) const;

  // Index-level view.
  std::size_t owner_at(std::size_t choice) const { return owner_[choice]; }
  std::size_t info_set_owner(std::size_t h) const { return info_set_owner_[h]; }

  FormInputs inputs() const;

  friend bool operator==(const Form& a, const Form& b);

 private:
  explicit Form(Preform preform) : preform_(std::move(preform)) {}

  Preform preform_;
  std::vector<PlayerId> players_;
  std::map<PlayerId, std::size_t> player_index_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> info_set_owner_;
  std::vector<std::vector<std::size_t>> info_sets_of_player_;
};

struct PlayerStrategy {
  PlayerId player;
  ChoiceSet choices;

  friend bool operator==(const PlayerStrategy&, const PlayerStrategy&) = default;
};

// S_i in odometer order; {∅} for a vacuous player. Throws kUnknownPlayer or
// kStrategySpaceTooLarge.
std::vector<PlayerStrategy> player_strategies(
    const Form& f, const PlayerId& i, std::size_t cap = kDefaultStrategyCap);

bool is_player_strategy(const Form& f, const PlayerId& i, const ChoiceSet& s);

using Profile = std::map<PlayerId, ChoiceSet>;

// S ↦ (S ∩ C_i)_i. Throws kNotAStrategy.
Profile grand_to_profile(const Form& f, const GrandStrategy& s);
// (S_i)_i ↦ ∪_i S_i. Throws kMissingPlayer, kUnknownPlayer or
// kInvalidComponent.
GrandStrategy profile_to_grand(const Form& f, const Profile& profile);

// [source, target, ι, τ, δ] with [f1]–[f3] checked.
class FormMorphism {
 public:
  // Throws kNotTotal, kUnknownPlayer, the preform-morphism errors, or
  // kPlayerOwnershipViolated.
  static FormMorphism validate(Form source, Form target, PlayerMap iota,
                               NodeMap tau, ChoiceMap delta);

  const Form& source() const { return source_; }
  const Form& target() const { return target_; }
  const PlayerMap& iota() const { return iota_; }
  const NodeMap& tau() const { return tau_; }
  const ChoiceMap& delta() const { return delta_; }

  friend bool operator==(const FormMorphism&, const FormMorphism&) = default;

 private:
  FormMorphism(Form source, Form target, PlayerMap iota, NodeMap tau,
               ChoiceMap delta)
      : source_(std::move(source)),
        target_(std::move(target)),
        iota_(std::move(iota)),
        tau_(std::move(tau)),
        delta_(std::move(delta)) {}

  Form source_;
  Form target_;
  PlayerMap iota_;
  NodeMap tau_;
  ChoiceMap delta_;
};

inline FormMorphism validate_form_morphism(Form source, Form target,
                                           PlayerMap iota, NodeMap tau,
                                           ChoiceMap delta) {
  return FormMorphism::validate(std::move(source), std::move(target),
                                std::move(iota), std::move(tau),
                                std::move(delta));
}

FormMorphism identity_form_morphism(const Form& f);

// The preform morphism underlying a form morphism.
PreformMorphism forget(const FormMorphism& m);

// I ⊆ I′, T is the up-set of its root in T′, C_i ⊆ C′_i, ⊗ agrees with ⊗′ on
// F^gr, and H ⊆ H′.
bool is_subform(const Form& inner, const Form& outer);

}  // namespace ncg

#endif  // NCG_FORM_H_
