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

#include "ncg/form.h"

#include <algorithm>
#include <limits>
#include <string>

#include "ncg/error.h"

namespace ncg {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

Form Form::build(const FormInputs& inputs) {
  Form f(Preform::build(inputs.preform));
  const Preform& pf = f.preform_;

  for (const PlayerId& i : inputs.players) {
    if (!f.player_index_.emplace(i, f.players_.size()).second) {
      fail(ErrorKind::kDuplicatePlayer, i.name());
    }
    f.players_.push_back(i);
  }

  std::vector<bool> assigned(f.players_.size(), false);
  f.owner_.assign(pf.choices().size(), kNone);
  for (const auto& [player, owned] : inputs.ownership) {
    auto it = f.player_index_.find(player);
    if (it == f.player_index_.end()) {
      fail(ErrorKind::kUnknownPlayer,
           player.name() + " owns choices but is not a declared player");
    }
    std::size_t i = it->second;
    if (assigned[i]) {
      fail(ErrorKind::kDuplicatePlayer,
           player.name() + " has two ownership entries");
    }
    assigned[i] = true;
    for (const ChoiceId& c : owned) {
      if (!pf.has_choice(c)) {
        fail(ErrorKind::kUnknownChoice,
             player.name() + " owns " + c.name() + ", which is not a choice");
      }
      std::size_t k = pf.choice_index(c);
      if (f.owner_[k] != kNone && f.owner_[k] != i) {
        fail(ErrorKind::kChoiceOwnedTwice,
             c.name() + " is owned by " + f.players_[f.owner_[k]].name() +
                 " and " + player.name());
      }
      f.owner_[k] = i;
    }
  }
  for (std::size_t i = 0; i < f.players_.size(); ++i) {
    if (!assigned[i]) {
      fail(ErrorKind::kMissingAssignment,
           f.players_[i].name() + " has no ownership entry");
    }
  }
  for (std::size_t k = 0; k < f.owner_.size(); ++k) {
    if (f.owner_[k] == kNone) {
      fail(ErrorKind::kUnassignedChoice, pf.choice(k).name() + " has no owner");
    }
  }

  const Tree& tree = pf.tree();
  for (std::size_t t = 0; t < tree.size(); ++t) {
    const auto& feasible = pf.feasible_at(t);
    for (std::size_t c : feasible) {
      if (f.owner_[c] != f.owner_[feasible.front()]) {
        fail(ErrorKind::kNodeSplitAcrossPlayers,
             "at " + tree.label(t).to_string() + ", " +
                 pf.choice(feasible.front()).name() + " is owned by " +
                 f.players_[f.owner_[feasible.front()]].name() + " but " +
                 pf.choice(c).name() + " by " + f.players_[f.owner_[c]].name());
      }
    }
  }

  f.info_sets_of_player_.assign(f.players_.size(), {});
  for (std::size_t h = 0; h < pf.information_set_count(); ++h) {
    std::size_t i = f.owner_[pf.info_set_choices(h).front()];
    f.info_set_owner_.push_back(i);
    f.info_sets_of_player_[i].push_back(h);
  }
  return f;
}

std::size_t Form::player_index(const PlayerId& i) const {
  auto it = player_index_.find(i);
  if (it == player_index_.end()) fail(ErrorKind::kUnknownPlayer, i.name());
  return it->second;
}

ChoiceSet Form::owned(const PlayerId& i) const {
  std::size_t k = player_index(i);
  ChoiceSet out;
  for (std::size_t c = 0; c < owner_.size(); ++c) {
    if (owner_[c] == k) out.insert(preform_.choice(c));
  }
  return out;
}

const PlayerId& Form::owner(const ChoiceId& c) const {
  return players_[owner_[preform_.choice_index(c)]];
}

NodeSet Form::player_nodes(const PlayerId& i) const {
  NodeSet out;
  for (std::size_t h : player_info_sets(i)) {
    NodeSet nodes = preform_.information_set(h);
    out.insert(nodes.begin(), nodes.end());
  }
  return out;
}

std::vector<NodeSet> Form::player_information_sets(const PlayerId& i) const {
  std::vector<NodeSet> out;
  for (std::size_t h : player_info_sets(i)) {
    out.push_back(preform_.information_set(h));
  }
  return out;
}

FormInputs Form::inputs() const {
  FormInputs in;
  in.preform = preform_.inputs();
  in.players = players_;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    std::vector<ChoiceId> owned;
    for (std::size_t c = 0; c < owner_.size(); ++c) {
      if (owner_[c] == i) owned.push_back(preform_.choice(c));
    }
    in.ownership.emplace_back(players_[i], std::move(owned));
  }
  return in;
}

bool operator==(const Form& a, const Form& b) {
  if (!(a.preform_ == b.preform_)) return false;
  if (a.player_index_.size() != b.player_index_.size()) return false;
  for (const PlayerId& i : a.players_) {
    if (!b.has_player(i) || a.owned(i) != b.owned(i)) return false;
  }
  return true;
}

std::vector<PlayerStrategy> player_strategies(const Form& f, const PlayerId& i,
                                              std::size_t cap) {
  const Preform& pf = f.preform();
  const std::vector<std::size_t>& sets = f.player_info_sets(i);
  std::size_t count = 1;
  for (std::size_t h : sets) {
    std::size_t width = pf.info_set_choices(h).size();
    if (count > cap / width) {
      fail(ErrorKind::kStrategySpaceTooLarge,
           i.name() + " has more than " + std::to_string(cap) + " strategies");
    }
    count *= width;
  }
  if (count > cap) {
    fail(ErrorKind::kStrategySpaceTooLarge,
         i.name() + " has more than " + std::to_string(cap) + " strategies");
  }
  std::vector<std::size_t> digit(sets.size(), 0);
  std::vector<PlayerStrategy> out;
  for (std::size_t k = 0; k < count; ++k) {
    PlayerStrategy s{i, {}};
    for (std::size_t j = 0; j < sets.size(); ++j) {
      s.choices.insert(pf.choice(pf.info_set_choices(sets[j])[digit[j]]));
    }
    out.push_back(std::move(s));
    for (std::size_t j = sets.size(); j-- > 0;) {
      if (++digit[j] < pf.info_set_choices(sets[j]).size()) break;
      digit[j] = 0;
    }
  }
  return out;
}

bool is_player_strategy(const Form& f, const PlayerId& i, const ChoiceSet& s) {
  const Preform& pf = f.preform();
  std::size_t k = f.player_index(i);
  std::map<std::size_t, int> hits;
  for (std::size_t h : f.player_info_sets(i)) hits[h] = 0;
  for (const ChoiceId& c : s) {
    if (!pf.has_choice(c)) return false;
    std::size_t ci = pf.choice_index(c);
    if (f.owner_at(ci) != k) return false;
    ++hits[pf.info_set_of_choice(ci)];
  }
  return std::all_of(hits.begin(), hits.end(),
                     [](const auto& entry) { return entry.second == 1; });
}

Profile grand_to_profile(const Form& f, const GrandStrategy& s) {
  const Preform& pf = f.preform();
  if (!is_grand_strategy(pf, s)) {
    fail(ErrorKind::kNotAStrategy, to_string(s) + " is not a grand strategy");
  }
  Profile out;
  for (const PlayerId& i : f.players()) out[i];
  for (const ChoiceId& c : s) out[f.owner(c)].insert(c);
  return out;
}

GrandStrategy profile_to_grand(const Form& f, const Profile& profile) {
  for (const auto& entry : profile) {
    if (!f.has_player(entry.first)) {
      fail(ErrorKind::kUnknownPlayer,
           entry.first.name() + " appears in the profile");
    }
  }
  GrandStrategy out;
  for (const PlayerId& i : f.players()) {
    auto it = profile.find(i);
    if (it == profile.end()) {
      fail(ErrorKind::kMissingPlayer, i.name() + " has no strategy in the profile");
    }
    if (!is_player_strategy(f, i, it->second)) {
      fail(ErrorKind::kInvalidComponent,
           to_string(it->second) + " is not a strategy of " + i.name());
    }
    out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

FormMorphism FormMorphism::validate(Form source, Form target, PlayerMap iota,
                                    NodeMap tau, ChoiceMap delta) {
  for (const auto& [from, to] : iota) {
    if (!source.has_player(from)) {
      fail(ErrorKind::kUnknownPlayer,
           "iota maps " + from.name() + ", which is not a source player");
    }
    if (!target.has_player(to)) {
      fail(ErrorKind::kNotTotal, "iota(" + from.name() + ") = " + to.name() +
                                     " is not a target player");
    }
  }
  for (const PlayerId& i : source.players()) {
    if (iota.count(i) == 0) {
      fail(ErrorKind::kNotTotal, "iota is undefined at " + i.name());
    }
  }
  PreformMorphism::validate(source.preform(), target.preform(), tau, delta);
  for (const PlayerId& i : source.players()) {
    const PlayerId& image = iota.at(i);
    for (const ChoiceId& c : source.owned(i)) {
      const ChoiceId& dc = delta.at(c);
      if (target.owner(dc) != image) {
        fail(ErrorKind::kPlayerOwnershipViolated,
             i.name() + " owns " + c.name() + " but delta(" + c.name() +
                 ") = " + dc.name() + " is not owned by iota(" + i.name() +
                 ") = " + image.name());
      }
    }
  }
  return FormMorphism(std::move(source), std::move(target), std::move(iota),
                      std::move(tau), std::move(delta));
}

FormMorphism identity_form_morphism(const Form& f) {
  PlayerMap iota;
  for (const PlayerId& i : f.players()) iota.emplace(i, i);
  NodeMap tau;
  for (const NodeLabel& t : f.tree().nodes()) tau.emplace(t, t);
  ChoiceMap delta;
  for (const ChoiceId& c : f.preform().choices()) delta.emplace(c, c);
  return FormMorphism::validate(f, f, std::move(iota), std::move(tau),
                                std::move(delta));
}

PreformMorphism forget(const FormMorphism& m) {
  return PreformMorphism::validate(m.source().preform(), m.target().preform(),
                                   m.tau(), m.delta());
}

bool is_subform(const Form& inner, const Form& outer) {
  for (const PlayerId& i : inner.players()) {
    if (!outer.has_player(i)) return false;
    ChoiceSet mine = inner.owned(i);
    ChoiceSet theirs = outer.owned(i);
    if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) {
      return false;
    }
  }
  return is_subpreform(inner.preform(), outer.preform());
}

}  // namespace ncg
