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

#include "ncg/morphism.h"

#include <set>
#include <string>

#include "ncg/error.h"

namespace ncg {
namespace {

template <typename Map>
bool is_injective(const Map& m) {
  std::set<typename Map::mapped_type> images;
  for (const auto& entry : m) {
    if (!images.insert(entry.second).second) return false;
  }
  return true;
}

template <typename Map>
Map inverse_of(const Map& m) {
  Map out;
  for (const auto& [from, to] : m) out.emplace(to, from);
  return out;
}

}  // namespace

bool is_strictly_increasing(const UtilityMap& beta) {
  const Utility* previous = nullptr;
  for (const auto& entry : beta) {
    if (previous && !(*previous < entry.second)) return false;
    previous = &entry.second;
  }
  return true;
}

GameMorphism GameMorphism::validate(Game source, Game target, PlayerMap iota,
                                    NodeMap tau, ChoiceMap delta,
                                    BetaMap beta) {
  FormMorphism::validate(source.form(), target.form(), iota, tau, delta);
  TreeMorphism theta =
      TreeMorphism::validate(source.tree(), target.tree(), tau);
  std::vector<Play> preserved = end_preserved_plays(theta);

  for (const auto& entry : beta) {
    if (!source.form().has_player(entry.first)) {
      fail(ErrorKind::kUnknownPlayer,
           "beta is given for " + entry.first.name() +
               ", which is not a source player");
    }
  }
  for (const PlayerId& i : source.players()) {
    auto it = beta.find(i);
    if (it == beta.end()) {
      fail(ErrorKind::kBetaDomainMismatch, "beta is missing for " + i.name());
    }
    const UtilityMap& b = it->second;
    std::set<Utility> domain;
    for (const auto& entry : b) domain.insert(entry.first);
    if (domain != source.range_over(i, preserved)) {
      fail(ErrorKind::kBetaDomainMismatch,
           "the domain of beta_" + i.name() +
               " is not the range of U_" + i.name() +
               " over the end-preserved plays");
    }
    std::set<Utility> codomain = target.range(iota.at(i));
    for (const auto& [u, v] : b) {
      if (codomain.count(v) == 0) {
        fail(ErrorKind::kBetaDomainMismatch,
             "beta_" + i.name() + "(" + to_string(u) + ") = " + to_string(v) +
                 " is not a utility of " + iota.at(i).name());
      }
    }
    const std::pair<const Utility, Utility>* previous = nullptr;
    for (const auto& entry : b) {
      if (previous && entry.second < previous->second) {
        fail(ErrorKind::kBetaNotMonotone,
             "beta_" + i.name() + ": " + to_string(entry.first) + " > " +
                 to_string(previous->first) + " but " +
                 to_string(entry.second) + " < " +
                 to_string(previous->second));
      }
      previous = &entry;
    }
  }

  for (const Play& z : preserved) {
    NodeSet image = image_play(theta, z);
    auto target_play = target.tree().find_play(image);
    if (!target_play) {
      fail(ErrorKind::kInternalConsistency,
           "the image of end-preserved play " + to_string(z) +
               " is not a target play");
    }
    const Play& z_image = target.plays()[*target_play];
    for (const PlayerId& i : source.players()) {
      const Utility& u = source.utility(i, z);
      const Utility& lhs = beta.at(i).at(u);
      const Utility& rhs = target.utility(iota.at(i), z_image);
      if (lhs != rhs) {
        fail(ErrorKind::kUtilityEquationFails,
             "player " + i.name() + ", play " + to_string(z) + ": beta(" +
                 to_string(u) + ") = " + to_string(lhs) + " but U_" +
                 iota.at(i).name() + to_string(z_image) + " = " +
                 to_string(rhs));
      }
    }
  }
  return GameMorphism(std::move(source), std::move(target), std::move(iota),
                      std::move(tau), std::move(delta), std::move(beta),
                      std::move(theta), std::move(preserved));
}

GameMorphism identity_morphism(const Game& g) {
  PlayerMap iota;
  for (const PlayerId& i : g.players()) iota.emplace(i, i);
  NodeMap tau;
  for (const NodeLabel& t : g.tree().nodes()) tau.emplace(t, t);
  ChoiceMap delta;
  for (const ChoiceId& c : g.preform().choices()) delta.emplace(c, c);
  BetaMap beta;
  for (const PlayerId& i : g.players()) {
    UtilityMap& b = beta[i];
    for (const Utility& u : g.range(i)) b.emplace(u, u);
  }
  return GameMorphism::validate(g, g, std::move(iota), std::move(tau),
                                std::move(delta), std::move(beta));
}

GameMorphism compose(const GameMorphism& second, const GameMorphism& first) {
  if (!(first.target() == second.source())) {
    fail(ErrorKind::kTargetSourceMismatch,
         "the first morphism's target is not the second's source");
  }
  PlayerMap iota;
  for (const auto& [from, mid] : first.iota()) {
    iota.emplace(from, second.iota().at(mid));
  }
  NodeMap tau;
  for (const auto& [from, mid] : first.tau()) {
    tau.emplace(from, second.tau().at(mid));
  }
  ChoiceMap delta;
  for (const auto& [from, mid] : first.delta()) {
    delta.emplace(from, second.delta().at(mid));
  }
  TreeMorphism theta = compose(second.theta(), first.theta());
  std::vector<Play> preserved = end_preserved_plays(theta);
  const Game& source = first.source();
  BetaMap beta;
  for (const PlayerId& i : source.players()) {
    const UtilityMap& b1 = first.beta().at(i);
    const UtilityMap& b2 = second.beta().at(first.iota().at(i));
    UtilityMap& out = beta[i];
    for (const Utility& u : source.range_over(i, preserved)) {
      auto mid = b1.find(u);
      auto end = mid == b1.end() ? b2.end() : b2.find(mid->second);
      if (end == b2.end()) {
        fail(ErrorKind::kInternalConsistency,
             "beta composition is undefined at " + to_string(u) +
                 " for player " + i.name());
      }
      out.emplace(u, end->second);
    }
  }
  return GameMorphism::validate(source, second.target(), std::move(iota),
                                std::move(tau), std::move(delta),
                                std::move(beta));
}

FormMorphism forget(const GameMorphism& m) {
  return FormMorphism::validate(m.source().form(), m.target().form(), m.iota(),
                                m.tau(), m.delta());
}

std::optional<IsoWitness> is_isomorphism(const GameMorphism& m) {
  const Game& source = m.source();
  const Game& target = m.target();
  bool iota_bijective = m.iota().size() == target.players().size() &&
                        is_injective(m.iota());
  bool tau_bijective = m.tau().size() == target.tree().size() &&
                       is_injective(m.tau());
  bool delta_bijective =
      m.delta().size() == target.preform().choices().size() &&
      is_injective(m.delta());
  bool structure = iota_bijective && tau_bijective && delta_bijective;

  bool betas_bijective = true;
  bool betas_increasing = true;
  for (const PlayerId& i : source.players()) {
    const UtilityMap& b = m.beta().at(i);
    std::set<Utility> images;
    for (const auto& entry : b) images.insert(entry.second);
    if (images.size() != b.size() || images != target.range(m.iota().at(i))) {
      betas_bijective = false;
    }
    if (!is_strictly_increasing(b)) betas_increasing = false;
  }
  bool all_bijective = structure && betas_bijective;
  bool bijective_and_increasing = structure && betas_increasing;
  if (all_bijective != bijective_and_increasing) {
    fail(ErrorKind::kInternalConsistency,
         "the bijection and strict-monotonicity characterizations of an "
         "isomorphism disagree");
  }
  if (!all_bijective) return std::nullopt;

  PlayerMap iota_inv = inverse_of(m.iota());
  BetaMap beta_inv;
  for (const auto& [i_prime, i] : iota_inv) {
    beta_inv.emplace(i_prime, inverse_of(m.beta().at(i)));
  }
  GameMorphism inverse =
      GameMorphism::validate(target, source, std::move(iota_inv),
                             inverse_of(m.tau()), inverse_of(m.delta()),
                             std::move(beta_inv));
  if (!(compose(inverse, m) == identity_morphism(source)) ||
      !(compose(m, inverse) == identity_morphism(target))) {
    fail(ErrorKind::kInternalConsistency,
         "the inverse does not compose to the identities");
  }
  return IsoWitness{m, std::move(inverse)};
}

}  // namespace ncg
