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


#include "ncg/transforms.h"

#include <map>
#include <string>
#include <utility>

#include "ncg/error.h"

namespace ncg {
namespace {

GameInputs relabel(const Game& g, const NodeMap& f) {
  GameInputs in = g.inputs();
  for (NodeLabel& t : in.form.preform.nodes) t = f.at(t);
  for (Triple& x : in.form.preform.triples) {
    x.node = f.at(x.node);
    x.successor = f.at(x.successor);
  }
  for (UtilityRow& row : in.utilities) {
    for (NodeLabel& t : row.play) t = f.at(t);
  }
  return in;
}

BetaMap identity_betas(const Game& g) {
  BetaMap beta;
  for (const PlayerId& i : g.players()) {
    UtilityMap& b = beta[i];
    for (const Utility& u : g.range(i)) b.emplace(u, u);
  }
  return beta;
}

IsoWitness certify(const Game& source, const Game& target, NodeMap tau,
                   BetaMap beta) {
  PlayerMap iota;
  for (const PlayerId& i : source.players()) iota.emplace(i, i);
  ChoiceMap delta;
  for (const ChoiceId& c : source.preform().choices()) delta.emplace(c, c);
  auto witness = is_isomorphism(GameMorphism::validate(
      source, target, std::move(iota), std::move(tau), std::move(delta),
      std::move(beta)));
  if (!witness) {
    fail(ErrorKind::kInternalConsistency,
         "the constructed conversion morphism is not an isomorphism");
  }
  return std::move(*witness);
}

}  // namespace

bool has_no_absentmindedness(const Game& g) {
  const Preform& pf = g.preform();
  const Tree& tree = g.tree();
  for (std::size_t t = 0; t < tree.size(); ++t) {
    if (!tree.is_decision_at(t)) continue;
    for (std::size_t a = tree.parent_index(t); a != Tree::kNoParent;
         a = tree.parent_index(a)) {
      if (pf.info_set_at(a) == pf.info_set_at(t)) return false;
    }
  }
  return true;
}

bool has_perfect_information(const Game& g) {
  const Preform& pf = g.preform();
  for (std::size_t h = 0; h < pf.information_set_count(); ++h) {
    if (pf.info_set_nodes(h).size() != 1) return false;
  }
  return true;
}

bool is_choice_sequence_game(const Game& g) {
  for (const NodeLabel& t : g.tree().nodes()) {
    if (!t.is_sequence()) return false;
  }
  if (!g.tree().root().as_sequence().empty()) return false;
  for (const Triple& x : g.preform().triples()) {
    ChoiceSequence extended = x.node.as_sequence();
    extended.push_back(x.choice);
    if (extended != x.successor.as_sequence()) return false;
  }
  return true;
}

bool is_choice_set_game(const Game& g) {
  for (const NodeLabel& t : g.tree().nodes()) {
    if (!t.is_set()) return false;
  }
  if (!g.tree().root().as_set().empty()) return false;
  for (const Triple& x : g.preform().triples()) {
    ChoiceSet extended = x.node.as_set();
    extended.insert(x.choice);
    if (extended != x.successor.as_set()) return false;
  }
  return true;
}

StyleReport style_report(const Game& g) {
  return StyleReport{has_no_absentmindedness(g), has_perfect_information(g),
                     is_choice_sequence_game(g), is_choice_set_game(g)};
}

Conversion to_choice_sequence(const Game& g) {
  const Tree& tree = g.tree();
  const Preform& pf = g.preform();
  NodeMap tau;
  for (std::size_t t = 0; t < tree.size(); ++t) {
    ChoiceSequence history(static_cast<std::size_t>(tree.stage_at(t)));
    std::size_t s = t;
    for (auto it = history.rbegin(); it != history.rend(); ++it) {
      *it = pf.choice(pf.previous_choice_at(s));
      s = tree.parent_index(s);
    }
    tau.emplace(tree.label(t), NodeLabel::sequence(std::move(history)));
  }
  Game image = Game::build(relabel(g, tau));
  IsoWitness witness = certify(g, image, std::move(tau), identity_betas(g));
  return Conversion{std::move(image), std::move(witness)};
}

Conversion to_choice_set(const Game& g) {
  if (!is_choice_sequence_game(g)) {
    fail(ErrorKind::kNotChoiceSequenceGame,
         "the nodes are not the choice sequences leading to them");
  }
  if (!has_no_absentmindedness(g)) {
    fail(ErrorKind::kAbsentminded,
         "an information set contains two nodes on one play");
  }
  NodeMap tau;
  std::map<NodeLabel, NodeLabel> preimage;
  for (const NodeLabel& t : g.tree().nodes()) {
    const ChoiceSequence& history = t.as_sequence();
    NodeLabel range = NodeLabel::set(ChoiceSet(history.begin(), history.end()));
    auto [it, fresh] = preimage.emplace(range, t);
    if (!fresh) {
      fail(ErrorKind::kInternalConsistency,
           t.to_string() + " and " + it->second.to_string() +
               " have the same range " + range.to_string());
    }
    tau.emplace(t, std::move(range));
  }
  Game image = Game::build(relabel(g, tau));
  IsoWitness witness = certify(g, image, std::move(tau), identity_betas(g));
  return Conversion{std::move(image), std::move(witness)};
}

std::string_view to_string(Style style) {
  return style == Style::kChoiceSet ? "choice-set" : "choice-sequence";
}

Canonical canonicalize(const Game& g) {
  Conversion sequences = to_choice_sequence(g);
  if (!has_no_absentmindedness(sequences.game)) {
    return Canonical{std::move(sequences.game), std::move(sequences.witness),
                     Style::kChoiceSequence};
  }
  Conversion sets = to_choice_set(sequences.game);
  IsoWitness witness{
      compose(sets.witness.morphism, sequences.witness.morphism),
      compose(sequences.witness.inverse, sets.witness.inverse)};
  return Canonical{std::move(sets.game), std::move(witness), Style::kChoiceSet};
}

Conversion apply_utility_transform(const Game& g, const BetaMap& maps) {
  for (const auto& entry : maps) {
    if (!g.form().has_player(entry.first)) {
      fail(ErrorKind::kUnknownPlayer,
           entry.first.name() + " has a utility map but is not a player");
    }
  }
  BetaMap beta;
  for (const PlayerId& i : g.players()) {
    UtilityMap& b = beta[i];
    auto it = maps.find(i);
    for (const Utility& u : g.range(i)) {
      if (it == maps.end()) {
        b.emplace(u, u);
        continue;
      }
      auto image = it->second.find(u);
      if (image == it->second.end()) {
        fail(ErrorKind::kIncompleteUtilityMap,
             "the map for " + i.name() + " has no image for " + to_string(u));
      }
      b.emplace(u, image->second);
    }
    if (!is_strictly_increasing(b)) {
      fail(ErrorKind::kNotStrictlyIncreasing,
           "the map for " + i.name() +
               " is not strictly increasing on its utilities");
    }
  }
  GameInputs in = g.inputs();
  for (UtilityRow& row : in.utilities) {
    for (auto& [i, u] : row.values) u = beta.at(i).at(u);
  }
  Game image = Game::build(in);
  NodeMap tau;
  for (const NodeLabel& t : g.tree().nodes()) tau.emplace(t, t);
  IsoWitness witness = certify(g, image, std::move(tau), std::move(beta));
  return Conversion{std::move(image), std::move(witness)};
}

}  // namespace ncg
