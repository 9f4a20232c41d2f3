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


#include "ncg/subgame.h"

#include <string>
#include <vector>

#include "ncg/error.h"

namespace ncg {

bool is_subgame(const Game& inner, const Game& outer) {
  if (!is_subform(inner.form(), outer.form())) return false;
  NodeSet above = strict_predecessors(outer.tree(), inner.tree().root());
  for (const Play& z : inner.plays()) {
    NodeSet members = above;
    members.insert(z.path().begin(), z.path().end());
    auto outer_play = outer.tree().find_play(members);
    if (!outer_play) return false;
    for (const PlayerId& i : inner.players()) {
      if (inner.utility(i, z) !=
          outer.utility(i, outer.plays()[*outer_play])) {
        return false;
      }
    }
  }
  return true;
}

Game subgame_at(const Game& g, const NodeLabel& t_star) {
  const Tree& tree = g.tree();
  const Preform& pf = g.preform();
  if (!tree.is_decision(t_star)) {
    fail(ErrorKind::kNotDecisionNode,
         t_star.to_string() + " has no successor, so it roots no subgame");
  }
  std::vector<bool> inside(tree.size(), false);
  for (std::size_t t = 0; t < tree.size(); ++t) {
    inside[t] = tree.weakly_precedes(t_star, tree.label(t));
  }
  for (std::size_t h = 0; h < pf.information_set_count(); ++h) {
    std::size_t count = 0;
    for (std::size_t t : pf.info_set_nodes(h)) count += inside[t] ? 1 : 0;
    if (count > 0 && count < pf.info_set_nodes(h).size()) {
      fail(ErrorKind::kInformationSetCut,
           to_string(pf.information_set(h)) + " straddles the subtree at " +
               t_star.to_string());
    }
  }

  GameInputs in;
  PreformInputs& p = in.form.preform;
  std::vector<bool> kept(pf.choices().size(), false);
  for (std::size_t t = 0; t < tree.size(); ++t) {
    if (!inside[t]) continue;
    p.nodes.push_back(tree.label(t));
    for (std::size_t c : pf.feasible_at(t)) kept[c] = true;
  }
  for (std::size_t c = 0; c < kept.size(); ++c) {
    if (kept[c]) p.choices.push_back(pf.choice(c));
  }
  for (const Triple& x : pf.triples()) {
    if (inside[tree.index_of(x.node)]) p.triples.push_back(x);
  }
  in.form.players = g.players();
  for (const PlayerId& i : g.players()) {
    std::vector<ChoiceId> owned;
    for (const ChoiceId& c : p.choices) {
      if (g.form().owner(c) == i) owned.push_back(c);
    }
    in.form.ownership.emplace_back(i, std::move(owned));
  }
  for (const Play& z : g.plays()) {
    if (!inside[tree.index_of(z.end())]) continue;
    UtilityRow row;
    for (const NodeLabel& t : z.path()) {
      if (inside[tree.index_of(t)]) row.play.push_back(t);
    }
    for (const PlayerId& i : g.players()) {
      row.values.emplace(i, g.utility(i, z));
    }
    in.utilities.push_back(std::move(row));
  }
  return Game::build(in);
}

}  // namespace ncg
