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

// Hand-built games and trees used across the test binaries. Everything here
// is assembled from literal data through the library's build functions; none
// of it goes through the document parser.

#ifndef NCG_TESTS_SUPPORT_FIXTURES_H_
#define NCG_TESTS_SUPPORT_FIXTURES_H_

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ncg/error.h"
#include "ncg/form.h"
#include "ncg/game.h"
#include "ncg/labels.h"
#include "ncg/morphism.h"
#include "ncg/preform.h"
#include "ncg/tree.h"

namespace ncg::test {

inline NodeLabel N(const std::string& token) { return node(token); }
NodeLabel Seq(std::initializer_list<const char*> choices);
NodeLabel Set(std::initializer_list<const char*> choices);
NodeSet Nodes(std::initializer_list<const char*> tokens);
ChoiceSet Choices(std::initializer_list<const char*> names);
inline ChoiceId C(const char* name) { return ChoiceId(name); }
inline PlayerId P(const char* name) { return PlayerId(name); }
Utility Q(long long p, long long q = 1);

// The atom tree 0..8 with p = {(1,0),(2,1),(3,0),(4,1),(5,3),(6,3),(7,4),(8,4)}.
Tree example_tree();
// The four-node source and eight-node target of the 10+n tree morphism.
Tree star_source_tree();
Tree star_target_tree();
NodeMap star_tau();

PreformInputs example_preform_inputs();
FormInputs example_form_inputs();
GameInputs example_game_inputs();
Game example_game();

// The example game with every utility passed through `f`.
Game example_game_mapped(const std::function<Utility(const PlayerId&, const Utility&)>& f);
// e, f at node 3 and h, i at node 4, all owned by P3.
Game example_split_game();
// Nodes renamed t -> "t'", players P1..P3 -> Q1..Q3, choices upper-cased,
// utilities tripled, nodes declared in a different order.
Game example_relabeled_game();

// One player; () offers a, b; (a) offers the same a, b; utilities 0, 1, 2.
Game absentminded_game();
// Two-node, one-player, one play priced 0.
Game minimal_game();
// Simultaneous 2x2 coordination with equilibria {a,c} and {b,d}.
Game coordination_game();

// Identity ι, τ, δ and β_i = f restricted to the source range.
GameMorphism utility_morphism(const Game& source, const Game& target,
                              const std::function<Utility(const Utility&)>& f);

// The kind of Error thrown by f, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Member sets of the plays, sorted.
std::vector<NodeSet> play_sets(const std::vector<Play>& plays);

}  // namespace ncg::test

#endif  // NCG_TESTS_SUPPORT_FIXTURES_H_
