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


#ifndef NCG_TRANSFORMS_H_
#define NCG_TRANSFORMS_H_

#include <string_view>

#include "ncg/game.h"
#include "ncg/morphism.h"

namespace ncg {

struct StyleReport {
  bool no_absentmindedness = false;
  bool perfect_information = false;
  bool uses_choice_sequences = false;
  bool uses_choice_sets = false;

  friend bool operator==(const StyleReport&, const StyleReport&) = default;
};

// No information set holds two nodes one of which precedes the other.
bool has_no_absentmindedness(const Game& g);
// Every information set is a singleton.
bool has_perfect_information(const Game& g);
// Every node is a choice sequence, the root is (), and t ⊗ c = t ⊕ (c).
bool is_choice_sequence_game(const Game& g);
// Every node is a choice set, the root is {}, and t ⊗ c = t ∪ {c}.
bool is_choice_set_game(const Game& g);

StyleReport style_report(const Game& g);

struct Conversion {
  Game game;
  IsoWitness witness;
};

// Relabels every node by the sequence of previous choices from the root.
// Players, choices and utilities are kept; ι, δ and β are identities.
Conversion to_choice_sequence(const Game& g);

// Relabels every node of a choice-sequence game by the set of its entries.
// Throws kNotChoiceSequenceGame or kAbsentminded.
Conversion to_choice_set(const Game& g);

enum class Style { kChoiceSequence, kChoiceSet };

std::string_view to_string(Style style);

struct Canonical {
  Game game;
  IsoWitness witness;
  Style style;
};

// The choice-set image when g has no absentmindedness, else the
// choice-sequence image; the witness composes the stage witnesses.
Canonical canonicalize(const Game& g);

// Replaces U_i by maps[i] ∘ U_i; players missing from `maps` keep their
// utilities. Throws kUnknownPlayer, kIncompleteUtilityMap (a utility of U_i
// has no image) or kNotStrictlyIncreasing.
Conversion apply_utility_transform(const Game& g, const BetaMap& maps);

}  // namespace ncg

#endif  // NCG_TRANSFORMS_H_
