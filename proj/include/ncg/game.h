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

#ifndef NCG_GAME_H_
#define NCG_GAME_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncg/form.h"
#include "ncg/labels.h"
#include "ncg/tree.h"

namespace ncg {

// Exact rational utility.
using Utility = boost::multiprecision::cpp_rational;

// "3", "-1/2": lowest terms, positive denominator.
std::string to_string(const Utility& u);
// Accepts "n", "-n", "p/q" with optional sign. Throws kSyntaxError, including
// for a zero denominator.
Utility parse_utility(std::string_view text);

struct UtilityRow {
  // Any order; matched against the derived plays as a set.
  std::vector<NodeLabel> play;
  std::map<PlayerId, Utility> values;
};

struct GameInputs {
  FormInputs form;
  std::vector<UtilityRow> utilities;
};

// A node-and-choice game: a form plus one utility per player and play. Each
// U_i is surjective onto its range, which is computed, never supplied.
class Game {
 public:
  // Throws the form errors, kUnknownPlayInTable, kDuplicatePlayInTable,
  // kUnknownPlayer or kMissingUtility.
  static Game build(const GameInputs& inputs);

  const Form& form() const { return form_; }
  const Preform& preform() const { return form_.preform(); }
  const Tree& tree() const { return form_.tree(); }
  const std::vector<PlayerId>& players() const { return form_.players(); }
  const std::vector<Play>& plays() const { return form_.tree().plays(); }

  // U_i(Z). Throws kUnknownPlayer or kUnknownPlay.
  const Utility& utility(const PlayerId& i, const Play& z) const;
  const Utility& utility_at(std::size_t player, std::size_t play) const {
    return table_[player][play];
  }
  // Ū_i(Z).
  std::set<Utility> range(const PlayerId& i) const;
  // Ū_i over a subcollection of plays.
  std::set<Utility> range_over(const PlayerId& i,
                               const std::vector<Play>& plays) const;

  // One row per play, in play order.
  GameInputs inputs() const;

  // Players, nodes, triples, ownership and utility tables.
  friend bool operator==(const Game& a, const Game& b);

 private:
  explicit Game(Form form) : form_(std::move(form)) {}

  Form form_;
  std::vector<std::vector<Utility>> table_;
};

inline const Form& forget_to_form(const Game& g) { return g.form(); }
inline const Preform& forget_to_preform(const Game& g) { return g.preform(); }
inline const Tree& forget_to_tree(const Game& g) { return g.tree(); }

}  // namespace ncg

#endif  // NCG_GAME_H_
