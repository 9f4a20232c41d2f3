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

#include "ncg/game.h"

#include <cctype>
#include <optional>

#include "ncg/error.h"

namespace ncg {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Utility& u) {
  std::string out = numerator(u).str();
  if (denominator(u) != 1) out += "/" + denominator(u).str();
  return out;
}

Utility parse_utility(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorKind::kSyntaxError,
         "\"" + std::string(text) + "\" is not an integer or p/q rational");
  }
  cpp_int p(std::string{num});
  cpp_int q(std::string{den});
  if (q == 0) {
    fail(ErrorKind::kSyntaxError,
         "\"" + std::string(text) + "\" has a zero denominator");
  }
  Utility u(p, q);
  return negative ? Utility(-u) : u;
}

Game Game::build(const GameInputs& inputs) {
  Game g(Form::build(inputs.form));
  const Tree& tree = g.tree();
  const std::size_t players = g.players().size();
  const std::size_t plays = tree.plays().size();

  std::vector<std::vector<std::optional<Utility>>> table(
      players, std::vector<std::optional<Utility>>(plays));
  std::vector<bool> seen(plays, false);
  for (const UtilityRow& row : inputs.utilities) {
    NodeSet members(row.play.begin(), row.play.end());
    auto z = tree.find_play(members);
    if (!z || members.size() != row.play.size()) {
      fail(ErrorKind::kUnknownPlayInTable,
           to_string(members) + " is not a play of the tree");
    }
    if (seen[*z]) {
      fail(ErrorKind::kDuplicatePlayInTable,
           to_string(tree.plays()[*z]) + " is priced twice");
    }
    seen[*z] = true;
    for (const auto& [player, value] : row.values) {
      if (!g.form_.has_player(player)) {
        fail(ErrorKind::kUnknownPlayer,
             player.name() + " is priced at " + to_string(tree.plays()[*z]));
      }
      table[g.form_.player_index(player)][*z] = value;
    }
  }

  g.table_.assign(players, {});
  for (std::size_t i = 0; i < players; ++i) {
    for (std::size_t z = 0; z < plays; ++z) {
      if (!table[i][z]) {
        fail(ErrorKind::kMissingUtility,
             g.players()[i].name() + " has no utility at " +
                 to_string(tree.plays()[z]));
      }
      g.table_[i].push_back(std::move(*table[i][z]));
    }
  }
  return g;
}

const Utility& Game::utility(const PlayerId& i, const Play& z) const {
  std::size_t k = form_.player_index(i);
  auto index = tree().find_play(z.members());
  if (!index) fail(ErrorKind::kUnknownPlay, to_string(z) + " is not a play");
  return table_[k][*index];
}

std::set<Utility> Game::range(const PlayerId& i) const {
  const auto& row = table_[form_.player_index(i)];
  return std::set<Utility>(row.begin(), row.end());
}

std::set<Utility> Game::range_over(const PlayerId& i,
                                   const std::vector<Play>& plays) const {
  std::set<Utility> out;
  for (const Play& z : plays) out.insert(utility(i, z));
  return out;
}

GameInputs Game::inputs() const {
  GameInputs in;
  in.form = form_.inputs();
  const auto& all = plays();
  for (std::size_t z = 0; z < all.size(); ++z) {
    UtilityRow row{all[z].path(), {}};
    for (std::size_t i = 0; i < players().size(); ++i) {
      row.values.emplace(players()[i], table_[i][z]);
    }
    in.utilities.push_back(std::move(row));
  }
  return in;
}

bool operator==(const Game& a, const Game& b) {
  if (!(a.form_ == b.form_)) return false;
  for (std::size_t z = 0; z < a.plays().size(); ++z) {
    auto other = b.tree().find_play(a.plays()[z].members());
    if (!other) return false;
    for (std::size_t i = 0; i < a.players().size(); ++i) {
      std::size_t j = b.form_.player_index(a.players()[i]);
      if (a.table_[i][z] != b.table_[j][*other]) return false;
    }
  }
  return true;
}

}  // namespace ncg
