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


#include "ncg/nash.h"

#include <algorithm>
#include <iterator>
#include <string>

#include "ncg/error.h"

namespace ncg {
namespace {

ChoiceSet deviate(const ChoiceSet& s, const ChoiceSet& owned,
                  const ChoiceSet& replacement) {
  ChoiceSet out;
  std::set_difference(s.begin(), s.end(), owned.begin(), owned.end(),
                      std::inserter(out, out.end()));
  out.insert(replacement.begin(), replacement.end());
  return out;
}

bool check(const Game& g, const GrandStrategy& s, bool include_own) {
  if (!is_grand_strategy(g.preform(), s)) {
    fail(ErrorKind::kNotAStrategy, to_string(s) + " is not a grand strategy");
  }
  const Play z = play_of(g.preform(), s);
  for (const PlayerId& i : g.players()) {
    ChoiceSet owned = g.form().owned(i);
    ChoiceSet own;
    std::set_intersection(s.begin(), s.end(), owned.begin(), owned.end(),
                          std::inserter(own, own.end()));
    const Utility& u = g.utility(i, z);
    for (const PlayerStrategy& plus : player_strategies(g.form(), i)) {
      if (!include_own && plus.choices == own) continue;
      Play alt = play_of(g.preform(), deviate(s, owned, plus.choices));
      if (u < g.utility(i, alt)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_nash(const Game& g, const GrandStrategy& s) {
  return check(g, s, true);
}

bool is_nash_star(const Game& g, const GrandStrategy& s) {
  return check(g, s, false);
}

std::vector<GrandStrategy> nash_equilibria(const Game& g, std::size_t cap) {
  const Preform& pf = g.preform();
  const Tree& tree = g.tree();
  std::vector<GrandStrategy> all = grand_strategies(pf, cap);
  const std::size_t sets = pf.information_set_count();
  std::vector<std::size_t> stride(sets, 1);
  for (std::size_t h = sets; h-- > 1;) {
    stride[h - 1] = stride[h] * pf.info_set_choices(h).size();
  }

  std::vector<std::size_t> play(all.size());
  std::vector<std::size_t> digit(sets);
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (std::size_t h = 0; h < sets; ++h) {
      digit[h] = k / stride[h] % pf.info_set_choices(h).size();
    }
    std::size_t t = tree.root_index();
    while (tree.is_decision_at(t)) {
      std::size_t h = pf.info_set_at(t);
      t = pf.successor_at(t, pf.info_set_choices(h)[digit[h]]);
    }
    play[k] = tree.play_ending_at(t);
  }

  std::vector<GrandStrategy> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    bool every = true;
    bool proper = true;
    for (std::size_t i = 0; i < g.players().size(); ++i) {
      const std::vector<std::size_t>& mine =
          g.form().player_info_sets(g.players()[i]);
      std::size_t base = k;
      for (std::size_t h : mine) {
        base -= (k / stride[h] % pf.info_set_choices(h).size()) * stride[h];
      }
      const Utility& u = g.utility_at(i, play[k]);
      std::vector<std::size_t> d(mine.size(), 0);
      for (;;) {
        std::size_t alt = base;
        for (std::size_t j = 0; j < mine.size(); ++j) alt += d[j] * stride[mine[j]];
        bool better = u < g.utility_at(i, play[alt]);
        if (better) {
          every = false;
          if (alt != k) proper = false;
        }
        std::size_t j = mine.size();
        while (j-- > 0) {
          if (++d[j] < pf.info_set_choices(mine[j]).size()) break;
          d[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
      }
    }
    if (every != proper) {
      fail(ErrorKind::kInternalConsistency,
           "the two equilibrium conditions disagree at " + pf.format(all[k]));
    }
    if (proper) out.push_back(all[k]);
  }
  return out;
}

}  // namespace ncg
