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


#include "ncg/isomorphism_search.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ncg/error.h"

namespace ncg {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// AHU-style shape ids, interned in a table shared by both trees so that equal
// ids mean isomorphic rooted subtrees.
class ShapeTable {
 public:
  std::vector<int> shapes(const Tree& tree) {
    std::vector<std::size_t> order(tree.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return tree.stage_at(a) > tree.stage_at(b);
    });
    std::vector<int> out(tree.size(), -1);
    for (std::size_t t : order) {
      std::vector<int> key;
      for (std::size_t c : tree.child_indices(t)) key.push_back(out[c]);
      std::sort(key.begin(), key.end());
      auto [it, fresh] = ids_.emplace(std::move(key), static_cast<int>(ids_.size()));
      out[t] = it->second;
    }
    return out;
  }

 private:
  std::map<std::vector<int>, int> ids_;
};

struct State {
  std::vector<std::size_t> tau, tau_inv;
  std::vector<std::size_t> delta, delta_inv;
  std::vector<std::size_t> iota, iota_inv;
  // Per source player: β_i and its inverse.
  std::vector<UtilityMap> beta, beta_inv;
};

class Search {
 public:
  Search(const Game& g1, const Game& g2, std::size_t budget)
      : a_(g1), b_(g2), budget_(budget) {}

  std::optional<IsoWitness> run() {
    const Tree& ta = a_.tree();
    const Tree& tb = b_.tree();
    if (ta.size() != tb.size() ||
        a_.preform().choices().size() != b_.preform().choices().size() ||
        a_.players().size() != b_.players().size() ||
        a_.plays().size() != b_.plays().size()) {
      return std::nullopt;
    }
    ShapeTable table;
    shape_a_ = table.shapes(ta);
    shape_b_ = table.shapes(tb);
    if (shape_a_[ta.root_index()] != shape_b_[tb.root_index()]) {
      return std::nullopt;
    }

    std::vector<std::size_t> queue{ta.root_index()};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (std::size_t c : ta.child_indices(queue[k])) queue.push_back(c);
    }
    order_.assign(queue.begin() + 1, queue.end());

    State s;
    s.tau.assign(ta.size(), kNone);
    s.tau_inv.assign(tb.size(), kNone);
    s.delta.assign(a_.preform().choices().size(), kNone);
    s.delta_inv.assign(b_.preform().choices().size(), kNone);
    s.iota.assign(a_.players().size(), kNone);
    s.iota_inv.assign(b_.players().size(), kNone);
    s.beta.assign(a_.players().size(), {});
    s.beta_inv.assign(a_.players().size(), {});
    s.tau[ta.root_index()] = tb.root_index();
    s.tau_inv[tb.root_index()] = ta.root_index();
    dfs(s, 0);
    return std::move(found_);
  }

 private:
  static bool add_beta(State& s, std::size_t i, const Utility& u,
                       const Utility& v) {
    UtilityMap& forward = s.beta[i];
    if (auto it = forward.find(u); it != forward.end()) return it->second == v;
    if (s.beta_inv[i].count(v)) return false;
    auto next = forward.lower_bound(u);
    if (next != forward.end() && !(v < next->second)) return false;
    if (next != forward.begin() && !(std::prev(next)->second < v)) return false;
    forward.emplace(u, v);
    s.beta_inv[i].emplace(v, u);
    return true;
  }

  bool price_terminal(State& s, std::size_t x, std::size_t i) const {
    const Utility& u = a_.utility_at(i, a_.tree().play_ending_at(x));
    const Utility& v =
        b_.utility_at(s.iota[i], b_.tree().play_ending_at(s.tau[x]));
    return add_beta(s, i, u, v);
  }

  bool bind_player(State& s, std::size_t i, std::size_t j) const {
    if (s.iota[i] != kNone) return s.iota[i] == j;
    if (s.iota_inv[j] != kNone) return false;
    s.iota[i] = j;
    s.iota_inv[j] = i;
    const Tree& ta = a_.tree();
    for (std::size_t t = 0; t < ta.size(); ++t) {
      if (s.tau[t] != kNone && !ta.is_decision_at(t) && !price_terminal(s, t, i)) {
        return false;
      }
    }
    return true;
  }

  bool assign(State& s, std::size_t x, std::size_t y) const {
    const Preform& pa = a_.preform();
    const Preform& pb = b_.preform();
    s.tau[x] = y;
    s.tau_inv[y] = x;
    std::size_t c = pa.previous_choice_at(x);
    std::size_t d = pb.previous_choice_at(y);
    if (s.delta[c] == kNone) {
      if (s.delta_inv[d] != kNone) return false;
      s.delta[c] = d;
      s.delta_inv[d] = c;
    } else if (s.delta[c] != d) {
      return false;
    }
    if (!bind_player(s, a_.form().owner_at(c), b_.form().owner_at(d))) {
      return false;
    }
    if (!a_.tree().is_decision_at(x)) {
      for (std::size_t i = 0; i < s.iota.size(); ++i) {
        if (s.iota[i] != kNone && !price_terminal(s, x, i)) return false;
      }
    }
    return true;
  }

  bool dfs(const State& s, std::size_t pos) {
    if (pos == order_.size()) return finish(s);
    std::size_t x = order_[pos];
    std::size_t image_parent = s.tau[a_.tree().parent_index(x)];
    for (std::size_t y : b_.tree().child_indices(image_parent)) {
      if (s.tau_inv[y] != kNone || shape_a_[x] != shape_b_[y]) continue;
      if (++expansions_ > budget_) {
        fail(ErrorKind::kSearchBudgetExceeded,
             "no verdict within " + std::to_string(budget_) +
                 " node assignments");
      }
      State next = s;
      if (assign(next, x, y) && dfs(next, pos + 1)) return true;
    }
    return false;
  }

  bool finish(const State& s) {
    std::vector<std::size_t> free_a;
    std::vector<std::size_t> free_b;
    for (std::size_t i = 0; i < s.iota.size(); ++i) {
      if (s.iota[i] == kNone) free_a.push_back(i);
    }
    for (std::size_t j = 0; j < s.iota_inv.size(); ++j) {
      if (s.iota_inv[j] == kNone) free_b.push_back(j);
    }
    do {
      State full = s;
      bool ok = true;
      for (std::size_t k = 0; k < free_a.size() && ok; ++k) {
        ok = bind_player(full, free_a[k], free_b[k]);
      }
      if (ok) {
        found_ = build(full);
        if (found_) return true;
      }
    } while (std::next_permutation(free_b.begin(), free_b.end()));
    return false;
  }

  std::optional<IsoWitness> build(const State& s) const {
    const Tree& ta = a_.tree();
    const Tree& tb = b_.tree();
    PlayerMap iota;
    for (std::size_t i = 0; i < s.iota.size(); ++i) {
      iota.emplace(a_.players()[i], b_.players()[s.iota[i]]);
    }
    NodeMap tau;
    for (std::size_t t = 0; t < s.tau.size(); ++t) {
      tau.emplace(ta.label(t), tb.label(s.tau[t]));
    }
    ChoiceMap delta;
    for (std::size_t c = 0; c < s.delta.size(); ++c) {
      delta.emplace(a_.preform().choice(c), b_.preform().choice(s.delta[c]));
    }
    BetaMap beta;
    for (std::size_t i = 0; i < s.beta.size(); ++i) {
      beta.emplace(a_.players()[i], s.beta[i]);
    }
    return is_isomorphism(GameMorphism::validate(
        a_, b_, std::move(iota), std::move(tau), std::move(delta),
        std::move(beta)));
  }

  const Game& a_;
  const Game& b_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::vector<int> shape_a_;
  std::vector<int> shape_b_;
  std::vector<std::size_t> order_;
  std::optional<IsoWitness> found_;
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const Game& g1, const Game& g2,
                                           std::size_t budget) {
  return Search(g1, g2, budget).run();
}

}  // namespace ncg
