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

#ifndef NCG_PREFORM_H_
#define NCG_PREFORM_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/labels.h"
#include "ncg/tree.h"

namespace ncg {

// One element (t, c, t#) of the node-and-choice operator's graph: t ⊗ c = t#.
struct Triple {
  NodeLabel node;
  ChoiceId choice;
  NodeLabel successor;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.node != b.node) return a.node < b.node;
    if (a.choice != b.choice) return a.choice < b.choice;
    return a.successor < b.successor;
  }
};

struct PreformInputs {
  std::vector<NodeLabel> nodes;
  std::vector<ChoiceId> choices;
  std::vector<Triple> triples;
};

// A grand strategy names one feasible choice at every information set.
using GrandStrategy = ChoiceSet;

inline constexpr std::size_t kDefaultStrategyCap = std::size_t{1} << 20;

// A node-and-choice preform (T, C, ⊗). The operator graph is the only
// primitive; the tree, feasibility, information sets and previous-choice
// function are derived from it and cached.
class Preform {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Throws kDuplicateNode, kDuplicateChoice, kUnknownNode, kUnknownChoice,
  // kOperatorNotFunction, kOperatorNotInjective, kOperatorHitsRoot,
  // kNodeUnreachable, kOrphanChoice or kInfoSetOverlap.
  static Preform build(const PreformInputs& inputs);

  const Tree& tree() const { return tree_; }
  // Declaration order.
  const std::vector<ChoiceId>& choices() const { return choices_; }
  // Input order, duplicates removed.
  const std::vector<Triple>& triples() const { return triples_; }
  bool has_choice(const ChoiceId& c) const { return choice_index_.count(c) > 0; }

  // F(t).
  ChoiceSet feasible(const NodeLabel& t) const;
  // F⊤(c).
  NodeSet nodes_where_feasible(const ChoiceId& c) const;
  // t ⊗ c, or nullopt when c is not feasible at t.
  std::optional<NodeLabel> successor(const NodeLabel& t, const ChoiceId& c) const;
  // q(t); throws kUnknownNode for the root.
  const ChoiceId& previous_choice(const NodeLabel& t) const;

  // H, ordered by the declaration order of each set's first choice.
  std::size_t information_set_count() const { return info_nodes_.size(); }
  NodeSet information_set(std::size_t h) const;
  std::vector<NodeSet> information_sets() const;
  // F̄(H), in declaration order.
  std::vector<ChoiceId> choices_at(std::size_t h) const;
  // The information set containing a decision node.
  std::size_t information_set_of(const NodeLabel& t) const;

  // "{b,g,f}": a choice set listed in declaration order.
  std::string format(const ChoiceSet& choices) const;

  // Index-level view. Node indices are the tree's; choice indices follow
  // choices().
  std::size_t choice_index(const ChoiceId& c) const;  // throws kUnknownChoice
  const ChoiceId& choice(std::size_t index) const { return choices_[index]; }
  const std::vector<std::size_t>& feasible_at(std::size_t node) const {
    return feasible_[node];
  }
  std::size_t successor_at(std::size_t node, std::size_t choice) const;
  std::size_t previous_choice_at(std::size_t node) const {
    return previous_choice_[node];
  }
  std::size_t info_set_at(std::size_t node) const { return info_of_node_[node]; }
  std::size_t info_set_of_choice(std::size_t choice) const {
    return info_of_choice_[choice];
  }
  const std::vector<std::size_t>& info_set_nodes(std::size_t h) const {
    return info_nodes_[h];
  }
  const std::vector<std::size_t>& info_set_choices(std::size_t h) const {
    return info_choices_[h];
  }

  PreformInputs inputs() const;

  // Equality of node sets, choice sets and operator graphs.
  friend bool operator==(const Preform& a, const Preform& b);

 private:
  explicit Preform(Tree tree) : tree_(std::move(tree)) {}

  Tree tree_;
  std::vector<ChoiceId> choices_;
  std::map<ChoiceId, std::size_t> choice_index_;
  std::vector<Triple> triples_;
  std::vector<std::vector<std::size_t>> feasible_;
  std::vector<std::map<std::size_t, std::size_t>> successor_;
  std::vector<std::size_t> previous_choice_;
  std::vector<std::size_t> info_of_node_;
  std::vector<std::size_t> info_of_choice_;
  std::vector<std::vector<std::size_t>> info_nodes_;
  std::vector<std::vector<std::size_t>> info_choices_;
};

// ∏_{H} |F̄(H)|, saturating at SIZE_MAX.
std::size_t strategy_count(const Preform& pf);

bool is_grand_strategy(const Preform& pf, const GrandStrategy& s);

// Every grand strategy, odometer order: the first information set varies
// slowest, each set's choices in declaration order. Throws
// kStrategySpaceTooLarge when there are more than `cap`.
std::vector<GrandStrategy> grand_strategies(const Preform& pf,
                                            std::size_t cap = kDefaultStrategyCap);

// ζ(S): start at the root and repeatedly follow the unique choice of S that
// is feasible at the current node. Throws kNotAStrategy.
Play play_of(const Preform& pf, const GrandStrategy& s);

// [source, target, τ, δ] with [p1] and [p2] checked.
class PreformMorphism {
 public:
  // Throws kNotTotal, kUnknownNode, kUnknownChoice or kTripleNotPreserved.
  static PreformMorphism validate(Preform source, Preform target, NodeMap tau,
                                  ChoiceMap delta);

  const Preform& source() const { return source_; }
  const Preform& target() const { return target_; }
  const NodeMap& tau() const { return tau_; }
  const ChoiceMap& delta() const { return delta_; }

  friend bool operator==(const PreformMorphism&,
                         const PreformMorphism&) = default;

 private:
  PreformMorphism(Preform source, Preform target, NodeMap tau, ChoiceMap delta)
      : source_(std::move(source)),
        target_(std::move(target)),
        tau_(std::move(tau)),
        delta_(std::move(delta)) {}

  Preform source_;
  Preform target_;
  NodeMap tau_;
  ChoiceMap delta_;
};

inline PreformMorphism validate_preform_morphism(Preform source, Preform target,
                                                 NodeMap tau, ChoiceMap delta) {
  return PreformMorphism::validate(std::move(source), std::move(target),
                                   std::move(tau), std::move(delta));
}

// The tree morphism underlying a preform morphism.
TreeMorphism forget(const PreformMorphism& m);

// inner is a subpreform of outer: its nodes are the up-set of its root in
// outer, its choices are outer choices, its operator is outer's restricted to
// its feasible pairs, and each of its information sets is an outer one.
bool is_subpreform(const Preform& inner, const Preform& outer);

}  // namespace ncg

#endif  // NCG_PREFORM_H_
