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

#ifndef NCG_TREE_H_
#define NCG_TREE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/labels.h"

namespace ncg {

// A finite play: the root-to-end path of a maximal chain. Only finite trees
// are representable, so every play has an end and the collection of
// infinite plays is always empty.
class Play {
 public:
  explicit Play(std::vector<NodeLabel> path) : path_(std::move(path)) {}

  // Root first, end last.
  const std::vector<NodeLabel>& path() const { return path_; }
  const NodeLabel& root() const { return path_.front(); }
  const NodeLabel& end() const { return path_.back(); }
  std::size_t size() const { return path_.size(); }
  NodeSet members() const { return NodeSet(path_.begin(), path_.end()); }
  bool contains(const NodeLabel& t) const;

  friend bool operator==(const Play&, const Play&) = default;
  friend bool operator<(const Play& a, const Play& b) {
    return a.path_ < b.path_;
  }

 private:
  std::vector<NodeLabel> path_;
};

// "{0,1,4,7}", listed root to end.
std::string to_string(const Play& play);

// (child, parent) edge of the immediate-predecessor function.
using PredecessorPair = std::pair<NodeLabel, NodeLabel>;

// A functioned tree: a finite node set with an immediate-predecessor
// function that reaches a unique root from every other node. All derived
// structure (root, decision nodes, stages, plays) is computed once at
// construction; the object is immutable afterwards.
class Tree {
 public:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  // Throws Error with kDuplicateNode, kUnknownNode, kDuplicatePredecessor,
  // kNoRoot, kMultipleRoots, kCycle or kTooSmall.
  static Tree build(std::vector<NodeLabel> nodes,
                    const std::vector<PredecessorPair>& child_parent_pairs);

  std::size_t size() const { return labels_.size(); }
  // Declaration order.
  const std::vector<NodeLabel>& nodes() const { return labels_; }
  bool contains(const NodeLabel& t) const { return index_.count(t) > 0; }

  const NodeLabel& root() const { return labels_[root_]; }
  const NodeSet& decision_nodes() const { return decision_nodes_; }
  bool is_decision(const NodeLabel& t) const;

  std::optional<NodeLabel> parent(const NodeLabel& t) const;
  std::vector<NodeLabel> children(const NodeLabel& t) const;
  int stage(const NodeLabel& t) const;

  // a ≺ b: a is reached from b by applying the predecessor function m ≥ 1
  // times.
  bool precedes(const NodeLabel& a, const NodeLabel& b) const;
  // a ⪯ b.
  bool weakly_precedes(const NodeLabel& a, const NodeLabel& b) const;

  // One play per non-decision node, ordered by the end's declaration order.
  const std::vector<Play>& plays() const { return plays_; }
  // The play whose member set equals `members`, if any.
  std::optional<std::size_t> find_play(const NodeSet& members) const;

  // (child, parent) pairs in child declaration order.
  std::vector<PredecessorPair> predecessor_pairs() const;

  // Index-level view; indices follow declaration order.
  std::size_t index_of(const NodeLabel& t) const;  // throws kUnknownNode
  std::optional<std::size_t> find(const NodeLabel& t) const;
  const NodeLabel& label(std::size_t index) const { return labels_[index]; }
  std::size_t root_index() const { return root_; }
  std::size_t parent_index(std::size_t index) const { return parent_[index]; }
  const std::vector<std::size_t>& child_indices(std::size_t index) const {
    return children_[index];
  }
  int stage_at(std::size_t index) const { return stage_[index]; }
  bool is_decision_at(std::size_t index) const {
    return !children_[index].empty();
  }
  // Index into plays() of the play ending at a non-decision node.
  std::size_t play_ending_at(std::size_t index) const {
    return play_by_end_[index];
  }

  // Structural equality of node sets and predecessor maps.
  friend bool operator==(const Tree& a, const Tree& b);

 private:
  Tree() = default;

  std::vector<NodeLabel> labels_;
  std::map<NodeLabel, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<int> stage_;
  std::size_t root_ = 0;
  NodeSet decision_nodes_;
  std::vector<Play> plays_;
  std::vector<std::size_t> play_by_end_;
};

// P(t) = {p^m(t) | k(t) ≥ m > 0}. Throws kUnknownNode.
NodeSet strict_predecessors(const Tree& tree, const NodeLabel& t);

inline const std::vector<Play>& plays(const Tree& tree) {
  return tree.plays();
}

// The subtree rooted at a decision node: {t | t_star ⪯ t} with the
// predecessor function restricted. Throws kUnknownNode or kNotDecisionNode.
Tree subtree_at(const Tree& tree, const NodeLabel& t_star);

// True iff `chain` is totally ordered by ⪯ and contains every node lying
// strictly between two of its members.
bool is_consecutive_chain(const Tree& tree, const NodeSet& chain);

// A tree morphism [source, target, τ] with [t1] and [t2] checked.
class TreeMorphism {
 public:
  // Throws kNotTotal (missing node, or image outside the target),
  // kUnknownNode (key outside the source) or kEdgeNotPreserved.
  static TreeMorphism validate(Tree source, Tree target, NodeMap tau);

  const Tree& source() const { return source_; }
  const Tree& target() const { return target_; }
  const NodeMap& tau() const { return tau_; }
  const NodeLabel& operator()(const NodeLabel& t) const;

  friend bool operator==(const TreeMorphism&, const TreeMorphism&) = default;

 private:
  TreeMorphism(Tree source, Tree target, NodeMap tau)
      : source_(std::move(source)),
        target_(std::move(target)),
        tau_(std::move(tau)) {}

  Tree source_;
  Tree target_;
  NodeMap tau_;
};

inline TreeMorphism validate_tree_morphism(Tree source, Tree target,
                                           NodeMap tau) {
  return TreeMorphism::validate(std::move(source), std::move(target),
                                std::move(tau));
}

TreeMorphism identity_tree_morphism(const Tree& tree);

// The inclusion of `inner` into `outer`; valid whenever inner's predecessor
// pairs are outer pairs. Throws as TreeMorphism::validate.
TreeMorphism tree_inclusion(const Tree& inner, const Tree& outer);

// True iff the morphism is an inclusion whose source is the up-set of its
// root in the target.
bool is_subtree_inclusion(const TreeMorphism& m);

// Z^θ: the source plays whose end maps to a target node with no strict
// successor.
std::vector<Play> end_preserved_plays(const TreeMorphism& m);

// P'(τ(t°)) ∪ τ̄(Z). A target play exactly when Z is end-preserved.
// Throws kUnknownPlay if z is not a source play.
NodeSet image_play(const TreeMorphism& m, const Play& z);

// second ∘ first. Throws kTargetSourceMismatch.
TreeMorphism compose(const TreeMorphism& second, const TreeMorphism& first);

// The inverse morphism when τ is a bijection, otherwise nullopt.
std::optional<TreeMorphism> is_isomorphism(const TreeMorphism& m);

}  // namespace ncg

#endif  // NCG_TREE_H_
