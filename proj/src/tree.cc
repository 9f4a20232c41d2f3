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

#include "ncg/tree.h"

#include <algorithm>

#include "ncg/error.h"

namespace ncg {

bool Play::contains(const NodeLabel& t) const {
  return std::find(path_.begin(), path_.end(), t) != path_.end();
}

std::string to_string(const Play& play) {
  std::string out = "{";
  for (std::size_t k = 0; k < play.path().size(); ++k) {
    if (k > 0) out += ',';
    out += play.path()[k].to_string();
  }
  return out + "}";
}

Tree Tree::build(std::vector<NodeLabel> nodes,
                 const std::vector<PredecessorPair>& child_parent_pairs) {
  Tree tree;
  tree.labels_ = std::move(nodes);
  const std::size_t n = tree.labels_.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!tree.index_.emplace(tree.labels_[k], k).second) {
      fail(ErrorKind::kDuplicateNode, tree.labels_[k].to_string());
    }
  }
  if (n == 0) fail(ErrorKind::kNoRoot, "the node set is empty");
  if (n < 2) fail(ErrorKind::kTooSmall, "a tree needs at least two nodes");

  tree.parent_.assign(n, kNoParent);
  for (const auto& [child, parent] : child_parent_pairs) {
    std::size_t c = tree.index_of(child);
    std::size_t p = tree.index_of(parent);
    if (c == p) fail(ErrorKind::kCycle, child.to_string() + " is its own predecessor");
    if (tree.parent_[c] != kNoParent && tree.parent_[c] != p) {
      fail(ErrorKind::kDuplicatePredecessor,
           child.to_string() + " has predecessors " +
               tree.labels_[tree.parent_[c]].to_string() + " and " +
               parent.to_string());
    }
    tree.parent_[c] = p;
  }

  std::vector<std::size_t> roots;
  for (std::size_t k = 0; k < n; ++k) {
    if (tree.parent_[k] == kNoParent) roots.push_back(k);
  }
  if (roots.empty()) {
    fail(ErrorKind::kCycle,
         "every node has a predecessor, so no root can be reached");
  }
  if (roots.size() > 1) {
    fail(ErrorKind::kMultipleRoots, tree.labels_[roots[0]].to_string() +
                                        " and " +
                                        tree.labels_[roots[1]].to_string());
  }
  tree.root_ = roots.front();

  tree.stage_.assign(n, -1);
  tree.stage_[tree.root_] = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // Walk up until a node of known stage; more than n steps means a cycle.
    std::vector<std::size_t> walk;
    std::size_t t = k;
    while (tree.stage_[t] < 0) {
      walk.push_back(t);
      if (walk.size() > n) {
        fail(ErrorKind::kCycle,
             tree.labels_[k].to_string() + " never reaches the root");
      }
      t = tree.parent_[t];
    }
    int s = tree.stage_[t];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      tree.stage_[*it] = ++s;
    }
  }

  tree.children_.assign(n, {});
  for (std::size_t k = 0; k < n; ++k) {
    if (tree.parent_[k] != kNoParent) tree.children_[tree.parent_[k]].push_back(k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!tree.children_[k].empty()) tree.decision_nodes_.insert(tree.labels_[k]);
  }

  tree.play_by_end_.assign(n, kNoParent);
  for (std::size_t k = 0; k < n; ++k) {
    if (!tree.children_[k].empty()) continue;
    tree.play_by_end_[k] = tree.plays_.size();
    std::vector<NodeLabel> path(static_cast<std::size_t>(tree.stage_[k]) + 1);
    std::size_t t = k;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      *it = tree.labels_[t];
      t = tree.parent_[t];
    }
    tree.plays_.emplace_back(std::move(path));
  }
  return tree;
}

std::size_t Tree::index_of(const NodeLabel& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) fail(ErrorKind::kUnknownNode, t.to_string());
  return it->second;
}

std::optional<std::size_t> Tree::find(const NodeLabel& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Tree::is_decision(const NodeLabel& t) const {
  return is_decision_at(index_of(t));
}

std::optional<NodeLabel> Tree::parent(const NodeLabel& t) const {
  std::size_t p = parent_[index_of(t)];
  if (p == kNoParent) return std::nullopt;
  return labels_[p];
}

std::vector<NodeLabel> Tree::children(const NodeLabel& t) const {
  std::vector<NodeLabel> out;
  for (std::size_t c : children_[index_of(t)]) out.push_back(labels_[c]);
  return out;
}

int Tree::stage(const NodeLabel& t) const { return stage_[index_of(t)]; }

bool Tree::precedes(const NodeLabel& a, const NodeLabel& b) const {
  std::size_t ia = index_of(a);
  std::size_t ib = index_of(b);
  if (stage_[ia] >= stage_[ib]) return false;
  while (stage_[ib] > stage_[ia]) ib = parent_[ib];
  return ia == ib;
}

bool Tree::weakly_precedes(const NodeLabel& a, const NodeLabel& b) const {
  return a == b ? contains(a) : precedes(a, b);
}

std::optional<std::size_t> Tree::find_play(const NodeSet& members) const {
  if (members.empty()) return std::nullopt;
  std::size_t deepest = kNoParent;
  for (const NodeLabel& t : members) {
    auto k = find(t);
    if (!k) return std::nullopt;
    if (deepest == kNoParent || stage_[*k] > stage_[deepest]) deepest = *k;
  }
  if (!children_[deepest].empty()) return std::nullopt;
  if (members.size() != static_cast<std::size_t>(stage_[deepest]) + 1) {
    return std::nullopt;
  }
  for (std::size_t t = deepest; t != kNoParent; t = parent_[t]) {
    if (members.count(labels_[t]) == 0) return std::nullopt;
  }
  return play_by_end_[deepest];
}

std::vector<PredecessorPair> Tree::predecessor_pairs() const {
  std::vector<PredecessorPair> out;
  for (std::size_t k = 0; k < size(); ++k) {
    if (parent_[k] != kNoParent) out.emplace_back(labels_[k], labels_[parent_[k]]);
  }
  return out;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto other = b.find(a.labels_[k]);
    if (!other) return false;
    std::size_t pa = a.parent_[k];
    std::size_t pb = b.parent_[*other];
    if ((pa == Tree::kNoParent) != (pb == Tree::kNoParent)) return false;
    if (pa != Tree::kNoParent && a.labels_[pa] != b.labels_[pb]) return false;
  }
  return true;
}

NodeSet strict_predecessors(const Tree& tree, const NodeLabel& t) {
  NodeSet out;
  std::size_t k = tree.index_of(t);
  for (k = tree.parent_index(k); k != Tree::kNoParent; k = tree.parent_index(k)) {
    out.insert(tree.label(k));
  }
  return out;
}

Tree subtree_at(const Tree& tree, const NodeLabel& t_star) {
  if (!tree.is_decision(t_star)) {
    fail(ErrorKind::kNotDecisionNode,
         t_star.to_string() + " has no successor, so its subtree has one node");
  }
  std::vector<NodeLabel> nodes;
  std::vector<PredecessorPair> pairs;
  for (const NodeLabel& t : tree.nodes()) {
    if (!tree.weakly_precedes(t_star, t)) continue;
    nodes.push_back(t);
    if (t != t_star) pairs.emplace_back(t, *tree.parent(t));
  }
  return Tree::build(std::move(nodes), pairs);
}

bool is_consecutive_chain(const Tree& tree, const NodeSet& chain) {
  for (const NodeLabel& a : chain) {
    if (!tree.contains(a)) return false;
    for (const NodeLabel& b : chain) {
      if (!tree.weakly_precedes(a, b) && !tree.weakly_precedes(b, a)) {
        return false;
      }
    }
  }
  if (chain.empty()) return true;
  // In a chain, consecutiveness means the path from the deepest member up to
  // the shallowest one lies inside the chain.
  auto by_stage = [&](const NodeLabel& a, const NodeLabel& b) {
    return tree.stage(a) < tree.stage(b);
  };
  NodeLabel lowest = *std::min_element(chain.begin(), chain.end(), by_stage);
  NodeLabel deepest = *std::max_element(chain.begin(), chain.end(), by_stage);
  for (std::size_t k = tree.index_of(deepest); tree.label(k) != lowest;
       k = tree.parent_index(k)) {
    if (chain.count(tree.label(k)) == 0) return false;
  }
  return true;
}

TreeMorphism TreeMorphism::validate(Tree source, Tree target, NodeMap tau) {
  for (const auto& [from, to] : tau) {
    if (!source.contains(from)) {
      fail(ErrorKind::kUnknownNode, "tau maps " + from.to_string() +
                                        ", which is not a source node");
    }
    if (!target.contains(to)) {
      fail(ErrorKind::kNotTotal, "tau(" + from.to_string() + ") = " +
                                     to.to_string() +
                                     " is not a target node");
    }
  }
  for (const NodeLabel& t : source.nodes()) {
    if (tau.count(t) == 0) {
      fail(ErrorKind::kNotTotal, "tau is undefined at " + t.to_string());
    }
  }
  for (const auto& [child, parent] : source.predecessor_pairs()) {
    const NodeLabel& image_child = tau.at(child);
    const NodeLabel& image_parent = tau.at(parent);
    auto target_parent = target.parent(image_child);
    if (!target_parent || *target_parent != image_parent) {
      fail(ErrorKind::kEdgeNotPreserved,
           "(" + child.to_string() + ", " + parent.to_string() + ") maps to (" +
               image_child.to_string() + ", " + image_parent.to_string() +
               "), which is not a target predecessor pair");
    }
  }
  return TreeMorphism(std::move(source), std::move(target), std::move(tau));
}

const NodeLabel& TreeMorphism::operator()(const NodeLabel& t) const {
  auto it = tau_.find(t);
  if (it == tau_.end()) fail(ErrorKind::kUnknownNode, t.to_string());
  return it->second;
}

TreeMorphism identity_tree_morphism(const Tree& tree) {
  NodeMap tau;
  for (const NodeLabel& t : tree.nodes()) tau.emplace(t, t);
  return TreeMorphism::validate(tree, tree, std::move(tau));
}

TreeMorphism tree_inclusion(const Tree& inner, const Tree& outer) {
  NodeMap tau;
  for (const NodeLabel& t : inner.nodes()) tau.emplace(t, t);
  return TreeMorphism::validate(inner, outer, std::move(tau));
}

bool is_subtree_inclusion(const TreeMorphism& m) {
  for (const auto& [from, to] : m.tau()) {
    if (from != to) return false;
  }
  const NodeLabel& root = m.source().root();
  for (const NodeLabel& t : m.target().nodes()) {
    if (m.target().weakly_precedes(root, t) != m.source().contains(t)) {
      return false;
    }
  }
  return true;
}

std::vector<Play> end_preserved_plays(const TreeMorphism& m) {
  std::vector<Play> out;
  for (const Play& z : m.source().plays()) {
    if (!m.target().is_decision(m(z.end()))) out.push_back(z);
  }
  return out;
}

NodeSet image_play(const TreeMorphism& m, const Play& z) {
  if (!m.source().find_play(z.members())) {
    fail(ErrorKind::kUnknownPlay, to_string(z) + " is not a source play");
  }
  NodeSet out = strict_predecessors(m.target(), m(m.source().root()));
  for (const NodeLabel& t : z.path()) out.insert(m(t));
  return out;
}

TreeMorphism compose(const TreeMorphism& second, const TreeMorphism& first) {
  if (!(first.target() == second.source())) {
    fail(ErrorKind::kTargetSourceMismatch,
         "the first morphism's target is not the second's source");
  }
  NodeMap tau;
  for (const auto& [from, mid] : first.tau()) tau.emplace(from, second(mid));
  return TreeMorphism::validate(first.source(), second.target(), std::move(tau));
}

std::optional<TreeMorphism> is_isomorphism(const TreeMorphism& m) {
  if (m.source().size() != m.target().size()) return std::nullopt;
  NodeMap inverse;
  for (const auto& [from, to] : m.tau()) {
    if (!inverse.emplace(to, from).second) return std::nullopt;
  }
  return TreeMorphism::validate(m.target(), m.source(), std::move(inverse));
}

}  // namespace ncg
