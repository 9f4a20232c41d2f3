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

#include "ncg/preform.h"

#include <algorithm>
#include <limits>
#include <set>

#include "ncg/error.h"

namespace ncg {
namespace {

std::string triple_string(const Triple& x) {
  return "(" + x.node.to_string() + ", " + x.choice.name() + ", " +
         x.successor.to_string() + ")";
}

}  // namespace

Preform Preform::build(const PreformInputs& inputs) {
  std::map<NodeLabel, std::size_t> node_index;
  for (std::size_t k = 0; k < inputs.nodes.size(); ++k) {
    if (!node_index.emplace(inputs.nodes[k], k).second) {
      fail(ErrorKind::kDuplicateNode, inputs.nodes[k].to_string());
    }
  }
  std::map<ChoiceId, std::size_t> choice_index;
  for (std::size_t k = 0; k < inputs.choices.size(); ++k) {
    if (!choice_index.emplace(inputs.choices[k], k).second) {
      fail(ErrorKind::kDuplicateChoice, inputs.choices[k].name());
    }
  }

  std::vector<Triple> triples;
  std::map<std::pair<NodeLabel, ChoiceId>, NodeLabel> graph;
  std::map<NodeLabel, std::pair<NodeLabel, ChoiceId>> hit_by;
  for (const Triple& x : inputs.triples) {
    for (const NodeLabel* t : {&x.node, &x.successor}) {
      if (node_index.count(*t) == 0) {
        fail(ErrorKind::kUnknownNode,
             t->to_string() + " in triple " + triple_string(x));
      }
    }
    if (choice_index.count(x.choice) == 0) {
      fail(ErrorKind::kUnknownChoice,
           x.choice.name() + " in triple " + triple_string(x));
    }
    auto [it, fresh] = graph.emplace(std::pair(x.node, x.choice), x.successor);
    if (!fresh) {
      if (it->second == x.successor) continue;
      fail(ErrorKind::kOperatorNotFunction,
           x.node.to_string() + " ⊗ " + x.choice.name() + " is both " +
               it->second.to_string() + " and " + x.successor.to_string());
    }
    auto [hit, first_hit] =
        hit_by.emplace(x.successor, std::pair(x.node, x.choice));
    if (!first_hit) {
      fail(ErrorKind::kOperatorNotInjective,
           x.successor.to_string() + " = " + hit->second.first.to_string() +
               " ⊗ " + hit->second.second.name() + " = " +
               x.node.to_string() + " ⊗ " + x.choice.name());
    }
    triples.push_back(x);
  }
  if (!inputs.nodes.empty() && hit_by.size() == inputs.nodes.size()) {
    fail(ErrorKind::kOperatorHitsRoot,
         "every node is a successor, so none can be the root");
  }

  std::vector<PredecessorPair> pairs;
  for (const Triple& x : triples) pairs.emplace_back(x.successor, x.node);
  std::optional<Tree> tree;
  try {
    tree = Tree::build(inputs.nodes, pairs);
  } catch (const Error& e) {
    throw Error(ErrorKind::kNodeUnreachable, e.kind(),
                "the derived predecessor function is not a tree: " + e.detail());
  }

  Preform pf(std::move(*tree));
  pf.choices_ = inputs.choices;
  pf.choice_index_ = std::move(choice_index);
  pf.triples_ = std::move(triples);

  const Tree& tr = pf.tree_;
  const std::size_t n = tr.size();
  const std::size_t m = pf.choices_.size();
  pf.feasible_.assign(n, {});
  pf.successor_.assign(n, {});
  pf.previous_choice_.assign(n, npos);
  std::vector<std::vector<std::size_t>> where(m);
  for (const Triple& x : pf.triples_) {
    std::size_t t = tr.index_of(x.node);
    std::size_t c = pf.choice_index_.at(x.choice);
    std::size_t s = tr.index_of(x.successor);
    pf.feasible_[t].push_back(c);
    pf.successor_[t].emplace(c, s);
    pf.previous_choice_[s] = c;
    where[c].push_back(t);
  }
  for (auto& f : pf.feasible_) std::sort(f.begin(), f.end());
  for (auto& w : where) std::sort(w.begin(), w.end());

  for (std::size_t c = 0; c < m; ++c) {
    if (where[c].empty()) {
      fail(ErrorKind::kOrphanChoice,
           pf.choices_[c].name() + " is feasible at no node");
    }
  }

  pf.info_of_node_.assign(n, npos);
  pf.info_of_choice_.assign(m, npos);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t h = pf.info_of_node_[where[c].front()];
    if (h == npos) {
      h = pf.info_nodes_.size();
      for (std::size_t t : where[c]) {
        if (pf.info_of_node_[t] != npos) {
          fail(ErrorKind::kInfoSetOverlap,
               "F⊤(" + pf.choices_[c].name() + ") overlaps another choice's "
               "node set at " + tr.label(t).to_string());
        }
        pf.info_of_node_[t] = h;
      }
      pf.info_nodes_.push_back(where[c]);
      pf.info_choices_.emplace_back();
    } else if (pf.info_nodes_[h] != where[c]) {
      fail(ErrorKind::kInfoSetOverlap,
           "F⊤(" + pf.choices_[c].name() + ") and F⊤(" +
               pf.choices_[pf.info_choices_[h].front()].name() +
               ") intersect without being equal");
    }
    pf.info_of_choice_[c] = h;
    pf.info_choices_[h].push_back(c);
  }

  for (std::size_t h = 0; h < pf.info_nodes_.size(); ++h) {
    for (std::size_t t : pf.info_nodes_[h]) {
      if (pf.feasible_[t] != pf.info_choices_[h]) {
        fail(ErrorKind::kInternalConsistency,
             "F(" + tr.label(t).to_string() +
                 ") differs from the choices of its information set");
      }
    }
  }
  return pf;
}

ChoiceSet Preform::feasible(const NodeLabel& t) const {
  ChoiceSet out;
  for (std::size_t c : feasible_[tree_.index_of(t)]) out.insert(choices_[c]);
  return out;
}

NodeSet Preform::nodes_where_feasible(const ChoiceId& c) const {
  NodeSet out;
  for (std::size_t t : info_nodes_[info_of_choice_[choice_index(c)]]) {
    out.insert(tree_.label(t));
  }
  return out;
}

std::optional<NodeLabel> Preform::successor(const NodeLabel& t,
                                            const ChoiceId& c) const {
  std::size_t s = successor_at(tree_.index_of(t), choice_index(c));
  if (s == npos) return std::nullopt;
  return tree_.label(s);
}

const ChoiceId& Preform::previous_choice(const NodeLabel& t) const {
  std::size_t c = previous_choice_[tree_.index_of(t)];
  if (c == npos) {
    fail(ErrorKind::kUnknownNode,
         "the root " + t.to_string() + " has no previous choice");
  }
  return choices_[c];
}

NodeSet Preform::information_set(std::size_t h) const {
  NodeSet out;
  for (std::size_t t : info_nodes_.at(h)) out.insert(tree_.label(t));
  return out;
}

std::vector<NodeSet> Preform::information_sets() const {
  std::vector<NodeSet> out;
  for (std::size_t h = 0; h < info_nodes_.size(); ++h) {
    out.push_back(information_set(h));
  }
  return out;
}

std::vector<ChoiceId> Preform::choices_at(std::size_t h) const {
  std::vector<ChoiceId> out;
  for (std::size_t c : info_choices_.at(h)) out.push_back(choices_[c]);
  return out;
}

std::size_t Preform::information_set_of(const NodeLabel& t) const {
  std::size_t h = info_of_node_[tree_.index_of(t)];
  if (h == npos) {
    fail(ErrorKind::kNotDecisionNode,
         t.to_string() + " belongs to no information set");
  }
  return h;
}

std::string Preform::format(const ChoiceSet& choices) const {
  std::vector<const ChoiceId*> ordered;
  for (const ChoiceId& c : choices_) {
    if (choices.count(c)) ordered.push_back(&c);
  }
  for (const ChoiceId& c : choices) {
    if (!has_choice(c)) ordered.push_back(&c);
  }
  std::string out = "{";
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    if (k > 0) out += ',';
    out += ordered[k]->name();
  }
  return out + "}";
}

std::size_t Preform::choice_index(const ChoiceId& c) const {
  auto it = choice_index_.find(c);
  if (it == choice_index_.end()) fail(ErrorKind::kUnknownChoice, c.name());
  return it->second;
}

std::size_t Preform::successor_at(std::size_t node, std::size_t choice) const {
  auto it = successor_[node].find(choice);
  return it == successor_[node].end() ? npos : it->second;
}

PreformInputs Preform::inputs() const {
  return PreformInputs{tree_.nodes(), choices_, triples_};
}

bool operator==(const Preform& a, const Preform& b) {
  if (!(a.tree_ == b.tree_)) return false;
  if (ChoiceSet(a.choices_.begin(), a.choices_.end()) !=
      ChoiceSet(b.choices_.begin(), b.choices_.end())) {
    return false;
  }
  return std::set<Triple>(a.triples_.begin(), a.triples_.end()) ==
         std::set<Triple>(b.triples_.begin(), b.triples_.end());
}

std::size_t strategy_count(const Preform& pf) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (std::size_t h = 0; h < pf.information_set_count(); ++h) {
    std::size_t width = pf.info_set_choices(h).size();
    if (total > kMax / width) return kMax;
    total *= width;
  }
  return total;
}

bool is_grand_strategy(const Preform& pf, const GrandStrategy& s) {
  std::vector<int> hits(pf.information_set_count(), 0);
  for (const ChoiceId& c : s) {
    if (!pf.has_choice(c)) return false;
    ++hits[pf.info_set_of_choice(pf.choice_index(c))];
  }
  return std::all_of(hits.begin(), hits.end(), [](int k) { return k == 1; });
}

std::vector<GrandStrategy> grand_strategies(const Preform& pf, std::size_t cap) {
  std::size_t count = strategy_count(pf);
  if (count > cap) {
    fail(ErrorKind::kStrategySpaceTooLarge,
         "the preform has more than " + std::to_string(cap) +
             " grand strategies");
  }
  const std::size_t sets = pf.information_set_count();
  std::vector<std::size_t> digit(sets, 0);
  std::vector<GrandStrategy> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GrandStrategy s;
    for (std::size_t h = 0; h < sets; ++h) {
      s.insert(pf.choice(pf.info_set_choices(h)[digit[h]]));
    }
    out.push_back(std::move(s));
    for (std::size_t h = sets; h-- > 0;) {
      if (++digit[h] < pf.info_set_choices(h).size()) break;
      digit[h] = 0;
    }
  }
  return out;
}

Play play_of(const Preform& pf, const GrandStrategy& s) {
  if (!is_grand_strategy(pf, s)) {
    fail(ErrorKind::kNotAStrategy,
         to_string(s) + " does not pick exactly one choice per information set");
  }
  std::vector<bool> chosen(pf.choices().size(), false);
  for (const ChoiceId& c : s) chosen[pf.choice_index(c)] = true;
  const Tree& tree = pf.tree();
  std::vector<NodeLabel> path;
  std::size_t t = tree.root_index();
  path.push_back(tree.label(t));
  while (tree.is_decision_at(t)) {
    const auto& feasible = pf.feasible_at(t);
    auto it = std::find_if(feasible.begin(), feasible.end(),
                           [&](std::size_t c) { return chosen[c]; });
    t = pf.successor_at(t, *it);
    path.push_back(tree.label(t));
  }
  return Play(std::move(path));
}

PreformMorphism PreformMorphism::validate(Preform source, Preform target,
                                          NodeMap tau, ChoiceMap delta) {
  for (const auto& [from, to] : tau) {
    if (!source.tree().contains(from)) {
      fail(ErrorKind::kUnknownNode,
           "tau maps " + from.to_string() + ", which is not a source node");
    }
    if (!target.tree().contains(to)) {
      fail(ErrorKind::kNotTotal, "tau(" + from.to_string() + ") = " +
                                     to.to_string() + " is not a target node");
    }
  }
  for (const NodeLabel& t : source.tree().nodes()) {
    if (tau.count(t) == 0) {
      fail(ErrorKind::kNotTotal, "tau is undefined at " + t.to_string());
    }
  }
  for (const auto& [from, to] : delta) {
    if (!source.has_choice(from)) {
      fail(ErrorKind::kUnknownChoice,
           "delta maps " + from.name() + ", which is not a source choice");
    }
    if (!target.has_choice(to)) {
      fail(ErrorKind::kNotTotal, "delta(" + from.name() + ") = " + to.name() +
                                     " is not a target choice");
    }
  }
  for (const ChoiceId& c : source.choices()) {
    if (delta.count(c) == 0) {
      fail(ErrorKind::kNotTotal, "delta is undefined at " + c.name());
    }
  }
  for (const Triple& x : source.triples()) {
    Triple image{tau.at(x.node), delta.at(x.choice), tau.at(x.successor)};
    auto s = target.successor(image.node, image.choice);
    if (!s || *s != image.successor) {
      fail(ErrorKind::kTripleNotPreserved,
           triple_string(x) + " maps to " + triple_string(image) +
               ", which is not a target triple");
    }
  }
  return PreformMorphism(std::move(source), std::move(target), std::move(tau),
                         std::move(delta));
}

TreeMorphism forget(const PreformMorphism& m) {
  return TreeMorphism::validate(m.source().tree(), m.target().tree(), m.tau());
}

bool is_subpreform(const Preform& inner, const Preform& outer) {
  const Tree& t_in = inner.tree();
  const Tree& t_out = outer.tree();
  if (!t_out.contains(t_in.root())) return false;
  std::size_t upset = 0;
  for (const NodeLabel& t : t_out.nodes()) {
    if (t_out.weakly_precedes(t_in.root(), t)) {
      if (!t_in.contains(t)) return false;
      ++upset;
    }
  }
  if (upset != t_in.size()) return false;
  for (const ChoiceId& c : inner.choices()) {
    if (!outer.has_choice(c)) return false;
  }
  for (const Triple& x : inner.triples()) {
    auto s = outer.successor(x.node, x.choice);
    if (!s || *s != x.successor) return false;
  }
  std::vector<NodeSet> outer_sets = outer.information_sets();
  for (const NodeSet& h : inner.information_sets()) {
    if (std::find(outer_sets.begin(), outer_sets.end(), h) == outer_sets.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace ncg
