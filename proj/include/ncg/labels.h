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

#ifndef NCG_LABELS_H_
#define NCG_LABELS_H_

#include <compare>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ncg {

// Opaque name of a choice.
class ChoiceId {
 public:
  ChoiceId() = default;
  explicit ChoiceId(std::string name) : name_(std::move(name)) {}
  explicit ChoiceId(const char* name) : name_(name) {}

  const std::string& name() const { return name_; }

  friend bool operator==(const ChoiceId&, const ChoiceId&) = default;
  friend std::strong_ordering operator<=>(const ChoiceId&,
                                          const ChoiceId&) = default;

 private:
  std::string name_;
};

// Opaque name of a player.
class PlayerId {
 public:
  PlayerId() = default;
  explicit PlayerId(std::string name) : name_(std::move(name)) {}
  explicit PlayerId(const char* name) : name_(name) {}

  const std::string& name() const { return name_; }

  friend bool operator==(const PlayerId&, const PlayerId&) = default;
  friend std::strong_ordering operator<=>(const PlayerId&,
                                          const PlayerId&) = default;

 private:
  std::string name_;
};

using ChoiceSet = std::set<ChoiceId>;
using ChoiceSequence = std::vector<ChoiceId>;

// A node of a game. Nodes are abstract atoms in general; choice-sequence and
// choice-set games use nodes that literally are the history of choices (or
// its range) leading to them. Equality is structural, and since the Set
// variant is a std::set it ignores order and multiplicity.
class NodeLabel {
 public:
  struct Atom {
    std::string token;
    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
  };

  NodeLabel() = default;

  static NodeLabel atom(std::string token);
  static NodeLabel sequence(ChoiceSequence choices);
  static NodeLabel set(ChoiceSet choices);

  bool is_atom() const { return std::holds_alternative<Atom>(value_); }
  bool is_sequence() const {
    return std::holds_alternative<ChoiceSequence>(value_);
  }
  bool is_set() const { return std::holds_alternative<ChoiceSet>(value_); }

  // Precondition: the matching is_*() holds.
  const std::string& token() const { return std::get<Atom>(value_).token; }
  const ChoiceSequence& as_sequence() const {
    return std::get<ChoiceSequence>(value_);
  }
  const ChoiceSet& as_set() const { return std::get<ChoiceSet>(value_); }

  // "7", "(a,d,e)", "{a,d,e}".
  std::string to_string() const;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
  friend bool operator<(const NodeLabel& a, const NodeLabel& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const NodeLabel& a, const NodeLabel& b) {
    return b < a;
  }
  friend bool operator<=(const NodeLabel& a, const NodeLabel& b) {
    return !(b < a);
  }
  friend bool operator>=(const NodeLabel& a, const NodeLabel& b) {
    return !(a < b);
  }

 private:
  std::variant<Atom, ChoiceSequence, ChoiceSet> value_;
};

using NodeSet = std::set<NodeLabel>;

using NodeMap = std::map<NodeLabel, NodeLabel>;
using ChoiceMap = std::map<ChoiceId, ChoiceId>;
using PlayerMap = std::map<PlayerId, PlayerId>;

// Shorthand for atom nodes, mostly for tests and fixtures.
inline NodeLabel node(std::string token) {
  return NodeLabel::atom(std::move(token));
}

std::ostream& operator<<(std::ostream& os, const ChoiceId& c);
std::ostream& operator<<(std::ostream& os, const PlayerId& i);
std::ostream& operator<<(std::ostream& os, const NodeLabel& t);

// "{0,1,4}" in the set's own order.
std::string to_string(const NodeSet& nodes);
// "{a,b}" in the set's own order.
std::string to_string(const ChoiceSet& choices);

}  // namespace ncg

#endif  // NCG_LABELS_H_
