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

#include "ncg/labels.h"

namespace ncg {

NodeLabel NodeLabel::atom(std::string token) {
  NodeLabel t;
  t.value_ = Atom{std::move(token)};
  return t;
}

NodeLabel NodeLabel::sequence(ChoiceSequence choices) {
  NodeLabel t;
  t.value_ = std::move(choices);
  return t;
}

NodeLabel NodeLabel::set(ChoiceSet choices) {
  NodeLabel t;
  t.value_ = std::move(choices);
  return t;
}

std::string NodeLabel::to_string() const {
  if (is_atom()) return token();
  std::string out;
  bool first = true;
  auto append = [&](const ChoiceId& c) {
    if (!first) out += ',';
    out += c.name();
    first = false;
  };
  if (is_sequence()) {
    out += '(';
    for (const ChoiceId& c : as_sequence()) append(c);
    out += ')';
  } else {
    out += '{';
    for (const ChoiceId& c : as_set()) append(c);
    out += '}';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ChoiceId& c) {
  return os << c.name();
}

std::ostream& operator<<(std::ostream& os, const PlayerId& i) {
  return os << i.name();
}

std::ostream& operator<<(std::ostream& os, const NodeLabel& t) {
  return os << t.to_string();
}

std::string to_string(const NodeSet& nodes) {
  std::string out = "{";
  bool first = true;
  for (const NodeLabel& t : nodes) {
    if (!first) out += ',';
    out += t.to_string();
    first = false;
  }
  return out + "}";
}

std::string to_string(const ChoiceSet& choices) {
  std::string out = "{";
  bool first = true;
  for (const ChoiceId& c : choices) {
    if (!first) out += ',';
    out += c.name();
    first = false;
  }
  return out + "}";
}

}  // namespace ncg
