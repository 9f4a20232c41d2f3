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

#include "support/fixtures.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace ncg::test {
namespace {

struct ExamplePlay {
  std::vector<const char*> path;
  long long p1, p2, p3;
};

// U_P1, U_P2, U_P3 per play.
const std::vector<ExamplePlay>& example_table() {
  static const std::vector<ExamplePlay> table = {
      {{"0", "3", "5"}, 1, 0, 0},
      {{"0", "3", "6"}, 0, 0, 1},
      {{"0", "1", "4", "7"}, 0, 1, 1},
      {{"0", "1", "4", "8"}, -1, 1, 0},
      {{"0", "1", "2"}, 0, 0, 1},
  };
  return table;
}

std::vector<NodeLabel> atoms(std::initializer_list<const char*> tokens) {
  std::vector<NodeLabel> out;
  for (const char* t : tokens) out.push_back(N(t));
  return out;
}

std::vector<NodeLabel> atoms(const std::vector<const char*>& tokens) {
  std::vector<NodeLabel> out;
  for (const char* t : tokens) out.push_back(N(t));
  return out;
}

Triple triple(const char* t, const char* c, const char* s) {
  return Triple{N(t), C(c), N(s)};
}

}  // namespace

NodeLabel Seq(std::initializer_list<const char*> choices) {
  ChoiceSequence seq;
  for (const char* c : choices) seq.emplace_back(c);
  return NodeLabel::sequence(std::move(seq));
}

NodeLabel Set(std::initializer_list<const char*> choices) {
  ChoiceSet set;
  for (const char* c : choices) set.emplace(c);
  return NodeLabel::set(std::move(set));
}

NodeSet Nodes(std::initializer_list<const char*> tokens) {
  NodeSet out;
  for (const char* t : tokens) out.insert(N(t));
  return out;
}

ChoiceSet Choices(std::initializer_list<const char*> names) {
  ChoiceSet out;
  for (const char* c : names) out.emplace(c);
  return out;
}

Utility Q(long long p, long long q) { return Utility(p, q); }

Tree example_tree() {
  return Tree::build(atoms({"0", "1", "2", "3", "4", "5", "6", "7", "8"}),
                     {{N("1"), N("0")}, {N("2"), N("1")}, {N("3"), N("0")},
                      {N("4"), N("1")}, {N("5"), N("3")}, {N("6"), N("3")},
                      {N("7"), N("4")}, {N("8"), N("4")}});
}

Tree star_source_tree() {
  return Tree::build(atoms({"1", "2", "3", "4"}),
                     {{N("2"), N("1")}, {N("3"), N("1")}, {N("4"), N("1")}});
}

Tree star_target_tree() {
  return Tree::build(
      atoms({"10", "11", "12", "13", "14", "15", "16", "17"}),
      {{N("11"), N("10")}, {N("17"), N("10")}, {N("12"), N("11")},
       {N("13"), N("11")}, {N("14"), N("11")}, {N("15"), N("14")},
       {N("16"), N("14")}});
}

NodeMap star_tau() {
  NodeMap tau;
  for (int n = 1; n <= 4; ++n) {
    tau.emplace(N(std::to_string(n)), N(std::to_string(10 + n)));
  }
  return tau;
}

PreformInputs example_preform_inputs() {
  PreformInputs in;
  in.nodes = atoms({"0", "1", "2", "3", "4", "5", "6", "7", "8"});
  for (const char* c : {"a", "b", "g", "d", "e", "f"}) in.choices.emplace_back(c);
  in.triples = {triple("0", "a", "1"), triple("0", "b", "3"),
                triple("1", "g", "2"), triple("1", "d", "4"),
                triple("3", "e", "5"), triple("3", "f", "6"),
                triple("4", "e", "7"), triple("4", "f", "8")};
  return in;
}

FormInputs example_form_inputs() {
  FormInputs in;
  in.preform = example_preform_inputs();
  in.players = {P("P1"), P("P2"), P("P3")};
  in.ownership = {{P("P1"), {C("a"), C("b")}},
                  {P("P2"), {C("g"), C("d")}},
                  {P("P3"), {C("e"), C("f")}}};
  return in;
}

GameInputs example_game_inputs() {
  GameInputs in;
  in.form = example_form_inputs();
  for (const ExamplePlay& row : example_table()) {
    in.utilities.push_back(UtilityRow{
        atoms(row.path),
        {{P("P1"), Q(row.p1)}, {P("P2"), Q(row.p2)}, {P("P3"), Q(row.p3)}}});
  }
  return in;
}

Game example_game() { return Game::build(example_game_inputs()); }

Game example_game_mapped(
    const std::function<Utility(const PlayerId&, const Utility&)>& f) {
  GameInputs in = example_game_inputs();
  for (UtilityRow& row : in.utilities) {
    for (auto& [i, u] : row.values) u = f(i, u);
  }
  return Game::build(in);
}

Game example_split_game() {
  GameInputs in = example_game_inputs();
  in.form.preform.choices.emplace_back("h");
  in.form.preform.choices.emplace_back("i");
  in.form.preform.triples[6] = triple("4", "h", "7");
  in.form.preform.triples[7] = triple("4", "i", "8");
  in.form.ownership[2].second = {C("e"), C("f"), C("h"), C("i")};
  return Game::build(in);
}

Game example_relabeled_game() {
  auto prime = [](const NodeLabel& t) { return N(t.token() + "'"); };
  auto upper = [](const ChoiceId& c) {
    std::string s = c.name();
    for (char& ch : s) ch = static_cast<char>(std::toupper(ch));
    return ChoiceId(s);
  };
  auto rename = [](const PlayerId& i) { return PlayerId("Q" + i.name().substr(1)); };

  GameInputs src = example_game_inputs();
  GameInputs in;
  PreformInputs& pf = in.form.preform;
  for (const char* t : {"8", "3", "0", "5", "1", "7", "2", "6", "4"}) {
    pf.nodes.push_back(prime(N(t)));
  }
  for (const ChoiceId& c : src.form.preform.choices) pf.choices.push_back(upper(c));
  for (const Triple& x : src.form.preform.triples) {
    pf.triples.push_back(Triple{prime(x.node), upper(x.choice), prime(x.successor)});
  }
  for (const PlayerId& i : src.form.players) in.form.players.push_back(rename(i));
  for (const auto& [i, cs] : src.form.ownership) {
    std::vector<ChoiceId> owned;
    for (const ChoiceId& c : cs) owned.push_back(upper(c));
    in.form.ownership.emplace_back(rename(i), owned);
  }
  for (const UtilityRow& row : src.utilities) {
    UtilityRow out;
    for (const NodeLabel& t : row.play) out.play.push_back(prime(t));
    for (const auto& [i, u] : row.values) out.values.emplace(rename(i), 3 * u);
    in.utilities.push_back(std::move(out));
  }
  return Game::build(in);
}

Game absentminded_game() {
  GameInputs in;
  PreformInputs& pf = in.form.preform;
  pf.nodes = {Seq({}), Seq({"a"}), Seq({"b"}), Seq({"a", "a"}), Seq({"a", "b"})};
  pf.choices = {C("a"), C("b")};
  pf.triples = {Triple{Seq({}), C("a"), Seq({"a"})},
                Triple{Seq({}), C("b"), Seq({"b"})},
                Triple{Seq({"a"}), C("a"), Seq({"a", "a"})},
                Triple{Seq({"a"}), C("b"), Seq({"a", "b"})}};
  in.form.players = {P("P1")};
  in.form.ownership = {{P("P1"), {C("a"), C("b")}}};
  in.utilities = {
      UtilityRow{{Seq({}), Seq({"b"})}, {{P("P1"), Q(0)}}},
      UtilityRow{{Seq({}), Seq({"a"}), Seq({"a", "a"})}, {{P("P1"), Q(1)}}},
      UtilityRow{{Seq({}), Seq({"a"}), Seq({"a", "b"})}, {{P("P1"), Q(2)}}}};
  return Game::build(in);
}

Game minimal_game() {
  GameInputs in;
  in.form.preform.nodes = atoms({"0", "1"});
  in.form.preform.choices = {C("c")};
  in.form.preform.triples = {triple("0", "c", "1")};
  in.form.players = {P("P1")};
  in.form.ownership = {{P("P1"), {C("c")}}};
  in.utilities = {UtilityRow{atoms({"0", "1"}), {{P("P1"), Q(0)}}}};
  return Game::build(in);
}

Game coordination_game() {
  GameInputs in;
  PreformInputs& pf = in.form.preform;
  pf.nodes = atoms({"r", "x", "y", "xc", "xd", "yc", "yd"});
  pf.choices = {C("a"), C("b"), C("c"), C("d")};
  pf.triples = {triple("r", "a", "x"),  triple("r", "b", "y"),
                triple("x", "c", "xc"), triple("x", "d", "xd"),
                triple("y", "c", "yc"), triple("y", "d", "yd")};
  in.form.players = {P("P1"), P("P2")};
  in.form.ownership = {{P("P1"), {C("a"), C("b")}}, {P("P2"), {C("c"), C("d")}}};
  auto row = [](const char* end, const char* mid, long long u1, long long u2) {
    return UtilityRow{atoms({"r", mid, end}), {{P("P1"), Q(u1)}, {P("P2"), Q(u2)}}};
  };
  in.utilities = {row("xc", "x", 2, 1), row("xd", "x", 0, 0),
                  row("yc", "y", 0, 0), row("yd", "y", 1, 2)};
  return Game::build(in);
}

GameMorphism utility_morphism(const Game& source, const Game& target,
                              const std::function<Utility(const Utility&)>& f) {
  PlayerMap iota;
  for (const PlayerId& i : source.players()) iota.emplace(i, i);
  NodeMap tau;
  for (const NodeLabel& t : source.tree().nodes()) tau.emplace(t, t);
  ChoiceMap delta;
  for (const ChoiceId& c : source.preform().choices()) delta.emplace(c, c);
  BetaMap beta;
  for (const PlayerId& i : source.players()) {
    for (const Utility& u : source.range(i)) beta[i].emplace(u, f(u));
  }
  return GameMorphism::validate(source, target, iota, tau, delta, beta);
}

std::vector<NodeSet> play_sets(const std::vector<Play>& plays) {
  std::vector<NodeSet> out;
  for (const Play& z : plays) out.push_back(z.members());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncg::test
