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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ncg/error.h"
#include "ncg/form.h"
#include "support/fixtures.h"
#include "support/oracles.h"

using namespace ncg;
using namespace ncg::test;

namespace {

Form example() { return Form::build(example_form_inputs()); }

std::vector<ChoiceSet> strategy_sets(const Form& f, const char* player) {
  std::vector<ChoiceSet> out;
  for (const PlayerStrategy& s : player_strategies(f, P(player))) {
    CHECK(s.player == P(player));
    out.push_back(s.choices);
  }
  return out;
}

FormInputs perfect_information_inputs() {
  FormInputs in = example_form_inputs();
  in.preform.choices.emplace_back("h");
  in.preform.choices.emplace_back("i");
  in.preform.triples[6].choice = C("h");
  in.preform.triples[7].choice = C("i");
  in.ownership[2].second = {C("e"), C("f"), C("h"), C("i")};
  return in;
}

}  // namespace

TEST_CASE("example form derives player nodes and information sets") {
  Form f = example();
  CHECK(f.player_nodes(P("P1")) == Nodes({"0"}));
  CHECK(f.player_nodes(P("P2")) == Nodes({"1"}));
  CHECK(f.player_nodes(P("P3")) == Nodes({"3", "4"}));
  CHECK(f.player_information_sets(P("P1")) == std::vector<NodeSet>{Nodes({"0"})});
  CHECK(f.player_information_sets(P("P3")) == std::vector<NodeSet>{Nodes({"3", "4"})});
  CHECK(f.owned(P("P2")) == Choices({"g", "d"}));
  CHECK(f.owner(C("e")) == P("P3"));
  CHECK(error_kind([&] { f.owner(C("z")); }) == ErrorKind::kUnknownChoice);
  CHECK(error_kind([&] { f.player_index(P("P9")); }) == ErrorKind::kUnknownPlayer);
}

TEST_CASE("single-player form") {
  FormInputs in = example_form_inputs();
  in.players = {P("P1")};
  in.ownership = {{P("P1"), {C("a"), C("b"), C("g"), C("d"), C("e"), C("f")}}};
  Form f = Form::build(in);
  CHECK(f.player_nodes(P("P1")) == Nodes({"0", "1", "3", "4"}));
  CHECK(player_strategies(f, P("P1")).size() == 8);
  for (const GrandStrategy& s : grand_strategies(f.preform())) {
    CHECK(grand_to_profile(f, s) == Profile{{P("P1"), s}});
  }
}

TEST_CASE("form construction errors") {
  auto with = [](auto edit) {
    FormInputs in = example_form_inputs();
    edit(in);
    return error_kind([&] { Form::build(in); });
  };
  CHECK(with([](FormInputs& in) { in.ownership[1].second.push_back(C("e")); }) ==
        ErrorKind::kChoiceOwnedTwice);
  CHECK(with([](FormInputs& in) { in.ownership[2].second = {C("e")}; }) ==
        ErrorKind::kUnassignedChoice);
  CHECK(with([](FormInputs& in) {
          in.ownership[1].second = {C("g"), C("d"), C("f")};
          in.ownership[2].second = {C("e")};
        }) == ErrorKind::kNodeSplitAcrossPlayers);
  CHECK(with([](FormInputs& in) { in.ownership.pop_back(); }) ==
        ErrorKind::kMissingAssignment);
  CHECK(with([](FormInputs& in) { in.players.push_back(P("P1")); }) ==
        ErrorKind::kDuplicatePlayer);
  CHECK(with([](FormInputs& in) { in.ownership.emplace_back(P("P1"), std::vector<ChoiceId>{}); }) ==
        ErrorKind::kDuplicatePlayer);
  CHECK(with([](FormInputs& in) { in.ownership[0].first = P("P9"); }) ==
        ErrorKind::kUnknownPlayer);
  CHECK(with([](FormInputs& in) { in.ownership[0].second.push_back(C("z")); }) ==
        ErrorKind::kUnknownChoice);
  CHECK(with([](FormInputs& in) { in.preform.choices.emplace_back("z"); }) ==
        ErrorKind::kOrphanChoice);
}

TEST_CASE("player strategies") {
  Form f = example();
  CHECK(strategy_sets(f, "P1") == std::vector<ChoiceSet>{Choices({"a"}), Choices({"b"})});
  CHECK(strategy_sets(f, "P2") == std::vector<ChoiceSet>{Choices({"g"}), Choices({"d"})});
  CHECK(strategy_sets(f, "P3") == std::vector<ChoiceSet>{Choices({"e"}), Choices({"f"})});
  CHECK(error_kind([&] { player_strategies(f, P("P9")); }) == ErrorKind::kUnknownPlayer);
  CHECK(is_player_strategy(f, P("P3"), Choices({"f"})));
  CHECK_FALSE(is_player_strategy(f, P("P3"), Choices({"e", "f"})));
  CHECK_FALSE(is_player_strategy(f, P("P3"), Choices({"a"})));

  FormInputs in = example_form_inputs();
  in.players.push_back(P("P4"));
  in.ownership.emplace_back(P("P4"), std::vector<ChoiceId>{});
  Form with_vacuous = Form::build(in);
  CHECK(strategy_sets(with_vacuous, "P4") == std::vector<ChoiceSet>{ChoiceSet{}});
  CHECK(with_vacuous.player_nodes(P("P4")).empty());
}

TEST_CASE("profiles and grand strategies") {
  Form f = example();
  Profile p = grand_to_profile(f, Choices({"b", "d", "f"}));
  CHECK(p == Profile{{P("P1"), Choices({"b"})},
                     {P("P2"), Choices({"d"})},
                     {P("P3"), Choices({"f"})}});
  CHECK(profile_to_grand(f, p) == Choices({"b", "d", "f"}));
  GrandStrategy age = profile_to_grand(
      f, {{P("P1"), Choices({"a"})}, {P("P2"), Choices({"g"})}, {P("P3"), Choices({"e"})}});
  CHECK(age == Choices({"a", "g", "e"}));
  CHECK(play_of(f.preform(), age).members() == Nodes({"0", "1", "2"}));

  std::set<GrandStrategy> seen;
  for (const ChoiceSet& s1 : strategy_sets(f, "P1")) {
    for (const ChoiceSet& s2 : strategy_sets(f, "P2")) {
      for (const ChoiceSet& s3 : strategy_sets(f, "P3")) {
        Profile q{{P("P1"), s1}, {P("P2"), s2}, {P("P3"), s3}};
        GrandStrategy s = profile_to_grand(f, q);
        CHECK(grand_to_profile(f, s) == q);
        seen.insert(s);
      }
    }
  }
  CHECK(seen.size() == 8);
  for (const GrandStrategy& s : grand_strategies(f.preform())) {
    CHECK(seen.count(s) == 1);
    CHECK(profile_to_grand(f, grand_to_profile(f, s)) == s);
  }

  CHECK(error_kind([&] { grand_to_profile(f, Choices({"b", "d"})); }) ==
        ErrorKind::kNotAStrategy);
  CHECK(error_kind([&] {
          profile_to_grand(f, {{P("P1"), Choices({"a"})}, {P("P2"), Choices({"g"})}});
        }) == ErrorKind::kMissingPlayer);
  CHECK(error_kind([&] {
          profile_to_grand(f, {{P("P1"), Choices({"a", "b"})},
                               {P("P2"), Choices({"g"})},
                               {P("P3"), Choices({"e"})}});
        }) == ErrorKind::kInvalidComponent);
  CHECK(error_kind([&] {
          profile_to_grand(f, {{P("P1"), Choices({"a"})},
                               {P("P2"), Choices({"g"})},
                               {P("P3"), Choices({"e"})},
                               {P("P9"), ChoiceSet{}}});
        }) == ErrorKind::kUnknownPlayer);

  FormInputs in = example_form_inputs();
  in.players.push_back(P("P4"));
  in.ownership.emplace_back(P("P4"), std::vector<ChoiceId>{});
  Form with_vacuous = Form::build(in);
  Profile q = grand_to_profile(with_vacuous, Choices({"b", "d", "f"}));
  CHECK(q.at(P("P4")).empty());
  CHECK(profile_to_grand(with_vacuous, q) == Choices({"b", "d", "f"}));
}

TEST_CASE("form morphisms") {
  Form f = example();
  FormMorphism id = identity_form_morphism(f);
  CHECK(forget(id).tau().size() == 9);

  PlayerMap swap{{P("P1"), P("P2")}, {P("P2"), P("P1")}, {P("P3"), P("P3")}};
  CHECK(error_kind([&] { FormMorphism::validate(f, f, swap, id.tau(), id.delta()); }) ==
        ErrorKind::kPlayerOwnershipViolated);
  PlayerMap missing{{P("P1"), P("P1")}, {P("P2"), P("P2")}};
  CHECK(error_kind([&] {
          FormMorphism::validate(f, f, missing, id.tau(), id.delta());
        }) == ErrorKind::kNotTotal);
  ChoiceMap swapped = id.delta();
  swapped[C("e")] = C("f");
  swapped[C("f")] = C("e");
  CHECK(error_kind([&] { FormMorphism::validate(f, f, id.iota(), id.tau(), swapped); }) ==
        ErrorKind::kTripleNotPreserved);
}

TEST_CASE("subforms") {
  Form f = example();
  CHECK(is_subform(f, f));

  FormInputs at3;
  at3.preform.nodes = {N("3"), N("5"), N("6")};
  at3.preform.choices = {C("e"), C("f")};
  at3.preform.triples = {Triple{N("3"), C("e"), N("5")}, Triple{N("3"), C("f"), N("6")}};
  at3.players = {P("P3")};
  at3.ownership = {{P("P3"), {C("e"), C("f")}}};
  Form inner = Form::build(at3);
  CHECK_FALSE(is_subform(inner, f));

  Form outer = Form::build(perfect_information_inputs());
  CHECK(is_subform(inner, outer));
  FormInputs at1;
  at1.preform.nodes = {N("1"), N("2"), N("4"), N("7"), N("8")};
  at1.preform.choices = {C("g"), C("d"), C("h"), C("i")};
  at1.preform.triples = {Triple{N("1"), C("g"), N("2")}, Triple{N("1"), C("d"), N("4")},
                         Triple{N("4"), C("h"), N("7")}, Triple{N("4"), C("i"), N("8")}};
  at1.players = {P("P2"), P("P3")};
  at1.ownership = {{P("P2"), {C("g"), C("d")}}, {P("P3"), {C("h"), C("i")}}};
  CHECK(is_subform(Form::build(at1), outer));

  FormInputs wrong_owner = at1;
  wrong_owner.ownership = {{P("P2"), {C("g"), C("d"), C("h"), C("i")}},
                           {P("P3"), {}}};
  CHECK_FALSE(is_subform(Form::build(wrong_owner), outer));
}
