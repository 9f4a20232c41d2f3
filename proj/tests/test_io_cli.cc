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

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/cli.h"
#include "ncg/error.h"
#include "ncg/io.h"
#include "ncg/nash.h"
#include "support/fixtures.h"

using namespace ncg;
using namespace ncg::test;

namespace fs = std::filesystem;

namespace {

const fs::path kData = NCG_TEST_DATA_DIR;

std::string data(const char* name) { return (kData / name).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const char* name) {
  fs::path dir = fs::temp_directory_path() / "ncg_test_io_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<fs::path> game_fixtures() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(kData)) {
    if (entry.path().extension() == ".game") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ErrorKind> cause_of(const std::string& text) {
  try {
    parse_game(text);
  } catch (const Error& e) {
    return e.root_kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("fixture documents round-trip") {
  std::vector<fs::path> games = game_fixtures();
  CHECK(games.size() >= 8);
  for (const fs::path& p : games) {
    INFO(p.filename().string());
    std::string text = read_file(p);
    Game g = parse_game(text);
    std::string once = serialize_game(g);
    CHECK(parse_game(once) == g);
    CHECK(serialize_game(parse_game(once)) == once);
  }
  for (const char* name : {"fig11a_double.morphism", "fig11a_identity.morphism",
                           "fig11a_flat.morphism"}) {
    INFO(name);
    GameMorphism m = parse_morphism(read_file(data(name)), kData);
    std::string once = serialize_morphism(m);
    CHECK(parse_morphism(once) == m);
    CHECK(serialize_morphism(parse_morphism(once)) == once);
  }
}

TEST_CASE("fixtures match the in-code games") {
  Game g = parse_game(read_file(data("fig11a.game")));
  CHECK(g == example_game());
  CHECK(g.plays().size() == 5);
  CHECK(grand_strategies(g.preform()).size() == 8);
  CHECK(parse_game(read_file(data("minimal.game"))) == minimal_game());
  CHECK(parse_game(read_file(data("absentminded.game"))) == absentminded_game());
  CHECK(parse_game(read_file(data("fig11a_split.game"))) == example_split_game());
  CHECK(parse_game(read_file(data("fig11a_relabeled.game"))) == example_relabeled_game());
  CHECK(parse_game(serialize_game(coordination_game())) == coordination_game());
}

TEST_CASE("rationals are normalized") {
  std::string text = read_file(data("minimal.game"));
  std::string halves = text;
  halves.replace(halves.find("\"P1\":\"0\""), 8, "\"P1\":\"-4/8\"");
  Game g = parse_game(halves);
  CHECK(g.utility(P("P1"), g.plays()[0]) == Q(-1, 2));
  CHECK(serialize_game(g).find("\"-1/2\"") != std::string::npos);

  std::string bad = text;
  bad.replace(bad.find("\"P1\":\"0\""), 8, "\"P1\":\"1/0\"");
  CHECK(error_kind([&] { parse_game(bad); }) == ErrorKind::kSyntaxError);
}

TEST_CASE("document errors") {
  std::string text = read_file(data("minimal.game"));
  CHECK(error_kind([] { parse_game("{\"format_version\": "); }) == ErrorKind::kSyntaxError);
  try {
    parse_game("{\n  \"players\": [,]\n}");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSyntaxError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::string version = text;
  version.replace(version.find("ncg/1"), 5, "ncg/9");
  CHECK(error_kind([&] { parse_game(version); }) == ErrorKind::kSyntaxError);

  std::string cycle = text;
  cycle.replace(cycle.find("\"edges\": ["), 10,
                "\"edges\": [\n    [{\"atom\":\"1\"},\"k\",{\"atom\":\"0\"}],");
  CHECK(error_kind([&] { parse_game(cycle); }) == ErrorKind::kAxiomViolation);
  CHECK(cause_of(cycle).has_value());

  std::string orphan = text;
  orphan.replace(orphan.find("\"P1\": [\"c\"]"), 11, "\"P1\": [\"c\",\"z\"]");
  CHECK(cause_of(orphan) == ErrorKind::kOrphanChoice);

  std::string unpriced = text;
  unpriced.replace(unpriced.find("\"values\":{\"P1\":\"0\"}"), 19, "\"values\":{}");
  try {
    parse_game(unpriced);
    FAIL("expected an axiom violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kAxiomViolation);
    CHECK(e.cause() == ErrorKind::kMissingUtility);
  }
  CHECK(error_kind([] { read_file("/nonexistent/ncg.game"); }) == ErrorKind::kIoError);
}

TEST_CASE("node text") {
  CHECK(parse_node_text("7") == N("7"));
  CHECK(parse_node_text("(a,d)") == Seq({"a", "d"}));
  CHECK(parse_node_text("()") == Seq({}));
  CHECK(parse_node_text("{d,a}") == Set({"a", "d"}));
}

TEST_CASE("cli validate, derive and nash") {
  Run v = cli({"validate", data("fig11a.game")});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("plays: 5\n") != std::string::npos);
  CHECK(v.out.find("grand strategies: 8\n") != std::string::npos);

  Run d = cli({"derive", data("fig11a.game")});
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("{a,d,e} -> {0,1,4,7}") != std::string::npos);
  CHECK(d.out.find("{b,g,e} -> {0,3,5}") != std::string::npos);
  CHECK(d.out.find("{3,4} P3 {e,f}") != std::string::npos);

  Run n = cli({"nash", data("fig11a.game")});
  CHECK(n.code == kExitOk);
  CHECK(n.out == "{b,d,f}\n{b,g,f}\n");
  CHECK(cli({"nash", data("fig11a.game")}).out == n.out);

  CHECK(cli({"--strategy-cap", "4", "derive", data("fig11a.game")}).code == kExitInvalid);
  CHECK(cli({"validate", "/nonexistent/ncg.game"}).code == kExitInvalid);
}

TEST_CASE("cli convert") {
  fs::path out = scratch("cset.game");
  fs::path witness = scratch("cset.witness");
  Run c = cli({"convert", "--to", "cset", data("fig11a.game"), "--out", out.string(),
               "--witness", witness.string()});
  CHECK(c.code == kExitOk);
  Game converted = parse_game(read_file(out));
  CHECK(converted.tree().root() == Set({}));
  CHECK(nash_equilibria(converted) == nash_equilibria(example_game()));
  CHECK(cli({"iso-check", witness.string()}).out == "valid witness\n");

  Run csq = cli({"convert", "--to", "csq", data("fig11a.game")});
  CHECK(csq.code == kExitOk);
  CHECK(parse_game(csq.out).tree().root() == Seq({}));

  Run absent = cli({"convert", "--to", "cset", data("absentminded.game")});
  CHECK(absent.code == kExitInvalid);
  CHECK(absent.err.find("Absentminded") != std::string::npos);

  Run canonical = cli({"convert", "--to", "canonical", data("absentminded.game")});
  CHECK(canonical.code == kExitOk);
  CHECK(canonical.err.find("absentminded") != std::string::npos);

  CHECK(cli({"convert", "--to", "bogus", data("fig11a.game")}).code == kExitUsage);
}

TEST_CASE("cli iso and iso-check") {
  fs::path witness = scratch("relabeled.witness");
  Run found = cli({"iso", data("fig11a.game"), data("fig11a_relabeled.game"), "--witness",
                   witness.string()});
  CHECK(found.code == kExitOk);
  CHECK(found.out.find("tau 7 -> 7'\n") != std::string::npos);
  CHECK(cli({"iso-check", witness.string()}).code == kExitOk);

  Run split = cli({"iso", data("fig11a.game"), data("fig11a_split.game")});
  CHECK(split.code == kExitInvalid);
  CHECK(split.out == "not isomorphic\n");

  Run doubled = cli({"iso-check", data("fig11a_double.morphism")});
  CHECK(doubled.code == kExitOk);
  CHECK(doubled.out == "valid morphism\nisomorphism\n");
  Run flat = cli({"iso-check", data("fig11a_flat.morphism")});
  CHECK(flat.code == kExitInvalid);
  CHECK(flat.out == "valid morphism\nnot an isomorphism\n");
  Run bad = cli({"iso-check", data("fig11a_bad_beta.morphism")});
  CHECK(bad.code == kExitInvalid);
  CHECK(bad.err.find("AxiomViolation") != std::string::npos);
}

TEST_CASE("cli subgame and compose") {
  Run at1 = cli({"subgame", data("fig11a_split.game"), "--at", "1"});
  CHECK(at1.code == kExitOk);
  Game sub = parse_game(at1.out);
  CHECK(sub.tree().root() == N("1"));
  CHECK(sub.plays().size() == 3);

  Run at3 = cli({"subgame", data("fig11a.game"), "--at", "3"});
  CHECK(at3.code == kExitInvalid);
  CHECK(at3.err.find("InformationSetCut") != std::string::npos);

  Run composed = cli({"compose", data("fig11a_identity.morphism"),
                      data("fig11a_double.morphism")});
  CHECK(composed.code == kExitOk);
  GameMorphism m = parse_morphism(composed.out);
  CHECK(m == parse_morphism(read_file(data("fig11a_double.morphism")), kData));
  CHECK(cli({"compose", data("fig11a_double.morphism"), data("fig11a_double.morphism")})
            .code == kExitInvalid);
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"nash"}).code == kExitUsage);
  CHECK(cli({"subgame", data("fig11a.game")}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}
