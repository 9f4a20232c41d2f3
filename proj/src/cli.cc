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


#include "ncg/cli.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ncg/error.h"
#include "ncg/game.h"
#include "ncg/io.h"
#include "ncg/isomorphism_search.h"
#include "ncg/morphism.h"
#include "ncg/nash.h"
#include "ncg/subgame.h"
#include "ncg/transforms.h"

namespace ncg {
namespace {

namespace fs = std::filesystem;

Game load_game(const std::string& path) { return parse_game(read_file(path)); }

// Nodes of `set` listed in the tree's declaration order.
std::string format_nodes(const Tree& tree, const NodeSet& set) {
  std::string out = "{";
  bool first = true;
  for (const NodeLabel& t : tree.nodes()) {
    if (!set.count(t)) continue;
    if (!first) out += ',';
    out += t.to_string();
    first = false;
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int cmd_validate(const std::string& file, std::ostream& out) {
  Game g = load_game(file);
  StyleReport style = style_report(g);
  out << "valid\n"
      << "nodes: " << g.tree().size() << "\n"
      << "choices: " << g.preform().choices().size() << "\n"
      << "players: " << g.players().size() << "\n"
      << "plays: " << g.plays().size() << "\n"
      << "information sets: " << g.preform().information_set_count() << "\n"
      << "grand strategies: " << strategy_count(g.preform()) << "\n"
      << "no-absentmindedness: " << yes_no(style.no_absentmindedness) << "\n"
      << "perfect information: " << yes_no(style.perfect_information) << "\n"
      << "choice sequences: " << yes_no(style.uses_choice_sequences) << "\n"
      << "choice sets: " << yes_no(style.uses_choice_sets) << "\n";
  return kExitOk;
}

int cmd_derive(const std::string& file, std::size_t cap, std::ostream& out) {
  Game g = load_game(file);
  const Preform& pf = g.preform();
  const Tree& tree = g.tree();
  out << "plays\n";
  for (const Play& z : g.plays()) out << "  " << to_string(z) << "\n";
  out << "information sets\n";
  for (std::size_t h = 0; h < pf.information_set_count(); ++h) {
    std::vector<ChoiceId> choices = pf.choices_at(h);
    out << "  " << format_nodes(tree, pf.information_set(h)) << " "
        << g.players()[g.form().info_set_owner(h)] << " "
        << pf.format(ChoiceSet(choices.begin(), choices.end())) << "\n";
  }
  out << "strategies\n";
  for (const PlayerId& i : g.players()) {
    out << "  " << i;
    for (const PlayerStrategy& s : player_strategies(g.form(), i, cap)) {
      out << " " << pf.format(s.choices);
    }
    out << "\n";
  }
  out << "zeta\n";
  for (const GrandStrategy& s : grand_strategies(pf, cap)) {
    out << "  " << pf.format(s) << " -> " << to_string(play_of(pf, s)) << "\n";
  }
  return kExitOk;
}

int cmd_nash(const std::string& file, std::size_t cap, std::ostream& out) {
  Game g = load_game(file);
  std::vector<std::string> lines;
  for (const GrandStrategy& s : nash_equilibria(g, cap)) {
    lines.push_back(g.preform().format(s));
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& line : lines) out << line << "\n";
  return kExitOk;
}

int cmd_convert(const std::string& file, const std::string& to,
                const std::string& out_path, const std::string& witness_path,
                std::ostream& out, std::ostream& err) {
  Game g = load_game(file);
  std::optional<Game> image;
  std::optional<IsoWitness> witness;
  Style style = Style::kChoiceSequence;
  if (to == "csq") {
    Conversion c = to_choice_sequence(g);
    image.emplace(std::move(c.game));
    witness.emplace(std::move(c.witness));
  } else if (to == "cset") {
    Conversion seq = to_choice_sequence(g);
    Conversion set = to_choice_set(seq.game);
    image.emplace(std::move(set.game));
    witness.emplace(
        IsoWitness{compose(set.witness.morphism, seq.witness.morphism),
                   compose(seq.witness.inverse, set.witness.inverse)});
    style = Style::kChoiceSet;
  } else {
    Canonical c = canonicalize(g);
    image.emplace(std::move(c.game));
    witness.emplace(std::move(c.witness));
    style = c.style;
  }
  emit(serialize_game(*image), out_path, out);
  if (!witness_path.empty()) write_file(witness_path, serialize_witness(*witness));
  std::ostream& note = out_path.empty() ? err : out;
  note << "style: " << to_string(style);
  if (to == "canonical" && style == Style::kChoiceSequence) {
    note << " (absentminded: no choice-set image)";
  }
  note << "\n";
  return kExitOk;
}

void print_witness(const IsoWitness& w, std::ostream& out) {
  const GameMorphism& m = w.morphism;
  const Game& g = m.source();
  for (const PlayerId& i : g.players()) {
    out << "iota " << i << " -> " << m.iota().at(i) << "\n";
  }
  for (const NodeLabel& t : g.tree().nodes()) {
    out << "tau " << t << " -> " << m.tau().at(t) << "\n";
  }
  for (const ChoiceId& c : g.preform().choices()) {
    out << "delta " << c << " -> " << m.delta().at(c) << "\n";
  }
  for (const PlayerId& i : g.players()) {
    for (const auto& [u, v] : m.beta().at(i)) {
      out << "beta " << i << " " << to_string(u) << " -> " << to_string(v)
          << "\n";
    }
  }
}

int cmd_iso(const std::string& a, const std::string& b, std::size_t budget,
            const std::string& witness_path, std::ostream& out) {
  Game g1 = load_game(a);
  Game g2 = load_game(b);
  std::optional<IsoWitness> w = find_isomorphism(g1, g2, budget);
  if (!w) {
    out << "not isomorphic\n";
    return kExitInvalid;
  }
  out << "isomorphic\n";
  print_witness(*w, out);
  if (!witness_path.empty()) write_file(witness_path, serialize_witness(*w));
  return kExitOk;
}

int cmd_iso_check(const std::string& file, std::ostream& out) {
  std::string text = read_file(file);
  fs::path base = fs::path(file).parent_path();
  if (looks_like_witness(text)) {
    parse_witness(text, base);
    out << "valid witness\n";
    return kExitOk;
  }
  GameMorphism m = parse_morphism(text, base);
  out << "valid morphism\n";
  if (is_isomorphism(m)) {
    out << "isomorphism\n";
    return kExitOk;
  }
  out << "not an isomorphism\n";
  return kExitInvalid;
}

int cmd_subgame(const std::string& file, const std::string& at,
                const std::string& out_path, std::ostream& out) {
  Game g = load_game(file);
  emit(serialize_game(subgame_at(g, parse_node_text(at))), out_path, out);
  return kExitOk;
}

int cmd_compose(const std::string& first, const std::string& second,
                const std::string& out_path, std::ostream& out) {
  GameMorphism m1 =
      parse_morphism(read_file(first), fs::path(first).parent_path());
  GameMorphism m2 =
      parse_morphism(read_file(second), fs::path(second).parent_path());
  emit(serialize_morphism(compose(m2, m1)), out_path, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Node-and-choice games: validation, morphisms, equilibria, "
               "canonical forms"};
  app.name("ncg");
  app.require_subcommand(1);
  std::size_t cap = kDefaultStrategyCap;
  app.add_option("--strategy-cap", cap,
                 "Refuse to enumerate more grand or player strategies")
      ->check(CLI::PositiveNumber);

  std::string file;
  std::string file2;
  std::string out_path;
  std::string witness_path;
  std::string to;
  std::string at;
  std::size_t budget = kDefaultSearchBudget;

  CLI::App* validate = app.add_subcommand("validate", "Check a game document");
  validate->add_option("FILE", file)->required();

  CLI::App* derive = app.add_subcommand(
      "derive", "Print plays, information sets, strategies and the zeta table");
  derive->add_option("FILE", file)->required();

  CLI::App* nash = app.add_subcommand("nash", "Print the pure Nash equilibria");
  nash->add_option("FILE", file)->required();

  CLI::App* convert = app.add_subcommand(
      "convert", "Rewrite a game in choice-sequence or choice-set style");
  convert->add_option("--to", to, "csq, cset or canonical")
      ->required()
      ->check(CLI::IsMember({"csq", "cset", "canonical"}));
  convert->add_option("FILE", file)->required();
  convert->add_option("--out", out_path, "Write the converted game here");
  convert->add_option("--witness", witness_path, "Write the witness here");

  CLI::App* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("FILE1", file)->required();
  iso->add_option("FILE2", file2)->required();
  iso->add_option("--witness", witness_path, "Write the witness here");
  iso->add_option("--budget", budget, "Node-assignment cap")
      ->check(CLI::PositiveNumber);

  CLI::App* iso_check = app.add_subcommand(
      "iso-check", "Validate a morphism or witness document");
  iso_check->add_option("MORPHISM_FILE", file)->required();

  CLI::App* subgame = app.add_subcommand("subgame", "Extract a subgame");
  subgame->add_option("FILE", file)->required();
  subgame->add_option("--at", at, "Root node: 0, (a,d) or {a,d}")->required();
  subgame->add_option("--out", out_path, "Write the subgame here");

  CLI::App* compose_cmd =
      app.add_subcommand("compose", "Compose two morphisms: M2 after M1");
  compose_cmd->add_option("M1", file)->required();
  compose_cmd->add_option("M2", file2)->required();
  compose_cmd->add_option("--out", out_path, "Write the composite here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, out);
    if (derive->parsed()) return cmd_derive(file, cap, out);
    if (nash->parsed()) return cmd_nash(file, cap, out);
    if (convert->parsed()) {
      return cmd_convert(file, to, out_path, witness_path, out, err);
    }
    if (iso->parsed()) return cmd_iso(file, file2, budget, witness_path, out);
    if (iso_check->parsed()) return cmd_iso_check(file, out);
    if (subgame->parsed()) return cmd_subgame(file, at, out_path, out);
    if (compose_cmd->parsed()) {
      return cmd_compose(file, file2, out_path, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace ncg
