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


#include "ncg/io.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ncg/error.h"

namespace ncg {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where,
                               const std::string& what) {
  fail(ErrorKind::kSyntaxError, where + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(ErrorKind::kSyntaxError, "line " + std::to_string(line) +
                                      ", column " + std::to_string(column) +
                                      ": malformed JSON");
  }
}

const Json& member(const Json& object, const char* key,
                   const std::string& where) {
  if (!object.is_object()) schema_error(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) {
    schema_error(where, std::string("missing \"") + key + "\"");
  }
  return *it;
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  return j;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

std::string at(const std::string& where, std::size_t k) {
  return where + "/" + std::to_string(k);
}

std::string at(const std::string& where, const std::string& key) {
  return where + "/" + key;
}

void check_version(const Json& doc) {
  const Json& v = member(doc, "format_version", "");
  if (string_of(v, "/format_version") != kFormatVersion) {
    schema_error("/format_version", "expected \"" +
                                        std::string(kFormatVersion) + "\"");
  }
}

std::vector<ChoiceId> choice_list(const Json& j, const std::string& where) {
  std::vector<ChoiceId> out;
  const Json& a = array_of(j, where);
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.emplace_back(string_of(a[k], at(where, k)));
  }
  return out;
}

NodeLabel node_of(const Json& j, const std::string& where) {
  if (j.is_string()) return NodeLabel::atom(j.get<std::string>());
  if (!j.is_object() || j.size() != 1) {
    schema_error(where, "expected {\"atom\": ...}, {\"seq\": [...]} or "
                        "{\"set\": [...]}");
  }
  const auto& [key, value] = *j.items().begin();
  if (key == "atom") return NodeLabel::atom(string_of(value, at(where, key)));
  if (key == "seq") {
    return NodeLabel::sequence(choice_list(value, at(where, key)));
  }
  if (key == "set") {
    std::vector<ChoiceId> list = choice_list(value, at(where, key));
    return NodeLabel::set(ChoiceSet(list.begin(), list.end()));
  }
  schema_error(where, "unknown node kind \"" + key + "\"");
}

Json node_json(const NodeLabel& t) {
  Json out = Json::object();
  if (t.is_atom()) {
    out["atom"] = t.token();
  } else {
    Json list = Json::array();
    if (t.is_sequence()) {
      for (const ChoiceId& c : t.as_sequence()) list.push_back(c.name());
      out["seq"] = std::move(list);
    } else {
      for (const ChoiceId& c : t.as_set()) list.push_back(c.name());
      out["set"] = std::move(list);
    }
  }
  return out;
}

Utility utility_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Utility(j.get<long long>());
  if (!j.is_string()) schema_error(where, "expected a rational as text");
  try {
    return parse_utility(j.get<std::string>());
  } catch (const Error& e) {
    schema_error(where, e.detail());
  }
}

template <typename F>
auto wrap_axioms(F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSyntaxError ||
        e.kind() == ErrorKind::kIoError) {
      throw;
    }
    throw Error(ErrorKind::kAxiomViolation, e.kind(), e.detail());
  }
}

void check_node_choices(const NodeLabel& t, const std::set<ChoiceId>& known,
                        const std::string& where) {
  auto check = [&](const ChoiceId& c) {
    if (known.count(c) == 0) {
      throw Error(ErrorKind::kAxiomViolation, ErrorKind::kUnknownChoice,
                  where + ": node " + t.to_string() + " mentions " + c.name() +
                      ", which is not a choice of the game");
    }
  };
  if (t.is_sequence()) {
    for (const ChoiceId& c : t.as_sequence()) check(c);
  } else if (t.is_set()) {
    for (const ChoiceId& c : t.as_set()) check(c);
  }
}

Game game_of(const Json& doc) {
  check_version(doc);
  GameInputs in;
  FormInputs& form = in.form;
  PreformInputs& pf = form.preform;

  const Json& players = array_of(member(doc, "players", ""), "/players");
  for (std::size_t k = 0; k < players.size(); ++k) {
    form.players.emplace_back(string_of(players[k], at("/players", k)));
  }
  const Json& nodes = array_of(member(doc, "nodes", ""), "/nodes");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    pf.nodes.push_back(node_of(nodes[k], at("/nodes", k)));
  }

  std::set<ChoiceId> seen;
  auto declare = [&](const ChoiceId& c) {
    if (seen.insert(c).second) pf.choices.push_back(c);
  };
  const Json& ownership = member(doc, "ownership", "");
  if (!ownership.is_object()) schema_error("/ownership", "expected an object");
  for (const auto& [player, list] : ownership.items()) {
    std::vector<ChoiceId> owned = choice_list(list, at("/ownership", player));
    for (const ChoiceId& c : owned) declare(c);
    form.ownership.emplace_back(PlayerId(player), std::move(owned));
  }
  const Json& edges = array_of(member(doc, "edges", ""), "/edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::string where = at("/edges", k);
    if (!edges[k].is_array() || edges[k].size() != 3) {
      schema_error(where, "expected [node, choice, node]");
    }
    Triple x{node_of(edges[k][0], at(where, 0)),
             ChoiceId(string_of(edges[k][1], at(where, 1))),
             node_of(edges[k][2], at(where, 2))};
    declare(x.choice);
    pf.triples.push_back(std::move(x));
  }
  for (std::size_t k = 0; k < pf.nodes.size(); ++k) {
    check_node_choices(pf.nodes[k], seen, at("/nodes", k));
  }

  const Json& rows = array_of(member(doc, "utilities", ""), "/utilities");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string where = at("/utilities", k);
    UtilityRow row;
    const Json& play = array_of(member(rows[k], "play", where), at(where, "play"));
    for (std::size_t m = 0; m < play.size(); ++m) {
      row.play.push_back(node_of(play[m], at(at(where, "play"), m)));
    }
    const Json& values = member(rows[k], "values", where);
    if (!values.is_object()) schema_error(at(where, "values"), "expected an object");
    for (const auto& [player, value] : values.items()) {
      row.values.emplace(PlayerId(player),
                         utility_of(value, at(at(where, "values"), player)));
    }
    in.utilities.push_back(std::move(row));
  }
  return wrap_axioms([&] { return Game::build(in); });
}

Json game_json(const Game& g) {
  const Preform& pf = g.preform();
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  Json players = Json::array();
  for (const PlayerId& i : g.players()) players.push_back(i.name());
  doc["players"] = std::move(players);
  Json nodes = Json::array();
  for (const NodeLabel& t : g.tree().nodes()) nodes.push_back(node_json(t));
  doc["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const Triple& x : pf.triples()) {
    edges.push_back(Json::array(
        {node_json(x.node), x.choice.name(), node_json(x.successor)}));
  }
  doc["edges"] = std::move(edges);
  Json ownership = Json::object();
  for (const PlayerId& i : g.players()) {
    Json list = Json::array();
    for (const ChoiceId& c : pf.choices()) {
      if (g.form().owner(c) == i) list.push_back(c.name());
    }
    ownership[i.name()] = std::move(list);
  }
  doc["ownership"] = std::move(ownership);
  Json rows = Json::array();
  for (const Play& z : g.plays()) {
    Json row = Json::object();
    Json play = Json::array();
    for (const NodeLabel& t : z.path()) play.push_back(node_json(t));
    row["play"] = std::move(play);
    Json values = Json::object();
    for (const PlayerId& i : g.players()) {
      values[i.name()] = to_string(g.utility(i, z));
    }
    row["values"] = std::move(values);
    rows.push_back(std::move(row));
  }
  doc["utilities"] = std::move(rows);
  return doc;
}

// Objects spread one member per line; arrays spread one element per line
// when they hold containers; everything inside an array is compact.
void pretty(const Json& j, int indent, std::string& out) {
  std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      pretty(value, indent + 2, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  if (j.is_array() && !j.empty()) {
    bool nested = false;
    for (const Json& e : j) nested = nested || e.is_structured();
    if (!nested) {
      out += j.dump();
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad + j[k].dump();
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  out += j.dump();
}

std::string render(const Json& doc) {
  std::string out;
  pretty(doc, 0, out);
  return out + "\n";
}

Game game_ref(const Json& j, const std::string& where,
              const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    std::filesystem::path path = base_dir / j.get<std::string>();
    return game_of(parse_json(read_file(path)));
  }
  if (!j.is_object()) schema_error(where, "expected a path or a game document");
  return game_of(j);
}

template <typename Key, typename Value, typename F>
std::map<Key, Value> pair_map(const Json& j, const std::string& where, F convert) {
  std::map<Key, Value> out;
  const Json& a = array_of(j, where);
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::string w = at(where, k);
    if (!a[k].is_array() || a[k].size() != 2) schema_error(w, "expected a pair");
    auto [from, to] = convert(a[k][0], a[k][1], w);
    if (!out.emplace(std::move(from), std::move(to)).second) {
      schema_error(w, "the key appears twice");
    }
  }
  return out;
}

GameMorphism morphism_of(const Json& doc, const std::filesystem::path& base_dir) {
  check_version(doc);
  Game source = game_ref(member(doc, "source", ""), "/source", base_dir);
  Game target = game_ref(member(doc, "target", ""), "/target", base_dir);
  auto iota = pair_map<PlayerId, PlayerId>(
      member(doc, "iota", ""), "/iota",
      [](const Json& a, const Json& b, const std::string& w) {
        return std::pair(PlayerId(string_of(a, at(w, 0))),
                         PlayerId(string_of(b, at(w, 1))));
      });
  auto tau = pair_map<NodeLabel, NodeLabel>(
      member(doc, "tau", ""), "/tau",
      [](const Json& a, const Json& b, const std::string& w) {
        return std::pair(node_of(a, at(w, 0)), node_of(b, at(w, 1)));
      });
  auto delta = pair_map<ChoiceId, ChoiceId>(
      member(doc, "delta", ""), "/delta",
      [](const Json& a, const Json& b, const std::string& w) {
        return std::pair(ChoiceId(string_of(a, at(w, 0))),
                         ChoiceId(string_of(b, at(w, 1))));
      });
  BetaMap beta;
  const Json& betas = member(doc, "beta", "");
  if (!betas.is_object()) schema_error("/beta", "expected an object");
  for (const auto& [player, pairs] : betas.items()) {
    beta.emplace(PlayerId(player),
                 pair_map<Utility, Utility>(
                     pairs, at("/beta", player),
                     [](const Json& a, const Json& b, const std::string& w) {
                       return std::pair(utility_of(a, at(w, 0)),
                                        utility_of(b, at(w, 1)));
                     }));
  }
  return wrap_axioms([&] {
    return GameMorphism::validate(std::move(source), std::move(target),
                                  std::move(iota), std::move(tau),
                                  std::move(delta), std::move(beta));
  });
}

Json morphism_json(const GameMorphism& m) {
  const Game& g = m.source();
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["source"] = game_json(g);
  doc["target"] = game_json(m.target());
  Json iota = Json::array();
  for (const PlayerId& i : g.players()) {
    iota.push_back(Json::array({i.name(), m.iota().at(i).name()}));
  }
  doc["iota"] = std::move(iota);
  Json tau = Json::array();
  for (const NodeLabel& t : g.tree().nodes()) {
    tau.push_back(Json::array({node_json(t), node_json(m.tau().at(t))}));
  }
  doc["tau"] = std::move(tau);
  Json delta = Json::array();
  // Same order as the ownership lists of the source document.
  for (const PlayerId& i : g.players()) {
    for (const ChoiceId& c : g.preform().choices()) {
      if (g.form().owner(c) != i) continue;
      delta.push_back(Json::array({c.name(), m.delta().at(c).name()}));
    }
  }
  doc["delta"] = std::move(delta);
  Json beta = Json::object();
  for (const PlayerId& i : g.players()) {
    Json pairs = Json::array();
    for (const auto& [u, v] : m.beta().at(i)) {
      pairs.push_back(Json::array({to_string(u), to_string(v)}));
    }
    beta[i.name()] = std::move(pairs);
  }
  doc["beta"] = std::move(beta);
  return doc;
}

}  // namespace

Game parse_game(std::string_view text) { return game_of(parse_json(text)); }

std::string serialize_game(const Game& g) { return render(game_json(g)); }

GameMorphism parse_morphism(std::string_view text,
                            const std::filesystem::path& base_dir) {
  return morphism_of(parse_json(text), base_dir);
}

std::string serialize_morphism(const GameMorphism& m) {
  return render(morphism_json(m));
}

IsoWitness parse_witness(std::string_view text,
                         const std::filesystem::path& base_dir) {
  Json doc = parse_json(text);
  check_version(doc);
  GameMorphism m = morphism_of(member(doc, "morphism", ""), base_dir);
  GameMorphism inverse = morphism_of(member(doc, "inverse", ""), base_dir);
  bool undoes = wrap_axioms([&] {
    return compose(inverse, m) == identity_morphism(m.source()) &&
           compose(m, inverse) == identity_morphism(m.target());
  });
  if (!undoes) {
    fail(ErrorKind::kAxiomViolation,
         "the inverse does not compose with the morphism to identities");
  }
  return IsoWitness{std::move(m), std::move(inverse)};
}

std::string serialize_witness(const IsoWitness& w) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["morphism"] = morphism_json(w.morphism);
  doc["inverse"] = morphism_json(w.inverse);
  return render(doc);
}

bool looks_like_witness(std::string_view text) {
  Json doc = Json::parse(text.begin(), text.end(), nullptr, false);
  return doc.is_object() && doc.contains("morphism");
}

NodeLabel parse_node_text(std::string_view text) {
  auto split = [](std::string_view body) {
    std::vector<ChoiceId> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = body.find(',', start);
      out.emplace_back(std::string(body.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    return NodeLabel::sequence(split(text.substr(1, text.size() - 2)));
  }
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    std::vector<ChoiceId> list = split(text.substr(1, text.size() - 2));
    return NodeLabel::set(ChoiceSet(list.begin(), list.end()));
  }
  return NodeLabel::atom(std::string(text));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) fail(ErrorKind::kIoError, "cannot write " + path.string());
}

}  // namespace ncg
