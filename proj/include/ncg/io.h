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


#ifndef NCG_IO_H_
#define NCG_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "ncg/game.h"
#include "ncg/labels.h"
#include "ncg/morphism.h"

namespace ncg {

inline constexpr std::string_view kFormatVersion = "ncg/1";

// Game documents are JSON:
//
//   {"format_version": "ncg/1",
//    "players": ["P1", ...],
//    "nodes": [{"atom": "0"}, {"seq": ["a", "d"]}, {"set": ["a"]}, ...],
//    "edges": [[node, "a", node], ...],
//    "ownership": {"P1": ["a", "b"], ...},
//    "utilities": [{"play": [node, ...], "values": {"P1": "-1/2", ...}}, ...]}
//
// A bare string is accepted as an atom node. The choices are those listed
// under "ownership" followed by any others used on edges, in order of first
// appearance.
//
// Malformed JSON and schema mismatches raise kSyntaxError; an input that
// parses but violates an axiom raises kAxiomViolation whose cause() is the
// underlying kind.
Game parse_game(std::string_view text);
std::string serialize_game(const Game& g);

// Morphism documents:
//
//   {"format_version": "ncg/1",
//    "source": "relative/path.game" | {game document},
//    "target": ...,
//    "iota": [["P1", "Q1"], ...],
//    "tau": [[node, node], ...],
//    "delta": [["a", "x"], ...],
//    "beta": {"P1": [["-1", "-3"], ...], ...}}
//
// Relative paths resolve against `base_dir`.
GameMorphism parse_morphism(std::string_view text,
                            const std::filesystem::path& base_dir = {});
std::string serialize_morphism(const GameMorphism& m);

// Witness documents: {"format_version": "ncg/1", "morphism": {...},
// "inverse": {...}}. Parsing validates both morphisms and checks that each
// undoes the other.
IsoWitness parse_witness(std::string_view text,
                         const std::filesystem::path& base_dir = {});
std::string serialize_witness(const IsoWitness& w);

// True iff the text is a JSON object with a "morphism" member.
bool looks_like_witness(std::string_view text);

// "0" is an atom, "(a,d)" a sequence, "{a,d}" a set.
NodeLabel parse_node_text(std::string_view text);

// Throws kIoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ncg

#endif  // NCG_IO_H_
