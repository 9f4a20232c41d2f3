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

#ifndef NCG_TESTS_SUPPORT_PROPERTIES_H_
#define NCG_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncg/game.h"
#include "ncg/morphism.h"

namespace ncg::test {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

struct PropertyFailure {
  std::string property;
  std::uint64_t seed = 0;
  std::string detail;
};

struct PropertyReport {
  std::size_t games = 0;
  std::size_t checks = 0;
  std::map<std::string, std::size_t> checks_per_property;
  std::vector<PropertyFailure> failures;
};

const std::vector<std::string>& property_names();

// One random game per seed in [first_seed, first_seed + games); every named
// property (all of them when `only` is empty) runs on each.
PropertyReport run_properties(std::uint64_t first_seed, std::size_t games,
                              const std::vector<std::string>& only = {});

// Every consequence of being an isomorphism that the suite knows about:
// plays, information sets, strategies, ζ, β, utilities, equilibria and the
// style predicates all transported by the witness.
void check_isomorphism(Checker& c, const IsoWitness& w);

// Identity components from a subgame into its parent game.
GameMorphism subgame_inclusion(const Game& inner, const Game& outer);

}  // namespace ncg::test

#endif  // NCG_TESTS_SUPPORT_PROPERTIES_H_
