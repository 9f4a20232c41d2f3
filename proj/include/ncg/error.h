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

#ifndef NCG_ERROR_H_
#define NCG_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

// Every validation failure in the library is reported as an Error carrying
// one of these kinds. Kinds that correspond to a violated axiom of a tree,
// preform, form, game, or morphism map to that axiom's name via axiom_of().
enum class ErrorKind {
  // Trees and tree morphisms.
  kNoRoot,
  kMultipleRoots,
  kCycle,
  kDuplicatePredecessor,
  kTooSmall,
  kDuplicateNode,
  kUnknownNode,
  kNotDecisionNode,
  kNotTotal,
  kEdgeNotPreserved,
  kTargetSourceMismatch,
  kUnknownPlay,
  // Preforms.
  kDuplicateChoice,
  kUnknownChoice,
  kOperatorNotFunction,
  kOperatorNotInjective,
  kOperatorHitsRoot,
  kNodeUnreachable,
  kOrphanChoice,
  kInfoSetOverlap,
  kNotAStrategy,
  kStrategySpaceTooLarge,
  kTripleNotPreserved,
  // Forms.
  kDuplicatePlayer,
  kUnknownPlayer,
  kMissingAssignment,
  kChoiceOwnedTwice,
  kNodeSplitAcrossPlayers,
  kUnassignedChoice,
  kMissingPlayer,
  kInvalidComponent,
  kPlayerOwnershipViolated,
  // Games and game morphisms.
  kMissingUtility,
  kUnknownPlayInTable,
  kDuplicatePlayInTable,
  kBetaDomainMismatch,
  kBetaNotMonotone,
  kUtilityEquationFails,
  kInformationSetCut,
  kSearchBudgetExceeded,
  // Style conversions.
  kNotChoiceSequenceGame,
  kAbsentminded,
  kNotStrictlyIncreasing,
  kIncompleteUtilityMap,
  // Documents.
  kSyntaxError,
  kAxiomViolation,
  kIoError,
  // A library invariant failed; always a bug.
  kInternalConsistency,
};

std::string_view to_string(ErrorKind kind);

// Name of the violated axiom ("[T1]", "[P3]", "[g4]", ...), or empty.
std::string_view axiom_of(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);
  // Wraps a lower-level failure, e.g. an AxiomViolation caused by kCycle.
  Error(ErrorKind kind, ErrorKind cause, std::string detail);

  ErrorKind kind() const { return kind_; }
  std::optional<ErrorKind> cause() const { return cause_; }
  const std::string& detail() const { return detail_; }

  // The innermost kind: cause() when present, else kind().
  ErrorKind root_kind() const { return cause_.value_or(kind_); }

 private:
  ErrorKind kind_;
  std::optional<ErrorKind> cause_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, std::string detail);

}  // namespace ncg

#endif  // NCG_ERROR_H_
