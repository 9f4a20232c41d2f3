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

#include "ncg/error.h"

#include <utility>

namespace ncg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNoRoot: return "NoRoot";
    case ErrorKind::kMultipleRoots: return "MultipleRoots";
    case ErrorKind::kCycle: return "Cycle";
    case ErrorKind::kDuplicatePredecessor: return "DuplicatePredecessor";
    case ErrorKind::kTooSmall: return "TooSmall";
    case ErrorKind::kDuplicateNode: return "DuplicateNode";
    case ErrorKind::kUnknownNode: return "UnknownNode";
    case ErrorKind::kNotDecisionNode: return "NotDecisionNode";
    case ErrorKind::kNotTotal: return "NotTotal";
    case ErrorKind::kEdgeNotPreserved: return "EdgeNotPreserved";
    case ErrorKind::kTargetSourceMismatch: return "TargetSourceMismatch";
    case ErrorKind::kUnknownPlay: return "UnknownPlay";
    case ErrorKind::kDuplicateChoice: return "DuplicateChoice";
    case ErrorKind::kUnknownChoice: return "UnknownChoice";
    case ErrorKind::kOperatorNotFunction: return "OperatorNotFunction";
    case ErrorKind::kOperatorNotInjective: return "OperatorNotInjective";
    case ErrorKind::kOperatorHitsRoot: return "OperatorHitsRoot";
    case ErrorKind::kNodeUnreachable: return "NodeUnreachable";
    case ErrorKind::kOrphanChoice: return "OrphanChoice";
    case ErrorKind::kInfoSetOverlap: return "InfoSetOverlap";
    case ErrorKind::kNotAStrategy: return "NotAStrategy";
    case ErrorKind::kStrategySpaceTooLarge: return "StrategySpaceTooLarge";
    case ErrorKind::kTripleNotPreserved: return "TripleNotPreserved";
    case ErrorKind::kDuplicatePlayer: return "DuplicatePlayer";
    case ErrorKind::kUnknownPlayer: return "UnknownPlayer";
    case ErrorKind::kMissingAssignment: return "MissingAssignment";
    case ErrorKind::kChoiceOwnedTwice: return "ChoiceOwnedTwice";
    case ErrorKind::kNodeSplitAcrossPlayers: return "NodeSplitAcrossPlayers";
    case ErrorKind::kUnassignedChoice: return "UnassignedChoice";
    case ErrorKind::kMissingPlayer: return "MissingPlayer";
    case ErrorKind::kInvalidComponent: return "InvalidComponent";
    case ErrorKind::kPlayerOwnershipViolated: return "PlayerOwnershipViolated";
    case ErrorKind::kMissingUtility: return "MissingUtility";
    case ErrorKind::kUnknownPlayInTable: return "UnknownPlayInTable";
    case ErrorKind::kDuplicatePlayInTable: return "DuplicatePlayInTable";
    case ErrorKind::kBetaDomainMismatch: return "BetaDomainMismatch";
    case ErrorKind::kBetaNotMonotone: return "BetaNotMonotone";
    case ErrorKind::kUtilityEquationFails: return "UtilityEquationFails";
    case ErrorKind::kInformationSetCut: return "InformationSetCut";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kNotChoiceSequenceGame: return "NotChoiceSequenceGame";
    case ErrorKind::kAbsentminded: return "Absentminded";
    case ErrorKind::kNotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::kIncompleteUtilityMap: return "IncompleteUtilityMap";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kInternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

std::string_view axiom_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNoRoot:
    case ErrorKind::kMultipleRoots:
    case ErrorKind::kDuplicatePredecessor:
    case ErrorKind::kTooSmall:
      return "[T1]";
    case ErrorKind::kCycle:
      return "[T2]";
    case ErrorKind::kNotTotal:
      return "[f1]";
    case ErrorKind::kEdgeNotPreserved:
      return "[t2]";
    case ErrorKind::kOperatorNotFunction:
    case ErrorKind::kOperatorNotInjective:
    case ErrorKind::kOperatorHitsRoot:
      return "[P1]";
    case ErrorKind::kNodeUnreachable:
      return "[P2]";
    case ErrorKind::kOrphanChoice:
    case ErrorKind::kInfoSetOverlap:
      return "[P3]";
    case ErrorKind::kTripleNotPreserved:
      return "[f2]";
    case ErrorKind::kUnassignedChoice:
      return "[F1]";
    case ErrorKind::kChoiceOwnedTwice:
      return "[F2]";
    case ErrorKind::kNodeSplitAcrossPlayers:
      return "[F3]";
    case ErrorKind::kPlayerOwnershipViolated:
      return "[f3]";
    case ErrorKind::kMissingUtility:
    case ErrorKind::kUnknownPlayInTable:
    case ErrorKind::kDuplicatePlayInTable:
      return "[G2]";
    case ErrorKind::kBetaDomainMismatch:
      return "[g2]";
    case ErrorKind::kBetaNotMonotone:
      return "[g3]";
    case ErrorKind::kUtilityEquationFails:
      return "[g4]";
    default:
      return "";
  }
}

namespace {

std::string compose_message(ErrorKind kind, std::optional<ErrorKind> cause,
                            const std::string& detail) {
  std::string out(to_string(kind));
  if (!axiom_of(kind).empty()) {
    out += " ";
    out += axiom_of(kind);
  }
  if (cause.has_value()) {
    out += " ";
    std::string_view axiom = axiom_of(*cause);
    if (!axiom.empty()) {
      out += axiom;
      out += " ";
    }
    out += to_string(*cause);
  }
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(compose_message(kind, std::nullopt, detail)),
      kind_(kind),
      detail_(std::move(detail)) {}

Error::Error(ErrorKind kind, ErrorKind cause, std::string detail)
    : std::runtime_error(compose_message(kind, cause, detail)),
      kind_(kind),
      cause_(cause),
      detail_(std::move(detail)) {}

void fail(ErrorKind kind, std::string detail) {
  throw Error(kind, std::move(detail));
}

}  // namespace ncg
