#pragma once

// Catalog of machine-checkable claims about natural_t, the geometric mean and
// the related entropies. Each entry states one identity or inequality; the
// counterexample entries state inequalities that are false in general and
// are targets for the falsification search.

#include <optional>
#include <span>
#include <string_view>

namespace opmeans {

enum class ClaimKind {
  kIdentity,
  kLoewnerInequality,
  kBlockPsd,
  kSingularValue,
  kNormInequality,
  kEigenvalueInequality,
  kScalarBound,
  kCounterexample,
};

/// What kind of random inputs satisfy a claim's hypotheses.
enum class InputProfile {
  kFreePair,       // any positive-definite A, B
  kOrderedEither,  // A <= B or B <= A (alternated across trials)
  kALeB,           // A <= B
  kCDominates,     // A, B and C >= A + B
  kCommuting,      // A, B commuting
  kPairWithX,      // A, B and an arbitrary square X
};

enum class ClaimId {
  kEq1CongruenceIdentity,
  kInversion,
  kLemmaTwoIdentities,
  kRiccatiUnweighted,
  kP3AnalogueMax,
  kCorOrderBounds,
  kPropKappaUpper,
  kCorTwoSidedKappa,
  kThmBlockSqrtkappaSharp,
  kCorSesquilinear,
  kCorSharpSandwich,
  kPropBlockNabla,
  kLemmaKantorovich,
  kPropBlockHarmonicK,
  kRemarkMMBounds,
  kThmSvDirectSum,
  kProp31IThroughVii,
  kThmWeightedUniqueSolution,
  kFurutaNote,
  kCorUiNorm,
  kRemarkNaturalNorm,
  kThmEigenC,
  kCorEigenSumNorm,
  kPropFtBounds,
  kEntropyQuasiIdentity,
  kEntropyLimit,
  kEntropyMonotone,
  kEntropyLntBound,
  kEntropyConditionalOrder,
  kEntropySandwichTheorem,
  kEntropyRemarkChain,
  kHeinzSandwich,
  // Statements that fail in general.
  kNaturalSymmetry,
  kNaturalBelowArithmetic,
  kNaturalTransformerP4,
  kCondition26,
  kNaturalVsSharpOrder,
  kSharpSandwichLowerIfALeB,
  kBlockHarmonicPrintedOrientation,
};

struct ClaimInfo {
  ClaimId id;
  std::string_view name;
  /// The statement being checked, written out as a formula.
  std::string_view anchor;
  ClaimKind kind;
  InputProfile profile;
  /// Claims whose residual is a truncation error rather than roundoff carry
  /// their own tolerance instead of the relative comparison tolerance.
  std::optional<double> fixed_tolerance = std::nullopt;
};

std::span<const ClaimInfo> catalog();
const ClaimInfo& info(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
std::string_view to_string(ClaimKind kind);

inline bool is_falsifiable(ClaimId id) { return info(id).kind == ClaimKind::kCounterexample; }

}  // namespace opmeans
