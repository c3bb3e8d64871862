#pragma once

#include <optional>
#include <string>

#include "ranklab/core.hpp"

namespace ranklab {

enum class LossKind { SumAtP, PrecAtP, AP, AUC, RR, Pairwise, DcgAtP };

/// A named ranking loss, evaluable on (permutation, relevance vector).
/// p is the cutoff for SumAtP/PrecAtP/DcgAtP; AP/AUC/Pairwise behave as
/// p = K and RR as p = 1.
struct LossSpec {
  LossKind kind = LossKind::SumAtP;
  int p = 1;

  bool needs_cutoff() const {
    return kind == LossKind::SumAtP || kind == LossKind::PrecAtP || kind == LossKind::DcgAtP;
  }
  bool requires_binary() const {
    return kind == LossKind::AP || kind == LossKind::AUC || kind == LossKind::RR;
  }
  /// Integer-valued on integer relevance input; evaluated exactly.
  bool integer_valued() const {
    return kind == LossKind::SumAtP || kind == LossKind::PrecAtP || kind == LossKind::Pairwise;
  }
  /// Effective cutoff for a problem with K labels.
  int effective_p(int K) const;

  static LossSpec sum_at(int p) { return {LossKind::SumAtP, p}; }
  static LossSpec prec_at(int p) { return {LossKind::PrecAtP, p}; }
  static LossSpec ap() { return {LossKind::AP, 1}; }
  static LossSpec auc() { return {LossKind::AUC, 1}; }
  static LossSpec rr() { return {LossKind::RR, 1}; }
  static LossSpec pairwise() { return {LossKind::Pairwise, 1}; }
  static LossSpec dcg_at(int p) { return {LossKind::DcgAtP, p}; }
};

/// Grammar: "sum@2", "prec@1", "ap", "auc", "rr", "pl", "dcg@3".
LossSpec parse_loss(const std::string& text);
std::string to_string(const LossSpec& spec);

enum class FamilyKind { SumFamily, PrecFamily };

struct LossFamily {
  FamilyKind kind = FamilyKind::SumFamily;
  int p = 1;

  LossSpec reference_loss() const {
    return kind == FamilyKind::SumFamily ? LossSpec::sum_at(p) : LossSpec::prec_at(p);
  }
  EquivalenceMode equivalence() const {
    return kind == FamilyKind::SumFamily ? EquivalenceMode::bracket_p(p) : EquivalenceMode::at_p(p);
  }
};

/// Grammar: "sum@2" or "prec@1".
LossFamily parse_family(const std::string& text);
std::string to_string(const LossFamily& family);

/// Loss range constants a (min positive), M (max), c = M/a.
struct LossExtrema {
  double a = 0.0;
  double M = 0.0;
  double c() const { return M / a; }
};

struct Counterexample {
  Permutation pi;
  Permutation pi_hat;
  RelevanceVector y;
};

struct MembershipReport {
  bool zero_matched = false;
  bool invariance_holds = false;
  std::optional<Counterexample> counterexample;
  int64_t search_space_size = 0;

  bool is_member() const { return zero_matched && invariance_holds; }
};

/// Comparisons on real-valued losses (AP/AUC/RR/DCG) use this tolerance;
/// integer-valued losses compare exactly.
inline constexpr double kLossTolerance = 1e-9;

/// Z for sum@p: min over all pi of sum_i min(pi_i, p+1) y_i. Closed form
/// sorts y descending and pays rank j for the j'th largest entry up to p,
/// p+1 after.
int64_t normalizer_sum(const RelevanceVector& y, int p);

/// Z for prec@p: sum of the p largest entries of y.
int64_t normalizer_prec(const RelevanceVector& y, int p);

/// Evaluates spec on (pi, y). Nonnegative; zero exactly on the brute-force
/// argmin set for (spec, y). AP/AUC/RR on all-zero y (and AUC on all-ones)
/// return 0: no ranking can be wrong there.
double eval_loss(const LossSpec& spec, const Permutation& pi, const RelevanceVector& y);

/// Exhaustive min-positive / max loss over S_K x {0..b_rel}^K.
LossExtrema loss_extrema(const LossSpec& spec, int K, int b_rel, int64_t cap = 100000000);

/// Decides membership of spec in family by full enumeration: zero-matching
/// against the family's reference loss, and invariance under the family's
/// equivalence. First counterexample in lexicographic order.
MembershipReport check_family(const LossSpec& spec, const LossFamily& family, int K, int b_rel,
                              int64_t cap = 100000000);

}  // namespace ranklab
