#include "ranklab/losses.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace ranklab {

int LossSpec::effective_p(int K) const {
  switch (kind) {
    case LossKind::SumAtP:
    case LossKind::PrecAtP:
    case LossKind::DcgAtP:
      return p;
    case LossKind::RR:
      return 1;
    case LossKind::AP:
    case LossKind::AUC:
    case LossKind::Pairwise:
      return K;
  }
  return K;
}

LossSpec parse_loss(const std::string& text) {
  auto at = text.find('@');
  std::string name = text.substr(0, at);
  int p = 0;
  if (at != std::string::npos) {
    try {
      p = std::stoi(text.substr(at + 1));
    } catch (const std::exception&) {
      throw Error("bad loss cutoff in '" + text + "'");
    }
    if (p < 1) throw CutoffOutOfRange("loss cutoff must be >= 1 in '" + text + "'");
  }
  if (name == "sum") {
    if (!p) throw Error("sum loss needs a cutoff, e.g. sum@2");
    return LossSpec::sum_at(p);
  }
  if (name == "prec") {
    if (!p) throw Error("prec loss needs a cutoff, e.g. prec@1");
    return LossSpec::prec_at(p);
  }
  if (name == "dcg") {
    if (!p) throw Error("dcg loss needs a cutoff, e.g. dcg@3");
    return LossSpec::dcg_at(p);
  }
  if (at != std::string::npos) throw Error("loss '" + name + "' takes no cutoff");
  if (name == "ap") return LossSpec::ap();
  if (name == "auc") return LossSpec::auc();
  if (name == "rr") return LossSpec::rr();
  if (name == "pl") return LossSpec::pairwise();
  throw Error("unknown loss '" + text + "'");
}

std::string to_string(const LossSpec& spec) {
  switch (spec.kind) {
    case LossKind::SumAtP: return "sum@" + std::to_string(spec.p);
    case LossKind::PrecAtP: return "prec@" + std::to_string(spec.p);
    case LossKind::AP: return "ap";
    case LossKind::AUC: return "auc";
    case LossKind::RR: return "rr";
    case LossKind::Pairwise: return "pl";
    case LossKind::DcgAtP: return "dcg@" + std::to_string(spec.p);
  }
  return "?";
}

LossFamily parse_family(const std::string& text) {
  LossSpec ref = parse_loss(text);
  if (ref.kind == LossKind::SumAtP) return LossFamily{FamilyKind::SumFamily, ref.p};
  if (ref.kind == LossKind::PrecAtP) return LossFamily{FamilyKind::PrecFamily, ref.p};
  throw Error("family must be sum@p or prec@p, got '" + text + "'");
}

std::string to_string(const LossFamily& family) {
  return (family.kind == FamilyKind::SumFamily ? "sum@" : "prec@") + std::to_string(family.p);
}

int64_t normalizer_sum(const RelevanceVector& y, int p) {
  const int K = y.K();
  if (p < 1 || p > K) throw CutoffOutOfRange("normalizer_sum: p outside [1,K]");
  std::vector<int> sorted = y.scores;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  int64_t z = 0;
  for (int j = 0; j < K; ++j) z += static_cast<int64_t>(std::min(j + 1, p + 1)) * sorted[j];
  return z;
}

int64_t normalizer_prec(const RelevanceVector& y, int p) {
  const int K = y.K();
  if (p < 1 || p > K) throw CutoffOutOfRange("normalizer_prec: p outside [1,K]");
  std::vector<int> sorted = y.scores;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  int64_t z = 0;
  for (int j = 0; j < p; ++j) z += sorted[j];
  return z;
}

namespace {

double dcg_gain(int y) { return static_cast<double>((1 << y) - 1); }
double dcg_discount(int rank) { return 1.0 / std::log2(1.0 + rank); }

// max over pi of the top-p DCG: largest gains at the best ranks
double dcg_normalizer(const RelevanceVector& y, int p) {
  std::vector<int> sorted = y.scores;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  double z = 0.0;
  for (int j = 0; j < p; ++j) z += dcg_gain(sorted[j]) * dcg_discount(j + 1);
  return z;
}

double clamp_loss(double v) { return v < kLossTolerance ? 0.0 : v; }

}  // namespace

double eval_loss(const LossSpec& spec, const Permutation& pi, const RelevanceVector& y) {
  const int K = pi.K();
  if (K != y.K()) throw DimensionMismatch("eval_loss: permutation and relevance differ in K");
  if (spec.requires_binary() && !y.is_binary())
    throw BinaryRelevanceRequired(to_string(spec) + " needs binary relevance");
  if (spec.needs_cutoff() && (spec.p < 1 || spec.p > K))
    throw CutoffOutOfRange("loss cutoff outside [1,K]");

  switch (spec.kind) {
    case LossKind::SumAtP: {
      int64_t v = 0;
      for (int i = 0; i < K; ++i)
        v += static_cast<int64_t>(std::min(pi.rank_of(i), spec.p + 1)) * y.scores[i];
      return static_cast<double>(v - normalizer_sum(y, spec.p));
    }
    case LossKind::PrecAtP: {
      int64_t v = 0;
      for (int i = 0; i < K; ++i)
        if (pi.rank_of(i) <= spec.p) v += y.scores[i];
      return static_cast<double>(normalizer_prec(y, spec.p) - v);
    }
    case LossKind::AP: {
      const int r = y.sum();
      if (r == 0) return 0.0;
      double ap = 0.0;
      for (int i = 0; i < K; ++i) {
        if (!y.scores[i]) continue;
        int hits = 0;
        for (int j = 0; j < K; ++j)
          if (y.scores[j] && pi.rank_of(j) <= pi.rank_of(i)) ++hits;
        ap += static_cast<double>(hits) / pi.rank_of(i);
      }
      return clamp_loss(1.0 - ap / r);
    }
    case LossKind::AUC: {
      const int r = y.sum();
      if (r == 0 || r == K) return 0.0;
      int bad = 0;
      for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
          if (pi.rank_of(i) < pi.rank_of(j) && y.scores[i] < y.scores[j]) ++bad;
      return clamp_loss(static_cast<double>(bad) / (static_cast<double>(r) * (K - r)));
    }
    case LossKind::RR: {
      int best = K + 1;
      for (int i = 0; i < K; ++i)
        if (y.scores[i] && pi.rank_of(i) < best) best = pi.rank_of(i);
      if (best == K + 1) return 0.0;
      return clamp_loss(1.0 - 1.0 / best);
    }
    case LossKind::Pairwise: {
      int64_t bad = 0;
      for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
          if (pi.rank_of(i) < pi.rank_of(j) && y.scores[i] < y.scores[j]) ++bad;
      return static_cast<double>(bad);
    }
    case LossKind::DcgAtP: {
      double v = 0.0;
      for (int i = 0; i < K; ++i)
        if (pi.rank_of(i) <= spec.p) v += dcg_gain(y.scores[i]) * dcg_discount(pi.rank_of(i));
      return clamp_loss(dcg_normalizer(y, spec.p) - v);
    }
  }
  throw Error("unreachable loss kind");
}

LossExtrema loss_extrema(const LossSpec& spec, int K, int b_rel, int64_t cap) {
  if (spec.requires_binary() && b_rel != 1)
    throw BinaryRelevanceRequired(to_string(spec) + " extrema need b_rel = 1");
  const int64_t space = factorial(K) * relevance_space_size(K, b_rel);
  if (space > cap)
    throw SearchSpaceTooLarge("loss_extrema: " + std::to_string(space) + " > cap " + std::to_string(cap));

  const auto perms = all_permutations(K);
  double min_pos = std::numeric_limits<double>::infinity();
  double max_v = 0.0;
  for_each_relevance(K, b_rel, [&](const RelevanceVector& y) {
    for (const auto& pi : perms) {
      const double v = eval_loss(spec, pi, y);
      if (v > 0.0 && v < min_pos) min_pos = v;
      if (v > max_v) max_v = v;
    }
    return true;
  });
  if (!std::isfinite(min_pos))
    throw NoPositiveLoss("loss " + to_string(spec) + " is identically 0 on K=" + std::to_string(K));
  return LossExtrema{min_pos, max_v};
}

MembershipReport check_family(const LossSpec& spec, const LossFamily& family, int K, int b_rel,
                              int64_t cap) {
  if (spec.requires_binary() && b_rel != 1)
    throw BinaryRelevanceRequired(to_string(spec) + " membership needs b_rel = 1");
  const int64_t n_perm = factorial(K);
  const int64_t n_y = relevance_space_size(K, b_rel);
  if (n_perm * n_y + n_perm * n_perm * n_y > cap)
    throw SearchSpaceTooLarge("check_family: search space exceeds cap");

  const LossSpec ref = family.reference_loss();
  const EquivalenceMode equiv = family.equivalence();
  const auto perms = all_permutations(K);
  const bool exact = spec.integer_valued();

  MembershipReport report;
  report.zero_matched = true;
  report.invariance_holds = true;

  auto is_zero = [&](double v) { return exact ? v == 0.0 : v <= kLossTolerance; };

  int64_t examined = 0;
  for (const auto& pi : perms) {
    for_each_relevance(K, b_rel, [&](const RelevanceVector& y) {
      ++examined;
      if (is_zero(eval_loss(spec, pi, y)) != (eval_loss(ref, pi, y) == 0.0)) {
        report.zero_matched = false;
        if (!report.counterexample) report.counterexample = Counterexample{pi, pi, y};
        return false;
      }
      return true;
    });
    if (!report.zero_matched) break;
  }

  for (const auto& pi : perms) {
    for (const auto& pi_hat : perms) {
      if (!equivalent(pi, pi_hat, equiv)) continue;
      bool keep = true;
      for_each_relevance(K, b_rel, [&](const RelevanceVector& y) {
        ++examined;
        const double va = eval_loss(spec, pi, y);
        const double vb = eval_loss(spec, pi_hat, y);
        const bool equal = exact ? va == vb : std::abs(va - vb) <= kLossTolerance;
        if (!equal) {
          report.invariance_holds = false;
          if (!report.counterexample) report.counterexample = Counterexample{pi, pi_hat, y};
          keep = false;
          return false;
        }
        return true;
      });
      if (!keep) break;
    }
    if (!report.invariance_holds) break;
  }

  report.search_space_size = examined;
  return report;
}

}  // namespace ranklab
