#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ranklab/losses.hpp"
#include "ranklab/rng.hpp"

namespace ranklab {

/// Instance space at desk scale: points are the indices 0..n-1.
struct FiniteDomain {
  int n = 1;
};

/// Explicit table of ranking hypotheses over a finite domain.
/// table[h][x] is hypothesis h's permutation at point x. Hypotheses are
/// deduplicated as functions on construction, keeping first occurrence.
class FiniteRankingClass {
 public:
  FiniteRankingClass() = default;
  FiniteRankingClass(int K, std::vector<std::vector<Permutation>> table);

  int K() const { return K_; }
  int n_points() const { return n_points_; }
  int size() const { return static_cast<int>(table_.size()); }
  const Permutation& predict(int h, int x) const;
  const std::vector<Permutation>& hypothesis(int h) const { return table_[h]; }

  std::string to_json() const;
  static FiniteRankingClass from_json(const std::string& text);

 private:
  int K_ = 0;
  int n_points_ = 0;
  std::vector<std::vector<Permutation>> table_;
};

/// Binary hypotheses over the same finite domain, deduplicated.
class BinaryClass {
 public:
  BinaryClass() = default;
  explicit BinaryClass(std::vector<std::vector<uint8_t>> table);

  int n_points() const { return n_points_; }
  int size() const { return static_cast<int>(table_.size()); }
  uint8_t predict(int h, int x) const { return table_[h][x]; }
  const std::vector<uint8_t>& hypothesis(int h) const { return table_[h]; }

 private:
  int n_points_ = 0;
  std::vector<std::vector<uint8_t>> table_;
};

/// Score-based rankers x -> argsort(Wx), made finite by explicit sampling
/// of the K x d weight matrices.
struct LinearRankerClass {
  int K = 0;
  int d = 0;
  std::vector<std::vector<double>> weights;  // each K*d, row-major

  static LinearRankerClass sample_gaussian(int K, int d, int n_matrices, Rng& rng);
};

/// h_i^j(x) = 1{rank of label i under h(x) <= j}; i, j are 1-based.
BinaryClass threshold_restrict(const FiniteRankingClass& H, int i, int j);

/// Indices (into H) of one representative hypothesis per distinct labeling
/// of sample_points, lowest index first. Empty sample -> {0}.
std::vector<int> restrict_to_sample_indices(const FiniteRankingClass& H,
                                            const std::vector<int>& sample_points);
FiniteRankingClass restrict_to_sample(const FiniteRankingClass& H,
                                      const std::vector<int>& sample_points);

/// argsort(W x) with the core tie rule.
Permutation linear_predict(const std::vector<double>& W, int K, int d,
                           const std::vector<double>& x);

/// Builds the explicit table of a sampled linear class on concrete points.
FiniteRankingClass tabulate_linear(const LinearRankerClass& L,
                                   const std::vector<std::vector<double>>& points);

/// Largest m <= max_m such that some m-subset of the domain is shattered,
/// by exhaustive search over subsets and labelings. Budget bounds the
/// planned work sum_m C(n,m) * 2^m.
int vc_lower_bound(const BinaryClass& C, int max_m, int64_t budget = 100000000);

struct LabeledPoint {
  int point = 0;
  RelevanceVector y;
};

/// Monte Carlo estimate of the empirical Rademacher complexity of the
/// loss class {(x,y) -> loss(h(x),y) : h in H} on the given sample.
double rademacher_estimate(const FiniteRankingClass& H, const LossSpec& spec,
                           const std::vector<LabeledPoint>& sample, int n_draws, uint64_t seed);

}  // namespace ranklab
