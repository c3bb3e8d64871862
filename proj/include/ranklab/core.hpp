#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ranklab/errors.hpp"

namespace ranklab {

/// Ranking over K labels stored as a rank vector: ranks[i] is the rank
/// of label i, rank 1 = predicted most relevant. Always a bijection
/// onto {1,...,K}.
class Permutation {
 public:
  Permutation() = default;
  int K() const { return static_cast<int>(ranks_.size()); }
  int rank_of(int label) const { return ranks_[label]; }       // label 0-based
  const std::vector<int>& ranks() const { return ranks_; }

  bool operator==(const Permutation& other) const { return ranks_ == other.ranks_; }

  friend Permutation make_permutation(const std::vector<int>& ranks);

 private:
  std::vector<int> ranks_;
};

/// Throws NotABijection unless ranks is a bijection onto {1,...,K}.
Permutation make_permutation(const std::vector<int>& ranks);

struct BitString {
  std::vector<uint8_t> bits;
  int K() const { return static_cast<int>(bits.size()); }
  bool operator==(const BitString& other) const { return bits == other.bits; }
};

/// Relevance feedback y in {0,...,b_rel}^K.
struct RelevanceVector {
  std::vector<int> scores;
  int b_rel = 1;
  int K() const { return static_cast<int>(scores.size()); }
  bool is_binary() const;
  int sum() const;
  bool operator==(const RelevanceVector& other) const { return scores == other.scores; }
};

RelevanceVector make_relevance(const std::vector<int>& scores, int b_rel);

enum class EquivalenceKind { Exact, AtP, BracketP };

struct EquivalenceMode {
  EquivalenceKind kind = EquivalenceKind::Exact;
  int p = 1;  // ignored for Exact

  static EquivalenceMode exact() { return {EquivalenceKind::Exact, 1}; }
  static EquivalenceMode at_p(int p) { return {EquivalenceKind::AtP, p}; }
  static EquivalenceMode bracket_p(int p) { return {EquivalenceKind::BracketP, p}; }
};

/// bits[i] = 1{rank of label i <= p}; exactly p ones.
BitString bin_rel(const Permutation& pi, int p);

/// Exact: componentwise equality. AtP: equal top-p label sets.
/// BracketP: equal top-j sets for every j in [p] (top-p order agrees).
bool equivalent(const Permutation& pi, const Permutation& pi_hat, EquivalenceMode mode);

/// Rank by descending score; ties go to the smaller label index, so the
/// output is deterministic and matches
///   rank[i] = sum_{m<=i} 1{s_i <= s_m} + sum_{m>i} 1{s_i < s_m}.
Permutation argsort_scores(const std::vector<double>& scores);

/// Comma-separated rank list, e.g. "2,1,3".
std::string to_string(const Permutation& pi);
Permutation parse_permutation(const std::string& text);

std::string to_string(const RelevanceVector& y);

// --- small combinatorics used throughout -----------------------------------

int64_t factorial(int k);

/// All permutations of K labels with rank vectors in lexicographic order.
/// The position in this list is the permutation's canonical index.
std::vector<Permutation> all_permutations(int K);

/// Lexicographic unrank: index in [0, K!) -> rank vector.
Permutation perm_unrank(int K, int64_t index);
int64_t perm_rank(const Permutation& pi);

/// Identity ranking (1,2,...,K).
Permutation identity_permutation(int K);

/// Enumerates y in {0..b_rel}^K in lexicographic (odometer) order;
/// visit returns false to stop early.
template <class Visit>
void for_each_relevance(int K, int b_rel, Visit&& visit) {
  RelevanceVector y;
  y.scores.assign(K, 0);
  y.b_rel = b_rel;
  for (;;) {
    if (!visit(const_cast<const RelevanceVector&>(y))) return;
    int i = K - 1;
    while (i >= 0 && y.scores[i] == b_rel) y.scores[i--] = 0;
    if (i < 0) return;
    ++y.scores[i];
  }
}

int64_t relevance_space_size(int K, int b_rel);

}  // namespace ranklab
