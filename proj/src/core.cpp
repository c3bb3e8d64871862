#include "ranklab/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ranklab {

Permutation make_permutation(const std::vector<int>& ranks) {
  const int K = static_cast<int>(ranks.size());
  if (K < 1) throw NotABijection("permutation must have K >= 1");
  std::vector<uint8_t> seen(K, 0);
  for (int r : ranks) {
    if (r < 1 || r > K) throw NotABijection("rank " + std::to_string(r) + " outside [1," + std::to_string(K) + "]");
    if (seen[r - 1]) throw NotABijection("rank " + std::to_string(r) + " repeated");
    seen[r - 1] = 1;
  }
  Permutation pi;
  pi.ranks_ = ranks;
  return pi;
}

bool RelevanceVector::is_binary() const {
  for (int s : scores)
    if (s != 0 && s != 1) return false;
  return true;
}

int RelevanceVector::sum() const { return std::accumulate(scores.begin(), scores.end(), 0); }

RelevanceVector make_relevance(const std::vector<int>& scores, int b_rel) {
  if (b_rel < 1) throw Error("b_rel must be a positive integer");
  for (int s : scores)
    if (s < 0 || s > b_rel) throw Error("relevance score " + std::to_string(s) + " outside [0," + std::to_string(b_rel) + "]");
  return RelevanceVector{scores, b_rel};
}

BitString bin_rel(const Permutation& pi, int p) {
  const int K = pi.K();
  if (p < 1 || p > K) throw CutoffOutOfRange("p=" + std::to_string(p) + " outside [1," + std::to_string(K) + "]");
  BitString b;
  b.bits.resize(K);
  for (int i = 0; i < K; ++i) b.bits[i] = pi.rank_of(i) <= p ? 1 : 0;
  return b;
}

bool equivalent(const Permutation& pi, const Permutation& pi_hat, EquivalenceMode mode) {
  const int K = pi.K();
  if (K != pi_hat.K()) throw DimensionMismatch("permutations of different K");
  switch (mode.kind) {
    case EquivalenceKind::Exact:
      return pi == pi_hat;
    case EquivalenceKind::AtP: {
      if (mode.p < 1 || mode.p > K) throw CutoffOutOfRange("p outside [1,K]");
      return bin_rel(pi, mode.p) == bin_rel(pi_hat, mode.p);
    }
    case EquivalenceKind::BracketP: {
      if (mode.p < 1 || mode.p > K) throw CutoffOutOfRange("p outside [1,K]");
      // top-j sets agree for every j <= p iff every label ranked in the
      // top p by either side has the same rank on both
      for (int i = 0; i < K; ++i) {
        const int r = pi.rank_of(i), rh = pi_hat.rank_of(i);
        if ((r <= mode.p || rh <= mode.p) && r != rh) return false;
      }
      return true;
    }
  }
  return false;
}

Permutation argsort_scores(const std::vector<double>& scores) {
  const int K = static_cast<int>(scores.size());
  for (double s : scores)
    if (!std::isfinite(s)) throw NonFiniteScore("argsort_scores requires finite scores");
  std::vector<int> order(K);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  std::vector<int> ranks(K);
  for (int pos = 0; pos < K; ++pos) ranks[order[pos]] = pos + 1;
  return make_permutation(ranks);
}

std::string to_string(const Permutation& pi) {
  std::ostringstream out;
  for (int i = 0; i < pi.K(); ++i) {
    if (i) out << ',';
    out << pi.rank_of(i);
  }
  return out.str();
}

std::string to_string(const RelevanceVector& y) {
  std::ostringstream out;
  for (int i = 0; i < y.K(); ++i) {
    if (i) out << ',';
    out << y.scores[i];
  }
  return out.str();
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> ranks;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw Error("bad permutation token '" + tok + "'");
    ranks.push_back(v);
  }
  return make_permutation(ranks);
}

int64_t factorial(int k) {
  int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<Permutation> all_permutations(int K) {
  std::vector<int> ranks(K);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(factorial(K)));
  do {
    out.push_back(make_permutation(ranks));
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return out;
}

Permutation perm_unrank(int K, int64_t index) {
  if (index < 0 || index >= factorial(K)) throw Error("permutation index out of range");
  std::vector<int> pool(K);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> ranks(K);
  for (int i = 0; i < K; ++i) {
    const int64_t f = factorial(K - 1 - i);
    const int64_t d = index / f;
    index %= f;
    ranks[i] = pool[d];
    pool.erase(pool.begin() + d);
  }
  return make_permutation(ranks);
}

int64_t perm_rank(const Permutation& pi) {
  const int K = pi.K();
  std::vector<int> pool(K);
  std::iota(pool.begin(), pool.end(), 1);
  int64_t index = 0;
  for (int i = 0; i < K; ++i) {
    const auto it = std::find(pool.begin(), pool.end(), pi.rank_of(i));
    index += (it - pool.begin()) * factorial(K - 1 - i);
    pool.erase(it);
  }
  return index;
}

Permutation identity_permutation(int K) {
  std::vector<int> ranks(K);
  std::iota(ranks.begin(), ranks.end(), 1);
  return make_permutation(ranks);
}

int64_t relevance_space_size(int K, int b_rel) {
  int64_t n = 1;
  for (int i = 0; i < K; ++i) n *= (b_rel + 1);
  return n;
}

}  // namespace ranklab
