#include "fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusion {

namespace {

constexpr long kAffineFoldCap = 1000000;

void check_in_alcove(const AlcoveIndex& idx, const Weight& w) {
  if (!idx.contains(w))
    throw std::invalid_argument("weight " + liealg::weight_to_string(w) +
                                " is outside the level-" +
                                std::to_string(idx.level) + " alcove of " +
                                idx.alg.name());
}

/// Folds a rho-shifted weight into the interior of the affine alcove at
/// shifted level kappa. Returns sign 0 for weights on any wall.
std::pair<Weight, int> affine_fold(const SimpleAlgebra& alg, Weight beta,
                                   std::int64_t kappa) {
  const Weight theta = liealg::highest_root(alg);
  int sign = 1;
  for (long iter = 0;; ++iter) {
    if (iter > kAffineFoldCap)
      throw std::logic_error("affine folding did not terminate");
    auto [folded, s] = liealg::dominant_fold(alg, beta);
    if (s == 0) return {folded, 0};
    beta = std::move(folded);
    sign *= s;
    std::int64_t t = liealg::level_of(alg, beta);
    if (t < kappa) return {beta, sign};
    if (t == kappa) return {beta, 0};
    for (std::size_t i = 0; i < beta.size(); ++i)
      beta[i] -= (t - kappa) * theta[i];
    sign = -sign;
  }
}

}  // namespace

std::size_t AlcoveIndex::index_of(const Weight& w) const {
  auto it = position.find(w);
  if (it == position.end())
    throw std::invalid_argument("weight " + liealg::weight_to_string(w) +
                                " is outside the alcove");
  return it->second;
}

AlcoveIndex alcove_weights(const SimpleAlgebra& alg, int level) {
  if (level < 0) throw std::invalid_argument("level must be non-negative");
  const auto marks = liealg::comarks(alg);
  const int n = alg.rank;
  AlcoveIndex idx{alg, level, {}, {}};
  Weight w(n, 0);
  // Odometer over dominant coordinates bounded by the level condition;
  // std::map ordering then gives the vacuum-first lexicographic layout.
  std::map<Weight, std::size_t> ordered;
  while (true) {
    if (liealg::level_of(alg, w) <= level) ordered.emplace(w, 0);
    int k = n - 1;
    while (k >= 0) {
      ++w[k];
      if (liealg::level_of(alg, w) <= level) break;
      w[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  for (auto& [weight, pos] : ordered) {
    pos = idx.weights.size();
    idx.weights.push_back(weight);
  }
  idx.position = std::move(ordered);
  return idx;
}

std::map<Weight, std::int64_t> tensor_decompose(const SimpleAlgebra& alg,
                                                const Weight& lambda,
                                                const Weight& mu) {
  if (!liealg::is_dominant(alg, lambda) || !liealg::is_dominant(alg, mu))
    throw std::invalid_argument("tensor_decompose needs dominant weights");
  const liealg::WeightSystem ws = liealg::freudenthal_multiplicities(alg, mu);
  std::map<Weight, std::int64_t> acc;
  for (const auto& [delta, m] : ws.entries) {
    Weight shifted(lambda);
    for (std::size_t i = 0; i < shifted.size(); ++i)
      shifted[i] += 1 + delta[i];  // lambda + rho + delta
    auto [folded, sign] = liealg::dominant_fold(alg, shifted);
    if (sign == 0) continue;
    for (auto& c : folded) c -= 1;
    acc[folded] += m * sign;
  }
  std::map<Weight, std::int64_t> out;
  mpz_class total = 0;
  for (const auto& [nu, m] : acc) {
    if (m < 0) throw std::logic_error("negative tensor multiplicity");
    if (m == 0) continue;
    out.emplace(nu, m);
    total += m * liealg::weyl_dim(alg, nu);
  }
  if (total != liealg::weyl_dim(alg, lambda) * liealg::weyl_dim(alg, mu))
    throw std::logic_error("tensor decomposition dimension check failed");
  return out;
}

std::map<Weight, std::int64_t> fusion_coeffs(const SimpleAlgebra& alg,
                                             int level, const Weight& lambda,
                                             const Weight& mu) {
  AlcoveIndex idx = alcove_weights(alg, level);
  check_in_alcove(idx, lambda);
  check_in_alcove(idx, mu);
  const std::int64_t kappa = level + liealg::dual_coxeter(alg);
  std::map<Weight, std::int64_t> acc;
  for (const auto& [nu, m] : tensor_decompose(alg, lambda, mu)) {
    Weight beta(nu);
    for (auto& c : beta) c += 1;  // nu + rho
    auto [folded, sign] = affine_fold(alg, beta, kappa);
    if (sign == 0) continue;
    for (auto& c : folded) c -= 1;
    acc[folded] += m * sign;
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& [nu, m] : acc) {
    if (m < 0) throw std::logic_error("negative fusion coefficient");
    if (m == 0) continue;
    check_in_alcove(idx, nu);
    out.emplace(nu, m);
  }
  return out;
}

FusionTable fusion_table(const SimpleAlgebra& alg, int level) {
  FusionTable table{alcove_weights(alg, level), {}};
  const std::size_t n = table.index.size();
  table.matrices.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    exact::ZMat m(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      auto coeffs =
          fusion_coeffs(alg, level, table.index.weights[a], table.index.weights[b]);
      for (const auto& [nu, c] : coeffs)
        m.at(b, table.index.index_of(nu)) = c;
    }
    table.matrices.push_back(std::move(m));
  }

  // Structural invariants; a violation here is an engine bug.
  if (table.matrices[0] != exact::ZMat::identity(n))
    throw std::logic_error("fusion table: vacuum matrix is not the identity");
  for (std::size_t a = 0; a < n; ++a) {
    Weight conj = liealg::charge_conjugate(alg, table.index.weights[a]);
    if (table.matrices[a].transposed() != table.matrix_of(conj))
      throw std::logic_error(
          "fusion table: transpose does not match charge conjugation");
    for (std::size_t b = a + 1; b < n; ++b)
      if (table.matrices[a] * table.matrices[b] !=
          table.matrices[b] * table.matrices[a])
        throw std::logic_error("fusion table: matrices do not commute");
  }
  return table;
}

}  // namespace fusion
