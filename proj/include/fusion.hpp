#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "intmat.hpp"
#include "liealg.hpp"

namespace fusion {

using liealg::SimpleAlgebra;
using liealg::Weight;

/// The level-k alcove: dominant weights with <lambda, theta^vee> <= level,
/// ordered vacuum-first (which is also lexicographically first).
struct AlcoveIndex {
  SimpleAlgebra alg;
  int level;
  std::vector<Weight> weights;
  std::map<Weight, std::size_t> position;

  std::size_t index_of(const Weight& w) const;
  bool contains(const Weight& w) const { return position.count(w) != 0; }
  std::size_t size() const { return weights.size(); }
};

AlcoveIndex alcove_weights(const SimpleAlgebra& alg, int level);

/// Multiplicities of V_nu inside V_lambda (x) V_mu (Klimyk).
std::map<Weight, std::int64_t> tensor_decompose(const SimpleAlgebra& alg,
                                                const Weight& lambda,
                                                const Weight& mu);

/// Level-k fusion coefficients via affine Weyl folding at shifted level
/// kappa = level + dual Coxeter number.
std::map<Weight, std::int64_t> fusion_coeffs(const SimpleAlgebra& alg,
                                             int level, const Weight& lambda,
                                             const Weight& mu);

/// All fusion matrices N_lambda with (N_lambda)_{mu,nu} = N_{lambda mu}^nu.
struct FusionTable {
  AlcoveIndex index;
  std::vector<exact::ZMat> matrices;

  const exact::ZMat& matrix_of(const Weight& lambda) const {
    return matrices[index.index_of(lambda)];
  }
};

FusionTable fusion_table(const SimpleAlgebra& alg, int level);

}  // namespace fusion
