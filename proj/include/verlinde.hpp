#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fusion.hpp"
#include "intmat.hpp"
#include "liealg.hpp"

namespace verlinde {

using liealg::SimpleAlgebra;
using liealg::Weight;

/// A genus-g dimension query. `factors` lists simple factors with their
/// levels; an insertion supplies one alcove weight per factor. Dimensions of
/// product algebras are the per-factor products.
struct VerlindeQuery {
  std::vector<std::pair<SimpleAlgebra, int>> factors;
  int genus = 1;
  std::vector<std::vector<Weight>> insertions;

  static VerlindeQuery simple(const SimpleAlgebra& alg, int level, int genus,
                              std::vector<Weight> insertions = {});
};

/// C = sum over the alcove of N_lambda N_lambda^T. Symmetric positive
/// definite with trace(C^{g-1}) the genus-g dimension without insertions.
struct CasimirMatrix {
  exact::ZMat C;
};

CasimirMatrix casimir_matrix(const fusion::FusionTable& table);

mpz_class verlinde_dim(const VerlindeQuery& q);
mpz_class verlinde_dim(const SimpleAlgebra& alg, int level, int genus,
                       const std::vector<Weight>& insertions = {});

/// t_{g-1} for t0 = 2, t1 = 5, t_n = 5 t_{n-1} - 5 t_{n-2}: the exact
/// integer form of the two-primary level-1 G2 dimension.
mpz_class g2_level1_recurrence(int genus);

/// (number of theta-characteristics, number of even ones) on a genus-g
/// curve: (2^{2g}, 2^{g-1}(2^g + 1)).
std::pair<mpz_class, mpz_class> theta_char_counts(int genus);

/// One verified dimension identity at one genus.
struct IdentityCheck {
  std::string identity;
  int genus;
  std::string expected;
  std::string computed;
  bool pass;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Runs the six cross-ring dimension identities for every genus in
/// 2..g_max; throws naming the identity and genus on the first failure.
IdentityReport identity_checks(int g_max);

}  // namespace verlinde
