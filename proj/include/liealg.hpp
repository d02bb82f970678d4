#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace liealg {

/// Families of simple Lie algebras. Valid ranks: A >= 1, B >= 2, C >= 2,
/// D >= 4, E in {6,7,8}, F = 4, G = 2.
enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G'
};

struct SimpleAlgebra {
  Family family;
  int rank;

  SimpleAlgebra(Family f, int r);

  /// Accepts Cartan names ("G2", "A6") and the classical aliases
  /// SLn -> A(n-1), Sp2n -> Cn, SO(2n+1) -> Bn, SO(2n) -> Dn.
  static SimpleAlgebra parse(std::string_view name);

  std::string name() const;

  friend bool operator==(const SimpleAlgebra&, const SimpleAlgebra&) = default;
  friend auto operator<=>(const SimpleAlgebra&, const SimpleAlgebra&) = default;
};

/// Integer coordinates in the fundamental-weight basis. Node numbering is
/// Bourbaki's; see the diagram table in liealg.cpp for the pinned ordering.
using Weight = std::vector<std::int64_t>;

/// Weights of a representation with their multiplicities.
struct WeightSystem {
  std::map<Weight, std::int64_t> entries;
  mpz_class total() const;
};

/// Cartan matrix A with A[i][j] = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(const SimpleAlgebra& alg);

bool is_dominant(const SimpleAlgebra& alg, const Weight& w);
Weight zero_weight(const SimpleAlgebra& alg);
Weight fundamental_weight(const SimpleAlgebra& alg, int node);  // node is 1-based
Weight rho(const SimpleAlgebra& alg);
Weight highest_root(const SimpleAlgebra& alg);
const std::vector<Weight>& positive_roots(const SimpleAlgebra& alg);
std::vector<std::int64_t> comarks(const SimpleAlgebra& alg);
std::int64_t dual_coxeter(const SimpleAlgebra& alg);
std::int64_t algebra_dim(const SimpleAlgebra& alg);

/// <w, theta^vee>: the level a dominant weight needs to fit in an alcove.
std::int64_t level_of(const SimpleAlgebra& alg, const Weight& w);

/// Symmetrized invariant form, normalized so long roots have squared
/// length 2.
mpq_class inner_product(const SimpleAlgebra& alg, const Weight& x,
                        const Weight& y);

mpz_class weyl_dim(const SimpleAlgebra& alg, const Weight& lambda);

/// (lambda, lambda + 2 rho).
mpq_class casimir(const SimpleAlgebra& alg, const Weight& lambda);

/// dim(V_lambda) * casimir(lambda) / dim(g).
mpq_class dynkin_index_rep(const SimpleAlgebra& alg, const Weight& lambda);

WeightSystem freudenthal_multiplicities(const SimpleAlgebra& alg,
                                        const Weight& lambda);

/// Folds v into the dominant chamber. Returns the dominant representative
/// together with det(w) of the folding element, or sign 0 when v lies on a
/// reflection hyperplane (equivalently, the representative has a zero
/// coordinate).
std::pair<Weight, int> dominant_fold(const SimpleAlgebra& alg, Weight v);

/// -w0(lambda); an involution on dominant weights.
Weight charge_conjugate(const SimpleAlgebra& alg, const Weight& lambda);

Weight simple_reflection(const SimpleAlgebra& alg, int i, const Weight& v);
std::vector<Weight> weyl_orbit(const SimpleAlgebra& alg, const Weight& dom);

std::string weight_to_string(const Weight& w);

}  // namespace liealg
