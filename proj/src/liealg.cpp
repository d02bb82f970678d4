#include "liealg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fieldmat.hpp"

namespace liealg {

namespace {

constexpr long kFoldIterationCap = 1000000;

mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Immutable per-algebra root-system data, built once and cached.
///
/// Conventions (the single place they are pinned):
///  - Bourbaki node numbering. A/B/C/D are chains 1..n with the B/C/F/G
///    double (triple) bond at the marked position; D forks at n-2; E hangs
///    node 2 off node 4 of the chain 1,3,4,...,n.
///  - Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> = 2(a_i,a_j)/(a_j,a_j),
///    so G2 is [[2,-1],[-3,2]] with node 1 short. The 7-dimensional
///    fundamental representation of G2 therefore sits at node 1.
///  - Long roots have squared length 2.
struct RootData {
  SimpleAlgebra alg;
  int n;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<mpq_class>> cartan_inv;
  std::vector<mpq_class> half_lengths;  // d_i = (a_i, a_i)/2
  std::vector<std::vector<mpq_class>> gram;  // (omega_i, omega_j)
  std::vector<Weight> pos_roots;             // weight coordinates
  std::vector<Weight> pos_roots_rc;          // simple-root coordinates
  Weight theta;                              // highest root, weight coords
  std::vector<std::int64_t> marks;
  std::vector<std::int64_t> comarks;
  std::int64_t h_dual = 0;
  std::int64_t dim = 0;
  Weight rho;

  explicit RootData(const SimpleAlgebra& a) : alg(a), n(a.rank) {
    build_cartan();
    build_lengths();
    build_gram();
    build_roots();
    build_theta();
    rho.assign(n, 1);
  }

  void build_cartan() {
    cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan[i][i] = 2;
    auto bond = [&](int i, int j) {  // 1-based single bond
      cartan[i - 1][j - 1] = -1;
      cartan[j - 1][i - 1] = -1;
    };
    switch (alg.family) {
      case Family::A:
        for (int i = 1; i < n; ++i) bond(i, i + 1);
        break;
      case Family::B:
        for (int i = 1; i < n; ++i) bond(i, i + 1);
        cartan[n - 2][n - 1] = -2;  // alpha_n is short
        break;
      case Family::C:
        for (int i = 1; i < n; ++i) bond(i, i + 1);
        cartan[n - 1][n - 2] = -2;  // alpha_n is long
        break;
      case Family::D:
        for (int i = 1; i + 2 < n; ++i) bond(i, i + 1);
        bond(n - 2, n);
        bond(n - 2, n - 1);
        break;
      case Family::E:
        bond(1, 3);
        bond(3, 4);
        bond(2, 4);
        for (int i = 4; i < n; ++i) bond(i, i + 1);
        break;
      case Family::F:
        bond(1, 2);
        bond(2, 3);
        bond(3, 4);
        cartan[1][2] = -2;  // alpha_3, alpha_4 short
        break;
      case Family::G:
        bond(1, 2);
        cartan[1][0] = -3;  // alpha_1 short
        break;
    }
  }

  // Solve d_i A[i][j] = d_j A[j][i] along bonds, then scale so max d = 1.
  void build_lengths() {
    half_lengths.assign(n, mpq_class(0));
    half_lengths[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0 || half_lengths[j] != 0) continue;
        half_lengths[j] = half_lengths[i] * cartan[j][i] / cartan[i][j];
        queue.push_back(j);
      }
    }
    mpq_class mx = half_lengths[0];
    for (const auto& d : half_lengths) mx = std::max(mx, d);
    for (auto& d : half_lengths) d /= mx;
  }

  void build_gram() {
    exact::FMat<mpq_class> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = cartan[i][j];
    auto inv = exact::inverse(a);
    if (!inv) throw std::logic_error("Cartan matrix is singular");
    cartan_inv = *inv;
    gram.assign(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram[i][j] = cartan_inv[i][j] * half_lengths[j];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (gram[i][j] != gram[j][i])
          throw std::logic_error("invariant form is not symmetric");
  }

  Weight reflect(int i, const Weight& v) const {
    Weight w = v;
    std::int64_t c = v[i];
    if (c == 0) return w;
    for (int j = 0; j < n; ++j) w[j] -= c * cartan[i][j];
    return w;
  }

  // Closure of the simple roots under simple reflections; a pair tracks the
  // weight coordinates and the simple-root coordinates.
  void build_roots() {
    std::map<Weight, Weight> seen;  // weight coords -> root coords
    std::deque<Weight> queue;
    for (int j = 0; j < n; ++j) {
      Weight wc(n), rc(n, 0);
      for (int i = 0; i < n; ++i) wc[i] = cartan[j][i];
      rc[j] = 1;
      seen.emplace(wc, rc);
      queue.push_back(wc);
    }
    while (!queue.empty()) {
      Weight v = queue.front();
      queue.pop_front();
      Weight rc = seen.at(v);
      for (int i = 0; i < n; ++i) {
        Weight w = reflect(i, v);
        if (seen.count(w)) continue;
        Weight wrc = rc;
        wrc[i] -= v[i];
        seen.emplace(w, wrc);
        queue.push_back(w);
      }
    }
    for (const auto& [wc, rc] : seen) {
      bool pos = true;
      for (auto c : rc) pos = pos && c >= 0;
      if (pos) {
        pos_roots.push_back(wc);
        pos_roots_rc.push_back(rc);
      }
    }
    if (2 * pos_roots.size() != seen.size())
      throw std::logic_error("root-system generation is inconsistent");
    dim = n + static_cast<std::int64_t>(seen.size());
  }

  void build_theta() {
    std::size_t best = 0;
    std::int64_t best_ht = -1;
    for (std::size_t k = 0; k < pos_roots_rc.size(); ++k) {
      std::int64_t ht = 0;
      for (auto c : pos_roots_rc[k]) ht += c;
      if (ht > best_ht) {
        best_ht = ht;
        best = k;
      }
    }
    theta = pos_roots[best];
    marks.assign(pos_roots_rc[best].begin(), pos_roots_rc[best].end());
    comarks.resize(n);
    for (int i = 0; i < n; ++i) {
      mpq_class c = marks[i] * half_lengths[i];
      if (c.get_den() != 1)
        throw std::logic_error("comarks must be integers");
      comarks[i] = c.get_num().get_si();
    }
    h_dual = 1;
    for (auto c : comarks) h_dual += c;
  }
};

const RootData& root_data(const SimpleAlgebra& alg) {
  static std::map<SimpleAlgebra, RootData> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(alg);
  if (it == cache.end()) it = cache.emplace(alg, RootData(alg)).first;
  return it->second;
}

void check_rank(const SimpleAlgebra& alg, const Weight& w) {
  if (static_cast<int>(w.size()) != alg.rank)
    throw std::invalid_argument("weight length does not match rank of " +
                                alg.name());
}

void check_dominant(const SimpleAlgebra& alg, const Weight& w) {
  check_rank(alg, w);
  if (!is_dominant(alg, w))
    throw std::invalid_argument("weight " + weight_to_string(w) +
                                " is not dominant");
}

}  // namespace

SimpleAlgebra::SimpleAlgebra(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(r) +
                                " for family " + std::string(1, char(f)));
}

SimpleAlgebra SimpleAlgebra::parse(std::string_view name) {
  std::string up;
  for (char c : name) up.push_back(char(std::toupper(static_cast<unsigned char>(c))));
  auto num_after = [&](std::size_t prefix) -> int {
    if (up.size() <= prefix) throw std::invalid_argument("missing rank");
    return std::stoi(up.substr(prefix));
  };
  try {
    if (up.starts_with("SL")) return {Family::A, num_after(2) - 1};
    if (up.starts_with("SP")) {
      int m = num_after(2);
      if (m % 2 != 0) throw std::invalid_argument("Sp rank must be even");
      return {Family::C, m / 2};
    }
    if (up.starts_with("SO")) {
      int m = num_after(2);
      if (m % 2 == 1) return {Family::B, (m - 1) / 2};
      return {Family::D, m / 2};
    }
    if (!up.empty() && up[0] >= 'A' && up[0] <= 'G')
      return {static_cast<Family>(up[0]), num_after(1)};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse algebra name '" +
                                std::string(name) + "'");
  }
  throw std::invalid_argument("cannot parse algebra name '" +
                              std::string(name) + "'");
}

std::string SimpleAlgebra::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

mpz_class WeightSystem::total() const {
  mpz_class t = 0;
  for (const auto& [w, m] : entries) t += m;
  return t;
}

std::vector<std::vector<int>> cartan_matrix(const SimpleAlgebra& alg) {
  return root_data(alg).cartan;
}

bool is_dominant(const SimpleAlgebra& alg, const Weight& w) {
  check_rank(alg, w);
  return std::all_of(w.begin(), w.end(), [](std::int64_t c) { return c >= 0; });
}

Weight zero_weight(const SimpleAlgebra& alg) { return Weight(alg.rank, 0); }

Weight fundamental_weight(const SimpleAlgebra& alg, int node) {
  if (node < 1 || node > alg.rank)
    throw std::invalid_argument("node out of range");
  Weight w(alg.rank, 0);
  w[node - 1] = 1;
  return w;
}

Weight rho(const SimpleAlgebra& alg) { return root_data(alg).rho; }

Weight highest_root(const SimpleAlgebra& alg) { return root_data(alg).theta; }

const std::vector<Weight>& positive_roots(const SimpleAlgebra& alg) {
  return root_data(alg).pos_roots;
}

std::vector<std::int64_t> comarks(const SimpleAlgebra& alg) {
  return root_data(alg).comarks;
}

std::int64_t dual_coxeter(const SimpleAlgebra& alg) {
  return root_data(alg).h_dual;
}

std::int64_t algebra_dim(const SimpleAlgebra& alg) {
  return root_data(alg).dim;
}

std::int64_t level_of(const SimpleAlgebra& alg, const Weight& w) {
  check_rank(alg, w);
  const RootData& rd = root_data(alg);
  std::int64_t lvl = 0;
  for (int i = 0; i < rd.n; ++i) lvl += rd.comarks[i] * w[i];
  return lvl;
}

mpq_class inner_product(const SimpleAlgebra& alg, const Weight& x,
                        const Weight& y) {
  check_rank(alg, x);
  check_rank(alg, y);
  const RootData& rd = root_data(alg);
  mpq_class acc = 0;
  for (int i = 0; i < rd.n; ++i) {
    if (x[i] == 0) continue;
    mpq_class row = 0;
    for (int j = 0; j < rd.n; ++j)
      if (y[j] != 0) row += rd.gram[i][j] * static_cast<long>(y[j]);
    acc += row * static_cast<long>(x[i]);
  }
  return acc;
}

mpz_class weyl_dim(const SimpleAlgebra& alg, const Weight& lambda) {
  check_dominant(alg, lambda);
  const RootData& rd = root_data(alg);
  Weight lr(lambda);
  for (int i = 0; i < rd.n; ++i) lr[i] += 1;  // lambda + rho
  mpq_class prod = 1;
  for (const auto& alpha : rd.pos_roots)
    prod *= inner_product(alg, lr, alpha) / inner_product(alg, rd.rho, alpha);
  if (prod.get_den() != 1)
    throw std::logic_error("Weyl dimension is not an integer");
  return prod.get_num();
}

mpq_class casimir(const SimpleAlgebra& alg, const Weight& lambda) {
  check_dominant(alg, lambda);
  Weight shifted(lambda);
  for (auto& c : shifted) c += 2;  // lambda + 2 rho
  return inner_product(alg, lambda, shifted);
}

mpq_class dynkin_index_rep(const SimpleAlgebra& alg, const Weight& lambda) {
  check_dominant(alg, lambda);
  mpq_class idx = casimir(alg, lambda) * weyl_dim(alg, lambda);
  idx /= static_cast<long>(algebra_dim(alg));
  return idx;
}

std::pair<Weight, int> dominant_fold(const SimpleAlgebra& alg, Weight v) {
  check_rank(alg, v);
  const RootData& rd = root_data(alg);
  int sign = 1;
  for (long iter = 0;; ++iter) {
    if (iter > kFoldIterationCap)
      throw std::logic_error("dominant_fold did not terminate");
    int neg = -1;
    for (int i = 0; i < rd.n; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    v = rd.reflect(neg, v);
    sign = -sign;
  }
  for (auto c : v)
    if (c == 0) return {v, 0};
  return {v, sign};
}

Weight charge_conjugate(const SimpleAlgebra& alg, const Weight& lambda) {
  check_dominant(alg, lambda);
  Weight neg(lambda);
  for (auto& c : neg) c = -c;
  return dominant_fold(alg, neg).first;
}

Weight simple_reflection(const SimpleAlgebra& alg, int i, const Weight& v) {
  check_rank(alg, v);
  if (i < 0 || i >= alg.rank) throw std::invalid_argument("node out of range");
  return root_data(alg).reflect(i, v);
}

std::vector<Weight> weyl_orbit(const SimpleAlgebra& alg, const Weight& dom) {
  check_rank(alg, dom);
  const RootData& rd = root_data(alg);
  std::set<Weight> seen{dom};
  std::deque<Weight> queue{dom};
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    for (int i = 0; i < rd.n; ++i) {
      Weight w = rd.reflect(i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

WeightSystem freudenthal_multiplicities(const SimpleAlgebra& alg,
                                        const Weight& lambda) {
  check_dominant(alg, lambda);
  const RootData& rd = root_data(alg);
  const int n = rd.n;

  // Lowest weight is w0(lambda) = -conjugate(lambda); every weight of
  // V_lambda lies in the box lambda - sum c_i alpha_i with
  // 0 <= c_i <= (root coordinates of lambda + conjugate(lambda)).
  Weight conj = charge_conjugate(alg, lambda);
  std::vector<mpq_class> span(n);
  for (int i = 0; i < n; ++i) span[i] = lambda[i] + conj[i];
  std::vector<std::int64_t> box(n);
  for (int i = 0; i < n; ++i) {
    mpq_class c = 0;
    for (int j = 0; j < n; ++j) c += rd.cartan_inv[j][i] * span[j];
    if (c.get_den() != 1 || c < 0)
      throw std::logic_error("weight box bound is not a non-negative integer");
    box[i] = c.get_num().get_si();
  }

  // Dominant weights under lambda, keyed by (depth, weight) so that the
  // Freudenthal recursion sees lower depths first.
  std::map<std::pair<std::int64_t, Weight>, std::int64_t> dominant_mults;
  std::map<Weight, std::int64_t> mult_of;
  {
    std::vector<std::int64_t> c(n, 0);
    while (true) {
      Weight mu(lambda);
      std::int64_t depth = 0;
      for (int j = 0; j < n; ++j) {
        depth += c[j];
        for (int i = 0; i < n; ++i) mu[i] -= c[j] * rd.cartan[j][i];
      }
      if (std::all_of(mu.begin(), mu.end(),
                      [](std::int64_t x) { return x >= 0; }))
        dominant_mults[{depth, mu}] = 0;
      int k = 0;
      while (k < n && c[k] == box[k]) c[k++] = 0;
      if (k == n) break;
      ++c[k];
    }
  }

  Weight lam_rho(lambda);
  for (auto& c : lam_rho) c += 1;
  mpq_class lam_norm = inner_product(alg, lam_rho, lam_rho);

  for (auto& [key, mult] : dominant_mults) {
    const Weight& mu = key.second;
    if (key.first == 0) {
      mult = 1;
      mult_of[mu] = 1;
      continue;
    }
    mpq_class num = 0;
    for (const auto& alpha : rd.pos_roots) {
      Weight nu = mu;
      for (std::int64_t j = 1;; ++j) {
        for (int i = 0; i < n; ++i) nu[i] += alpha[i];
        Weight folded = dominant_fold(alg, nu).first;
        auto it = mult_of.find(folded);
        if (it == mult_of.end()) break;  // the alpha-string has ended
        num += mpq_class(static_cast<long>(it->second)) *
               inner_product(alg, nu, alpha);
      }
    }
    Weight mu_rho(mu);
    for (auto& c : mu_rho) c += 1;
    mpq_class den = lam_norm - inner_product(alg, mu_rho, mu_rho);
    mpq_class m = 2 * num / den;
    if (m.get_den() != 1 || m <= 0)
      throw std::logic_error("Freudenthal multiplicity is not a positive integer");
    mult = m.get_num().get_si();
    mult_of[mu] = mult;
  }

  WeightSystem ws;
  for (const auto& [key, mult] : dominant_mults)
    for (const auto& w : weyl_orbit(alg, key.second)) ws.entries[w] = mult;
  if (ws.total() != weyl_dim(alg, lambda))
    throw std::logic_error("weight system size disagrees with Weyl dimension");
  return ws;
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

}  // namespace liealg
