#include "liecheck/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace liecheck {

namespace {

template <typename T>
std::vector<std::size_t> rref_impl(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T{}) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T{1} / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == T{}) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
std::vector<std::vector<T>> kernel_impl(const Matrix<T>& m) {
  Matrix<T> a = m;
  std::vector<std::size_t> pivots = rref_impl(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T{});
    v[free] = T{1};
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// T{1} would pick the nvars constructor of MultiPoly, so the ring unit
// is spelled out per scalar type.
template <typename T>
struct RingOne {
  static T value() { return T{1}; }
};
template <>
struct RingOne<MultiPoly> {
  static MultiPoly value() { return MultiPoly::constant(0, 1); }
};

// Pfaffian by summation over perfect matchings; n <= 16 keeps this cheap
// and it fixes the sign convention explicitly.
template <typename T>
T pfaffian_rec(std::vector<std::vector<T>>& a, std::vector<int>& alive, int n) {
  if (n == 0) return RingOne<T>::value();
  int i = -1;
  for (int k = 0; k < static_cast<int>(alive.size()); ++k)
    if (alive[k]) {
      i = k;
      break;
    }
  T total{};
  int skipped = 0;
  for (int j = i + 1; j < static_cast<int>(alive.size()); ++j) {
    if (!alive[j]) continue;
    // pairing (i, j); sign (-1)^(number of alive indices strictly between)
    if (!(a[i][j] == T{})) {
      alive[i] = alive[j] = 0;
      T sub = pfaffian_rec(a, alive, n - 2);
      alive[i] = alive[j] = 1;
      T term = a[i][j] * sub;
      if (skipped % 2 == 1) term = -term;
      total += term;
    }
    ++skipped;
  }
  return total;
}

template <typename T>
T pfaffian_impl(const Matrix<T>& m, bool antisym_ok) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw PfaffianOnOddDim("pfaffian requires an even-dimensional square matrix");
  if (!antisym_ok)
    throw PfaffianOnNonAntisymmetric("pfaffian requires an antisymmetric matrix");
  int n = static_cast<int>(m.rows());
  std::vector<std::vector<T>> a(n, std::vector<T>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::vector<int> alive(n, 1);
  return pfaffian_rec(a, alive, n);
}

} // namespace

std::vector<std::size_t> rref(MatrixQ& m) { return rref_impl(m); }
std::vector<std::size_t> rref(MatrixQi& m) { return rref_impl(m); }

std::size_t rank(MatrixQ m) { return rref_impl(m).size(); }

std::vector<VectorQ> kernel_basis(const MatrixQ& m) { return kernel_impl(m); }
std::vector<std::vector<GaussianRational>> kernel_basis(const MatrixQi& m) {
  return kernel_impl(m);
}

Rational det(const MatrixQ& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row, then run fraction-free (Bareiss)
  // elimination over the integers.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpq_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    scale *= Rational(l);
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = m(i, j) * Rational(l);
      a[i][j] = v.get_num();
    }
  }

  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1]);
  d /= scale;
  if (sign < 0) d = -d;
  d.canonicalize();
  return d;
}

Rational pfaffian(const MatrixQ& m) { return pfaffian_impl(m, m.is_antisymmetric()); }

MultiPoly det(const MatrixP& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  std::size_t n = m.rows();
  std::size_t nv = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) nv = std::max(nv, m(i, j).nvars());
  if (n == 0) return MultiPoly::constant(nv, 1);

  // Expansion over column subsets (Laplace with memoization): for each
  // subset S of columns, minor(S) uses the first |S| rows and expands
  // along its last row.
  std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<MultiPoly> memo(full + 1, MultiPoly(nv));
  memo[0] = MultiPoly::constant(nv, 1);

  // A subset's sub-subsets have smaller values, so increasing order works.
  for (std::size_t s = 1; s <= full; ++s) {
    int row = __builtin_popcountll(s) - 1;
    MultiPoly acc(nv);
    int idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      const MultiPoly& entry = m(row, j);
      if (!entry.is_zero()) {
        MultiPoly term = entry * memo[s & ~(std::size_t{1} << j)];
        if ((row + idx) % 2 == 1) term = -term;
        acc += term;
      }
      ++idx;
    }
    memo[s] = std::move(acc);
  }
  return memo[full];
}

MultiPoly pfaffian(const MatrixP& m) {
  bool anti = true;
  if (!m.is_square()) anti = false;
  if (anti)
    for (std::size_t i = 0; i < m.rows() && anti; ++i)
      for (std::size_t j = 0; j <= i && anti; ++j)
        if (!(m(i, j) == -m(j, i))) anti = false;
  return pfaffian_impl(m, anti);
}

ZeroVerdict is_identically_zero(const MultiPoly& p, ZeroMethod method,
                                std::uint64_t seed, int samples) {
  ZeroVerdict v;
  v.method = method;
  if (method == ZeroMethod::symbolic) {
    v.identically_zero = p.is_zero();
    return v;
  }
  v.seed = seed;
  // Sample points from S = {-64/1, ..., 64/1} (129 values per variable);
  // Schwartz-Zippel bounds the per-trial error by deg/|S|.
  const long kBound = 64;
  const long set_size = 2 * kBound + 1;
  Rng rng(seed);
  bool all_zero = true;
  for (int t = 0; t < samples && all_zero; ++t) {
    std::vector<Rational> point(p.nvars());
    for (auto& x : point) x = Rational(rng.next_int(-kBound, kBound));
    if (p.eval(point) != 0) all_zero = false;
  }
  v.identically_zero = all_zero;
  std::ostringstream os;
  os << "(" << p.total_degree() << "/" << set_size << ")^" << samples;
  v.error_bound = os.str();
  return v;
}

ZeroVerdict is_identically_zero_auto(const MultiPoly& p, std::uint64_t seed) {
  if (p.nvars() <= 8 && p.total_degree() <= 6)
    return is_identically_zero(p, ZeroMethod::symbolic, seed);
  return is_identically_zero(p, ZeroMethod::sampled, seed);
}

MatrixQ inverse(const MatrixQ& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMap("matrix is singular");
  MatrixQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

MatrixQi inverse(const MatrixQi& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  MatrixQi aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = GaussianRational(Rational(1));
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMap("matrix is singular");
  MatrixQi inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("rhs size");
  MatrixQ aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  VectorQ x(m.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::pair<int, int> signature(const MatrixQ& m) {
  if (!m.is_symmetric()) throw DimensionMismatch("signature of non-symmetric matrix");
  MatrixQ a = m;
  std::size_t n = a.rows();
  int pos = 0, neg = 0;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // find an unused index with nonzero diagonal entry
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // all remaining diagonal entries are zero; find a nonzero
      // off-diagonal pair and mix the two rows to create one
      std::size_t i0 = n, j0 = n;
      for (std::size_t i = 0; i < n && i0 == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!used[i] && !used[j] && i != j && a(i, j) != 0) {
            i0 = i;
            j0 = j;
            break;
          }
      if (i0 == n) break; // remaining block is zero (degenerate part)
      for (std::size_t k = 0; k < n; ++k) a(i0, k) += a(j0, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i0) += a(k, j0);
      p = i0;
    }
    used[p] = true;
    if (a(p, p) > 0)
      ++pos;
    else
      ++neg;
    // clear row/column p against the rest
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || a(i, p) == 0) continue;
      Rational f = a(i, p) / a(p, p);
      for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(p, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, p);
    }
  }
  return {pos, neg};
}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::next_int(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Rng::next_rational(long bound, long den_bound) {
  Rational q(next_int(-bound, bound), next_int(1, den_bound));
  q.canonicalize();
  return q;
}

} // namespace liecheck
