#include "painted/scheme.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

#include <boost/rational.hpp>

#include "painted/error.hpp"

namespace painted {

namespace {

using Q = boost::rational<std::int64_t>;
const Q kZero(0);
using QMatrix = std::vector<std::vector<Q>>;

QMatrix to_rational(const CartanMatrix& a) {
  QMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i].assign(a[i].begin(), a[i].end());
  }
  return m;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == kZero) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Q lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == kZero) continue;
      const Q f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Q determinant(QMatrix m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == kZero) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == kZero) continue;
      const Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

// Positive diagonal d with d_i A_ij = d_j A_ji, if one exists.
std::optional<std::vector<Q>> symmetrizer(const CartanMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Q> d(n, Q(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != kZero) continue;
    d[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        const Q dj = d[i] * Q(a[i][j], a[j][i]);
        if (d[j] == kZero) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  return d;
}

// Integer vector proportional to v, primitive, first nonzero entry positive.
std::vector<std::int64_t> primitive(const std::vector<Q>& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = std::lcm(l, x.denominator());
  std::vector<std::int64_t> out(v.size());
  std::int64_t g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = (v[i] * l).numerator();
    g = std::gcd(g, out[i]);
  }
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  const auto first = std::find_if(out.begin(), out.end(), [](auto x) { return x != 0; });
  if (first != out.end() && *first < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

std::optional<std::vector<std::int64_t>> positive_null_vector(const CartanMatrix& a) {
  QMatrix m = to_rational(a);
  const auto pivots = rref(m);
  const std::size_t n = a.size();
  if (n == 0 || pivots.size() + 1 != n) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < n; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }
  std::vector<Q> v(n, Q(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
  auto ints = primitive(v);
  if (!std::all_of(ints.begin(), ints.end(), [](auto x) { return x > 0; })) return std::nullopt;
  return ints;
}

class Builder {
 public:
  explicit Builder(std::size_t n) : a_(n, std::vector<int>(n, 0)) {
    for (std::size_t i = 0; i < n; ++i) a_[i][i] = 2;
  }
  // aij is the entry in row i (the row of the shorter root is the larger magnitude).
  Builder& bond(std::size_t i, std::size_t j, int aij = -1, int aji = -1) {
    a_[i][j] = aij;
    a_[j][i] = aji;
    return *this;
  }
  Builder& chain(std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) bond(i, i + 1);
    return *this;
  }
  CartanMatrix take() { return std::move(a_); }

 private:
  CartanMatrix a_;
};

CartanMatrix finite_matrix(Family family, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  Builder b(n);
  switch (family) {
    case Family::A:
      b.chain(0, n - 1);
      break;
    case Family::B:
      b.chain(0, n - 2).bond(n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      b.chain(0, n - 2).bond(n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      b.chain(0, n - 2).bond(n - 3, n - 1);
      break;
    case Family::E:
      b.bond(0, 2).chain(2, n - 1).bond(1, 3);
      break;
    case Family::F:
      b.bond(0, 1).bond(1, 2, -1, -2).bond(2, 3);
      break;
    case Family::G:
      b.bond(0, 1, -3, -1);
      break;
  }
  return b.take();
}

// Order-2 twisted schemes. `rank` is the rank of the finite type being twisted.
CartanMatrix twisted_matrix(Family family, int rank) {
  if (family == Family::A && rank % 2 == 0) {
    // A_{2l}^(2): chain 0..l, node 0 shortest, node l longest.
    const auto l = static_cast<std::size_t>(rank / 2);
    Builder b(l + 1);
    if (l == 1) return b.bond(0, 1, -4, -1).take();
    return b.bond(0, 1, -2, -1).chain(1, l - 1).bond(l - 1, l, -2, -1).take();
  }
  if (family == Family::A && rank >= 5) {
    // A_{2l-1}^(2): leaves 0 and 1 on node 2, chain 2..l, node l long.
    const auto l = static_cast<std::size_t>((rank + 1) / 2);
    Builder b(l + 1);
    return b.bond(0, 2).bond(1, 2).chain(2, l - 1).bond(l - 1, l, -2, -1).take();
  }
  if (family == Family::D || family == Family::A) {
    // D_{l+1}^(2): chain 0..l with short ends. A_3^(2) coincides with D_3^(2).
    const auto l = static_cast<std::size_t>(family == Family::D ? rank - 1 : 2);
    Builder b(l + 1);
    return b.bond(0, 1, -2, -1).chain(1, l - 1).bond(l, l - 1, -2, -1).take();
  }
  // E_6^(2): chain 0-1-2 short, 3-4 long.
  Builder b(5);
  return b.chain(0, 2).bond(2, 3, -2, -1).bond(3, 4).take();
}

}  // namespace

std::optional<Family> family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: return std::nullopt;
  }
}

char to_char(Family f) { return static_cast<char>(f); }

std::string finite_name(Family family, int rank) {
  return std::string(1, to_char(family)) + std::to_string(rank);
}

bool is_valid_finite(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

CartanScheme::CartanScheme(const CartanMatrix& rows, SchemeKind kind, std::string series)
    : n_(rows.size()), kind_(kind), series_(std::move(series)) {
  if (!is_generalized_cartan(rows)) {
    throw Error(ErrorKind::InvalidType, "not a generalized Cartan matrix");
  }
  if (kind == SchemeKind::finite && !is_finite_type(rows)) {
    throw Error(ErrorKind::InvalidType, "matrix is not positive definite");
  }
  if (kind == SchemeKind::affine && !is_affine_type(rows)) {
    throw Error(ErrorKind::NotAffine, "matrix is not of affine type");
  }
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) entries_.insert(entries_.end(), r.begin(), r.end());
}

std::vector<int> CartanScheme::nodes() const {
  std::vector<int> ids(n_);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

CartanMatrix CartanScheme::matrix() const {
  CartanMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) m[i].assign(row(i).begin(), row(i).end());
  return m;
}

std::vector<std::size_t> CartanScheme::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (j != i && (*this)(i, j) != 0) out.push_back(j);
  }
  return out;
}

CartanScheme CartanScheme::relabeled(std::span<const std::size_t> order) const {
  CartanMatrix m(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(order[i], order[j]);
  }
  return CartanScheme(m, kind_, series_);
}

bool is_generalized_cartan(const CartanMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n || a[i][i] != 2) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return false;
      if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
    }
  }
  return true;
}

// Finite type <=> symmetrizable with all leading principal minors positive
// (for symmetrizable matrices this is positive definiteness of D*A).
bool is_finite_type(const CartanMatrix& a) {
  if (a.empty() || !is_generalized_cartan(a)) return false;
  if (!symmetrizer(a)) return false;
  const QMatrix full = to_rational(a);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    QMatrix lead(k, std::vector<Q>(k));
    for (std::size_t i = 0; i < k; ++i) {
      std::copy_n(full[i].begin(), k, lead[i].begin());
    }
    if (determinant(std::move(lead)) <= kZero) return false;
  }
  return true;
}

std::size_t corank(const CartanMatrix& a) {
  QMatrix m = to_rational(a);
  return a.size() - rref(m).size();
}

bool is_affine_type(const CartanMatrix& a) {
  return is_generalized_cartan(a) && positive_null_vector(a).has_value();
}

bool is_affine_type(const CartanScheme& scheme) { return is_affine_type(scheme.matrix()); }

CartanScheme build_finite(Family family, int rank) {
  if (!is_valid_finite(family, rank)) {
    throw Error(ErrorKind::InvalidType, "no finite type " + finite_name(family, rank));
  }
  return CartanScheme(finite_matrix(family, rank), SchemeKind::finite, finite_name(family, rank));
}

CartanScheme build_affine(Family family, int rank, int twist) {
  if (twist == 1) {
    if (!is_valid_finite(family, rank)) {
      throw Error(ErrorKind::InvalidType, "no finite type " + finite_name(family, rank));
    }
    CartanMatrix m = finite_matrix(family, rank);
    const auto n = static_cast<std::size_t>(rank);
    for (auto& r : m) r.push_back(0);
    m.emplace_back(n + 1, 0);
    m[n][n] = 2;
    auto link = [&](std::size_t j, int a0j = -1, int aj0 = -1) {
      m[n][j] = a0j;
      m[j][n] = aj0;
    };
    switch (family) {
      case Family::A:
        if (n == 1) {
          link(0, -2, -2);
        } else {
          link(0);
          link(n - 1);
        }
        break;
      case Family::B:
        if (n == 2) {
          link(1, -1, -2);
        } else {
          link(1);
        }
        break;
      case Family::C: link(0, -1, -2); break;
      case Family::D: link(1); break;
      case Family::E: link(n == 6 ? 1 : n == 7 ? 0 : 7); break;
      case Family::F: link(0); break;
      case Family::G: link(1); break;
    }
    return CartanScheme(m, SchemeKind::affine, finite_name(family, rank) + "^(1)");
  }
  if (twist != 2) {
    throw Error(ErrorKind::UnsupportedTwist, "twist " + std::to_string(twist) + " not supported");
  }
  const bool ok = (family == Family::A && rank >= 2) || (family == Family::D && rank >= 3) ||
                  (family == Family::E && rank == 6);
  if (!ok) {
    throw Error(ErrorKind::UnsupportedTwist,
                "no order-2 twisted scheme for " + finite_name(family, rank));
  }
  return CartanScheme(twisted_matrix(family, rank), SchemeKind::affine,
                      finite_name(family, rank) + "^(2)");
}

Marks compute_marks(const CartanMatrix& a) {
  if (!is_generalized_cartan(a)) throw Error(ErrorKind::NotAffine, "not a generalized Cartan matrix");
  const auto v = positive_null_vector(a);
  if (!v) throw Error(ErrorKind::NotAffine, "kernel is not spanned by a positive vector");
  Marks marks;
  marks.values.assign(v->begin(), v->end());
  return marks;
}

Marks compute_marks(const CartanScheme& scheme) {
  if (scheme.kind() != SchemeKind::affine) {
    throw Error(ErrorKind::NotAffine, "scheme " + scheme.series() + " is finite");
  }
  return compute_marks(scheme.matrix());
}

}  // namespace painted
