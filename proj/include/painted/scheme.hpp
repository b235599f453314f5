#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace painted {

// Cartan-type letter of a simple Lie algebra.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

std::optional<Family> family_from_char(char c);
char to_char(Family f);

enum class SchemeKind { finite, affine };

using CartanMatrix = std::vector<std::vector<int>>;

/// Simple-root adjacency data of a finite or affine Dynkin diagram.
///
/// Convention: entry (i, j) is <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j) / (alpha_i, alpha_i),
/// so the row of a short root carries the large off-diagonal integer and the
/// marks of an affine scheme form its right kernel (A * a = 0). Bond direction
/// is never stored separately; it is the asymmetric pair (A_ij, A_ji).
///
/// Nodes are the integers 0..size()-1 in the order documented by the builders.
class CartanScheme {
 public:
  /// Validates the generalized-Cartan shape (A_ii = 2, A_ij <= 0, matching
  /// zero pattern) and the claimed kind: positive definite for finite, corank 1
  /// with a strictly positive null vector for affine.
  CartanScheme(const CartanMatrix& rows, SchemeKind kind, std::string series = {});

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const int> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  SchemeKind kind() const noexcept { return kind_; }
  const std::string& series() const noexcept { return series_; }

  std::vector<int> nodes() const;
  CartanMatrix matrix() const;

  /// Number of edges joining i and j in the drawn diagram (A_ij * A_ji).
  int bond(std::size_t i, std::size_t j) const { return (*this)(i, j) * (*this)(j, i); }
  std::vector<std::size_t> neighbours(std::size_t i) const;

  /// Same scheme with nodes listed in `order` (new node k is old node order[k]).
  CartanScheme relabeled(std::span<const std::size_t> order) const;

  bool operator==(const CartanScheme& other) const {
    return n_ == other.n_ && entries_ == other.entries_ && kind_ == other.kind_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<int> entries_;
  SchemeKind kind_ = SchemeKind::finite;
  std::string series_;
};

/// Primitive positive integer null vector of an affine scheme.
struct Marks {
  std::vector<int> values;

  int operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const noexcept { return values.size(); }
  auto operator<=>(const Marks&) const = default;
};

// Shape checks on raw matrices (no throwing).
bool is_generalized_cartan(const CartanMatrix& a);
bool is_finite_type(const CartanMatrix& a);
bool is_affine_type(const CartanMatrix& a);
bool is_affine_type(const CartanScheme& scheme);
/// Dimension of the right kernel over Q.
std::size_t corank(const CartanMatrix& a);

/// Finite scheme in Bourbaki numbering: A_n (n>=1), B_n (n>=2), C_n (n>=3),
/// D_n (n>=4), E_6..8, F_4, G_2. Throws InvalidType otherwise.
CartanScheme build_finite(Family family, int rank);

/// Affine scheme. twist 1 appends the lowest-root node (index `rank`) to the
/// finite scheme. twist 2 builds the order-2 twisted schemes A_n^(2) (n>=2),
/// D_n^(2) (n>=3) and E_6^(2); node orders are documented in the README.
/// Throws InvalidType / UnsupportedTwist.
CartanScheme build_affine(Family family, int rank, int twist);

/// Throws NotAffine when the kernel is not one-dimensional or not positive.
Marks compute_marks(const CartanScheme& scheme);
Marks compute_marks(const CartanMatrix& a);

/// Whether (family, rank) names a finite type accepted by build_finite.
bool is_valid_finite(Family family, int rank);

std::string finite_name(Family family, int rank);

}  // namespace painted
