#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "painted/scheme.hpp"

namespace painted {

enum class Color : std::uint8_t { white = 0, black = 1 };

/// Bijection on the nodes 0..degree()-1; image(i) is where node i goes.
class DiagramAut {
 public:
  DiagramAut() = default;
  explicit DiagramAut(std::vector<std::size_t> images);

  static DiagramAut identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const;
  DiagramAut inverse() const;
  /// Element order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// (f * g)(i) = f(g(i)): apply g first.
  friend DiagramAut operator*(const DiagramAut& f, const DiagramAut& g);
  auto operator<=>(const DiagramAut&) const = default;

 private:
  std::vector<std::size_t> images_;
};

/// Cycle partition of the nodes under d, each cycle starting at its smallest
/// node, cycles sorted by that node.
std::vector<std::vector<std::size_t>> orbits(const DiagramAut& d);

/// Whether d preserves every Cartan entry, and every color when given.
bool preserves(const CartanScheme& scheme, const DiagramAut& d, std::span<const Color> color = {});

/// Finite permutation group held as an explicit, sorted element list.
class PermGroup {
 public:
  /// Closure of the generators; degree is needed for the trivial group.
  static PermGroup generated_by(std::size_t degree, std::vector<DiagramAut> generators);
  /// From a complete element list (validated for closure).
  static PermGroup from_elements(std::size_t degree, std::vector<DiagramAut> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  const std::vector<DiagramAut>& elements() const noexcept { return elements_; }
  const std::vector<DiagramAut>& generators() const noexcept { return generators_; }
  const std::string& label() const noexcept { return label_; }

  bool contains(const DiagramAut& d) const;
  bool is_abelian() const;

 private:
  PermGroup() = default;
  void finish();

  std::size_t degree_ = 0;
  std::vector<DiagramAut> generators_;
  std::vector<DiagramAut> elements_;
  std::string label_;
};

/// All Cartan-preserving (and color-preserving when colors are given) node
/// permutations, by backtracking with row-signature and color pruning.
PermGroup automorphisms(const CartanScheme& scheme, std::span<const Color> color = {});

constexpr std::size_t kBruteForceLimit = 9;

/// Factorial scan over all node permutations, OpenMP-parallel over the
/// choices for the first two images. Throws TooLarge above 9 nodes.
PermGroup brute_force_automorphisms(const CartanScheme& scheme, std::span<const Color> color = {});

/// Single-threaded reference for brute_force_automorphisms.
PermGroup brute_force_automorphisms_serial(const CartanScheme& scheme,
                                           std::span<const Color> color = {});

/// element order -> count
std::map<std::uint64_t, std::uint64_t> order_histogram(const PermGroup& g);

/// Invariant factors of an abelian group, ascending and each dividing the next.
std::vector<std::uint64_t> abelian_invariants(const PermGroup& g);

/// "1", "Z2", "Z2 × Z2", "S3", "S4", "Dih4", "S3 × Z2", ... or a descriptor
/// "order N; nonabelian; orders {k:count,...}" for anything unrecognized.
std::string identify_group(const PermGroup& g);

}  // namespace painted
