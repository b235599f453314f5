#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "painted/autgroup.hpp"
#include "painted/realform.hpp"
#include "painted/scheme.hpp"

namespace painted {

/// Affine scheme with marks, a black/white coloring and the order r of the
/// diagram automorphism induced by the Cartan involution. Construction
/// enforces the Kac condition r * (sum of black marks) = 2.
class PaintedDiagram {
 public:
  /// Throws NotAffine, DiagramMismatch (wrong sizes / marks) or KacViolation.
  PaintedDiagram(CartanScheme scheme, Marks marks, std::vector<Color> color, int r);

  const CartanScheme& scheme() const noexcept { return scheme_; }
  const Marks& marks() const noexcept { return marks_; }
  const std::vector<Color>& color() const noexcept { return color_; }
  int r() const noexcept { return r_; }
  std::size_t size() const noexcept { return scheme_.size(); }

  std::vector<std::size_t> black_nodes() const;
  int black_mark_sum() const;

  bool operator==(const PaintedDiagram& other) const {
    return scheme_ == other.scheme_ && color_ == other.color_ && r_ == other.r_;
  }

 private:
  CartanScheme scheme_;
  Marks marks_;
  std::vector<Color> color_;
  int r_;
};

/// All-white finite Dynkin diagram of a compact real form.
struct CompactDiagram {
  CartanScheme scheme;
};

using RealFormDiagram = std::variant<CompactDiagram, PaintedDiagram>;

PaintedDiagram paint(const CartanScheme& scheme, const Marks& marks,
                     std::span<const std::size_t> black, int r);

/// Painted diagram of a real form; compact forms give their finite diagram.
RealFormDiagram construct(const RealFormName& name);
/// Throws InvalidParameters for compact names.
PaintedDiagram construct_painted(const RealFormName& name);

/// One representative per Aut(scheme)-class of colorings satisfying the Kac
/// condition; representatives have the lexicographically smallest black set
/// of their class, listed by (number of blacks, black set).
std::vector<PaintedDiagram> enumerate_paintings(const CartanScheme& scheme, int r);

/// Canonical relabeling: the lexicographically minimal (Cartan matrix, color)
/// encoding over all relabelings that list nodes by ascending isomorphism
/// invariant. Two colored schemes have equal forms iff they are isomorphic.
struct CanonicalForm {
  std::vector<std::size_t> order;  // canonical position k holds original node order[k]
  CartanMatrix cartan;
  std::vector<Color> color;

  bool operator==(const CanonicalForm& other) const {
    return cartan == other.cartan && color == other.color;
  }
};

CanonicalForm canonical_form(const CartanScheme& scheme, std::span<const Color> color = {});
CanonicalForm canonical_form(const PaintedDiagram& diagram);

/// Catalog name whose constructed diagram has the same canonical form.
/// Throws Unrecognized when no catalog entry matches (Kac-violating colorings included).
RealFormName identify(const PaintedDiagram& diagram);
RealFormName identify(const CartanScheme& scheme, std::span<const Color> color, int r);

}  // namespace painted
