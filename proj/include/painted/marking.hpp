#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "painted/angle.hpp"
#include "painted/autgroup.hpp"
#include "painted/painted.hpp"

namespace painted {

/// Marking (c, d) on a painted diagram: a color-preserving diagram
/// automorphism d and a unit-circle scalar c_alpha = exp(2 pi i t_alpha) per
/// node. The represented automorphism sends X_alpha to c_{d alpha} X_{d alpha}.
/// Angles are rational, so only finite-order automorphisms are representable.
class Marking {
 public:
  /// Throws DiagramMismatch unless d is in Aut(P) and t has one angle per node.
  Marking(std::shared_ptr<const PaintedDiagram> diagram, DiagramAut d, std::vector<Angle> t);

  static Marking identity(std::shared_ptr<const PaintedDiagram> diagram);

  const PaintedDiagram& diagram() const noexcept { return *diagram_; }
  const std::shared_ptr<const PaintedDiagram>& diagram_ptr() const noexcept { return diagram_; }
  const DiagramAut& d() const noexcept { return d_; }
  const std::vector<Angle>& t() const noexcept { return t_; }

  bool same_diagram(const Marking& other) const;
  bool operator==(const Marking& other) const { return same_diagram(other) && d_ == other.d_ && t_ == other.t_; }

 private:
  std::shared_ptr<const PaintedDiagram> diagram_;
  DiagramAut d_;
  std::vector<Angle> t_;
};

/// Image of the marking in Aut(P) x Z_r; sign is +1 or -1 (always +1 for r = 1).
struct OuterClass {
  DiagramAut d;
  int sign = 1;

  bool is_identity() const { return sign == 1 && d.is_identity(); }
  bool operator==(const OuterClass&) const = default;
};

enum class InnerOuter { inner, outer };

struct Classification {
  InnerOuter kind;
  OuterClass outer_class;
};

/// d = d1 d2 and t_alpha = t1_alpha + t2_{d1^-1 alpha}. Throws DiagramMismatch.
Marking compose(const Marking& m1, const Marking& m2);
/// (d^-1, t'_alpha = -t_{d alpha}).
Marking inverse(const Marking& m);

/// sum over nodes of a_alpha t_alpha, mod 1 (the angle of prod c_alpha^a_alpha).
Angle invariant(const Marking& m);

/// (d, +1) for r = 1; (d, +-1) for r = 2 as the invariant is 0 or 1/2.
/// Throws NotAdmissible for r = 2 with any other invariant.
OuterClass outer_class(const Marking& m);

/// Inner iff the outer class is the identity of Aut(P) x Z_r.
Classification classify_inner(const Marking& m);

/// Least n >= 1 with m^n the identity marking: lcm over d-orbits O of
/// |O| * (order of the orbit angle sum).
std::uint64_t marking_order(const Marking& m);

/// For r = 1 and d = 1: whether prod c_alpha^a_alpha = 1. Throws WrongCase otherwise.
bool is_admissible_equal_rank(const Marking& m);

}  // namespace painted
