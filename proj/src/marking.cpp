#include "painted/marking.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "painted/error.hpp"

namespace painted {

Marking::Marking(std::shared_ptr<const PaintedDiagram> diagram, DiagramAut d, std::vector<Angle> t)
    : diagram_(std::move(diagram)), d_(std::move(d)), t_(std::move(t)) {
  if (!diagram_) throw Error(ErrorKind::DiagramMismatch, "marking without a diagram");
  if (t_.size() != diagram_->size()) {
    throw Error(ErrorKind::DiagramMismatch, "expected " + std::to_string(diagram_->size()) + " angles, got " +
                                                std::to_string(t_.size()));
  }
  if (!preserves(diagram_->scheme(), d_, diagram_->color())) {
    throw Error(ErrorKind::DiagramMismatch, "d is not a color-preserving diagram automorphism");
  }
}

Marking Marking::identity(std::shared_ptr<const PaintedDiagram> diagram) {
  const std::size_t n = diagram->size();
  return Marking(std::move(diagram), DiagramAut::identity(n), std::vector<Angle>(n));
}

bool Marking::same_diagram(const Marking& other) const {
  return diagram_ == other.diagram_ || *diagram_ == *other.diagram_;
}

Marking compose(const Marking& m1, const Marking& m2) {
  if (!m1.same_diagram(m2)) throw Error(ErrorKind::DiagramMismatch, "markings live on different diagrams");
  const DiagramAut d1_inv = m1.d().inverse();
  std::vector<Angle> t(m1.t().size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = m1.t()[a] + m2.t()[d1_inv(a)];
  return Marking(m1.diagram_ptr(), m1.d() * m2.d(), std::move(t));
}

Marking inverse(const Marking& m) {
  std::vector<Angle> t(m.t().size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = -m.t()[m.d()(a)];
  return Marking(m.diagram_ptr(), m.d().inverse(), std::move(t));
}

Angle invariant(const Marking& m) {
  Angle sum;
  const Marks& marks = m.diagram().marks();
  for (std::size_t a = 0; a < m.t().size(); ++a) sum += marks[a] * m.t()[a];
  return sum;
}

OuterClass outer_class(const Marking& m) {
  if (m.diagram().r() == 1) return {m.d(), 1};
  const Angle inv = invariant(m);
  if (inv.is_zero()) return {m.d(), 1};
  if (inv == Angle(1, 2)) return {m.d(), -1};
  throw Error(ErrorKind::NotAdmissible, "r = 2 marking has invariant " + inv.to_string() + ", expected 0 or 1/2");
}

Classification classify_inner(const Marking& m) {
  OuterClass oc = outer_class(m);
  const InnerOuter kind = oc.is_identity() ? InnerOuter::inner : InnerOuter::outer;
  return {kind, std::move(oc)};
}

std::uint64_t marking_order(const Marking& m) {
  std::uint64_t order = 1;
  for (const auto& orbit : orbits(m.d())) {
    Angle sum;
    for (std::size_t a : orbit) sum += m.t()[a];
    order = std::lcm(order, orbit.size() * static_cast<std::uint64_t>(sum.denominator()));
  }
  return order;
}

bool is_admissible_equal_rank(const Marking& m) {
  if (m.diagram().r() != 1 || !m.d().is_identity()) {
    throw Error(ErrorKind::WrongCase, "equal-rank admissibility needs r = 1 and d = 1");
  }
  return invariant(m).is_zero();
}

}  // namespace painted
