#include "painted/painted.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "painted/error.hpp"

namespace painted {

namespace {

std::vector<Color> coloring(std::size_t n, std::span<const std::size_t> black) {
  std::vector<Color> color(n, Color::white);
  for (std::size_t b : black) {
    if (b >= n) throw Error(ErrorKind::DiagramMismatch, "black node " + std::to_string(b) + " out of range");
    color[b] = Color::black;
  }
  return color;
}

std::vector<std::size_t> black_positions(const RealFormName& n) {
  const int rank = affine_type(n).rank;
  const auto affine = static_cast<std::size_t>(rank);
  const auto sz = [](int v) { return static_cast<std::size_t>(v); };
  switch (n.family) {
    case RealFamily::su: return {sz(n.p - 1), affine};
    case RealFamily::so_2_odd:
    case RealFamily::so_2_even: return {0, affine};
    case RealFamily::sp_real:
    case RealFamily::so_star: return {affine - 1, affine};
    case RealFamily::so_even_odd:
    case RealFamily::sp_pq:
    case RealFamily::so_even_even: return {sz(n.p - 1)};
    case RealFamily::so_odd_odd: return {sz(n.p)};
    case RealFamily::sl_odd_real: return {sz(n.p)};
    case RealFamily::sl_quaternion: return {0};
    // A_3^(2) is the 3-chain, whose middle node is the long one.
    case RealFamily::sl_even_real: return {n.p == 2 ? std::size_t{1} : sz(n.p)};
    case RealFamily::e6_m14: return {0, 6};
    case RealFamily::e6_2: return {1};
    case RealFamily::e6_6: return {4};
    case RealFamily::e6_m26: return {0};
    case RealFamily::e7_m25: return {6, 7};
    case RealFamily::e7_m5: return {0};
    case RealFamily::e7_7: return {1};
    case RealFamily::e8_8: return {0};
    case RealFamily::e8_m24: return {7};
    case RealFamily::f4_4: return {0};
    case RealFamily::f4_m20: return {3};
    case RealFamily::g2_2: return {1};
    case RealFamily::compact: break;
  }
  throw Error(ErrorKind::InvalidParameters, n.to_string() + " is compact");
}

struct Invariant {
  Color color;
  std::vector<int> row;
  std::vector<int> col;
  std::vector<std::vector<int>> neighbourhood;  // sorted (A_ij, A_ji, color_j) of neighbours
  auto operator<=>(const Invariant&) const = default;
};

class Canonicalizer {
 public:
  Canonicalizer(const CartanScheme& s, std::span<const Color> color) : s_(s), n_(s.size()) {
    color_.assign(n_, Color::white);
    if (!color.empty()) {
      if (color.size() != n_) throw Error(ErrorKind::DiagramMismatch, "color vector does not match node count");
      color_.assign(color.begin(), color.end());
    }
    std::vector<Invariant> inv(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      inv[i].color = color_[i];
      for (std::size_t j = 0; j < n_; ++j) {
        inv[i].row.push_back(s(i, j));
        inv[i].col.push_back(s(j, i));
        if (i != j && s(i, j) != 0) {
          inv[i].neighbourhood.push_back({s(i, j), s(j, i), static_cast<int>(color_[j])});
        }
      }
      std::sort(inv[i].row.begin(), inv[i].row.end());
      std::sort(inv[i].col.begin(), inv[i].col.end());
      std::sort(inv[i].neighbourhood.begin(), inv[i].neighbourhood.end());
    }
    std::vector<std::size_t> by_inv(n_);
    std::iota(by_inv.begin(), by_inv.end(), 0);
    std::stable_sort(by_inv.begin(), by_inv.end(), [&](auto a, auto b) { return inv[a] < inv[b]; });
    // cell_[k]: index of the invariant class that canonical position k must draw from.
    cell_.resize(n_);
    node_cell_.resize(n_);
    std::size_t cls = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (k > 0 && inv[by_inv[k]] != inv[by_inv[k - 1]]) ++cls;
      cell_[k] = cls;
      node_cell_[by_inv[k]] = cls;
    }
  }

  CanonicalForm run() {
    current_.clear();
    used_.assign(n_, false);
    search(0, false);
    CanonicalForm out;
    out.order = best_order_;
    out.cartan.assign(n_, std::vector<int>(n_));
    out.color.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out.color[i] = color_[best_order_[i]];
      for (std::size_t j = 0; j < n_; ++j) out.cartan[i][j] = s_(best_order_[i], best_order_[j]);
    }
    return out;
  }

 private:
  // Code contributed by placing node v at position k (given current_[0..k)).
  void code_for(std::size_t v, std::vector<int>& code) const {
    code.clear();
    for (std::size_t j = 0; j < current_.size(); ++j) {
      code.push_back(s_(v, current_[j]));
      code.push_back(s_(current_[j], v));
    }
  }

  // `below`: the prefix placed so far is already strictly smaller than the best.
  void search(std::size_t k, bool below) {
    if (k == n_) {
      if (below || best_order_.empty()) {
        best_order_ = current_;
        best_codes_ = current_codes_;
      }
      return;
    }
    std::vector<int> code;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || node_cell_[v] != cell_[k]) continue;
      code_for(v, code);
      bool next_below = below;
      if (!below && !best_order_.empty()) {
        const auto& ref = best_codes_[k];
        if (code > ref) continue;
        next_below = code < ref;
      }
      used_[v] = true;
      current_.push_back(v);
      current_codes_.push_back(code);
      search(k + 1, next_below);
      current_codes_.pop_back();
      current_.pop_back();
      used_[v] = false;
      // The subtree just replaced the best, so siblings compare against it.
      if (next_below) below = false;
    }
  }

  const CartanScheme& s_;
  std::size_t n_;
  std::vector<Color> color_;
  std::vector<std::size_t> cell_;
  std::vector<std::size_t> node_cell_;
  std::vector<std::size_t> current_;
  std::vector<std::vector<int>> current_codes_;
  std::vector<bool> used_;
  std::vector<std::size_t> best_order_;
  std::vector<std::vector<int>> best_codes_;
};

void collect_subsets(const Marks& marks, int budget, std::size_t start, std::vector<std::size_t>& chosen,
                     std::vector<std::vector<std::size_t>>& out) {
  if (budget == 0) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = start; i < marks.size(); ++i) {
    if (marks[i] > budget) continue;
    chosen.push_back(i);
    collect_subsets(marks, budget - marks[i], i + 1, chosen, out);
    chosen.pop_back();
  }
}

std::vector<int> candidate_ranks(std::size_t nodes, int r) {
  const int n = static_cast<int>(nodes);
  if (r == 1) return {n - 1};
  return {2 * (n - 1), 2 * n - 3, n, 6};
}

}  // namespace

PaintedDiagram::PaintedDiagram(CartanScheme scheme, Marks marks, std::vector<Color> color, int r)
    : scheme_(std::move(scheme)), marks_(std::move(marks)), color_(std::move(color)), r_(r) {
  if (scheme_.kind() != SchemeKind::affine) {
    throw Error(ErrorKind::NotAffine, "painted diagrams live on affine schemes");
  }
  if (r_ != 1 && r_ != 2) throw Error(ErrorKind::DiagramMismatch, "r must be 1 or 2");
  if (color_.size() != scheme_.size()) {
    throw Error(ErrorKind::DiagramMismatch, "color vector does not match node count");
  }
  if (marks_ != compute_marks(scheme_)) {
    throw Error(ErrorKind::DiagramMismatch, "marks are not the primitive null vector of the scheme");
  }
  const int sum = black_mark_sum();
  if (r_ * sum != 2) {
    throw Error(ErrorKind::KacViolation, "r * (sum of black marks) = " + std::to_string(r_) + " * " +
                                             std::to_string(sum) + " = " + std::to_string(r_ * sum) + ", expected 2");
  }
}

std::vector<std::size_t> PaintedDiagram::black_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < color_.size(); ++i) {
    if (color_[i] == Color::black) out.push_back(i);
  }
  return out;
}

int PaintedDiagram::black_mark_sum() const {
  int sum = 0;
  for (std::size_t i = 0; i < color_.size(); ++i) {
    if (color_[i] == Color::black) sum += marks_[i];
  }
  return sum;
}

PaintedDiagram paint(const CartanScheme& scheme, const Marks& marks, std::span<const std::size_t> black, int r) {
  return PaintedDiagram(scheme, marks, coloring(scheme.size(), black), r);
}

PaintedDiagram construct_painted(const RealFormName& name) {
  validate(name);
  const AffineType t = affine_type(name);
  CartanScheme scheme = build_affine(t.family, t.rank, t.twist);
  Marks marks = compute_marks(scheme);
  const auto black = black_positions(name);
  return paint(scheme, marks, black, t.twist);
}

RealFormDiagram construct(const RealFormName& name) {
  validate(name);
  if (name.family == RealFamily::compact) {
    return CompactDiagram{build_finite(name.compact_family, name.compact_rank)};
  }
  return construct_painted(name);
}

std::vector<PaintedDiagram> enumerate_paintings(const CartanScheme& scheme, int r) {
  if (r != 1 && r != 2) return {};
  const Marks marks = compute_marks(scheme);
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> chosen;
  collect_subsets(marks, 2 / r, 0, chosen, subsets);
  if (2 % r != 0) subsets.clear();
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<PaintedDiagram> out;
  std::vector<CanonicalForm> seen;
  for (const auto& black : subsets) {
    PaintedDiagram p = paint(scheme, marks, black, r);
    CanonicalForm form = canonical_form(p);
    if (std::find(seen.begin(), seen.end(), form) != seen.end()) continue;
    seen.push_back(std::move(form));
    out.push_back(std::move(p));
  }
  return out;
}

CanonicalForm canonical_form(const CartanScheme& scheme, std::span<const Color> color) {
  return Canonicalizer(scheme, color).run();
}

CanonicalForm canonical_form(const PaintedDiagram& diagram) {
  return canonical_form(diagram.scheme(), diagram.color());
}

RealFormName identify(const CartanScheme& scheme, std::span<const Color> color, int r) {
  const CanonicalForm target = canonical_form(scheme, color);
  for (int rank : candidate_ranks(scheme.size(), r)) {
    for (const RealFormName& name : catalog_of_rank(rank)) {
      if (name.family == RealFamily::compact) continue;
      const AffineType t = affine_type(name);
      if (t.twist != r) continue;
      const PaintedDiagram candidate = construct_painted(name);
      if (candidate.size() != scheme.size()) continue;
      if (canonical_form(candidate) == target) return name;
    }
  }
  throw Error(ErrorKind::Unrecognized, "no catalog real form has this painted diagram");
}

RealFormName identify(const PaintedDiagram& diagram) {
  return identify(diagram.scheme(), diagram.color(), diagram.r());
}

}  // namespace painted
