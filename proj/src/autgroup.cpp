#include "painted/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "painted/error.hpp"
#include "painted/parallel.hpp"

namespace painted {

namespace {

Color color_at(std::span<const Color> color, std::size_t i) {
  return color.empty() ? Color::white : color[i];
}

void check_color_size(const CartanScheme& scheme, std::span<const Color> color) {
  if (!color.empty() && color.size() != scheme.size()) {
    throw Error(ErrorKind::DiagramMismatch, "color vector does not match node count");
  }
}

// Isomorphism-invariant label of a node: color plus sorted row and column.
struct NodeSignature {
  Color color;
  std::vector<int> row;
  std::vector<int> col;
  auto operator<=>(const NodeSignature&) const = default;
};

std::vector<NodeSignature> signatures(const CartanScheme& s, std::span<const Color> color) {
  std::vector<NodeSignature> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i].color = color_at(color, i);
    for (std::size_t j = 0; j < s.size(); ++j) {
      out[i].row.push_back(s(i, j));
      out[i].col.push_back(s(j, i));
    }
    std::sort(out[i].row.begin(), out[i].row.end());
    std::sort(out[i].col.begin(), out[i].col.end());
  }
  return out;
}

std::set<DiagramAut> close(std::size_t degree, const std::vector<DiagramAut>& gens) {
  std::set<DiagramAut> seen{DiagramAut::identity(degree)};
  std::vector<DiagramAut> frontier{DiagramAut::identity(degree)};
  while (!frontier.empty()) {
    std::vector<DiagramAut> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        DiagramAut y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Greedy generating set: scan sorted elements, keep any not yet generated.
std::vector<DiagramAut> greedy_generators(std::size_t degree, const std::vector<DiagramAut>& sorted) {
  std::vector<DiagramAut> gens;
  std::set<DiagramAut> reached = close(degree, gens);
  for (const auto& x : sorted) {
    if (reached.count(x)) continue;
    gens.push_back(x);
    reached = close(degree, gens);
    if (reached.size() == sorted.size()) break;
  }
  return gens;
}

class Backtracker {
 public:
  Backtracker(const CartanScheme& s, std::span<const Color> color)
      : s_(s), sig_(signatures(s, color)), image_(s.size()), used_(s.size(), false) {
    // Visit nodes breadth-first so each new node is constrained by a placed neighbour.
    std::vector<bool> queued(s.size(), false);
    for (std::size_t root = 0; root < s.size(); ++root) {
      if (queued[root]) continue;
      queued[root] = true;
      std::size_t head = order_.size();
      order_.push_back(root);
      while (head < order_.size()) {
        for (std::size_t j : s.neighbours(order_[head++])) {
          if (!queued[j]) {
            queued[j] = true;
            order_.push_back(j);
          }
        }
      }
    }
  }

  std::vector<DiagramAut> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      found_.emplace_back(image_);
      return;
    }
    const std::size_t i = order_[depth];
    for (std::size_t j = 0; j < s_.size(); ++j) {
      if (used_[j] || sig_[i] != sig_[j] || !consistent(depth, i, j)) continue;
      used_[j] = true;
      image_[i] = j;
      extend(depth + 1);
      used_[j] = false;
    }
  }

  bool consistent(std::size_t depth, std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t u = order_[k];
      if (s_(i, u) != s_(j, image_[u]) || s_(u, i) != s_(image_[u], j)) return false;
    }
    return true;
  }

  const CartanScheme& s_;
  std::vector<NodeSignature> sig_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<DiagramAut> found_;
};

bool preserves_images(const CartanScheme& s, std::span<const Color> color,
                      const std::vector<std::size_t>& image) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (color_at(color, i) != color_at(color, image[i])) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (s(i, j) != s(image[i], image[j])) return false;
    }
  }
  return true;
}

void check_brute_force_size(const CartanScheme& s) {
  if (s.size() > kBruteForceLimit) {
    throw Error(ErrorKind::TooLarge, std::to_string(s.size()) + " nodes exceeds factorial scan limit of " +
                                         std::to_string(kBruteForceLimit));
  }
}

std::uint64_t prime_power_exponent(std::uint64_t value, std::uint64_t p) {
  std::uint64_t e = 0;
  while (value % p == 0) {
    value /= p;
    ++e;
  }
  return e;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string histogram_string(const std::map<std::uint64_t, std::uint64_t>& h) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : h) {
    os << (first ? "" : ",") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

struct KnownGroup {
  std::uint64_t order;
  std::map<std::uint64_t, std::uint64_t> histogram;
  const char* name;
};

// Nonabelian groups met by diagram automorphisms and their Z2 extensions.
// Each histogram separates its group from every other group of that order.
const std::vector<KnownGroup>& known_groups() {
  static const std::vector<KnownGroup> table{
      {6, {{1, 1}, {2, 3}, {3, 2}}, "S3"},
      {8, {{1, 1}, {2, 5}, {4, 2}}, "Dih4"},
      {8, {{1, 1}, {2, 1}, {4, 6}}, "Q8"},
      {12, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, "S3 × Z2"},
      {12, {{1, 1}, {2, 3}, {3, 8}}, "A4"},
      {16, {{1, 1}, {2, 11}, {4, 4}}, "Dih4 × Z2"},
      {24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, "S4"},
      {24, {{1, 1}, {2, 15}, {3, 2}, {6, 6}}, "S3 × Z2 × Z2"},
      {48, {{1, 1}, {2, 19}, {3, 8}, {4, 12}, {6, 8}}, "S4 × Z2"},
  };
  return table;
}

bool is_dihedral(const PermGroup& g) {
  const std::uint64_t n = g.order() / 2;
  if (g.order() % 2 != 0 || n < 3) return false;
  for (const auto& x : g.elements()) {
    if (x.order() != n) continue;
    std::set<DiagramAut> cyclic;
    DiagramAut power = DiagramAut::identity(g.degree());
    for (std::uint64_t k = 0; k < n; ++k) {
      cyclic.insert(power);
      power = x * power;
    }
    return std::all_of(g.elements().begin(), g.elements().end(),
                       [&](const DiagramAut& y) { return cyclic.count(y) || y.order() == 2; });
  }
  return false;
}

}  // namespace

DiagramAut::DiagramAut(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || hit[v]) {
      throw Error(ErrorKind::DiagramMismatch, "permutation images are not a bijection");
    }
    hit[v] = true;
  }
}

DiagramAut DiagramAut::identity(std::size_t degree) {
  std::vector<std::size_t> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return DiagramAut(std::move(id));
}

bool DiagramAut::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

DiagramAut DiagramAut::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return DiagramAut(std::move(inv));
}

std::uint64_t DiagramAut::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : orbits(*this)) result = std::lcm(result, cycle.size());
  return result;
}

DiagramAut operator*(const DiagramAut& f, const DiagramAut& g) {
  if (f.degree() != g.degree()) {
    throw Error(ErrorKind::DiagramMismatch, "composing permutations of different degree");
  }
  std::vector<std::size_t> out(f.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(g(i));
  return DiagramAut(std::move(out));
}

std::vector<std::vector<std::size_t>> orbits(const DiagramAut& d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(d.degree(), false);
  for (std::size_t start = 0; start < d.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = d(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool preserves(const CartanScheme& scheme, const DiagramAut& d, std::span<const Color> color) {
  check_color_size(scheme, color);
  return d.degree() == scheme.size() && preserves_images(scheme, color, d.images());
}

PermGroup PermGroup::generated_by(std::size_t degree, std::vector<DiagramAut> generators) {
  PermGroup g;
  g.degree_ = degree;
  for (auto& x : generators) {
    if (x.degree() != degree) {
      throw Error(ErrorKind::DiagramMismatch, "generator degree does not match group degree");
    }
    if (!x.is_identity() &&
        std::find(g.generators_.begin(), g.generators_.end(), x) == g.generators_.end()) {
      g.generators_.push_back(std::move(x));
    }
  }
  const auto all = close(degree, g.generators_);
  g.elements_.assign(all.begin(), all.end());
  g.finish();
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<DiagramAut> elements) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.generators_ = greedy_generators(degree, elements);
  if (close(degree, g.generators_).size() != elements.size()) {
    throw Error(ErrorKind::DiagramMismatch, "element list is not closed under composition");
  }
  g.elements_ = std::move(elements);
  g.finish();
  return g;
}

void PermGroup::finish() {
  std::sort(elements_.begin(), elements_.end());
  label_ = identify_group(*this);
}

bool PermGroup::contains(const DiagramAut& d) const {
  return std::binary_search(elements_.begin(), elements_.end(), d);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

PermGroup automorphisms(const CartanScheme& scheme, std::span<const Color> color) {
  check_color_size(scheme, color);
  auto found = Backtracker(scheme, color).run();
  return PermGroup::from_elements(scheme.size(), std::move(found));
}

PermGroup brute_force_automorphisms_serial(const CartanScheme& scheme, std::span<const Color> color) {
  check_color_size(scheme, color);
  check_brute_force_size(scheme);
  std::vector<std::size_t> image(scheme.size());
  std::iota(image.begin(), image.end(), 0);
  std::vector<DiagramAut> found;
  do {
    if (preserves_images(scheme, color, image)) found.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return PermGroup::from_elements(scheme.size(), std::move(found));
}

PermGroup brute_force_automorphisms(const CartanScheme& scheme, std::span<const Color> color) {
  check_color_size(scheme, color);
  check_brute_force_size(scheme);
  const std::size_t n = scheme.size();
  if (n < 3) return brute_force_automorphisms_serial(scheme, color);

  // One task per choice of (image of node 0, image of node 1).
  const long tasks = static_cast<long>(n * (n - 1));
  std::vector<std::vector<DiagramAut>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    const std::size_t a = static_cast<std::size_t>(t) / (n - 1);
    std::size_t b = static_cast<std::size_t>(t) % (n - 1);
    if (b >= a) ++b;
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != a && v != b) rest.push_back(v);
    }
    std::vector<std::size_t> image(n);
    image[0] = a;
    image[1] = b;
    auto& out = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    do {
      std::copy(rest.begin(), rest.end(), image.begin() + 2);
      if (preserves_images(scheme, color, image)) out.emplace_back(image);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::vector<DiagramAut> found;
  for (auto& part : per_thread) {
    found.insert(found.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return PermGroup::from_elements(n, std::move(found));
}

std::map<std::uint64_t, std::uint64_t> order_histogram(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (const auto& x : g.elements()) ++h[x.order()];
  return h;
}

std::vector<std::uint64_t> abelian_invariants(const PermGroup& g) {
  const auto hist = order_histogram(g);
  // Per prime: exponents of the cyclic p-factors, largest first.
  std::vector<std::vector<std::uint64_t>> powers;
  for (std::uint64_t p : prime_factors(g.order())) {
    const std::uint64_t top = prime_power_exponent(g.order(), p);
    // s[k] = log_p #{x : x^(p^k) = 1}
    std::vector<std::uint64_t> s(top + 2, 0);
    for (std::uint64_t k = 1; k <= top + 1; ++k) {
      std::uint64_t pk = 1;
      for (std::uint64_t i = 0; i < k; ++i) pk *= p;
      std::uint64_t count = 0;
      for (const auto& [ord, c] : hist) {
        if (pk % ord == 0) count += c;
      }
      s[k] = prime_power_exponent(count, p);
    }
    std::vector<std::uint64_t> exps;
    for (std::uint64_t e = 1; e <= top; ++e) {
      const std::uint64_t at_least_e = s[e] - s[e - 1];
      const std::uint64_t at_least_next = s[e + 1] - s[e];
      for (std::uint64_t i = 0; i < at_least_e - at_least_next; ++i) {
        std::uint64_t pe = 1;
        for (std::uint64_t j = 0; j < e; ++j) pe *= p;
        exps.push_back(pe);
      }
    }
    std::sort(exps.rbegin(), exps.rend());
    powers.push_back(std::move(exps));
  }
  std::size_t factors = 0;
  for (const auto& v : powers) factors = std::max(factors, v.size());
  std::vector<std::uint64_t> inv(factors, 1);
  for (const auto& v : powers) {
    for (std::size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

std::string identify_group(const PermGroup& g) {
  if (g.order() == 1) return "1";
  if (g.is_abelian()) {
    std::string out;
    for (std::uint64_t f : abelian_invariants(g)) {
      out += (out.empty() ? "Z" : " × Z") + std::to_string(f);
    }
    return out;
  }
  const auto hist = order_histogram(g);
  for (const auto& known : known_groups()) {
    if (known.order == g.order() && known.histogram == hist) return known.name;
  }
  if (is_dihedral(g)) return "Dih" + std::to_string(g.order() / 2);
  return "order " + std::to_string(g.order()) + "; nonabelian; orders " + histogram_string(hist);
}

}  // namespace painted
