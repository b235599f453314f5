#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "painted/error.hpp"

namespace painted::checks {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<RealFormName> noncompact_catalog(int max_rank) {
  std::vector<RealFormName> out;
  for (const auto& n : catalog(max_rank)) {
    if (n.family != RealFamily::compact) out.push_back(n);
  }
  return out;
}

struct Block {
  CartanScheme scheme;
  std::vector<Color> color;
  bool complex;
  bool z2;
};

// Node map i -> phi[i] carrying a onto b, by scanning all permutations.
std::optional<std::vector<std::size_t>> isomorphism(const Block& a, const Block& b) {
  const std::size_t n = a.scheme.size();
  if (a.complex != b.complex || a.z2 != b.z2 || n != b.scheme.size()) return std::nullopt;
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  const auto color_of = [](const Block& x, std::size_t i) { return x.color.empty() ? Color::white : x.color[i]; };
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (color_of(a, i) != color_of(b, phi[i])) ok = false;
      for (std::size_t j = 0; j < n && ok; ++j) ok = a.scheme(i, j) == b.scheme(phi[i], phi[j]);
    }
    if (ok) return phi;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return std::nullopt;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

std::vector<std::int64_t> cofactor_null_vector(const CartanMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> v(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<std::int64_t>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == k) continue;
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(a[r][c]);
        }
        minor.push_back(std::move(row));
      }
      v[j] = ((k + j) % 2 ? -1 : 1) * bareiss_det(std::move(minor));
    }
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 0) continue;
    const auto first = *std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (first < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
  }
  return {};
}

std::size_t count_painting_classes(const CartanScheme& scheme, int r) {
  const std::size_t n = scheme.size();
  const auto marks = cofactor_null_vector(scheme.matrix());
  const PermGroup aut = brute_force_automorphisms_serial(scheme);
  std::set<std::vector<Color>> seen;
  std::size_t classes = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Color> color(n, Color::white);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        color[i] = Color::black;
        sum += marks[i];
      }
    }
    if (r * sum != 2 || seen.count(color)) continue;
    ++classes;
    for (const auto& g : aut.elements()) {
      std::vector<Color> image(n);
      for (std::size_t i = 0; i < n; ++i) image[g(i)] = color[i];
      seen.insert(std::move(image));
    }
  }
  return classes;
}

std::uint64_t semisimple_order_oracle(const SemisimpleSpec& spec) {
  std::vector<Block> blocks;
  for (const auto& c : spec.complex_factors) blocks.push_back({build_finite(c.family, c.rank), {}, true, true});
  for (const auto& name : spec.real_factors) {
    if (name.family == RealFamily::compact) {
      blocks.push_back({build_finite(name.compact_family, name.compact_rank), {}, false, false});
    } else {
      const PaintedDiagram p = construct_painted(name);
      blocks.push_back({p.scheme(), p.color(), false, p.r() == 2});
    }
  }
  std::vector<std::size_t> offset;
  std::size_t degree = 0;
  for (const auto& b : blocks) {
    offset.push_back(degree);
    degree += b.scheme.size() + (b.z2 ? 2 : 0);
  }
  const auto identity = [&] {
    std::vector<std::size_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };
  std::vector<DiagramAut> gens;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    const std::size_t n = b.scheme.size();
    const PermGroup aut = brute_force_automorphisms_serial(b.scheme, b.color);
    for (const auto& g : aut.elements()) {
      auto p = identity();
      for (std::size_t i = 0; i < n; ++i) p[offset[k] + i] = offset[k] + g(i);
      gens.emplace_back(std::move(p));
    }
    if (b.z2) {
      auto p = identity();
      std::swap(p[offset[k] + n], p[offset[k] + n + 1]);
      gens.emplace_back(std::move(p));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto phi = isomorphism(blocks[j], b);
      if (!phi) continue;
      auto p = identity();
      for (std::size_t i = 0; i < n; ++i) {
        p[offset[j] + i] = offset[k] + (*phi)[i];
        p[offset[k] + (*phi)[i]] = offset[j] + i;
      }
      if (b.z2) {
        for (std::size_t e = 0; e < 2; ++e) {
          p[offset[j] + n + e] = offset[k] + n + e;
          p[offset[k] + n + e] = offset[j] + n + e;
        }
      }
      gens.emplace_back(std::move(p));
      break;
    }
  }
  return PermGroup::generated_by(degree, std::move(gens)).order();
}

Marking random_admissible(const std::shared_ptr<const PaintedDiagram>& diagram, const PermGroup& aut,
                          std::mt19937_64& rng, int max_denominator) {
  const std::size_t n = diagram->size();
  std::uniform_int_distribution<std::size_t> pick(0, aut.elements().size() - 1);
  const DiagramAut d = aut.elements()[pick(rng)];
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  std::vector<Angle> t(n);
  for (auto& a : t) {
    const int den = den_dist(rng);
    a = Angle(std::uniform_int_distribution<int>(0, den - 1)(rng), den);
  }
  Angle target;
  if (diagram->r() == 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) target = Angle(1, 2);
  std::size_t fix = 0;
  while (diagram->marks()[fix] != 1) ++fix;
  Marking draft(diagram, d, t);
  t[fix] += target - invariant(draft);
  return Marking(diagram, d, std::move(t));
}

const std::vector<CuratedMarking>& curated_markings() {
  static const std::vector<CuratedMarking> cases = {
      {"su(2,1)", {}, {}, true},
      {"su(2,1)", {}, {"0", "1/4", "3/4"}, true},
      {"su(2,1)", {}, {"1/3", "1/3", "1/3"}, true},
      {"su(2,1)", {0, 2, 1}, {}, false},
      {"su(2,1)", {0, 2, 1}, {"0", "1/2", "1/2"}, false},
      {"su(2,2)", {}, {"1/2", "0", "1/2", "0"}, true},
      {"su(2,2)", {0, 3, 2, 1}, {}, false},
      {"su(2,2)", {2, 1, 0, 3}, {"0", "1/4", "0", "3/4"}, false},
      {"su(2,2)", {2, 3, 0, 1}, {}, false},
      {"su(2,2)", {}, {"0", "1/5", "2/5", "2/5"}, true},
      {"su(3,1)", {}, {}, true},
      {"su(3,1)", {1, 0, 3, 2}, {}, false},
      {"su(3,1)", {1, 0, 3, 2}, {"1/2", "1/2", "0", "0"}, false},
      {"su(3,1)", {}, {"0", "0", "1/2", "1/2"}, true},
      {"sl(3,R)", {}, {}, true},
      {"sl(3,R)", {}, {"0", "1/2"}, false},
      {"sl(3,R)", {}, {"1/4", "0"}, false},
      {"sl(3,R)", {}, {"1/2", "0"}, true},
      {"sl(3,R)", {}, {"1/4", "1/2"}, true},
      {"sl(3,R)", {}, {"3/4", "0"}, false},
      {"sl(4,R)", {}, {}, true},
      {"sl(4,R)", {}, {"0", "1/2", "0"}, false},
      {"sl(4,R)", {}, {"1/2", "1/2", "0"}, true},
      {"sl(4,R)", {2, 1, 0}, {}, false},
      {"sl(4,R)", {2, 1, 0}, {"0", "1/2", "0"}, false},
      {"sl(4,R)", {}, {"1/4", "1/4", "0"}, false},
      {"sl(4,R)", {}, {"1/6", "1/3", "0"}, false},
      {"sl(4,R)", {}, {"1/3", "1/3", "1/3"}, true},
      {"so(4,4)", {}, {}, true},
      {"so(4,4)", {}, {"0", "1/2", "0", "0", "0"}, true},
      {"so(4,4)", {2, 1, 0, 3, 4}, {}, false},
      {"so(4,4)", {3, 1, 4, 2, 0}, {}, false},
      {"so(4,4)", {0, 1, 3, 4, 2}, {"0", "0", "1/3", "1/3", "1/3"}, false},
      {"so(4,4)", {}, {"1/2", "1/4", "0", "0", "0"}, true},
      {"so(5,5)", {}, {}, true},
      {"so(5,5)", {}, {"0", "0", "1/2", "0", "0"}, false},
      {"so(5,5)", {}, {"1/2", "0", "1/2", "0", "0"}, true},
      {"so(5,5)", {4, 3, 2, 1, 0}, {}, false},
      {"so(5,5)", {4, 3, 2, 1, 0}, {"0", "0", "1/2", "0", "0"}, false},
      {"so(5,5)", {}, {"1/4", "1/4", "1/4", "1/4", "0"}, true},
      {"so(5,5)", {}, {"1/8", "1/8", "1/8", "1/8", "0"}, false},
      {"sp(3,R)", {}, {}, true},
      {"sp(3,R)", {1, 0, 3, 2}, {}, false},
      {"sp(3,R)", {}, {"0", "1/2", "1/2", "0"}, true},
      {"e6(-14)", {}, {}, true},
      {"e6(-14)", {6, 2, 1, 3, 4, 5, 0}, {}, false},
      {"e6(6)", {}, {"0", "0", "0", "0", "1/2"}, false},
      {"e6(6)", {}, {"0", "0", "1/6", "0", "0"}, false},
      {"e6(6)", {}, {"0", "1/4", "0", "1/4", "0"}, true},
      {"so(6,6)", {4, 3, 2, 1, 6, 0, 5}, {}, false},
  };
  return cases;
}

Marking build(const CuratedMarking& c) {
  auto diagram = std::make_shared<const PaintedDiagram>(construct_painted(RealFormName::parse(c.form)));
  const std::size_t n = diagram->size();
  DiagramAut d = c.d.empty() ? DiagramAut::identity(n) : DiagramAut(c.d);
  std::vector<Angle> t(n);
  for (std::size_t i = 0; i < c.t.size(); ++i) t[i] = Angle::parse(c.t[i]);
  return Marking(std::move(diagram), std::move(d), std::move(t));
}

CriterionResult su_table(const Options&) {
  CriterionResult res{1, "su table reproduction", true, 0, 1.0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  const auto expect = [&](int p, int q, const std::string& label, std::uint64_t order) {
    const auto out = outer_simple(RealFormName::make(RealFamily::su, p, q));
    if (out.label != label || out.order != order) {
      bad.push_back("su(" + std::to_string(p) + "," + std::to_string(q) + ") gave " + out.label);
    }
  };
  for (auto [p, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 2}}) expect(p, q, "Z2", 2);
  for (int p : {2, 3, 4}) expect(p, p, "Z2 × Z2", 4);
  res.seconds = since(t0);
  res.correct = bad.empty();
  res.detail = bad.empty() ? "7 rows match" : join(bad);
  return res;
}

CriterionResult kac_condition(const Options& opt) {
  CriterionResult res{2, "Kac condition", true, 0, 1.0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  const auto names = noncompact_catalog(opt.max_rank);
  for (const auto& name : names) {
    const PaintedDiagram p = construct_painted(name);
    int sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.color()[i] == Color::black) sum += p.marks()[i];
    }
    if (p.r() * sum != 2) bad.push_back(name.to_string());
  }
  res.seconds = since(t0);
  res.correct = bad.empty() && !names.empty();
  res.detail = bad.empty() ? std::to_string(names.size()) + " catalog diagrams" : join(bad);
  return res;
}

CriterionResult marks_oracle(const Options& opt) {
  CriterionResult res{3, "marks oracle", true, 0, 1.0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  std::set<AffineType> types;
  for (const auto& name : noncompact_catalog(opt.max_rank)) types.insert(affine_type(name));
  for (const auto& t : types) {
    const CartanScheme s = build_affine(t.family, t.rank, t.twist);
    const Marks m = compute_marks(s);
    int g = 0;
    bool kernel = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      long long row = 0;
      for (std::size_t j = 0; j < s.size(); ++j) row += static_cast<long long>(s(i, j)) * m[j];
      kernel = kernel && row == 0;
      g = std::gcd(g, m[i]);
    }
    const auto oracle = cofactor_null_vector(s.matrix());
    const bool same = std::equal(oracle.begin(), oracle.end(), m.values.begin(), m.values.end());
    if (!kernel || g != 1 || !same) bad.push_back(s.series());
  }
  for (int n = 1; n <= opt.max_rank; ++n) {
    const Marks m = compute_marks(build_affine(Family::A, n, 1));
    if (std::any_of(m.values.begin(), m.values.end(), [](int a) { return a != 1; })) {
      bad.push_back("A" + std::to_string(n) + "^(1) not all ones");
    }
  }
  res.seconds = since(t0);
  res.correct = bad.empty();
  res.detail = bad.empty() ? std::to_string(types.size()) + " affine schemes" : join(bad);
  return res;
}

CriterionResult automorphism_oracle(const Options& opt) {
  CriterionResult res{4, "automorphism oracle equivalence", true, 0, 10.0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (const auto& name : catalog(opt.max_rank)) {
    CartanScheme scheme = build_finite(Family::A, 1);
    std::vector<Color> color;
    if (name.family == RealFamily::compact) {
      scheme = build_finite(name.compact_family, name.compact_rank);
    } else {
      const PaintedDiagram p = construct_painted(name);
      scheme = p.scheme();
      color = p.color();
    }
    if (scheme.size() > kBruteForceLimit) continue;
    ++checked;
    if (automorphisms(scheme, color).elements() != brute_force_automorphisms(scheme, color).elements()) {
      bad.push_back(name.to_string());
    }
  }
  res.seconds = since(t0);
  res.correct = bad.empty() && checked > 0;
  res.detail = bad.empty() ? std::to_string(checked) + " diagrams" : join(bad);
  return res;
}

CriterionResult enumeration_bijection(const Options& opt) {
  CriterionResult res{5, "enumeration bijection", true, 0, 5.0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;

  // Catalog names per (uncolored scheme up to isomorphism, r).
  std::map<std::pair<CartanMatrix, int>, std::vector<RealFormName>> by_scheme;
  for (const auto& name : noncompact_catalog(opt.max_rank)) {
    const PaintedDiagram p = construct_painted(name);
    by_scheme[{canonical_form(p.scheme()).cartan, p.r()}].push_back(name);
  }
  std::set<std::pair<CartanMatrix, int>> done;
  std::size_t schemes = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    for (int rank = 1; rank <= opt.max_rank; ++rank) {
      for (int r : {1, 2}) {
        std::optional<CartanScheme> s;
        try {
          s = build_affine(f, rank, r);
        } catch (const Error&) {
          continue;
        }
        const std::pair key{canonical_form(*s).cartan, r};
        if (!done.insert(key).second) continue;
        ++schemes;
        const auto paintings = enumerate_paintings(*s, r);
        const auto& names = by_scheme[key];
        std::set<RealFormName> identified;
        for (const auto& p : paintings) {
          try {
            identified.insert(identify(p));
          } catch (const Error&) {
          }
        }
        const std::size_t oracle = count_painting_classes(*s, r);
        const std::set<RealFormName> expected(names.begin(), names.end());
        if (paintings.size() != names.size() || oracle != names.size() || identified != expected) {
          bad.push_back(s->series() + ": " + std::to_string(paintings.size()) + " paintings, " +
                        std::to_string(oracle) + " by scan, " + std::to_string(names.size()) + " names");
        }
      }
    }
  }
  res.seconds = since(t0);
  res.correct = bad.empty() && schemes > 0;
  res.detail = bad.empty() ? std::to_string(schemes) + " scheme/r pairs" : join(bad);
  return res;
}

CriterionResult homomorphism_property(const Options& opt) {
  CriterionResult res{6, "homomorphism property", true, 0, 10.0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  constexpr int kPairs = 1000;
  std::size_t tested = 0;
  for (const char* form : {"su(2,2)", "so(4,4)", "so(5,5)"}) {
    auto diagram = std::make_shared<const PaintedDiagram>(construct_painted(RealFormName::parse(form)));
    const PermGroup aut = automorphisms(diagram->scheme(), diagram->color());
    std::mt19937_64 rng(opt.seed);
    int failures = 0;
    for (int k = 0; k < kPairs; ++k) {
      const Marking m1 = random_admissible(diagram, aut, rng);
      const Marking m2 = random_admissible(diagram, aut, rng);
      const OuterClass c1 = outer_class(m1);
      const OuterClass c2 = outer_class(m2);
      const OuterClass c = outer_class(compose(m1, m2));
      if (c.d != c1.d * c2.d || c.sign != c1.sign * c2.sign) ++failures;
      tested += 2;
    }
    if (failures) bad.push_back(std::string(form) + ": " + std::to_string(failures) + " failures");
  }
  // mark constancy on Aut(P)-orbits across the catalog
  for (const auto& name : noncompact_catalog(opt.max_rank)) {
    const PaintedDiagram p = construct_painted(name);
    const PermGroup aut = automorphisms(p.scheme(), p.color());
    for (const auto& d : aut.elements()) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.marks()[d(i)] != p.marks()[i]) {
          bad.push_back(name.to_string() + ": marks not constant on orbits");
          i = p.size();
        }
      }
    }
  }
  res.seconds = since(t0);
  res.correct = bad.empty();
  res.detail = bad.empty() ? std::to_string(tested) + " random markings over 3 forms" : join(bad);
  return res;
}

CriterionResult classification_predicates(const Options&) {
  CriterionResult res{7, "classification predicates", true, 0, 0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  const auto& cases = curated_markings();
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& c = cases[k];
    const Classification got = classify_inner(build(c));
    const bool inner = got.kind == InnerOuter::inner;
    const bool rule = got.outer_class.d.is_identity() && got.outer_class.sign == 1;
    if (inner != c.inner || inner != rule) bad.push_back("case " + std::to_string(k + 1) + " (" + c.form + ")");
  }
  res.seconds = since(t0);
  res.correct = bad.empty() && cases.size() == 50;
  res.detail = bad.empty() ? std::to_string(cases.size()) + " curated markings" : join(bad);
  return res;
}

CriterionResult semisimple_orders(const Options&) {
  CriterionResult res{8, "semisimple orders", true, 0, 2.0, {}};
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  const auto a2 = outer_complex_as_real(Family::A, 2);
  const auto a2_oracle = semisimple_order_oracle(SemisimpleSpec{{{Family::A, 2}}, {}});
  if (a2.order != 4 || a2_oracle != 4) bad.push_back("sl(3,C) gave " + std::to_string(a2.order));
  for (auto [text, order] : {std::pair<const char*, std::uint64_t>{"su(2,2) + su(2,2)", 32},
                             {"sl(3,C) + su(3,1)", 8}}) {
    const auto spec = SemisimpleSpec::parse(text);
    const auto got = outer_semisimple(spec).order;
    const auto oracle = semisimple_order_oracle(spec);
    if (got != order || oracle != order) {
      bad.push_back(std::string(text) + " gave " + std::to_string(got) + ", oracle " + std::to_string(oracle));
    }
  }
  res.seconds = since(t0);
  res.correct = bad.empty();
  res.detail = bad.empty() ? "orders 4, 32, 8 confirmed by permutation closure" : join(bad);
  return res;
}

std::vector<CriterionResult> run_all(const Options& opt) {
  using Fn = CriterionResult (*)(const Options&);
  const std::vector<Fn> fns = {su_table,         kac_condition,          marks_oracle,
                               automorphism_oracle, enumeration_bijection, homomorphism_property,
                               classification_predicates, semisimple_orders};
  std::vector<CriterionResult> out;
  for (Fn f : fns) {
    try {
      out.push_back(f(opt));
    } catch (const std::exception& e) {
      CriterionResult r;
      r.id = static_cast<int>(out.size()) + 1;
      r.title = "criterion " + std::to_string(r.id);
      r.detail = std::string("threw ") + e.what();
      out.push_back(r);
    }
  }
  return out;
}

std::string format(const CriterionResult& r) {
  char timing[64];
  if (r.limit > 0) {
    std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", r.seconds, r.limit);
  } else {
    std::snprintf(timing, sizeof timing, "%.3f s", r.seconds);
  }
  std::string line = r.pass() ? "PASS" : "FAIL";
  line += " " + std::to_string(r.id) + " " + r.title + " (" + timing + "): " + r.detail;
  if (r.correct && !r.pass()) line += " [over time limit]";
  return line;
}

}  // namespace painted::checks
