#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "painted/autgroup.hpp"

using namespace painted;

namespace {

PermGroup group(std::size_t degree, std::vector<std::vector<std::size_t>> gens) {
  std::vector<DiagramAut> g;
  for (auto& x : gens) g.emplace_back(std::move(x));
  return PermGroup::generated_by(degree, std::move(g));
}

// Left-regular representation of the quaternion group on {±1, ±i, ±j, ±k}.
PermGroup quaternion() {
  // index = 2 * unit + sign, units 1, i, j, k
  const int table[4][4] = {{0, 1, 2, 3}, {1, -0, 3, -2}, {2, -3, -0, 1}, {3, 2, -1, -0}};
  const bool neg[4][4] = {{false, false, false, false},
                          {false, true, false, true},
                          {false, true, true, false},
                          {false, false, true, true}};
  auto left = [&](int u) {
    std::vector<std::size_t> img(8);
    for (int v = 0; v < 4; ++v) {
      for (int s = 0; s < 2; ++s) {
        const int w = std::abs(table[u][v]);
        const int sign = s ^ static_cast<int>(neg[u][v]);
        img[2 * v + s] = 2 * w + sign;
      }
    }
    return img;
  };
  return group(8, {left(1), left(2)});
}

}  // namespace

TEST_SUITE("autgroup") {
  TEST_CASE("DiagramAut algebra") {
    const DiagramAut f({1, 2, 0});
    const DiagramAut g({1, 0, 2});
    CHECK((f * g)(0) == f(g(0)));
    CHECK((f * f.inverse()).is_identity());
    CHECK(f.order() == 3);
    CHECK(g.order() == 2);
    CHECK(DiagramAut::identity(4).is_identity());
    CHECK(DiagramAut({1, 0, 3, 4, 2}).order() == 6);
  }

  TEST_CASE("orbits") {
    for (const auto& o : orbits(DiagramAut::identity(4))) CHECK(o.size() == 1);

    const auto p = test::painted_of("su(2,2)");
    const auto aut = automorphisms(p.scheme(), p.color());
    bool swaps_blacks = false;
    for (const auto& d : aut.elements()) {
      for (const auto& o : orbits(d)) {
        if (o.size() == 2 && p.color()[o[0]] == Color::black && p.color()[o[1]] == Color::black) swaps_blacks = true;
      }
    }
    CHECK(swaps_blacks);

    const auto d4 = test::painted_of("so(4,4)");
    bool four_cycle = false;
    const auto aut4 = automorphisms(d4.scheme(), d4.color());
    for (const auto& d : aut4.elements()) {
      const auto os = orbits(d);
      if (os.size() == 2 && (os[0].size() == 4 || os[1].size() == 4)) four_cycle = true;
    }
    CHECK(four_cycle);
  }

  TEST_CASE("spec groups") {
    CHECK(automorphisms(build_finite(Family::A, 1)).order() == 1);
    const auto d4 = brute_force_automorphisms(build_finite(Family::D, 4));
    CHECK(d4.order() == 6);
    CHECK(identify_group(d4) == "S3");
    CHECK(brute_force_automorphisms(build_affine(Family::D, 4, 1)).order() == 24);
    CHECK(automorphisms(build_affine(Family::G, 2, 1)).order() == 1);
    CHECK(brute_force_automorphisms(build_finite(Family::F, 4)).order() == 1);

    for (const char* s : {"su(2,1)", "su(3,1)", "su(5,2)", "su(4,3)"}) {
      const auto p = test::painted_of(s);
      CAPTURE(s);
      CHECK(automorphisms(p.scheme(), p.color()).order() == 2);
    }
    for (const char* s : {"su(2,2)", "su(3,3)", "su(4,4)"}) {
      const auto p = test::painted_of(s);
      const auto g = automorphisms(p.scheme(), p.color());
      CAPTURE(s);
      CHECK(g.order() == 4);
      CHECK(identify_group(g) == "Z2 × Z2");
    }
  }

  TEST_CASE("factorial scan limit") {
    CHECK(brute_force_automorphisms(build_finite(Family::A, 9)).order() == 2);
    CHECK(test::error_kind([] { brute_force_automorphisms(build_affine(Family::A, 9, 1)); }) == ErrorKind::TooLarge);
    CHECK(brute_force_automorphisms(build_affine(Family::E, 8, 1)).order() == 1);
  }

  TEST_CASE("parallel and serial scans agree") {
    for (auto [f, n, r] : std::vector<std::tuple<Family, int, int>>{
             {Family::A, 5, 1}, {Family::D, 4, 1}, {Family::D, 6, 1}, {Family::E, 6, 1}, {Family::B, 4, 1}}) {
      const auto s = build_affine(f, n, r);
      CAPTURE(s.series());
      CHECK(brute_force_automorphisms(s).elements() == brute_force_automorphisms_serial(s).elements());
    }
  }

  TEST_CASE("group identification against explicitly built groups") {
    CHECK(identify_group(group(3, {})) == "1");
    CHECK(identify_group(group(2, {{1, 0}})) == "Z2");
    CHECK(identify_group(group(4, {{1, 2, 3, 0}})) == "Z4");
    CHECK(identify_group(group(4, {{1, 0, 2, 3}, {0, 1, 3, 2}})) == "Z2 × Z2");
    CHECK(identify_group(group(5, {{1, 0, 2, 3, 4}, {0, 1, 3, 4, 2}})) == "Z6");
    CHECK(identify_group(group(6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 4, 5, 2}})) == "Z2 × Z4");
    CHECK(identify_group(group(3, {{1, 2, 0}, {1, 0, 2}})) == "S3");
    CHECK(identify_group(group(4, {{1, 2, 3, 0}, {3, 2, 1, 0}})) == "Dih4");
    CHECK(identify_group(group(5, {{1, 2, 3, 4, 0}, {4, 3, 2, 1, 0}})) == "Dih5");
    CHECK(identify_group(quaternion()) == "Q8");
    CHECK(identify_group(group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}})) == "A4");
    CHECK(identify_group(group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}})) == "S4");
    CHECK(identify_group(group(5, {{1, 2, 0, 3, 4}, {1, 0, 2, 3, 4}, {0, 1, 2, 4, 3}})) == "S3 × Z2");
    CHECK(identify_group(group(6, {{1, 2, 3, 0, 4, 5}, {3, 2, 1, 0, 4, 5}, {0, 1, 2, 3, 5, 4}})) == "Dih4 × Z2");
    CHECK(identify_group(group(6, {{1, 2, 3, 0, 4, 5}, {1, 0, 2, 3, 4, 5}, {0, 1, 2, 3, 5, 4}})) == "S4 × Z2");
    CHECK(quaternion().order() == 8);
  }

  TEST_CASE("unrecognized groups get a descriptor") {
    const auto s5 = group(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
    CHECK(s5.order() == 120);
    const auto label = identify_group(s5);
    CHECK(label.find("order 120") != std::string::npos);
    CHECK(label.find("nonabelian") != std::string::npos);
  }

  TEST_CASE("catalog-wide group properties") {
    for (const auto& n : catalog(8)) {
      if (n.family == RealFamily::compact) continue;
      const auto p = construct_painted(n);
      const auto colored = automorphisms(p.scheme(), p.color());
      const auto plain = automorphisms(p.scheme());
      CAPTURE(n.to_string());
      CHECK(plain.order() % colored.order() == 0);
      for (const auto& d : colored.elements()) {
        CHECK(plain.contains(d));
        for (std::size_t i = 0; i < p.size(); ++i) {
          CHECK(p.marks()[d(i)] == p.marks()[i]);
          CHECK(p.color()[d(i)] == p.color()[i]);
        }
        for (const auto& o : orbits(d)) CHECK((o.size() >= 1 && o.size() <= 4));
      }
      for (const auto& x : colored.elements()) {
        CHECK(colored.contains(x.inverse()));
        for (const auto& y : colored.generators()) CHECK(colored.contains(x * y));
      }
    }
  }

  TEST_CASE("from_elements rejects non-closed sets") {
    CHECK_THROWS_AS(PermGroup::from_elements(3, {DiagramAut::identity(3), DiagramAut({1, 2, 0})}), Error);
  }
}
