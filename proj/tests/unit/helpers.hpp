#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "painted/error.hpp"
#include "painted/painted.hpp"

namespace test {

inline painted::RealFormName name(const char* s) { return painted::RealFormName::parse(s); }

inline painted::PaintedDiagram painted_of(const char* s) { return painted::construct_painted(name(s)); }

template <typename F>
painted::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const painted::Error& e) {
    return e.kind();
  }
  FAIL("expected a painted::Error");
  return painted::ErrorKind::ParseError;
}

// Whether some node bijection carries (a, ca) onto (b, cb), by scanning all of them.
inline bool isomorphic(const painted::CartanScheme& a, const std::vector<painted::Color>& ca,
                       const painted::CartanScheme& b, const std::vector<painted::Color>& cb) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = ca[i] == cb[phi[i]];
      for (std::size_t j = 0; j < n && ok; ++j) ok = a(i, j) == b(phi[i], phi[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

}  // namespace test
