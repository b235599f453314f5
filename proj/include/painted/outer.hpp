#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painted/autgroup.hpp"
#include "painted/realform.hpp"
#include "painted/scheme.hpp"

namespace painted {

/// A complex simple Lie algebra regarded as a real one.
struct ComplexFactor {
  Family family = Family::A;
  int rank = 1;

  /// "sl(3,C)", "so(9,C)", "sp(3,C)", "so(8,C)", "e6(C)", ...
  std::string to_string() const;
  auto operator<=>(const ComplexFactor&) const = default;
};

/// g = c_1 + ... + c_m + g_1 + ... + g_n.
struct SemisimpleSpec {
  std::vector<ComplexFactor> complex_factors;
  std::vector<RealFormName> real_factors;

  /// "sl(3,C) + su(2,1) + su(2,1)". Complex summands: sl(n,C), so(n,C),
  /// sp(n,C), e6(C) .. g2(C), complex(X,n); anything else is a real form name.
  static SemisimpleSpec parse(std::string_view text);
  std::string to_string() const;
};

struct OuterFactors {
  std::vector<std::uint64_t> complex_orders;  // |Aut(D_i)|
  int m = 0;
  std::vector<std::uint64_t> real_orders;  // |Aut(P_j)|, |Aut(D_j)| for compact g_j
  int s = 0;                               // real factors with theta of order 2
  std::uint64_t gamma = 1;                 // permutations of isomorphic summands

  bool operator==(const OuterFactors&) const = default;
};

struct OuterGroupDesc {
  std::uint64_t order = 1;
  std::string label = "1";
  OuterFactors factors;
  /// Concrete permutation group, filled for single summands: the diagram
  /// nodes plus two formal points swapped by the extra Z2 when there is one.
  std::optional<PermGroup> group;
};

enum class ThetaClass { trivial, order2 };

OuterGroupDesc outer_simple(const RealFormName& name);
ThetaClass theta_class(const RealFormName& name);
/// Throws InvalidType for a nonexistent finite type.
OuterGroupDesc outer_complex_as_real(Family family, int rank);
OuterGroupDesc outer_semisimple(const SemisimpleSpec& spec);

}  // namespace painted
