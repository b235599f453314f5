#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painted/scheme.hpp"

namespace painted {

/// Families of real simple Lie algebras (noncompact real forms plus compact).
/// Parameters p, q follow the family's defining formula, e.g. so(2p, 2q+1)
/// stores p and q, and sp(n, R) stores n in p.
enum class RealFamily {
  su,             // su(p,q)
  so_2_odd,       // so(2,2q+1)
  so_2_even,      // so(2,2q)
  sp_real,        // sp(n,R)
  so_star,        // so*(2n)
  so_even_odd,    // so(2p,2q+1)
  sp_pq,          // sp(p,q)
  so_even_even,   // so(2p,2q)
  so_odd_odd,     // so(2p+1,2q+1)
  sl_odd_real,    // sl(2p+1,R)
  sl_quaternion,  // sl(p,H)
  sl_even_real,   // sl(2p,R)
  e6_6,
  e6_2,
  e6_m14,
  e6_m26,
  e7_7,
  e7_m5,
  e7_m25,
  e8_8,
  e8_m24,
  f4_4,
  f4_m20,
  g2_2,
  compact,
};

/// Which class of painted diagram the family belongs to: two black mark-1
/// vertices (equal rank), one black mark-2 vertex (equal rank), or one black
/// mark-1 vertex on a twisted scheme (rank g > rank k).
enum class Trichotomy { hermitian, equal_rank_irreducible, unequal_rank, compact };

struct RealFormName {
  RealFamily family = RealFamily::compact;
  int p = 0;
  int q = 0;
  // compact only
  Family compact_family = Family::A;
  int compact_rank = 0;

  static RealFormName make(RealFamily family, int p = 0, int q = 0);
  static RealFormName make_compact(Family family, int rank);

  /// Parses "su(2,1)", "so(4,3)", "sp(3,R)", "so*(10)", "sl(3,R)", "sl(3,H)",
  /// "su*(6)", "e6(-14)", "E8(8)", "su(4)", "so(8)", "sp(3)", "e7",
  /// "compact(D,4)". Whitespace-insensitive. Symmetric parameter pairs are
  /// normalized (larger first). Throws ParseError / InvalidParameters.
  static RealFormName parse(std::string_view text);

  /// Display form with concrete numbers, e.g. "so(4,3)", "sl(3,H)", "su(2)".
  std::string to_string() const;

  auto operator<=>(const RealFormName&) const = default;
};

/// Throws InvalidParameters unless the name denotes a simple real Lie algebra
/// whose family diagram can be built (coincident low-rank names included when
/// their own scheme exists, e.g. so*(8), sl(4,R)).
void validate(const RealFormName& name);
bool is_constructible(const RealFormName& name);

/// Whether the name lies in the generic catalog range, where every painted
/// diagram has exactly one catalog name.
bool is_catalog(const RealFormName& name);

Trichotomy trichotomy(const RealFormName& name);

/// Rank of the complexification.
int complex_rank(const RealFormName& name);
/// Cartan type letter of the complexification.
Family complex_family(const RealFormName& name);

/// (family, rank, twist) of the affine scheme the painted diagram lives on.
struct AffineType {
  Family family;
  int rank;
  int twist;
  auto operator<=>(const AffineType&) const = default;
};
AffineType affine_type(const RealFormName& name);

/// Every catalog name (noncompact and compact) whose complexification has rank <= max_rank.
std::vector<RealFormName> catalog(int max_rank);
/// Catalog names with exactly this complex rank.
std::vector<RealFormName> catalog_of_rank(int rank);

struct Coincidence {
  std::string name;        // as written
  std::string equivalent;  // catalog name of the same algebra
  bool constructible;      // whether the family builds its own diagram
};
/// Known low-rank isomorphisms between family names.
const std::vector<Coincidence>& known_coincidences();

}  // namespace painted
