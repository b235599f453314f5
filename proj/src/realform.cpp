#include "painted/realform.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "painted/error.hpp"

namespace painted {

namespace {

struct ExceptionalEntry {
  RealFamily family;
  const char* token;  // lowercase family token
  int index;          // Cartan index in parentheses
};

constexpr ExceptionalEntry kExceptional[] = {
    {RealFamily::e6_6, "e6", 6},     {RealFamily::e6_2, "e6", 2},     {RealFamily::e6_m14, "e6", -14},
    {RealFamily::e6_m26, "e6", -26}, {RealFamily::e7_7, "e7", 7},     {RealFamily::e7_m5, "e7", -5},
    {RealFamily::e7_m25, "e7", -25}, {RealFamily::e8_8, "e8", 8},     {RealFamily::e8_m24, "e8", -24},
    {RealFamily::f4_4, "f4", 4},     {RealFamily::f4_m20, "f4", -20}, {RealFamily::g2_2, "g2", 2},
};

const ExceptionalEntry* find_exceptional(RealFamily f) {
  for (const auto& e : kExceptional) {
    if (e.family == f) return &e;
  }
  return nullptr;
}

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "cannot parse real form '" + std::string(text) + "': " + why);
}

struct Token {
  std::string head;               // e.g. "so*", "sp", "e6"
  std::vector<std::string> args;  // raw comma-separated arguments
  bool has_parens = false;
};

Token tokenize(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  // UTF-8 double-struck letters for R, H, C.
  auto replace_all = [&s](std::string_view from, std::string_view to) {
    for (std::size_t pos; (pos = s.find(from)) != std::string::npos;) s.replace(pos, from.size(), to);
  };
  replace_all("ℝ", "r");
  replace_all("ℍ", "h");
  replace_all("ℂ", "c");
  replace_all("−", "-");
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  Token t;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    t.head = s;
    return t;
  }
  if (s.back() != ')') parse_error(text, "missing closing parenthesis");
  t.has_parens = true;
  t.head = s.substr(0, open);
  const std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    t.args.push_back(inner.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return t;
}

std::optional<int> to_int(const std::string& s) {
  int v = 0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) return std::nullopt;
  return v;
}

int int_arg(std::string_view text, const Token& t, std::size_t i) {
  const auto v = to_int(t.args.at(i));
  if (!v) parse_error(text, "expected an integer, got '" + t.args[i] + "'");
  return *v;
}

RealFormName compact_from_so(int n) {
  if (n % 2 == 1) return RealFormName::make_compact(Family::B, (n - 1) / 2);
  return RealFormName::make_compact(Family::D, n / 2);
}

RealFormName classify_so(std::string_view text, int a, int b) {
  if (a < 0 || b < 0) parse_error(text, "negative signature");
  if (a == 0 || b == 0) return compact_from_so(a + b);
  const int hi = std::max(a, b);
  const int lo = std::min(a, b);
  if (a % 2 == 1 && b % 2 == 1) return RealFormName::make(RealFamily::so_odd_odd, (hi - 1) / 2, (lo - 1) / 2);
  if (a % 2 == 0 && b % 2 == 0) {
    if (lo == 2) return RealFormName::make(RealFamily::so_2_even, 0, hi / 2);
    return RealFormName::make(RealFamily::so_even_even, hi / 2, lo / 2);
  }
  const int even = a % 2 == 0 ? a : b;
  const int odd = a % 2 == 0 ? b : a;
  if (even == 2) return RealFormName::make(RealFamily::so_2_odd, 0, (odd - 1) / 2);
  return RealFormName::make(RealFamily::so_even_odd, even / 2, (odd - 1) / 2);
}

std::optional<Family> exceptional_family(const std::string& head) {
  if (head == "e6" || head == "e7" || head == "e8") return Family::E;
  if (head == "f4") return Family::F;
  if (head == "g2") return Family::G;
  return std::nullopt;
}

[[noreturn]] void invalid(const RealFormName& name, const std::string& why) {
  throw Error(ErrorKind::InvalidParameters, name.to_string() + ": " + why);
}

}  // namespace

RealFormName RealFormName::make(RealFamily family, int p, int q) {
  RealFormName n;
  n.family = family;
  n.p = p;
  n.q = q;
  const bool symmetric = family == RealFamily::su || family == RealFamily::sp_pq ||
                         family == RealFamily::so_even_even || family == RealFamily::so_odd_odd;
  if (symmetric && n.q > n.p) std::swap(n.p, n.q);
  return n;
}

RealFormName RealFormName::make_compact(Family family, int rank) {
  RealFormName n;
  n.family = RealFamily::compact;
  n.compact_family = family;
  n.compact_rank = rank;
  return n;
}

RealFormName RealFormName::parse(std::string_view text) {
  const Token t = tokenize(text);
  if (t.head.empty()) parse_error(text, "empty name");

  if (t.head == "compact") {
    if (t.args.size() != 2 || t.args[0].size() != 1) parse_error(text, "expected compact(<letter>,<rank>)");
    const auto f = family_from_char(t.args[0][0]);
    if (!f) parse_error(text, "unknown Cartan type letter");
    RealFormName n = make_compact(*f, int_arg(text, t, 1));
    validate(n);
    return n;
  }

  if (const auto ef = exceptional_family(t.head)) {
    const int rank = t.head[1] - '0';
    if (!t.has_parens) {
      RealFormName n = make_compact(*ef, rank);
      validate(n);
      return n;
    }
    if (t.args.size() != 1) parse_error(text, "expected one Cartan index");
    const int index = int_arg(text, t, 0);
    for (const auto& e : kExceptional) {
      if (t.head == e.token && e.index == index) return make(e.family);
    }
    // Compact exceptional forms in index notation, e.g. e6(-78).
    const int compact_index = t.head == "e6" ? -78 : t.head == "e7" ? -133 : t.head == "e8" ? -248
                              : t.head == "f4" ? -52 : -14;
    if (index == compact_index) return make_compact(*ef, rank);
    parse_error(text, "no real form with that index");
  }

  if (!t.has_parens) parse_error(text, "expected parenthesized parameters");

  RealFormName n;
  const std::string field = t.args.size() == 2 ? t.args[1] : std::string();
  if (t.head == "su") {
    if (t.args.size() == 1) {
      n = make_compact(Family::A, int_arg(text, t, 0) - 1);
    } else if (t.args.size() == 2) {
      n = make(RealFamily::su, int_arg(text, t, 0), int_arg(text, t, 1));
    } else {
      parse_error(text, "su takes one or two parameters");
    }
  } else if (t.head == "su*") {
    if (t.args.size() != 1) parse_error(text, "su* takes one parameter");
    const int m = int_arg(text, t, 0);
    if (m % 2 != 0) parse_error(text, "su*(n) needs n even");
    n = make(RealFamily::sl_quaternion, m / 2);
  } else if (t.head == "so") {
    if (t.args.size() == 1) {
      n = compact_from_so(int_arg(text, t, 0));
    } else if (t.args.size() == 2) {
      n = classify_so(text, int_arg(text, t, 0), int_arg(text, t, 1));
    } else {
      parse_error(text, "so takes one or two parameters");
    }
  } else if (t.head == "so*") {
    if (t.args.size() != 1) parse_error(text, "so* takes one parameter");
    const int m = int_arg(text, t, 0);
    if (m % 2 != 0) parse_error(text, "so*(n) needs n even");
    n = make(RealFamily::so_star, m / 2);
  } else if (t.head == "sp") {
    if (t.args.size() == 1) {
      n = make_compact(Family::C, int_arg(text, t, 0));
    } else if (t.args.size() == 2 && field == "r") {
      n = make(RealFamily::sp_real, int_arg(text, t, 0));
    } else if (t.args.size() == 2) {
      n = make(RealFamily::sp_pq, int_arg(text, t, 0), int_arg(text, t, 1));
    } else {
      parse_error(text, "sp takes one or two parameters");
    }
  } else if (t.head == "sl") {
    if (t.args.size() != 2) parse_error(text, "sl takes (n,R) or (n,H)");
    const int m = int_arg(text, t, 0);
    if (field == "r") {
      n = m % 2 == 1 ? make(RealFamily::sl_odd_real, (m - 1) / 2) : make(RealFamily::sl_even_real, m / 2);
    } else if (field == "h") {
      n = make(RealFamily::sl_quaternion, m);
    } else if (field == "c") {
      parse_error(text, "sl(n,C) is a complex algebra, not a real form");
    } else {
      parse_error(text, "unknown field '" + field + "'");
    }
  } else {
    parse_error(text, "unknown family '" + t.head + "'");
  }
  validate(n);
  return n;
}

std::string RealFormName::to_string() const {
  const auto s = [](int v) { return std::to_string(v); };
  switch (family) {
    case RealFamily::su: return "su(" + s(p) + "," + s(q) + ")";
    case RealFamily::so_2_odd: return "so(2," + s(2 * q + 1) + ")";
    case RealFamily::so_2_even: return "so(2," + s(2 * q) + ")";
    case RealFamily::sp_real: return "sp(" + s(p) + ",R)";
    case RealFamily::so_star: return "so*(" + s(2 * p) + ")";
    case RealFamily::so_even_odd: return "so(" + s(2 * p) + "," + s(2 * q + 1) + ")";
    case RealFamily::sp_pq: return "sp(" + s(p) + "," + s(q) + ")";
    case RealFamily::so_even_even: return "so(" + s(2 * p) + "," + s(2 * q) + ")";
    case RealFamily::so_odd_odd: return "so(" + s(2 * p + 1) + "," + s(2 * q + 1) + ")";
    case RealFamily::sl_odd_real: return "sl(" + s(2 * p + 1) + ",R)";
    case RealFamily::sl_quaternion: return "sl(" + s(p) + ",H)";
    case RealFamily::sl_even_real: return "sl(" + s(2 * p) + ",R)";
    case RealFamily::compact:
      switch (compact_family) {
        case Family::A: return "su(" + s(compact_rank + 1) + ")";
        case Family::B: return "so(" + s(2 * compact_rank + 1) + ")";
        case Family::C: return "sp(" + s(compact_rank) + ")";
        case Family::D: return "so(" + s(2 * compact_rank) + ")";
        case Family::E: return "e" + s(compact_rank);
        case Family::F: return "f4";
        case Family::G: return "g2";
      }
      break;
    default: {
      const auto* e = find_exceptional(family);
      return std::string(e->token) + "(" + s(e->index) + ")";
    }
  }
  return "?";
}

const std::vector<Coincidence>& known_coincidences() {
  static const std::vector<Coincidence> table{
      {"sl(2,R)", "su(1,1)", false},  {"sp(1,R)", "su(1,1)", false}, {"so(2,1)", "su(1,1)", false},
      {"sp(2,R)", "so(2,3)", false},  {"sp(1,1)", "so(4,1)", false}, {"so(2,4)", "su(2,2)", false},
      {"so*(6)", "su(3,1)", false},   {"sl(4,R)", "so(3,3)", true},  {"sl(2,H)", "so(5,1)", true},
      {"so*(8)", "so(2,6)", true},    {"sp(1)", "su(2)", false},     {"so(3)", "su(2)", false},
      {"sp(2)", "so(5)", false},      {"so(6)", "su(4)", false},
  };
  return table;
}

bool is_constructible(const RealFormName& n) {
  switch (n.family) {
    case RealFamily::su: return n.q >= 1;
    case RealFamily::so_2_odd: return n.q >= 1;
    case RealFamily::so_2_even: return n.q >= 3;
    case RealFamily::sp_real: return n.p >= 3;
    case RealFamily::so_star: return n.p >= 4;
    case RealFamily::so_even_odd: return n.p >= 2 && n.q >= 0;
    case RealFamily::sp_pq: return n.q >= 1 && n.p + n.q >= 3;
    case RealFamily::so_even_even: return n.q >= 2;
    case RealFamily::so_odd_odd: return n.q >= 0 && n.p + n.q >= 2;
    case RealFamily::sl_odd_real: return n.p >= 1;
    case RealFamily::sl_quaternion: return n.p >= 2;
    case RealFamily::sl_even_real: return n.p >= 2;
    case RealFamily::compact: return is_valid_finite(n.compact_family, n.compact_rank);
    default: return true;
  }
}

void validate(const RealFormName& n) {
  if (is_constructible(n)) return;
  const std::string text = n.to_string();
  for (const auto& c : known_coincidences()) {
    if (c.name == text) invalid(n, "isomorphic to " + c.equivalent + "; use the catalog name");
  }
  switch (n.family) {
    case RealFamily::su: invalid(n, "needs p >= 1 and q >= 1");
    case RealFamily::so_2_even: invalid(n, "so(2,2q) is simple and generic only for q >= 3");
    case RealFamily::so_odd_odd: invalid(n, "so(2p+1,2q+1) needs p+q >= 2");
    case RealFamily::sl_quaternion: invalid(n, "sl(p,H) needs p >= 2");
    case RealFamily::compact: invalid(n, "no compact form of type " + finite_name(n.compact_family, n.compact_rank));
    default: invalid(n, "parameters out of range");
  }
}

bool is_catalog(const RealFormName& n) {
  if (!is_constructible(n)) return false;
  switch (n.family) {
    case RealFamily::so_star: return n.p >= 5;
    case RealFamily::sl_quaternion: return n.p >= 3;
    case RealFamily::sl_even_real: return n.p >= 3;
    default: return true;
  }
}

Trichotomy trichotomy(const RealFormName& n) {
  switch (n.family) {
    case RealFamily::su:
    case RealFamily::so_2_odd:
    case RealFamily::so_2_even:
    case RealFamily::sp_real:
    case RealFamily::so_star:
    case RealFamily::e6_m14:
    case RealFamily::e7_m25:
      return Trichotomy::hermitian;
    case RealFamily::so_odd_odd:
    case RealFamily::sl_odd_real:
    case RealFamily::sl_quaternion:
    case RealFamily::sl_even_real:
    case RealFamily::e6_6:
    case RealFamily::e6_m26:
      return Trichotomy::unequal_rank;
    case RealFamily::compact:
      return Trichotomy::compact;
    default:
      return Trichotomy::equal_rank_irreducible;
  }
}

AffineType affine_type(const RealFormName& n) {
  switch (n.family) {
    case RealFamily::su: return {Family::A, n.p + n.q - 1, 1};
    case RealFamily::so_2_odd: return {Family::B, n.q + 1, 1};
    case RealFamily::so_2_even: return {Family::D, n.q + 1, 1};
    case RealFamily::sp_real: return {Family::C, n.p, 1};
    case RealFamily::so_star: return {Family::D, n.p, 1};
    case RealFamily::so_even_odd: return {Family::B, n.p + n.q, 1};
    case RealFamily::sp_pq: return {Family::C, n.p + n.q, 1};
    case RealFamily::so_even_even: return {Family::D, n.p + n.q, 1};
    case RealFamily::so_odd_odd: return {Family::D, n.p + n.q + 1, 2};
    case RealFamily::sl_odd_real: return {Family::A, 2 * n.p, 2};
    case RealFamily::sl_quaternion:
    case RealFamily::sl_even_real: return {Family::A, 2 * n.p - 1, 2};
    case RealFamily::e6_6:
    case RealFamily::e6_m26: return {Family::E, 6, 2};
    case RealFamily::e6_2:
    case RealFamily::e6_m14: return {Family::E, 6, 1};
    case RealFamily::e7_7:
    case RealFamily::e7_m5:
    case RealFamily::e7_m25: return {Family::E, 7, 1};
    case RealFamily::e8_8:
    case RealFamily::e8_m24: return {Family::E, 8, 1};
    case RealFamily::f4_4:
    case RealFamily::f4_m20: return {Family::F, 4, 1};
    case RealFamily::g2_2: return {Family::G, 2, 1};
    case RealFamily::compact: break;
  }
  throw Error(ErrorKind::InvalidParameters, n.to_string() + " is compact and has no painted diagram");
}

int complex_rank(const RealFormName& n) {
  if (n.family == RealFamily::compact) return n.compact_rank;
  return affine_type(n).rank;
}

Family complex_family(const RealFormName& n) {
  if (n.family == RealFamily::compact) return n.compact_family;
  return affine_type(n).family;
}

std::vector<RealFormName> catalog_of_rank(int rank) {
  std::vector<RealFormName> out;
  auto add = [&out](RealFormName n) {
    if (is_catalog(n)) out.push_back(n);
  };
  using RF = RealFamily;
  if (rank < 1) return out;
  // A_rank
  for (int q = 1; 2 * q <= rank + 1; ++q) add(RealFormName::make(RF::su, rank + 1 - q, q));
  if (rank % 2 == 0) add(RealFormName::make(RF::sl_odd_real, rank / 2));
  if (rank % 2 == 1) {
    add(RealFormName::make(RF::sl_even_real, (rank + 1) / 2));
    add(RealFormName::make(RF::sl_quaternion, (rank + 1) / 2));
  }
  add(RealFormName::make_compact(Family::A, rank));
  // B_rank
  if (rank >= 2) {
    add(RealFormName::make(RF::so_2_odd, 0, rank - 1));
    for (int p = 2; p <= rank; ++p) add(RealFormName::make(RF::so_even_odd, p, rank - p));
    add(RealFormName::make_compact(Family::B, rank));
  }
  // C_rank
  if (rank >= 3) {
    add(RealFormName::make(RF::sp_real, rank));
    for (int q = 1; 2 * q <= rank; ++q) add(RealFormName::make(RF::sp_pq, rank - q, q));
    add(RealFormName::make_compact(Family::C, rank));
  }
  // D_rank, including the twisted so(odd,odd) forms
  if (rank >= 3) {
    add(RealFormName::make(RF::so_2_even, 0, rank - 1));
    add(RealFormName::make(RF::so_star, rank));
    for (int q = 2; 2 * q <= rank; ++q) add(RealFormName::make(RF::so_even_even, rank - q, q));
    for (int q = 0; 2 * q <= rank - 1; ++q) add(RealFormName::make(RF::so_odd_odd, rank - 1 - q, q));
    add(RealFormName::make_compact(Family::D, rank));
  }
  for (const auto& e : kExceptional) {
    const int r = e.token[1] - '0';
    if (r == rank) add(RealFormName::make(e.family));
  }
  if (rank == 6 || rank == 7 || rank == 8) add(RealFormName::make_compact(Family::E, rank));
  if (rank == 4) add(RealFormName::make_compact(Family::F, 4));
  if (rank == 2) add(RealFormName::make_compact(Family::G, 2));
  return out;
}

std::vector<RealFormName> catalog(int max_rank) {
  std::vector<RealFormName> out;
  for (int r = 1; r <= max_rank; ++r) {
    auto part = catalog_of_rank(r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace painted
