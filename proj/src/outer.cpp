#include "painted/outer.hpp"

#include <cctype>
#include <map>
#include <regex>
#include <utility>

#include "painted/error.hpp"
#include "painted/painted.hpp"

namespace painted {

namespace {

// Lift Aut onto degree n (+2 formal points swapped by the extra Z2 when z2).
PermGroup with_z2(const PermGroup& aut, bool z2) {
  const std::size_t n = aut.degree();
  if (!z2) return aut;
  std::vector<DiagramAut> gens;
  for (const auto& g : aut.generators()) {
    std::vector<std::size_t> img = g.images();
    img.push_back(n);
    img.push_back(n + 1);
    gens.emplace_back(std::move(img));
  }
  std::vector<std::size_t> swap(n + 2);
  for (std::size_t i = 0; i < n; ++i) swap[i] = i;
  swap[n] = n + 1;
  swap[n + 1] = n;
  gens.emplace_back(std::move(swap));
  return PermGroup::generated_by(n + 2, std::move(gens));
}

OuterGroupDesc from_group(PermGroup group, OuterFactors factors) {
  OuterGroupDesc d;
  d.order = group.order();
  d.label = group.label();
  d.factors = std::move(factors);
  d.group = std::move(group);
  return d;
}

std::string superscript(std::uint64_t k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(k)) out += digits[c - '0'];
  return out;
}

std::string class_label(const std::string& label, std::uint64_t k) {
  if (k == 1) return label;
  const std::string sym = "S" + std::to_string(k);
  if (label == "1") return sym;
  const bool wrap = label.find(' ') != std::string::npos;
  return (wrap ? "(" + label + ")" : label) + superscript(k) + " ⋊ " + sym;
}

std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Catalog representative, so coincident names fall into one isomorphism class.
RealFormName class_key(const RealFormName& name) {
  if (name.family == RealFamily::compact || is_catalog(name)) return name;
  return identify(construct_painted(name));
}

[[noreturn]] void bad_spec(const std::string& term, const std::string& why) {
  throw Error(ErrorKind::InvalidParameters, "'" + term + "': " + why);
}

ComplexFactor checked(const std::string& term, Family f, int rank) {
  if (!is_valid_finite(f, rank)) bad_spec(term, "no complex simple Lie algebra of type " + finite_name(f, rank));
  return {f, rank};
}

ComplexFactor parse_classical(const std::string& term, const std::string& head, int n) {
  auto same_as = [&](Family f, int rank) -> ComplexFactor {
    bad_spec(term, "same algebra as " + ComplexFactor{f, rank}.to_string());
  };
  if (head == "sl") {
    if (n < 2) bad_spec(term, "sl(n,C) needs n >= 2");
    return {Family::A, n - 1};
  }
  if (head == "sp") {
    if (n < 1) bad_spec(term, "sp(n,C) needs n >= 1");
    if (n == 1) return same_as(Family::A, 1);
    if (n == 2) return same_as(Family::B, 2);
    return {Family::C, n};
  }
  if (n % 2 == 1) {
    if (n < 3) bad_spec(term, "not simple");
    if (n == 3) return same_as(Family::A, 1);
    return {Family::B, (n - 1) / 2};
  }
  if (n <= 4) bad_spec(term, "not simple");
  if (n == 6) return same_as(Family::A, 3);
  return {Family::D, n / 2};
}

std::optional<ComplexFactor> parse_complex(const std::string& term) {
  static const std::regex classical(R"(^(sl|so|sp)\((\d+),C\)$)");
  static const std::regex exceptional(R"(^([efgEFG])(\d)\(C\)$)");
  static const std::regex explicit_type(R"(^complex\(([A-Ga-g]),(\d+)\)$)");
  std::smatch m;
  if (std::regex_match(term, m, classical)) return parse_classical(term, m[1], std::stoi(m[2]));
  if (std::regex_match(term, m, exceptional)) {
    return checked(term, *family_from_char(m[1].str()[0]), std::stoi(m[2]));
  }
  if (std::regex_match(term, m, explicit_type)) {
    return checked(term, *family_from_char(m[1].str()[0]), std::stoi(m[2]));
  }
  return std::nullopt;
}

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
  }
  for (std::size_t pos; (pos = out.find("ℂ")) != std::string::npos;) out.replace(pos, std::string("ℂ").size(), "C");
  return out;
}

}  // namespace

std::string ComplexFactor::to_string() const {
  switch (family) {
    case Family::A: return "sl(" + std::to_string(rank + 1) + ",C)";
    case Family::B: return "so(" + std::to_string(2 * rank + 1) + ",C)";
    case Family::C: return "sp(" + std::to_string(rank) + ",C)";
    case Family::D: return "so(" + std::to_string(2 * rank) + ",C)";
    default: break;
  }
  return std::string(1, static_cast<char>(std::tolower(to_char(family)))) + std::to_string(rank) + "(C)";
}

SemisimpleSpec SemisimpleSpec::parse(std::string_view text) {
  const std::string s = strip(text);
  std::vector<std::string> terms(1);
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      terms.emplace_back();
    } else {
      terms.back() += c;
    }
  }
  SemisimpleSpec spec;
  for (const auto& term : terms) {
    if (term.empty()) throw Error(ErrorKind::ParseError, "empty summand in '" + std::string(text) + "'");
    if (auto c = parse_complex(term)) {
      spec.complex_factors.push_back(*c);
    } else {
      spec.real_factors.push_back(RealFormName::parse(term));
    }
  }
  return spec;
}

std::string SemisimpleSpec::to_string() const {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : " + ") + s; };
  for (const auto& c : complex_factors) add(c.to_string());
  for (const auto& r : real_factors) add(r.to_string());
  return out;
}

ThetaClass theta_class(const RealFormName& name) {
  validate(name);
  if (name.family == RealFamily::compact) return ThetaClass::trivial;
  return affine_type(name).twist == 2 ? ThetaClass::order2 : ThetaClass::trivial;
}

OuterGroupDesc outer_simple(const RealFormName& name) {
  validate(name);
  OuterFactors f;
  if (name.family == RealFamily::compact) {
    PermGroup aut = automorphisms(build_finite(name.compact_family, name.compact_rank));
    f.real_orders = {aut.order()};
    return from_group(std::move(aut), std::move(f));
  }
  const PaintedDiagram p = construct_painted(name);
  PermGroup aut = automorphisms(p.scheme(), p.color());
  f.real_orders = {aut.order()};
  f.s = p.r() == 2 ? 1 : 0;
  return from_group(with_z2(aut, p.r() == 2), std::move(f));
}

OuterGroupDesc outer_complex_as_real(Family family, int rank) {
  const PermGroup aut = automorphisms(build_finite(family, rank));
  OuterFactors f;
  f.complex_orders = {aut.order()};
  f.m = 1;
  return from_group(with_z2(aut, true), std::move(f));
}

OuterGroupDesc outer_semisimple(const SemisimpleSpec& spec) {
  if (spec.complex_factors.empty() && spec.real_factors.empty()) {
    throw Error(ErrorKind::InvalidParameters, "empty semisimple spec");
  }
  std::map<ComplexFactor, std::uint64_t> complex_classes;
  std::map<RealFormName, std::uint64_t> real_classes;
  for (const auto& c : spec.complex_factors) {
    if (!is_valid_finite(c.family, c.rank)) {
      throw Error(ErrorKind::InvalidParameters, "no finite type " + finite_name(c.family, c.rank));
    }
    ++complex_classes[c];
  }
  for (const auto& r : spec.real_factors) ++real_classes[class_key(r)];

  if (spec.complex_factors.size() + spec.real_factors.size() == 1) {
    return spec.complex_factors.empty() ? outer_simple(spec.real_factors[0])
                                        : outer_complex_as_real(spec.complex_factors[0].family,
                                                                spec.complex_factors[0].rank);
  }

  OuterGroupDesc out;
  OuterFactors& f = out.factors;
  std::vector<std::string> parts;
  auto take = [&](const OuterGroupDesc& one, std::uint64_t k) {
    for (std::uint64_t i = 0; i < k; ++i) {
      for (auto o : one.factors.complex_orders) f.complex_orders.push_back(o);
      for (auto o : one.factors.real_orders) f.real_orders.push_back(o);
      f.m += one.factors.m;
      f.s += one.factors.s;
    }
    f.gamma *= factorial(k);
    const std::string l = class_label(one.label, k);
    if (l != "1") parts.push_back(l);
  };
  for (const auto& [c, k] : complex_classes) take(outer_complex_as_real(c.family, c.rank), k);
  for (const auto& [r, k] : real_classes) take(outer_simple(r), k);

  out.order = ipow(2, static_cast<std::uint64_t>(f.m + f.s)) * f.gamma;
  for (auto o : f.complex_orders) out.order *= o;
  for (auto o : f.real_orders) out.order *= o;

  if (parts.empty()) {
    out.label = "1";
  } else if (parts.size() == 1) {
    out.label = parts[0];
  } else {
    out.label.clear();
    for (const auto& p : parts) {
      const bool wrap = p.find("⋊") != std::string::npos;
      out.label += (out.label.empty() ? "" : " × ") + (wrap ? "(" + p + ")" : p);
    }
  }
  return out;
}

}  // namespace painted
