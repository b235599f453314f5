#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "checks/checks.hpp"
#include "painted/error.hpp"
#include "painted/outer.hpp"
#include "painted/serialize.hpp"

using namespace painted;

namespace {

struct Args {
  std::string format = "text";
  std::uint64_t seed = checks::Options{}.seed;
  int max_rank = checks::Options{}.max_rank;
  std::string name;
  std::string family;
  int rank = 0;
  int r = 1;
  std::vector<std::string> spec;
  std::string file;
};

std::string perm_string(const DiagramAut& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.degree(); ++i) out += (i ? "," : "") + std::to_string(d(i));
  return out + "]";
}

std::string nodes_string(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string list_string(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

void print_group(std::ostream& os, const std::string& title, const PermGroup& g) {
  os << title << ": " << g.label() << ", order " << g.order() << "\n";
  if (!g.generators().empty()) {
    os << "  generators:";
    for (const auto& x : g.generators()) os << " " << perm_string(x);
    os << "\n";
  }
}

int cmd_info(const Args& a) {
  const RealFormName name = RealFormName::parse(a.name);
  const OuterGroupDesc out = outer_simple(name);
  const RealFormDiagram diagram = construct(name);
  if (const auto* c = std::get_if<CompactDiagram>(&diagram)) {
    const PermGroup aut = automorphisms(c->scheme);
    if (a.format == "json") {
      Json j;
      j["name"] = name.to_string();
      j["compact"] = true;
      j["diagram"] = to_json(c->scheme);
      j["aut"] = to_json(aut);
      j["out"] = to_json(out);
      std::cout << j.dump(2) << "\n";
    } else if (a.format == "dot") {
      std::cout << to_dot(c->scheme, name.to_string());
    } else {
      std::cout << name.to_string() << " (compact)\n";
      std::cout << "scheme: " << c->scheme.series() << " (finite), all white\n";
      std::cout << render_ascii(c->scheme);
      print_group(std::cout, "Aut(D)", aut);
      std::cout << "Out: " << out.label << ", order " << out.order << "\n";
    }
    return 0;
  }
  const auto& p = std::get<PaintedDiagram>(diagram);
  const PermGroup aut = automorphisms(p.scheme(), p.color());
  if (a.format == "json") {
    Json j;
    j["name"] = name.to_string();
    j["compact"] = false;
    j["diagram"] = to_json(p);
    j["aut"] = to_json(aut);
    j["r"] = p.r();
    j["out"] = to_json(out);
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "dot") {
    std::cout << to_dot(p, name.to_string());
  } else {
    std::cout << name.to_string() << "\n";
    std::cout << "scheme: " << p.scheme().series() << " (affine), r = " << p.r() << "\n";
    std::cout << render_ascii(p);
    print_group(std::cout, "Aut(P)", aut);
    std::cout << "Out: " << out.label << ", order " << out.order << "\n";
  }
  return 0;
}

int cmd_enumerate(const Args& a) {
  const auto f = a.family.size() == 1 ? family_from_char(a.family[0]) : std::nullopt;
  if (!f) throw Error(ErrorKind::InvalidType, "unknown family '" + a.family + "'");
  const CartanScheme scheme = build_affine(*f, a.rank, a.r);
  const auto paintings = enumerate_paintings(scheme, a.r);
  const auto name_of = [](const PaintedDiagram& p) -> std::string {
    try {
      return identify(p).to_string();
    } catch (const Error&) {
      return "unrecognized";
    }
  };
  if (a.format == "json") {
    Json j;
    j["scheme"] = to_json(scheme);
    j["r"] = a.r;
    Json classes = Json::array();
    for (const auto& p : paintings) {
      classes.push_back({{"black", p.black_nodes()}, {"name", name_of(p)}, {"diagram", to_json(p)}});
    }
    j["classes"] = classes;
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "dot") {
    for (const auto& p : paintings) std::cout << to_dot(p, name_of(p));
  } else {
    std::cout << scheme.series() << ", r = " << a.r << ": " << paintings.size()
              << (paintings.size() == 1 ? " class" : " classes") << "\n";
    for (const auto& p : paintings) {
      std::cout << "  black " << nodes_string(p.black_nodes()) << "  " << name_of(p) << "\n";
    }
  }
  return 0;
}

int cmd_out(const Args& a) {
  std::string text;
  for (const auto& s : a.spec) text += (text.empty() ? "" : " ") + s;
  const SemisimpleSpec spec = SemisimpleSpec::parse(text);
  const OuterGroupDesc out = outer_semisimple(spec);
  if (a.format == "json") {
    Json j;
    j["spec"] = spec.to_string();
    for (auto& [k, v] : to_json(out).items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const auto& f = out.factors;
  std::cout << spec.to_string() << "\n";
  std::cout << "Out: " << out.label << ", order " << out.order << "\n";
  std::cout << "  |Aut(D_i)| = " << list_string(f.complex_orders) << ", m = " << f.m
            << ", |Aut(P_j)| = " << list_string(f.real_orders) << ", s = " << f.s << ", |Gamma| = " << f.gamma
            << "\n";
  return 0;
}

int cmd_classify(const Args& a) {
  std::string text;
  if (a.file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(a.file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + a.file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  const Marking m = marking_from_json(j);
  const Classification c = classify_inner(m);
  const bool inner = c.kind == InnerOuter::inner;
  if (a.format == "json") {
    Json out;
    out["classification"] = inner ? "inner" : "outer";
    out["outer_class"] = {{"d", c.outer_class.d.images()}, {"s", c.outer_class.sign}};
    out["invariant"] = invariant(m).to_string();
    out["order"] = marking_order(m);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (inner ? "Inner" : "Outer") << "\n";
    std::cout << "outer class: d = " << perm_string(c.outer_class.d) << ", s = " << (c.outer_class.sign > 0 ? "+1" : "-1")
              << "\n";
    std::cout << "invariant: " << invariant(m).to_string() << "\n";
    std::cout << "order: " << marking_order(m) << "\n";
  }
  return 0;
}

int cmd_verify(const Args& a) {
  checks::Options opt;
  opt.seed = a.seed;
  opt.max_rank = a.max_rank;
  const auto results = checks::run_all(opt);
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all = all && r.pass();
    if (a.format == "json") {
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"pass", r.pass()},
                     {"seconds", r.seconds},
                     {"limit", r.limit},
                     {"detail", r.detail}});
    } else {
      std::cout << checks::format(r) << "\n";
    }
  }
  if (a.format == "json") std::cout << arr.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_export(const Args& a) {
  const RealFormName name = RealFormName::parse(a.name);
  const RealFormDiagram diagram = construct(name);
  const auto* c = std::get_if<CompactDiagram>(&diagram);
  const auto* p = std::get_if<PaintedDiagram>(&diagram);
  if (a.format == "json") {
    std::cout << (c ? to_json(c->scheme) : to_json(*p)).dump(2) << "\n";
  } else if (a.format == "dot") {
    std::cout << (c ? to_dot(c->scheme, name.to_string()) : to_dot(*p, name.to_string()));
  } else {
    std::cout << (c ? render_ascii(c->scheme) : render_ascii(*p));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outer automorphism groups of real semisimple Lie algebras via painted diagrams", "painted"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", a.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--max-rank", a.max_rank, "Largest rank swept by verify")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  app.fallthrough();

  auto* info = app.add_subcommand("info", "Painted diagram, Aut(P), r and Out of a real form");
  info->add_option("name", a.name, "Real form, e.g. su(2,2), e6(-14), compact(D,4)")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Painting classes of an affine scheme");
  enumerate->add_option("family", a.family, "Cartan letter A-G")->required();
  enumerate->add_option("rank", a.rank, "Finite rank")->required();
  enumerate->add_option("r", a.r, "Twist order 1 or 2")->required();
  auto* out = app.add_subcommand("out", "Out of a semisimple algebra");
  out->add_option("spec", a.spec, "e.g. \"sl(3,C) + su(2,1) + su(2,1)\"")->required();
  auto* classify = app.add_subcommand("classify", "Inner/outer decision for a marking JSON file");
  classify->add_option("file", a.file, "Marking JSON, or - for stdin")->required();
  auto* verify = app.add_subcommand("verify", "Run the acceptance suites");
  auto* exp = app.add_subcommand("export", "Emit the diagram of a real form");
  exp->add_option("name", a.name, "Real form")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(a);
    if (enumerate->parsed()) return cmd_enumerate(a);
    if (out->parsed()) return cmd_out(a);
    if (classify->parsed()) return cmd_classify(a);
    if (verify->parsed()) return cmd_verify(a);
    if (exp->parsed()) return cmd_export(a);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.kind() == ErrorKind::ParseError) {
      std::cerr << app.help();
      return 2;
    }
    return 1;
  }
  return 2;
}
