#include "painted/serialize.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "painted/error.hpp"

namespace painted {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::string> color_names(const std::vector<Color>& color) {
  std::vector<std::string> out;
  for (Color c : color) out.emplace_back(c == Color::black ? "black" : "white");
  return out;
}

std::vector<Color> colors_from(const Json& j, std::size_t n) {
  std::vector<Color> color(n, Color::white);
  if (j.contains("color")) {
    const auto raw = field<std::vector<std::string>>(j, "color");
    if (raw.size() != n) throw Error(ErrorKind::DiagramMismatch, "color does not match node count");
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i] != "black" && raw[i] != "white") throw Error(ErrorKind::ParseError, "colors are \"white\" or \"black\"");
      color[i] = raw[i] == "black" ? Color::black : Color::white;
    }
  } else {
    for (auto b : field<std::vector<std::size_t>>(j, "black")) {
      if (b >= n) throw Error(ErrorKind::DiagramMismatch, "black node out of range");
      color[b] = Color::black;
    }
  }
  return color;
}

std::string edge_glyph(const CartanScheme& s, std::size_t left, std::size_t right) {
  const int l = -s(left, right);
  const int r = -s(right, left);
  if (l == r) return l == 1 ? "---" : "<=>";
  const int k = l * r;
  const bool right_short = r > l;
  const std::string mid = k == 2 ? "=" : std::to_string(k);
  return right_short ? "=" + mid + ">" : "<" + mid + "=";
}

// Longest simple path; ties go to the lexicographically smallest node sequence.
std::vector<std::size_t> spine(const CartanScheme& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> best;
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    path.push_back(v);
    used[v] = true;
    if (path.size() > best.size() || (path.size() == best.size() && path < best)) best = path;
    for (std::size_t w : s.neighbours(v)) {
      if (!used[w]) dfs(w);
    }
    used[v] = false;
    path.pop_back();
  };
  for (std::size_t v = 0; v < n; ++v) dfs(v);
  return best;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

Json to_json(const CartanScheme& scheme) {
  Json j;
  j["nodes"] = scheme.nodes();
  j["cartan"] = scheme.matrix();
  j["kind"] = scheme.kind() == SchemeKind::affine ? "affine" : "finite";
  j["series"] = scheme.series();
  return j;
}

CartanScheme scheme_from_json(const Json& j) {
  const auto kind_text = field<std::string>(j, "kind");
  if (kind_text != "affine" && kind_text != "finite") throw Error(ErrorKind::ParseError, "kind must be affine or finite");
  const std::string series = j.contains("series") ? field<std::string>(j, "series") : std::string();
  return CartanScheme(field<CartanMatrix>(j, "cartan"),
                      kind_text == "affine" ? SchemeKind::affine : SchemeKind::finite, series);
}

Json to_json(const PaintedDiagram& diagram) {
  Json j = to_json(diagram.scheme());
  j["marks"] = diagram.marks().values;
  j["color"] = color_names(diagram.color());
  j["black"] = diagram.black_nodes();
  j["r"] = diagram.r();
  return j;
}

PaintedDiagram painted_from_json(const Json& j) {
  const std::string series = j.contains("series") ? field<std::string>(j, "series") : std::string();
  if (!is_affine_type(field<CartanMatrix>(j, "cartan"))) {
    throw Error(ErrorKind::NotAffine, "cartan matrix is not of affine type");
  }
  CartanScheme scheme(field<CartanMatrix>(j, "cartan"), SchemeKind::affine, series);
  Marks marks = compute_marks(scheme);
  if (j.contains("marks") && field<std::vector<int>>(j, "marks") != marks.values) {
    throw Error(ErrorKind::DiagramMismatch, "marks are not the primitive null vector of the scheme");
  }
  auto color = colors_from(j, scheme.size());
  return PaintedDiagram(std::move(scheme), std::move(marks), std::move(color), field<int>(j, "r"));
}

Json to_json(const PermGroup& group) {
  Json j;
  j["degree"] = group.degree();
  j["order"] = group.order();
  j["label"] = group.label();
  Json gens = Json::array();
  for (const auto& g : group.generators()) gens.push_back(g.images());
  j["generators"] = gens;
  return j;
}

PermGroup group_from_json(const Json& j) {
  const auto degree = field<std::size_t>(j, "degree");
  std::vector<DiagramAut> gens;
  for (auto& images : field<std::vector<std::vector<std::size_t>>>(j, "generators")) {
    std::vector<bool> seen(degree, false);
    for (auto v : images) {
      if (v >= degree || seen[v]) throw Error(ErrorKind::ParseError, "generator is not a permutation");
      seen[v] = true;
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup::generated_by(degree, std::move(gens));
}

Json to_json(const Marking& marking) {
  Json j;
  try {
    j["form"] = identify(marking.diagram()).to_string();
  } catch (const Error&) {
  }
  j["diagram"] = to_json(marking.diagram());
  j["d"] = marking.d().images();
  Json t = Json::array();
  for (const auto& a : marking.t()) t.push_back(a.to_string());
  j["t"] = t;
  return j;
}

Marking marking_from_json(const Json& j) {
  std::shared_ptr<const PaintedDiagram> diagram;
  if (j.contains("diagram")) {
    diagram = std::make_shared<const PaintedDiagram>(painted_from_json(j.at("diagram")));
  } else {
    diagram = std::make_shared<const PaintedDiagram>(
        construct_painted(RealFormName::parse(field<std::string>(j, "form"))));
  }
  const std::size_t n = diagram->size();
  auto images = field<std::vector<std::size_t>>(j, "d");
  std::vector<bool> seen(n, false);
  if (images.size() != n) throw Error(ErrorKind::DiagramMismatch, "d does not match node count");
  for (auto v : images) {
    if (v >= n || seen[v]) throw Error(ErrorKind::ParseError, "d is not a permutation");
    seen[v] = true;
  }
  std::vector<Angle> t;
  for (const auto& raw : field<Json>(j, "t")) {
    if (raw.is_string()) {
      t.push_back(Angle::parse(raw.get<std::string>()));
    } else if (raw.is_number_integer()) {
      t.emplace_back(raw.get<std::int64_t>(), 1);
    } else {
      throw Error(ErrorKind::ParseError, "angles are \"p/q\" strings");
    }
  }
  return Marking(std::move(diagram), DiagramAut(std::move(images)), std::move(t));
}

Json to_json(const OuterGroupDesc& desc) {
  Json j;
  j["order"] = desc.order;
  j["label"] = desc.label;
  j["factors"] = {{"complex_orders", desc.factors.complex_orders},
                  {"m", desc.factors.m},
                  {"real_orders", desc.factors.real_orders},
                  {"s", desc.factors.s},
                  {"gamma", desc.factors.gamma}};
  if (desc.group) j["group"] = to_json(*desc.group);
  return j;
}

OuterGroupDesc outer_from_json(const Json& j) {
  OuterGroupDesc d;
  d.order = field<std::uint64_t>(j, "order");
  d.label = field<std::string>(j, "label");
  const Json f = field<Json>(j, "factors");
  d.factors.complex_orders = field<std::vector<std::uint64_t>>(f, "complex_orders");
  d.factors.m = field<int>(f, "m");
  d.factors.real_orders = field<std::vector<std::uint64_t>>(f, "real_orders");
  d.factors.s = field<int>(f, "s");
  d.factors.gamma = field<std::uint64_t>(f, "gamma");
  if (j.contains("group")) d.group = group_from_json(j.at("group"));
  return d;
}

namespace {

std::string dot_body(const CartanScheme& s, std::span<const Color> color, const Marks* marks,
                     const std::string& title) {
  std::ostringstream out;
  out << "graph \"" << title << "\" {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << "  n" << i << " [label=\"" << i;
    if (marks) out << "\\n" << (*marks)[i];
    out << "\"";
    if (!color.empty() && color[i] == Color::black) out << ", style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const int k = s.bond(i, j);
      for (int e = 0; e < k; ++e) {
        out << "  n" << i << " -- n" << j;
        if (e == 0 && s(i, j) != s(j, i)) {
          // arrow at the short root, whose row has the larger entry
          out << (-s(j, i) > -s(i, j) ? " [dir=forward]" : " [dir=back]");
        }
        out << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const PaintedDiagram& diagram, const std::string& title) {
  return dot_body(diagram.scheme(), diagram.color(), &diagram.marks(), title);
}

std::string to_dot(const CartanScheme& scheme, const std::string& title) {
  return dot_body(scheme, {}, nullptr, title);
}

std::string render_ascii(const CartanScheme& s, std::span<const Color> color, const Marks* marks) {
  const std::size_t n = s.size();
  if (n == 0) return "(empty)\n";
  const auto path = spine(s);
  const auto glyph = [&](std::size_t v) { return !color.empty() && color[v] == Color::black ? "*" : "o"; };

  std::string nodes_line = "node  ";
  std::string diagram_line = "      ";
  std::string marks_line = "mark  ";
  for (std::size_t k = 0; k < path.size(); ++k) {
    const std::size_t v = path[k];
    const std::size_t col = diagram_line.size();
    diagram_line += glyph(v);
    nodes_line = pad(nodes_line, col) + std::to_string(v);
    if (marks) marks_line = pad(marks_line, col) + std::to_string((*marks)[v]);
    if (k + 1 < path.size()) diagram_line += edge_glyph(s, v, path[k + 1]);
  }
  std::string out = nodes_line + "\n" + diagram_line + "\n";
  if (marks) out += marks_line + "\n";

  std::vector<bool> on_spine(n, false);
  for (auto v : path) on_spine[v] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (on_spine[v]) continue;
    out += "branch " + std::string(glyph(v)) + " node " + std::to_string(v);
    if (marks) out += " (mark " + std::to_string((*marks)[v]) + ")";
    out += " on";
    for (std::size_t w : s.neighbours(v)) out += " " + std::to_string(w) + " via " + edge_glyph(s, w, v);
    out += "\n";
  }
  // Every spine edge is drawn; any other edge between spine nodes closes a cycle.
  for (std::size_t a = 0; a < path.size(); ++a) {
    for (std::size_t b = a + 2; b < path.size(); ++b) {
      if (s.bond(path[a], path[b]) != 0) {
        out += "closing edge " + std::to_string(path[b]) + " " + edge_glyph(s, path[b], path[a]) + " " +
               std::to_string(path[a]) + "\n";
      }
    }
  }
  return out;
}

std::string render_ascii(const PaintedDiagram& diagram) {
  return render_ascii(diagram.scheme(), diagram.color(), &diagram.marks());
}

}  // namespace painted
