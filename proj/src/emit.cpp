#include "cliffspec/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cliffspec {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// 256-step ramp interpolated between five anchor colors (dark violet to
// pale yellow); anchors are listed in the grid schema description.
struct Rgb {
  int r, g, b;
};

Rgb ramp_color(double t) {
  static const Rgb anchors[5] = {
      {0, 0, 4}, {87, 16, 110}, {188, 55, 84}, {249, 142, 9}, {252, 255, 164}};
  t = std::clamp(t, 0.0, 1.0);
  const int step = std::min(255, int(t * 256.0));
  const double u = step / 255.0 * 4.0;
  const int seg = std::min(3, int(u));
  const double f = u - seg;
  const Rgb a = anchors[seg], b = anchors[seg + 1];
  return {int(a.r + f * (b.r - a.r)), int(a.g + f * (b.g - a.g)),
          int(a.b + f * (b.b - a.b))};
}

std::string color_hex(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

}  // namespace

std::string svg_heatmap(const ScanGrid& grid, char field, double eps_overlay) {
  if (grid.region.dims() != 2)
    throw std::invalid_argument("svg_heatmap: 2-D grids only; slice higher dimensions first");
  const std::size_t nx = grid.region.res[0], ny = grid.region.res[1];
  const auto value_of = [&](const PseudospectrumSample& s) -> double {
    switch (field) {
      case 'c': return s.mu_c ? *s.mu_c : std::nan("");
      case 'q': return s.mu_q ? *s.mu_q : std::nan("");
      case 'w': return s.mu_w ? *s.mu_w : std::nan("");
      default: throw std::invalid_argument("svg_heatmap: field must be c, q or w");
    }
  };

  double vmax = 0.0;
  for (const auto& s : grid.values) {
    const double v = value_of(s);
    if (std::isfinite(v)) vmax = std::max(vmax, v);
  }
  if (vmax <= 0.0) vmax = 1.0;

  const double cell = 8.0, margin = 24.0;
  const double width = margin * 2 + cell * double(nx);
  const double height = margin * 2 + cell * double(ny);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt3(width) +
         "\" height=\"" + fmt3(height) + "\" viewBox=\"0 0 " + fmt3(width) + " " +
         fmt3(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      const auto& s = grid.values[i * ny + j];
      const double v = value_of(s);
      if (!std::isfinite(v)) continue;
      // low values bright: invert so the zero set stands out
      const Rgb c = ramp_color(1.0 - v / vmax);
      const double px = margin + cell * double(i);
      const double py = margin + cell * double(ny - 1 - j);
      out += "<rect x=\"" + fmt3(px) + "\" y=\"" + fmt3(py) + "\" width=\"" + fmt3(cell) +
             "\" height=\"" + fmt3(cell) + "\" fill=\"" + color_hex(c) + "\"/>\n";
    }
  if (field == 'c') {
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j) {
        const auto& s = grid.values[i * ny + j];
        if (s.mu_c && *s.mu_c <= eps_overlay) {
          const double px = margin + cell * (double(i) + 0.5);
          const double py = margin + cell * (double(ny - 1 - j) + 0.5);
          out += "<circle cx=\"" + fmt3(px) + "\" cy=\"" + fmt3(py) +
                 "\" r=\"2.2\" fill=\"none\" stroke=\"#00e5ff\" stroke-width=\"1\"/>\n";
        }
      }
  }
  out += "<text x=\"4\" y=\"14\" font-size=\"10\">mu^" + std::string(1, field) +
         " max=" + fmt3(vmax) + " eps=" + fmt3(eps_overlay) + "</text>\n";
  out += "</svg>\n";
  return out;
}

std::string svg_curve(const CurveTrace& trace) {
  const double width = 420.0, height = 420.0, margin = 40.0;
  double xmax = 1.2, zmin = -0.2, zmax = std::max(1.2, trace.b + 0.2);
  const auto X = [&](double x) { return margin + (width - 2 * margin) * x / xmax; };
  const auto Y = [&](double z) {
    return height - margin - (height - 2 * margin) * (z - zmin) / (zmax - zmin);
  };
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt3(width) +
         "\" height=\"" + fmt3(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<rect x=\"" + fmt3(margin) + "\" y=\"" + fmt3(margin) + "\" width=\"" +
         fmt3(width - 2 * margin) + "\" height=\"" + fmt3(height - 2 * margin) +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
  if (!trace.accepted.empty()) {
    std::string pts;
    for (const auto& p : trace.accepted)
      pts += fmt3(X(p.x)) + "," + fmt3(Y(p.z)) + " ";
    out += "<polyline points=\"" + pts +
           "\" fill=\"none\" stroke=\"#bc3754\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& r : trace.rejected)
    if (r.x)
      out += "<circle cx=\"" + fmt3(X(*r.x)) + "\" cy=\"" + fmt3(Y(r.z)) +
             "\" r=\"2.5\" fill=\"none\" stroke=\"#999\"/>\n";
  out += "<text x=\"6\" y=\"16\" font-size=\"11\">discrete-spectrum curve, b=" +
         fmt3(trace.b) + (trace.experimental ? " (experimental)" : "") + "</text>\n";
  out += "</svg>\n";
  return out;
}

std::string curve_to_csv(const CurveTrace& trace) {
  std::string out = "z,x,e,f,eig_small,residual\n";
  for (const auto& p : trace.accepted) {
    out += fmt17(p.z);
    out += ',';
    out += fmt17(p.x);
    out += ',';
    out += fmt17(p.e_val);
    out += ',';
    out += fmt17(p.f_val);
    out += ',';
    out += fmt17(p.eig_small);
    out += ',';
    out += fmt17(p.residual);
    out += '\n';
  }
  return out;
}

std::string curve_to_json(const CurveTrace& trace) {
  nlohmann::json j;
  j["schema"] = "cliffspec.curve/1";
  j["b"] = trace.b;
  j["experimental"] = trace.experimental;
  nlohmann::json acc = nlohmann::json::array();
  for (const auto& p : trace.accepted)
    acc.push_back({{"z", p.z},
                   {"x", p.x},
                   {"e", p.e_val},
                   {"f", p.f_val},
                   {"eig_small", p.eig_small},
                   {"residual", p.residual}});
  j["accepted"] = std::move(acc);
  nlohmann::json rej = nlohmann::json::array();
  for (const auto& r : trace.rejected) {
    nlohmann::json e = {{"z", r.z}, {"cause", r.cause}};
    if (r.x) e["x"] = *r.x;
    rej.push_back(std::move(e));
  }
  j["rejected"] = std::move(rej);
  return j.dump(2);
}

std::string grid_schema_json() {
  nlohmann::json s = {
      {"$id", "cliffspec.grid/1"},
      {"description",
       "Pseudospectrum scan grid. CSV column order: lambda0..lambda(d-1), mu_c, mu_q, mu_w; "
       "floats printed with 17 significant digits. Heatmap ramp: 256 steps interpolated "
       "between #000004, #57106e, #bc3754, #f98e09, #fcffa4."},
      {"type", "object"},
      {"required", {"schema", "region", "embedding", "epsilon", "which", "values"}},
      {"properties",
       {{"schema", {{"type", "string"}, {"enum", {"cliffspec.grid/1"}}}},
        {"region",
         {{"type", "object"},
          {"required", {"lo", "hi", "res"}},
          {"properties",
           {{"lo", {{"type", "array"}, {"items", {{"type", "number"}}}}},
            {"hi", {{"type", "array"}, {"items", {{"type", "number"}}}}},
            {"res", {{"type", "array"}, {"items", {{"type", "integer"}}}}}}}}},
        {"embedding",
         {{"type", "object"},
          {"required", {"origin", "axes"}},
          {"properties",
           {{"origin", {{"type", "array"}, {"items", {{"type", "number"}}}}},
            {"axes",
             {{"type", "array"},
              {"items", {{"type", "array"}, {"items", {{"type", "number"}}}}}}}}}}},
        {"epsilon", {{"type", "number"}}},
        {"which",
         {{"type", "object"},
          {"required", {"c", "q", "w"}},
          {"properties",
           {{"c", {{"type", "boolean"}}},
            {"q", {{"type", "boolean"}}},
            {"w", {{"type", "boolean"}}}}}}},
        {"values",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"lambda"}},
            {"properties",
             {{"lambda", {{"type", "array"}, {"items", {{"type", "number"}}}}},
              {"mu_c", {{"type", "number"}}},
              {"mu_q", {{"type", "number"}}},
              {"mu_w", {{"type", "number"}}}}}}}}}}}};
  return s.dump(2);
}

std::string curve_schema_json() {
  nlohmann::json s = {
      {"$id", "cliffspec.curve/1"},
      {"description", "Discrete-spectrum curve trace. CSV columns: z,x,e,f,eig_small,residual."},
      {"type", "object"},
      {"required", {"schema", "b", "experimental", "accepted", "rejected"}},
      {"properties",
       {{"schema", {{"type", "string"}, {"enum", {"cliffspec.curve/1"}}}},
        {"b", {{"type", "number"}}},
        {"experimental", {{"type", "boolean"}}},
        {"accepted",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"z", "x", "e", "f", "eig_small", "residual"}},
            {"properties",
             {{"z", {{"type", "number"}}},
              {"x", {{"type", "number"}}},
              {"e", {{"type", "number"}}},
              {"f", {{"type", "number"}}},
              {"eig_small", {{"type", "number"}}},
              {"residual", {{"type", "number"}}}}}}}}},
        {"rejected",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"z", "cause"}},
            {"properties",
             {{"z", {{"type", "number"}}},
              {"x", {{"type", "number"}}},
              {"cause", {{"type", "string"}}}}}}}}}}}};
  return s.dump(2);
}

std::string report_schema_json() {
  nlohmann::json s = {
      {"$id", "cliffspec.report/1"},
      {"description", "Summary of the standard example battery."},
      {"type", "object"},
      {"required", {"schema", "seed", "sections"}},
      {"properties",
       {{"schema", {{"type", "string"}, {"enum", {"cliffspec.report/1"}}}},
        {"seed", {{"type", "integer"}}},
        {"sections",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"name", "pass"}},
            {"properties",
             {{"name", {{"type", "string"}}},
              {"pass", {{"type", "boolean"}}},
              {"details", {{"type", "object"}}}}}}}}}}}};
  return s.dump(2);
}

std::string all_schemas_json() {
  nlohmann::json all = {{"grid", nlohmann::json::parse(grid_schema_json())},
                        {"curve", nlohmann::json::parse(curve_schema_json())},
                        {"report", nlohmann::json::parse(report_schema_json())}};
  return all.dump(2);
}

namespace {

std::string validate_node(const nlohmann::json& doc, const nlohmann::json& schema,
                          const std::string& path) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    bool ok = false;
    if (t == "object") ok = doc.is_object();
    else if (t == "array") ok = doc.is_array();
    else if (t == "number") ok = doc.is_number();
    else if (t == "integer") ok = doc.is_number_integer() || doc.is_number_unsigned();
    else if (t == "string") ok = doc.is_string();
    else if (t == "boolean") ok = doc.is_boolean();
    if (!ok) return path + ": expected " + t;
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema["enum"]) ok = ok || v == doc;
    if (!ok) return path + ": value not in enum";
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return path + ": missing required key '" + key.get<std::string>() + "'";
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (doc.contains(it.key())) {
          const std::string err = validate_node(doc[it.key()], it.value(), path + "/" + it.key());
          if (!err.empty()) return err;
        }
  }
  if (doc.is_array() && schema.contains("items")) {
    std::size_t k = 0;
    for (const auto& el : doc) {
      const std::string err =
          validate_node(el, schema["items"], path + "[" + std::to_string(k) + "]");
      if (!err.empty()) return err;
      ++k;
    }
  }
  return "";
}

}  // namespace

std::string validate_against_schema(const std::string& document_json,
                                    const std::string& schema_json) {
  nlohmann::json doc, schema;
  try {
    doc = nlohmann::json::parse(document_json);
  } catch (const std::exception& e) {
    return std::string("document parse error: ") + e.what();
  }
  try {
    schema = nlohmann::json::parse(schema_json);
  } catch (const std::exception& e) {
    return std::string("schema parse error: ") + e.what();
  }
  return validate_node(doc, schema, "$");
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cliffspec
