#include "latinv/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "latinv/error.hpp"
#include "latinv/reduction.hpp"

namespace latinv {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kCellKeys = {"a", "b", "c", "alpha", "beta", "gamma"};
const std::vector<std::string> kBasisKeys = {"b11", "b12", "b13", "b21", "b22",
                                             "b23", "b31", "b32", "b33"};
const std::vector<std::string> kRootKeys = {"r23", "r13", "r12", "r01", "r02", "r03"};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string where(int line, const std::string& id, bool json_input) {
  std::string s = json_input ? "element " + std::to_string(line) : "line " + std::to_string(line);
  if (!id.empty()) s += " (record '" + id + "')";
  return s;
}

// One row of input as key -> text, regardless of the source format.
struct Row {
  int line = 0;
  std::map<std::string, std::string> fields;
};

struct Table {
  bool json_input = false;
  std::set<std::string> keys;
  std::vector<Row> rows;
};

Table read_csv(std::istream& in) {
  Table t;
  std::vector<std::string> header;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (s.back() == ',') cells.emplace_back();
    if (header.empty()) {
      header = cells;
      for (const auto& h : header) {
        if (!t.keys.insert(h).second)
          throw ParseError("line " + std::to_string(line) + ": duplicate column '" + h + "'");
      }
      continue;
    }
    if (cells.size() != header.size())
      throw ParseError("line " + std::to_string(line) + ": expected " +
                       std::to_string(header.size()) + " fields, found " +
                       std::to_string(cells.size()));
    Row r{line, {}};
    for (std::size_t c = 0; c < header.size(); ++c) r.fields[header[c]] = cells[c];
    t.rows.push_back(std::move(r));
  }
  if (header.empty()) throw ParseError("input has no header line");
  return t;
}

Table read_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("records")) doc = doc["records"];
  if (!doc.is_array()) throw ParseError("JSON input must be an array of records");
  Table t;
  t.json_input = true;
  int n = 0;
  for (const auto& el : doc) {
    ++n;
    if (!el.is_object()) throw ParseError("element " + std::to_string(n) + ": not an object");
    Row r{n, {}};
    for (const auto& [k, v] : el.items()) {
      t.keys.insert(k);
      if (v.is_string())
        r.fields[k] = v.get<std::string>();
      else if (v.is_boolean())
        r.fields[k] = v.get<bool>() ? "true" : "false";
      else if (v.is_number_integer())
        r.fields[k] = std::to_string(v.get<long long>());
      else if (v.is_number())
        r.fields[k] = v.dump();
      else
        throw ParseError("element " + std::to_string(n) + ": field '" + k +
                         "' must be a number, string or boolean");
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table read_table(std::istream& in, InputFormat fmt) {
  if (fmt == InputFormat::detect) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto first = all.find_first_not_of(" \t\r\n");
    bool looks_json = first != std::string::npos && (all[first] == '[' || all[first] == '{');
    std::istringstream ss(all);
    return looks_json ? read_json(ss) : read_csv(ss);
  }
  return fmt == InputFormat::json ? read_json(in) : read_csv(in);
}

bool has_all(const Table& t, const std::vector<std::string>& keys) {
  return std::all_of(keys.begin(), keys.end(), [&](const auto& k) { return t.keys.count(k); });
}

double number_field(const Row& r, const std::string& key, const std::string& id, bool js) {
  auto it = r.fields.find(key);
  if (it == r.fields.end() || it->second.empty())
    throw ParseError(where(r.line, id, js) + ": missing value for '" + key + "'");
  const std::string& s = it->second;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ParseError(where(r.line, id, js) + ": '" + key + "' is not a finite number: '" + s + "'");
  return v;
}

std::string id_field(const Row& r, bool js, std::set<std::string>& seen) {
  auto it = r.fields.find("id");
  if (it == r.fields.end() || it->second.empty())
    throw ParseError(where(r.line, "", js) + ": missing id");
  if (!seen.insert(it->second).second)
    throw ParseError(where(r.line, it->second, js) + ": duplicate id");
  return it->second;
}

bool parse_bool(const Row& r, const std::string& key, const std::string& id, bool js) {
  auto it = r.fields.find(key);
  if (it == r.fields.end() || it->second.empty()) return false;
  std::string v = it->second;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ParseError(where(r.line, id, js) + ": '" + key + "' must be true or false");
}

}  // namespace

Basis LatticeRecord::basis() const {
  if (const auto* cell = std::get_if<UnitCell>(&source)) return unit_cell_to_basis(*cell);
  return std::get<Basis>(source);
}

std::vector<LatticeRecord> parse_records(std::istream& in, InputFormat fmt) {
  Table t = read_table(in, fmt);
  const bool js = t.json_input;
  const bool cell = has_all(t, kCellKeys);
  const bool basis = has_all(t, kBasisKeys);
  if (!t.keys.count("id") || cell == basis)
    throw ParseError(
        "input must have an id and either the cell columns a,b,c,alpha,beta,gamma or the basis "
        "columns b11..b33");

  std::vector<LatticeRecord> out;
  std::set<std::string> seen;
  for (const Row& r : t.rows) {
    std::string id = id_field(r, js, seen);
    if (cell) {
      std::array<double, 6> v;
      for (int k = 0; k < 6; ++k) v[k] = number_field(r, kCellKeys[k], id, js);
      UnitCell uc = UnitCell::from_degrees(v[0], v[1], v[2], v[3], v[4], v[5]);
      try {
        uc.validate();
      } catch (const InvalidCellError& e) {
        throw InvalidCellError(where(r.line, id, js) + ": " + e.what());
      }
      out.push_back({id, uc, r.line});
    } else {
      std::array<double, 9> v;
      for (int k = 0; k < 9; ++k) v[k] = number_field(r, kBasisKeys[k], id, js);
      try {
        Basis b({v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]});
        out.push_back({id, b, r.line});
      } catch (const DegenerateError& e) {
        throw DegenerateError(where(r.line, id, js) + ": " + e.what());
      }
    }
  }
  return out;
}

std::vector<RootFormRecord> parse_root_forms(std::istream& in, InputFormat fmt) {
  Table t = read_table(in, fmt);
  const bool js = t.json_input;
  if (!t.keys.count("id") || !has_all(t, kRootKeys))
    throw ParseError("root-form input needs the columns id,r23,r13,r12,r01,r02,r03");
  std::vector<RootFormRecord> out;
  std::set<std::string> seen;
  for (const Row& r : t.rows) {
    RootFormRecord rec;
    rec.id = id_field(r, js, seen);
    rec.line = r.line;
    for (int k = 0; k < 6; ++k) {
      rec.rf.r[k] = number_field(r, kRootKeys[k], rec.id, js);
      if (rec.rf.r[k] < 0)
        throw ParseError(where(r.line, rec.id, js) + ": root products must be non-negative");
    }
    rec.rf.oriented = parse_bool(r, "oriented", rec.id, js);
    if (auto it = r.fields.find("sign"); it != r.fields.end() && !it->second.empty()) {
      if (it->second == "positive")
        rec.sign = LatticeSign::positive;
      else if (it->second == "negative")
        rec.sign = LatticeSign::negative;
      else if (it->second == "neutral")
        rec.sign = LatticeSign::neutral;
      else
        throw ParseError(where(r.line, rec.id, js) + ": unknown sign '" + it->second + "'");
    }
    out.push_back(rec);
  }
  return out;
}

InvariantReport make_report(const LatticeRecord& rec, double rel_tol) {
  InvariantReport rep;
  rep.id = rec.id;
  auto reduced = reduce_to_obtuse(basis_to_superbase(rec.basis()), rel_tol);
  RootFormOptions opt{rel_tol};
  rep.root_form = root_form(reduced.superbase, false, opt);
  rep.oriented_root_form = root_form(reduced.superbase, true, opt);
  rep.sign = lattice_sign(rep.oriented_root_form, rel_tol);
  rep.special = detect_special(rep.root_form, rel_tol);
  rep.dc7 = dc7_vector(reduced.superbase, rel_tol);
  rep.projection = project_root_form(rep.root_form);
  return rep;
}

std::string format_number(double v) {
  if (v == 0) v = 0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

namespace {

std::string special_text(const SpecialFlags& f) {
  std::string s;
  auto add = [&s](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += '|';
    s += name;
  };
  add(f.mirror_columns, "mirror_columns");
  add(f.of_rows, "equal_rows");
  add(f.two_top_zeros, "two_top_zeros");
  return s.empty() ? "none" : s;
}

std::string point_cells(const std::optional<TrianglePoint>& p) {
  if (!p) return ",";
  return format_number(p->x) + "," + format_number(p->y);
}

json point_json(const std::optional<TrianglePoint>& p) {
  if (!p) return nullptr;
  return json::array({p->x, p->y});
}

}  // namespace

std::string report_csv_header() {
  return "id,r23,r13,r12,r01,r02,r03,sign,oriented,or23,or13,or12,or01,or02,or03,special,"
         "dc7_1,dc7_2,dc7_3,dc7_4,dc7_5,dc7_6,dc7_7,qt_x,qt_y,ft_x,ft_y";
}

std::string report_csv_row(const InvariantReport& r, bool oriented) {
  const RootForm& main = oriented ? r.oriented_root_form : r.root_form;
  std::string s = r.id;
  for (double v : main.r) s += "," + format_number(v);
  s += "," + std::string(to_string(r.sign)) + (oriented ? ",true" : ",false");
  for (double v : r.oriented_root_form.r) s += "," + format_number(v);
  s += "," + special_text(r.special);
  for (double v : r.dc7) s += "," + format_number(v);
  s += "," + point_cells(r.projection.qt) + "," + point_cells(r.projection.ft);
  return s;
}

std::string report_json(const std::vector<InvariantReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back({{"id", r.id},
                   {"root_form", r.root_form.r},
                   {"oriented_root_form", r.oriented_root_form.r},
                   {"sign", std::string(to_string(r.sign))},
                   {"special",
                    {{"mirror_columns", r.special.mirror_columns},
                     {"equal_rows", r.special.of_rows},
                     {"two_top_zeros", r.special.two_top_zeros}}},
                   {"dc7", r.dc7},
                   {"qt", point_json(r.projection.qt)},
                   {"ft", point_json(r.projection.ft)}});
  }
  return arr.dump(2);
}

void write_grid_csv(std::ostream& out, const DensityGrid& g) {
  out << "row,col,count\n";
  for (int iy = 0; iy < g.resolution; ++iy)
    for (int ix = 0; ix < g.resolution; ++ix) out << iy << ',' << ix << ',' << g.at(ix, iy) << '\n';
}

void write_grid_pgm(std::ostream& out, const DensityGrid& g) {
  constexpr std::int64_t kMaxval = 65535;
  std::int64_t peak = g.max_count();
  std::int64_t maxval = std::clamp<std::int64_t>(peak, 1, kMaxval);
  out << "P2\n# " << to_string(g.kind) << " density, total " << g.total() << '\n'
      << g.resolution << ' ' << g.resolution << '\n'
      << maxval << '\n';
  for (int iy = g.resolution - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < g.resolution; ++ix) {
      std::int64_t c = g.at(ix, iy);
      if (peak > kMaxval) c = c * kMaxval / peak;
      out << (ix ? " " : "") << c;
    }
    out << '\n';
  }
}

void write_grid_svg(std::ostream& out, const DensityGrid& g) {
  const int n = g.resolution;
  const double peak = static_cast<double>(std::max<std::int64_t>(g.max_count(), 1));
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << n << ' ' << n
      << "\" width=\"" << 3 * n << "\" height=\"" << 3 * n << "\" shape-rendering=\"crispEdges\">\n"
      << "<rect width=\"" << n << "\" height=\"" << n << "\" fill=\"#ffffff\"/>\n";
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      std::int64_t c = g.at(ix, iy);
      if (c == 0) continue;
      int shade = 230 - static_cast<int>(std::lround(230 * c / peak));
      char color[8];
      std::snprintf(color, sizeof color, "#%02x%02x%02x", shade, shade, 255);
      out << "<rect x=\"" << ix << "\" y=\"" << (n - 1 - iy) << "\" width=\"1\" height=\"1\" fill=\""
          << color << "\"><title>" << c << "</title></rect>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace latinv
