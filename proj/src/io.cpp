#include "nlsup/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace nlsup::io {

using setcore::Axis;
using setcore::BoxUnion;
using setcore::FinitePairSet;
using setcore::GridGeometry;
using setcore::LatticeGrid;
using setcore::PairPoint;
using setcore::Point;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt17(double v) {
  if (v == kInf) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_value(const std::string& tok, bool allow_inf) {
  if (tok == "inf" || tok == "+inf") {
    if (!allow_inf) {
      throw ParseError("'inf' is only accepted in envelope files");
    }
    return kInf;
  }
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw ParseError("bad numeric token: '" + tok + "'");
  }
  return v;
}

Point json_point(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("point must be a nonempty array of numbers");
  }
  Point p;
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError("point entries must be numbers");
    p.push_back(v.get<double>());
  }
  return p;
}

PairPoint json_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("pair must be a two-element array [xi, zeta]");
  }
  return {json_point(j[0]), json_point(j[1])};
}

json pair_json(const PairPoint& p) {
  return json::array({json(p.first), json(p.second)});
}

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

GridGeometry read_header(const std::string& line) {
  if (line.empty() || line[0] != '#') {
    throw ParseError("grid header must start with '#'");
  }
  std::istringstream ss(line.substr(1));
  GridGeometry geom;
  if (!(ss >> geom.m) || geom.m < 1) {
    throw ParseError("grid header: bad dimension");
  }
  geom.axes.resize(static_cast<std::size_t>(2 * geom.m));
  for (Axis& ax : geom.axes) {
    if (!(ss >> ax.lo >> ax.hi)) {
      throw ParseError("grid header: bad axis ranges");
    }
  }
  for (Axis& ax : geom.axes) {
    if (!(ss >> ax.n)) throw ParseError("grid header: bad axis resolutions");
  }
  std::string extra;
  if (ss >> extra) throw ParseError("grid header: trailing tokens");
  try {
    geom.validate();
  } catch (const std::exception& e) {
    throw ParseError(std::string("grid header: ") + e.what());
  }
  return geom;
}

std::vector<std::string> read_body_tokens(std::istream& in) {
  std::vector<std::string> toks;
  std::string tok;
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  for (char& c : body) {
    if (c == ',') c = ' ';
  }
  std::istringstream ss(body);
  while (ss >> tok) toks.push_back(tok);
  return toks;
}

void write_header(std::ostream& out, const GridGeometry& geom) {
  out << "# " << geom.m;
  for (const Axis& ax : geom.axes) out << ' ' << fmt17(ax.lo) << ' '
                                       << fmt17(ax.hi);
  for (const Axis& ax : geom.axes) out << ' ' << ax.n;
  out << '\n';
}

template <typename Emit>
void write_rows(std::ostream& out, const GridGeometry& geom, Emit emit) {
  const std::size_t total = geom.cell_count();
  const std::size_t row =
      static_cast<std::size_t>(geom.axes.back().n);
  for (std::size_t f = 0; f < total; ++f) {
    if (f % row != 0) out << ',';
    emit(out, f);
    if ((f + 1) % row == 0) out << '\n';
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open for reading: " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  return out;
}

}  // namespace

setcore::SetHandle read_set_json(std::istream& in) {
  const json j = parse_stream(in);
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const int m = j.at("m").get<int>();
    const double tol = j.value("tol", kDefaultTol);
    if (kind == "finite") {
      FinitePairSet e;
      e.m = m;
      e.tol = tol;
      for (const auto& p : j.at("points")) e.points.push_back(json_pair(p));
      e.validate();
      return e;
    }
    if (kind == "boxunion") {
      BoxUnion b;
      b.m = m;
      b.tol = tol;
      for (const auto& p : j.at("generators")) {
        b.generators.push_back(json_pair(p));
      }
      b.validate();
      return b;
    }
    throw ParseError("unknown set kind: '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad set JSON: ") + e.what());
  }
}

setcore::SetHandle read_set_json_file(const std::string& path) {
  auto in = open_in(path);
  return read_set_json(in);
}

void write_set_json(std::ostream& out, const setcore::SetHandle& s) {
  json j;
  if (const auto* e = std::get_if<FinitePairSet>(&s)) {
    j["kind"] = "finite";
    j["m"] = e->m;
    j["tol"] = e->tol;
    j["points"] = json::array();
    for (const PairPoint& p : e->points) j["points"].push_back(pair_json(p));
  } else if (const auto* b = std::get_if<BoxUnion>(&s)) {
    j["kind"] = "boxunion";
    j["m"] = b->m;
    j["tol"] = b->tol;
    j["generators"] = json::array();
    for (const PairPoint& p : b->generators) {
      j["generators"].push_back(pair_json(p));
    }
  } else {
    throw PreconditionError("lattice grids are stored as CSV, not JSON");
  }
  out << dump(j);
}

void write_set_json_file(const std::string& path,
                         const setcore::SetHandle& s) {
  auto out = open_out(path);
  write_set_json(out, s);
  if (!out) throw ParseError("write failed: " + path);
}

LatticeGrid read_grid_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty grid file");
  LatticeGrid g;
  g.geom = read_header(header);
  const std::vector<std::string> toks = read_body_tokens(in);
  if (toks.size() != g.geom.cell_count()) {
    throw ParseError("grid body size does not match the header geometry");
  }
  g.occ.resize(toks.size());
  for (std::size_t f = 0; f < toks.size(); ++f) {
    if (toks[f] == "0") {
      g.occ[f] = 0;
    } else if (toks[f] == "1") {
      g.occ[f] = 1;
    } else {
      throw ParseError("grid cells must be 0 or 1, got '" + toks[f] + "'");
    }
  }
  g.validate();
  return g;
}

LatticeGrid read_grid_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_grid_csv(in);
}

void write_grid_csv(std::ostream& out, const LatticeGrid& g) {
  g.validate();
  write_header(out, g.geom);
  write_rows(out, g.geom, [&](std::ostream& o, std::size_t f) {
    o << (g.occ[f] ? '1' : '0');
  });
}

void write_grid_csv_file(const std::string& path, const LatticeGrid& g) {
  auto out = open_out(path);
  write_grid_csv(out, g);
  if (!out) throw ParseError("write failed: " + path);
}

supremand::SampledSupremand read_supremand_csv(std::istream& in,
                                               bool allow_inf) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty supremand file");
  supremand::SampledSupremand w;
  w.geom = read_header(header);
  const std::vector<std::string> toks = read_body_tokens(in);
  if (toks.size() != w.geom.cell_count()) {
    throw ParseError("supremand body size does not match the header geometry");
  }
  w.values.resize(toks.size());
  for (std::size_t f = 0; f < toks.size(); ++f) {
    w.values[f] = parse_value(toks[f], allow_inf);
  }
  w.validate(allow_inf);
  return w;
}

supremand::SampledSupremand read_supremand_csv_file(const std::string& path,
                                                    bool allow_inf) {
  auto in = open_in(path);
  return read_supremand_csv(in, allow_inf);
}

void write_supremand_csv(std::ostream& out,
                         const supremand::SampledSupremand& w) {
  w.validate(true);
  write_header(out, w.geom);
  write_rows(out, w.geom, [&](std::ostream& o, std::size_t f) {
    o << fmt17(w.values[f]);
  });
}

void write_supremand_csv_file(const std::string& path,
                              const supremand::SampledSupremand& w) {
  auto out = open_out(path);
  write_supremand_csv(out, w);
  if (!out) throw ParseError("write failed: " + path);
}

functional::SimpleFunction read_simple_function_json(std::istream& in) {
  const json j = parse_stream(in);
  try {
    functional::SimpleFunction u;
    u.n = j.value("n", 1);
    const auto& cells = j.at("cells");
    if (!cells.is_array() || cells.empty()) {
      throw ParseError("simple function needs a nonempty 'cells' array");
    }
    for (const auto& c : cells) {
      functional::Piece p;
      p.a = c.at("a").get<double>();
      p.b = c.at("b").get<double>();
      p.value = json_point(c.at("value"));
      u.pieces.push_back(std::move(p));
    }
    u.m = static_cast<int>(u.pieces.front().value.size());
    u.validate();
    return u;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad simple-function JSON: ") + e.what());
  }
}

functional::SimpleFunction read_simple_function_json_file(
    const std::string& path) {
  auto in = open_in(path);
  return read_simple_function_json(in);
}

void write_simple_function_json(std::ostream& out,
                                const functional::SimpleFunction& u) {
  u.validate();
  json j;
  j["n"] = u.n;
  j["cells"] = json::array();
  for (const functional::Piece& p : u.pieces) {
    j["cells"].push_back({{"a", p.a}, {"b", p.b}, {"value", json(p.value)}});
  }
  out << dump(j);
}

void write_simple_function_json_file(const std::string& path,
                                     const functional::SimpleFunction& u) {
  auto out = open_out(path);
  write_simple_function_json(out, u);
  if (!out) throw ParseError("write failed: " + path);
}

cartesian::CartesianFamily read_cartesian_json(std::istream& in) {
  const json j = parse_stream(in);
  try {
    cartesian::CartesianFamily fam;
    fam.m = j.at("m").get<int>();
    for (const auto& base : j.at("bases")) {
      std::vector<Point> pts;
      for (const auto& p : base) pts.push_back(json_point(p));
      fam.bases.push_back(std::move(pts));
    }
    return fam;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad cartesian JSON: ") + e.what());
  }
}

void write_cartesian_json(std::ostream& out,
                          const cartesian::CartesianFamily& f) {
  json j;
  j["m"] = f.m;
  j["bases"] = json::array();
  for (const auto& base : f.bases) {
    json b = json::array();
    for (const Point& p : base) b.push_back(json(p));
    j["bases"].push_back(std::move(b));
  }
  out << dump(j);
}

void write_cartesian_json_file(const std::string& path,
                               const cartesian::CartesianFamily& f) {
  auto out = open_out(path);
  write_cartesian_json(out, f);
  if (!out) throw ParseError("write failed: " + path);
}

json hull_report_json(const hulls::HullResult& r) {
  json j;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["cells_added"] = r.cells_added;
  j["occupied"] = r.hull.count();
  return j;
}

json envelope_report_json(const supremand::EnvelopeReport& r) {
  json j;
  j["levels"] = r.schedule.levels;
  j["level_gap"] = r.level_gap;
  j["trusted_max"] = r.trusted_max;
  j["level_oracle_checked"] = r.level_oracle_checked;
  j["exact"] = r.exact;
  j["hulls"] = json::array();
  for (const auto& h : r.hulls) {
    j["hulls"].push_back({{"level", h.level},
                          {"iterations", h.iterations},
                          {"converged", h.converged},
                          {"cells_added", h.cells_added}});
  }
  return j;
}

json coercivity_report_json(const supremand::CoercivityReport& r) {
  json j;
  j["boundary_min_raw"] = r.boundary_min_raw;
  j["boundary_min_hat"] = r.boundary_min_hat;
  j["has_trusted_range"] = r.has_trusted_range;
  if (r.has_trusted_range) {
    j["trusted_max"] = r.trusted_max;
  } else {
    j["trusted_max"] = nullptr;
  }
  return j;
}

json lsc_verdict_json(const functional::LscVerdict& v) {
  json j;
  j["all_hold"] = v.all_hold;
  j["sufficient_only"] = v.sufficient_only;
  j["levels"] = json::array();
  for (const auto& lv : v.levels) {
    json e;
    e["level"] = lv.level;
    e["holds"] = lv.holds;
    if (lv.witness_cell) {
      e["witness_cell"] = *lv.witness_cell;
      e["witness_point"] = pair_json(*lv.witness_point);
    }
    j["levels"].push_back(std::move(e));
  }
  return j;
}

json oscillation_report_json(const oscillation::OscillationReport& r,
                             std::optional<unsigned> seed) {
  json j;
  if (seed) j["seed"] = *seed;
  j["per_j"] = json::array();
  for (const auto& jr : r.per_j) {
    json e;
    e["j"] = jr.j;
    e["violations"] = jr.violations;
    e["pairings"] = json::array();
    for (const auto& p : jr.pairings) {
      e["pairings"].push_back({{"phi", p.phi}, {"err", p.err}});
    }
    e["ym"] = json::array();
    for (const auto& y : jr.ym) {
      e["ym"].push_back({{"piece", y.piece}, {"tv", y.tv}});
    }
    j["per_j"].push_back(std::move(e));
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace nlsup::io
