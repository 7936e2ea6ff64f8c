#include "casimir/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>

#include "casimir/errors.hpp"

namespace casimir::io {

namespace {

using materials::KkSettings;
using materials::MixingRule;
using materials::TableFormat;
using scenarios::ScenarioKind;
using scenarios::SweepAxis;

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Where a value came from, for diagnostics.
struct Where {
  int line = 0;
  std::string section;
  std::string key;

  [[noreturn]] void fail(const std::string& message) const {
    std::ostringstream os;
    if (line > 0) os << "line " << line << ": ";
    os << "[" << section << "]";
    if (!key.empty()) os << " " << key;
    os << ": " << message;
    throw ConfigError(os.str());
  }
};

double to_number(std::string_view text, const Where& where) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
    where.fail("expected a number, got '" + std::string(text) + "'");
  return v;
}

int to_int(std::string_view text, const Where& where) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    where.fail("expected an integer, got '" + std::string(text) + "'");
  return v;
}

bool to_bool(std::string_view text, const Where& where) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  where.fail("expected true or false, got '" + std::string(text) + "'");
}

template <typename Enum>
struct EnumName {
  Enum value;
  std::string_view name;
};

template <typename Enum, std::size_t N>
Enum to_enum(std::string_view text, const EnumName<Enum> (&names)[N], const Where& where) {
  for (const auto& n : names)
    if (n.name == text) return n.value;
  std::string options;
  for (const auto& n : names) options += (options.empty() ? "" : ", ") + std::string(n.name);
  where.fail("unknown value '" + std::string(text) + "' (expected one of: " + options + ")");
}

template <typename Enum, std::size_t N>
std::string_view enum_name(Enum value, const EnumName<Enum> (&names)[N]) {
  for (const auto& n : names)
    if (n.value == value) return n.name;
  return "?";
}

constexpr EnumName<MaterialKind> kMaterialKinds[] = {
    {MaterialKind::Vacuum, "vacuum"},       {MaterialKind::Drude, "drude"}, {MaterialKind::Lorentz, "lorentz"},
    {MaterialKind::Tabulated, "tabulated"}, {MaterialKind::Mixed, "mixed"},
};
constexpr EnumName<MixingRule> kMixingRules[] = {
    {MixingRule::ClausiusMossotti, "clausius_mossotti"},
    {MixingRule::Looyenga, "looyenga"},
};
constexpr EnumName<TableFormat> kTableFormats[] = {{TableFormat::Eps2, "eps2"}, {TableFormat::NK, "nk"}};
constexpr EnumName<materials::LowEnergyExtrapolation> kLowExtrapolations[] = {
    {materials::LowEnergyExtrapolation::LinearToZero, "linear"},
    {materials::LowEnergyExtrapolation::None, "none"},
};
constexpr EnumName<materials::HighEnergyTail> kTails[] = {
    {materials::HighEnergyTail::InverseCube, "inverse_cube"},
    {materials::HighEnergyTail::None, "none"},
};
constexpr EnumName<ScenarioKind> kScenarioKinds[] = {
    {ScenarioKind::AerogelOnAuSymmetric, "aerogel_on_au_symmetric"},
    {ScenarioKind::AuVsAerogelOnAu, "au_vs_aerogel_on_au"},
    {ScenarioKind::FreestandingSlabs, "freestanding_slabs"},
    {ScenarioKind::PorositySweep, "porosity_sweep"},
    {ScenarioKind::SiliconReference, "si_reference"},
    {ScenarioKind::Custom, "custom"},
};
constexpr EnumName<SweepAxis> kSweepAxes[] = {
    {SweepAxis::Separation, "separation"},
    {SweepAxis::Thickness, "thickness"},
    {SweepAxis::Porosity, "porosity"},
};
constexpr EnumName<SeriesAxis> kSeriesAxes[] = {
    {SeriesAxis::None, "none"},
    {SeriesAxis::Thickness, "thickness"},
    {SeriesAxis::Porosity, "porosity"},
};
constexpr EnumName<lifshitz::XiMapping> kMappings[] = {{lifshitz::XiMapping::RationalCompression, "rational"}};

std::vector<double> to_number_list(std::string_view text, const Where& where) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) out.push_back(to_number(item, where));
  return out;
}

// "log(a, b, n)", "linear(a, b, n)" or an explicit list.
std::vector<double> to_grid(std::string_view text, const Where& where) {
  for (std::string_view fn : {"log", "linear"}) {
    if (text.substr(0, fn.size()) == fn && trim(text.substr(fn.size())).substr(0, 1) == "(") {
      auto rest = trim(text.substr(fn.size()));
      if (rest.back() != ')') where.fail("unterminated " + std::string(fn) + "(...)");
      const auto args = split(rest.substr(1, rest.size() - 2), ',');
      if (args.size() != 3) where.fail(std::string(fn) + "(lo, hi, count) takes three arguments");
      const double lo = to_number(args[0], where);
      const double hi = to_number(args[1], where);
      const int n = to_int(args[2], where);
      try {
        return fn == "log" ? scenarios::log_grid(lo, hi, n) : scenarios::linear_grid(lo, hi, n);
      } catch (const Error& e) {
        where.fail(e.what());
      }
    }
  }
  return to_number_list(text, where);
}

std::vector<LayerDef> to_layers(std::string_view text, const Where& where) {
  std::vector<LayerDef> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2 || parts[0].empty())
      where.fail("layer entries are material:thickness_nm, got '" + std::string(item) + "'");
    out.push_back({std::string(parts[0]), to_number(parts[1], where)});
  }
  return out;
}

std::string layers_text(const std::vector<LayerDef>& layers) {
  std::string out;
  for (const auto& l : layers) {
    if (!out.empty()) out += ", ";
    out += l.material + ":" + format_number(l.thickness_nm);
  }
  return out;
}

std::string list_text(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ", ";
    out += format_number(v);
  }
  return out;
}

struct Entry {
  std::string value;
  int line;
};

struct Section {
  std::string name;
  int line = 0;
  std::vector<std::pair<std::string, Entry>> entries;  // file order
};

class SectionReader {
 public:
  explicit SectionReader(const Section& s) : section_(s) {}

  const Entry* get(const std::string& key) {
    allowed_.insert(key);
    for (const auto& [k, e] : section_.entries)
      if (k == key) return &e;
    return nullptr;
  }
  std::vector<const Entry*> get_all(const std::string& key) {
    allowed_.insert(key);
    std::vector<const Entry*> out;
    for (const auto& [k, e] : section_.entries)
      if (k == key) out.push_back(&e);
    return out;
  }
  Where where(const std::string& key) const {
    for (const auto& [k, e] : section_.entries)
      if (k == key) return {e.line, section_.name, key};
    return {section_.line, section_.name, key};
  }
  Where where(const std::string& key, const Entry& e) const { return {e.line, section_.name, key}; }

  template <typename F>
  void with(const std::string& key, F&& apply) {
    if (const Entry* e = get(key)) apply(std::string_view(e->value), where(key, *e));
  }

  void reject_unknown() const {
    for (const auto& [k, e] : section_.entries)
      if (!allowed_.count(k)) Where{e.line, section_.name, k}.fail("unknown key");
  }

 private:
  const Section& section_;
  std::set<std::string> allowed_;
};

std::vector<Section> tokenize(std::istream& source) {
  std::vector<Section> sections;
  std::string raw;
  int line_no = 0;
  std::set<std::string> seen_sections;
  std::set<std::string> repeatable = {"oscillator"};
  std::set<std::string> seen_keys;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (name.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty section name");
      if (!seen_sections.insert(name).second)
        throw ConfigError("line " + std::to_string(line_no) + ": duplicate section [" + name + "]");
      sections.push_back({name, line_no, {}});
      seen_keys.clear();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    if (sections.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    if (!repeatable.count(key) && !seen_keys.insert(key).second)
      Where{line_no, sections.back().name, key}.fail("duplicate key");
    sections.back().entries.push_back({key, Entry{value, line_no}});
  }
  return sections;
}

MaterialDef read_material(const Section& section, const std::string& name) {
  SectionReader r(section);
  MaterialDef m;
  m.name = name;
  const Entry* model = r.get("model");
  if (!model) Where{section.line, section.name, "model"}.fail("missing required key");
  m.kind = to_enum(std::string_view(model->value), kMaterialKinds, r.where("model", *model));

  auto require = [&](const std::string& key) {
    const Entry* e = r.get(key);
    if (!e) Where{section.line, section.name, key}.fail("missing required key for model " + model->value);
    return e;
  };

  switch (m.kind) {
    case MaterialKind::Vacuum:
      break;
    case MaterialKind::Drude: {
      const Entry* wp = require("plasma_eV");
      m.drude.plasma_ev = to_number(wp->value, r.where("plasma_eV", *wp));
      m.drude.damping_ev = 0.0;
      r.with("damping_eV", [&](auto v, const Where& w) { m.drude.damping_ev = to_number(v, w); });
      if (!(m.drude.plasma_ev > 0.0)) r.where("plasma_eV").fail("must be positive");
      if (!(m.drude.damping_ev >= 0.0)) r.where("damping_eV").fail("must be non-negative");
      break;
    }
    case MaterialKind::Lorentz: {
      for (const Entry* e : r.get_all("oscillator")) {
        const Where w = r.where("oscillator", *e);
        const auto values = to_number_list(e->value, w);
        if (values.size() != 3) w.fail("expected strength_eV2, resonance_eV, width_eV");
        materials::LorentzOscillator o{values[0], values[1], values[2]};
        try {
          o.validate();
        } catch (const Error& err) {
          w.fail(err.what());
        }
        m.oscillators.push_back(o);
      }
      break;
    }
    case MaterialKind::Tabulated: {
      m.table_path = require("file")->value;
      if (m.table_path.empty()) r.where("file").fail("empty path");
      r.with("format", [&](auto v, const Where& w) { m.table_format = to_enum(v, kTableFormats, w); });
      r.with("low_extrapolation", [&](auto v, const Where& w) { m.kk.low = to_enum(v, kLowExtrapolations, w); });
      r.with("tail", [&](auto v, const Where& w) { m.kk.tail = to_enum(v, kTails, w); });
      break;
    }
    case MaterialKind::Mixed: {
      m.host = require("host")->value;
      const Entry* phi = require("porosity");
      m.porosity = to_number(phi->value, r.where("porosity", *phi));
      if (!(m.porosity >= 0.0 && m.porosity <= 1.0)) r.where("porosity").fail("value outside [0, 1]");
      r.with("rule", [&](auto v, const Where& w) { m.rule = to_enum(v, kMixingRules, w); });
      break;
    }
  }
  r.reject_unknown();
  return m;
}

ScenarioDef read_scenario(const Section& section) {
  SectionReader r(section);
  ScenarioDef s;
  r.with("kind", [&](auto v, const Where& w) { s.kind = to_enum(v, kScenarioKinds, w); });
  r.with("thickness_nm", [&](auto v, const Where& w) {
    s.thickness_nm = to_number(v, w);
    if (!(s.thickness_nm >= 0.0)) w.fail("must be non-negative");
  });
  r.with("porosity", [&](auto v, const Where& w) {
    s.porosity = to_number(v, w);
    if (!(s.porosity >= 0.0 && s.porosity <= 1.0)) w.fail("value " + std::string(v) + " outside [0, 1]");
  });
  r.with("silica", [&](auto v, const Where&) { s.silica = std::string(v); });
  r.with("gold", [&](auto v, const Where&) { s.gold = std::string(v); });
  r.with("mixing", [&](auto v, const Where& w) { s.mixing = to_enum(v, kMixingRules, w); });
  r.with("reference", [&](auto v, const Where&) { s.reference = std::string(v); });
  r.with("left_layers", [&](auto v, const Where& w) { s.left.layers = to_layers(v, w); });
  r.with("right_layers", [&](auto v, const Where& w) { s.right.layers = to_layers(v, w); });
  r.with("left_substrate", [&](auto v, const Where&) { s.left.substrate = std::string(v); });
  r.with("right_substrate", [&](auto v, const Where&) { s.right.substrate = std::string(v); });
  for (const auto* side : {"left_layers", "right_layers"}) {
    const auto& layers = std::string_view(side) == "left_layers" ? s.left.layers : s.right.layers;
    for (const auto& l : layers)
      if (!(l.thickness_nm > 0.0)) r.where(side).fail("layer thickness must be positive");
  }
  r.reject_unknown();
  return s;
}

SweepDef read_sweep(const Section& section) {
  SectionReader r(section);
  SweepDef s;
  r.with("axis", [&](auto v, const Where& w) { s.axis = to_enum(v, kSweepAxes, w); });
  r.with("grid", [&](auto v, const Where& w) { s.grid = to_grid(v, w); });
  r.with("gap_nm", [&](auto v, const Where& w) {
    s.gap_nm = to_number(v, w);
    if (!(s.gap_nm > 0.0)) w.fail("must be positive");
  });
  r.with("series_axis", [&](auto v, const Where& w) { s.series_axis = to_enum(v, kSeriesAxes, w); });
  r.with("series_values", [&](auto v, const Where& w) { s.series_values = to_number_list(v, w); });

  const Where gw = r.where("grid");
  if (s.grid.empty()) gw.fail("grid is empty");
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    const double v = s.grid[i];
    if (i > 0 && !(v > s.grid[i - 1])) gw.fail("grid must be strictly increasing");
    if (s.axis == SweepAxis::Separation && !(v > 0.0)) gw.fail("separations must be positive");
    if (s.axis == SweepAxis::Thickness && !(v >= 0.0)) gw.fail("thicknesses must be non-negative");
    if (s.axis == SweepAxis::Porosity && !(v >= 0.0 && v <= 1.0)) gw.fail("porosity values must lie in [0, 1]");
  }
  if (s.series_axis == SeriesAxis::None && !s.series_values.empty())
    r.where("series_values").fail("series_values given without series_axis");
  if (s.series_axis != SeriesAxis::None) {
    if (s.series_values.empty()) r.where("series_axis").fail("series_axis needs series_values");
    const bool same_axis = (s.series_axis == SeriesAxis::Thickness && s.axis == SweepAxis::Thickness) ||
                           (s.series_axis == SeriesAxis::Porosity && s.axis == SweepAxis::Porosity);
    if (same_axis) r.where("series_axis").fail("series axis must differ from the sweep axis");
    for (double v : s.series_values) {
      if (s.series_axis == SeriesAxis::Porosity && !(v >= 0.0 && v <= 1.0))
        r.where("series_values").fail("porosity values must lie in [0, 1]");
      if (s.series_axis == SeriesAxis::Thickness && !(v >= 0.0))
        r.where("series_values").fail("thicknesses must be non-negative");
    }
  }
  r.reject_unknown();
  return s;
}

lifshitz::QuadratureSpec read_quadrature(const Section& section) {
  SectionReader r(section);
  lifshitz::QuadratureSpec q;
  r.with("xi_nodes", [&](auto v, const Where& w) { q.xi_nodes = to_int(v, w); });
  r.with("q_nodes", [&](auto v, const Where& w) { q.q_nodes = to_int(v, w); });
  r.with("xi_mapping", [&](auto v, const Where& w) { q.xi_mapping = to_enum(v, kMappings, w); });
  r.with("cutoff_scale", [&](auto v, const Where& w) { q.cutoff_scale = to_number(v, w); });
  r.with("target_rel_tol", [&](auto v, const Where& w) { q.target_rel_tol = to_number(v, w); });
  r.with("max_nodes", [&](auto v, const Where& w) { q.max_nodes = to_int(v, w); });
  if (q.xi_nodes < 8) r.where("xi_nodes").fail("must be at least 8");
  if (q.q_nodes < 8) r.where("q_nodes").fail("must be at least 8");
  if (q.max_nodes < std::max(q.xi_nodes, q.q_nodes)) r.where("max_nodes").fail("must be >= the node counts");
  if (!(q.cutoff_scale > 0.0)) r.where("cutoff_scale").fail("must be positive");
  if (!(q.target_rel_tol > 0.0)) r.where("target_rel_tol").fail("must be positive");
  r.reject_unknown();
  return q;
}

OutputDef read_output(const Section& section) {
  SectionReader r(section);
  OutputDef o;
  r.with("csv", [&](auto v, const Where&) { o.csv = std::string(v); });
  r.with("svg", [&](auto v, const Where&) { o.svg = std::string(v); });
  r.with("x_log", [&](auto v, const Where& w) { o.x_log = to_bool(v, w); });
  r.with("y_log", [&](auto v, const Where& w) { o.y_log = to_bool(v, w); });
  r.with("title", [&](auto v, const Where&) { o.title = std::string(v); });
  r.with("width_px", [&](auto v, const Where& w) { o.width_px = to_int(v, w); });
  r.with("height_px", [&](auto v, const Where& w) { o.height_px = to_int(v, w); });
  if (o.width_px < 200) r.where("width_px").fail("must be at least 200");
  if (o.height_px < 150) r.where("height_px").fail("must be at least 150");
  r.reject_unknown();
  return o;
}

bool is_reserved(const std::string& name) { return name == "vacuum" || name == kIdealMirror; }

void check_references(const RunConfig& config, const std::map<std::string, int>& section_lines) {
  auto line_of = [&](const std::string& section) {
    const auto it = section_lines.find(section);
    return it == section_lines.end() ? 0 : it->second;
  };
  auto require_material = [&](const std::string& name, const std::string& section, const std::string& key,
                              bool allow_builtin_names) {
    if (allow_builtin_names && is_reserved(name)) return;
    if (!config.find_material(name))
      Where{line_of(section), section, key}.fail("undefined material '" + name + "'");
  };

  for (const auto& m : config.materials) {
    if (m.kind != MaterialKind::Mixed) continue;
    const std::string section = "material." + m.name;
    require_material(m.host, section, "host", true);
    // Host chains must terminate.
    std::set<std::string> visited{m.name};
    const MaterialDef* cur = config.find_material(m.host);
    while (cur && cur->kind == MaterialKind::Mixed) {
      if (!visited.insert(cur->name).second)
        Where{line_of(section), section, "host"}.fail("cyclic host chain through '" + cur->name + "'");
      cur = config.find_material(cur->host);
    }
  }

  const auto& s = config.scenario;
  if (!s.silica.empty()) require_material(s.silica, "scenario", "silica", false);
  if (!s.gold.empty()) {
    require_material(s.gold, "scenario", "gold", false);
    if (config.find_material(s.gold)->kind != MaterialKind::Drude)
      Where{line_of("scenario"), "scenario", "gold"}.fail("material '" + s.gold + "' must be a drude model");
  }
  if (s.kind == ScenarioKind::SiliconReference) {
    if (s.reference.empty()) Where{line_of("scenario"), "scenario", "reference"}.fail("required for si_reference");
    require_material(s.reference, "scenario", "reference", false);
  }
  if (s.kind == ScenarioKind::Custom) {
    for (const auto* side : {&s.left, &s.right}) {
      const std::string prefix = side == &s.left ? "left_" : "right_";
      for (const auto& l : side->layers) require_material(l.material, "scenario", prefix + "layers", true);
      require_material(side->substrate, "scenario", prefix + "substrate", true);
      if (side->substrate == kIdealMirror && !side->layers.empty())
        Where{line_of("scenario"), "scenario", prefix + "layers"}.fail("an ideal mirror cannot carry layers");
    }
  }
}

}  // namespace

const MaterialDef* RunConfig::find_material(const std::string& name) const {
  for (const auto& m : materials)
    if (m.name == name) return &m;
  return nullptr;
}

RunConfig parse_config(std::istream& source) {
  const auto sections = tokenize(source);
  RunConfig config;
  std::map<std::string, int> section_lines;
  for (const auto& section : sections) {
    section_lines[section.name] = section.line;
    if (section.name.rfind("material.", 0) == 0) {
      const std::string name = section.name.substr(9);
      if (name.empty() || is_reserved(name) || name.find_first_of(" \t:,") != std::string::npos)
        Where{section.line, section.name, ""}.fail("invalid material name '" + name + "'");
      config.materials.push_back(read_material(section, name));
    } else if (section.name == "scenario") {
      config.scenario = read_scenario(section);
    } else if (section.name == "sweep") {
      config.sweep = read_sweep(section);
    } else if (section.name == "quadrature") {
      config.quadrature = read_quadrature(section);
    } else if (section.name == "output") {
      config.output = read_output(section);
    } else {
      throw ConfigError("line " + std::to_string(section.line) + ": unknown section [" + section.name + "]");
    }
  }
  check_references(config, section_lines);
  return config;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  return parse_config(in);
}

std::string serialize_config(const RunConfig& config) {
  std::ostringstream os;
  for (const auto& m : config.materials) {
    os << "[material." << m.name << "]\n";
    os << "model = " << enum_name(m.kind, kMaterialKinds) << "\n";
    switch (m.kind) {
      case MaterialKind::Vacuum:
        break;
      case MaterialKind::Drude:
        os << "plasma_eV = " << format_number(m.drude.plasma_ev) << "\n";
        os << "damping_eV = " << format_number(m.drude.damping_ev) << "\n";
        break;
      case MaterialKind::Lorentz:
        for (const auto& o : m.oscillators)
          os << "oscillator = " << format_number(o.strength_ev2) << ", " << format_number(o.resonance_ev) << ", "
             << format_number(o.width_ev) << "\n";
        break;
      case MaterialKind::Tabulated:
        os << "file = " << m.table_path << "\n";
        os << "format = " << enum_name(m.table_format, kTableFormats) << "\n";
        os << "low_extrapolation = " << enum_name(m.kk.low, kLowExtrapolations) << "\n";
        os << "tail = " << enum_name(m.kk.tail, kTails) << "\n";
        break;
      case MaterialKind::Mixed:
        os << "host = " << m.host << "\n";
        os << "porosity = " << format_number(m.porosity) << "\n";
        os << "rule = " << enum_name(m.rule, kMixingRules) << "\n";
        break;
    }
    os << "\n";
  }

  const auto& s = config.scenario;
  os << "[scenario]\n";
  os << "kind = " << enum_name(s.kind, kScenarioKinds) << "\n";
  os << "thickness_nm = " << format_number(s.thickness_nm) << "\n";
  os << "porosity = " << format_number(s.porosity) << "\n";
  if (!s.silica.empty()) os << "silica = " << s.silica << "\n";
  if (!s.gold.empty()) os << "gold = " << s.gold << "\n";
  os << "mixing = " << enum_name(s.mixing, kMixingRules) << "\n";
  if (!s.reference.empty()) os << "reference = " << s.reference << "\n";
  if (!s.left.layers.empty()) os << "left_layers = " << layers_text(s.left.layers) << "\n";
  if (s.left.substrate != StackDef{}.substrate) os << "left_substrate = " << s.left.substrate << "\n";
  if (!s.right.layers.empty()) os << "right_layers = " << layers_text(s.right.layers) << "\n";
  if (s.right.substrate != StackDef{}.substrate) os << "right_substrate = " << s.right.substrate << "\n";
  os << "\n";

  const auto& w = config.sweep;
  os << "[sweep]\n";
  os << "axis = " << enum_name(w.axis, kSweepAxes) << "\n";
  os << "grid = " << list_text(w.grid) << "\n";
  os << "gap_nm = " << format_number(w.gap_nm) << "\n";
  if (w.series_axis != SeriesAxis::None) {
    os << "series_axis = " << enum_name(w.series_axis, kSeriesAxes) << "\n";
    os << "series_values = " << list_text(w.series_values) << "\n";
  }
  os << "\n";

  const auto& q = config.quadrature;
  os << "[quadrature]\n";
  os << "xi_nodes = " << q.xi_nodes << "\n";
  os << "q_nodes = " << q.q_nodes << "\n";
  os << "xi_mapping = " << enum_name(q.xi_mapping, kMappings) << "\n";
  os << "cutoff_scale = " << format_number(q.cutoff_scale) << "\n";
  os << "target_rel_tol = " << format_number(q.target_rel_tol) << "\n";
  os << "max_nodes = " << q.max_nodes << "\n";
  os << "\n";

  const auto& o = config.output;
  os << "[output]\n";
  if (!o.csv.empty()) os << "csv = " << o.csv << "\n";
  if (!o.svg.empty()) os << "svg = " << o.svg << "\n";
  os << "x_log = " << (o.x_log ? "true" : "false") << "\n";
  os << "y_log = " << (o.y_log ? "true" : "false") << "\n";
  if (!o.title.empty()) os << "title = " << o.title << "\n";
  os << "width_px = " << o.width_px << "\n";
  os << "height_px = " << o.height_px << "\n";
  return os.str();
}

MaterialResolver::MaterialResolver(const RunConfig& config, std::filesystem::path base_dir)
    : config_(config), base_dir_(std::move(base_dir)) {}

materials::DielectricModel MaterialResolver::resolve(const std::string& name) {
  if (name == "vacuum") return materials::DielectricModel::vacuum();
  if (const auto it = cache_.find(name); it != cache_.end()) return it->second;
  const MaterialDef* def = config_.find_material(name);
  if (!def) throw ConfigError("undefined material '" + name + "'");

  materials::DielectricModel model;
  switch (def->kind) {
    case MaterialKind::Vacuum:
      model = materials::DielectricModel::vacuum();
      break;
    case MaterialKind::Drude:
      model = materials::DielectricModel::drude(def->drude);
      break;
    case MaterialKind::Lorentz:
      model = materials::DielectricModel::lorentz(def->oscillators);
      break;
    case MaterialKind::Tabulated: {
      std::filesystem::path path = def->table_path;
      if (path.is_relative()) path = base_dir_ / path;
      std::ifstream in(path);
      if (!in) throw IoError("material '" + name + "': cannot open optical table " + path.string());
      try {
        model = materials::DielectricModel::tabulated(materials::load_optical_table(in, def->table_format), def->kk);
      } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what(), 0);
      }
      break;
    }
    case MaterialKind::Mixed:
      model = materials::DielectricModel::mixed(resolve(def->host), def->porosity, def->rule);
      break;
  }
  cache_.emplace(name, model);
  return model;
}

scenarios::ScenarioSpec resolve_scenario(const RunConfig& config, MaterialResolver& resolver) {
  const auto& s = config.scenario;
  scenarios::ScenarioSpec spec;
  spec.kind = s.kind;
  spec.aerogel_thickness_nm = s.thickness_nm;
  spec.porosity = s.porosity;
  spec.mixing_rule = s.mixing;
  if (!s.silica.empty()) spec.silica_model = resolver.resolve(s.silica);
  if (!s.gold.empty()) {
    const MaterialDef* gold = config.find_material(s.gold);
    if (!gold || gold->kind != MaterialKind::Drude) throw ConfigError("gold material must be a drude model");
    spec.gold_model = gold->drude;
  }
  if (s.kind == ScenarioKind::SiliconReference) spec.reference_model = resolver.resolve(s.reference);
  if (s.kind == ScenarioKind::Custom) {
    auto build = [&](const StackDef& def) {
      if (def.substrate == kIdealMirror) return optics::Stack::ideal_mirror();
      optics::Stack stack = optics::Stack::half_space(resolver.resolve(def.substrate));
      for (const auto& l : def.layers) stack.layers.push_back({l.thickness_nm, resolver.resolve(l.material)});
      return stack;
    };
    lifshitz::GapConfig tmpl;
    tmpl.left = build(s.left);
    tmpl.right = build(s.right);
    tmpl.gap_nm = config.sweep.gap_nm;
    spec.custom_template = std::move(tmpl);
  }
  return spec;
}

std::vector<scenarios::SweepSpec> resolve_sweeps(const RunConfig& config, MaterialResolver& resolver) {
  scenarios::SweepSpec base;
  base.axis = config.sweep.axis;
  base.grid = config.sweep.grid;
  base.gap_nm = config.sweep.gap_nm;
  base.quad = config.quadrature;
  base.fixed = resolve_scenario(config, resolver);

  if (config.sweep.series_axis == SeriesAxis::None) return {base};
  std::vector<scenarios::SweepSpec> out;
  for (double v : config.sweep.series_values) {
    scenarios::SweepSpec s = base;
    if (config.sweep.series_axis == SeriesAxis::Thickness)
      s.fixed.aerogel_thickness_nm = v;
    else
      s.fixed.porosity = v;
    out.push_back(std::move(s));
  }
  return out;
}

std::string series_label(SeriesAxis axis, double value) {
  switch (axis) {
    case SeriesAxis::None:
      return "";
    case SeriesAxis::Thickness:
      return "D=" + format_number(value) + " nm";
    case SeriesAxis::Porosity:
      return "porosity=" + format_number(value);
  }
  return "";
}

}  // namespace casimir::io
