#include "thermohf_app/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "thermohf/errors.hpp"
#include "thermohf/lipkin.hpp"

namespace thermohf::app {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::ho:
      return "ho";
    case ModelKind::ising:
      return "ising";
    case ModelKind::lipkin:
      return "lipkin";
  }
  return "ho";
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

ModelKind parse_model(std::string_view text) {
  if (text == "ho") return ModelKind::ho;
  if (text == "ising") return ModelKind::ising;
  if (text == "lipkin") return ModelKind::lipkin;
  throw UsageError("unknown model '" + std::string(text) + "' (expected ho, ising or lipkin)");
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_known_key(std::string_view key) {
  return std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) != std::end(kConfigKeys);
}

double parse_real(std::string_view key, const std::string& text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError("invalid number for '" + std::string(key) + "': '" + text + "'");
  }
  return value;
}

long long parse_integer(std::string_view key, const std::string& text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid integer for '" + std::string(key) + "': '" + text + "'");
  }
  return value;
}

const std::set<std::string_view>& keys_for(ModelKind model) {
  static const std::set<std::string_view> ho{};
  static const std::set<std::string_view> ising{"J", "h", "N", "coupling"};
  static const std::set<std::string_view> lipkin{"N", "epsilon", "V"};
  switch (model) {
    case ModelKind::ising:
      return ising;
    case ModelKind::lipkin:
      return lipkin;
    default:
      return ho;
  }
}

}  // namespace

KeyValues parse_config_text(std::istream& in) {
  KeyValues values;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_number) + ": expected key = value");
    }
    std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (!is_known_key(key)) {
      throw UsageError("config line " + std::to_string(line_number) + ": unknown key '" + key + "'");
    }
    values[key] = value;
  }
  return values;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  return parse_config_text(in);
}

RunConfig defaults_for(ModelKind model) {
  RunConfig c;
  c.model = model;
  switch (model) {
    case ModelKind::ho:
      c.t_min = 0.05;
      c.t_max = 20.0;
      c.t_steps = 200;
      c.grid = GridKind::linear;
      break;
    case ModelKind::ising:
      c.t_min = 0.1;
      c.t_max = 30.0;
      c.t_steps = 200;
      c.grid = GridKind::linear;
      c.coupling_j = 2.0;
      c.field_h = 1.0;
      c.n = 10;
      break;
    case ModelKind::lipkin:
      c.t_min = 0.1;
      c.t_max = 100.0;
      c.t_steps = 200;
      c.grid = GridKind::geometric;
      c.n = 10;
      c.epsilon = 1.0;
      c.v_coupling = 3.0;
      break;
  }
  return c;
}

RunConfig resolve_run_config(const KeyValues& flags, const KeyValues& file) {
  KeyValues merged = file;
  for (const auto& [key, value] : flags) merged[key] = value;
  for (const auto& [key, value] : merged) {
    if (!is_known_key(key)) throw UsageError("unknown key '" + key + "'");
  }

  const auto model_it = merged.find("model");
  if (model_it == merged.end()) throw UsageError("no model given (use --model ho|ising|lipkin)");
  RunConfig c = defaults_for(parse_model(model_it->second));

  const auto& model_keys = keys_for(c.model);
  for (const auto& [key, value] : merged) {
    if (key == "model") continue;
    if (key == "t-min") {
      c.t_min = parse_real(key, value);
    } else if (key == "t-max") {
      c.t_max = parse_real(key, value);
    } else if (key == "t-steps") {
      const auto steps = parse_integer(key, value);
      if (steps < 2) throw UsageError("t-steps must be at least 2");
      c.t_steps = static_cast<std::size_t>(steps);
    } else if (key == "grid") {
      const auto grid = parse_grid_kind(value);
      if (!grid) throw UsageError("grid must be linear or geometric");
      c.grid = *grid;
    } else if (key == "lambda-step") {
      c.diff.relative_step = parse_real(key, value);
    } else if (key == "richardson") {
      c.diff.richardson_levels = static_cast<int>(parse_integer(key, value));
    } else if (key == "format") {
      if (value == "csv") {
        c.format = OutputFormat::csv;
      } else if (value == "json") {
        c.format = OutputFormat::json;
      } else {
        throw UsageError("format must be csv or json");
      }
    } else if (key == "out") {
      c.out = value;
    } else if (!model_keys.contains(key)) {
      throw UsageError("'" + key + "' does not apply to model " + std::string(to_string(c.model)));
    } else if (key == "J") {
      c.coupling_j = parse_real(key, value);
    } else if (key == "h") {
      c.field_h = parse_real(key, value);
    } else if (key == "N") {
      const auto n = parse_integer(key, value);
      if (n < 1 || n > 1'000'000) throw UsageError("N out of range");
      c.n = static_cast<int>(n);
    } else if (key == "epsilon") {
      c.epsilon = parse_real(key, value);
    } else if (key == "V") {
      c.v_coupling = parse_real(key, value);
    } else if (key == "coupling") {
      if (value == "bond") {
        c.coupling = ising::Coupling::bond;
      } else if (value == "field") {
        c.coupling = ising::Coupling::field;
      } else {
        throw UsageError("coupling must be bond or field");
      }
    }
  }

  if (!(c.t_min > 0.0 && c.t_min < c.t_max)) throw UsageError("need 0 < t-min < t-max");
  try {
    c.diff.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (c.model == ModelKind::ising && c.n < 2) throw UsageError("ising needs N >= 2");
  if (c.model == ModelKind::lipkin) {
    if (c.n > lipkin::kMaxParticlesForMultiplicity) throw UsageError("lipkin supports N <= 64");
    if (!(c.epsilon > 0.0)) throw UsageError("epsilon must be > 0");
  }
  return c;
}

}  // namespace thermohf::app
