#include "thermohf_app/output.hpp"

#include <array>
#include <charconv>
#include <json.hpp>

namespace thermohf::app {

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                       std::chars_format::general, 17);
  return ec == std::errc() ? std::string(buffer.data(), ptr) : std::string("nan");
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.temperature) << ',' << format_double(r.energy) << ',' << format_double(r.free_energy)
        << ',' << format_double(r.entropy) << ',' << format_double(r.df_dlambda) << ','
        << format_double(r.de_dlambda) << ',' << format_double(r.ds_dlambda) << ',';
    if (r.h1_direct) out << format_double(*r.h1_direct);
    out << '\n';
  }
}

void write_json(std::ostream& out, std::span<const SweepRow> rows, const RunConfig& c) {
  nlohmann::ordered_json config;
  config["model"] = to_string(c.model);
  config["t-min"] = c.t_min;
  config["t-max"] = c.t_max;
  config["t-steps"] = c.t_steps;
  config["grid"] = to_string(c.grid);
  config["lambda-step"] = c.diff.relative_step;
  config["richardson"] = c.diff.richardson_levels;
  switch (c.model) {
    case ModelKind::ho:
      break;
    case ModelKind::ising:
      config["J"] = c.coupling_j;
      config["h"] = c.field_h;
      config["N"] = c.n;
      config["coupling"] = c.coupling == ising::Coupling::bond ? "bond" : "field";
      break;
    case ModelKind::lipkin:
      config["N"] = c.n;
      config["epsilon"] = c.epsilon;
      config["V"] = c.v_coupling;
      break;
  }

  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["T"] = r.temperature;
    row["E"] = r.energy;
    row["F"] = r.free_energy;
    row["S"] = r.entropy;
    row["dF_dlambda"] = r.df_dlambda;
    row["dE_dlambda"] = r.de_dlambda;
    row["dS_dlambda"] = r.ds_dlambda;
    row["H1_direct"] = r.h1_direct ? nlohmann::ordered_json(*r.h1_direct) : nlohmann::ordered_json(nullptr);
    array.push_back(std::move(row));
  }

  nlohmann::ordered_json doc;
  doc["config"] = std::move(config);
  doc["rows"] = std::move(array);
  out << doc.dump(2) << '\n';
}

}  // namespace thermohf::app
