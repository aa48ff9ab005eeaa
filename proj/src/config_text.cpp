#include "allocrate/config_text.hpp"

#include <sstream>
#include <stdexcept>

#include "allocrate/csv.hpp"

namespace allocrate {

namespace {

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
  }
  if (used != value.size()) {
    throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: " + key + " expects a number, got '" + value + "'");
  }
  if (used != value.size()) {
    throw std::invalid_argument("config: " + key + " expects a number, got '" + value + "'");
  }
  return out;
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
  std::optional<int> n, m, alpha, k, r;
  std::optional<double> p, mu, delta;
  std::optional<std::string> access, service;

  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= token.size()) {
      throw std::invalid_argument("config: expected key=value, got '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "N") {
      n = parse_int(key, value);
    } else if (key == "m") {
      m = parse_int(key, value);
    } else if (key == "alpha") {
      alpha = parse_int(key, value);
    } else if (key == "k") {
      k = parse_int(key, value);
    } else if (key == "r") {
      r = parse_int(key, value);
    } else if (key == "p") {
      p = parse_real(key, value);
    } else if (key == "mu") {
      mu = parse_real(key, value);
    } else if (key == "delta") {
      delta = parse_real(key, value);
    } else if (key == "access") {
      if (value != "fixed" && value != "prob") {
        throw std::invalid_argument("config: access must be fixed or prob, got '" + value + "'");
      }
      access = value;
    } else if (key == "service") {
      if (value != "scaled" && value != "shifted") {
        throw std::invalid_argument("config: service must be scaled or shifted, got '" + value +
                                    "'");
      }
      service = value;
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  if (!n) throw std::invalid_argument("config: missing N");
  if (!m) throw std::invalid_argument("config: missing m");
  if (!alpha) throw std::invalid_argument("config: missing alpha");
  if (!access) throw std::invalid_argument("config: missing access");

  ParsedConfig parsed;
  parsed.config = SystemConfig{*n, *m, *alpha, k};
  if (*access == "fixed") {
    if (!r) throw std::invalid_argument("config: access=fixed requires r");
    if (p) throw std::invalid_argument("config: access=fixed does not take p");
    parsed.access = FixedSizeAccess{*r};
  } else {
    if (!p) throw std::invalid_argument("config: access=prob requires p");
    if (r) throw std::invalid_argument("config: access=prob does not take r");
    parsed.access = ProbabilisticAccess{*p};
  }

  if (service) {
    if (*service == "scaled") {
      if (delta) throw std::invalid_argument("config: service=scaled does not take delta");
      parsed.service = ScaledExponential{mu.value_or(kDefaultServiceRate)};
    } else {
      parsed.service = ShiftedExponential{mu.value_or(kDefaultServiceRate),
                                          delta.value_or(kDefaultShift)};
    }
  } else if (mu || delta) {
    throw std::invalid_argument("config: mu/delta require a service key");
  }
  return parsed;
}

std::string config_text(const SystemConfig& config, const AccessModel& access,
                        const std::optional<ServiceModel>& service) {
  std::ostringstream out;
  out << "N=" << config.nodes << " m=" << config.redundancy << " alpha=" << config.spreading;
  if (config.file_blocks) out << " k=" << *config.file_blocks;
  if (const auto* fixed = std::get_if<FixedSizeAccess>(&access)) {
    out << " access=fixed r=" << fixed->subset_size;
  } else {
    out << " access=prob p=" << format_value(std::get<ProbabilisticAccess>(access).failure_prob);
  }
  if (service) {
    if (const auto* scaled = std::get_if<ScaledExponential>(&*service)) {
      out << " service=scaled mu=" << format_value(scaled->rate);
    } else {
      const auto& shifted = std::get<ShiftedExponential>(*service);
      out << " service=shifted mu=" << format_value(shifted.rate)
          << " delta=" << format_value(shifted.shift);
    }
  }
  return out.str();
}

}  // namespace allocrate
