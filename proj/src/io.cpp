#include "superpose/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "superpose/errors.hpp"

namespace superpose {

namespace {

using nlohmann::json;

std::vector<double> real_array_field(const json& j, const char* name, std::size_t want) {
  if (!j.contains(name)) fail(Errc::parse_error, std::string("state json: missing field '") + name + "'");
  const auto& arr = j.at(name);
  if (!arr.is_array()) fail(Errc::parse_error, std::string("state json: field '") + name + "' is not an array");
  if (arr.size() != want) {
    fail(Errc::parse_error, std::string("state json: field '") + name + "' has length " +
                                std::to_string(arr.size()) + ", expected " + std::to_string(want));
  }
  std::vector<double> out;
  out.reserve(want);
  for (const auto& v : arr) {
    if (!v.is_number()) fail(Errc::parse_error, std::string("state json: field '") + name + "' holds a non-number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(Errc::parse_error, std::string("state json: field '") + name + "' holds a non-finite value");
    out.push_back(x);
  }
  return out;
}

}  // namespace

LoadedState parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("state json: ") + e.what());
  }
  if (!j.is_object()) fail(Errc::parse_error, "state json: document is not an object");
  for (const char* name : {"n", "m"}) {
    if (!j.contains(name)) fail(Errc::parse_error, std::string("state json: missing field '") + name + "'");
    if (!j.at(name).is_number_integer() || j.at(name).get<long long>() < 1) {
      fail(Errc::parse_error, std::string("state json: field '") + name + "' must be a positive integer");
    }
  }
  const auto n = j.at("n").get<std::size_t>();
  const auto m = j.at("m").get<std::size_t>();
  const auto re = real_array_field(j, "re", n * m);
  const auto im = real_array_field(j, "im", n * m);

  std::vector<std::complex<double>> amps(n * m);
  double norm_sq = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    amps[k] = {re[k], im[k]};
    norm_sq += re[k] * re[k] + im[k] * im[k];
  }
  if (norm_sq <= 0.0) fail(Errc::parse_error, "state json: all amplitudes are zero");
  return {PureState::from_vector(amps, n, m), std::sqrt(norm_sq)};
}

LoadedState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open state file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_state_json(ss.str());
}

std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_g7(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.7g", x);
  return buf;
}

std::string state_to_json(const PureState& s) {
  std::ostringstream out;
  out << "{\"n\": " << s.n() << ", \"m\": " << s.m() << ", \"re\": [";
  for (std::size_t k = 0; k < s.matrix().size(); ++k) {
    if (k) out << ", ";
    out << fmt_g17(s.matrix().data()[k].real());
  }
  out << "], \"im\": [";
  for (std::size_t k = 0; k < s.matrix().size(); ++k) {
    if (k) out << ", ";
    out << fmt_g17(s.matrix().data()[k].imag());
  }
  out << "]}";
  return out.str();
}

void save_state(const PureState& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write state file: " + path);
  out << state_to_json(s) << "\n";
}

}  // namespace superpose
