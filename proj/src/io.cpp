#include "relloc/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace relloc {

namespace {

using nlohmann::json;

double number_field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) throw std::invalid_argument(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

template <std::size_t N>
std::array<double, N> array_field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != N)
    throw std::invalid_argument(std::string("field \"") + key + "\" must be an array of " + std::to_string(N) +
                                " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!v[i].is_number())
      throw std::invalid_argument(std::string("field \"") + key + "\" must contain only numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

}  // namespace

SystemState system_state_from_json(const json& j, std::optional<double> c_override) {
  if (!j.is_object()) throw std::invalid_argument("state must be a JSON object");
  const double c = c_override ? *c_override : (j.contains("c") ? number_field(j, "c") : 1.0);
  ElementarySystem sys(number_field(j, "m"), j.contains("S") ? number_field(j, "S") : 0.0, c);
  State st;
  st.x = array_field<3>(j, "x");
  st.p = array_field<3>(j, "p");
  if (j.contains("s_hat") && !j.at("s_hat").is_null()) st.s_hat = array_field<3>(j, "s_hat");
  validate(sys, st);
  return {sys, st};
}

json to_json(const ElementarySystem& sys, const State& state) {
  json j;
  j["schema"] = kSchema;
  j["m"] = sys.m();
  j["S"] = sys.spin();
  j["c"] = sys.c();
  j["x"] = state.x;
  j["p"] = state.p;
  if (state.s_hat) j["s_hat"] = *state.s_hat;
  return j;
}

PoincareTransform poincare_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lambda")) throw std::invalid_argument("transform needs \"lambda\"");
  const json& l = j.at("lambda");
  if (!l.is_array() || l.size() != 4) throw std::invalid_argument("\"lambda\" must be a 4x4 array");
  Mat4 m{};
  for (std::size_t r = 0; r < 4; ++r) {
    if (!l[r].is_array() || l[r].size() != 4) throw std::invalid_argument("\"lambda\" must be a 4x4 array");
    for (std::size_t col = 0; col < 4; ++col) m[r][col] = l[r][col].get<double>();
  }
  PoincareTransform g;
  g.lambda = LorentzTransform::from_matrix(m);
  g.a = j.contains("a") ? FourVector(array_field<4>(j, "a")) : FourVector{};
  return g;
}

json to_json(const PoincareTransform& g) {
  json j;
  j["lambda"] = g.lambda.matrix();
  j["a"] = g.a.c;
  return j;
}

Hyperplane hyperplane_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("hyperplane must be a JSON object");
  return Hyperplane(FourVector(array_field<4>(j, "u")), j.contains("tau") ? number_field(j, "tau") : 0.0);
}

json to_json(const Hyperplane& sigma) {
  json j;
  j["u"] = sigma.u().c;
  j["tau"] = sigma.tau();
  return j;
}

json to_json(const FourVector& v) { return v.c; }

json to_json(const MomentumValue& mv) {
  json j;
  j["P"] = mv.p.components();
  json rows = json::array();
  for (int mu = 0; mu < 4; ++mu) {
    json row = json::array();
    for (int nu = 0; nu < 4; ++nu) row.push_back(mv.j({mu, nu}));
    rows.push_back(row);
  }
  j["J"] = rows;
  return j;
}

json to_json(const MollerDisc& disc) {
  json j;
  j["schema"] = kSchema;
  j["centre"] = disc.centre.c;
  j["radius"] = disc.radius;
  j["normal"] = disc.normal.c;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace relloc
