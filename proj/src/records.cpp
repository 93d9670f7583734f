#include "delpezzo/records.hpp"

#include <fstream>
#include <string_view>

#include "delpezzo/construction.hpp"
#include "delpezzo/degenerate.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/identities.hpp"

namespace delpezzo {

namespace {

const Rational& param(const PointRecord& r, const std::string& name) {
  const auto it = r.params.find(name);
  if (it == r.params.end()) {
    throw DomainError("record for '" + r.surface + "' lacks parameter '" + name + "'");
  }
  return it->second;
}

const nlohmann::ordered_json& field(const nlohmann::ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("record lacks field '") + key + "'");
  return j.at(key);
}

Rational rational_field(const nlohmann::ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return Rational::parse(v.get<std::string>());
}

std::string string_field(const nlohmann::ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Rational record_residual(const PointRecord& r) {
  const std::string_view s = r.surface;
  const SurfacePoint& p = r.point;
  if (s == surfaces::kQuintic) {
    return surface_residual(QuinticCoeffs{param(r, "a"), param(r, "b"), param(r, "c"), param(r, "d")}, p);
  }
  if (s == surfaces::kRationalDoubleRoot) {
    return surface_residual(RationalDoubleRootQuintic{param(r, "a"), param(r, "b"), param(r, "c")}, p);
  }
  if (s == surfaces::kIrrationalDoubleRoot) {
    return surface_residual(IrrationalDoubleRootQuintic{param(r, "a"), param(r, "b")}, p);
  }
  if (s == surfaces::kQuinticSextic) {
    return thm2_residual(QuinticSexticParams{param(r, "a"), param(r, "b"), Rational(1)}, p);
  }
  if (s == surfaces::kWeightedTernary) {
    return cor3_residual(WeightedTernaryParams{param(r, "a"), param(r, "b"), param(r, "c"), param(r, "d")}, p);
  }
  if (s == surfaces::kLinearPerturbed) {
    return cor4_residual(
        LinearPerturbedParams{param(r, "a"), param(r, "b"), param(r, "c"), param(r, "d"), Rational(1)}, p);
  }
  throw DomainError("unknown surface '" + r.surface + "'");
}

bool verify_record(const PointRecord& record) { return record_residual(record).is_zero(); }

nlohmann::ordered_json to_json(const PointRecord& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value.str();
  nlohmann::ordered_json j;
  j["surface"] = r.surface;
  j["params"] = std::move(params);
  j["point"] = {{"x", r.point.x.str()}, {"y", r.point.y.str()}, {"z", r.point.z.str()}};
  j["provenance"] = {{"generator", r.provenance.generator},
                     {"seed", r.provenance.seed},
                     {"branch", r.provenance.branch},
                     {"m", r.provenance.m}};
  return j;
}

PointRecord record_from_json(const nlohmann::ordered_json& j) {
  PointRecord r;
  r.surface = string_field(j, "surface");
  const auto& params = field(j, "params");
  if (!params.is_object()) throw ParseError("field 'params' must be an object");
  for (const auto& [name, value] : params.items()) {
    if (!value.is_string()) throw ParseError("parameter '" + name + "' must be a string");
    r.params[name] = Rational::parse(value.get<std::string>());
  }
  const auto& point = field(j, "point");
  r.point = {rational_field(point, "x"), rational_field(point, "y"), rational_field(point, "z")};
  const auto& prov = field(j, "provenance");
  r.provenance.generator = string_field(prov, "generator");
  r.provenance.seed = string_field(prov, "seed");
  r.provenance.branch = string_field(prov, "branch");
  const auto& m = field(prov, "m");
  if (!m.is_number_integer()) throw ParseError("field 'm' must be an integer");
  r.provenance.m = m.get<long>();
  return r;
}

std::string to_jsonl_line(const PointRecord& record) { return to_json(record).dump(); }

PointRecord parse_jsonl_line(const std::string& line) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return record_from_json(j);
}

std::vector<PointRecord> read_jsonl(std::istream& in) {
  std::vector<PointRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_jsonl_line(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void append_jsonl(const std::filesystem::path& path, const std::vector<PointRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw DomainError("cannot open '" + path.string() + "' for appending");
  for (const auto& r : records) out << to_jsonl_line(r) << '\n';
}

}  // namespace delpezzo
