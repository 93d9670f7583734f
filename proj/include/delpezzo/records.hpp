#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "delpezzo/surface_point.hpp"

namespace delpezzo {

// Canonical surface descriptors. Parameter names in each are the keys a
// PointRecord must carry.
namespace surfaces {
inline constexpr const char* kQuintic = "x^2-y^3-(z^5+a*z^3+b*z^2+c*z+d)=0";
inline constexpr const char* kRationalDoubleRoot = "x^2-y^3-z^2*(z^3+a*z^2+b*z+c)=0";
inline constexpr const char* kIrrationalDoubleRoot = "x^2-y^3-(z^2+a)^2*(z+b)=0";
inline constexpr const char* kQuinticSextic = "x^2+a*y^5-z^6=b";
inline constexpr const char* kWeightedTernary = "a*x^2+b*y^3+c*z^5=d";
inline constexpr const char* kLinearPerturbed = "x^2+a*y^5+b*y-(z^6+c*z)=d";
}  // namespace surfaces

struct Provenance {
  std::string generator;
  std::string seed;
  std::string branch;
  long m = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// One persisted point. Self-verifying: the surface and params determine the
// equation, which record_residual re-evaluates exactly.
struct PointRecord {
  std::string surface;
  std::map<std::string, Rational> params;
  SurfacePoint point;
  Provenance provenance;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

// Left side minus right side of the record's surface equation at its point.
// Throws DomainError for unknown surfaces or missing parameters.
Rational record_residual(const PointRecord& record);
bool verify_record(const PointRecord& record);

// {"surface": str, "params": {str: str}, "point": {"x","y","z"},
//  "provenance": {"generator", "seed", "branch", "m"}}; rationals as "num/den".
nlohmann::ordered_json to_json(const PointRecord& record);
// Throws ParseError on schema violations.
PointRecord record_from_json(const nlohmann::ordered_json& j);

std::string to_jsonl_line(const PointRecord& record);
PointRecord parse_jsonl_line(const std::string& line);
// Skips blank lines. Throws ParseError naming the offending line number.
std::vector<PointRecord> read_jsonl(std::istream& in);
void append_jsonl(const std::filesystem::path& path, const std::vector<PointRecord>& records);

}  // namespace delpezzo
