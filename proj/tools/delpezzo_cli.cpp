// delpezzo: command-line front end. Every rational goes in and out as a
// "num/den" string; exit codes are 0 ok, 1 bad input, 2 singular auxiliary
// curve, 3 no seed point, 4 identity/verification failure, 5 degenerate fiber
// or parametrization pole.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "delpezzo/construction.hpp"
#include "delpezzo/degenerate.hpp"
#include "delpezzo/elliptic.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/identities.hpp"
#include "delpezzo/records.hpp"

using namespace delpezzo;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInput = 1, kSingular = 2, kNoSeed = 3, kIdentity = 4, kDegenerate = 5 };

Rational arg(const std::string& text) { return Rational::parse(text); }

Json strings(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Verifies before printing, and appends to the cache when one is given.
int emit_records(const std::vector<PointRecord>& records, const std::string& cache) {
  for (const auto& r : records) {
    if (!verify_record(r)) {
      std::cerr << "error: record failed re-verification: " << to_jsonl_line(r) << '\n';
      return kIdentity;
    }
  }
  for (const auto& r : records) std::cout << to_jsonl_line(r) << '\n';
  if (!cache.empty()) append_jsonl(cache, records);
  return kOk;
}

std::map<std::string, Rational> quintic_params(const QuinticCoeffs& f) {
  return {{"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d}};
}

std::optional<CurvePoint> seed_arg(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return CurvePoint::parse(text);
}

BranchPolicy policy_arg(const std::string& name) {
  if (name == "plus") return BranchPolicy::Plus;
  if (name == "minus") return BranchPolicy::Minus;
  if (name == "both") return BranchPolicy::Both;
  return BranchPolicy::PlusThenMinus;
}

Branch branch_arg(const std::string& name) { return name == "minus" ? Branch::Minus : Branch::Plus; }

long bound_or_default(long bound) { return bound > 0 ? bound : default_search_bound(); }

[[noreturn]] void singular_hint(const Rational& a, const Rational& b) {
  const auto t = singular_parameter(a, b);
  std::string hint = t ? " (t = " + t->str() + "; see `delpezzo singular " + t->str() + "`)" : "";
  throw SingularAuxiliary("E_{a,b} is singular" + hint);
}

// --- curve -----------------------------------------------------------------

struct CurveArgs {
  std::string a, b;
  long bound = 0;
};

int run_curve(const CurveArgs& in) {
  const Rational a = arg(in.a), b = arg(in.b);
  const WeierstrassCurve E = auxiliary_curve(a, b);
  if (E.is_singular()) singular_hint(a, b);
  const long bound = bound_or_default(in.bound);
  Json points = Json::array();
  for (const auto& p : search_points(E, bound)) {
    points.push_back({{"X", p.x().str()}, {"Y", p.y().str()}, {"torsion", is_torsion(E, p)}});
  }
  emit({{"a", a.str()},
        {"b", b.str()},
        {"A", E.A.str()},
        {"B", E.B.str()},
        {"discriminant", E.discriminant().str()},
        {"bound", bound},
        {"points", std::move(points)}});
  return kOk;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string f;
  long count = 10;
  std::string branch = "auto";
  std::string seed;
  long bound = 0;
  std::string cache;
};

int run_generate(const GenerateArgs& in) {
  const QuinticCoeffs f = QuinticCoeffs::parse(in.f);
  if (auxiliary_curve(f.a, f.b).is_singular()) singular_hint(f.a, f.b);
  GenerateOptions opts;
  opts.seed = seed_arg(in.seed);
  opts.policy = policy_arg(in.branch);
  opts.search_bound = in.bound;
  const GenerationReport rep = generate_surface_points(f, in.count, opts);

  std::vector<PointRecord> records;
  for (const auto& g : rep.points) {
    records.push_back({surfaces::kQuintic, quintic_params(f), g.point,
                       Provenance{"lift", rep.seed.str(), to_string(g.branch), g.multiplier}});
  }
  std::cerr << "seed " << rep.seed.str() << ": " << rep.points.size() << " points from " << rep.attempts
            << " attempts (" << rep.degenerate_fibers << " degenerate fibers skipped, " << rep.duplicates
            << " duplicates)\n";
  return emit_records(records, in.cache);
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  bool all = false, theorem2 = false, corollary3 = false, sections = false, json_only = false;
  std::uint64_t seed = 20240607;
};

std::vector<IdentityCheck> section_checks(std::uint64_t seed) {
  std::vector<IdentityCheck> out;

  // The worked example: a' = b' = c' = 0 at t = 1.
  {
    const RationalDoubleRootQuintic zero{Rational(0), Rational(0), Rational(0)};
    const SurfacePoint p = section(zero).at(Rational(1));
    const bool ok = p == SurfacePoint{Rational(-47, 1728), Rational(13, 144), Rational(1, 12)} &&
                    p.x * p.x - p.y.pow(3) == Rational(1, 248832) && surface_residual(zero, p).is_zero();
    out.push_back({"section_worked_example", ok, 0, "(0,0,0) at t = 1 gives (-47/1728, 13/144, 1/12)"});
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-20, 20);
  IdentityCheck rational{"section_rational_double_root", true, 20, "zero residual in Q(t), psi = -f0/f1"};
  for (int i = 0; i < 20 && rational.passed; ++i) {
    const RationalDoubleRootQuintic f{Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng))};
    try {
      rational.passed = psi(f) == psi_from_system(f) && is_identically_zero(section_residual(f, section(f)));
    } catch (const IdentityFailure& e) {
      rational.passed = false;
      rational.detail = e.what();
    }
  }
  out.push_back(rational);

  IdentityCheck irrational{"genus0_irrational_double_root", true, 20,
                           "X^2 = u^6 Z^2 + Z + a' u^6 + b' after clearing (2u^3 t - 1)^2"};
  for (int i = 0; i < 20 && irrational.passed; ++i) {
    long a1 = coeff(rng);
    if (a1 == 0) a1 = 1;
    irrational.passed = is_identically_zero(genus0_residual({Rational(a1), Rational(coeff(rng))}));
  }
  out.push_back(irrational);
  return out;
}

int run_verify(const VerifyArgs& in) {
  const bool all = in.all || !(in.theorem2 || in.corollary3 || in.sections);
  std::vector<IdentityCheck> checks;
  if (all || in.theorem2 || in.corollary3) {
    for (auto& c : verify_printed_identities(in.seed)) {
      const bool thm2 = c.name.rfind("theorem2", 0) == 0;
      if (all || (thm2 && in.theorem2) || (!thm2 && in.corollary3)) checks.push_back(std::move(c));
    }
  }
  if (all || in.sections) {
    for (auto& c : section_checks(in.seed)) checks.push_back(std::move(c));
  }

  bool passed = true;
  Json summary = Json::array();
  for (const auto& c : checks) {
    passed = passed && c.passed;
    if (!in.json_only) {
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
      if (c.samples > 0) std::cout << " (" << c.samples << " samples)";
      std::cout << "  " << c.detail << '\n';
    }
    summary.push_back({{"name", c.name}, {"passed", c.passed}, {"samples", c.samples}, {"detail", c.detail}});
  }
  std::cout << Json{{"passed", passed}, {"checks", std::move(summary)}}.dump() << '\n';
  return passed ? kOk : kIdentity;
}

// --- torsion ---------------------------------------------------------------

int run_torsion(const std::string& k_text) {
  const TorsionClass tc = torsion_of_mordell(arg(k_text));
  Json witnesses = Json::array();
  for (const auto& w : tc.witnesses) witnesses.push_back({{"X", w.x().str()}, {"Y", w.y().str()}});
  emit({{"k", tc.k.str()},
        {"reduced_k", tc.reduced_k.str()},
        {"group", "Z/" + std::to_string(order(tc.tag))},
        {"tag", to_string(tc.tag)},
        {"order", order(tc.tag)},
        {"witnesses", std::move(witnesses)}});
  return kOk;
}

// --- polysol ---------------------------------------------------------------

struct PolysolArgs {
  std::string f;
  std::string branch = "plus";
  std::string seed;
  long bound = 0;
};

int run_polysol(const PolysolArgs& in) {
  const QuinticCoeffs f = QuinticCoeffs::parse(in.f);
  const WeierstrassCurve E = auxiliary_curve(f.a, f.b);
  if (E.is_singular()) singular_hint(f.a, f.b);
  CurvePoint seed;
  if (auto s = seed_arg(in.seed)) {
    seed = *s;
  } else {
    seed = find_seed_point(E, bound_or_default(in.bound));
  }
  const Branch br = branch_arg(in.branch);
  const PolySolution sol = polynomial_solution(f, seed, br);
  if (polynomial_residual(f, sol) != Poly::identity()) throw IdentityFailure("x^2 - y^3 - f(z) != t");
  emit({{"f", f.str()},
        {"seed", seed.str()},
        {"branch", to_string(br)},
        {"x", strings(sol.x)},
        {"y", strings(sol.y)},
        {"z", strings(sol.z)},
        {"residual", "t"}});
  return kOk;
}

// --- special ---------------------------------------------------------------

struct SpecialArgs {
  std::string a = "1", b = "0", c = "0", d = "0", u = "1", t = "1";
  std::string cache;
};

PointRecord special_record(const std::string& which, const SpecialArgs& in) {
  if (which == "thm2") {
    const QuinticSexticParams p{arg(in.a), arg(in.b), arg(in.u)};
    // The record's surface has no u, which is provenance only.
    return {surfaces::kQuinticSextic, {{"a", p.a}, {"b", p.b}}, thm2_point(p), {"thm2", "u=" + p.u.str(), "", 0}};
  }
  if (which == "cor3") {
    const WeightedTernaryParams p{arg(in.a), arg(in.b), arg(in.c), arg(in.d)};
    return {surfaces::kWeightedTernary,
            {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}},
            cor3_point(p),
            {"cor3", "15,90", "plus", 1}};
  }
  if (which == "cor4") {
    const LinearPerturbedParams p{arg(in.a), arg(in.b), arg(in.c), arg(in.d), arg(in.u)};
    return {surfaces::kLinearPerturbed,
            {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}},
            cor4_point(p),
            {"cor4", "u=" + p.u.str(), "", 0}};
  }
  if (which == "section") {
    const RationalDoubleRootQuintic f{arg(in.a), arg(in.b), arg(in.c)};
    const Rational t = arg(in.t);
    return {surfaces::kRationalDoubleRoot,
            {{"a", f.a1}, {"b", f.b1}, {"c", f.c1}},
            section(f).at(t),
            {"section", "t=" + t.str(), "", 0}};
  }
  // genus0
  const IrrationalDoubleRootQuintic f{arg(in.a), arg(in.b)};
  const Rational t = arg(in.t), u = arg(in.u);
  return {surfaces::kIrrationalDoubleRoot,
          {{"a", f.a1}, {"b", f.b1}},
          genus0_param(f, t, u),
          {"genus0", "t=" + t.str() + ",u=" + u.str(), "", 0}};
}

// --- singular --------------------------------------------------------------

struct SingularArgs {
  std::string t;
  std::vector<std::string> U;
  std::string c, d;
  std::string branch = "plus";
  std::string cache;
};

int run_singular(const SingularArgs& in) {
  const SingularFamily fam = singular_family(arg(in.t));
  if (!in.c.empty() || !in.d.empty()) {
    const QuinticCoeffs f{fam.a, fam.b, in.c.empty() ? Rational() : arg(in.c), in.d.empty() ? Rational() : arg(in.d)};
    std::vector<PointRecord> records;
    for (const auto& u_text : in.U) {
      const Rational U = arg(u_text);
      records.push_back({surfaces::kQuintic, quintic_params(f), lift_singular_point(f, U, branch_arg(in.branch)),
                         {"singular", singular_param_point(fam.t, U).str(), in.branch, 0}});
    }
    return emit_records(records, in.cache);
  }
  Json points = Json::array();
  for (const auto& u_text : in.U) {
    const CurvePoint p = singular_param_point(fam.t, arg(u_text));
    if (!on_curve(fam.curve, p)) throw IdentityFailure("parametrized point off the curve");
    points.push_back({{"U", arg(u_text).str()}, {"X", p.x().str()}, {"Y", p.y().str()}});
  }
  emit({{"t", fam.t.str()},
        {"a", fam.a.str()},
        {"b", fam.b.str()},
        {"A", fam.curve.A.str()},
        {"B", fam.curve.B.str()},
        {"discriminant", fam.curve.discriminant().str()},
        {"points", std::move(points)}});
  return kOk;
}

// --- recheck ---------------------------------------------------------------

int run_recheck(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  const auto records = read_jsonl(file);
  Json failed = Json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!verify_record(records[i])) failed.push_back(i);
  }
  emit({{"records", records.size()}, {"verified", records.size() - failed.size()}, {"failed", failed}});
  return failed.empty() ? kOk : kIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points on x^2 - y^3 = f(z) and related surfaces"};
  app.require_subcommand(1);
  std::function<int()> action;

  CurveArgs curve;
  auto* c = app.add_subcommand("curve", "Auxiliary curve E_{a,b} and its small points");
  c->add_option("a", curve.a)->required();
  c->add_option("b", curve.b)->required();
  c->add_option("--bound", curve.bound, "Height bound (default DP_SEARCH_BOUND or 10000)");
  c->callback([&] { action = [&] { return run_curve(curve); }; });

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Stream verified points of x^2 - y^3 = f(z) as JSONL");
  g->add_option("f", gen.f, "Quintic z^5 + a z^3 + b z^2 + c z + d")->required();
  g->add_option("--count", gen.count, "Multiples m = 1..count of the seed");
  g->add_option("--branch", gen.branch, "plus, minus, both, or auto (minus only where plus degenerates)")
      ->check(CLI::IsMember({"plus", "minus", "both", "auto"}));
  g->add_option("--seed-point", gen.seed, "Seed \"X,Y\" on E_{a,b}; searched for when omitted");
  g->add_option("--bound", gen.bound, "Height bound for the seed search");
  g->add_option("--cache", gen.cache, "Append records to this JSONL file");
  g->callback([&] { action = [&] { return run_generate(gen); }; });

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Re-derive the printed identities and sections exactly");
  v->add_flag("--all", ver.all);
  v->add_flag("--theorem2", ver.theorem2);
  v->add_flag("--corollary3", ver.corollary3);
  v->add_flag("--sections", ver.sections);
  v->add_flag("--json", ver.json_only, "Only print the JSON summary");
  v->add_option("--rng-seed", ver.seed);
  v->callback([&] { action = [&] { return run_verify(ver); }; });

  std::string k;
  auto* t = app.add_subcommand("torsion", "Torsion subgroup of Y^2 = X^3 + k");
  t->add_option("k", k)->required();
  t->callback([&] { action = [&] { return run_torsion(k); }; });

  PolysolArgs pol;
  auto* p = app.add_subcommand("polysol", "Polynomial solution with x^2 - y^3 - f(z) = t");
  p->add_option("f", pol.f)->required();
  p->add_option("--branch", pol.branch)->check(CLI::IsMember({"plus", "minus"}));
  p->add_option("--seed-point", pol.seed);
  p->add_option("--bound", pol.bound);
  p->callback([&] { action = [&] { return run_polysol(pol); }; });

  SpecialArgs spec;
  std::string which;
  auto* s = app.add_subcommand("special", "Points on the special surfaces");
  s->add_option("surface", which, "thm2, cor3, cor4, section or genus0")
      ->required()
      ->check(CLI::IsMember({"thm2", "cor3", "cor4", "section", "genus0"}));
  s->add_option("--a", spec.a);
  s->add_option("--b", spec.b);
  s->add_option("--c", spec.c);
  s->add_option("--d", spec.d);
  s->add_option("--u", spec.u);
  s->add_option("--t", spec.t);
  s->add_option("--cache", spec.cache);
  s->callback([&] { action = [&] { return emit_records({special_record(which, spec)}, spec.cache); }; });

  SingularArgs sing;
  auto* sg = app.add_subcommand("singular", "Singular member of the auxiliary family at parameter t");
  sg->add_option("t", sing.t)->required();
  sg->add_option("--U", sing.U, "Curve parameters to evaluate or lift");
  sg->add_option("--c", sing.c, "With --c/--d, lift onto z^5 + a z^3 + b z^2 + c z + d");
  sg->add_option("--d", sing.d);
  sg->add_option("--branch", sing.branch)->check(CLI::IsMember({"plus", "minus"}));
  sg->add_option("--cache", sing.cache);
  sg->callback([&] { action = [&] { return run_singular(sing); }; });

  std::string file;
  auto* r = app.add_subcommand("recheck", "Re-verify every record of a JSONL file");
  r->add_option("file", file)->required();
  r->callback([&] { action = [&] { return run_recheck(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const SingularAuxiliary& e) {
    std::cerr << "singular: " << e.what() << '\n';
    return kSingular;
  } catch (const NoSeedPoint& e) {
    std::cerr << "no seed point: " << e.what() << '\n';
    return kNoSeed;
  } catch (const IdentityFailure& e) {
    std::cerr << "identity failure: " << e.what() << '\n';
    return kIdentity;
  } catch (const DegenerateFiber& e) {
    std::cerr << "degenerate fiber: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ParamPole& e) {
    std::cerr << "pole: " << e.what() << '\n';
    return kDegenerate;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInput;
  }
}
