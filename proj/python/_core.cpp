#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "delpezzo/construction.hpp"
#include "delpezzo/degenerate.hpp"
#include "delpezzo/elliptic.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/identities.hpp"
#include "delpezzo/records.hpp"

namespace py = pybind11;
using namespace delpezzo;

// Rational <-> fractions.Fraction. Accepts int, Fraction and "p/q" strings.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    try {
      if (py::isinstance<py::str>(src)) {
        value = Rational::parse(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
        const std::string num = py::str(src.attr("numerator"));
        const std::string den = py::str(src.attr("denominator"));
        value = Rational(mpz_class(num), mpz_class(den));
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.num().get_str())), py::int_(py::str(r.den().get_str()))).release();
  }
};
}  // namespace pybind11::detail

namespace {

using Pair = std::tuple<Rational, Rational>;
using Triple = std::tuple<Rational, Rational, Rational>;

Triple triple(const SurfacePoint& p) { return {p.x, p.y, p.z}; }
CurvePoint point(const Pair& p) { return {std::get<0>(p), std::get<1>(p)}; }
std::optional<Pair> pair(const CurvePoint& p) {
  if (p.is_infinity()) return std::nullopt;
  return Pair{p.x(), p.y()};
}

Branch branch(const std::string& name) {
  if (name == "plus") return Branch::Plus;
  if (name == "minus") return Branch::Minus;
  throw DomainError("branch must be 'plus' or 'minus'");
}

QuinticCoeffs quintic(const py::object& f) {
  if (py::isinstance<py::str>(f)) return QuinticCoeffs::parse(f.cast<std::string>());
  const auto c = f.cast<std::tuple<Rational, Rational, Rational, Rational>>();
  return {std::get<0>(c), std::get<1>(c), std::get<2>(c), std::get<3>(c)};
}

std::vector<Rational> coeffs(const Poly& p) { return p.coefficients(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rational points on x^2 - y^3 = f(z) and related surfaces";

  auto base = py::register_exception<Error>(m, "DelPezzoError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<DegenerateFiber>(m, "DegenerateFiber", base);
  py::register_exception<SingularAuxiliary>(m, "SingularAuxiliary", base);
  py::register_exception<NoSeedPoint>(m, "NoSeedPoint", base);
  py::register_exception<ParamPole>(m, "ParamPole", base);
  py::register_exception<IdentityFailure>(m, "IdentityFailure", base);

  m.def(
      "auxiliary_curve",
      [](const Rational& a, const Rational& b) {
        const auto E = auxiliary_curve(a, b);
        return Pair{E.A, E.B};
      },
      py::arg("a"), py::arg("b"), "(A, B) of E_{a,b}: Y^2 = X^3 + A X + B.");
  m.def("discriminant", [](const Rational& A, const Rational& B) { return WeierstrassCurve{A, B}.discriminant(); },
        py::arg("A"), py::arg("B"));
  m.def(
      "on_curve", [](const Rational& A, const Rational& B, const Pair& P) { return on_curve({A, B}, point(P)); },
      py::arg("A"), py::arg("B"), py::arg("point"));
  m.def(
      "add",
      [](const Rational& A, const Rational& B, const std::optional<Pair>& P, const std::optional<Pair>& Q) {
        return pair(add({A, B}, P ? point(*P) : CurvePoint(), Q ? point(*Q) : CurvePoint()));
      },
      py::arg("A"), py::arg("B"), py::arg("P"), py::arg("Q"), "None stands for the point at infinity.");
  m.def(
      "scalar_mul",
      [](const Rational& A, const Rational& B, long n, const Pair& P) { return pair(scalar_mul({A, B}, n, point(P))); },
      py::arg("A"), py::arg("B"), py::arg("n"), py::arg("P"));
  m.def(
      "torsion_order",
      [](const Rational& A, const Rational& B, const Pair& P) { return torsion_order({A, B}, point(P)); },
      py::arg("A"), py::arg("B"), py::arg("P"));
  m.def(
      "search_points",
      [](const Rational& A, const Rational& B, long bound) {
        std::vector<Pair> out;
        for (const auto& p : search_points({A, B}, bound)) out.emplace_back(p.x(), p.y());
        return out;
      },
      py::arg("A"), py::arg("B"), py::arg("bound"));
  m.def(
      "torsion_of_mordell",
      [](const Rational& k) {
        const TorsionClass tc = torsion_of_mordell(k);
        std::vector<Pair> witnesses;
        for (const auto& w : tc.witnesses) witnesses.emplace_back(w.x(), w.y());
        py::dict d;
        d["tag"] = to_string(tc.tag);
        d["order"] = order(tc.tag);
        d["reduced_k"] = tc.reduced_k;
        d["witnesses"] = witnesses;
        return d;
      },
      py::arg("k"));

  m.def(
      "lift_point",
      [](const py::object& f, const Pair& P, const std::string& br) {
        return triple(lift_point(quintic(f), point(P), branch(br)));
      },
      py::arg("f"), py::arg("P"), py::arg("branch") = "plus",
      "Lift a point of E_{a,b} to x^2 - y^3 = f(z). f is a string or (a, b, c, d).");
  m.def(
      "polynomial_solution",
      [](const py::object& f, const Pair& P, const std::string& br) {
        const PolySolution s = polynomial_solution(quintic(f), point(P), branch(br));
        return std::tuple{coeffs(s.x), coeffs(s.y), coeffs(s.z)};
      },
      py::arg("f"), py::arg("P"), py::arg("branch") = "plus",
      "Coefficient lists (lowest degree first) of x(t), y(t), z(t) with x^2 - y^3 - f(z) = t.");
  m.def(
      "generate",
      [](const py::object& f, long count, const std::optional<Pair>& seed, const std::string& policy, long bound) {
        const QuinticCoeffs q = quintic(f);
        GenerateOptions opts;
        if (seed) opts.seed = point(*seed);
        opts.policy = policy == "plus"    ? BranchPolicy::Plus
                      : policy == "minus" ? BranchPolicy::Minus
                      : policy == "both"  ? BranchPolicy::Both
                                          : BranchPolicy::PlusThenMinus;
        opts.search_bound = bound;
        const GenerationReport rep = generate_surface_points(q, count, opts);
        std::vector<std::string> lines;
        for (const auto& g : rep.points) {
          lines.push_back(to_jsonl_line({surfaces::kQuintic,
                                         {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}},
                                         g.point,
                                         {"lift", rep.seed.str(), to_string(g.branch), g.multiplier}}));
        }
        py::dict d;
        d["seed"] = pair(rep.seed);
        d["records"] = lines;
        d["attempts"] = rep.attempts;
        d["degenerate_fibers"] = rep.degenerate_fibers;
        d["duplicates"] = rep.duplicates;
        return d;
      },
      py::arg("f"), py::arg("count"), py::arg("seed") = py::none(), py::arg("branch") = "auto",
      py::arg("bound") = 0, "JSONL records for m * seed, m = 1..count, plus attempt accounting.");
  m.def("verify_record", [](const std::string& line) { return verify_record(parse_jsonl_line(line)); },
        py::arg("line"));

  m.def(
      "singular_family",
      [](const Rational& t) {
        const SingularFamily fam = singular_family(t);
        return std::tuple{fam.a, fam.b, fam.curve.A, fam.curve.B};
      },
      py::arg("t"), "(a, b, A, B) with E_{a,b}: Y^2 = (X - t)^2 (X + 2t).");

  m.def(
      "psi",
      [](const Rational& a1, const Rational& b1, const Rational& c1) {
        const RatFunc r = psi({a1, b1, c1});
        return std::tuple{coeffs(r.num()), coeffs(r.den())};
      },
      py::arg("a1"), py::arg("b1"), py::arg("c1"));
  m.def(
      "section_point",
      [](const Rational& a1, const Rational& b1, const Rational& c1, const Rational& t) {
        return triple(section({a1, b1, c1}).at(t));
      },
      py::arg("a1"), py::arg("b1"), py::arg("c1"), py::arg("t"));
  m.def(
      "genus0_point",
      [](const Rational& a1, const Rational& b1, const Rational& t, const Rational& u) {
        return triple(genus0_param({a1, b1}, t, u));
      },
      py::arg("a1"), py::arg("b1"), py::arg("t"), py::arg("u"));

  m.def(
      "thm2_point",
      [](const Rational& a, const Rational& b, const Rational& u) { return triple(thm2_point({a, b, u})); },
      py::arg("a"), py::arg("b"), py::arg("u") = Rational(1), "Point of x^2 + a y^5 - z^6 = b.");
  m.def(
      "cor3_point",
      [](const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
        return triple(cor3_point({a, b, c, d}));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), "Point of a x^2 + b y^3 + c z^5 = d.");
  m.def(
      "cor4_point",
      [](const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& u) {
        return triple(cor4_point({a, b, c, d, u}));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("u") = Rational(1),
      "Point of x^2 + a y^5 + b y - (z^6 + c z) = d.");

  m.def(
      "verify_identities",
      [](std::uint64_t seed) {
        std::vector<py::dict> out;
        for (const auto& c : verify_printed_identities(seed)) {
          py::dict d;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["samples"] = c.samples;
          d["detail"] = c.detail;
          out.push_back(d);
        }
        return out;
      },
      py::arg("seed") = 20240607);
}
