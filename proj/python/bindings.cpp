// Python bindings. Structured values cross the boundary as JSON text; the
// package wrapper in repst/__init__.py converts them to dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repst/acceptance.hpp"
#include "repst/json_io.hpp"
#include "repst/karoubi.hpp"

namespace py = pybind11;
using namespace repst;

namespace {

PermGroup subgroup(std::size_t k, const std::string& gens) { return PermGroup(k, parse_generators(k, gens)); }

py::dict law(const LawCheck& c) {
  py::dict d;
  d["holds"] = c.holds;
  if (c.counterexample)
    d["counterexample"] = Json{{"blocks", c.counterexample->first.partition.blocks()},
                               {"coeff", c.counterexample->second.to_string()}}
                              .dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(_repst, m) {
  m.doc() = "Exact diagram calculus for Rep(S_t) and induced algebras";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<LimitError> limit_error(m, "ResourceLimitError", PyExc_RuntimeError);
  static py::exception<Error> repst_error(m, "RepstError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const LimitError& e) {
      limit_error(e.what());
    } catch (const Error& e) {
      repst_error(e.what());
    }
  });

  m.def(
      "compose", [](const std::string& lhs, const std::string& rhs) {
        return to_json(compose(morphism_from_json(Json::parse(lhs)), morphism_from_json(Json::parse(rhs)))).dump();
      },
      py::arg("lhs"), py::arg("rhs"), "lhs o rhs for morphisms given as JSON");

  m.def(
      "dim_poly", [](std::size_t k, const std::string& gens) {
        return dimension_poly(build_induced_algebra(k, subgroup(k, gens)).carrier).to_string();
      },
      py::arg("k"), py::arg("subgroup") = "", "Dimension polynomial of ind(C[S_k/H]) as text");

  m.def(
      "build_algebra", [](std::size_t k, const std::string& gens) {
        return to_json(build_induced_algebra(k, subgroup(k, gens))).dump();
      },
      py::arg("k"), py::arg("subgroup") = "");

  m.def(
      "check_axioms", [](const std::string& algebra) {
        const AxiomReport r = check_axioms(algebra_from_json(Json::parse(algebra)));
        py::dict d;
        d["idempotent"] = law(r.idempotent);
        d["structure_on_carrier"] = law(r.absorbs);
        d["associativity"] = law(r.associativity);
        d["unit"] = law(r.unit);
        d["commutativity"] = law(r.commutativity);
        d["all"] = r.all();
        return d;
      },
      py::arg("algebra"));

  m.def(
      "certify_simple", [](const std::string& algebra) {
        const SimplicityCertificate c = certify_simple(algebra_from_json(Json::parse(algebra)));
        py::dict d;
        d["verdict"] = to_string(c.verdict);
        d["connectedness"] = c.connectedness;
        d["nondegenerate"] = c.pairing.nondegenerate;
        d["det"] = c.pairing.det.to_string();
        d["end_dimension"] = c.pairing.end_dimension;
        d["witness_n"] = c.witness_n;
        return d;
      },
      py::arg("algebra"));

  m.def(
      "hom_dimension", [](const std::string& x, const std::string& y) {
        return hom_space(kobject_from_json(Json::parse(x)), kobject_from_json(Json::parse(y))).dimension;
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "classify", [](std::size_t n) {
        py::list rows;
        for (const auto& h : subgroups_up_to_conjugacy(n)) {
          py::dict r;
          r["order"] = h.order();
          r["generators"] = h.generators_text();
          r["simple"] = is_simple_equivariant(coset_algebra(n, h)).simple;
          rows.append(r);
        }
        return rows;
      },
      py::arg("n"), "Coset algebras C[S_n/H], one per conjugacy class of subgroups");

  m.def(
      "contains_times", [](std::size_t n, std::size_t k) {
        const auto r = verify_contains_times(n, k);
        py::list cases;
        for (const auto& c : r.cases) {
          py::dict d;
          d["group"] = c.group.generators_text();
          d["order"] = c.group.order();
          d["k_prime"] = c.k_prime;
          d["conjugator"] = c.conjugator.to_cycles();
          d["found"] = c.found;
          cases.append(d);
        }
        py::dict out;
        out["pass"] = r.pass;
        out["cases"] = cases;
        return out;
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "sign_multiplicity", [](std::size_t n, const std::string& gens) { return sign_multiplicity(n, subgroup(n, gens)); },
      py::arg("n"), py::arg("subgroup") = "");

  m.def(
      "fiber_match", [](const std::string& algebra, std::size_t n) {
        const AlgebraObject a = algebra_from_json(Json::parse(algebra));
        const auto fib = specialize_algebra(a, n);
        py::dict d;
        d["dim"] = fib.dim;
        d["isomorphic"] = match_fiber_algebra(fib, n, a.k(), PermGroup(a.k(), a.subgroup)).has_value();
        return d;
      },
      py::arg("algebra"), py::arg("n"));

  m.def(
      "run_criterion", [](int id, std::uint64_t seed) {
        const CriterionResult r = run_criterion(id, seed);
        return py::make_tuple(r.pass, r.title);
      },
      py::arg("id"), py::arg("seed") = 0x5eed);
}
