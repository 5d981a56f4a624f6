#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "repzeta/chains.hpp"
#include "repzeta/cli.hpp"
#include "repzeta/errors.hpp"
#include "repzeta/euler_global.hpp"
#include "repzeta/finite_oracle.hpp"
#include "repzeta/isotropic_census.hpp"
#include "repzeta/local_sl2.hpp"
#include "repzeta/orbit_method.hpp"
#include "repzeta/rootsys.hpp"
#include "repzeta/symmetric.hpp"
#include "repzeta/version.hpp"
#include "repzeta/witten.hpp"

namespace py = pybind11;
using namespace repzeta;

namespace {

py::int_ to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(value).c_str(), nullptr, 10));
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(r)), to_py(denominator(r)));
}

py::list census_to_py(const DegreeCensus& census) {
  py::list out;
  for (const auto& e : census.entries()) out.append(py::make_tuple(to_py(e.degree), to_py(e.multiplicity)));
  return out;
}

DegreeCensus census_from_py(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  std::map<BigInt, BigInt> counts;
  for (auto [d, m] : pairs) counts[d] += m;
  return DegreeCensus(counts);
}

rootsys::RootDatum datum(const std::string& series, int rank) {
  return rootsys::build_root_datum(rootsys::parse_series(series), rank);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Representation zeta functions: censuses, local factors and Euler products";
  m.attr("__version__") = kVersion;

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> budget_error;
  budget_error.call_once_and_store_result(
      [&]() { return py::exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetError& e) {
      const py::object& type = budget_error.get_stored();
      py::object exc = type(e.what());
      exc.attr("reached") = e.reached();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def(
      "root_datum",
      [](const std::string& series, int rank) {
        const auto d = datum(series, rank);
        py::dict out;
        out["name"] = d.name();
        out["rank"] = d.rank;
        out["kappa"] = d.kappa;
        out["dimension"] = d.dimension();
        out["coxeter_number"] = d.coxeter_number;
        out["abscissa"] = fraction(rootsys::rank_kappa_ratio(d));
        return out;
      },
      py::arg("series"), py::arg("rank"));

  m.def(
      "witten_census",
      [](const std::string& series, int rank, std::uint64_t bound) {
        return census_to_py(witten::enumerate_dimensions(datum(series, rank), bound));
      },
      py::arg("series"), py::arg("rank"), py::arg("bound"));

  m.def(
      "abscissa_estimate",
      [](const std::string& series, int rank, std::uint64_t bound) {
        const auto est = witten::abscissa_estimate(witten::enumerate_dimensions(datum(series, rank), bound));
        py::dict out;
        out["slope"] = est.slope;
        out["standard_error"] = est.standard_error;
        out["window"] = est.window;
        return out;
      },
      py::arg("series"), py::arg("rank"), py::arg("bound") = 100000);

  m.def(
      "chain_product_value", [](const std::vector<double>& a) { return chains::chain_product_value({a}); },
      py::arg("exponents"));
  m.def(
      "chain_truncated_sum",
      [](const std::vector<double>& a, int bound) { return chains::chain_truncated_sum({a}, bound); },
      py::arg("exponents"), py::arg("bound"));
  m.def(
      "suffix_converges", [](const std::vector<double>& a) { return chains::suffix_converges({a}); },
      py::arg("exponents"));

  m.def(
      "level_census", [](std::uint64_t q, unsigned k) { return census_to_py(local_sl2::level_census(q, k).census); },
      py::arg("q"), py::arg("level"));
  m.def(
      "sl2_local_zeta",
      [](std::uint64_t q, double s) { return local_sl2::evaluate_local(local_sl2::sl2_local_factor(q), s); },
      py::arg("q"), py::arg("s"));

  m.def(
      "oracle_degrees",
      [](std::uint32_t modulus, std::size_t budget) {
        return census_to_py(oracle::character_degrees(oracle::sl2_group(modulus, budget)));
      },
      py::arg("modulus"), py::arg("group_budget") = oracle::kDefaultGroupBudget);
  m.def(
      "oracle_class_count",
      [](std::uint32_t modulus, std::size_t budget) {
        return oracle::conjugacy_classes(oracle::sl2_group(modulus, budget)).count();
      },
      py::arg("modulus"), py::arg("group_budget") = oracle::kDefaultGroupBudget);

  m.def(
      "orbit_dimension",
      [](const std::vector<std::int64_t>& eigenvalues, std::uint64_t p, unsigned k) {
        return to_py(orbit::orbit_dimension(orbit::make_orbit_datum(eigenvalues, p, k)));
      },
      py::arg("eigenvalues"), py::arg("p"), py::arg("k"));
  m.def(
      "centralizer_index",
      [](const std::vector<std::int64_t>& eigenvalues, std::uint64_t p, unsigned k) {
        return to_py(orbit::centralizer_index_oracle(orbit::make_orbit_datum(eigenvalues, p, k)).index);
      },
      py::arg("eigenvalues"), py::arg("p"), py::arg("k"));

  m.def(
      "census_classes",
      [](unsigned mm, std::uint64_t q, unsigned k, unsigned t, std::uint64_t scan_budget) {
        const auto family = isotropic::build_census_family(mm, q, k, t);
        const auto count = isotropic::distinct_class_count(family, {}, scan_budget);
        py::dict out;
        out["representatives"] = family.rep_count;
        out["classes_found"] = count.classes_found;
        out["lower_bound"] = to_py(count.lower_bound);
        out["meets_bound"] = count.meets_bound;
        out["certified"] = count.certified;
        out["orbit_prediction"] = isotropic::predicted_orbit_count(family);
        return out;
      },
      py::arg("m"), py::arg("q"), py::arg("k"), py::arg("t"), py::arg("scan_budget") = isotropic::kDefaultScanBudget);
  m.def(
      "gamma_estimate",
      [](const std::vector<std::pair<unsigned, std::uint64_t>>& points, double delta, double q) {
        isotropic::GammaSeries series{{}, delta, q};
        for (auto [k, c] : points) series.points.emplace_back(k, BigInt(c));
        const auto g = isotropic::gamma_estimate(series);
        py::dict out;
        out["gamma"] = g.gamma;
        out["gamma_average"] = g.gamma_average;
        out["crude_rho_bound"] = g.crude_rho_bound;
        out["mu"] = g.mu;
        return out;
      },
      py::arg("points"), py::arg("delta"), py::arg("q"));

  m.def(
      "an_degrees", [](unsigned k) { return census_to_py(symmetric::an_degrees(k)); }, py::arg("k"));
  m.def(
      "sn_degrees", [](unsigned k) { return census_to_py(symmetric::sn_degrees(k)); }, py::arg("k"));
  m.def("ak_zeta", &symmetric::ak_zeta, py::arg("k"), py::arg("s"));
  m.def(
      "census_zeta",
      [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& census, double s) {
        return census_from_py(census).zeta(s);
      },
      py::arg("census"), py::arg("s"));

  m.def(
      "euler_partial_product",
      [](std::uint64_t prime_bound, double s, bool scan) {
        euler::EulerProductSpec spec;
        spec.prime_bound = prime_bound;
        return euler::euler_partial_product(spec, s, scan ? euler::Mode::Scan : euler::Mode::Strict);
      },
      py::arg("prime_bound"), py::arg("s"), py::arg("scan") = false);
  m.def(
      "sandwich_check",
      [](std::uint64_t prime_bound, double s) {
        const auto r = euler::sandwich_check(prime_bound, s);
        py::dict out;
        out["holds"] = r.holds;
        out["lower"] = r.lower;
        out["value"] = r.value;
        out["upper"] = r.upper;
        return out;
      },
      py::arg("prime_bound"), py::arg("s"));
  m.def(
      "divergence_scan",
      [](const std::vector<std::uint64_t>& grid, double s, double threshold) {
        const auto r = euler::divergence_scan(grid, s, threshold);
        py::dict out;
        out["products"] = r.products;
        out["strictly_increasing"] = r.strictly_increasing;
        out["ratio"] = r.ratio;
        out["evidence"] = r.evidence;
        return out;
      },
      py::arg("grid"), py::arg("s") = 2.0, py::arg("threshold") = euler::kDefaultGrowthThreshold);
  m.def("riemann_zeta", &euler::riemann_zeta_ref, py::arg("s"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"repzeta"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
