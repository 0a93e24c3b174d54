// Python bindings. Exact values cross the boundary as decimal strings and are
// rebuilt as fractions.Fraction / int on the Python side.

#include "randmin/closed_form.hpp"
#include "randmin/core.hpp"
#include "randmin/exact_enum.hpp"
#include "randmin/montecarlo.hpp"
#include "randmin/oracle.hpp"
#include "randmin/structure.hpp"
#include "randmin/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace randmin;

namespace {

py::object fraction(const BigRational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::object integer(const BigInt& z) { return py::int_(py::str(to_string(z))); }

BigRational exact(int sigma, int k, int w, const std::string& algo, std::uint64_t cap, unsigned threads) {
  const Params p = Params::make(sigma, k, w);
  if (algo == "naive") return exact_density_naive(p, {cap, threads});
  return exact_density_fast(p, parse_engine(algo), {cap, threads});
}

py::dict estimate_dict(const McEstimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["std_error"] = e.std_error;
  d["replicates"] = e.replicates;
  d["total_windows"] = e.total_windows;
  d["seed"] = e.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_randmin, m) {
  m.doc() = "Expected density of random minimizers";

  py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);

  m.def(
      "exact_density",
      [](int sigma, int k, int w, const std::string& algo, std::uint64_t cap, unsigned threads) {
        BigRational q;
        {
          py::gil_scoped_release release;
          q = exact(sigma, k, w, algo, cap, threads);
        }
        return fraction(q);
      },
      py::arg("sigma"), py::arg("k"), py::arg("w"), py::arg("algo") = "dict", py::arg("cap") = kDefaultEnumerationCap,
      py::arg("threads") = 0u, "Exact DR by enumeration (algo: naive, dict or weiner).");

  m.def(
      "closed_form_density", [](int sigma, int k, int w) { return fraction(density_closed_form(Params::make(sigma, k, w))); },
      py::arg("sigma"), py::arg("k"), py::arg("w"), "Exact DR for w <= k.");

  m.def(
      "average_over_all_orders",
      [](int sigma, int k, int w) { return fraction(average_over_all_orders(Params::make(sigma, k, w))); },
      py::arg("sigma"), py::arg("k"), py::arg("w"), "Mean density over every order of the k-mers (tiny cases only).");

  m.def(
      "gamechanger_probability",
      [](const std::string& context, int sigma, int k, int w) {
        return fraction(gamechanger_probability(parse_word(context), Params::make(sigma, k, w)));
      },
      py::arg("context"), py::arg("sigma"), py::arg("k"), py::arg("w"),
      "Probability over a random order that a (w+k)-string given as digits is charged.");

  m.def(
      "deviation", [](int sigma, int w) { return fraction(deviation(sigma, w)); }, py::arg("sigma"), py::arg("w"),
      "sigma^(w+k) (DR - 2/(w+1)) for any k >= w.");
  m.def(
      "delta", [](int sigma, int w) { return fraction(delta(sigma, w)); }, py::arg("sigma"), py::arg("w"),
      "Dev(w+1) - Dev(w).");

  m.def(
      "prim",
      [](int sigma, int p_max) {
        const PrimTable t(sigma, p_max);
        py::list out;
        for (int p = 1; p <= p_max; ++p) out.append(integer(t[p]));
        return out;
      },
      py::arg("sigma"), py::arg("p_max"), "Number of primitive words of lengths 1..p_max.");

  m.def(
      "find_crossing",
      [](int sigma, int w_cap) {
        const CrossingReport r = find_crossing(sigma, w_cap);
        py::dict d;
        d["sigma"] = r.sigma;
        d["w_cap"] = r.w_cap;
        d["first_negative"] = r.first_negative ? py::object(py::int_(*r.first_negative)) : py::none();
        d["sign_changes"] = r.sign_changes;
        return d;
      },
      py::arg("sigma"), py::arg("w_cap") = 200, "Smallest w with DFR < 2, searched up to w_cap.");

  m.def(
      "mc_density",
      [](int sigma, int k, int w, std::uint64_t n, int replicates, std::uint64_t seed, const std::string& estimator,
         unsigned threads) {
        const Params p = Params::make(sigma, k, w);
        const McOptions opts{n, replicates, seed, threads};
        McEstimate e;
        {
          py::gil_scoped_release release;
          if (estimator == "markup") e = mc_density(p, opts);
          else if (estimator == "gamechanger") e = mc_gamechanger_density(p, opts);
          else if (estimator == "context") e = mc_context_density(p, opts);
          else throw InvalidParams("unknown estimator '" + estimator + "'");
        }
        return estimate_dict(e);
      },
      py::arg("sigma"), py::arg("k"), py::arg("w"), py::arg("n") = 1'000'000, py::arg("replicates") = 16,
      py::arg("seed") = 1, py::arg("estimator") = "markup", py::arg("threads") = 0u,
      "Sampled DR (estimator: markup, gamechanger or context).");

  m.def(
      "bigw_upper_bound", [](int sigma, int k, int w) { return bigw_upper_bound(Params::make(sigma, k, w)); },
      py::arg("sigma"), py::arg("k"), py::arg("w"));
  m.def("bigw_window", &bigw_window, py::arg("sigma"), py::arg("k"));

  m.def(
      "find_major_run",
      [](const std::string& v) -> py::object {
        const auto run = find_major_run(parse_word(v));
        if (!run) return py::none();
        return py::make_tuple(run->start, run->end, run->period);
      },
      py::arg("word"), "Major run as (start, end, period), 1-based inclusive, or None.");

  m.def(
      "verify_json",
      [](const std::string& suite, int sigma, int max_total, int max_length, int w_max, std::uint64_t n, int trials) {
        VerifyOptions opts;
        opts.sigma = sigma;
        opts.max_total = max_total;
        opts.max_length = max_length;
        opts.w_max = w_max;
        opts.n = n;
        opts.trials = trials;
        std::string out;
        {
          py::gil_scoped_release release;
          out = run_suite(suite, opts).to_json().dump();
        }
        return out;
      },
      py::arg("suite"), py::arg("sigma") = 2, py::arg("max_total") = 13, py::arg("max_length") = 16,
      py::arg("w_max") = 10, py::arg("n") = 100'000, py::arg("trials") = 100);
  m.def("suite_names", &suite_names);
}
