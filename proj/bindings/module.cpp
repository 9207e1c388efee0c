// Python bindings for the main operations.  Rationals cross the boundary
// as strings ("-21/16") to keep exactness.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quaddyn/audit.hpp"
#include "quaddyn/heights.hpp"
#include "quaddyn/nonarch.hpp"
#include "quaddyn/pairing.hpp"
#include "quaddyn/polyq.hpp"
#include "quaddyn/preper.hpp"

namespace py = pybind11;
using namespace quaddyn;

namespace {

Rat R(const std::string& s) { return parse_rat(s); }

py::dict loglinear_dict(const LogLinear& v) {
    py::dict terms;
    for (auto& [p, c] : v.terms()) terms[py::str(p.get_str())] = rat_str(c);
    py::dict d;
    d["terms"] = terms;
    d["value"] = v.eval().mid_d();
    d["exact"] = v.exact();
    return d;
}

py::dict energy_dict(const EnergyBound& e) {
    py::dict d;
    d["lower"] = e.lower.eval().lo_d();
    d["upper"] = e.upper.eval().hi_d();
    d["lower_terms"] = loglinear_dict(e.lower);
    d["upper_terms"] = loglinear_dict(e.upper);
    d["exact"] = e.exact;
    d["case_label"] = e.case_label;
    return d;
}

py::dict mc_dict(const MCEstimate& m) {
    py::dict d;
    d["mean"] = m.mean;
    d["stderr"] = m.std_err;
    d["samples"] = m.samples;
    d["seed"] = m.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_quaddyn, m) {
    m.doc() = "Energy pairings, canonical heights and common preperiodic points for z^2 + c";

    m.def("padic_valuation", [](const std::string& q, long p) -> py::object {
        auto v = padic_valuation(R(q), Int(p));
        if (!v) return py::none();
        return py::int_(*v);
    }, py::arg("q"), py::arg("p"));

    m.def("weil_height", [](const std::string& q) { return weil_height(R(q)).eval().mid_d(); },
          py::arg("q"));

    m.def("weil_height2", [](const std::string& c1, const std::string& c2) {
        return weil_height2(R(c1), R(c2)).eval().mid_d();
    }, py::arg("c1"), py::arg("c2"));

    m.def("h_L", [](const std::string& c1, const std::string& c2, const std::string& L) {
        return h_L(R(c1), R(c2), R(L)).lower.eval().mid_d();
    }, py::arg("c1"), py::arg("c2"), py::arg("L"));

    m.def("julia_classify", [](const std::string& c, long p) {
        auto j = julia_classify(R(c), Int(p));
        py::dict d;
        d["kind"] = j.kind_str();
        d["circle_log_radius"] = j.circle_log_radius.eval().mid_d();
        return d;
    }, py::arg("c"), py::arg("p"));

    m.def("local_energy", [](const std::string& c1, const std::string& c2, long p) {
        return energy_dict(local_energy_padic(R(c1), R(c2), Int(p)));
    }, py::arg("c1"), py::arg("c2"), py::arg("p"));

    m.def("escape_rate_padic", [](const std::string& c, const std::string& x, long p, int cap) {
        auto e = escape_rate_padic(R(c), R(x), Int(p), cap);
        py::dict d;
        d["escaped"] = e.escaped;
        d["iterations"] = e.iterations;
        d["lower"] = e.lower.eval().lo_d();
        d["upper"] = e.upper.eval().hi_d();
        return d;
    }, py::arg("c"), py::arg("x"), py::arg("p"), py::arg("cap") = 24);

    m.def("escape_rate", [](std::complex<double> c, std::complex<double> z, double tol) {
        auto e = escape_rate_arch(c, z, tol);
        py::dict d;
        d["lo"] = e.value.lo_d();
        d["hi"] = e.value.hi_d();
        d["escaped"] = e.escaped;
        d["iterations"] = e.iterations_used;
        return d;
    }, py::arg("c"), py::arg("z"), py::arg("tol") = 1e-9);

    m.def("arch_energy_mc", [](std::complex<double> c1, std::complex<double> c2, long samples,
                               std::uint64_t seed, int workers) {
        return mc_dict(arch_energy_mc(c1, c2, samples, seed, workers));
    }, py::arg("c1"), py::arg("c2"), py::arg("samples") = 100000, py::arg("seed") = 42,
       py::arg("workers") = 1);

    m.def("energy_circle_oracle", [](std::complex<double> c, long nodes) {
        auto iv = energy_circle_oracle(c, nodes);
        return py::make_tuple(iv.lo_d(), iv.hi_d());
    }, py::arg("c"), py::arg("nodes") = 4096);

    m.def("adelic_pairing", [](const std::string& c1, const std::string& c2, long mc_samples,
                               std::uint64_t seed, int workers) {
        auto r = adelic_pairing(R(c1), R(c2), mc_samples, seed, workers);
        py::dict d;
        d["finite_lower"] = r.finite_lower.eval().lo_d();
        d["finite_upper"] = r.finite_upper.eval().hi_d();
        d["finite_exact"] = r.finite_exact;
        d["arch"] = mc_dict(r.arch);
        d["total"] = py::make_tuple(r.total.lo_d(), r.total.hi_d());
        d["height2"] = r.height2;
        d["lower_thm"] = r.lower_thm;
        d["upper_thm"] = r.upper_thm;
        d["weak_lower"] = r.weak_lower;
        py::list primes;
        for (auto& p : r.contributing_primes) primes.append(p.get_str());
        d["contributing_primes"] = primes;
        return d;
    }, py::arg("c1"), py::arg("c2"), py::arg("mc_samples") = 100000, py::arg("seed") = 42,
       py::arg("workers") = 1);

    m.def("canonical_height", [](const std::string& c, const std::string& x, double precision) {
        auto r = canonical_height(R(c), R(x), precision);
        py::dict d;
        d["lo"] = r.value.lo_d();
        d["hi"] = r.value.hi_d();
        d["preperiodic"] = r.preperiodic;
        d["iterations"] = r.iterations;
        return d;
    }, py::arg("c"), py::arg("x"), py::arg("precision") = 1e-6);

    m.def("is_preperiodic", [](const std::string& c, const std::string& x) {
        return is_preperiodic(R(c), R(x));
    }, py::arg("c"), py::arg("x"));

    m.def("common_preper", [](const std::string& c1, const std::string& c2, int bound) {
        auto r = common_preper(R(c1), R(c2), bound);
        py::dict d;
        d["bound"] = r.bound;
        d["distinct_common_count"] = r.distinct_common_count;
        py::list pts;
        for (auto& q : r.rational_points) pts.append(rat_str(q));
        d["rational_points"] = pts;
        d["include_infinity_total"] = r.include_infinity_total;
        return d;
    }, py::arg("c1"), py::arg("c2"), py::arg("bound") = 8);

    m.def("filled_julia_disjoint_at_p", [](const std::string& c1, const std::string& c2, long p) {
        return filled_julia_disjoint_at_p(R(c1), R(c2), Int(p)) == Disjointness::Disjoint
                   ? "disjoint"
                   : "not_determined";
    }, py::arg("c1"), py::arg("c2"), py::arg("p"));

    m.def("equidist_upper", [](const std::string& c1, const std::string& c2, long N, double eps) {
        return equidist_upper(R(c1), R(c2), N, eps);
    }, py::arg("c1"), py::arg("c2"), py::arg("N"), py::arg("eps"));

    m.def("audit_delta", [] {
        auto c = delta_certificate();
        py::dict d;
        d["verified"] = c.verified;
        d["claimed"] = py::make_tuple(c.claimed.lo_d(), c.claimed.hi_d());
        return d;
    });

    m.def("audit_b", [] {
        auto c = b_certificate();
        py::dict d;
        d["verified"] = c.verified;
        d["claimed"] = py::make_tuple(c.claimed.lo_d(), c.claimed.hi_d());
        return d;
    });

    m.def("constants", [] {
        py::dict d;
        for (auto& [k, v] : constants_table()) d[py::str(k)] = rat_str(v);
        return d;
    });

    m.def("rational_roots", [](const std::vector<std::string>& coeffs) {
        auto roots = rational_roots(PolyQ::from_coeff_strings(coeffs));
        py::list out;
        for (auto& r : roots) out.append(rat_str(r));
        return out;
    }, py::arg("coeffs"));
}
