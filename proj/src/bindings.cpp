// Python bindings: a thin, exact mirror of the library surface.  Every
// rational or big-integer value crosses the boundary as a decimal string;
// the python package converts them to Fraction / int so no precision is
// ever lost to doubles.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "arccount/census.hpp"
#include "arccount/cohomology.hpp"
#include "arccount/formulas.hpp"
#include "arccount/report.hpp"
#include "arccount/twisted.hpp"

namespace py = pybind11;
using namespace arccount;

namespace {

py::dict count_dict(const TwistedCount& r) {
    py::dict d;
    d["n"] = r.n;
    d["q"] = r.q;
    py::list parts;
    for (std::uint32_t p : r.cycle_type.parts()) parts.append(p);
    d["cycle_type"] = parts;
    d["class_name"] = r.cycle_type.cycle_notation();
    d["raw"] = r.raw_tuples;
    d["count"] = r.count;
    d["method"] = r.method;
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

py::dict run_count(std::uint32_t n, const std::string& cls, std::uint64_t q,
                   std::uint64_t budget, int jobs) {
    if (n < 1 || n > 6) throw std::invalid_argument("n must lie in 1..6");
    const CycleType c = CycleType::parse(cls, n);
    if (c == CycleType::identity(n) && n >= 4) return count_dict(count_identity_via_frames(n, q));
    EnumerationOptions opts;
    opts.budget = budget;
    opts.jobs = jobs;
    return count_dict(count_twisted(n, c, q, opts));
}

std::vector<std::string> poly_coefficients(const QPoly& p) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        mpq_class c = p.coeff(i);
        c.canonicalize();
        out.push_back(c.get_str());
    }
    return out;
}

py::dict formula_dict(const CountFormula& f) {
    py::dict d;
    d["n"] = f.n;
    d["class_name"] = f.cycle_type.cycle_notation();
    mpq_class pre = f.prefactor;
    pre.canonicalize();
    d["prefactor"] = pre.get_str();
    d["display"] = f.display();
    d["coefficients"] = poly_coefficients(f.expanded());
    return d;
}

py::dict derived_formula(std::uint32_t n, const std::string& cls) {
    return formula_dict(count_formula(n, CycleType::parse(cls, n)));
}

py::dict published_row(std::uint32_t n, const std::string& cls) {
    return formula_dict(published_formula(n, CycleType::parse(cls, n)));
}

std::vector<std::string> census_polynomial(const std::string& space, std::uint32_t degree,
                                           bool generic) {
    Space s;
    if (space == "p2")
        s = Space::P2;
    else if (space == "p1")
        s = Space::P1;
    else if (space == "dual")
        s = Space::P2Dual;
    else
        throw std::invalid_argument("unknown space '" + space + "' (expected p2, p1 or dual)");
    if (generic) {
        if (s != Space::P2) throw std::invalid_argument("generic censuses exist for p2 only");
        return poly_coefficients(generic_count(degree));
    }
    return poly_coefficients(exact_degree_count(s, degree));
}

py::dict cohomology_dict(std::uint32_t n) {
    const CohomologySolution s = solve_cohomology(n);
    const auto classes = partitions_of(n);
    py::dict d;
    d["space"] = "X" + std::to_string(n);
    d["ok"] = s.ok();
    d["issues"] = s.issues;
    py::dict decomposition;
    for (std::size_t j = 0; j < s.mult.size(); ++j) {
        py::dict deg;
        for (std::size_t k = classes.size(); k-- > 0;) {
            mpq_class m = s.mult[j][k];
            if (m == 0) continue;
            m.canonicalize();
            deg[py::str("(" + classes[k].parts_string() + ")")] = m.get_str();
        }
        decomposition[py::int_(j)] = deg;
    }
    d["decomposition"] = decomposition;
    if (s.ok()) {
        py::list betti;
        for (const auto& b : x_betti(s)) betti.append(b.get_str());
        d["betti"] = betti;
        py::list quotient;
        for (const auto& b : b_betti(s)) quotient.append(b.get_str());
        d["quotient_betti"] = quotient;
        d["point_count_polynomial"] = poly_coefficients(untwisted_point_poly(s));
    }
    return d;
}

py::list errata_list() {
    py::list out;
    for (const ErratumItem& e : errata()) {
        py::dict d;
        d["id"] = e.id;
        d["where"] = e.where;
        d["printed"] = e.printed;
        d["correction"] = e.correction;
        d["evidence"] = e.evidence;
        out.append(d);
    }
    return out;
}

py::list partitions_list(std::uint32_t n) {
    py::list out;
    for (const CycleType& c : partitions_of(n)) {
        py::list parts;
        for (std::uint32_t p : c.parts()) parts.append(p);
        out.append(parts);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "exact counts of Frobenius-twisted noncollinear point configurations in the "
        "projective plane (internal extension; import the arccount package instead)";
    m.attr("__version__") = "1.0.0";

    m.def("count", &run_count, py::arg("n"), py::arg("cls"), py::arg("q"),
          py::arg("budget") = 100'000'000ULL, py::arg("jobs") = 1,
          "Twisted count for one conjugacy class at one prime power; the identity "
          "class is counted through the frame-fixed identity.");
    m.def("count_polynomial", &derived_formula, py::arg("n"), py::arg("cls"),
          "Derived closed form; coefficients lowest-degree-first as exact strings.");
    m.def("published_polynomial", &published_row, py::arg("n"), py::arg("cls"),
          "The published reference-table row, exactly as printed.");
    m.def("census_polynomial", &census_polynomial, py::arg("space"), py::arg("degree"),
          py::arg("generic") = false,
          "Closed-form orbit-degree census; coefficients lowest-degree-first.");
    m.def("pgl3_order", [](std::uint64_t q) { return pgl3_order(q); }, py::arg("q"));
    m.def("cohomology", &cohomology_dict, py::arg("n"),
          "Solve the weight recurrence for X_n; decomposition, Betti numbers, and "
          "quotient Betti numbers with exact string values.");
    m.def("errata", &errata_list, "Documented discrepancies in the published tables.");
    m.def("partitions", &partitions_list, py::arg("n"),
          "All partitions of n in the canonical row order.");
}
