#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fareylt/arith.hpp"
#include "fareylt/elliptic.hpp"
#include "fareylt/errors.hpp"
#include "fareylt/farey.hpp"
#include "fareylt/langtrotter.hpp"
#include "fareylt/quadratic.hpp"
#include "fareylt/report.hpp"

namespace py = pybind11;
using namespace fareylt;

namespace {

py::int_ to_py(const BigInt& x)
{
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10)));
}

BigInt from_py(const py::int_& x)
{
    const auto text = py::str(py::handle(x)).cast<std::string>();
    return BigInt(text);
}

py::list poly_to_py(const IntPolynomial& f)
{
    py::list out;
    for (const auto& c : f.coeffs())
        out.append(to_py(c));
    return out;
}

IntPolynomial poly_from_py(const std::vector<py::int_>& coeffs)
{
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs)
        c.push_back(from_py(x));
    return IntPolynomial(std::move(c));
}

py::object optional_traces(const TraceTable& table)
{
    py::list out;
    for (const auto& e : table.entries) {
        if (e)
            out.append(*e);
        else
            out.append(py::none());
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Farey fractions in residue classes and averaged Lang-Trotter counts";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);

    // arith
    m.def("mobius_table", [](std::uint32_t n) {
        const auto t = mobius_table(n);
        return std::vector<int>(t.values().begin(), t.values().end());
    }, py::arg("n"), "mu(k) for k = 1..n");
    m.def("primes_up_to", &primes_up_to, py::arg("n"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("legendre_symbol", &legendre_symbol, py::arg("a"), py::arg("p"));
    m.def("squarefree_kernel", &squarefree_kernel, py::arg("n"));
    m.def("lucas_v", [](std::uint32_t n, const py::int_& P, const py::int_& Q) {
        return to_py(lucas_v(n, from_py(P), from_py(Q)));
    }, py::arg("n"), py::arg("P"), py::arg("Q"));
    m.def("dickson_poly", [](std::uint32_t n) { return poly_to_py(dickson_poly(n)); }, py::arg("n"));
    m.def("poly_eval_mod", [](const std::vector<py::int_>& f, std::int64_t x, std::uint64_t p) {
        return poly_eval_mod(poly_from_py(f), x, p);
    }, py::arg("coeffs"), py::arg("x"), py::arg("p"));
    m.def("poly_pair_dependent", [](const std::vector<py::int_>& f, const std::vector<py::int_>& g) {
        return poly_pair_dependent(poly_from_py(f), poly_from_py(g));
    }, py::arg("f"), py::arg("g"));

    // farey
    m.def("count_coprime_pairs", &count_coprime_pairs, py::arg("T"));
    m.def("enumerate_coprime_pairs", [](std::uint32_t T) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (const auto& c : enumerate_coprime_pairs(T))
            out.emplace_back(c.alpha, c.beta);
        return out;
    }, py::arg("T"), "(alpha, beta) pairs ordered by (beta, alpha)");
    m.def("residue_histogram", [](std::uint32_t T, std::uint64_t p, unsigned threads) {
        return residue_histogram(T, p, threads).counts;
    }, py::arg("T"), py::arg("p"), py::arg("threads") = 1);
    m.def("residue_histogram_oracle", [](std::uint32_t T, std::uint64_t p) {
        return residue_histogram_oracle(T, p).counts;
    }, py::arg("T"), py::arg("p"));
    m.def("m_count", &m_count, py::arg("W"), py::arg("p"), py::arg("d"), py::arg("v"));
    m.def("l1_discrepancy", py::overload_cast<std::uint32_t, std::uint64_t, unsigned>(&l1_discrepancy),
          py::arg("T"), py::arg("p"), py::arg("threads") = 1);
    m.def("l2_m_deviation", &l2_m_deviation, py::arg("W"), py::arg("p"));

    // elliptic
    py::class_<CurveFamily>(m, "CurveFamily")
        .def(py::init([](const std::vector<py::int_>& a, const std::vector<py::int_>& b) {
            return CurveFamily::validate(poly_from_py(a), poly_from_py(b));
        }), py::arg("a_coeffs"), py::arg("b_coeffs"))
        .def_static("parse", &parse_family, py::arg("text"))
        .def_property_readonly("a_poly", [](const CurveFamily& f) { return poly_to_py(f.a_poly()); })
        .def_property_readonly("b_poly", [](const CurveFamily& f) { return poly_to_py(f.b_poly()); })
        .def_property_readonly("delta_poly", [](const CurveFamily& f) { return poly_to_py(f.delta_poly()); })
        .def_property_readonly("id", &CurveFamily::id)
        .def("__str__", &CurveFamily::serialization);
    py::register_exception<DeltaIdenticallyZero>(m, "DeltaIdenticallyZero", PyExc_ValueError);
    py::register_exception<ConstantJInvariant>(m, "ConstantJInvariant", PyExc_ValueError);
    py::register_exception<PrimeTooSmall>(m, "PrimeTooSmall", PyExc_ValueError);

    m.def("trace_of_frobenius", [](std::uint64_t a4, std::uint64_t a6, std::uint64_t p) {
        return trace_of_frobenius(SpecializedCurve{a4, a6, p});
    }, py::arg("a4"), py::arg("a6"), py::arg("p"));
    m.def("trace_table", [](const CurveFamily& f, std::uint64_t p, unsigned threads) {
        return optional_traces(trace_table(f, p, threads));
    }, py::arg("family"), py::arg("p"), py::arg("threads") = 1, "a_p(v) per residue v, None where bad");
    m.def("pi_a", [](const CurveFamily& f, std::uint32_t alpha, std::uint32_t beta, std::int64_t a, std::uint32_t x) {
        return pi_a(f, CoprimePair{alpha, beta}, a, x);
    }, py::arg("family"), py::arg("alpha"), py::arg("beta"), py::arg("a"), py::arg("x"));

    // quadratic
    py::class_<ImaginaryQuadraticField>(m, "ImaginaryQuadraticField")
        .def_readonly("d", &ImaginaryQuadraticField::d)
        .def_readonly("disc", &ImaginaryQuadraticField::disc)
        .def_readonly("class_number", &ImaginaryQuadraticField::class_number)
        .def_readonly("unit_count", &ImaginaryQuadraticField::unit_count);
    m.def("field_of", &field_of, py::arg("d"));
    m.def("class_number", &class_number, py::arg("D"));
    m.def("lemma_poly", [](std::uint32_t hw) { return poly_to_py(lemma_poly(hw)); }, py::arg("hw"));
    m.def("frobenius_field", &frobenius_field, py::arg("a_p"), py::arg("p"));
    m.def("lucas_lemma_check", &lucas_lemma_check, py::arg("a_p"), py::arg("p"), py::arg("hw"));
    py::register_exception<SupersingularExcluded>(m, "SupersingularExcluded", PyExc_ValueError);
    py::register_exception<NotImaginary>(m, "NotImaginary", PyExc_ValueError);

    // langtrotter
    py::class_<AverageReport>(m, "AverageReport")
        .def_readonly("family_id", &AverageReport::family_id)
        .def_readonly("target", &AverageReport::target)
        .def_readonly("x", &AverageReport::x)
        .def_readonly("t_order", &AverageReport::t_order)
        .def_readonly("total_direct", &AverageReport::total_direct)
        .def_readonly("total_swapped", &AverageReport::total_swapped)
        .def_readonly("normalized", &AverageReport::normalized)
        .def_readonly("envelope", &AverageReport::envelope)
        .def_readonly("skipped_primes", &AverageReport::skipped_primes)
        .def_property_readonly("mode", [](const AverageReport& r) {
            return r.mode == AverageMode::Trace ? "trace" : "field";
        });
    m.def("average_pi_a", &average_pi_a, py::arg("family"), py::arg("a"), py::arg("x"), py::arg("T"),
          py::arg("threads") = 1);
    m.def("average_pi_field", &average_pi_field, py::arg("family"), py::arg("d"), py::arg("x"), py::arg("T"),
          py::arg("threads") = 1);

    py::class_<ChebotarevReport>(m, "ChebotarevReport")
        .def_readonly("p", &ChebotarevReport::p)
        .def_readonly("ell", &ChebotarevReport::ell)
        .def_readonly("counts", &ChebotarevReport::counts)
        .def_readonly("trace_counts", &ChebotarevReport::trace_counts)
        .def_readonly("main_term", &ChebotarevReport::main_term)
        .def_readonly("max_abs_dev", &ChebotarevReport::max_abs_dev)
        .def_readonly("ell_below_17", &ChebotarevReport::ell_below_17);
    m.def("chebotarev_counts", &chebotarev_counts, py::arg("family"), py::arg("p"), py::arg("ell"),
          py::arg("threads") = 1);
    m.def("theorem2_envelope", &theorem2_envelope, py::arg("T"), py::arg("x"), py::arg("part"));

    m.def("trace_cache_text", [](const CurveFamily& f, std::uint64_t p) {
        return trace_cache_text(f, trace_table(f, p));
    }, py::arg("family"), py::arg("p"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
