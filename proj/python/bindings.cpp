#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lacuna/cli.hpp"
#include "lacuna/lacunary.hpp"
#include "lacuna/lucas.hpp"

namespace py = pybind11;
using namespace lacuna;

namespace {

std::string number(const std::string& target, long n, const std::string& method) {
    if (n < 0) throw BadN("n must be >= 0");
    SequenceCache c;
    const auto i = static_cast<std::size_t>(n);
    if (target == "bernoulli") {
        if (method == "classic") return to_string(bernoulli_number(c, i));
        if (method == "gap6") return to_string(solve_bernoulli_gap6(c, n));
    } else {
        if (method == "classic") return to_string(euler_number(c, i));
        if (method == "gap4") return to_string(solve_euler_gap4(c, n));
        if (method == "gap6") return to_string(solve_euler_gap6(c, n));
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

std::string lucas(const std::string& kind, const std::string& b, const std::string& c, long n, const std::string& method) {
    if (n < 0) throw BadN("n must be >= 0");
    const LucasParams<Rational> p{parse_rational(b), parse_rational(c)};
    const auto k = kind == "v" ? LucasKind::V : LucasKind::U;
    if (kind != "u" && kind != "v") throw std::invalid_argument("kind must be 'u' or 'v'");
    const auto un = static_cast<unsigned long>(n);
    if (method == "closed") return to_string(lucas_closed(p, un, k));
    if (method != "recurrence") throw std::invalid_argument("unknown method '" + method + "'");
    return to_string(k == LucasKind::V ? lucas_v(p, un) : lucas_u(p, un));
}

RangeSpec to_range(std::optional<long> n_from, std::optional<long> n_to, std::optional<long> m_from,
                   std::optional<long> m_to) {
    return {n_from, n_to, m_from, m_to};
}

} // namespace

PYBIND11_MODULE(_lacuna, m) {
    m.doc() = "Exact Bernoulli/Euler sequences, lacunary recurrences and identity checks";

    py::register_exception<NonRealResidue>(m, "NonRealResidue", PyExc_ValueError);
    py::register_exception<UnknownIdentity>(m, "UnknownIdentity", PyExc_KeyError);
    py::register_exception<DomainViolation>(m, "DomainViolation", PyExc_ValueError);
    py::register_exception<BadParity>(m, "BadParity", PyExc_ValueError);

    m.def("bernoulli", [](long n, const std::string& method) { return number("bernoulli", n, method); }, py::arg("n"),
          py::arg("method") = "classic");
    m.def("euler", [](long n, const std::string& method) { return number("euler", n, method); }, py::arg("n"),
          py::arg("method") = "classic");
    m.def("bernoulli_poly", [](long n) {
        SequenceCache c;
        return coefficient_strings(bernoulli_poly(c, static_cast<std::size_t>(n)));
    }, py::arg("n"));
    m.def("euler_poly", [](long n) {
        SequenceCache c;
        return coefficient_strings(euler_poly(c, static_cast<std::size_t>(n)));
    }, py::arg("n"));
    m.def("lucas", &lucas, py::arg("kind"), py::arg("b"), py::arg("c"), py::arg("n"), py::arg("method") = "recurrence");

    m.def("identities", [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.name);
        return out;
    });
    m.def("verify", [](const std::string& name, std::optional<long> n_from, std::optional<long> n_to,
                       std::optional<long> m_from, std::optional<long> m_to, std::optional<std::string> mode) {
        const IdentityEntry& e = find_entry(name);
        const Mode md = mode ? parse_mode(*mode) : (e.symbolic ? Mode::Symbolic : Mode::Points);
        VerifyContext ctx;
        py::gil_scoped_release release;
        return cli::report_json(verify_identity(ctx, e, to_range(n_from, n_to, m_from, m_to), md));
    }, py::arg("name"), py::arg("n_from") = py::none(), py::arg("n_to") = py::none(), py::arg("m_from") = py::none(),
          py::arg("m_to") = py::none(), py::arg("mode") = py::none());
    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
