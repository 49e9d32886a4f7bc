#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "holm/cli.hpp"
#include "holm/division_polys.hpp"
#include "holm/errors.hpp"
#include "holm/group_law.hpp"
#include "holm/isomorphism.hpp"
#include "holm/serialize.hpp"
#include "holm/torsion.hpp"

namespace py = pybind11;
using namespace holm;

namespace {

// Points cross the boundary as None (INFINITY) or a pair of "num/den" strings.
using PyPoint = std::optional<std::pair<std::string, std::string>>;

EPoint to_epoint(const PyPoint& p) {
    if (!p) return EPoint::infinity();
    return EPoint::affine(Rational::parse(p->first), Rational::parse(p->second));
}

PyPoint from_epoint(const EPoint& p) {
    if (p.is_infinity()) return std::nullopt;
    return std::pair{p.x().str(), p.y().str()};
}

std::pair<std::string, std::string> from_hpoint(const HPoint& p) { return {p.x.str(), p.y.str()}; }

HolmParams params(const std::string& k, const std::string& l) {
    return HolmParams::make(parse_integer(k), parse_integer(l));
}

WeierstrassCurve curve(const std::string& a, const std::string& b) {
    return WeierstrassCurve::make(parse_integer(a), parse_integer(b));
}

std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic on Holm curves and their Weierstrass models";

    static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
    static py::exception<ContradictionError> contradiction_error(m, "ContradictionError", PyExc_ArithmeticError);
    static py::exception<TorsionDenominatorError> torsion_error(m, "TorsionDenominatorError",
                                                                contradiction_error.ptr());
    static py::exception<ConsistencyError> consistency_error(m, "ConsistencyError", PyExc_RuntimeError);
    static py::exception<CapacityError> capacity_error(m, "CapacityError", PyExc_OverflowError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            validation_error(e.what());
        } catch (const TorsionDenominatorError& e) {
            torsion_error(e.what());
        } catch (const ContradictionError& e) {
            contradiction_error(e.what());
        } catch (const ConsistencyError& e) {
            consistency_error(e.what());
        } catch (const CapacityError& e) {
            capacity_error(e.what());
        }
    });

    m.def("vp", [](const std::string& x, const std::string& p) -> std::optional<long> {
        Valuation v = vp(Rational::parse(x), parse_integer(p));
        if (v.is_infinite()) return std::nullopt;
        return v.value();
    });
    m.def("violation", [](const std::string& k, const std::string& l) {
        return HolmParams::violation(parse_integer(k), parse_integer(l));
    });
    m.def("curve_coefficients", [](const std::string& k, const std::string& l) {
        auto c = curve_from_params(params(k, l));
        return std::pair{to_string(c.a()), to_string(c.b())};
    });
    m.def("discriminant", [](const std::string& a, const std::string& b) {
        return to_string(curve(a, b).discriminant());
    });
    m.def("gamma", [](const std::string& k, const std::string& l, const std::string& x, const std::string& y) {
        return from_epoint(gamma(params(k, l), HPoint{Rational::parse(x), Rational::parse(y)}));
    });
    m.def("gamma_inv", [](const std::string& k, const std::string& l, const PyPoint& p) {
        return from_hpoint(gamma_inv(params(k, l), to_epoint(p)));
    });
    m.def("on_curve", [](const std::string& a, const std::string& b, const PyPoint& p) {
        return on_E(curve(a, b), to_epoint(p));
    });
    m.def("add", [](const std::string& a, const std::string& b, const PyPoint& p, const PyPoint& q) {
        return from_epoint(e_add(curve(a, b), to_epoint(p), to_epoint(q)));
    });
    m.def("negate", [](const std::string& a, const std::string& b, const PyPoint& p) {
        return from_epoint(e_negate(curve(a, b), to_epoint(p)));
    });
    m.def("scalar_mul", [](const std::string& a, const std::string& b, long long n, const PyPoint& p) {
        return from_epoint(e_scalar_mul(curve(a, b), n, to_epoint(p)));
    });
    m.def("order_upto", [](const std::string& a, const std::string& b, const PyPoint& p, int max_order) {
        return order_upto(curve(a, b), to_epoint(p), max_order);
    });
    m.def("mul_via_divpolys", [](const std::string& a, const std::string& b, long n, const PyPoint& p) {
        DivPolyCache cache(curve(a, b));
        return from_epoint(mul_via_divpolys(cache, n, to_epoint(p)));
    });
    m.def("division_polynomials", [](const std::string& a, const std::string& b, long n) {
        DivPolyCache cache(curve(a, b));
        py::dict out;
        const CurvePoly& psi = cache.psi(n);
        out["psi_f"] = coeff_strings(psi.f);
        out["psi_g"] = coeff_strings(psi.g);
        if (n >= 1) out["phi"] = coeff_strings(cache.phi(n));
        if (n >= 2) {
            const CurvePoly& omega = cache.omega(n);
            out["omega_f"] = coeff_strings(omega.f);
            out["omega_g"] = coeff_strings(omega.g);
        }
        return out;
    });
    m.def("integral_points", [](const std::string& a, const std::string& b, const std::optional<std::string>& bound) {
        auto c = curve(a, b);
        std::vector<PyPoint> out;
        for (const auto& p : find_integral_points(c, bound ? parse_integer(*bound) : default_x_bound(c))) {
            out.push_back(from_epoint(p));
        }
        return out;
    });
    m.def("lemma_report", [](const std::string& k, const std::string& l, const PyPoint& p) {
        auto hp = params(k, l);
        auto c = curve_from_params(hp);
        return to_json(run_dispatched(c, dispatch_lemma(hp), to_epoint(p))).dump();
    });
    m.def(
        "certify",
        [](const std::string& k, const std::string& l, int max_order, unsigned workers) {
            py::gil_scoped_release release;
            return to_json(certify_torsion_free(params(k, l), max_order, workers)).dump();
        },
        py::arg("k"), py::arg("l"), py::arg("max_order") = 12, py::arg("workers") = 1);
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
