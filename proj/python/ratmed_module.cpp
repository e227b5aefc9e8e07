#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "ratmed/buchholz.hpp"
#include "ratmed/error.hpp"
#include "ratmed/exact.hpp"
#include "ratmed/family.hpp"
#include "ratmed/qrt.hpp"
#include "ratmed/search.hpp"
#include "ratmed/somos.hpp"
#include "ratmed/triangle.hpp"

namespace py = pybind11;

// Integer <-> int via hex strings; Rational <-> fractions.Fraction.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object hex = reinterpret_steal<object>(PyNumber_ToBase(src.ptr(), 16));
        if (!hex) throw error_already_set();
        return value.set_str(hex.cast<std::string>(), 0) == 0;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str(16).c_str(), nullptr, 16);
    }
};

template <>
struct type_caster<ratmed::Rational> {
    PYBIND11_TYPE_CASTER(ratmed::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr()) || !hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        make_caster<mpz_class> num, den;
        if (!num.load(src.attr("numerator"), false) || !den.load(src.attr("denominator"), false)) return false;
        value = ratmed::Rational(cast_op<mpz_class&>(num), cast_op<mpz_class&>(den));
        return true;
    }

    static handle cast(const ratmed::Rational& v, return_value_policy p, handle parent) {
        static object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(make_caster<mpz_class>::cast(v.num(), p, parent));
        object den = reinterpret_steal<object>(make_caster<mpz_class>::cast(v.den(), p, parent));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace ratmed;

struct ErrorTypes {
    py::handle error, domain, zero, invariant, resume;
};

ErrorTypes& error_types() {
    static ErrorTypes types;
    return types;
}

py::handle new_exception(py::module_& m, const char* name, py::handle bases) {
    const std::string qualified = std::string(PyModule_GetName(m.ptr())) + "." + name;
    PyObject* type = PyErr_NewException(qualified.c_str(), bases.ptr(), nullptr);
    if (!type) throw py::error_already_set();
    m.add_object(name, py::handle(type));
    return py::handle(type).inc_ref();
}

void register_errors(py::module_& m) {
    ErrorTypes& t = error_types();
    t.error = new_exception(m, "Error", PyExc_RuntimeError);
    t.domain = new_exception(m, "DomainError", py::make_tuple(t.error, py::handle(PyExc_ValueError)));
    t.zero = new_exception(m, "ZeroDivisionError", py::make_tuple(t.domain, py::handle(PyExc_ZeroDivisionError)));
    t.invariant = new_exception(m, "InvariantViolation", t.error);
    t.resume = new_exception(m, "ResumeError", t.error);

    py::register_exception_translator([](std::exception_ptr p) {
        const ErrorTypes& t = error_types();
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ratmed::ZeroDivisionError& e) {
            py::object exc = py::reinterpret_borrow<py::object>(t.zero)(e.what());
            exc.attr("index") = e.index();
            PyErr_SetObject(t.zero.ptr(), exc.ptr());
        } catch (const DomainError& e) {
            PyErr_SetString(t.domain.ptr(), e.what());
        } catch (const InvariantViolation& e) {
            PyErr_SetString(t.invariant.ptr(), e.what());
        } catch (const ResumeError& e) {
            PyErr_SetString(t.resume.ptr(), e.what());
        } catch (const ratmed::Error& e) {
            PyErr_SetString(t.error.ptr(), e.what());
        }
    });
}

py::tuple point(const PlanePoint& p) { return py::make_tuple(p.u, p.v); }
py::tuple triple(const SchubertTriple& s) { return py::make_tuple(s.m, s.p, s.x); }

py::dict family_dict(const FamilyTriangle& f) {
    py::dict d;
    d["n"] = f.n;
    d["a"] = f.a;
    d["b"] = f.b;
    d["c"] = f.c;
    d["k"] = f.k;
    d["l"] = f.l;
    d["area"] = f.area;
    d["s"] = f.s;
    return d;
}

py::dict factor_dict(const FactorRow& r) {
    py::dict d;
    d["s"] = r.s.to_string();
    d["s_minus_a"] = r.s_minus_a.to_string();
    d["s_minus_b"] = r.s_minus_b.to_string();
    d["s_minus_c"] = r.s_minus_c.to_string();
    d["area"] = r.area.to_string();
    return d;
}

py::dict found_dict(const FoundTriangle& t) {
    py::dict d;
    d["sides"] = py::make_tuple(t.sides[0], t.sides[1], t.sides[2]);
    d["k"] = t.k;
    d["l"] = t.l;
    d["area"] = t.area;
    d["theta"] = t.source.theta;
    d["phi"] = t.source.phi;
    d["class"] = t.classification ? py::object(py::str(t.classification->to_string())) : py::object(py::none());
    return d;
}

std::vector<Rational> sequence_terms(const SomosSequence& s) { return s.terms(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for Heron triangles with two rational medians.";
    register_errors(m);

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "factorize",
        [](const Integer& n) {
            const Factorization f = factorize(n);
            py::list out;
            for (const auto& t : f.terms()) out.append(py::make_tuple(t.prime, t.exponent));
            return out;
        },
        py::arg("n"), "[(prime, exponent), ...] in increasing prime order.");
    m.def(
        "int_sqrt",
        [](const Integer& n) {
            const SqrtResult r = int_sqrt(n);
            return py::make_tuple(r.root, r.exact);
        },
        py::arg("n"), "(floor(sqrt(n)), exact)");
    m.def("rat_sqrt", &rat_sqrt, py::arg("q"), "Exact square root, or None.");
    m.def(
        "normalize_triple",
        [](const Rational& a, const Rational& b, const Rational& c) {
            const NormalizedTriple t = normalize_triple(a, b, c);
            return py::make_tuple(py::make_tuple(t.sides[0], t.sides[1], t.sides[2]), t.scale);
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "heron_area", [](const Rational& a, const Rational& b, const Rational& c) { return heron_area(Triangle(a, b, c)); },
        py::arg("a"), py::arg("b"), py::arg("c"), "Area if rational, else None.");
    m.def(
        "medians",
        [](const Rational& a, const Rational& b, const Rational& c) {
            const MedianData md = medians(Triangle(a, b, c));
            py::dict d;
            d["k_sq"] = md.k_sq;
            d["l_sq"] = md.l_sq;
            d["m_sq"] = md.m_sq;
            d["k"] = md.k;
            d["l"] = md.l;
            d["m"] = md.m;
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("canonical_S", &canonical_S, py::arg("n"));
    m.def("canonical_T", &canonical_T, py::arg("n"));
    m.def(
        "somos5",
        [](std::vector<Rational> seed, std::size_t count, long base) {
            return sequence_terms(somos5_extend(SomosSequence(base, std::move(seed)), count));
        },
        py::arg("seed"), py::arg("count"), py::arg("base") = 0, "Seed terms followed by `count` further terms.");
    m.def(
        "somos5_backward",
        [](std::vector<Rational> seed, std::size_t count, long base) {
            return sequence_terms(somos5_backward(SomosSequence(base, std::move(seed)), count));
        },
        py::arg("seed"), py::arg("count"), py::arg("base") = 0, "`count` earlier terms followed by the seed.");

    m.def("qrt_apply", [](const Rational& u, const Rational& v) { return point(qrt_apply({u, v})); });
    m.def("qrt_inverse", [](const Rational& u, const Rational& v) { return point(qrt_inverse({u, v})); });
    m.def("invariant_J", [](const Rational& u, const Rational& v) { return invariant_J({u, v}); });
    m.def("curve_residual", [](const Rational& u, const Rational& v) { return curve_residual({u, v}); });
    m.def(
        "orbit",
        [](const Rational& u, const Rational& v, std::size_t steps) {
            py::list out;
            for (const auto& p : orbit({u, v}, steps)) out.append(point(p));
            return out;
        },
        py::arg("u"), py::arg("v"), py::arg("steps"));

    m.def("family_triangle", [](long n) { return family_dict(family_triangle(n)); }, py::arg("n"));
    m.def("factor_table_row", [](long n) { return factor_dict(factor_table_row(n)); }, py::arg("n"));
    m.def(
        "factor_heron_quantities",
        [](const Rational& a, const Rational& b, const Rational& c) {
            return factor_dict(factor_heron_quantities(Triangle(a, b, c)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "verify_family",
        [](long n) {
            const FamilyReport r = verify_family(n);
            py::dict d;
            d["n"] = r.n;
            d["ok"] = r.ok();
            d["m_sq"] = r.m_sq;
            d["failures"] = r.failures;
            return d;
        },
        py::arg("n"));
    m.def(
        "schubert_conjectural",
        [](long n) {
            const ConjecturalSchubert c = schubert_conjectural(n);
            return py::make_tuple(c.m_a, c.m_b);
        },
        py::arg("n"), "(M_a, M_b)");

    m.def(
        "buchholz_sides",
        [](const Rational& theta, const Rational& phi, const Rational& tau) {
            const auto s = buchholz_sides({theta, phi}, tau);
            return py::make_tuple(s[0], s[1], s[2]);
        },
        py::arg("theta"), py::arg("phi"), py::arg("tau") = Rational(1));
    m.def("constraints_ok", [](const Rational& theta, const Rational& phi) { return constraints_ok({theta, phi}); });
    m.def("c4_residual", [](const Rational& theta, const Rational& phi) { return c4_residual({theta, phi}); });
    m.def(
        "params_from_triangle",
        [](const Rational& a, const Rational& b, const Rational& c, const Rational& k, const Rational& l) {
            py::list out;
            for (const auto& p : params_from_triangle(Triangle(a, b, c), k, l)) out.append(py::make_tuple(p.theta, p.phi));
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("k"), py::arg("l"), "Sign pairs (+,+), (+,-), (-,+), (-,-).");

    m.def(
        "schubert_from_triangle",
        [](const Rational& a, const Rational& b, const Rational& c, const Rational& k, const Rational& area) {
            return triple(schubert_from_triangle(Triangle(a, b, c), k, area));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("k"), py::arg("area"));
    m.def("schubert_residual", [](const Rational& M, const Rational& P, const Rational& X) {
        return schubert_residual({M, P, X});
    });
    m.def("schubert_normalize", [](const Rational& M, const Rational& P, const Rational& X) {
        return triple(schubert_normalize({M, P, X}));
    });
    m.def(
        "triangle_from_schubert",
        [](const Rational& M, const Rational& P, const Rational& X, const Rational& scale) {
            const SchubertTriangle t = triangle_from_schubert({M, P, X}, scale);
            py::dict d;
            d["sides"] = py::make_tuple(t.triangle.a(), t.triangle.b(), t.triangle.c());
            d["k"] = t.k;
            d["area"] = t.area;
            return d;
        },
        py::arg("M"), py::arg("P"), py::arg("X"), py::arg("scale") = Rational(1));

    m.def("count_params", &count_params, py::arg("height"));
    m.def(
        "test_candidate",
        [](const Rational& theta, const Rational& phi) -> py::object {
            const auto t = test_candidate({theta, phi});
            return t ? py::object(found_dict(*t)) : py::object(py::none());
        },
        py::arg("theta"), py::arg("phi"));
    m.def(
        "run_search",
        [](int height, int workers, std::size_t chunk_size, std::optional<std::string> checkpoint, bool resume,
           std::optional<std::size_t> stop_after) {
            SearchConfig cfg;
            cfg.height = height;
            cfg.workers = workers;
            cfg.chunk_size = chunk_size;
            if (checkpoint) cfg.checkpoint_path = *checkpoint;
            cfg.resume = resume;
            cfg.stop_after_chunks = stop_after;
            SearchResult r;
            {
                py::gil_scoped_release release;
                r = run_search(cfg);
            }
            py::dict d;
            py::list triangles;
            for (const auto& t : r.triangles) triangles.append(found_dict(t));
            d["triangles"] = triangles;
            d["candidates"] = r.candidates;
            d["chunks_done"] = r.chunks_done;
            d["chunks_total"] = r.chunks_total;
            d["complete"] = r.complete();
            return d;
        },
        py::arg("height"), py::arg("workers") = 1, py::arg("chunk_size") = 1024, py::arg("checkpoint") = py::none(),
        py::arg("resume") = false, py::arg("stop_after") = py::none());
}
