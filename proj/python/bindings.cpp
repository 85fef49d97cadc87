#include "hilbrel/grr.hpp"
#include "hilbrel/lattice.hpp"
#include "hilbrel/relations.hpp"
#include "hilbrel/surface.hpp"
#include "hilbrel/surface_file.hpp"
#include "hilbrel/swbridge.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hilbrel;

namespace pybind11::detail {

// Python int <-> mpz through the decimal string, so no size limit applies.
template <>
struct type_caster<Integer> {
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr()))
            return false;
        value = Integer(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Integer& x, return_value_policy, handle)
    {
        return PyLong_FromString(x.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<LatticeClass> {
    PYBIND11_TYPE_CASTER(LatticeClass, const_name("list[int]"));

    bool load(handle src, bool convert)
    {
        list_caster<std::vector<Integer>, Integer> inner;
        if (!inner.load(src, convert))
            return false;
        value = LatticeClass(static_cast<std::vector<Integer>&>(inner));
        return true;
    }

    static handle cast(const LatticeClass& x, return_value_policy policy, handle parent)
    {
        return list_caster<std::vector<Integer>, Integer>::cast(x.coords(), policy, parent);
    }
};

}  // namespace pybind11::detail

namespace {

Side side_from(const std::string& s)
{
    if (s == "primal")
        return Side::primal;
    if (s == "dual")
        return Side::dual;
    throw py::value_error("side must be 'primal' or 'dual'");
}

Direction direction_from(const std::string& s)
{
    if (s == "down")
        return Direction::down;
    if (s == "up")
        return Direction::up;
    throw py::value_error("direction must be 'down' or 'up'");
}

ExponentConvention convention_from(const std::string& s)
{
    if (s == "corrected")
        return ExponentConvention::corrected;
    if (s == "as_printed")
        return ExponentConvention::as_printed;
    throw py::value_error("convention must be 'corrected' or 'as_printed'");
}

ExtForm make_form(int q, const std::string& side, const py::dict& terms)
{
    ExtForm f(q, side_from(side));
    for (auto [key, value] : terms) {
        std::vector<int> idx;
        for (auto i : py::reinterpret_borrow<py::iterable>(key))
            idx.push_back(i.cast<int>());
        f.add_term(subset_from_indices(idx, q), value.cast<Integer>());
    }
    return f;
}

py::dict form_terms(const ExtForm& f)
{
    py::dict out;
    for (const auto& [s, c] : f.terms()) {
        const std::vector<int> idx = indices_of(s);
        out[py::tuple(py::cast(idx))] = py::cast(c);
    }
    return out;
}

Lattice lattice_from(const std::vector<std::vector<Integer>>& gram) { return Lattice(gram); }

py::dict named_classes(const SurfaceDocument& d)
{
    py::dict out;
    for (const auto& [name, c] : d.classes)
        out[py::str(name)] = py::cast(c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact cohomology of Hilbert schemes of curves on surfaces";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", error);
    py::register_exception<ParityError>(m, "ParityError", error);
    py::register_exception<DegreeError>(m, "DegreeError", error);
    py::register_exception<IntegralityError>(m, "IntegralityError", error);
    py::register_exception<MismatchError>(m, "MismatchError", error);
    py::register_exception<ParseError>(m, "ParseError", error);

    py::class_<ExtForm>(m, "Form")
        .def(py::init(&make_form), py::arg("q"), py::arg("side"), py::arg("terms") = py::dict(),
             "Form on H^1 (primal) or its dual; terms maps index tuples to coefficients.")
        .def_property_readonly("q", &ExtForm::q)
        .def_property_readonly("side", [](const ExtForm& f) { return f.side() == Side::primal ? "primal" : "dual"; })
        .def_property_readonly("terms", &form_terms)
        .def("coefficient", [](const ExtForm& f, const std::vector<int>& idx) { return f.coefficient(idx); })
        .def("part", &ExtForm::part, py::arg("degree"))
        .def("is_zero", &ExtForm::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__rmul__", [](const ExtForm& f, const Integer& s) { return s * f; })
        .def("__mul__", [](const ExtForm& f, const Integer& s) { return s * f; })
        .def("__str__", [](const ExtForm& f) { return to_display(f); })
        .def("__repr__", [](const ExtForm& f) { return "Form(" + to_display(f) + ")"; });

    m.def("wedge", [](const ExtForm& a, const ExtForm& b) { return wedge(a, b); });
    m.def("contract", [](const ExtForm& phi, const ExtForm& x) { return contract(phi, x); },
          "phi _| x for a dual form phi and a primal form x.");
    m.def("pairing", [](const ExtForm& phi, const ExtForm& x) { return pairing(phi, x); });
    m.def("exp2", [](const ExtForm& k) { return exp2(k); }, "exp of a 2-form, via Pfaffians.");

    m.def("dot", [](const std::vector<std::vector<Integer>>& gram, const LatticeClass& x, const LatticeClass& y) {
        return dot(lattice_from(gram), x, y);
    });
    m.def("expected_dimension", [](const std::vector<std::vector<Integer>>& gram, const LatticeClass& mm,
                                   const LatticeClass& k) { return expected_dimension(lattice_from(gram), mm, k); });
    m.def("arithmetic_genus", [](const std::vector<std::vector<Integer>>& gram, const LatticeClass& c,
                                 const LatticeClass& k) { return arithmetic_genus(lattice_from(gram), c, k); });

    py::class_<SurfaceTopology>(m, "Surface")
        .def_readonly("q", &SurfaceTopology::q)
        .def_readonly("chi", &SurfaceTopology::chi)
        .def_readonly("k", &SurfaceTopology::k)
        .def_readonly("pg_positive", &SurfaceTopology::pg_positive)
        .def_property_readonly("gram", [](const SurfaceTopology& s) { return s.h2.gram(); })
        .def_property_readonly("h2_rank", [](const SurfaceTopology& s) { return s.h2.rank(); })
        .def("cup", &SurfaceTopology::cup, py::arg("i"), py::arg("j"))
        .def("validate", [](const SurfaceTopology& s) { return validate(s); })
        .def("dot", [](const SurfaceTopology& s, const LatticeClass& x, const LatticeClass& y) {
            return dot(s.h2, x, y);
        })
        .def("kappa", [](const SurfaceTopology& s, const LatticeClass& c) { return kappa(s, c); })
        .def("theta", [](const SurfaceTopology& s, const LatticeClass& c) { return theta(s, c); })
        .def("xi", [](const SurfaceTopology& s) { return xi(s); })
        .def(py::self == py::self);

    m.def("abelian_surface", &abelian_surface);
    m.def("q0_surface",
          [](const std::vector<std::vector<Integer>>& gram, const LatticeClass& k, const Integer& chi, bool pg) {
              return q0_surface(lattice_from(gram), k, chi, pg);
          },
          py::arg("gram"), py::arg("k"), py::arg("chi"), py::arg("pg_positive") = false);

    py::class_<MomentSequence>(m, "Moments")
        .def(py::init([](const LatticeClass& mm, std::vector<ExtForm> a) { return MomentSequence{mm, std::move(a)}; }),
             py::arg("m"), py::arg("moments"))
        .def_readonly("m", &MomentSequence::m)
        .def_readonly("moments", &MomentSequence::moments)
        .def(py::self == py::self);

    py::class_<SurfaceDocument>(m, "Document")
        .def_readonly("surface", &SurfaceDocument::surface)
        .def_property_readonly("classes", &named_classes)
        .def_property_readonly("moments", [](const SurfaceDocument& d) {
            py::dict out;
            for (const auto& nm : d.moments)
                out[py::str(nm.name)] = py::cast(nm.sequence);
            return out;
        })
        .def_property_readonly("forms", [](const SurfaceDocument& d) {
            py::dict out;
            for (const auto& nf : d.forms)
                out[py::str(nf.name)] = py::cast(nf.form);
            return out;
        })
        .def("write", [](const SurfaceDocument& d) { return write_surface(d); });

    m.def("load_surface", &load_surface, py::arg("path"));
    m.def("parse_surface", [](const std::string& text) { return parse_surface_string(text); }, py::arg("text"));

    py::class_<PushforwardCharacter>(m, "Character")
        .def_readonly("rank", &PushforwardCharacter::rank)
        .def_readonly("d2", &PushforwardCharacter::d2)
        .def_readonly("d4", &PushforwardCharacter::d4)
        .def(py::self == py::self)
        .def("__repr__", [](const PushforwardCharacter& c) { return to_display(c); });

    py::class_<Lemma1Result>(m, "Lemma1Result")
        .def_readonly("equal", &Lemma1Result::equal)
        .def_readonly("pipeline", &Lemma1Result::pipeline)
        .def_readonly("closed", &Lemma1Result::closed)
        .def_readonly("diff", &Lemma1Result::diff);

    m.def("ch_pushforward", py::overload_cast<const SurfaceTopology&, const LatticeClass&>(&ch_pushforward),
          "Character of pi_! of the Poincare line bundle, through the Kunneth ring.");
    m.def("closed_form_ch", &closed_form_ch);
    m.def("verify_lemma1", py::overload_cast<const SurfaceTopology&, const LatticeClass&>(&verify_lemma1));
    m.def("difference_character",
          py::overload_cast<const SurfaceTopology&, const LatticeClass&, const LatticeClass&>(&difference_character));
    m.def("difference_chern",
          py::overload_cast<const SurfaceTopology&, const LatticeClass&, const LatticeClass&>(&difference_chern));

    m.def("u_exponent",
          [](const SurfaceTopology& s, const LatticeClass& mm, const LatticeClass& c, const std::string& dir,
             const std::string& conv) { return u_exponent(s, mm, c, direction_from(dir), convention_from(conv)); },
          py::arg("surface"), py::arg("m"), py::arg("c"), py::arg("direction") = "down",
          py::arg("convention") = "corrected");
    m.def("relation_applies",
          [](const SurfaceTopology& s, const LatticeClass& mm, const LatticeClass& c, const std::string& dir) {
              return relation_applies(s, mm, c, direction_from(dir));
          },
          py::arg("surface"), py::arg("m"), py::arg("c"), py::arg("direction") = "down");
    m.def("push",
          [](const SurfaceTopology& s, const LatticeClass& mm, const LatticeClass& c, const MomentSequence& src,
             const std::string& dir) {
              PushResult r = push(s, mm, c, direction_from(dir), src);
              return py::make_tuple(r.result, r.warnings);
          },
          py::arg("surface"), py::arg("m"), py::arg("c"), py::arg("src"), py::arg("direction") = "down",
          "Moments of m from the moments of m - c (down) or m + c (up); returns (moments, warnings).");
    m.def("assemble_plus", &assemble_plus, py::arg("moments"), py::arg("q"));
    m.def("relation_thm6",
          [](const SurfaceTopology& s, const LatticeClass& mm, const LatticeClass& c, const ExtForm& p,
             const std::string& dir) { return relation_thm6(s, mm, c, direction_from(dir), p); },
          py::arg("surface"), py::arg("m"), py::arg("c"), py::arg("p_src"), py::arg("direction") = "down");

    py::class_<ConsistencyResult>(m, "ConsistencyResult")
        .def_readonly("applies", &ConsistencyResult::applies)
        .def_readonly("plus_ok", &ConsistencyResult::plus_ok)
        .def_readonly("minus_ok", &ConsistencyResult::minus_ok)
        .def_readonly("plus_from_moments", &ConsistencyResult::plus_from_moments)
        .def_readonly("plus_from_relation", &ConsistencyResult::plus_from_relation)
        .def_readonly("minus_from_moments", &ConsistencyResult::minus_from_moments)
        .def_readonly("minus_from_relation", &ConsistencyResult::minus_from_relation)
        .def_readonly("diff", &ConsistencyResult::diff)
        .def("ok", &ConsistencyResult::ok);
    m.def("thm6_consistency",
          [](const SurfaceTopology& s, const LatticeClass& mm, const LatticeClass& c, const MomentSequence& plus,
             const MomentSequence& minus, const std::string& dir) {
              return thm6_consistency(s, mm, c, direction_from(dir), plus, minus);
          },
          py::arg("surface"), py::arg("m"), py::arg("c"), py::arg("src_plus"), py::arg("src_minus"),
          py::arg("direction") = "down");

    py::class_<AdjunctionVerdict>(m, "AdjunctionVerdict")
        .def_readonly("m", &AdjunctionVerdict::m)
        .def_readonly("mc", &AdjunctionVerdict::mc)
        .def_readonly("kc", &AdjunctionVerdict::kc)
        .def_readonly("allowed", &AdjunctionVerdict::allowed)
        .def_readonly("reason", &AdjunctionVerdict::reason)
        .def_readonly("forced_shift", &AdjunctionVerdict::forced_shift)
        .def_readonly("genus_identity_holds", &AdjunctionVerdict::genus_identity_holds)
        .def_readonly("simple_type_consistent", &AdjunctionVerdict::simple_type_consistent);
    m.def("adjunction_check",
          py::overload_cast<const SurfaceTopology&, const std::vector<LatticeClass>&, const LatticeClass&,
                            const Integer&>(&adjunction_check),
          py::arg("surface"), py::arg("basic_classes"), py::arg("c"), py::arg("pa"));

    py::class_<OsEquivalence>(m, "OsEquivalence")
        .def_readonly("lhs", &OsEquivalence::lhs)
        .def_readonly("rhs", &OsEquivalence::rhs)
        .def_readonly("epsilon", &OsEquivalence::epsilon)
        .def_readonly("both_cases", &OsEquivalence::both_cases);
    m.def("os_condition_equiv", py::overload_cast<const Integer&, const Integer&>(&os_condition_equiv),
          py::arg("mc"), py::arg("kc"));

    py::class_<GenusTranslation>(m, "GenusTranslation")
        .def_readonly("genus", &GenusTranslation::genus)
        .def_readonly("n", &GenusTranslation::n)
        .def_readonly("identity_holds", &GenusTranslation::identity_holds)
        .def_readonly("warnings", &GenusTranslation::warnings);
    m.def("genus_selfintersection_translate", &genus_selfintersection_translate);

    py::class_<Lemma4Result>(m, "Lemma4Result")
        .def_readonly("equal", &Lemma4Result::equal)
        .def_readonly("theta", &Lemma4Result::theta)
        .def_readonly("kappa", &Lemma4Result::kappa)
        .def_readonly("mismatches", &Lemma4Result::mismatches);
    m.def("lemma4_check",
          [](const SurfaceTopology& s, int genus, std::vector<std::vector<Integer>> pullback, const LatticeClass& c) {
              return lemma4_check(s, EmbeddedSurfaceData{genus, std::move(pullback), c});
          },
          py::arg("surface"), py::arg("genus"), py::arg("pullback"), py::arg("c"),
          "pullback is the 2q x 2g matrix of j^* v_a on alpha_1..alpha_g, beta_1..beta_g.");
}
