// Python bindings for the casilab core: algebras, chains, polynomials,
// invariants, contractions, enveloping-algebra operations and the
// missing-label pipeline.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "casilab/builtins.hpp"
#include "casilab/contraction.hpp"
#include "casilab/enveloping.hpp"
#include "casilab/invariants.hpp"
#include "casilab/io.hpp"
#include "casilab/mlp.hpp"

namespace py = pybind11;
using namespace casilab;

namespace {

// JSON strings are the exchange format at the boundary; python callers can
// json.loads them or hand them to the file-based CLI unchanged.
std::string dump(const io::json& j) { return j.dump(2); }

Poly poly_from_string(const std::string& text) {
    return io::poly_from_json(io::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Lie-algebra invariants, contractions and missing-label operators";
    m.attr("__version__") = io::kToolVersion;

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<capacity_error>(m, "CapacityError");

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const std::string& s) { return Scalar::parse(s); }))
        .def_static("i", &Scalar::i)
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; })
        .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
        .def("is_zero", &Scalar::is_zero)
        .def("is_real", &Scalar::is_real);

    py::class_<Poly>(m, "Poly")
        .def_static("from_json", &poly_from_string)
        .def_static("variable", &Poly::variable)
        .def_property_readonly("dim", &Poly::dim)
        .def("term_count", &Poly::term_count)
        .def("total_degree", &Poly::total_degree)
        .def("is_zero", &Poly::is_zero)
        .def("eval", &Poly::eval)
        .def("partial", &Poly::partial)
        .def("to_json", [](const Poly& p) { return dump(io::poly_to_json(p)); })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__str__", [](const Poly& p) { return p.str(); })
        .def("__repr__", [](const Poly& p) { return "Poly(" + p.str() + ")"; });

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_static("from_json",
                    [](const std::string& s) { return io::algebra_from_json(io::json::parse(s)); })
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def_property_readonly("name", &LieAlgebra::name)
        .def_property_readonly("generator_names", &LieAlgebra::names)
        .def("bracket", &LieAlgebra::bracket)
        .def("to_json", [](const LieAlgebra& a) { return dump(io::algebra_to_json(a)); })
        .def("__repr__", [](const LieAlgebra& a) {
            std::ostringstream os;
            os << "LieAlgebra(" << (a.name().empty() ? "?" : a.name()) << ", dim " << a.dim()
               << ")";
            return os.str();
        });

    py::class_<ChainSpec>(m, "ChainSpec")
        .def_static("from_json",
                    [](const std::string& s) { return io::chain_from_json(io::json::parse(s)); })
        .def_readonly("sub_dim", &ChainSpec::sub_dim)
        .def("to_json", [](const ChainSpec& c) { return dump(io::chain_to_json(c)); });

    py::class_<MatrixTemplate>(m, "MatrixTemplate")
        .def_static("from_json",
                    [](const std::string& s) { return io::template_from_json(io::json::parse(s)); })
        .def_readonly("size", &MatrixTemplate::size)
        .def_readonly("dim", &MatrixTemplate::dim)
        .def("to_json", [](const MatrixTemplate& t) { return dump(io::template_to_json(t)); });

    py::class_<BiDegree>(m, "BiDegree")
        .def_readonly("sub_deg", &BiDegree::sub_deg)
        .def_readonly("comp_deg", &BiDegree::comp_deg)
        .def("__repr__", [](const BiDegree& b) {
            return "BiDegree(sub=" + std::to_string(b.sub_deg) +
                   ", comp=" + std::to_string(b.comp_deg) + ")";
        });

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("sub_dim", &Decomposition::sub_dim)
        .def_readonly("max_comp_deg", &Decomposition::max_comp_deg)
        .def_property_readonly("components",
                               [](const Decomposition& d) {
                                   std::vector<std::pair<std::pair<uint32_t, uint32_t>, Poly>> out;
                                   for (const auto& [bd, p] : d.components)
                                       out.push_back({{bd.sub_deg, bd.comp_deg}, p});
                                   return out;
                               })
        .def("contracted_invariant", &Decomposition::contracted_invariant)
        .def("phi0", &Decomposition::phi0)
        .def("has_phi0", &Decomposition::has_phi0);

    py::class_<UEElement>(m, "UEElement")
        .def_static("from_json",
                    [](const std::string& s) { return io::ue_from_json(io::json::parse(s)); })
        .def_readonly("dim", &UEElement::dim)
        .def("term_count", &UEElement::term_count)
        .def("degree", &UEElement::degree)
        .def("is_zero", &UEElement::is_zero)
        .def("symbol", &UEElement::symbol)
        .def("to_json", [](const UEElement& e) { return dump(io::ue_to_json(e)); })
        .def("__eq__", [](const UEElement& a, const UEElement& b) { return a == b; })
        .def("__str__", [](const UEElement& e) { return e.str(); });

    py::class_<MLPCounts>(m, "MLPCounts")
        .def_readonly("dim_s", &MLPCounts::dim_s)
        .def_readonly("n_s", &MLPCounts::n_s)
        .def_readonly("dim_h", &MLPCounts::dim_h)
        .def_readonly("n_h", &MLPCounts::n_h)
        .def_readonly("l_prime", &MLPCounts::l_prime)
        .def_readonly("needed", &MLPCounts::needed)
        .def_readonly("available", &MLPCounts::available)
        .def_readonly("total_solutions", &MLPCounts::total_solutions);

    // builders
    m.def("build_su2", &build_su2);
    m.def("build_abelian", &build_abelian);
    m.def("build_sp6", &build_sp6);
    m.def("build_su22", &build_su22);
    m.def("sp6_unitary_chain", &sp6_unitary_chain);
    m.def("su22_cartan_chain", &su22_cartan_chain);
    m.def("sp6_charpoly_template", &sp6_charpoly_template);
    m.def("su22_charpoly_template", &su22_charpoly_template);

    // structure
    m.def("validate_jacobi", [](const LieAlgebra& a) {
        JacobiReport r = validate_jacobi(a);
        return py::make_tuple(r.pass, r.violations.size());
    });
    m.def("check_chain", [](const LieAlgebra& a, const ChainSpec& c) {
        ChainReport r = check_chain(a, c);
        return py::make_tuple(r.pass, r.complement_dim, r.violation);
    });
    m.def("change_basis",
          [](const LieAlgebra& a, const ChainSpec& c) { return chain_basis_algebra(a, c); },
          "algebra in the chain basis");

    // invariants
    m.def("apply_generator", &apply_generator);
    m.def("is_invariant", &is_invariant);
    m.def("is_subgroup_scalar", &is_subgroup_scalar);
    m.def("count_invariants", &count_invariants, py::arg("algebra"), py::arg("seed"),
          py::arg("retries") = 5, py::arg("bound") = 100);
    m.def("internal_label_count", &internal_label_count);
    m.def("racah_number", &racah_number);
    m.def("solve_invariants_degree",
          [](const LieAlgebra& a, uint32_t d) { return solve_invariants_degree(a, d); });
    m.def("charpoly_invariants", [](const MatrixTemplate& t, const std::vector<uint32_t>& deg) {
        auto res = charpoly_invariants(t, deg);
        return py::make_tuple(res.invariants, res.nonreal_degrees);
    });

    // contraction
    m.def("contract", &contract);
    m.def("bidegree_split", &bidegree_split);
    m.def("decompose_casimir", &decompose_casimir);
    m.def("independence_bound", &independence_bound);
    m.def("mlp_counts", &mlp_counts);
    m.def("compute_lprime", &compute_lprime);

    // enveloping algebra
    m.def("symmetrize", [](const LieAlgebra& a, const Poly& p) {
        UEContext ctx(a);
        return ctx.symmetrize(p);
    });
    m.def("normal_order", [](const LieAlgebra& a, const std::vector<uint32_t>& word) {
        UEContext ctx(a);
        return ctx.normal_order(word);
    });
    m.def("ue_multiply", [](const LieAlgebra& a, const UEElement& x, const UEElement& y) {
        UEContext ctx(a);
        return ctx.multiply(x, y);
    });
    m.def(
        "ue_commutator",
        [](const LieAlgebra& a, const UEElement& x, const UEElement& y, unsigned threads) {
            return parallel_commutator(a, x, y, threads);
        },
        py::arg("algebra"), py::arg("a"), py::arg("b"), py::arg("threads") = 1);
    m.def("poisson_bracket", &poisson_bracket);

    // pipeline
    m.def(
        "mlp_solve",
        [](const LieAlgebra& a, const ChainSpec& c, const std::map<uint32_t, Poly>& casimirs,
           uint64_t seed, bool exact, unsigned threads) {
            MLPOptions opts;
            opts.seed = seed;
            opts.exact_commutators = exact;
            opts.threads = threads;
            MLPReport rep = mlp_solve(a, c, casimirs, opts);
            return dump(io::mlp_report_to_json(rep));
        },
        py::arg("algebra"), py::arg("chain"), py::arg("casimirs"), py::arg("seed") = 0,
        py::arg("exact") = true, py::arg("threads") = 1,
        "runs the full pipeline and returns the report as a JSON string");
}
