// Python bindings for the main operations: isomorphism classes, Hall
// numbers and products, the coproduct check, Serre residuals, flag
// geometry and interpolation. Exact coefficients cross the boundary as
// strings; representations as opaque handles.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hallq/cli.hpp"
#include "hallq/flag.hpp"
#include "hallq/gkm.hpp"
#include "hallq/interpolate.hpp"
#include "hallq/render.hpp"
#include "hallq/verify.hpp"

namespace py = pybind11;
using namespace hallq;

namespace {

TwistMode twist_of(const std::string& s) {
    if (s == "half") return TwistMode::half;
    if (s == "integer") return TwistMode::integer;
    throw std::invalid_argument("twist must be half or integer");
}

Quiver quiver_of(const std::string& name) { return quiver_preset(name); }

struct HallSession {
    Quiver quiver;
    Context ctx;
    HallSession(const std::string& quiver_name, int q, int n, const std::string& twist,
              std::uint64_t budget)
        : quiver(quiver_of(quiver_name)),
          ctx(quiver, RingParams{q, n}, twist_of(twist), budget) {}

    std::vector<int> word_indices(const std::vector<int>& labels) {
        std::vector<int> out;
        for (int label : labels) out.push_back(quiver.index_of(label));
        return out;
    }
};

py::list hall_element_terms(HallSession& pc, const HallElement& elem) {
    py::list out;
    for (auto& [rep, c] : elem.terms) out.append(py::make_tuple(rep, c.str()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_hallq, m) {
    m.doc() = "exact Hall algebras of free quiver representations over F_q[t]/(t^n)";

    py::class_<FreeRep>(m, "FreeRep")
        .def_property_readonly("dim", [](const FreeRep& r) { return r.dim; })
        .def("__eq__", [](const FreeRep& a, const FreeRep& b) { return a == b; })
        .def("__hash__",
             [](const FreeRep& r) {
                 size_t h = 0;
                 for (std::uint32_t x : rep_code(r)) h = h * 1000003u + x;
                 return h;
             })
        .def("__repr__", [](const FreeRep& r) {
            // entry-free representations render from dimensions alone
            RingParams p{2, 1};
            for (const RMatrix& mtx : r.maps)
                if (!mtx.e.empty()) {
                    p = RingParams{static_cast<int>(mtx.e[0].q), static_cast<int>(mtx.e[0].n)};
                    break;
                }
            return rep_str(Ring(p), r);
        });

    py::class_<HallSession>(m, "Context")
        .def(py::init<const std::string&, int, int, const std::string&, std::uint64_t>(),
             py::arg("quiver") = "a2", py::arg("q") = 2, py::arg("n") = 1,
             py::arg("twist") = "half", py::arg("budget") = kDefaultBudget)
        .def_property_readonly("q", [](HallSession& pc) { return pc.ctx.q(); })
        .def_property_readonly("n", [](HallSession& pc) { return pc.ctx.n(); })
        .def("simple",
             [](HallSession& pc, int label) { return pc.ctx.simple(pc.quiver.index_of(label)); },
             py::arg("vertex"))
        .def("classes",
             [](HallSession& pc, const std::vector<int>& dim) { return pc.ctx.classes(dim); },
             py::arg("dim"))
        .def("canonical", [](HallSession& pc, const FreeRep& r) { return pc.ctx.canonical(r); })
        .def("aut", [](HallSession& pc, const FreeRep& r) { return pc.ctx.aut(r); })
        .def("hall_number",
             [](HallSession& pc, const FreeRep& l, const FreeRep& x, const FreeRep& y) {
                 return pc.ctx.hall_number(l, x, y);
             },
             py::arg("L"), py::arg("X"), py::arg("Y"))
        .def("euler_form",
             [](HallSession& pc, const DimVec& a, const DimVec& b) {
                 return euler_form(pc.quiver, a, b);
             })
        .def("product",
             [](HallSession& pc, const std::vector<int>& word) {
                 return hall_element_terms(pc, pc.ctx.word_product(pc.word_indices(word)));
             },
             py::arg("word"), "product of a word of simples, as (class, coefficient) pairs")
        .def("product_json",
             [](HallSession& pc, const std::vector<int>& word) {
                 return hall_element_json(pc.ctx.ring(),
                                          pc.ctx.word_product(pc.word_indices(word)))
                     .dump();
             })
        .def("delta_check",
             [](HallSession& pc, const FreeRep& m, const FreeRep& n) {
                 DeltaReport r = pc.ctx.check_delta_homomorphism(m, n);
                 py::dict out;
                 out["homomorphism"] = r.homomorphism;
                 py::list lhs_only, rhs_only;
                 for (auto& key : r.lhs_only)
                     lhs_only.append(py::make_tuple(key.first, key.second));
                 for (auto& key : r.rhs_only)
                     rhs_only.append(py::make_tuple(key.first, key.second));
                 out["lhs_only"] = lhs_only;
                 out["rhs_only"] = rhs_only;
                 return out;
             },
             py::arg("M"), py::arg("N"))
        .def("rep_from_tpow",
             [](HallSession& pc, int tpow) {
                 if (pc.quiver.arrow_count() != 1)
                     throw std::invalid_argument("needs a single-arrow quiver");
                 const Arrow& h = pc.quiver.arrows[0];
                 DimVec dim(pc.quiver.vertex_count(), 0);
                 dim[h.src] = dim[h.dst] = 1;
                 FreeRep rep = zero_rep(pc.quiver, pc.ctx.ring(), dim);
                 rep.maps[0].at(0, 0) = pc.ctx.ring().t_pow(tpow);
                 return rep;
             },
             py::arg("tpow"), "the class (R -t^tpow-> R) on a single-arrow quiver")
        .def("serre_residual",
             [](HallSession& pc, int i, int j, const std::string& coeff) {
                 HallElement r = serre_residual(pc.ctx, pc.quiver.index_of(i),
                                                pc.quiver.index_of(j), parse_laurent(coeff));
                 return py::make_tuple(r.is_zero(), hall_element_terms(pc, r));
             },
             py::arg("i"), py::arg("j"), py::arg("coeff") = "v + v^-1")
        .def("commutation_check", [](HallSession& pc, int i, int j) {
            return commutation_check(pc.ctx, pc.quiver.index_of(i), pc.quiver.index_of(j));
        });

    m.def("grassmann_count",
          [](int q, int n, int s, int l) {
              return free_grassmannian_count(Ring(RingParams{q, n}), s, l);
          },
          py::arg("q"), py::arg("n"), py::arg("s"), py::arg("l"));

    m.def("flag_quantities",
          [](const std::string& quiver_name, int n,
             const std::vector<std::pair<int, int>>& steps) {
              Quiver quiver = quiver_of(quiver_name);
              FlagType ft;
              for (auto& [label, mult] : steps) ft.push_back({quiver.index_of(label), mult});
              FlagDims d = flag_dims(quiver, ft, n);
              py::dict out;
              out["flag_dim"] = d.flag_dim;
              out["bundle_rank"] = d.bundle_rank;
              out["total_dim"] = d.total_dim;
              out["perverse_shift"] = d.perverse_shift;
              return out;
          },
          py::arg("quiver"), py::arg("n"), py::arg("flag"));

    m.def("interpolate_word",
          [](const std::string& quiver_name, int n, const std::vector<long long>& primes,
             const std::vector<int>& word_labels) {
              Quiver quiver = quiver_of(quiver_name);
              std::vector<int> word;
              for (int label : word_labels) word.push_back(quiver.index_of(label));
              WordInterpolation wi = interpolate_word(quiver, n, primes, word);
              Ring R0(RingParams{static_cast<int>(primes.at(0)), n});
              py::list terms;
              for (const InterpolatedTerm& t : wi.terms)
                  terms.append(py::make_tuple(rep_str(R0, t.rep), t.poly.str(), t.coeff.str()));
              return py::make_tuple(wi.twist_exponent, terms);
          },
          py::arg("quiver"), py::arg("n"), py::arg("primes"), py::arg("word"));

    m.def("run_acceptance",
          [](std::uint64_t seed) {
              py::list out;
              for (const auto& r : verify::run_acceptance(seed)) {
                  py::dict d;
                  d["number"] = r.number;
                  d["name"] = r.name;
                  d["passed"] = r.passed;
                  d["detail"] = r.detail;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("seed") = 123456789);

    m.def("cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "run the command-line interface in-process");
}
