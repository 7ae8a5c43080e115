#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monodromy/cli.hpp"
#include "monodromy/serialize.hpp"

namespace py = pybind11;
using namespace monodromy;

namespace {

BigInt from_py(const py::int_& v) {
  auto parsed = parse_bigint(py::str(v).cast<std::string>());
  if (!parsed) throw py::value_error("not an integer");
  return *parsed;
}

py::int_ to_py(const BigInt& b) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(b).c_str(), nullptr, 10));
}

// Reports cross the boundary as JSON text and are decoded in __init__.py.
std::string dumps(const Json& j) { return j.dump(); }

Direction direction_of(bool forward) { return forward ? Direction::forward : Direction::backward; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact SL2(Z) monodromy factorization toolkit (compiled core)";

  py::register_exception<Error>(m, "MonodromyError");
  py::register_exception<InvalidVector>(m, "InvalidVector", m.attr("MonodromyError"));
  py::register_exception<NotSL2>(m, "NotSL2", m.attr("MonodromyError"));
  py::register_exception<NotRealizable>(m, "NotRealizable", m.attr("MonodromyError"));
  py::register_exception<ShapeError>(m, "ShapeError", m.attr("MonodromyError"));
  py::register_exception<ProductError>(m, "ProductError", m.attr("MonodromyError"));
  py::register_exception<IndexError>(m, "HurwitzIndexError", m.attr("MonodromyError"));
  py::register_exception<ParseError>(m, "ParseError", m.attr("MonodromyError"));

  py::class_<PrimVec>(m, "PrimVec")
      .def(py::init([](const py::int_& p, const py::int_& q) { return PrimVec(from_py(p), from_py(q)); }))
      .def_property_readonly("p", [](const PrimVec& v) { return to_py(v.p()); })
      .def_property_readonly("q", [](const PrimVec& v) { return to_py(v.q()); })
      .def("normalized", &PrimVec::normalized)
      .def("same_line", &PrimVec::same_line)
      .def("__neg__", [](const PrimVec& v) { return -v; })
      .def("__eq__", [](const PrimVec& a, const PrimVec& b) { return a == b; })
      .def("__hash__", [](const PrimVec& v) { return py::hash(py::make_tuple(to_py(v.p()), to_py(v.q()))); })
      .def("__repr__", [](const PrimVec& v) { return "PrimVec" + v.str(); });

  py::class_<Mat2>(m, "Mat2")
      .def(py::init([](const py::int_& a, const py::int_& b, const py::int_& c, const py::int_& d) {
        return Mat2(from_py(a), from_py(b), from_py(c), from_py(d));
      }))
      .def_static("identity", &Mat2::identity)
      .def_property_readonly("a", [](const Mat2& x) { return to_py(x.a()); })
      .def_property_readonly("b", [](const Mat2& x) { return to_py(x.b()); })
      .def_property_readonly("c", [](const Mat2& x) { return to_py(x.c()); })
      .def_property_readonly("d", [](const Mat2& x) { return to_py(x.d()); })
      .def("det", [](const Mat2& x) { return to_py(x.det()); })
      .def("trace", [](const Mat2& x) { return to_py(x.trace()); })
      .def("inverse", &Mat2::inverse)
      .def("pow", &Mat2::pow)
      .def("apply", &Mat2::apply)
      .def("tolist", [](const Mat2& x) {
        return py::make_tuple(py::make_tuple(to_py(x.a()), to_py(x.b())),
                              py::make_tuple(to_py(x.c()), to_py(x.d())));
      })
      .def("__mul__", [](const Mat2& x, const Mat2& y) { return x * y; })
      .def("__neg__", [](const Mat2& x) { return -x; })
      .def("__eq__", [](const Mat2& x, const Mat2& y) { return x == y; })
      .def("__hash__", [](const Mat2& x) { return py::hash(py::str(x.str())); })
      .def("__repr__", [](const Mat2& x) { return "Mat2(" + x.str() + ")"; });

  py::class_<Factorization>(m, "Factorization")
      .def(py::init([](std::vector<Mat2> entries, const std::string& decoration) {
             return Factorization(std::move(entries), parse_decoration(decoration));
           }),
           py::arg("entries"), py::arg("decoration") = "none")
      .def_property_readonly("entries", &Factorization::entries)
      .def_property_readonly("decoration", [](const Factorization& f) { return to_string(f.decoration()); })
      .def("__len__", &Factorization::size)
      .def("__getitem__", [](const Factorization& f, std::size_t i) {
        if (i >= f.size()) throw py::index_error();
        return f[i];
      })
      .def("__eq__", [](const Factorization& a, const Factorization& b) { return a == b; })
      .def("to_json", [](const Factorization& f) { return dumps(to_json(f)); })
      .def_static("from_json", [](const std::string& s) { return factorization_from_json(Json::parse(s)); });

  // sl2z_core
  m.def("transvection", [](const PrimVec& v) { return transvection(v); });
  m.def("transvection_vector", &transvection_vector);
  m.def("conjugate", &conjugate);
  m.def("order_of", [](const Mat2& x) { return order_of(x).str(); });
  m.def("abelianize", &abelianize);
  m.def("solve_vector_transporter", [](const PrimVec& a, const PrimVec& b) {
    auto f = solve_vector_transporter(a, b);
    return py::make_tuple(f.particular, f.step);
  });

  // intpoly (polynomials as {"i,j": coeff} JSON)
  m.def("trace_polynomial_json", [](const std::string& c) { return dumps(to_json(trace_polynomial(parse_canonical(c)))); });
  m.def("trace_polynomial_str", [](const std::string& c) { return trace_polynomial(parse_canonical(c)).str("p", "q"); });
  m.def("trace_polynomial_in_norm", [](const std::string& c) {
    const auto cc = parse_canonical(c);
    auto g = express_in_norm(trace_polynomial(cc), norm_of(cc));
    if (!g) throw py::value_error("not expressible in the norm");
    return py::make_tuple(dumps(to_json(*g)), split_integer_roots(*g).str(cc == CanonicalC::c4 ? "N4" : "N3"));
  });
  m.def("sixth_power_sum_at", [](const py::int_& x, const py::int_& y) { return to_py(sixth_power_sum().eval(from_py(x), from_py(y))); });

  // hurwitz
  m.def("standard_tuple", &standard_tuple);
  m.def("period3_tuple", &period3_tuple);
  m.def("hurwitz_move", [](const Factorization& f, int i, bool forward) { return hurwitz_move(f, i, direction_of(forward)); },
        py::arg("f"), py::arg("i"), py::arg("forward") = true);
  m.def("apply_moves", [](const Factorization& f, const std::string& word) { return apply_moves(f, parse_moves(word)); });
  m.def("rotate", &rotate, py::arg("f"), py::arg("steps") = 1);
  m.def("garside_act", &garside_act);
  m.def("tau_act", &tau_act);
  m.def("eta_act", &eta_act);
  m.def("eta_power", &eta_power);
  m.def("decide_sim_conjugacy_json", [](const Factorization& a, const Factorization& b, int bound) {
    return dumps(to_json(decide_sim_conjugacy(a, b, ConjugacyOptions{bound})));
  }, py::arg("a"), py::arg("b"), py::arg("fallback_bound") = 6);
  m.def("solve_shift_conjugator_json", [](const Factorization& f, int s) { return dumps(to_json(solve_shift_conjugator(f, s))); });

  // classify
  m.def("classify_json", [](int n) {
    Json out = Json::array();
    for (const auto& r : classify_rotation_invariant(n)) out.push_back(to_json(r));
    return dumps(out);
  });
  m.def("oracle_json", [](int n, int box, int jobs) {
    Json out = Json::array();
    py::gil_scoped_release release;
    auto reports = oracle_rotation_invariant(n, box, jobs);
    py::gil_scoped_acquire acquire;
    for (const auto& r : reports) out.push_back(to_json(r));
    return dumps(out);
  }, py::arg("n"), py::arg("box"), py::arg("jobs") = 1);
  m.def("conic_points_json", [](const std::string& c) { return dumps(to_json(enumerate_conic_points(parse_canonical(c)))); });
  m.def("search_tau_fixed_count", [](int n, int box, int jobs) {
    py::gil_scoped_release release;
    return search_tau_fixed(n, box, jobs).size();
  }, py::arg("n"), py::arg("box"), py::arg("jobs") = 1);
  m.def("search_eta_fixed_count", [](int n, int box, int jobs) {
    py::gil_scoped_release release;
    return search_eta_fixed(n, box, jobs).size();
  }, py::arg("n"), py::arg("box"), py::arg("jobs") = 1);
  m.def("eta12_example", &build_eta12_example);
  m.def("eta_analysis_json", [](int max_s, int probe) {
    return dumps(to_json(analyze_eta_fixing(build_eta12_example(), max_s, probe)));
  }, py::arg("max_s") = 12, py::arg("probe") = 12);
  m.def("half_rotation_json", [](int n) { return dumps(to_json(explore_half_rotation(n))); });
  m.def("two_vector_trace", [](const std::string& c, const PrimVec& v, const PrimVec& w) {
    return to_py(two_vector_trace(parse_canonical(c), v, w));
  });
  m.def("eta_derivation_json", []() { return dumps(to_json(derive_eta_contradiction())); });

  // invariants
  m.def("verify_generators_json", [](const std::string& which) {
    if (which != "order4" && which != "order34_6") throw py::value_error("case must be order4 or order34_6");
    return dumps(to_json(verify_generators(which == "order4" ? GeneratorCase::order4 : GeneratorCase::order34_6)));
  });
  m.def("norm_head_json", [](const std::string& c) { return dumps(to_json(norm_head_check(parse_canonical(c)))); });

  // cli
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "monodromy");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
