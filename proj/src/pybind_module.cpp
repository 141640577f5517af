// Python bindings for the main operations.  Structured reports cross the
// boundary as plain dicts via their JSON form.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfg/json_io.hpp"
#include "gfg/measures.hpp"

namespace py = pybind11;
using namespace gfg;
using jsonio::json;
using wordcore::FreeAutomorphism;
using wordcore::Word;

namespace {

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object big(const finquot::BigInt& b) {
  return py::module_::import("builtins").attr("int")(b.str());
}

json from_py(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return json::parse(obj.cast<std::string>());
  std::string dumped =
      py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return json::parse(dumped);
}

// Group handle with shared ownership, as used across the library surface.
struct Group {
  finquot::GroupPtr ptr;
  const finquot::FiniteGroup& ref() const { return *ptr; }
};

Word make_word(const py::object& spec, int rank) {
  if (py::isinstance<py::str>(spec)) {
    std::string text = spec.cast<std::string>();
    return rank > 0 ? wordcore::parse_word(text, rank)
                    : wordcore::parse_word(text);
  }
  auto letters = spec.cast<std::vector<int>>();
  if (rank == 0)
    for (int l : letters) rank = std::max(rank, std::abs(l));
  return wordcore::reduce(letters, std::max(rank, 1));
}

struct Presentation {
  tubular::HnnPresentation h;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact free-group, tubular-presentation and finite-quotient "
            "computations";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Word>(m, "Word")
      .def(py::init([](const py::object& spec, int rank) {
             return make_word(spec, rank);
           }),
           py::arg("letters"), py::arg("rank") = 0)
      .def_property_readonly("rank", &Word::rank)
      .def_property_readonly("letters",
                             [](const Word& w) { return w.letters(); })
      .def("text", [](const Word& w) { return wordcore::word_text(w); })
      .def("__len__", &Word::length)
      .def("inverse", &Word::inverse)
      .def("pow", &Word::pow)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__",
           [](const Word& w) {
             return py::hash(py::str(wordcore::word_text(w) + "/" +
                                     std::to_string(w.rank())));
           })
      .def("__repr__", [](const Word& w) {
        return "Word('" + wordcore::word_text(w) + "', rank=" +
               std::to_string(w.rank()) + ")";
      });

  m.def(
      "reduce",
      [](const std::vector<int>& letters, int rank) {
        return wordcore::reduce(letters, rank);
      },
      py::arg("letters"), py::arg("rank"));

  m.def("cyclic_reduce", [](const Word& w) {
    auto [conj, core] = wordcore::cyclic_reduce(w);
    return py::make_tuple(conj, core.word());
  });
  m.def("conjugate_equal", &wordcore::conjugate_equal);
  m.def("root", [](const Word& w) {
    auto [r, e] = wordcore::root(w);
    return py::make_tuple(r, e);
  });
  m.def("is_malnormal_family", [](const std::vector<Word>& family) {
    return to_py(
        jsonio::malnormality_json(family, wordcore::is_malnormal_family(family)));
  });

  py::class_<FreeAutomorphism>(m, "Automorphism")
      .def_static("identity", &FreeAutomorphism::identity)
      .def_static("from_images", &FreeAutomorphism::from_images)
      .def_property_readonly(
          "images", [](const FreeAutomorphism& a) { return a.images(); })
      .def("apply", &FreeAutomorphism::apply)
      .def("inverse", &FreeAutomorphism::inverse)
      .def("compose", &FreeAutomorphism::compose)
      .def("__repr__", [](const FreeAutomorphism& a) {
        return "Automorphism(" + jsonio::automorphism_json(a).dump() + ")";
      });

  m.def("whitehead_minimize", [](const Word& w) {
    auto [minimal, witness] = wordcore::whitehead_minimize(w);
    return py::make_tuple(minimal, witness);
  });
  m.def(
      "aut_orbit_equal",
      [](const Word& w1, const Word& w2, std::size_t budget) -> py::object {
        auto phi = wordcore::aut_orbit_equal(w1, w2, budget);
        if (!phi) return py::none();
        return py::cast(*phi);
      },
      py::arg("w1"), py::arg("w2"), py::arg("budget") = 1'000'000);
  m.def("is_primitive", &wordcore::is_primitive);
  m.def("orbit_canonical_form", &wordcore::orbit_canonical_form,
        py::arg("word"), py::arg("budget") = 1'000'000);
  m.def("algebraic_closure", [](const Word& w) {
    auto ac = wordcore::algebraic_closure(w);
    return py::make_tuple(ac.factor_basis, ac.witness);
  });

  // ---- finite groups ----

  py::class_<Group>(m, "Group")
      .def_property_readonly("order",
                             [](const Group& g) { return g.ref().order(); })
      .def_property_readonly("name",
                             [](const Group& g) { return g.ref().name(); })
      .def("mul", [](const Group& g, int a, int b) { return g.ref().mul(a, b); })
      .def("inv", [](const Group& g, int a) { return g.ref().inv(a); })
      .def_property_readonly("identity",
                             [](const Group& g) { return g.ref().id(); })
      .def("element_order",
           [](const Group& g, int a) { return g.ref().element_order(a); })
      .def_property_readonly(
          "classes", [](const Group& g) { return g.ref().classes(); })
      .def("__repr__", [](const Group& g) {
        return "Group('" + g.ref().name() + "', order=" +
               std::to_string(g.ref().order()) + ")";
      });

  m.def("make_group", [](const std::string& spec) {
    return Group{finquot::make_group(spec)};
  });
  m.def("group_from_table",
        [](std::vector<std::vector<int>> table, const std::string& name) {
          return Group{std::make_shared<const finquot::FiniteGroup>(
              finquot::FiniteGroup::from_table(std::move(table), name))};
        },
        py::arg("table"), py::arg("name") = "table");
  m.def("subgroup_lattice",
        [](const Group& g, int cap) {
          return finquot::subgroup_lattice(g.ref(), cap);
        },
        py::arg("group"), py::arg("cap") = 48);
  m.def("eval_word", [](const Group& g, const Word& w,
                        const std::vector<int>& images) {
    return finquot::eval_word(g.ref(), w, images);
  });

  // ---- measures and counting ----

  m.def(
      "word_measure",
      [](const Word& w, const Group& g, int arity, long long budget) {
        return to_py(jsonio::measure_json(
            w, finquot::word_measure(w, g.ptr, arity, budget)));
      },
      py::arg("word"), py::arg("group"), py::arg("arity") = 0,
      py::arg("budget") = finquot::kDefaultTupleBudget);
  m.def(
      "measures_equal",
      [](const Word& w1, const Word& w2, const Group& g, long long budget) {
        return finquot::measures_equal(w1, w2, g.ptr, budget);
      },
      py::arg("w1"), py::arg("w2"), py::arg("group"),
      py::arg("budget") = finquot::kDefaultTupleBudget);
  m.def(
      "profinite_equiv_test",
      [](const Word& w1, const Word& w2, const std::vector<Group>& family,
         long long budget) {
        std::vector<finquot::GroupPtr> ptrs;
        for (const Group& g : family) ptrs.push_back(g.ptr);
        return to_py(jsonio::equiv_json(
            finquot::profinite_equiv_test(w1, w2, ptrs, budget)));
      },
      py::arg("w1"), py::arg("w2"), py::arg("family"),
      py::arg("budget") = finquot::kDefaultTupleBudget);
  m.def(
      "count_homs",
      [](int gens, const std::vector<Word>& relators, const Group& g,
         long long budget) {
        return big(finquot::count_homs(
            finquot::Presentation::make(gens, relators), g.ref(), budget));
      },
      py::arg("gens"), py::arg("relators"), py::arg("group"),
      py::arg("budget") = finquot::kDefaultTupleBudget);
  m.def(
      "count_epis",
      [](int gens, const std::vector<Word>& relators, const Group& g,
         long long budget, int cap) {
        return big(finquot::count_epis(
            finquot::Presentation::make(gens, relators), g.ref(), budget, cap));
      },
      py::arg("gens"), py::arg("relators"), py::arg("group"),
      py::arg("budget") = finquot::kDefaultTupleBudget,
      py::arg("lattice_cap") = 48);
  m.def(
      "count_extensions",
      [](int gens, const Word& a, const Group& g, int target,
         long long budget) {
        return big(finquot::count_extensions(gens, a, g.ref(), target, budget));
      },
      py::arg("gens"), py::arg("word"), py::arg("group"), py::arg("element"),
      py::arg("budget") = finquot::kDefaultTupleBudget);
  m.def(
      "bprime_test",
      [](int gens, const Word& a, const std::vector<long long>& primes,
         const std::vector<Group>& family, long long budget) {
        std::vector<finquot::GroupPtr> ptrs;
        for (const Group& g : family) ptrs.push_back(g.ptr);
        return to_py(jsonio::bprime_json(
            finquot::bprime_test(gens, a, primes, ptrs, budget)));
      },
      py::arg("gens"), py::arg("word"), py::arg("primes"), py::arg("family"),
      py::arg("budget") = finquot::kDefaultTupleBudget);
  m.def(
      "rigidity_experiment",
      [](int rank, int max_len, const std::vector<Group>& family,
         long long budget) {
        std::vector<finquot::GroupPtr> ptrs;
        for (const Group& g : family) ptrs.push_back(g.ptr);
        return to_py(jsonio::rigidity_json(
            finquot::rigidity_experiment(rank, max_len, ptrs, budget)));
      },
      py::arg("rank"), py::arg("max_len"), py::arg("family"),
      py::arg("budget") = finquot::kDefaultTupleBudget);

  // ---- Fox calculus ----

  m.def("fox_derivative", [](const Word& a, int i) {
    return to_py(jsonio::group_ring_json(foxcalc::fox_derivative(a, i)));
  });
  m.def("verify_fox_identity", &foxcalc::verify_fundamental_identity);
  m.def(
      "inner_derivation_conjugation_check",
      [](const py::dict& terms, const Word& g, const Word& h) {
        foxcalc::GroupRingElement a_elt(g.rank());
        for (auto item : terms) {
          Word w = wordcore::parse_word(item.first.cast<std::string>(),
                                        g.rank());
          a_elt.add_term(w, foxcalc::BigInt(
                                py::str(item.second).cast<std::string>()));
        }
        return foxcalc::inner_derivation_conjugation_check(a_elt, g, h);
      },
      py::arg("coefficients"), py::arg("g"), py::arg("h"));
  m.def("tau_row", [](const Word& a, int n) {
    py::list out;
    for (const auto& e : foxcalc::tau_row(a, n))
      out.append(to_py(jsonio::group_ring_json(e)));
    return out;
  });
  m.def("trace_element", [](int n, int p) {
    return to_py(jsonio::algebra_json(foxcalc::trace_element(n, p)));
  });
  m.def("verify_resolution_shadow",
        [](const Word& a, int n, const std::vector<int>& images,
           const Group& g, int p) {
          return foxcalc::verify_resolution_shadow(a, n, images, g.ptr, p);
        },
        py::arg("word"), py::arg("n"), py::arg("images"), py::arg("group"),
        py::arg("p"));

  // ---- small cancellation ----

  m.def("symmetrize", [](const std::vector<Word>& relators) {
    return smallcancel::symmetrize(relators).relators;
  });
  m.def("enumerate_pieces", [](const std::vector<Word>& relators) {
    return to_py(jsonio::pieces_json(
        smallcancel::enumerate_pieces(smallcancel::symmetrize(relators))));
  });
  m.def("check_metric",
        [](const std::vector<Word>& relators, const std::string& lambda) {
          auto l = smallcancel::Rational::parse(lambda);
          auto sym = smallcancel::symmetrize(relators);
          return to_py(jsonio::metric_report_json(
              sym, smallcancel::check_metric(sym, l), l));
        },
        py::arg("relators"), py::arg("lam") = "1/6");
  m.def("find_exponents",
        [](const std::vector<Word>& family, const std::string& lambda,
           int budget) -> py::object {
          auto n = smallcancel::find_exponents(
              family, smallcancel::Rational::parse(lambda), budget);
          if (!n) return py::none();
          return py::int_(*n);
        },
        py::arg("family"), py::arg("lam") = "1/6", py::arg("budget") = 512);

  // ---- tubular presentations ----

  py::class_<Presentation>(m, "Presentation")
      .def_static("from_json",
                  [](const py::object& spec) {
                    return Presentation{
                        jsonio::presentation_from_json(from_py(spec))};
                  })
      .def_property_readonly(
          "base_rank",
          [](const Presentation& p) { return p.h.base_rank(); })
      .def_property_readonly(
          "extra_free_rank",
          [](const Presentation& p) { return p.h.extra_free_rank(); })
      .def("to_dict",
           [](const Presentation& p) { return to_py(jsonio::hnn_json(p.h)); })
      .def("gamma",
           [](const Presentation& p) { return to_py(jsonio::gamma_json(p.h)); })
      .def("decide",
           [](const Presentation& p) {
             return to_py(jsonio::verdict_json(p.h, tubular::decide(p.h)));
           })
      .def("britton_reduce",
           [](const Presentation& p, const std::string& text) {
             return tubular::mixed_text(
                 p.h, tubular::britton_reduce(p.h, tubular::parse_mixed(p.h, text)));
           })
      .def("edge_closures",
           [](const Presentation& p) {
             return to_py(jsonio::edge_closures_json(
                 tubular::edge_closure_descriptor(p.h)));
           })
      .def("cohomology",
           [](const Presentation& p, int prime) {
             return to_py(jsonio::cohomology_json(
                 tubular::cohomology_report(p.h, prime), prime));
           })
      .def("__repr__", [](const Presentation& p) {
        return "Presentation(base_rank=" + std::to_string(p.h.base_rank()) +
               ", relations=" + std::to_string(p.h.relations().size()) + ")";
      });

  m.def("collapse_to_single_vertex", [](const py::object& spec) {
    return Presentation{jsonio::presentation_from_json(from_py(spec))};
  });
}
