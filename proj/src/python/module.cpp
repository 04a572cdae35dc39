#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "artin/cli.hpp"
#include "artin/coherence.hpp"
#include "artin/equality.hpp"
#include "artin/finite_type.hpp"
#include "artin/io.hpp"
#include "artin/oracles.hpp"
#include "artin/parabolic.hpp"
#include "artin/retraction.hpp"

namespace py = pybind11;
using namespace artin;

namespace {

Word word_of(const LabeledGraph& g, const std::string& text) {
  return parse_word(text, g);
}

py::object opt_str(const std::optional<std::string>& v) {
  if (!v) return py::none();
  return py::cast(*v);
}

py::object ternary(Ternary t) {
  switch (t) {
    case Ternary::Yes: return py::cast(true);
    case Ternary::No: return py::cast(false);
    case Ternary::Unknown: return py::none();
  }
  return py::none();
}

py::dict coherence_dict(const CoherenceReport& r) {
  py::dict d;
  d["coherent"] = r.coherent;
  d["failure"] = coherence_failure_name(r.failure);
  d["witness"] = r.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Artin groups, retractions to parabolic subgroups, coherence";

  py::register_exception<Error>(m, "ArtinError", PyExc_ValueError);

  py::class_<LabeledGraph>(m, "LabeledGraph")
      .def("vertices", &LabeledGraph::vertices)
      .def("label",
           [](const LabeledGraph& g, const std::string& u, const std::string& v) {
             return g.label(u, v).str();
           })
      .def("induced", &LabeledGraph::induced)
      .def("link_star", &LabeledGraph::link_star)
      .def("irreducible_components", &LabeledGraph::irreducible_components)
      .def("odd_classes", &LabeledGraph::odd_classes)
      .def("restrict_le2", &LabeledGraph::restrict_le2)
      .def("is_chordal", &LabeledGraph::is_chordal)
      .def("is_odd_odd_free", &LabeledGraph::is_odd_odd_free)
      .def("triangle_labels",
           [](const LabeledGraph& g) {
             py::list out;
             for (const auto& t : g.triangle_labels()) {
               py::list labels;
               for (const auto& l : t.labels) labels.append(l.str());
               out.append(py::make_tuple(t.vertices, labels));
             }
             return out;
           })
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__repr__", [](const LabeledGraph& g) {
        return "<LabeledGraph on " + std::to_string(g.size()) + " vertices>";
      });

  m.def("parse_graph", &parse_graph);
  m.def("print_graph", &print_graph);
  m.def("is_spherical", &is_spherical);
  m.def("is_fc_type", &is_fc_type);
  m.def("classify_irreducible",
        [](const LabeledGraph& g) { return classify_irreducible(g).str(); });

  m.def("reduce_free", [](const LabeledGraph& g, const std::string& w) {
    return reduce_free(word_of(g, w)).str();
  });
  m.def("retract", [](const LabeledGraph& g, const VertexSet& x, const std::string& w) {
    return ordinary_map(g, x).apply(word_of(g, w)).str();
  });
  m.def("verify_retraction", [](const LabeledGraph& g, const VertexSet& x) {
    auto res = verify_retraction(g, x, ordinary_map(g, x));
    return py::make_tuple(res.ok, res.violated_edge
                                      ? py::cast(*res.violated_edge)
                                      : py::none().cast<py::object>());
  });
  m.def("admits_retractions_fc", [](const LabeledGraph& g) {
    auto rep = admits_retractions_fc(g);
    py::list offending;
    for (const auto& t : rep.offending) {
      py::list labels;
      for (const auto& l : t.labels) labels.append(l.str());
      offending.append(
          py::make_tuple(t.vertices, labels, triangle_reason_name(t.reason)));
    }
    return py::make_tuple(rep.admits, offending);
  });
  m.def("admits_ordinary_all", &admits_ordinary_all, py::arg("graph"),
        py::arg("max_vertices") = 16);
  m.def("trichotomy", [](const LabeledGraph& g, const VertexSet& x, const VertexSet& y,
                         const std::string& s) {
    auto r = trichotomy(g, x, y, s);
    py::dict d;
    d["s"] = r.s;
    d["case"] = r.outcome == TrichotomyCase::One ? "one" : "triple-equal";
    d["intersection"] = opt_str(r.value_intersection);
    d["xy"] = opt_str(r.value_xy);
    d["yx"] = opt_str(r.value_yx);
    return d;
  });

  m.def("dihedral_nf", [](int m_, const std::string& w) {
    LabeledGraph dihedral(Convention::FullEdge, {"a", "b"},
                          {{"a", "b", Label::finite(m_)}});
    auto nf = dihedral_nf(m_, parse_word(w, dihedral));
    py::list factors;
    for (const auto& f : nf.factors) factors.append(nf.factor_word(f).str());
    return py::make_tuple(nf.power, factors);
  });
  m.def("words_equal", [](const LabeledGraph& g, const VertexSet& x,
                          const std::string& w1, const std::string& w2) {
    return ternary(words_equal(g, x, word_of(g, w1), word_of(g, w2)));
  });

  m.def("oc_sets", [](const LabeledGraph& g, const VertexSet& x, const VertexSet& y) {
    auto oc = oc_sets(g, x, y);
    return py::make_tuple(oc.o_xy, oc.c_xy, oc.o_yx, oc.c_yx);
  });
  m.def("intersect_rewrite",
        [](const LabeledGraph& g, const std::string& f, const std::string& gw,
           const VertexSet& x, const VertexSet& y) {
          auto rw = intersect_rewrite(g, word_of(g, f), word_of(g, gw), x, y);
          py::dict d;
          d["left"] = py::make_tuple(rw.left.conjugator.str(), rw.left.base);
          d["right"] = py::make_tuple(rw.right.conjugator.str(), rw.right.base);
          d["x"] = rw.x.str();
          d["y"] = rw.y.str();
          return d;
        });
  m.def("extended_retraction",
        [](const LabeledGraph& g, const std::string& conj, const VertexSet& base,
           const std::string& w) {
          return extended_retraction(g, {word_of(g, conj), base}, word_of(g, w)).str();
        });
  m.def("x_perp", &x_perp);
  m.def("elementary_ribbon",
        [](const LabeledGraph& g, const std::string& x, const std::string& y) {
          return elementary_ribbon(g, x, y).str();
        });
  m.def("conj_generators", [](const LabeledGraph& g, const VertexSet& x, int depth) {
    py::list out;
    for (const auto& e : conj_generators(g, x, depth))
      out.append(py::make_tuple(e.word.str(), e.target));
    return out;
  });
  m.def("property_c_precondition", &property_c_precondition);
  m.def("amalgam_split", [](const LabeledGraph& g, const std::string& s) {
    auto sp = amalgam_split(g, s);
    return py::make_tuple(sp.star, sp.link, sp.rest);
  });

  m.def("coherence_general",
        [](const LabeledGraph& g) { return coherence_dict(coherence_general(g)); });
  m.def("coherence_fc",
        [](const LabeledGraph& g) { return coherence_dict(coherence_fc(g)); });
  m.def("droms_raag", &droms_raag);

  m.def("f2_system_search", [](int r, int s, int max_len) {
    auto res = f2_system_search(r, s, max_len);
    return py::make_tuple(res.found ? py::cast(res.found->str())
                                    : py::none().cast<py::object>(),
                          res.searched_count, res.bound);
  });
  m.def("triangle_234_search", [](int bound) {
    auto res = triangle_234_search(bound);
    py::dict d;
    d["found"] = res.outcome.found ? py::cast(res.outcome.found->str())
                                   : py::none().cast<py::object>();
    d["searched"] = res.outcome.searched_count;
    d["commuting"] = res.commuting_count;
    d["parity_ok"] = res.parity_ok;
    return d;
  });
  m.def("abelianization_classes", [](const LabeledGraph& g) {
    auto ab = abelianization_classes(g);
    return py::make_tuple(ab.rank, ab.class_of);
  });

  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
