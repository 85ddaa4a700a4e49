#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "preftriads/analysis.hpp"
#include "preftriads/counting.hpp"
#include "preftriads/dataset.hpp"
#include "preftriads/graph.hpp"
#include "preftriads/triad.hpp"

namespace py = pybind11;
using namespace preftriads;

namespace {

AlternativeAlphabet alphabet_of(const std::string& word) {
  std::set<char> chars(word.begin(), word.end());
  std::vector<std::string> labels;
  for (const char c : chars) labels.emplace_back(1, c);
  return AlternativeAlphabet(std::move(labels));
}

PreferenceTriad triad_of(const std::string& a, const std::string& b,
                         const std::string& c) {
  const AlternativeAlphabet alphabet = alphabet_of(a);
  return PreferenceTriad(parse_ordering(a, alphabet),
                         parse_ordering(b, alphabet),
                         parse_ordering(c, alphabet));
}

py::int_ to_py(const BigCount& value) {
  return py::cast<py::int_>(
      py::module_::import("builtins").attr("int")(value.str()));
}

Permutation word_of(const std::vector<std::uint32_t>& word) {
  return Permutation(word);
}

std::vector<std::uint8_t> codes_from_dict(const Graph& g,
                                          const py::dict& assignment) {
  std::vector<std::uint8_t> codes(g.node_count(), kNoOrdering);
  AlternativeAlphabet alphabet = AlternativeAlphabet::default_for(3);
  bool first = true;
  for (const auto& item : assignment) {
    const auto node = item.first.cast<NodeId>();
    const auto word = item.second.cast<std::string>();
    if (first) {
      alphabet = alphabet_of(word);
      if (alphabet.size() != 3) {
        throw InvalidArgumentError("census needs orderings on 3 alternatives");
      }
      first = false;
    }
    if (node < codes.size()) {
      codes[node] = ordering_code(parse_ordering(word, alphabet));
    }
  }
  return codes;
}

}  // namespace

PYBIND11_MODULE(_preftriads, m) {
  m.doc() =
      "Equivalence classes of preference triangles: canonical forms, "
      "closed-form class counts, and triangle censuses of networks with "
      "preference orderings as node attributes.";
  m.attr("__version__") = "0.1.0";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidSizeError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidSubsetError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UnsupportedSizeError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // permutation arithmetic on explicit words (rank -> alternative index)
  m.def(
      "compose",
      [](const std::vector<std::uint32_t>& outer,
         const std::vector<std::uint32_t>& inner) {
        return compose(word_of(outer), word_of(inner)).word();
      },
      py::arg("outer"), py::arg("inner"),
      "Word of outer o inner: the relabeling `outer` applied to the "
      "ordering `inner`.");
  m.def(
      "inverse",
      [](const std::vector<std::uint32_t>& word) {
        return word_of(word).inverse().word();
      },
      py::arg("word"));
  m.def(
      "element_order",
      [](const std::vector<std::uint32_t>& word) {
        return word_of(word).order();
      },
      py::arg("word"), "Smallest k >= 1 with word^k = identity.");
  m.def(
      "kendall_tau",
      [](const std::string& a, const std::string& b) {
        const AlternativeAlphabet alphabet = alphabet_of(a);
        return kendall_tau_distance(parse_ordering(a, alphabet),
                                    parse_ordering(b, alphabet));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "restrict",
      [](const std::string& word, const std::string& keep) {
        const AlternativeAlphabet alphabet = alphabet_of(word);
        std::vector<std::uint32_t> kept;
        for (const char c : keep) {
          kept.push_back(alphabet.index_of(std::string(1, c)));
        }
        std::sort(kept.begin(), kept.end());
        std::vector<std::string> labels;
        for (const std::uint32_t i : kept) labels.push_back(alphabet.label(i));
        return format_ordering(
            restrict_ordering(parse_ordering(word, alphabet), kept),
            AlternativeAlphabet(std::move(labels)));
      },
      py::arg("word"), py::arg("keep"),
      "Drop all alternatives outside `keep`, preserving the relative order "
      "(e.g. restrict('ADCEB', 'ABE') == 'AEB').");

  // triangle classification
  m.def(
      "classify",
      [](const std::string& a, const std::string& b, const std::string& c) {
        return classify3(triad_of(a, b, c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Equivalence class (1..10) of a triangle of three orderings on 3 "
      "alternatives.");
  m.def(
      "canonicalize",
      [](const std::string& a, const std::string& b, const std::string& c) {
        const CanonicalTriad canon = canonicalize(triad_of(a, b, c));
        const auto plain =
            AlternativeAlphabet::default_for(canon.ordering(0).size());
        return py::make_tuple(format_ordering(canon.ordering(0), plain),
                              format_ordering(canon.ordering(1), plain),
                              format_ordering(canon.ordering(2), plain));
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Canonical orbit representative, formatted over A, B, C, ...");
  m.def(
      "case_number",
      [](const std::string& a, const std::string& b, const std::string& c) {
        return case_number(triad_of(a, b, c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "describe",
      [](const std::string& a, const std::string& b, const std::string& c) {
        const ClassDescriptor d = describe_class(triad_of(a, b, c));
        py::dict out;
        out["identical_pairs"] = d.identical_pairs;
        out["shared_top"] = d.shared_top;
        out["kendall_distances"] =
            py::make_tuple(d.pairwise_distances[0], d.pairwise_distances[1],
                           d.pairwise_distances[2]);
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"));

  // closed-form counts
  m.def(
      "class_count", [](std::uint32_t n) { return to_py(class_count(n)); },
      py::arg("n"), "Number of triad equivalence classes on n alternatives.");
  m.def(
      "order3_count", [](std::uint32_t n) { return to_py(order3_count(n)); },
      py::arg("n"),
      "Number of order-3 elements in the symmetric group on n symbols.");
  m.def(
      "orbit_case_counts",
      [](std::uint32_t n) {
        const OrbitCaseCounts counts = orbit_case_counts(n);
        py::dict out;
        out["all_identical"] = to_py(counts.all_identical);
        out["two_identical"] = to_py(counts.two_identical);
        out["order3_pair"] = to_py(counts.order3_pair);
        out["generic"] = to_py(counts.generic);
        return out;
      },
      py::arg("n"));
  m.def(
      "enumerate_class_count",
      [](std::uint32_t n) { return enumerate_classes(n).entries.size(); },
      py::arg("n"),
      "Class count by brute-force canonicalization (practical for n <= 6).");
  m.def(
      "class_table_csv",
      [](std::uint32_t n) {
        std::ostringstream out;
        if (n == 3) {
          class_table3().write_csv(out);
        } else {
          enumerate_classes(n).write_csv(out);
        }
        return out.str();
      },
      py::arg("n") = 3);

  // graphs and censuses
  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](const std::vector<std::pair<NodeId, NodeId>>& pairs) {
            std::vector<Edge> edges;
            edges.reserve(pairs.size());
            for (const auto& [u, v] : pairs) edges.push_back(Edge{u, v});
            return Graph::from_edge_list(edges);
          },
          py::arg("edges"))
      .def_static(
          "load",
          [](const std::string& path) { return load_edge_list(path); },
          py::arg("path"))
      .def(
          "save",
          [](const Graph& g, const std::string& path) {
            save_edge_list(g, path);
          },
          py::arg("path"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("triangle_count", [](const Graph& g) { return triangle_count(g); })
      .def("triangles",
           [](const Graph& g) {
             std::vector<std::tuple<NodeId, NodeId, NodeId>> out;
             for_each_triangle(g, [&](NodeId u, NodeId v, NodeId w) {
               out.emplace_back(u, v, w);
             });
             return out;
           })
      .def("closed_triangle_fraction",
           [](const Graph& g) { return closed_triangle_fraction(g); })
      .def(
          "edges",
          [](const Graph& g) {
            std::vector<std::pair<NodeId, NodeId>> out;
            for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
            return out;
          })
      .def(
          "rewire",
          [](const Graph& g, std::uint64_t swaps, std::uint64_t seed) {
            const RewireResult result = rewire(g, swaps, seed);
            py::dict report;
            report["requested"] = result.report.requested;
            report["achieved"] = result.report.achieved;
            report["attempts"] = result.report.attempts;
            report["rejected_loop"] = result.report.rejected_loop;
            report["rejected_duplicate"] = result.report.rejected_duplicate;
            report["rejected_same_edge"] = result.report.rejected_same_edge;
            return py::make_tuple(result.graph, report);
          },
          py::arg("swaps"), py::arg("seed"),
          "Degree-preserving double-edge-swap randomization; returns "
          "(graph, report).")
      .def("__eq__",
           [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(" << g.node_count() << " nodes, " << g.edge_count()
            << " edges)";
        return out.str();
      });

  m.def(
      "gnp_random_graph",
      [](NodeId n, double p, std::uint64_t seed) {
        return gnp_random_graph(n, p, seed);
      },
      py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def(
      "census",
      [](const Graph& g, const py::dict& assignment) {
        const ClassHistogram h = census(g, codes_from_dict(g, assignment));
        return std::vector<std::uint64_t>(h.counts.begin(), h.counts.end());
      },
      py::arg("graph"), py::arg("assignment"),
      "Counts per equivalence class (index 0 = class 1) over all triangles "
      "of the graph; assignment maps node id to an ordering like 'ABC'.");
}
