#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "orbalg/algebra.hpp"
#include "orbalg/kantor.hpp"
#include "orbalg/lyndon.hpp"
#include "orbalg/model.hpp"
#include "orbalg/ramsey.hpp"
#include "orbalg/transforms.hpp"

namespace py = pybind11;
using namespace orbalg;

namespace {

py::int_ to_py_int(const Int& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(Int(boost::multiprecision::numerator(q))),
                  to_py_int(Int(boost::multiprecision::denominator(q))));
}

Int int_from_object(const py::handle& obj) {
  // Round-trip through the decimal spelling: exact for python ints of any
  // size, and rejects floats (their str contains a '.').
  try {
    return Int(py::cast<std::string>(py::str(obj)));
  } catch (const std::exception&) {
    throw py::value_error("expected an integer, got " +
                          py::cast<std::string>(py::repr(obj)));
  }
}

Rational rational_from_object(const py::handle& obj) {
  // Accepts int, Fraction, or a "p/q" string; all print in a form the exact
  // rational constructor understands.  Floats are rejected for exactness.
  if (py::isinstance<py::float_>(obj))
    throw py::value_error("coefficients must be exact (int, Fraction, or 'p/q' string)");
  try {
    return Rational(py::cast<std::string>(py::str(obj)));
  } catch (const std::exception&) {
    throw py::value_error("expected an exact rational, got " +
                          py::cast<std::string>(py::repr(obj)));
  }
}

IntSeries series_from_list(const py::sequence& seq) {
  std::vector<Int> values;
  values.reserve(py::len(seq));
  for (const auto& item : seq) values.push_back(int_from_object(item));
  return IntSeries(std::move(values));
}

py::list series_to_list(const IntSeries& s) {
  py::list out;
  for (const Int& v : s.values) out.append(to_py_int(v));
  return out;
}

AlgebraElement element_from_dict(const GroupModel& model, const py::dict& d) {
  AlgebraElement f(model);
  for (const auto& item : d) {
    OrbitKey key = parse_orbit_key(model.kind(), py::cast<std::string>(py::str(item.first)));
    AlgebraElement::basis(model, key);  // validates the letters against the model
    f.add_term(key, rational_from_object(item.second));
  }
  return f;
}

py::dict element_to_dict(const AlgebraElement& f) {
  py::dict out;
  for (const auto& [key, c] : f.terms()) out[py::str(key.str())] = to_py_fraction(c);
  return out;
}

std::vector<Block> alphabet_from_counts(const std::vector<int>& counts) {
  return AlphabetProfile(counts).blocks();
}

py::tuple report_to_tuple(const CheckReport& report) {
  return py::make_tuple(report.ok, report.failures);
}

py::list ordering_to_list(const RamseyOrdering& o) {
  py::list out;
  for (const OrbitKey& key : o.orbits)
    out.append(py::make_tuple(key.str(), o.padded.at(key).str()));
  return out;
}

SubsetWeights weights_from_dict(const py::dict& d) {
  SubsetWeights out;
  for (const auto& item : d) {
    auto key = py::cast<std::vector<int>>(item.first);
    out[key] = rational_from_object(item.second);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact orbit algebras of weighted-block permutation models";

  py::class_<GroupModel>(m, "Model")
      .def_static("from_spec", &parse_model_spec, py::arg("spec"),
                  "Builtin families sk-wr-s:K, sk-wr-a:K, a-wr-a:W, or @FILE")
      .def_static(
          "from_table",
          [](const std::string& text, const std::string& name) {
            return GroupModel::from_table_text(text, name);
          },
          py::arg("text"), py::arg("name") = "custom")
      .def_property_readonly(
          "kind",
          [](const GroupModel& g) {
            return g.kind() == ModelKind::WreathA ? "wreath_a" : "wreath_s";
          })
      .def_property_readonly("name", &GroupModel::name)
      .def_property_readonly("enumeration_limit", &GroupModel::enumeration_limit)
      .def_property_readonly(
          "block_counts", [](const GroupModel& g) { return g.profile().counts(); })
      .def("table_text", &GroupModel::to_table_text)
      .def(
          "orbits",
          [](const GroupModel& g, int n) {
            py::list out;
            for (const OrbitKey& key : orbits_of_weight(g, n)) out.append(key.str());
            return out;
          },
          py::arg("n"), "Weight-n orbit labels in ascending orbit order")
      .def(
          "support_keys",
          [](const GroupModel& g, int n) {
            py::list out;
            for (const OrbitKey& key : support_keys_of_weight(g, n)) out.append(key.str());
            return out;
          },
          py::arg("n"))
      .def(
          "suborbit_counts",
          [](const GroupModel& g, const std::string& u, int k) {
            py::dict out;
            for (const auto& [key, c] :
                 suborbit_counts(g, parse_orbit_key(g.kind(), u), k))
              out[py::str(key.str())] = to_py_int(c);
            return out;
          },
          py::arg("orbit"), py::arg("k"))
      .def("__repr__",
           [](const GroupModel& g) { return "<orbalg.Model " + g.name() + ">"; });

  // --- algebra ---------------------------------------------------------
  m.def(
      "epsilon", [](const GroupModel& g) { return element_to_dict(epsilon(g)); },
      py::arg("model"), "The sum of all weight-1 basis elements");
  m.def(
      "product",
      [](const GroupModel& g, const py::dict& f, const py::dict& h) {
        return element_to_dict(product(element_from_dict(g, f), element_from_dict(g, h)));
      },
      py::arg("model"), py::arg("f"), py::arg("g"));
  m.def(
      "sbar",
      [](const GroupModel& g, const std::string& w) {
        return element_to_dict(sbar_basis(parse_word_token(w), g));
      },
      py::arg("model"), py::arg("word"),
      "The polynomial generator attached to a word");
  m.def(
      "to_generator_basis",
      [](const GroupModel& g, const py::dict& f) {
        py::dict out;
        for (const auto& [w, c] : to_generator_basis(element_from_dict(g, f)))
          out[py::str(word_token(w))] = to_py_fraction(c);
        return out;
      },
      py::arg("model"), py::arg("f"));
  m.def(
      "from_generator_basis",
      [](const GroupModel& g, const py::dict& coords) {
        GeneratorCoords c;
        for (const auto& item : coords)
          c[parse_word_token(py::cast<std::string>(py::str(item.first)))] =
              rational_from_object(item.second);
        return element_to_dict(from_generator_basis(c, g));
      },
      py::arg("model"), py::arg("coords"));
  m.def(
      "leading_orbit",
      [](const GroupModel& g, const py::dict& f) {
        return leading_orbit(element_from_dict(g, f)).str();
      },
      py::arg("model"), py::arg("f"));
  m.def(
      "join",
      [](const GroupModel& g, const std::string& a, const std::string& b) {
        return join_orbits(parse_orbit_key(g.kind(), a), parse_orbit_key(g.kind(), b), g)
            .str();
      },
      py::arg("model"), py::arg("a"), py::arg("b"),
      "The least orbit in the support of the product of two basis elements");
  m.def(
      "compare_orbits",
      [](const GroupModel& g, const std::string& a, const std::string& b) {
        auto c = compare_orbit_keys(parse_orbit_key(g.kind(), a),
                                    parse_orbit_key(g.kind(), b));
        return c == std::strong_ordering::less ? -1
               : c == std::strong_ordering::greater ? 1
                                                    : 0;
      },
      py::arg("model"), py::arg("a"), py::arg("b"));

  // --- words and Lyndon machinery --------------------------------------
  m.def(
      "is_lyndon", [](const std::string& w) { return is_lyndon(parse_word_token(w)); },
      py::arg("word"));
  m.def(
      "lyndon_factorization",
      [](const std::string& w) {
        py::list out;
        for (const auto& [factor, exponent] : lyndon_factorization(parse_word_token(w)))
          out.append(py::make_tuple(word_token(factor), exponent));
        return out;
      },
      py::arg("word"));
  m.def(
      "standard_factorization",
      [](const std::string& w) {
        auto [u, v] = standard_factorization(parse_word_token(w));
        return py::make_tuple(word_token(u), word_token(v));
      },
      py::arg("word"));
  m.def(
      "lyndon_words",
      [](const std::vector<int>& counts, int n) {
        py::list out;
        for (const Word& w : lyndon_words_of_weight(alphabet_from_counts(counts), n))
          out.append(word_token(w));
        return out;
      },
      py::arg("block_counts"), py::arg("n"),
      "Lyndon words of weight n over an alphabet with block_counts[i] blocks "
      "of weight i+1");
  m.def(
      "shuffle",
      [](const std::string& u, const std::string& v) {
        const WordPolynomial p = shuffle(parse_word_token(u), parse_word_token(v));
        py::dict out;
        for (const auto& [w, c] : p.terms()) out[py::str(word_token(w))] = to_py_int(c);
        return out;
      },
      py::arg("u"), py::arg("v"));
  m.def(
      "greatest_shuffle",
      [](const std::string& u, const std::string& v) {
        return word_token(greatest_shuffle(parse_word_token(u), parse_word_token(v)));
      },
      py::arg("u"), py::arg("v"));

  // --- ramsey orderings -------------------------------------------------
  m.def(
      "ramsey_ordering",
      [](const GroupModel& g, int n, int N) {
        return ordering_to_list(ramsey_ordering(g, n, N));
      },
      py::arg("model"), py::arg("n"), py::arg("padded_size"),
      "(orbit, padded witness) pairs in ascending orbit order");
  m.def(
      "verify_ramsey",
      [](const GroupModel& g, int n, int N) {
        return report_to_tuple(verify_ramsey_property(ramsey_ordering(g, n, N), g));
      },
      py::arg("model"), py::arg("n"), py::arg("padded_size"));
  m.def(
      "induced_ordering",
      [](const GroupModel& g, int n, int N, int m_) {
        return ordering_to_list(induced_ordering(ramsey_ordering(g, n, N), g, m_));
      },
      py::arg("model"), py::arg("n"), py::arg("padded_size"), py::arg("m"));
  m.def(
      "verify_conjecture",
      [](const GroupModel& g, int m_, int n) {
        return report_to_tuple(verify_conjecture_conditions(g, m_, n));
      },
      py::arg("model"), py::arg("m"), py::arg("n"));

  // --- integer-sequence transforms ---------------------------------------
  m.def(
      "invert",
      [](const py::sequence& seq, bool inverse) {
        return series_to_list(
            invert_transform(series_from_list(seq),
                             inverse ? Direction::Inverse : Direction::Forward));
      },
      py::arg("series"), py::arg("inverse") = false);
  m.def(
      "euler",
      [](const py::sequence& seq, bool inverse) {
        return series_to_list(
            euler_transform(series_from_list(seq),
                            inverse ? Direction::Inverse : Direction::Forward));
      },
      py::arg("series"), py::arg("inverse") = false);
  m.def(
      "aux_from_letters",
      [](const py::sequence& seq) { return series_to_list(aux_from_letters(series_from_list(seq))); },
      py::arg("series"));
  m.def(
      "lyndon_from_letters",
      [](const py::sequence& seq) {
        return series_to_list(lyndon_from_letters(series_from_list(seq)));
      },
      py::arg("series"));
  m.def(
      "lyndon_from_aux",
      [](const py::sequence& seq) { return series_to_list(lyndon_from_aux(series_from_list(seq))); },
      py::arg("series"));
  m.def("mobius", &mobius, py::arg("n"));
  m.def(
      "verify_weigh",
      [](const py::sequence& a, const py::sequence& l, int order) {
        WeighReport r = verify_weigh_identity(series_from_list(a), series_from_list(l), order);
        return py::make_tuple(r.ok, r.first_mismatch);
      },
      py::arg("letters"), py::arg("generators"), py::arg("order"));
  m.def(
      "exactly_realizable",
      [](const py::sequence& b, int order) {
        RealizabilityReport r = exactly_realizable(series_from_list(b), order);
        py::list witness;
        for (const Int& v : r.witness) witness.append(to_py_int(v));
        return py::make_tuple(r.ok, r.failing_index, witness);
      },
      py::arg("series"), py::arg("order"));

  // --- incidence ranks ----------------------------------------------------
  m.def("subsets_colex", &subsets_colex, py::arg("d"), py::arg("e"));
  m.def(
      "incidence_rank",
      [](int d, int e, int f) { return rank_exact(incidence_matrix(d, e, f)); },
      py::arg("d"), py::arg("e"), py::arg("f"));
  m.def(
      "weighted_rank",
      [](int d, int e, int f, const std::vector<int>& e0, const py::dict& weights) {
        return rank_exact(weighted_incidence_matrix(d, e, f, e0, weights_from_dict(weights)));
      },
      py::arg("d"), py::arg("e"), py::arg("f"), py::arg("e0"),
      py::arg("weights") = py::dict());
  m.def(
      "binomial", [](const py::handle& n, long k) { return to_py_int(binomial(int_from_object(n), k)); },
      py::arg("n"), py::arg("k"));
}
