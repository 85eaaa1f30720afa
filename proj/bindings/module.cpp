#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permpack/blocks.hpp"
#include "permpack/counting.hpp"
#include "permpack/enumerate.hpp"
#include "permpack/formulas.hpp"
#include "permpack/pattern.hpp"
#include "permpack/permutation.hpp"
#include "permpack/search.hpp"
#include "permpack/transforms.hpp"

namespace py = pybind11;
using namespace permpack;

namespace {

py::int_ big(const Count& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::tuple ratio(const Rational& r) {
  return py::make_tuple(big(boost::multiprecision::numerator(r)),
                        big(boost::multiprecision::denominator(r)));
}

PatternSpec pattern_from(const std::vector<int>& one_line) {
  return PatternSpec::explicit_pattern(Permutation(one_line));
}

py::dict search_dict(const SearchResult& result) {
  py::dict d;
  d["pattern"] = result.pattern.perm().values();
  d["n"] = result.n;
  d["restriction"] = to_string(result.restriction);
  if (result.restriction == Restriction::antilayer_then_layers) {
    d["k"] = result.k;
    d["lemma_sizes_satisfied"] = result.lemma_sizes_satisfied;
  }
  d["max_count"] = big(result.max_count);
  d["space_size"] = big(result.space_size);
  d["num_maximal"] = big(result.num_maximal);
  py::list witnesses;
  for (const auto& w : result.witnesses) witnesses.append(w.values());
  d["witnesses"] = witnesses;
  py::list blocks;
  for (const auto& b : result.witness_blocks) blocks.append(b.to_string());
  d["witness_blocks"] = blocks;
  return d;
}

py::dict rewrite_dict(const RewriteOutcome& out) {
  py::dict d;
  d["op"] = out.op;
  d["before"] = out.before.to_string();
  d["after"] = out.after.to_string();
  d["before_layers"] = out.before.composition();
  d["after_layers"] = out.after.composition();
  d["count_before"] = big(out.count_before);
  d["count_after"] = big(out.count_after);
  d["loss"] = out.loss ? py::object(big(*out.loss)) : py::none();
  d["gain"] = out.gain ? py::object(big(*out.gain)) : py::none();
  d["formula_delta"] =
      out.formula_delta ? py::object(big(*out.formula_delta)) : py::none();
  d["hypothesis_satisfied"] = out.hypothesis_satisfied;
  return d;
}

py::dict ratio_table_dict(const RatioTable& table) {
  py::dict d;
  d["pattern"] = table.pattern.perm().values();
  d["mode"] = to_string(table.mode);
  py::list rows;
  for (const auto& row : table.rows) {
    py::dict r;
    r["n"] = row.n;
    r["count"] = big(row.g);
    r["binom"] = big(row.binom);
    r["ratio"] = ratio(row.ratio);
    rows.append(r);
  }
  d["rows"] = rows;
  d["nonincreasing"] = table.failures.empty();
  d["num_failures"] = table.failures.size();
  return d;
}

py::dict density_dict(const DensityReport& report) {
  py::dict d;
  d["num"] = big(boost::multiprecision::numerator(report.density));
  d["den"] = big(boost::multiprecision::denominator(report.density));
  d["float"] = report.density_decimal;
  if (report.xi) {
    d["xi_num"] = big(boost::multiprecision::numerator(*report.xi));
    d["xi_den"] = big(boost::multiprecision::denominator(*report.xi));
  }
  return d;
}

SearchLimits limits_from(unsigned workers, int witness_cap, int max_exhaustive_n,
                         int max_composition_n) {
  SearchLimits limits;
  limits.workers = workers;
  limits.witness_cap = witness_cap;
  limits.max_exhaustive_n = max_exhaustive_n;
  limits.max_composition_n = max_composition_n;
  return limits;
}

}  // namespace

PYBIND11_MODULE(_permpack, m) {
  m.doc() = "Exact pattern packing for permutations (C++ core)";

  m.def("parse_permutation",
        [](const std::string& text) { return parse_permutation(text).values(); },
        py::arg("text"),
        "Parse one-line notation (whitespace-separated or compact digits).");

  m.def("decompose",
        [](const std::vector<int>& sigma) -> py::object {
          const auto blocks = decompose_blocks(Permutation(sigma));
          if (!blocks) return py::none();
          return py::cast(blocks->composition());
        },
        py::arg("sigma"),
        "Layer sizes of a layered permutation, or None when not layered.");

  m.def("build",
        [](const std::vector<int>& layers) {
          return build_from_blocks(BlockStructure::from_composition(layers)).values();
        },
        py::arg("layers"), "The layered permutation with the given layer sizes.");

  m.def("blocks_text",
        [](const std::vector<int>& layers) {
          return BlockStructure::from_composition(layers).to_string();
        },
        py::arg("layers"), "Canonical block text, e.g. \"A2,L3\".");

  m.def("parse_blocks",
        [](const std::string& text) { return parse_blocks(text).composition(); },
        py::arg("text"), "Layer sizes of a block-structure text form.");

  m.def("count",
        [](const std::vector<int>& tau, const std::vector<int>& sigma) {
          return big(count_occurrences(Permutation(tau), Permutation(sigma)));
        },
        py::arg("tau"), py::arg("sigma"),
        "Exact number of occurrences of tau in sigma.");

  m.def("count_layered",
        [](const std::vector<int>& tau_layers, const std::vector<int>& sigma_layers) {
          return big(count_occurrences_layered(tau_layers, sigma_layers));
        },
        py::arg("tau_layers"), py::arg("sigma_layers"),
        "Occurrences of a layered pattern in a layered host, by layer sizes.");

  m.def("enumerate_layered",
        [](int n, int max_composition_n) {
          SearchLimits limits;
          limits.max_composition_n = max_composition_n;
          std::vector<std::vector<int>> out;
          permpack::enumerate_layered(
              n, [&out](const BlockStructure& b) { out.push_back(b.composition()); },
              limits);
          return out;
        },
        py::arg("n"), py::arg("max_composition_n") = 24,
        "All layer compositions of n, descending lexicographic.");

  m.def("enumerate_all",
        [](int n, int max_exhaustive_n) {
          SearchLimits limits;
          limits.max_exhaustive_n = max_exhaustive_n;
          std::vector<std::vector<int>> out;
          permpack::enumerate_all(
              n, [&out](const Permutation& p) { out.push_back(p.values()); }, limits);
          return out;
        },
        py::arg("n"), py::arg("max_exhaustive_n") = 11,
        "All permutations of {1..n}, lexicographic.");

  m.def("max_over_all",
        [](const std::vector<int>& tau, int n, unsigned workers, int witness_cap,
           int max_exhaustive_n) {
          return search_dict(max_over_all(pattern_from(tau), n,
                                          limits_from(workers, witness_cap,
                                                      max_exhaustive_n, 24)));
        },
        py::arg("tau"), py::arg("n"), py::arg("workers") = 0,
        py::arg("witness_cap") = 10, py::arg("max_exhaustive_n") = 11,
        "Exact maximum of the occurrence count over all n! permutations.");

  m.def("max_over_layered",
        [](const std::vector<int>& tau, int n, unsigned workers, int witness_cap,
           int max_composition_n) {
          return search_dict(max_over_layered(pattern_from(tau), n,
                                              limits_from(workers, witness_cap, 11,
                                                          max_composition_n)));
        },
        py::arg("tau"), py::arg("n"), py::arg("workers") = 0,
        py::arg("witness_cap") = 10, py::arg("max_composition_n") = 24,
        "Exact maximum over layered permutations (layered patterns only).");

  m.def("g_k",
        [](int beta, int n, int k, int witness_cap) {
          SearchLimits limits;
          limits.witness_cap = witness_cap;
          return search_dict(g_k_max(PatternSpec::two_beta(beta), n, k, limits));
        },
        py::arg("beta"), py::arg("n"), py::arg("k"), py::arg("witness_cap") = 10,
        "Maximum over antilayer-then-k-layers structures with |Lk| >= |A1|.");

  m.def("galvin_ratios",
        [](const std::vector<int>& tau, int n_max, const std::string& mode) {
          return ratio_table_dict(galvin_ratios(pattern_from(tau), n_max,
                                                ratio_mode_from_string(mode)));
        },
        py::arg("tau"), py::arg("n_max"), py::arg("mode") = "formula",
        "Galvin ratio table; mode is exhaustive, layered or formula.");

  m.def("binom_inequality",
        [](long long k, long long l, long long m, long long n) {
          const auto cmp = binom_inequality_check(k, l, m, n);
          return py::make_tuple(cmp.holds, big(cmp.lhs), big(cmp.rhs));
        },
        py::arg("k"), py::arg("l"), py::arg("m"), py::arg("n"),
        "(holds, C(n,k)*C(m,l), C(n,l)*C(m,k)) under k < l <= m <= n.");

  m.def("g_formula_alpha_alpha", [](int total_length, int alpha) {
          return big(g_formula_alpha_alpha(total_length, alpha));
        },
        py::arg("total_length"), py::arg("alpha"),
        "Closed-form maximum for the symmetric family at even lengths.");

  m.def("g_formula_2beta",
        [](int n, int beta) {
          const auto r = g_formula_2beta(n, beta);
          return py::make_tuple(big(r.value), r.split);
        },
        py::arg("n"), py::arg("beta"),
        "(max over splits of C(x,2)*C(n-x,beta), smallest maximizing x).");

  m.def("density_alpha_alpha",
        [](int alpha, int digits) { return density_dict(density_alpha_alpha(alpha, 0, digits)); },
        py::arg("alpha"), py::arg("digits") = 12);

  m.def("density_2beta",
        [](int beta, int digits) { return density_dict(density_2beta(beta, 0, digits)); },
        py::arg("beta"), py::arg("digits") = 12);

  m.def("absorb_isolated_points",
        [](const std::vector<int>& layers, int beta) {
          return rewrite_dict(
              absorb_isolated_points(BlockStructure::from_composition(layers), beta));
        },
        py::arg("layers"), py::arg("beta"));

  m.def("push_antilayers_left",
        [](const std::vector<int>& layers, int beta) {
          return rewrite_dict(
              push_antilayers_left(BlockStructure::from_composition(layers), beta));
        },
        py::arg("layers"), py::arg("beta"));

  m.def("sort_layers",
        [](const std::vector<int>& layers, int beta) {
          return rewrite_dict(
              sort_layers(BlockStructure::from_composition(layers), beta));
        },
        py::arg("layers"), py::arg("beta"));

  m.def("move_point_to_last_layer",
        [](const std::vector<int>& layers, int beta) {
          return rewrite_dict(move_point_to_last_layer(
              BlockStructure::from_composition(layers), beta));
        },
        py::arg("layers"), py::arg("beta"));

  m.def("merge_first_layer_into_antilayer",
        [](const std::vector<int>& layers, int beta) {
          return rewrite_dict(merge_first_layer_into_antilayer(
              BlockStructure::from_composition(layers), beta));
        },
        py::arg("layers"), py::arg("beta"));
}
