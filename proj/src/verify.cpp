#include "permpack/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "permpack/counting.hpp"
#include "permpack/formulas.hpp"
#include "permpack/report.hpp"
#include "permpack/search.hpp"
#include "permpack/transforms.hpp"

namespace permpack {

namespace {

void emit(const RecordSink& sink, VerifyReport& report, const std::string& line,
          bool failure) {
  report.cases += 1;
  if (failure) report.failures += 1;
  if (sink) sink(line, failure);
}

std::string rewrite_record(const char* lemma, int beta, const RewriteOutcome& out,
                           const char* verdict_key, bool verdict, bool failure) {
  std::ostringstream json;
  json << "{\"lemma\":\"" << lemma << "\",\"beta\":" << beta
       << ",\"outcome\":" << to_json(out) << ",\"" << verdict_key
       << "\":" << (verdict ? "true" : "false")
       << ",\"failure\":" << (failure ? "true" : "false") << "}";
  return json.str();
}

std::string exception_record(const char* lemma, int beta, const std::string& input,
                             const std::string& what) {
  std::ostringstream json;
  json << "{\"lemma\":\"" << lemma << "\",\"beta\":" << beta << ",\"input\":\""
       << input << "\",\"error\":\"" << what << "\",\"failure\":true}";
  return json.str();
}

}  // namespace

VerifyReport verify_tech(int n_max, const RecordSink& sink) {
  VerifyReport report;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n; ++m)
      for (int l = 1; l <= m; ++l)
        for (int k = 0; k < l; ++k) {
          const BinomComparison cmp = binom_inequality_check(k, l, m, n);
          std::ostringstream json;
          json << "{\"lemma\":\"tech\",\"k\":" << k << ",\"l\":" << l
               << ",\"m\":" << m << ",\"n\":" << n << ",\"lhs\":" << cmp.lhs
               << ",\"rhs\":" << cmp.rhs
               << ",\"holds\":" << (cmp.holds ? "true" : "false")
               << ",\"failure\":" << (cmp.holds ? "false" : "true") << "}";
          emit(sink, report, json.str(), !cmp.holds);
        }
  return report;
}

VerifyReport verify_rewrite_monotone(const std::string& lemma, int n_max,
                                     const std::vector<int>& betas,
                                     const RecordSink& sink) {
  if (lemma != "isolated" && lemma != "push" && lemma != "sort")
    throw std::invalid_argument("verify_rewrite_monotone: unknown lemma '" + lemma +
                                "'");
  VerifyReport report;
  SearchLimits limits;
  limits.max_composition_n = std::max(limits.max_composition_n, n_max);
  for (int beta : betas) {
    for (int n = 1; n <= n_max; ++n) {
      enumerate_layered(
          n,
          [&](const BlockStructure& b) {
            RewriteOutcome out;
            if (lemma == "isolated") {
              out = absorb_isolated_points(b, beta);
            } else if (lemma == "push") {
              out = push_antilayers_left(b, beta);
            } else {
              // sort is defined on leading-antilayer normal forms only
              try {
                out = sort_layers(b, beta);
              } catch (const std::domain_error&) {
                return;
              }
            }
            const bool nondecreasing = out.count_after >= out.count_before;
            emit(sink, report,
                 rewrite_record(lemma.c_str(), beta, out, "nondecreasing",
                                nondecreasing, !nondecreasing),
                 !nondecreasing);
          },
          limits);
    }
  }
  return report;
}

void for_each_sorted_normal_form(
    int n, int min_antilayer, int min_layer_count,
    const std::function<void(int, const std::vector<int>&)>& fn) {
  std::vector<int> layers;
  // Nondecreasing layer parts >= max(2, previous part).
  auto extend = [&](auto&& self, int antilayer, int remaining, int min_part) -> void {
    if (remaining == 0) {
      if (static_cast<int>(layers.size()) >= min_layer_count) fn(antilayer, layers);
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      layers.push_back(part);
      self(self, antilayer, remaining - part, part);
      layers.pop_back();
    }
  };
  for (int a = min_antilayer; a <= n; ++a) extend(extend, a, n - a, 2);
}

VerifyReport verify_move(int n_max, const std::vector<int>& betas,
                         const RecordSink& sink) {
  VerifyReport report;
  for (int beta : betas) {
    for (int n = 3; n <= n_max; ++n) {
      for_each_sorted_normal_form(n, 2, 1, [&](int a, const std::vector<int>& layers) {
        std::vector<int> parts(static_cast<size_t>(a), 1);
        parts.insert(parts.end(), layers.begin(), layers.end());
        const BlockStructure b = BlockStructure::from_composition(parts);
        try {
          const RewriteOutcome out = move_point_to_last_layer(b, beta);
          const bool strict_ok =
              !out.hypothesis_satisfied || out.recount_delta() > 0;
          emit(sink, report,
               rewrite_record("move", beta, out, "strict_gain_ok", strict_ok,
                              !strict_ok),
               !strict_ok);
        } catch (const std::logic_error& e) {
          emit(sink, report, exception_record("move", beta, b.to_string(), e.what()),
               true);
        }
      });
    }
  }
  return report;
}

VerifyReport verify_merge(int n_max, const std::vector<int>& betas,
                          const RecordSink& sink) {
  VerifyReport report;
  for (int beta : betas) {
    for (int n = 4; n <= n_max; ++n) {
      for_each_sorted_normal_form(n, 0, 2, [&](int a, const std::vector<int>& layers) {
        if (layers.back() < a) return;  // theorem domain: |Lk| >= |A1|
        std::vector<int> parts(static_cast<size_t>(a), 1);
        parts.insert(parts.end(), layers.begin(), layers.end());
        const BlockStructure b = BlockStructure::from_composition(parts);
        try {
          const RewriteOutcome out = merge_first_layer_into_antilayer(b, beta);
          const bool nonnegative =
              !out.hypothesis_satisfied || *out.formula_delta >= 0;
          emit(sink, report,
               rewrite_record("merge", beta, out, "nonnegative_ok", nonnegative,
                              !nonnegative),
               !nonnegative);
        } catch (const std::logic_error& e) {
          emit(sink, report, exception_record("merge", beta, b.to_string(), e.what()),
               true);
        }
      });
    }
  }
  return report;
}

VerifyReport verify_restriction(int n_max, int m_max, const SearchLimits& limits,
                                const RecordSink& sink) {
  VerifyReport report;
  for (int m = 1; m <= m_max; ++m) {
    enumerate_layered(m, [&](const BlockStructure& pattern_blocks) {
      const PatternSpec tau =
          PatternSpec::explicit_pattern(build_from_blocks(pattern_blocks));
      for (int n = m; n <= n_max; ++n) {
        const SearchResult all = max_over_all(tau, n, limits);
        const SearchResult layered = max_over_layered(tau, n, limits);
        const bool equal = all.max_count == layered.max_count;
        std::ostringstream json;
        json << "{\"lemma\":\"restriction\",\"pattern\":\""
             << pattern_blocks.to_string() << "\",\"n\":" << n
             << ",\"max_all\":" << all.max_count
             << ",\"max_layered\":" << layered.max_count
             << ",\"equal\":" << (equal ? "true" : "false")
             << ",\"failure\":" << (equal ? "false" : "true") << "}";
        emit(sink, report, json.str(), !equal);
      }
    });
  }
  return report;
}

VerifyReport verify_galvin(int beta, int n_formula, int n_exhaustive,
                           const SearchLimits& limits, const RecordSink& sink) {
  VerifyReport report;
  auto check_table = [&](const PatternSpec& tau, int n_max, RatioMode mode) {
    const RatioTable table = galvin_ratios(tau, n_max, mode, limits);
    for (const RatioFailure& f : table.failures) {
      std::ostringstream json;
      json << "{\"lemma\":\"galvin\",\"pattern\":\"" << tau.describe()
           << "\",\"mode\":\"" << to_string(mode) << "\",\"n_prev\":" << f.n_prev
           << ",\"n\":" << f.n << ",\"ratio_prev\":\"" << decimal_string(f.prev)
           << "\",\"ratio\":\"" << decimal_string(f.cur) << "\",\"failure\":true}";
      emit(sink, report, json.str(), true);
    }
    std::ostringstream json;
    json << "{\"lemma\":\"galvin\",\"pattern\":\"" << tau.describe()
         << "\",\"mode\":\"" << to_string(mode) << "\",\"rows\":" << table.rows.size()
         << ",\"increases\":" << table.failures.size()
         << ",\"failure\":" << (table.failures.empty() ? "false" : "true") << "}";
    emit(sink, report, json.str(), !table.failures.empty());
  };

  check_table(PatternSpec::two_beta(beta), n_formula, RatioMode::formula);
  if (n_exhaustive > 0) {
    check_table(PatternSpec::two_beta(beta), n_exhaustive, RatioMode::exhaustive);
    check_table(PatternSpec::alpha_alpha(2), n_exhaustive, RatioMode::exhaustive);
  }
  return report;
}

}  // namespace permpack
