#include "permpack/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "permpack/counting.hpp"
#include "permpack/enumerate.hpp"
#include "permpack/formulas.hpp"
#include "permpack/report.hpp"
#include "permpack/search.hpp"
#include "permpack/transforms.hpp"
#include "permpack/verify.hpp"

namespace permpack::cli {

namespace {

struct SharedFlags {
  std::string format = "human";
  std::string out_path;
  unsigned workers = 0;
  int max_exhaustive_n = 11;
  int max_composition_n = 24;

  SearchLimits limits(int witness_cap = 10) const {
    SearchLimits l;
    l.workers = workers;
    l.max_exhaustive_n = max_exhaustive_n;
    l.max_composition_n = max_composition_n;
    l.witness_cap = witness_cap;
    return l;
  }
};

void add_shared(CLI::App* cmd, SharedFlags& shared) {
  cmd->add_option("--format", shared.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", shared.out_path, "Write output to this file");
  cmd->add_option("--workers", shared.workers,
                  "Worker threads (0 = machine parallelism, capped)");
  cmd->add_option("--max-exhaustive-n", shared.max_exhaustive_n,
                  "Bound for n! enumeration")
      ->capture_default_str();
  cmd->add_option("--max-composition-n", shared.max_composition_n,
                  "Bound for layered enumeration")
      ->capture_default_str();
}

struct PatternFlags {
  std::string pattern_text;
  std::string family;
  int alpha = 0;
  int beta = 0;
};

void add_pattern_flags(CLI::App* cmd, PatternFlags& flags) {
  cmd->add_option("--pattern", flags.pattern_text,
                  "Explicit pattern, one-line (\"1 2 4 3\" or compact \"1243\")");
  cmd->add_option("--family", flags.family, "Pattern family: aa | 2b | ab")
      ->check(CLI::IsMember({"aa", "2b", "ab"}));
  cmd->add_option("--alpha", flags.alpha, "Alpha for --family aa/ab");
  cmd->add_option("--beta", flags.beta, "Beta for --family 2b/ab");
}

PatternSpec resolve_pattern(const PatternFlags& flags) {
  const bool has_text = !flags.pattern_text.empty();
  const bool has_family = !flags.family.empty();
  if (has_text == has_family)
    throw std::invalid_argument("give exactly one of --pattern or --family");
  if (has_text)
    return PatternSpec::explicit_pattern(parse_permutation(flags.pattern_text));
  if (flags.family == "aa") {
    if (flags.alpha == 0) throw std::invalid_argument("--family aa needs --alpha");
    return PatternSpec::alpha_alpha(flags.alpha);
  }
  if (flags.family == "2b") {
    if (flags.beta == 0) throw std::invalid_argument("--family 2b needs --beta");
    return PatternSpec::two_beta(flags.beta);
  }
  if (flags.alpha == 0 && flags.beta == 0)
    throw std::invalid_argument("--family ab needs --alpha and --beta");
  return PatternSpec::general(flags.alpha, flags.beta);
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

void write_search(const SearchResult& result, const SharedFlags& shared,
                  std::ostream& out) {
  if (shared.format == "json") {
    out << to_json(result) << "\n";
  } else if (shared.format == "csv") {
    out << search_csv(result);
  } else {
    out << search_human(result);
  }
}

int run_verify(const std::string& lemma, std::optional<int> n_max,
               std::optional<int> beta, int m_max, int n_exhaustive,
               const SharedFlags& shared, std::ostream& out, std::ostream& err) {
  const bool csv = shared.format == "csv";
  const bool failures_only = shared.format == "human";
  if (csv) out << "record,failure\n";

  const RecordSink sink = [&](const std::string& json_line, bool failure) {
    if (failures_only && !failure) return;
    if (csv) {
      std::string quoted;
      quoted.reserve(json_line.size() + 2);
      quoted += '"';
      for (char c : json_line) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      out << quoted << ',' << (failure ? "true" : "false") << "\n";
    } else {
      out << json_line << "\n";
    }
  };

  VerifyReport report;
  const SearchLimits limits = shared.limits();
  if (lemma == "tech") {
    report = verify_tech(n_max.value_or(30), sink);
  } else if (lemma == "isolated" || lemma == "push" || lemma == "sort") {
    const std::vector<int> betas =
        beta ? std::vector<int>{*beta} : std::vector<int>{2, 3};
    report = verify_rewrite_monotone(lemma, n_max.value_or(12), betas, sink);
  } else if (lemma == "move") {
    const std::vector<int> betas =
        beta ? std::vector<int>{*beta} : std::vector<int>{3, 4, 5};
    report = verify_move(n_max.value_or(18), betas, sink);
  } else if (lemma == "merge") {
    const std::vector<int> betas =
        beta ? std::vector<int>{*beta} : std::vector<int>{3, 4, 5};
    report = verify_merge(n_max.value_or(18), betas, sink);
  } else if (lemma == "restriction") {
    report = verify_restriction(n_max.value_or(9), m_max, limits, sink);
  } else if (lemma == "galvin") {
    report = verify_galvin(beta.value_or(3), n_max.value_or(5000), n_exhaustive,
                           limits, sink);
  } else {
    throw std::invalid_argument("unknown lemma '" + lemma + "'");
  }

  err << "verify " << lemma << ": " << report.cases << " cases, "
      << report.failures << " failures\n";
  return report.failures == 0 ? 0 : 2;
}

struct CountOptions {
  PatternFlags pattern;
  std::string sigma_text;
  std::string sigma_blocks_text;
};

struct MaximizeOptions {
  PatternFlags pattern;
  int n = 0;
  std::string restrict_mode = "all";
  int witness_cap = 10;
};

struct GkOptions {
  int beta = 0;
  int n = 0;
  int k = 0;
  int witness_cap = 10;
};

struct DensityOptions {
  std::string family;
  int alpha = 0;
  int beta = 0;
  int converge_to = 0;
  int digits = 12;
};

struct RatiosOptions {
  PatternFlags pattern;
  int n_max = 0;
  std::string mode = "formula";
};

struct VerifyOptions {
  std::string lemma;
  int n_max = -1;
  int beta = -1;
  int m_max = 5;
  int n_exhaustive = 9;
};

struct EnumerateOptions {
  int n = 0;
  bool layered = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out_stream,
        std::ostream& err) {
  CLI::App app{"permpack: exact pattern-packing toolkit for permutations"};
  app.require_subcommand(1);

  SharedFlags shared;
  std::function<int(std::ostream&)> action;

  {
    auto opts = std::make_shared<CountOptions>();
    auto* cmd = app.add_subcommand("count", "Count pattern occurrences");
    add_shared(cmd, shared);
    add_pattern_flags(cmd, opts->pattern);
    cmd->add_option("--sigma", opts->sigma_text, "Host permutation, one-line");
    cmd->add_option("--sigma-blocks", opts->sigma_blocks_text,
                    "Host as block structure, e.g. \"A3,L5\"");
    cmd->callback([&action, &shared, opts] {
      action = [&shared, opts](std::ostream& out) {
        const PatternSpec tau = resolve_pattern(opts->pattern);
        if (opts->sigma_text.empty() == opts->sigma_blocks_text.empty())
          throw std::invalid_argument("give exactly one of --sigma or --sigma-blocks");
        Count count;
        if (!opts->sigma_text.empty()) {
          count = count_occurrences(tau.perm(), parse_permutation(opts->sigma_text));
        } else {
          const BlockStructure blocks = parse_blocks(opts->sigma_blocks_text);
          count = tau.is_layered()
                      ? count_occurrences_layered(tau.layers(), blocks.composition())
                      : count_occurrences(tau.perm(), build_from_blocks(blocks));
        }
        if (shared.format == "json") {
          out << "{\"pattern\":\"" << tau.describe() << "\",\"count\":" << count
              << "}\n";
        } else if (shared.format == "csv") {
          out << "count\n" << count << "\n";
        } else {
          out << count << "\n";
        }
        return 0;
      };
    });
  }

  {
    auto opts = std::make_shared<MaximizeOptions>();
    auto* cmd = app.add_subcommand("maximize", "Find pattern-maximal permutations");
    add_shared(cmd, shared);
    add_pattern_flags(cmd, opts->pattern);
    cmd->add_option("--n", opts->n, "Size of the host permutations")->required();
    cmd->add_option("--restrict", opts->restrict_mode, "Search space: all | layered")
        ->check(CLI::IsMember({"all", "layered"}))
        ->capture_default_str();
    cmd->add_option("--witness-cap", opts->witness_cap, "Witnesses to keep")
        ->capture_default_str();
    cmd->callback([&action, &shared, opts] {
      action = [&shared, opts](std::ostream& out) {
        const PatternSpec tau = resolve_pattern(opts->pattern);
        const SearchLimits limits = shared.limits(opts->witness_cap);
        const SearchResult result = opts->restrict_mode == "layered"
                                        ? max_over_layered(tau, opts->n, limits)
                                        : max_over_all(tau, opts->n, limits);
        write_search(result, shared, out);
        return 0;
      };
    });
  }

  {
    auto opts = std::make_shared<GkOptions>();
    auto* cmd = app.add_subcommand(
        "gk", "Maximize over antilayer-then-k-layers structures");
    add_shared(cmd, shared);
    cmd->add_option("--beta", opts->beta, "Pattern parameter beta")->required();
    cmd->add_option("--n", opts->n, "Size of the host permutations")->required();
    cmd->add_option("--k", opts->k, "Number of nontrivial layers")->required();
    cmd->add_option("--witness-cap", opts->witness_cap, "Witnesses to keep")
        ->capture_default_str();
    cmd->callback([&action, &shared, opts] {
      action = [&shared, opts](std::ostream& out) {
        const SearchResult result =
            g_k_max(PatternSpec::two_beta(opts->beta), opts->n, opts->k,
                    shared.limits(opts->witness_cap));
        write_search(result, shared, out);
        return 0;
      };
    });
  }

  {
    auto opts = std::make_shared<DensityOptions>();
    auto* cmd = app.add_subcommand("density", "Closed-form packing density");
    add_shared(cmd, shared);
    cmd->add_option("--family", opts->family, "aa | 2b")
        ->check(CLI::IsMember({"aa", "2b"}))
        ->required();
    cmd->add_option("--alpha", opts->alpha, "Alpha for --family aa");
    cmd->add_option("--beta", opts->beta, "Beta for --family 2b");
    cmd->add_option("--converge-to", opts->converge_to,
                    "Append a formula-mode ratio table up to this n");
    cmd->add_option("--digits", opts->digits, "Decimal digits in the float rendering")
        ->capture_default_str();
    cmd->callback([&action, &shared, opts] {
      action = [&shared, opts](std::ostream& out) {
        DensityReport report;
        if (opts->family == "aa") {
          if (opts->alpha == 0)
            throw std::invalid_argument("--family aa needs --alpha");
          report = density_alpha_alpha(opts->alpha, opts->converge_to, opts->digits);
        } else {
          if (opts->beta == 0) throw std::invalid_argument("--family 2b needs --beta");
          report = density_2beta(opts->beta, opts->converge_to, opts->digits);
        }
        if (shared.format == "json") out << to_json(report) << "\n";
        else if (shared.format == "csv") out << density_csv(report);
        else out << density_human(report);
        return 0;
      };
    });
  }

  {
    auto opts = std::make_shared<RatiosOptions>();
    auto* cmd = app.add_subcommand("ratios", "Galvin ratio table");
    add_shared(cmd, shared);
    add_pattern_flags(cmd, opts->pattern);
    cmd->add_option("--n-max", opts->n_max, "Last n in the table")->required();
    cmd->add_option("--mode", opts->mode, "exhaustive | layered | formula")
        ->check(CLI::IsMember({"exhaustive", "layered", "formula"}))
        ->capture_default_str();
    cmd->callback([&action, &shared, opts] {
      action = [&shared, opts](std::ostream& out) {
        const PatternSpec tau = resolve_pattern(opts->pattern);
        const RatioTable table = galvin_ratios(
            tau, opts->n_max, ratio_mode_from_string(opts->mode), shared.limits());
        if (shared.format == "json") out << to_json(table) << "\n";
        else if (shared.format == "csv") out << ratio_csv(table);
        else out << ratio_human(table);
        return table.failures.empty() ? 0 : 2;
      };
    });
  }

  {
    auto opts = std::make_shared<VerifyOptions>();
    auto* cmd = app.add_subcommand("verify", "Machine-check a lemma's claim");
    add_shared(cmd, shared);
    cmd->add_option("--lemma", opts->lemma,
                    "tech|isolated|push|sort|move|merge|restriction|galvin")
        ->check(CLI::IsMember({"tech", "isolated", "push", "sort", "move", "merge",
                               "restriction", "galvin"}))
        ->required();
    cmd->add_option("--n-max", opts->n_max, "Sweep bound (lemma-specific default)");
    cmd->add_option("--beta", opts->beta, "Restrict the sweep to one beta");
    cmd->add_option("--m-max", opts->m_max, "Pattern length bound (restriction)")
        ->capture_default_str();
    cmd->add_option("--n-exhaustive", opts->n_exhaustive,
                    "Exhaustive-table bound (galvin)")
        ->capture_default_str();
    cmd->callback([&action, &shared, &err, opts] {
      action = [&shared, &err, opts](std::ostream& out) {
        return run_verify(
            opts->lemma,
            opts->n_max < 0 ? std::nullopt : std::optional<int>(opts->n_max),
            opts->beta < 0 ? std::nullopt : std::optional<int>(opts->beta),
            opts->m_max, opts->n_exhaustive, shared, out, err);
      };
    });
  }

  {
    auto opts = std::make_shared<EnumerateOptions>();
    auto* cmd = app.add_subcommand("enumerate", "List permutations or structures");
    add_shared(cmd, shared);
    cmd->add_option("--n", opts->n, "Size")->required();
    cmd->add_flag("--layered", opts->layered, "List layered block structures instead");
    cmd->callback([&action, &shared, opts] {
      action = [&shared, opts](std::ostream& out) {
        std::vector<std::string> lines;
        if (opts->layered) {
          enumerate_layered(opts->n, [&lines](const BlockStructure& b) {
            lines.push_back(b.to_string());
          }, shared.limits());
        } else {
          enumerate_all(opts->n, [&lines](const Permutation& p) {
            lines.push_back(p.to_string());
          }, shared.limits());
        }
        if (shared.format == "json") {
          out << "[";
          for (size_t i = 0; i < lines.size(); ++i) {
            if (i) out << ',';
            out << '"' << lines[i] << '"';
          }
          out << "]\n";
        } else {
          if (shared.format == "csv") out << "value\n";
          for (const std::string& line : lines) out << line << "\n";
        }
        return 0;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out_stream << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    OutputTarget target(shared.out_path, out_stream);
    return action(target.stream());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    // broken internal identity: treat as a found counterexample
    err << "counterexample: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace permpack::cli
