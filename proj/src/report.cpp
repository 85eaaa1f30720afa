#include "permpack/report.hpp"

#include <sstream>

namespace permpack {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void append_ratio_fields(std::ostringstream& out, const Rational& r) {
  out << "\"ratio_num\":" << boost::multiprecision::numerator(r)
      << ",\"ratio_den\":" << boost::multiprecision::denominator(r)
      << ",\"ratio\":" << quoted(decimal_string(r));
}

}  // namespace

std::string to_json(const RewriteOutcome& out) {
  std::ostringstream json;
  json << "{\"op\":" << quoted(out.op) << ",\"before\":" << quoted(out.before.to_string())
       << ",\"after\":" << quoted(out.after.to_string())
       << ",\"count_before\":" << out.count_before
       << ",\"count_after\":" << out.count_after;
  if (out.loss) json << ",\"loss\":" << *out.loss;
  if (out.gain) json << ",\"gain\":" << *out.gain;
  json << ",\"formula_delta\":";
  if (out.formula_delta) json << *out.formula_delta;
  else json << "null";
  json << ",\"hypothesis_satisfied\":" << (out.hypothesis_satisfied ? "true" : "false")
       << "}";
  return json.str();
}

std::string rewrite_csv_header() {
  return "op,before,after,count_before,count_after,loss,gain,formula_delta,"
         "hypothesis_satisfied";
}

std::string to_csv_row(const RewriteOutcome& out) {
  std::ostringstream row;
  row << out.op << ',' << quoted(out.before.to_string()) << ','
      << quoted(out.after.to_string()) << ',' << out.count_before << ','
      << out.count_after << ',';
  if (out.loss) row << *out.loss;
  row << ',';
  if (out.gain) row << *out.gain;
  row << ',';
  if (out.formula_delta) row << *out.formula_delta;
  row << ',' << (out.hypothesis_satisfied ? "true" : "false");
  return row.str();
}

std::string to_json(const SearchResult& result) {
  std::ostringstream json;
  json << "{\"pattern\":" << quoted(result.pattern.describe())
       << ",\"pattern_one_line\":" << quoted(result.pattern.perm().to_string())
       << ",\"n\":" << result.n
       << ",\"restriction\":" << quoted(to_string(result.restriction));
  if (result.restriction == Restriction::antilayer_then_layers)
    json << ",\"k\":" << result.k;
  json << ",\"max_count\":" << result.max_count
       << ",\"space_size\":" << result.space_size
       << ",\"num_maximal\":" << result.num_maximal
       << ",\"witness_cap\":" << result.witness_cap << ",\"witnesses\":[";
  for (size_t i = 0; i < result.witnesses.size(); ++i) {
    if (i) json << ',';
    json << quoted(result.witnesses[i].to_string());
  }
  json << "]";
  if (!result.witness_blocks.empty()) {
    json << ",\"witness_blocks\":[";
    for (size_t i = 0; i < result.witness_blocks.size(); ++i) {
      if (i) json << ',';
      json << quoted(result.witness_blocks[i].to_string());
    }
    json << "]";
  }
  if (result.restriction == Restriction::antilayer_then_layers) {
    json << ",\"lemma_sizes_satisfied\":"
         << (result.lemma_sizes_satisfied ? "true" : "false");
  }
  json << "}";
  return json.str();
}

std::string search_csv(const SearchResult& result) {
  std::ostringstream csv;
  csv << "pattern,n,restriction,k,max_count,space_size,num_maximal,witnesses,"
         "witness_blocks\n";
  csv << quoted(result.pattern.describe()) << ',' << result.n << ','
      << to_string(result.restriction) << ',' << result.k << ','
      << result.max_count << ',' << result.space_size << ','
      << result.num_maximal << ',';
  std::ostringstream wit;
  for (size_t i = 0; i < result.witnesses.size(); ++i) {
    if (i) wit << ';';
    wit << result.witnesses[i].to_string();
  }
  csv << quoted(wit.str()) << ',';
  std::ostringstream blocks;
  for (size_t i = 0; i < result.witness_blocks.size(); ++i) {
    if (i) blocks << ';';
    blocks << result.witness_blocks[i].to_string();
  }
  csv << quoted(blocks.str()) << '\n';
  return csv.str();
}

std::string search_human(const SearchResult& result) {
  std::ostringstream out;
  out << "pattern " << result.pattern.describe() << "  n=" << result.n
      << "  restriction=" << to_string(result.restriction);
  if (result.restriction == Restriction::antilayer_then_layers)
    out << " (k=" << result.k << ")";
  out << "\nmax count: " << result.max_count << "\nsearched:  " << result.space_size
      << " candidates, " << result.num_maximal << " maximal\n";
  out << "witnesses (lexicographically least, cap " << result.witness_cap << "):\n";
  for (size_t i = 0; i < result.witnesses.size(); ++i) {
    out << "  " << result.witnesses[i].to_string();
    if (i < result.witness_blocks.size())
      out << "   [" << result.witness_blocks[i].to_string() << "]";
    out << '\n';
  }
  return out.str();
}

std::string to_json(const RatioTable& table) {
  std::ostringstream json;
  json << "{\"pattern\":" << quoted(table.pattern.describe())
       << ",\"mode\":" << quoted(to_string(table.mode)) << ",\"rows\":[";
  for (size_t i = 0; i < table.rows.size(); ++i) {
    const RatioRow& row = table.rows[i];
    if (i) json << ',';
    json << "{\"n\":" << row.n << ",\"count\":" << row.g << ",\"binom\":" << row.binom
         << ",";
    append_ratio_fields(json, row.ratio);
    json << "}";
  }
  json << "],\"failures\":[";
  for (size_t i = 0; i < table.failures.size(); ++i) {
    const RatioFailure& f = table.failures[i];
    if (i) json << ',';
    json << "{\"n_prev\":" << f.n_prev << ",\"n\":" << f.n
         << ",\"ratio_prev\":" << quoted(decimal_string(f.prev))
         << ",\"ratio\":" << quoted(decimal_string(f.cur)) << "}";
  }
  json << "]}";
  return json.str();
}

std::string ratio_csv(const RatioTable& table) {
  std::ostringstream csv;
  csv << "n,count,binom,ratio_num,ratio_den,ratio_float\n";
  for (const RatioRow& row : table.rows) {
    csv << row.n << ',' << row.g << ',' << row.binom << ','
        << boost::multiprecision::numerator(row.ratio) << ','
        << boost::multiprecision::denominator(row.ratio) << ','
        << decimal_string(row.ratio) << '\n';
  }
  return csv.str();
}

std::string ratio_human(const RatioTable& table) {
  std::ostringstream out;
  out << "Galvin ratios for " << table.pattern.describe() << " ("
      << to_string(table.mode) << " mode)\n";
  for (const RatioRow& row : table.rows) {
    out << "  n=" << row.n << "  g=" << row.g << "  C(n,m)=" << row.binom
        << "  ratio=" << boost::multiprecision::numerator(row.ratio) << '/'
        << boost::multiprecision::denominator(row.ratio) << " = "
        << decimal_string(row.ratio) << '\n';
  }
  if (table.failures.empty()) {
    out << "nonincreasing: yes\n";
  } else {
    out << "FAILURES (ratio increased):\n";
    for (const RatioFailure& f : table.failures) {
      out << "  n " << f.n_prev << " -> " << f.n << ": " << decimal_string(f.prev)
          << " -> " << decimal_string(f.cur) << '\n';
    }
  }
  return out.str();
}

std::string to_json(const DensityReport& report) {
  std::ostringstream json;
  json << "{\"num\":" << boost::multiprecision::numerator(report.density)
       << ",\"den\":" << boost::multiprecision::denominator(report.density)
       << ",\"float\":" << quoted(report.density_decimal);
  if (report.xi) {
    json << ",\"xi_num\":" << boost::multiprecision::numerator(*report.xi)
         << ",\"xi_den\":" << boost::multiprecision::denominator(*report.xi);
  }
  if (report.convergence) {
    json << ",\"convergence\":" << to_json(*report.convergence);
  }
  json << "}";
  return json.str();
}

std::string density_csv(const DensityReport& report) {
  std::ostringstream csv;
  csv << "num,den,float,xi_num,xi_den\n"
      << boost::multiprecision::numerator(report.density) << ','
      << boost::multiprecision::denominator(report.density) << ','
      << report.density_decimal << ',';
  if (report.xi) {
    csv << boost::multiprecision::numerator(*report.xi) << ','
        << boost::multiprecision::denominator(*report.xi);
  } else {
    csv << ',';
  }
  csv << '\n';
  if (report.convergence) csv << ratio_csv(*report.convergence);
  return csv.str();
}

std::string density_human(const DensityReport& report) {
  std::ostringstream out;
  out << "packing density of " << report.pattern.describe() << ": "
      << boost::multiprecision::numerator(report.density) << '/'
      << boost::multiprecision::denominator(report.density) << " = "
      << report.density_decimal << '\n';
  if (report.xi) {
    out << "optimal antilayer fraction xi: "
        << boost::multiprecision::numerator(*report.xi) << '/'
        << boost::multiprecision::denominator(*report.xi) << '\n';
  }
  if (report.convergence) out << ratio_human(*report.convergence);
  return out.str();
}

}  // namespace permpack
