#include "permpack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permpack {

namespace {

void require_bijection(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
  std::vector<int> repeated;
  std::vector<int> out_of_range;
  for (int v : values) {
    if (v < 1 || v > n) {
      out_of_range.push_back(v);
    } else if (++seen[static_cast<size_t>(v)] == 2) {
      repeated.push_back(v);
    }
  }
  if (out_of_range.empty() && repeated.empty()) return;

  std::vector<int> missing;
  for (int v = 1; v <= n; ++v)
    if (seen[static_cast<size_t>(v)] == 0) missing.push_back(v);

  std::ostringstream msg;
  msg << "not a bijection on 1.." << n;
  auto list = [&msg](const char* label, const std::vector<int>& vs) {
    if (vs.empty()) return;
    msg << "; " << label;
    for (size_t i = 0; i < vs.size(); ++i) msg << (i ? "," : " ") << vs[i];
  };
  list("out of range:", out_of_range);
  list("repeated:", repeated);
  list("missing:", missing);
  throw std::invalid_argument(msg.str());
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  require_bijection(values_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: n must be >= 0");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ' ';
    out << values_[i];
  }
  return out.str();
}

Permutation parse_permutation(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) return Permutation();

  const bool single = tokens.size() == 1;
  const std::string& first = tokens.front();
  const bool all_digits =
      std::all_of(first.begin(), first.end(),
                  [](unsigned char c) { return std::isdigit(c); });

  // Compact form: one multi-digit token, each digit one value (n <= 9).
  if (single && all_digits && first.size() > 1 && first.size() <= 9) {
    std::vector<int> values;
    values.reserve(first.size());
    for (char c : first) values.push_back(c - '0');
    return Permutation(std::move(values));
  }

  std::vector<int> values;
  values.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid permutation token '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("invalid permutation token '" + tok + "'");
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

}  // namespace permpack
