#include "permpack/pattern.hpp"

#include <sstream>
#include <stdexcept>

namespace permpack {

namespace {

std::vector<int> family_layers(int alpha, int beta) {
  std::vector<int> layers(static_cast<size_t>(alpha), 1);
  layers.push_back(beta);
  return layers;
}

}  // namespace

PatternSpec PatternSpec::explicit_pattern(Permutation p) {
  PatternSpec spec;
  spec.family_ = PatternFamily::explicit_perm;
  if (auto blocks = decompose_blocks(p)) spec.layers_ = blocks->composition();
  spec.perm_ = std::move(p);
  return spec;
}

PatternSpec PatternSpec::alpha_alpha(int alpha) {
  if (alpha < 2)
    throw std::invalid_argument("tau(alpha,alpha) requires alpha >= 2");
  PatternSpec spec = general(alpha, alpha);
  spec.family_ = PatternFamily::tau_alpha_alpha;
  return spec;
}

PatternSpec PatternSpec::two_beta(int beta) {
  if (beta < 2) throw std::invalid_argument("tau(2,beta) requires beta >= 2");
  PatternSpec spec = general(2, beta);
  spec.family_ = PatternFamily::tau_2_beta;
  return spec;
}

PatternSpec PatternSpec::general(int alpha, int beta) {
  if (alpha < 0) throw std::invalid_argument("tau(a,b) requires alpha >= 0");
  if (beta < 1) throw std::invalid_argument("tau(a,b) requires beta >= 1");
  PatternSpec spec;
  spec.family_ = PatternFamily::tau_a_b;
  spec.alpha_ = alpha;
  spec.beta_ = beta;
  spec.layers_ = family_layers(alpha, beta);
  spec.perm_ = build_from_blocks(BlockStructure::from_composition(*spec.layers_));
  return spec;
}

const std::vector<int>& PatternSpec::layers() const {
  if (!layers_) throw std::domain_error("pattern is not layered");
  return *layers_;
}

bool PatternSpec::is_two_beta_shape() const {
  if (!layers_) return false;
  const auto& l = *layers_;
  return l.size() == 3 && l[0] == 1 && l[1] == 1 && l[2] >= 2;
}

std::string PatternSpec::describe() const {
  std::ostringstream out;
  switch (family_) {
    case PatternFamily::tau_alpha_alpha:
      out << "tau(" << alpha_ << "," << alpha_ << ")";
      break;
    case PatternFamily::tau_2_beta:
      out << "tau(2," << beta_ << ")";
      break;
    case PatternFamily::tau_a_b:
      out << "tau(" << alpha_ << "," << beta_ << ")";
      break;
    case PatternFamily::explicit_perm:
      out << "[" << perm_.to_string() << "]";
      break;
  }
  return out.str();
}

}  // namespace permpack
