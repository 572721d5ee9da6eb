#include "gas3km/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace gas3km {

namespace {
constexpr double kMutationScale = 1.0;
}

OperatorParams OperatorParams::mlx(std::size_t dimension, std::size_t mu, std::size_t lambda) {
  return {4.0, mu, lambda, 20.0, 1.0 / static_cast<double>(dimension)};
}

OperatorParams OperatorParams::mpx(std::size_t dimension, std::size_t mu, std::size_t lambda) {
  return {1.0, mu, lambda, 20.0, 1.0 / static_cast<double>(dimension)};
}

void OperatorParams::validate() const {
  if (!(eta > 0.0)) throw std::invalid_argument("OperatorParams: eta must be positive");
  if (lambda < 1) throw std::invalid_argument("OperatorParams: lambda must be >= 1");
  if (!(eta_mutation > 0.0))
    throw std::invalid_argument("OperatorParams: eta_mutation must be positive");
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0))
    throw std::invalid_argument("OperatorParams: mutation_prob must lie in [0, 1]");
}

double polynomial_delta(double u, double eta) {
  const double e = 1.0 / (eta + 1.0);
  if (u < 0.5) return std::pow(2.0 * u, e) - 1.0;
  return 1.0 - std::pow(2.0 * (1.0 - u), e);
}

double sample_spread(Recombination kind, double eta, RngStream& rng) {
  if (kind == Recombination::mpx) return polynomial_delta(rng.uniform_open(), eta);
  const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
  const double z = rng.normal();
  return sign * std::expm1(0.25 * eta * std::fabs(z));
}

std::vector<Genes> recombine(Recombination kind, std::span<const double> female,
                             std::span<const std::span<const double>> males,
                             const OperatorParams& params, RngStream& rng) {
  params.validate();
  if (males.empty()) throw std::invalid_argument("recombine: at least one male parent required");
  for (const auto& m : males)
    if (m.size() != female.size()) throw std::invalid_argument("recombine: parent length mismatch");

  std::vector<Genes> offspring(params.lambda, Genes(female.size()));
  for (auto& child : offspring) {
    for (std::size_t j = 0; j < female.size(); ++j) {
      const auto& male = males[rng.below(males.size())];
      const double beta = sample_spread(kind, params.eta, rng);
      child[j] = female[j] + beta * (female[j] - male[j]);
    }
  }
  return offspring;
}

Genes mutate(std::span<const double> genes, const OperatorParams& params, RngStream& rng) {
  params.validate();
  Genes out(genes.begin(), genes.end());
  if (params.mutation_prob <= 0.0) return out;
  for (auto& g : out) {
    if (rng.uniform() >= params.mutation_prob) continue;
    g += kMutationScale * polynomial_delta(rng.uniform_open(), params.eta_mutation);
  }
  return out;
}

}  // namespace gas3km
