#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gas3km/rng.hpp"

namespace gas3km {

/// Parent-centric recombination kinds. MLX draws its spread factor from a
/// heavy-tailed lognormal-style density (explorative); MPX from a polynomial
/// density on (-1, 1) (exploitative).
enum class Recombination { mlx, mpx };

struct OperatorParams {
  double eta = 4.0;
  std::size_t mu = 5;
  std::size_t lambda = 2;
  double eta_mutation = 20.0;
  double mutation_prob = 0.05;

  static OperatorParams mlx(std::size_t dimension, std::size_t mu = 5, std::size_t lambda = 2);
  static OperatorParams mpx(std::size_t dimension, std::size_t mu = 5, std::size_t lambda = 2);

  void validate() const;
};

/// Polynomial-density deviate for a uniform u in (0, 1); lies in (-1, 1).
double polynomial_delta(double u, double eta);

/// One draw of the spread factor beta for the given kind.
double sample_spread(Recombination kind, double eta, RngStream& rng);

using Genes = std::vector<double>;

/// lambda offspring centred on `female`. For every gene of every offspring a
/// male is picked uniformly and y_j = f_j + beta * (f_j - m_j).
/// Throws std::invalid_argument when `males` is empty or lengths differ.
std::vector<Genes> recombine(Recombination kind, std::span<const double> female,
                             std::span<const std::span<const double>> males,
                             const OperatorParams& params, RngStream& rng);

/// Polynomial mutation with a fixed perturbation scale of 1.
Genes mutate(std::span<const double> genes, const OperatorParams& params, RngStream& rng);

}  // namespace gas3km
