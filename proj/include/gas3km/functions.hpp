#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gas3km/rng.hpp"

namespace gas3km {

enum class FunctionId {
  sphere,
  ellipsoidal,
  tablet,
  cigar,
  two_axes,
  schwefel,
  rosenbrock,
  rastrigin,
  rastrigin_scaled,
  rastrigin_skewed,
  griewangk,
  ackley,
  bohachevsky,
};

inline constexpr std::size_t kFunctionCount = 13;
inline constexpr double kInitLow = -10.0;
inline constexpr double kInitHigh = -5.0;

struct FunctionMeta {
  FunctionId id;
  std::string_view name;
  std::size_t dimension;
  double global_minimum_value;
  double init_low;
  double init_high;
  bool multimodal;
  bool separable;
};

/// Lowercase catalog id, e.g. "rastrigin_scaled".
std::string_view function_name(FunctionId id);
std::optional<FunctionId> parse_function_id(std::string_view name);

/// Catalog in declaration order.
std::vector<FunctionMeta> list_functions(std::size_t dimension = 20);
FunctionMeta function_meta(FunctionId id, std::size_t dimension = 20);

/// Point where the minimum value 0 is attained.
std::vector<double> known_optimizer(FunctionId id, std::size_t dimension);

/// Objective value (minimization). Throws std::invalid_argument when x has
/// fewer than two components or contains a non-finite value.
double evaluate(FunctionId id, std::span<const double> x);

/// Uniform sample of [kInitLow, kInitHigh]^n.
std::vector<double> skewed_init(FunctionId id, std::size_t n, RngStream& rng);

}  // namespace gas3km
