#include "gas3km/functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gas3km {
namespace {

using std::numbers::pi;

struct CatalogEntry {
  FunctionId id;
  std::string_view name;
  bool multimodal;
  bool separable;
};

constexpr std::array<CatalogEntry, kFunctionCount> kCatalog{{
    {FunctionId::sphere, "sphere", false, true},
    {FunctionId::ellipsoidal, "ellipsoidal", false, true},
    {FunctionId::tablet, "tablet", false, true},
    {FunctionId::cigar, "cigar", false, true},
    {FunctionId::two_axes, "two_axes", false, true},
    {FunctionId::schwefel, "schwefel", false, false},
    {FunctionId::rosenbrock, "rosenbrock", true, false},
    {FunctionId::rastrigin, "rastrigin", true, true},
    {FunctionId::rastrigin_scaled, "rastrigin_scaled", true, true},
    {FunctionId::rastrigin_skewed, "rastrigin_skewed", true, true},
    {FunctionId::griewangk, "griewangk", true, false},
    {FunctionId::ackley, "ackley", true, false},
    {FunctionId::bohachevsky, "bohachevsky", true, false},
}};

const CatalogEntry& entry(FunctionId id) {
  return kCatalog.at(static_cast<std::size_t>(id));
}

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double ellipsoidal(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i] * x[i];
  return s;
}

double tablet(std::span<const double> x) {
  double s = 1e6 * x[0] * x[0];
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
  return s;
}

double cigar(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
  return x[0] * x[0] + 1e6 * s;
}

double two_axes(std::span<const double> x) {
  const std::size_t half = x.size() / 2;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i < half ? 1e6 : 1.0) * x[i] * x[i];
  return s;
}

double schwefel(std::span<const double> x) {
  double partial = 0.0, s = 0.0;
  for (double v : x) {
    partial += v;
    s += partial * partial;
  }
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i] * x[i] - x[i + 1];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v);
  return s;
}

double rastrigin_scaled(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double s = 10.0 * n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double z = std::pow(10.0, static_cast<double>(i) / (n - 1.0)) * x[i];
    s += z * z - 10.0 * std::cos(2.0 * pi * z);
  }
  return s;
}

double rastrigin_skewed(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) {
    const double y = v > 0.0 ? 10.0 * v : v;
    s += y * y - 10.0 * std::cos(2.0 * pi * v);
  }
  return s;
}

double griewangk(std::span<const double> x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double bohachevsky(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += x[i] * x[i] + 2.0 * x[i + 1] * x[i + 1] - 0.3 * std::cos(3.0 * pi * x[i]) -
         0.4 * std::cos(4.0 * pi * x[i + 1]) + 0.7;
  }
  return s;
}

}  // namespace

std::string_view function_name(FunctionId id) { return entry(id).name; }

std::optional<FunctionId> parse_function_id(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e.id;
  return std::nullopt;
}

FunctionMeta function_meta(FunctionId id, std::size_t dimension) {
  const auto& e = entry(id);
  return {e.id, e.name, dimension, 0.0, kInitLow, kInitHigh, e.multimodal, e.separable};
}

std::vector<FunctionMeta> list_functions(std::size_t dimension) {
  std::vector<FunctionMeta> out;
  out.reserve(kCatalog.size());
  for (const auto& e : kCatalog) out.push_back(function_meta(e.id, dimension));
  return out;
}

std::vector<double> known_optimizer(FunctionId id, std::size_t dimension) {
  return std::vector<double>(dimension, id == FunctionId::rosenbrock ? 1.0 : 0.0);
}

double evaluate(FunctionId id, std::span<const double> x) {
  if (x.size() < 2)
    throw std::invalid_argument("evaluate: dimension must be at least 2, got " +
                                std::to_string(x.size()));
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("evaluate: non-finite component");

  switch (id) {
    case FunctionId::sphere: return sphere(x);
    case FunctionId::ellipsoidal: return ellipsoidal(x);
    case FunctionId::tablet: return tablet(x);
    case FunctionId::cigar: return cigar(x);
    case FunctionId::two_axes: return two_axes(x);
    case FunctionId::schwefel: return schwefel(x);
    case FunctionId::rosenbrock: return rosenbrock(x);
    case FunctionId::rastrigin: return rastrigin(x);
    case FunctionId::rastrigin_scaled: return rastrigin_scaled(x);
    case FunctionId::rastrigin_skewed: return rastrigin_skewed(x);
    case FunctionId::griewangk: return griewangk(x);
    case FunctionId::ackley: return ackley(x);
    case FunctionId::bohachevsky: return bohachevsky(x);
  }
  throw std::invalid_argument("evaluate: unknown function id");
}

std::vector<double> skewed_init(FunctionId /*id*/, std::size_t n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("skewed_init: dimension must be at least 2");
  std::vector<double> x(n);
  const double top = std::nextafter(kInitHigh, kInitLow);
  for (auto& v : x) v = std::min(kInitLow + (kInitHigh - kInitLow) * rng.uniform(), top);
  return x;
}

}  // namespace gas3km
