#include "depthlab/method.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace depthlab {

namespace {

constexpr std::array<std::pair<DepthMethod, std::string_view>, 8> kNames{{
    {DepthMethod::Euclidean, "Euclidean"},
    {DepthMethod::Mahalanobis, "Mahalanobis"},
    {DepthMethod::Projection, "Projection"},
    {DepthMethod::Tukey, "Tukey"},
    {DepthMethod::Zonoid, "Zonoid"},
    {DepthMethod::LP, "LP"},
    {DepthMethod::Local, "Local"},
    {DepthMethod::StudentLS, "StudentLS"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view to_string(DepthMethod m) noexcept {
  for (const auto& [kind, name] : kNames) {
    if (kind == m) return name;
  }
  return "unknown";
}

DepthMethod parse_depth_method(std::string_view name) {
  for (const auto& [kind, canonical] : kNames) {
    if (iequals(name, canonical)) return kind;
  }
  if (iequals(name, "halfspace")) return DepthMethod::Tukey;
  throw std::invalid_argument("unknown depth method '" + std::string(name) + "'");
}

double WeightFunction::operator()(double x) const noexcept {
  if (flavor == WeightFlavor::Power) return std::pow(x, exponent);
  return a + b * x;
}

void WeightFunction::validate() const {
  if (flavor == WeightFlavor::Power) {
    if (!(exponent > 0.0)) throw std::invalid_argument("power weight exponent must be positive");
    return;
  }
  if (!(a >= 0.0 && b >= 0.0 && a + b > 0.0)) {
    throw std::invalid_argument("affine weight needs a >= 0, b >= 0 and a + b > 0");
  }
}

void MethodDescriptor::validate() const {
  if (!(p >= 1.0)) throw std::invalid_argument("L^p exponent must be >= 1");
  if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("locality beta must lie in (0, 1]");
  if (nproj == 0) throw std::invalid_argument("projection count must be >= 1");
  if (local_base == DepthMethod::Local) throw std::invalid_argument("local depth cannot localize itself");
  if (kind == DepthMethod::LP) weight.validate();
}

}  // namespace depthlab
