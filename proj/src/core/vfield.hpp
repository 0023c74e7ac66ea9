#ifndef PETROV_VFIELD_HPP
#define PETROV_VFIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace petrov {

using Point = std::vector<double>;

std::vector<double> vf_eval(const VField& X, const Point& p);

// Lie bracket [X,Y] at a point, via symbolic partials of the components.
std::vector<double> vf_bracket_at(const VField& X, const VField& Y,
                                  const Point& p);

struct ActionReport {
  std::string id;
  std::string variant;  // "corrected" | "typo"
  double closure_residual = 0.0;
  // Structure constants recovered by least squares in the X-basis.
  std::vector<std::vector<std::vector<double>>> recovered;
  std::string identified_class;
  double identification_residual = 0.0;
  double isotropy_residual = 0.0;
  bool preferred_isotropy_ok = true;
  bool has_preferred = true;
};

// Samples the action's box, recovers structure constants by least squares,
// and checks closure, identification through the recorded change of basis,
// generic-isotropy vanishing and the preferred-isotropy equality.
ActionReport verify_action(const Catalog& cat, const std::string& id,
                           const std::string& variant, std::uint64_t seed = 0,
                           int points = 24);

std::vector<Point> sample_box(const PetrovAction& a, std::uint64_t seed,
                              int count);

}  // namespace petrov

#endif
