#ifndef WHRANK_CLASSES_HPP
#define WHRANK_CLASSES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "whrank/group.hpp"

namespace whrank {

// Conjugacy classes sorted by (element order, class size, least member).
// Class 0 is {identity}.
struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;        // element -> class
  std::vector<Elem> representatives;          // least member of each class
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> class_order;     // common element order
  std::vector<std::vector<Elem>> members;     // ascending

  std::size_t count() const { return representatives.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// class of x -> class of x^a. The exponent is reduced modulo each element
// order, so negative values are allowed.
std::vector<std::uint32_t> class_power_map(const FiniteGroup& g, const ConjugacyClasses& classes,
                                           long long a);

// Atlas-style names: element order followed by letters A, B, ... in class
// order within each element order (Z is followed by AA, AB, ...).
std::vector<std::string> atlas_class_names(const ConjugacyClasses& classes);

}  // namespace whrank

#endif  // WHRANK_CLASSES_HPP
