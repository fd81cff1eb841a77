#pragma once

#include <string>
#include <vector>

#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/io.hpp"

namespace testing_helpers {

using namespace newtonleaf;

inline DatumPtr group(const std::string& name) { return datum_from_name(name); }

inline ExtendedAffineElement elt(const DatumPtr& d, const std::string& text) { return parse_element(d, text); }

inline RatVector rv(const std::vector<std::string>& entries) {
  RatVector out;
  for (const auto& e : entries) out.push_back(parse_rational(e));
  return out;
}

inline IntVector iv(const std::vector<long long>& entries) { return to_integers(entries); }

inline SlopeMultiset slopes(const std::vector<std::string>& entries) {
  SlopeMultiset s = rv(entries);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace testing_helpers
