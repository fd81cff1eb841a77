#include <algorithm>

#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/errors.hpp"

namespace newtonleaf {

AdmissibleSet admissible_set(const DatumPtr& d, const IntVector& mu, Level level) {
  if (!d->is_dominant(to_rationals(mu))) throw PreconditionError("admissible_set needs a dominant cocharacter");
  std::set<IntVector> orbit;
  for (std::size_t w = 0; w < d->weyl().size(); ++w) orbit.insert(d->weyl().act(w, mu));

  ElementSet adm;
  for (const auto& lambda : orbit) {
    const ElementSet& below = bruhat_lower_set(ExtendedAffineElement::translation(d, lambda));
    adm.insert(below.begin(), below.end());
  }

  AdmissibleSet out;
  out.level = level;
  if (level == Level::Iwahori) {
    out.elements.assign(adm.begin(), adm.end());
    std::sort(out.elements.begin(), out.elements.end(), output_order);
  } else {
    std::set<IntVector> dominant;
    for (const auto& x : adm) dominant.insert(require_integral(dominant_rep(*d, to_rationals(x.translation_part()))));
    out.dominant_translations.assign(dominant.begin(), dominant.end());
    std::sort(out.dominant_translations.begin(), out.dominant_translations.end(), std::greater<>());
  }
  return out;
}

}  // namespace newtonleaf
