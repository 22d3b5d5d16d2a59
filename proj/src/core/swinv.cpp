#include "core/swinv.hpp"

namespace twobridge {

FormalSW sw_knot_surgery(const LaurentPoly& sw_base, const LaurentPoly& alex) {
  return {symmetrize(sw_base * alex)};
}

FormalSW sw_covering_base(const LaurentPoly& alex) { return {symmetrize(alex * substitute_neg(alex))}; }

bool sw_equal(const FormalSW& a, const FormalSW& b) { return equal_up_to_units(a.poly, b.poly); }

}  // namespace twobridge
