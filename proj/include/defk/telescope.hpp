#pragma once

#include <vector>

#include "defk/monoid.hpp"

namespace defk {

/// pi_0-level mapping telescope colim(M -> M -> ...) along multiplication by
/// m0: classes of pairs (x, n) under (x, n) ~ (x * m0, n + 1), carrying the
/// operation [(a,n)] + [(b,m)] = [(a*b, n+m)]. Every class has a level-0
/// representative, so the carrier is materialized as the quotient of M by
/// x ~ y iff x * m0^k = y * m0^k for some k (k <= 2|M| suffices: the image
/// chain of multiplication by m0 stabilizes within |M| steps).
struct TelescopeColimit {
  FiniteMonoid parent;
  int m0;
  FiniteMonoid carrier;
  std::vector<int> class_of_level0;  // element -> carrier index of [(x, 0)]
  std::vector<int> eventual_image;   // intersection of images of mult by m0^k

  /// Carrier index of the class of (x, level).
  int level_map(int level, int x) const;
};

TelescopeColimit telescope_pi0(const FiniteMonoid& m, int m0);

/// True iff the telescope carrier is a group (the Grothendieck group of M
/// whenever M is stably group-like with respect to m0).
bool telescope_group_check(const FiniteMonoid& m, int m0);

}  // namespace defk
