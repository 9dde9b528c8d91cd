// Walks through the library on M(2,4): the hyperplanes, the lattice
// invariants, and a membership check with its witness.

#include <iostream>

#include "cmarr/cmarr.hpp"

int main() {
  using namespace cmarr;

  const Arrangement a = build_arrangement(2, 4);
  std::cout << "M(2,4) removes " << a.size() << " hyperplanes:\n";
  for (const auto& h : a.hyperplanes) std::cout << "  " << h.normal.to_string() << '\n';

  const IntersectionLattice lattice = build_lattice(a);
  const RegionCount regions = region_count(lattice);
  std::cout << "flats: " << lattice.size() << '\n'
            << "chi(q) = " << char_poly(lattice).to_string() << '\n'
            << "pi(q)  = " << poincare_poly(lattice).to_string() << '\n'
            << "real regions: " << regions.regions << " (bounded: " << regions.bounded << ")\n";

  // The corners of the unit square: 0 + (1+i) = 1 + i, so the two diagonals
  // share a midpoint and the configuration is not in M(2,4).
  const Configuration square{GaussianRational(0), GaussianRational(1), GaussianRational::i(),
                             GaussianRational(Rational(1), Rational(1))};
  const Membership m = in_M(2, square);
  std::cout << "unit square in M(2,4): " << std::boolalpha << m.member << '\n';
  if (m.witness)
    std::cout << "  " << to_string(m.witness->left) << " and " << to_string(m.witness->right)
              << " both sum to " << m.witness->common_value << '\n';

  const Configuration line{GaussianRational(0), GaussianRational(1), GaussianRational(2),
                           GaussianRational(4)};
  std::cout << "(0, 1, 2, 4) in M(2,4): " << in_M(2, line).member << '\n';
  return 0;
}
