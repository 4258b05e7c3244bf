// Reduced basis of J_1 on the A3 surface z^4 = xy, its cone, and the fan.

#include <iostream>

#include "nashfan/nashfan.hpp"

int main() {
  using namespace nashfan;
  const auto& ctx = a3();
  std::cout << "generators of S: " << join(ctx.semigroup->generators()) << '\n';

  MarkedBasis gb = a3_basis(1);
  std::cout << "GB(J_1):\n";
  for (const auto& e : gb.elements()) std::cout << "  " << to_text(e.poly, ctx.ordering, &e.mark) << '\n';

  GroebnerCone gc = cone_of_basis(gb);
  std::cout << "C_G = " << gc.cone << ", multiplicity " << multiplicity(gc.cone) << '\n';
  std::cout << "standard monomials: " << join(standard_monomials(gb, 1000)) << '\n';

  NashFanResult fan = nash_fan(ctx.semigroup->support_cone(), 1);
  std::cout << "GF(J_1) has " << fan.cones.size() << " maximal cones:\n";
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    std::cout << "  " << fan.cones[i].cone << " multiplicity " << fan.multiplicities[i] << '\n';
  std::cout << (fan.is_singular ? "normalized Nash_1 is singular\n" : "normalized Nash_1 is smooth\n");
}
