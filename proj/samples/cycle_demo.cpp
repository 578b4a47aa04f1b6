// Cycle structure and a discrete log in a custom semigroup.

#include <iostream>

#include "semidlog.hpp"

int main() {
  using namespace semidlog;

  Context<ZMod> ctx(ZMod(100));
  const std::uint64_t x = 2;

  const CycleStructure c = deterministic_cycle(ctx, x);
  std::cout << "x = 2 in Z/100: s=" << c.start << " L=" << c.length << " N=" << c.order() << "\n";

  const auto y = power(ctx, x, 15);
  const auto r = semigroup_dlog(ctx, x, y, c);
  const auto& p = std::get<Progression>(r.solution);
  std::cout << "log_2(" << y << ") = " << p.first << " + " << p.period << "k\n";

  Context<Monogenic> mono(Monogenic(10, 15));
  const auto m = semigroup_dlog(mono, 1, 5, CycleStructure{10, 15});
  std::cout << "monogenic(10,15): log of x^5 is " << std::get<Unique>(m.solution).m << "\n";
  std::cout << "multiplications: " << ctx.multiplications() + mono.multiplications() << "\n";
}
