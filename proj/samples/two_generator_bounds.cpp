// Lewittes, Serre and GM bounds for a two-generator semigroup over a range
// of field sizes, with the three GM routes side by side.
//
//   two_generator_bounds [a b]

#include <cstdio>
#include <cstdlib>

#include "nsg/nsg.hpp"

int main(int argc, char** argv) {
  const nsg::Int a = argc > 2 ? std::atoll(argv[1]) : 5;
  const nsg::Int b = argc > 2 ? std::atoll(argv[2]) : 7;
  try {
    const auto two = nsg::TwoGenSemigroup::make(a, b);
    const auto s = two.to_semigroup();
    std::printf("%s  genus %lld  conductor %lld\n", s.to_string().c_str(),
                static_cast<long long>(s.genus()),
                static_cast<long long>(s.conductor()));
    std::printf("%6s %9s %9s %9s %9s %9s\n", "q", "Lewittes", "Serre",
                "GM", "sum", "generic");
    for (nsg::Int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 64, 256}) {
      std::printf("%6lld %9lld %9lld %9lld %9lld %9lld\n",
                  static_cast<long long>(q),
                  static_cast<long long>(nsg::lewittes_bound(s, q)),
                  static_cast<long long>(nsg::serre_bound(s.genus(), q)),
                  static_cast<long long>(nsg::gm_two_gen_closed(two, q)),
                  static_cast<long long>(nsg::gm_two_gen_sum(two, q)),
                  static_cast<long long>(nsg::gm_generic(s, q)));
    }
  } catch (const nsg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 64;
  }
  return 0;
}
