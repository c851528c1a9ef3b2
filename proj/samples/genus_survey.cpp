// Walks every semigroup of one genus in parallel and reports how often the
// GM bound falls below Lewittes, and the largest drop seen.
//
//   genus_survey [genus] [q] [workers]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "nsg/nsg.hpp"

namespace {

struct Tally {
  std::uint64_t semigroups = 0;
  std::uint64_t improved = 0;
  nsg::Int best_gain = 0;
  std::string best;
};

}  // namespace

int main(int argc, char** argv) {
  const nsg::Int genus = argc > 1 ? std::atoll(argv[1]) : 10;
  const nsg::Int q = argc > 2 ? std::atoll(argv[2]) : 9;
  nsg::EnumerationOptions opts;
  opts.workers = argc > 3 ? static_cast<unsigned>(std::atoi(argv[3])) : 4;

  try {
    const auto t = nsg::fold_genus(
        genus, Tally{},
        [q](Tally& acc, const nsg::NumericalSemigroup& s) {
          ++acc.semigroups;
          if (nsg::coincidence_criterion(s, q)) return;
          ++acc.improved;
          const nsg::Int gain = nsg::lewittes_bound(s, q) - nsg::gm_generic(s, q);
          if (gain > acc.best_gain) {
            acc.best_gain = gain;
            acc.best = s.to_string();
          }
        },
        [](Tally& total, const Tally& part) {
          total.semigroups += part.semigroups;
          total.improved += part.improved;
          // Strict comparison keeps the first maximum in traversal order.
          if (part.best_gain > total.best_gain) {
            total.best_gain = part.best_gain;
            total.best = part.best;
          }
        },
        opts);
    std::printf("genus %lld, q %lld: %llu semigroups, GM < Lewittes for %llu (%s%%)\n",
                static_cast<long long>(genus), static_cast<long long>(q),
                static_cast<unsigned long long>(t.semigroups),
                static_cast<unsigned long long>(t.improved),
                nsg::render_percent(t.improved, t.semigroups).c_str());
    if (t.best_gain > 0)
      std::printf("largest gain %lld, first reached at %s\n",
                  static_cast<long long>(t.best_gain), t.best.c_str());
  } catch (const nsg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind() == nsg::ErrorKind::ResourceLimit ? 2 : 64;
  }
  return 0;
}
