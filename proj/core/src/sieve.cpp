#include "iesieve/sieve.hpp"

#include "iesieve/errors.hpp"

namespace iesieve {

Count pie_sum(BitSubset r, BitSubset t) {
  if (!r.is_subset_of(t)) {
    throw DomainError("pie_sum needs r to be a subset of t, got r=" + r.to_string() +
                      " t=" + t.to_string());
  }
  long total = 0;
  const unsigned t_size = t.size();
  (t - r).for_each_subset([&](BitSubset extra) {
    const unsigned outside = t_size - r.size() - extra.size();
    total += (outside % 2 == 0) ? 1 : -1;
  });
  return Count{total};
}

}  // namespace iesieve
