#include "iesieve/limits.hpp"

#include <atomic>
#include <string>

#include "iesieve/errors.hpp"

namespace iesieve {
namespace {
std::atomic<unsigned> g_table_cap{kDefaultTableCap};
}

unsigned table_cap() noexcept { return g_table_cap.load(std::memory_order_relaxed); }

void set_table_cap(unsigned n) {
  if (n > 40) throw DomainError("table cap must be at most 40, got " + std::to_string(n));
  g_table_cap.store(n, std::memory_order_relaxed);
}

void require_at_most(unsigned n, unsigned cap, std::string_view what) {
  if (n > cap) {
    throw SizeCapError(std::string(what) + ": size " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
}

void require_table(unsigned n, std::string_view what) { require_at_most(n, table_cap(), what); }

}  // namespace iesieve
