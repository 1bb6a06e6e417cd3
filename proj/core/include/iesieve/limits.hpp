#pragma once

#include <string_view>

namespace iesieve {

inline constexpr unsigned kDefaultTableCap = 26;

/// Largest ground set for which a dense 2^n table may be allocated.
unsigned table_cap() noexcept;
void set_table_cap(unsigned n);

/// Throws SizeCapError naming `what` when n > cap.
void require_at_most(unsigned n, unsigned cap, std::string_view what);

/// Shorthand for require_at_most(n, table_cap(), what).
void require_table(unsigned n, std::string_view what);

}  // namespace iesieve
