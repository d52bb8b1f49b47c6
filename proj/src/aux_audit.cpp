#include "slidebin/aux_audit.hpp"

#include <algorithm>

namespace slidebin {

namespace detail {

AuxCounters& aux_counters() noexcept {
  thread_local AuxCounters counters;
  return counters;
}

void aux_record_allocate(std::size_t slots, std::size_t bytes) noexcept {
  auto& c = aux_counters();
  c.current.slots += slots;
  c.current.bytes += bytes;
  c.peak.slots = std::max(c.peak.slots, c.current.slots);
  c.peak.bytes = std::max(c.peak.bytes, c.current.bytes);
}

void aux_record_deallocate(std::size_t slots, std::size_t bytes) noexcept {
  auto& c = aux_counters();
  c.current.slots -= slots;
  c.current.bytes -= bytes;
}

}  // namespace detail

AuxAuditScope::AuxAuditScope() noexcept {
  auto& c = detail::aux_counters();
  c.peak = c.current;
  baseline_ = c.current;
}

AuxUsage AuxAuditScope::peak() const noexcept {
  const auto& c = detail::aux_counters();
  return {c.peak.slots - baseline_.slots, c.peak.bytes - baseline_.bytes};
}

}  // namespace slidebin
