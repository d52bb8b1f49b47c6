#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace slidebin {

/// Per-thread tally of auxiliary buffers, i.e. everything an engine allocates
/// besides its input and output images. A slot is one numeric element.
struct AuxUsage {
  std::size_t slots = 0;
  std::size_t bytes = 0;
};

namespace detail {

struct AuxCounters {
  AuxUsage current;
  AuxUsage peak;
};

AuxCounters& aux_counters() noexcept;
void aux_record_allocate(std::size_t slots, std::size_t bytes) noexcept;
void aux_record_deallocate(std::size_t slots, std::size_t bytes) noexcept;

}  // namespace detail

/// Measures the peak auxiliary usage of the current thread between
/// construction and peak(). Scopes do not nest.
class AuxAuditScope {
 public:
  AuxAuditScope() noexcept;
  AuxUsage peak() const noexcept;

 private:
  AuxUsage baseline_;
};

template <class T>
struct AuditAllocator {
  using value_type = T;

  AuditAllocator() noexcept = default;
  template <class U>
  AuditAllocator(const AuditAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    T* p = std::allocator<T>{}.allocate(n);
    detail::aux_record_allocate(n, n * sizeof(T));
    return p;
  }
  void deallocate(T* p, std::size_t n) noexcept {
    detail::aux_record_deallocate(n, n * sizeof(T));
    std::allocator<T>{}.deallocate(p, n);
  }

  template <class U>
  friend bool operator==(const AuditAllocator&, const AuditAllocator<U>&) noexcept {
    return true;
  }
};

template <class T>
using AuxVector = std::vector<T, AuditAllocator<T>>;

}  // namespace slidebin
