#pragma once

#include <atomic>

#include "horofan/errors.hpp"

namespace horofan {

/// Cooperative cancellation flag shared between a caller and a long-running check.
class CancelToken {
 public:
  void cancel() { flag_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return flag_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> flag_{false};
};

inline void check_cancel(const CancelToken* token) {
  if (token && token->cancelled()) throw Cancelled("operation cancelled");
}

}  // namespace horofan
