#pragma once

#include <atomic>
#include <memory>

#include "padyn/errors.hpp"

namespace padyn {

// Cooperative cancellation flag shared between a caller and a long-running
// computation. A default-constructed token can never be cancelled.
class CancellationToken {
 public:
  CancellationToken() = default;

  static CancellationToken make() {
    CancellationToken t;
    t.flag_ = std::make_shared<std::atomic<bool>>(false);
    return t;
  }

  void cancel() const {
    if (flag_) flag_->store(true, std::memory_order_relaxed);
  }
  bool cancelled() const {
    return flag_ && flag_->load(std::memory_order_relaxed);
  }
  void poll() const {
    if (cancelled()) throw Cancelled("computation cancelled");
  }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
};

}  // namespace padyn
