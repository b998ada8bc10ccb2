#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace symf::detail {

/// Thread-safe memo table. Each key is computed at most once; concurrent
/// requests for the same key wait for the first computation. Values are
/// published whole, so readers never see a partially built value.
///
/// The compute function runs outside the lock, so it may itself query the
/// cache for other keys.
template <class Key, class Value, class Map = std::map<Key, std::shared_future<std::shared_ptr<const Value>>>>
class OnceCache {
 public:
  template <class Compute>
  std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
    std::promise<std::shared_ptr<const Value>> promise;
    std::shared_future<std::shared_ptr<const Value>> future;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it == entries_.end()) {
        future = promise.get_future().share();
        entries_.emplace(key, future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(std::make_shared<const Value>(compute()));
      } catch (...) {
        {
          std::lock_guard lock(mutex_);
          entries_.erase(key);
        }
        promise.set_exception(std::current_exception());
      }
    }
    return future.get();
  }

 private:
  std::mutex mutex_;
  Map entries_;
};

}  // namespace symf::detail
