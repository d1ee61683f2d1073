#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace lucastower::detail {

// Process-wide cache shared between threads. The compute callback runs
// outside the lock, so recursive lookups are fine; a race only costs a
// duplicate computation of an identical value.
template <class Key, class Value>
class Memo {
public:
  template <class Compute>
  Value get(const Key &key, Compute &&compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end())
        return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

} // namespace lucastower::detail
