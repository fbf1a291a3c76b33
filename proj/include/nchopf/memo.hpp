#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace nchopf::detail {

/// Internally synchronized memo table. The value is computed outside the lock, so a
/// recursive computation may consult the same table; concurrent misses may compute twice,
/// which is harmless for pure functions.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
public:
    template <class F>
    Value get(const Key& key, F&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end())
                return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value, Compare> table_;
};

} // namespace nchopf::detail
