#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace qv {

// Read-mostly memo table safe for concurrent lookups and inserts.
template <typename Key, typename Value>
class memo_table {
public:
    std::optional<Value> find(const Key &k) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(k);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void insert(const Key &k, const Value &v)
    {
        std::unique_lock lock(mutex_);
        table_.emplace(k, v);
    }

    template <typename F>
    Value get_or_compute(const Key &k, F &&compute)
    {
        if (auto hit = find(k)) {
            return *hit;
        }
        Value v = compute();
        insert(k, v);
        return v;
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace qv
