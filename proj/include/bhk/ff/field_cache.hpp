#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "bhk/ff/gauss.hpp"

namespace bhk::ff {

/// Shares field and Gauss tables between callers. Entries live until clear().
class FieldCache {
   public:
    std::shared_ptr<const FieldTable> field(std::uint64_t p, unsigned r, FieldOptions options = {}) {
        Key key{p, r, options.modulus_rank, options.generator_rank};
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = fields_.find(key);
        if (it != fields_.end()) return it->second;
        auto f = std::make_shared<const FieldTable>(build_field(p, r, options));
        fields_.emplace(key, f);
        return f;
    }

    std::shared_ptr<const GaussSumTable> gauss(std::uint64_t p, unsigned r, FieldOptions options = {}) {
        Key key{p, r, options.modulus_rank, options.generator_rank};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = gauss_.find(key);
            if (it != gauss_.end()) return it->second;
        }
        auto g = std::make_shared<const GaussSumTable>(gauss_sum_table(field(p, r, options)));
        std::lock_guard<std::mutex> lock(mutex_);
        return gauss_.emplace(key, g).first->second;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mutex_);
        fields_.clear();
        gauss_.clear();
    }

    static FieldCache& global() {
        static FieldCache cache;
        return cache;
    }

   private:
    using Key = std::tuple<std::uint64_t, unsigned, unsigned, unsigned>;
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<const FieldTable>> fields_;
    std::map<Key, std::shared_ptr<const GaussSumTable>> gauss_;
};

}  // namespace bhk::ff
