#pragma once

#include <cstdint>
#include <vector>

namespace tessera {

// Addressable min-heap over dense item ids 0..capacity-1 with decrease-key.
// Arity 4 keeps the tree shallow while a node's children share a cache line.
template <typename Key, unsigned Arity = 4>
class DaryHeap {
public:
    explicit DaryHeap(std::size_t capacity) : pos_(capacity, kAbsent), key_(capacity) {}

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    bool contains(std::uint32_t item) const { return pos_[item] != kAbsent; }
    const Key& key(std::uint32_t item) const { return key_[item]; }
    std::uint32_t top() const { return heap_.front(); }
    const Key& top_key() const { return key_[heap_.front()]; }

    void push(std::uint32_t item, const Key& key) {
        key_[item] = key;
        pos_[item] = static_cast<std::uint32_t>(heap_.size());
        heap_.push_back(item);
        sift_up(pos_[item]);
    }

    // Key must not increase.
    void decrease(std::uint32_t item, const Key& key) {
        key_[item] = key;
        sift_up(pos_[item]);
    }

    void push_or_decrease(std::uint32_t item, const Key& key) {
        if (contains(item))
            decrease(item, key);
        else
            push(item, key);
    }

    std::uint32_t pop() {
        const std::uint32_t item = heap_.front();
        pos_[item] = kAbsent;
        const std::uint32_t last = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_[0] = last;
            pos_[last] = 0;
            sift_down(0);
        }
        return item;
    }

private:
    static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

    void place(std::size_t i, std::uint32_t item) {
        heap_[i] = item;
        pos_[item] = static_cast<std::uint32_t>(i);
    }

    void sift_up(std::size_t i) {
        const std::uint32_t item = heap_[i];
        while (i > 0) {
            std::size_t parent = (i - 1) / Arity;
            if (!(key_[item] < key_[heap_[parent]]))
                break;
            place(i, heap_[parent]);
            i = parent;
        }
        place(i, item);
    }

    void sift_down(std::size_t i) {
        const std::uint32_t item = heap_[i];
        const std::size_t n = heap_.size();
        while (true) {
            std::size_t first = i * Arity + 1;
            if (first >= n)
                break;
            std::size_t best = first;
            std::size_t end = first + Arity < n ? first + Arity : n;
            for (std::size_t c = first + 1; c < end; ++c)
                if (key_[heap_[c]] < key_[heap_[best]])
                    best = c;
            if (!(key_[heap_[best]] < key_[item]))
                break;
            place(i, heap_[best]);
            i = best;
        }
        place(i, item);
    }

    std::vector<std::uint32_t> heap_;
    std::vector<std::uint32_t> pos_;
    std::vector<Key> key_;
};

} // namespace tessera
