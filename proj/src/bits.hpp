#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mmp {

// Fixed-width dynamic bitset tuned for the search kernels.
class Bits {
public:
    Bits() = default;
    explicit Bits(int size) : size_(size), w_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    int words() const { return static_cast<int>(w_.size()); }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    void fill() {
        for (auto& x : w_) x = ~0ULL;
        trim();
    }
    void clear() {
        for (auto& x : w_) x = 0;
    }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    int first() const {
        for (int i = 0; i < words(); ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    int next(int from) const {
        if (from >= size_) return -1;
        int wi = from >> 6;
        std::uint64_t x = w_[wi] & (~0ULL << (from & 63));
        while (true) {
            if (x) return wi * 64 + std::countr_zero(x);
            if (++wi >= words()) return -1;
            x = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < words(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    Bits& operator&=(const Bits& o) {
        for (int i = 0; i < words(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (int i = 0; i < words(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& minus(const Bits& o) {
        for (int i = 0; i < words(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool intersects(const Bits& o) const {
        for (int i = 0; i < words(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (int i = 0; i < words(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool subset_of(const Bits& o) const {
        for (int i = 0; i < words(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bits& o) const { return w_ == o.w_; }

    const std::vector<std::uint64_t>& raw() const { return w_; }

private:
    void trim() {
        if (size_ & 63) w_.back() &= (1ULL << (size_ & 63)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace mmp
