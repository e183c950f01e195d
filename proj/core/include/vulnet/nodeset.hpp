#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "vulnet/errors.hpp"

namespace vulnet {

// fixed-universe bitset over node indices 0..universe-1
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int universe)
        : n_(universe), w_((static_cast<std::size_t>(universe) + 63) / 64, 0) {
        if (universe < 0) throw contract_error("NodeSet universe must be non-negative");
    }

    static NodeSet of(int universe, std::initializer_list<int> members) {
        NodeSet s(universe);
        for (int i : members) s.set(i);
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto word : w_) c += std::popcount(word);
        return c;
    }
    bool empty() const {
        for (auto word : w_) if (word) return false;
        return true;
    }

    NodeSet& operator|=(const NodeSet& o) {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    NodeSet& operator&=(const NodeSet& o) {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    // set difference
    NodeSet& operator-=(const NodeSet& o) {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

    bool operator==(const NodeSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool intersects(const NodeSet& o) const {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    // lowest member, or -1 when empty
    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t word = w_[k];
            while (word) {
                int b = std::countr_zero(word);
                f(static_cast<int>(k * 64) + b);
                word &= word - 1;
            }
        }
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw contract_error("node index out of range for NodeSet");
    }
    void match(const NodeSet& o) const {
        if (n_ != o.n_) throw contract_error("NodeSet universe mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace vulnet
