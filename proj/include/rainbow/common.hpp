#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (bad file, bad ids, not a cover, ...).
struct input_error : error {
    using error::error;
};

// A search exceeded its configured node budget; never a wrong answer.
struct budget_exceeded : error {
    using error::error;
};

// A coloring has more colors than the subset-DP mask can hold.
struct capacity_error : error {
    using error::error;
};

// A property the implementation promises (or the source material asserts)
// failed at runtime.
struct invariant_violation : error {
    using error::error;
};

// Bitmask over dense ids [0, universe).
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    void insert(int i) {
        check(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void erase(int i) {
        check(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool contains(int i) const {
        if (i < 0 || i >= n_) return false;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int bit = __builtin_ctzll(w);
                f(static_cast<int>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    bool operator==(const IndexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    static IndexSet of(int universe, const std::vector<int>& members) {
        IndexSet s(universe);
        for (int i : members) s.insert(i);
        return s;
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw input_error("IndexSet: id " + std::to_string(i) + " out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

using VertexSet = IndexSet;
using EdgeSet = IndexSet;

}  // namespace rainbow
