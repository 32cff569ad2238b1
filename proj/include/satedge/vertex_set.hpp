#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace satedge {

/// Fixed-universe bitset over the vertices 0..universe-1 of a host graph.
class VertexSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        const_iterator() = default;
        const_iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next(v_);
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const { return v_ == other.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }
    template <class Range>
    static VertexSet of(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }
    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        s.insert_range(0, static_cast<int>(universe));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const word_type* data() const noexcept { return words_.data(); }
    word_type* data() noexcept { return words_.data(); }

    bool contains(int v) const noexcept {
        return (words_[static_cast<std::size_t>(v) / word_bits] >> (static_cast<std::size_t>(v) % word_bits)) & 1U;
    }
    void insert(int v) noexcept {
        words_[static_cast<std::size_t>(v) / word_bits] |= word_type{1} << (static_cast<std::size_t>(v) % word_bits);
    }
    void erase(int v) noexcept {
        words_[static_cast<std::size_t>(v) / word_bits] &= ~(word_type{1} << (static_cast<std::size_t>(v) % word_bits));
    }
    /// Inserts the half-open range [first, last).
    void insert_range(int first, int last) noexcept {
        for (int v = first; v < last;) {
            std::size_t w = static_cast<std::size_t>(v) / word_bits;
            std::size_t bit = static_cast<std::size_t>(v) % word_bits;
            std::size_t span = std::min<std::size_t>(word_bits - bit, static_cast<std::size_t>(last - v));
            word_type mask = span == word_bits ? ~word_type{0} : ((word_type{1} << span) - 1) << bit;
            words_[w] |= mask;
            v += static_cast<int>(span);
        }
    }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    /// Smallest member, or -1.
    int first() const noexcept { return next_from(0); }
    /// Smallest member strictly greater than v, or -1.
    int next(int v) const noexcept { return next_from(v + 1); }

    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, -1); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v : *this) out.push_back(v);
        return out;
    }

    bool intersects(const VertexSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    std::size_t intersection_count(const VertexSet& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    VertexSet& operator&=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }
    /// Keeps only members strictly greater than v.
    void keep_above(int v) noexcept {
        std::size_t cut = static_cast<std::size_t>(v + 1);
        std::size_t w = cut / word_bits;
        for (std::size_t i = 0; i < std::min(w, words_.size()); ++i) words_[i] = 0;
        if (w < words_.size() && cut % word_bits) words_[w] &= ~word_type{0} << (cut % word_bits);
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    /// Complement within the universe.
    VertexSet complement() const {
        VertexSet out = full(universe_);
        out -= *this;
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    int next_from(int start) const noexcept {
        if (start < 0) start = 0;
        std::size_t s = static_cast<std::size_t>(start);
        if (s >= universe_) return -1;
        std::size_t w = s / word_bits;
        word_type cur = words_[w] & (~word_type{0} << (s % word_bits));
        while (true) {
            if (cur) return static_cast<int>(w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }

    std::size_t universe_ = 0;
    std::vector<word_type> words_;
};

}  // namespace satedge
