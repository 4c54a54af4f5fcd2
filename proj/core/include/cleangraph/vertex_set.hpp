#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cleangraph {

// Set of vertices out of a fixed universe {0, ..., universe-1}, stored as
// 64-bit words. All binary operations require both operands to share the
// same universe.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : nbits_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vertices) {
        VertexSet s(universe);
        for (int v : vertices) s.add(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w)
            s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return nbits_; }

    bool contains(int v) const {
        assert(v >= 0 && v < nbits_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void add(int v) {
        assert(v >= 0 && v < nbits_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < nbits_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // Smallest element, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    // Smallest element strictly greater than v, or -1 if none.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= int(words_.size())) return -1;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return i * 64 + std::countr_zero(w);
            if (++i >= int(words_.size())) return -1;
            w = words_[i];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() { v_ = set_->next(v_); return *this; }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }
    private:
        const VertexSet* set_;
        int v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

private:
    void trim() {
        if (nbits_ & 63)
            words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Orders sets by their element sequences, e.g. {0} < {0,1} < {0,2} < {1}.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = a.next(x);
        y = b.next(y);
    }
    return x < 0 && y >= 0;
}

}  // namespace cleangraph
