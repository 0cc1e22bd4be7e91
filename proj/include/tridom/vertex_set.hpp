#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace tridom {

/// A set of vertex indices of one grid, stored as a bitset.
/// The universe size is fixed at construction; indices are checked.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : words_((static_cast<size_t>(universe) + 63) / 64, 0), universe_(universe) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    static VertexSet of(std::initializer_list<int> members, int universe) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        check(v);
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check(v);
        uint64_t& w = words_[static_cast<size_t>(v) >> 6];
        uint64_t bit = uint64_t{1} << (v & 63);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    void erase(int v) {
        check(v);
        uint64_t& w = words_[static_cast<size_t>(v) >> 6];
        uint64_t bit = uint64_t{1} << (v & 63);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    bool subset_of(const VertexSet& other) const {
        require_same_universe(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    /// Calls f(v) for every member, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i * 64) + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count_));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw std::domain_error("vertex index " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(universe_));
    }

    void require_same_universe(const VertexSet& other) const {
        if (universe_ != other.universe_)
            throw std::domain_error("vertex sets belong to different grids");
    }

    std::vector<uint64_t> words_;
    int universe_ = 0;
    int count_ = 0;
};

}  // namespace tridom
