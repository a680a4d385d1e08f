#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tripm {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeTag {};
struct VertexTag {};

/// Dense bitset over identifiers 0..universe-1. Tagged so that vertex and
/// edge sets cannot be mixed up.
template <typename Tag>
class IdSet {
public:
    using Id = std::uint32_t;

    IdSet() = default;
    explicit IdSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static IdSet full(std::size_t universe) {
        IdSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Id>(i));
        return s;
    }

    template <typename Range>
    static IdSet of(std::size_t universe, const Range& ids) {
        IdSet s(universe);
        for (auto id : ids) s.insert(static_cast<Id>(id));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Id id) const {
        return id < universe_ && (words_[id >> 6] >> (id & 63)) & 1u;
    }

    void insert(Id id) {
        check(id);
        words_[id >> 6] |= std::uint64_t{1} << (id & 63);
    }

    void erase(Id id) {
        check(id);
        words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Members in increasing order.
    std::vector<Id> ids() const {
        std::vector<Id> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<Id>(wi * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    IdSet& operator|=(const IdSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    IdSet& operator&=(const IdSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    IdSet& operator-=(const IdSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
    friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
    friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }

    bool intersects(const IdSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const IdSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const IdSet&, const IdSet&) = default;

private:
    void check(Id id) const {
        if (id >= universe_) throw std::out_of_range("id outside set universe");
    }
    void same_universe(const IdSet& o) const {
        if (o.universe_ != universe_) throw std::invalid_argument("id sets over different universes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

using EdgeSet = IdSet<EdgeTag>;
using VertexSet = IdSet<VertexTag>;

}  // namespace tripm
