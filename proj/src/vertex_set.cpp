#include "pmin/vertex_set.hpp"

#include <bit>
#include <stdexcept>

namespace pmin {

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
}

VertexSet VertexSet::from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n && v < 64; ++v)
        if ((mask >> v) & 1) s.set(v);
    return s;
}

VertexSet VertexSet::of(int n, std::initializer_list<int> members) {
    VertexSet s(n);
    for (int v : members) s.set(v);
    return s;
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t b : bits_) c += std::popcount(b);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t b : bits_)
        if (b) return false;
    return true;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) return static_cast<int>(i * 64 + std::countr_zero(bits_[i]));
    return -1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t b = bits_[i];
        while (b) {
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(b)));
            b &= b - 1;
        }
    }
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    for (std::size_t i = 1; i < bits_.size(); ++i)
        if (bits_[i]) throw std::invalid_argument("VertexSet::to_mask: member >= 64");
    return bits_.empty() ? 0 : bits_[0];
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t other = i < o.bits_.size() ? o.bits_[i] : 0;
        if (bits_[i] & ~other) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    std::size_t lim = std::min(bits_.size(), o.bits_.size());
    for (std::size_t i = 0; i < lim; ++i)
        if (bits_[i] & o.bits_[i]) return true;
    return false;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r(std::max(n_, o.n_));
    std::size_t lim = std::min(bits_.size(), o.bits_.size());
    for (std::size_t i = 0; i < lim; ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    VertexSet r(std::max(n_, o.n_));
    for (std::size_t i = 0; i < r.bits_.size(); ++i) {
        std::uint64_t a = i < bits_.size() ? bits_[i] : 0;
        std::uint64_t b = i < o.bits_.size() ? o.bits_[i] : 0;
        r.bits_[i] = a | b;
    }
    return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t b = i < o.bits_.size() ? o.bits_[i] : 0;
        r.bits_[i] = bits_[i] & ~b;
    }
    return r;
}

bool VertexSet::operator==(const VertexSet& o) const {
    std::size_t lim = std::max(bits_.size(), o.bits_.size());
    for (std::size_t i = 0; i < lim; ++i) {
        std::uint64_t a = i < bits_.size() ? bits_[i] : 0;
        std::uint64_t b = i < o.bits_.size() ? o.bits_[i] : 0;
        if (a != b) return false;
    }
    return true;
}

} // namespace pmin
