#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pmin {

// A subset of {0, ..., n-1} stored as a bit mask of arbitrary width.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}

    static VertexSet full(int n);
    static VertexSet from_mask(int n, std::uint64_t mask);
    static VertexSet of(int n, std::initializer_list<int> members);

    int universe_size() const { return n_; }

    bool test(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const;
    bool empty() const;
    bool any() const { return !empty(); }
    // Smallest member, or -1 when empty.
    int first() const;
    std::vector<int> members() const;
    // Requires all members < 64.
    std::uint64_t to_mask() const;

    bool subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator|(const VertexSet& o) const;
    // Set difference: members of *this not in o.
    VertexSet minus(const VertexSet& o) const;

    bool operator==(const VertexSet& o) const;
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace pmin
