#pragma once

// A set of 1-based indices. Stored sorted ascending with value semantics and
// lexicographic ordering, so sets can be used as map/set keys. Printing uses
// the conventional brace form "{1,2,5}".

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace copos {

class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> indices);
    explicit IndexSet(std::vector<int> indices);
    static IndexSet full(int n);
    // Bit i-1 of mask corresponds to index i.
    static IndexSet from_mask(std::uint32_t mask);

    bool contains(int i) const;
    bool subset_of(const IndexSet& other) const;
    bool intersects(const IndexSet& other) const;
    IndexSet set_union(const IndexSet& other) const;
    IndexSet set_intersection(const IndexSet& other) const;
    IndexSet set_difference(const IndexSet& other) const;
    IndexSet with(int i) const;
    IndexSet without(int i) const;

    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    const std::vector<int>& indices() const { return indices_; }
    int min() const;  // requires nonempty
    std::uint32_t mask() const;
    std::string to_string() const;

    auto operator<=>(const IndexSet&) const = default;

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

private:
    std::vector<int> indices_;  // sorted ascending, all >= 1, no duplicates
    void normalize();
};

}  // namespace copos
