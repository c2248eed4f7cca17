#include "copos/index_set.hpp"

#include "copos/exceptions.hpp"

#include <algorithm>

namespace copos {

void IndexSet::normalize() {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front() < 1) {
        throw BadInput("IndexSet: indices are 1-based, got " + std::to_string(indices_.front()));
    }
}

IndexSet::IndexSet(std::initializer_list<int> indices) : indices_(indices) {
    normalize();
}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
    normalize();
}

IndexSet IndexSet::full(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return IndexSet(std::move(v));
}

IndexSet IndexSet::from_mask(std::uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i) {
        if (mask & (1u << i)) v.push_back(i + 1);
    }
    return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSet::subset_of(const IndexSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

bool IndexSet::intersects(const IndexSet& other) const {
    auto a = indices_.begin();
    auto b = other.indices_.begin();
    while (a != indices_.end() && b != other.indices_.end()) {
        if (*a == *b) return true;
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return false;
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
    std::vector<int> v;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(v));
    IndexSet result;
    result.indices_ = std::move(v);
    return result;
}

IndexSet IndexSet::set_intersection(const IndexSet& other) const {
    std::vector<int> v;
    std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                          std::back_inserter(v));
    IndexSet result;
    result.indices_ = std::move(v);
    return result;
}

IndexSet IndexSet::set_difference(const IndexSet& other) const {
    std::vector<int> v;
    std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(v));
    IndexSet result;
    result.indices_ = std::move(v);
    return result;
}

IndexSet IndexSet::with(int i) const {
    IndexSet result = *this;
    if (!result.contains(i)) {
        result.indices_.push_back(i);
        result.normalize();
    }
    return result;
}

IndexSet IndexSet::without(int i) const {
    IndexSet result;
    result.indices_.reserve(indices_.size());
    for (int x : indices_) {
        if (x != i) result.indices_.push_back(x);
    }
    return result;
}

int IndexSet::min() const {
    if (indices_.empty()) {
        throw BadInput("IndexSet::min on empty set");
    }
    return indices_.front();
}

std::uint32_t IndexSet::mask() const {
    std::uint32_t m = 0;
    for (int i : indices_) {
        if (i > 32) {
            throw BadInput("IndexSet::mask: index exceeds 32");
        }
        m |= 1u << (i - 1);
    }
    return m;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices_[i]);
    }
    s += "}";
    return s;
}

}  // namespace copos
