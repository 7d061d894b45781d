#ifndef BOUNDREP_HANDLES_HPP
#define BOUNDREP_HANDLES_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace boundrep {

/// Linear order of items carrying a lower handle and an upper handle, where
/// item i must precede item j (i != j) whenever lower[i] <= upper[j].
///
/// Items are taken by repeated minimal-element extraction over the sorted
/// handles (lower handles before upper handles on ties). Returns nullopt if at
/// some step no minimal item exists, i.e. the precedence relation has a cycle.
/// Ties are broken by smaller index.
template <class Key>
std::optional<std::vector<int>> order_by_handles(std::span<const Key> lower, std::span<const Key> upper) {
    const int k = static_cast<int>(lower.size());
    std::set<std::pair<Key, int>> lowers;
    for (int i = 0; i < k; ++i) lowers.emplace(lower[i], i);
    std::vector<int> by_upper(k);
    std::iota(by_upper.begin(), by_upper.end(), 0);
    std::stable_sort(by_upper.begin(), by_upper.end(), [&](int a, int b) { return upper[a] < upper[b]; });

    std::vector<char> taken(k, 0);
    std::vector<int> order;
    order.reserve(k);
    std::size_t up = 0;
    while (static_cast<int>(order.size()) < k) {
        while (taken[by_upper[up]]) ++up;
        const int first_upper = by_upper[up];
        const int first_lower = lowers.begin()->second;
        int pick = -1;
        if (upper[first_upper] < lower[first_lower]) {
            pick = first_upper;
        } else {
            auto second = std::next(lowers.begin());
            if (second == lowers.end() || upper[first_lower] < second->first) pick = first_lower;
        }
        if (pick < 0) return std::nullopt;
        taken[pick] = 1;
        lowers.erase({lower[pick], pick});
        order.push_back(pick);
    }
    return order;
}

/// True iff `order` places i before j whenever lower[i] <= upper[j].
template <class Key>
bool respects_handles(std::span<const Key> lower, std::span<const Key> upper, std::span<const int> order) {
    // Prefix maximum of upper handles: a later item j violates iff lower[j] <= max upper before it.
    std::optional<Key> max_upper;
    for (int j : order) {
        if (max_upper && lower[j] <= *max_upper) return false;
        if (!max_upper || *max_upper < upper[j]) max_upper = upper[j];
    }
    return true;
}

} // namespace boundrep

#endif
