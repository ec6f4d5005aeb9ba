#pragma once

#include "parkinv/core.hpp"

#include <algorithm>
#include <vector>

// Shared helpers for exhaustive desk-scale sweeps.

namespace parkinv::test {

// Advances t through [1, max_value]^n in lexicographic order.
inline bool next_tuple(std::vector<int>& t, int max_value)
{
    for (std::size_t i = t.size(); i-- > 0;) {
        if (t[i] < max_value) {
            ++t[i];
            std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), 1);
            return true;
        }
    }
    return false;
}

// Advances t through the nondecreasing tuples over [1, max_value].
inline bool next_nondecreasing(std::vector<int>& t, int max_value)
{
    for (std::size_t i = t.size(); i-- > 0;) {
        if (t[i] < max_value) {
            ++t[i];
            std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), t[i]);
            return true;
        }
    }
    return false;
}

// All length vectors in [max_entry]^n for n = 1..max_n, lexicographic.
inline std::vector<std::vector<int>> all_length_vectors(int max_n, int max_entry)
{
    std::vector<std::vector<int>> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> y(static_cast<std::size_t>(n), 1);
        do {
            out.push_back(y);
        } while (next_tuple(y, max_entry));
    }
    return out;
}

// Checks every rearrangement of prefs through the simulator; the reference
// definition of permutation invariance, independent of any pruning.
inline bool invariant_by_definition(const LengthVector& y, std::vector<int> prefs)
{
    std::sort(prefs.begin(), prefs.end());
    Occupancy occ;
    do {
        if (!detail::parks_raw(y.lengths(), prefs, occ))
            return false;
    } while (std::next_permutation(prefs.begin(), prefs.end()));
    return true;
}

// Reference enumeration of PA^inv-up: every nondecreasing tuple in [m]^n,
// confirmed by the definition above.
inline std::vector<std::vector<int>> enumerate_invariant_by_definition(const LengthVector& y)
{
    std::vector<std::vector<int>> found;
    std::vector<int> x(static_cast<std::size_t>(y.size()), 1);
    do {
        if (invariant_by_definition(y, x))
            found.push_back(x);
    } while (next_nondecreasing(x, y.total()));
    return found;
}

}  // namespace parkinv::test
