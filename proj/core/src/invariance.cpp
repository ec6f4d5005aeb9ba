#include "parkinv/invariance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace parkinv::invariance {

namespace {

constexpr std::uint64_t kCountCap = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > kCountCap - b ? kCountCap : a + b;
}

// Number of nondecreasing tuples over `alphabet` whose i-th entry is at
// most caps[i].  Saturates instead of overflowing; used only to reject
// hopeless searches before they start.
std::uint64_t candidate_count(const std::vector<int>& alphabet, const std::vector<int>& caps)
{
    const std::size_t n = caps.size();
    const std::size_t k = alphabet.size();
    // ways[j] = tuples filling positions pos+1..n-1 whose first entry has
    // alphabet index >= j; suffix sums make each refinement one lookup.
    std::vector<std::uint64_t> ways(k + 1, 1);
    std::vector<std::uint64_t> suffix(k + 1, 0);
    for (std::size_t pos = n; pos-- > 0;) {
        for (std::size_t j = k; j-- > 0;)
            suffix[j] = saturating_add(suffix[j + 1], alphabet[j] <= caps[pos] ? ways[j] : 0);
        if (pos == 0)
            break;
        for (std::size_t j = 0; j < k; ++j)
            ways[j] = suffix[j];
    }
    return suffix[0];
}

struct SearchSpace {
    std::vector<int> alphabet;  // admissible entry values, ascending
    std::vector<int> caps;      // per-position upper bound for entry i
};

SearchSpace make_search_space(const LengthVector& y, bool prune)
{
    SearchSpace space;
    space.caps.resize(static_cast<std::size_t>(y.size()));
    if (prune) {
        // Entries of invariant assortments lie in 1 + S(y), and a
        // nondecreasing tuple parks only if entry i is at most
        // 1 + y_1 + ... + y_{i-1}.
        for (int s : binary_combination_set(y))
            space.alphabet.push_back(1 + s);
        long long prefix = 0;
        for (int i = 0; i < y.size(); ++i) {
            space.caps[static_cast<std::size_t>(i)] =
                static_cast<int>(std::min<long long>(1 + prefix, y.total()));
            prefix += y[i];
        }
    } else {
        space.alphabet.resize(static_cast<std::size_t>(y.total()));
        std::iota(space.alphabet.begin(), space.alphabet.end(), 1);
        std::fill(space.caps.begin(), space.caps.end(), y.total());
    }
    return space;
}

// Depth-first walk over nondecreasing candidate tuples in lexicographic
// order, confirming each with the full permutation check.
class NdEnumerator {
public:
    NdEnumerator(const LengthVector& y, const EnumerationOptions& opts)
        : y_(y), opts_(opts), space_(make_search_space(y, opts.prune))
    {
        const std::uint64_t candidates = candidate_count(space_.alphabet, space_.caps);
        if (candidates > opts.budget)
            throw budget_exceeded(opts.budget, candidates, "candidates");
        current_.resize(static_cast<std::size_t>(y.size()));
    }

    std::vector<std::vector<int>> run()
    {
        found_.clear();
        descend(0, 0);
        return std::move(found_);
    }

private:
    void descend(std::size_t pos, std::size_t min_idx)
    {
        for (std::size_t idx = min_idx; idx < space_.alphabet.size(); ++idx) {
            const int value = space_.alphabet[idx];
            if (value > space_.caps[pos])
                break;
            current_[pos] = value;
            if (pos + 1 == current_.size()) {
                if (detail::is_invariant_counted(y_.lengths(), current_, experiments_,
                                                 opts_.budget))
                    found_.push_back(current_);
            } else {
                descend(pos + 1, idx);
            }
        }
    }

    const LengthVector& y_;
    EnumerationOptions opts_;
    SearchSpace space_;
    std::vector<int> current_;
    std::vector<std::vector<int>> found_;
    std::uint64_t experiments_ = 0;
};

}  // namespace

budget_exceeded::budget_exceeded(std::uint64_t budget, std::uint64_t observed,
                                 std::string what_exceeded)
    : std::runtime_error("budget of " + std::to_string(budget) +
                         " parking experiments exceeded: " + std::to_string(observed) + " " +
                         what_exceeded),
      budget_(budget),
      observed_(observed),
      unit_(std::move(what_exceeded))
{
}

bool detail::is_invariant_counted(std::span<const int> lengths, std::span<const int> prefs,
                                  std::uint64_t& experiments, std::uint64_t budget,
                                  std::vector<int>* failing_perm)
{
    std::vector<int> perm(prefs.begin(), prefs.end());
    std::sort(perm.rbegin(), perm.rend());  // largest entries first: they fail soonest
    Occupancy occ;
    do {
        if (++experiments > budget)
            throw budget_exceeded(budget, experiments, "experiments");
        if (!parkinv::detail::parks_raw(lengths, perm, occ)) {
            if (failing_perm)
                *failing_perm = std::move(perm);
            return false;
        }
    } while (std::prev_permutation(perm.begin(), perm.end()));
    return true;
}

std::uint64_t detail::distinct_permutation_count(std::span<const int> sorted)
{
    // n! / (m_1! m_2! ...) computed as a product of binomials to stay exact.
    std::uint64_t count = 1;
    std::size_t placed = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        const std::size_t run = j - i;
        // choose positions for this value among the remaining slots
        for (std::size_t t = 1; t <= run; ++t)
            count = count * (placed + t) / t;
        placed += run;
        i = j;
    }
    return count;
}

bool is_invariant(const LengthVector& y, const PreferenceVector& x)
{
    std::uint64_t experiments = 0;
    return detail::is_invariant_counted(y.lengths(), x.prefs(), experiments,
                                        std::numeric_limits<std::uint64_t>::max());
}

int degree(const PreferenceVector& x)
{
    int d = 0;
    for (int p : x.prefs())
        d += (p != 1);
    return d;
}

std::vector<PreferenceVector> enumerate_invariant_nd(const LengthVector& y,
                                                     const EnumerationOptions& opts)
{
    std::vector<PreferenceVector> out;
    for (std::vector<int>& tuple : NdEnumerator(y, opts).run())
        out.emplace_back(std::move(tuple), y);
    return out;
}

std::uint64_t enumerate_invariant_full_count(const LengthVector& y,
                                             const EnumerationOptions& opts)
{
    std::uint64_t total = 0;
    for (const PreferenceVector& x : enumerate_invariant_nd(y, opts))
        total += detail::distinct_permutation_count(x.prefs());
    return total;
}

int characteristic(const LengthVector& y, const EnumerationOptions& opts)
{
    int max_degree = 0;
    for (const PreferenceVector& x : enumerate_invariant_nd(y, opts))
        max_degree = std::max(max_degree, degree(x));
    return max_degree;
}

std::vector<int> invariant_solution_set(const LengthVector& y, const EnumerationOptions& opts)
{
    const int n = y.size();
    std::vector<int> candidates;
    if (opts.prune) {
        // w = 1 + s for a subsequence sum s, capped by the nondecreasing
        // parking criterion at position n.
        const long long cap = 1LL + y.total() - y[n - 1];
        for (int s : binary_combination_set(y))
            if (1LL + s <= cap)
                candidates.push_back(1 + s);
    } else {
        candidates.resize(static_cast<std::size_t>(y.total()));
        std::iota(candidates.begin(), candidates.end(), 1);
    }

    std::uint64_t experiments = 0;
    std::vector<int> prefs(static_cast<std::size_t>(n), 1);
    std::vector<int> wset;
    for (int w : candidates) {
        prefs[static_cast<std::size_t>(n - 1)] = w;
        if (detail::is_invariant_counted(y.lengths(), prefs, experiments, opts.budget))
            wset.push_back(w);
    }
    return wset;
}

std::vector<int> binary_combination_set(const LengthVector& y)
{
    constexpr std::size_t kMaxSums = std::size_t{1} << 22;
    std::vector<int> sums{0};
    std::vector<int> merged;
    for (int i = 1; i < y.size(); ++i) {
        const int step = y[i];
        merged.clear();
        merged.reserve(sums.size() * 2);
        // merge sums with (sums + step), dropping duplicates
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < sums.size() || b < sums.size()) {
            const long long va =
                a < sums.size() ? sums[a] : std::numeric_limits<long long>::max();
            const long long vb =
                b < sums.size() ? sums[b] + static_cast<long long>(step)
                                : std::numeric_limits<long long>::max();
            const long long v = std::min(va, vb);
            if (merged.empty() || merged.back() != v)
                merged.push_back(static_cast<int>(v));
            if (va == v)
                ++a;
            if (vb == v)
                ++b;
        }
        sums.swap(merged);
        if (sums.size() > kMaxSums)
            throw std::length_error("binary combination set is too large to materialize");
    }
    return sums;
}

std::vector<int> remove_max(std::vector<int> prefs)
{
    if (prefs.size() < 2)
        throw std::invalid_argument("remove_max requires at least two entries");
    const auto max_it = std::max_element(prefs.begin(), prefs.end());
    prefs.erase(max_it);  // max_element returns the first maximum
    return prefs;
}

InvariantProfile invariant_profile(const LengthVector& y, const EnumerationOptions& opts)
{
    InvariantProfile profile{y, enumerate_invariant_nd(y, opts), 0, {}, {}};
    for (const PreferenceVector& x : profile.nd_invariants) {
        const int d = degree(x);
        profile.characteristic = std::max(profile.characteristic, d);
        ++profile.degree_histogram[d];
    }
    profile.wset = invariant_solution_set(y, opts);
    return profile;
}

}  // namespace parkinv::invariance
