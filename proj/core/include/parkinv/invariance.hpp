#pragma once

#include "parkinv/core.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Brute-force oracle for permutation-invariant parking assortments.  A
// preference tuple is invariant when every rearrangement of its entries is
// itself a parking assortment.  The enumeration works on nondecreasing
// representatives and confirms each candidate by checking all distinct
// permutations of its multiset of entries.

namespace parkinv::invariance {

// Raised when an enumeration would exceed (or did exceed) its budget of
// simulated parking experiments.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::uint64_t budget, std::uint64_t observed, std::string what_exceeded);

    std::uint64_t budget() const { return budget_; }
    std::uint64_t observed() const { return observed_; }
    // "candidates" when the up-front candidate count was already too large,
    // "experiments" when the running experiment count crossed the budget.
    const std::string& what_exceeded() const { return unit_; }

private:
    std::uint64_t budget_;
    std::uint64_t observed_;
    std::string unit_;
};

struct EnumerationOptions {
    // Maximum simulated parking experiments per enumeration call.
    std::uint64_t budget = 10'000'000;
    // With pruning, candidate entries are drawn from 1 + S(y) and capped by
    // the nondecreasing parking criterion; both are necessary conditions.
    // Without it the search scans every nondecreasing tuple in [m]^n (and
    // every w in [m] for the solution set), which is what the verification
    // harness uses so that a pruning bug cannot validate itself.
    bool prune = true;
};

// True iff every distinct permutation of the entries of x parks.  Checks
// multiset permutations only, largest entries first (those fail soonest).
bool is_invariant(const LengthVector& y, const PreferenceVector& x);

// Number of entries different from 1.
int degree(const PreferenceVector& x);

// The set of nondecreasing invariant parking assortments for y, in
// lexicographic order.  Throws budget_exceeded when the candidate space or
// the experiment count crosses the budget.
std::vector<PreferenceVector> enumerate_invariant_nd(const LengthVector& y,
                                                     const EnumerationOptions& opts = {});

// Count of all invariant parking assortments (every permutation counted).
std::uint64_t enumerate_invariant_full_count(const LengthVector& y,
                                             const EnumerationOptions& opts = {});

// Greatest degree across all invariant parking assortments for y.
int characteristic(const LengthVector& y, const EnumerationOptions& opts = {});

// W(y): all w such that (1^{n-1}, w) is invariant, ascending.
std::vector<int> invariant_solution_set(const LengthVector& y,
                                        const EnumerationOptions& opts = {});

// S(y): all subsequence sums of (y_2, ..., y_n), including the empty sum 0,
// deduplicated and ascending.
std::vector<int> binary_combination_set(const LengthVector& y);

// Removes one maximal entry (the smallest index among maxima).  Requires at
// least two entries.
std::vector<int> remove_max(std::vector<int> prefs);

struct InvariantProfile {
    LengthVector y;
    std::vector<PreferenceVector> nd_invariants;  // PA^inv-up, lexicographic
    int characteristic = 0;
    std::map<int, std::uint64_t> degree_histogram;
    std::vector<int> wset;
};

InvariantProfile invariant_profile(const LengthVector& y, const EnumerationOptions& opts = {});

namespace detail {

// Invariance check with experiment accounting.  Increments `experiments`
// once per simulated parking run and throws budget_exceeded past the
// budget.  On failure, fills `failing_perm` (when given) with the first
// permutation that does not park.
bool is_invariant_counted(std::span<const int> lengths, std::span<const int> prefs,
                          std::uint64_t& experiments, std::uint64_t budget,
                          std::vector<int>* failing_perm = nullptr);

// Number of distinct rearrangements of a sorted multiset.
std::uint64_t distinct_permutation_count(std::span<const int> sorted);

}  // namespace detail

}  // namespace parkinv::invariance
