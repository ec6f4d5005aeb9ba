#pragma once

#include "parkinv/core.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Verification harness: every structural statement about invariant parking
// assortments becomes a checkable predicate over a concrete length vector,
// reporting pass/fail with a replayable counterexample.  Checkers rely only
// on the parking simulator and exhaustive scans, never on the pruned search
// or the closed-form fast paths they are meant to validate.

namespace parkinv::theorems {

enum class TheoremId {
    a_necc_min_char,      // minimal characteristic: necessary conditions
    b_max_char_iff,       // characteristic n-1 iff y_1 >= y_2 = ... = y_n
    c_almost_constant,    // closed-form set and counts for (b, a^{n-1})
    d_closure,            // drop a non-1 entry, stay invariant
    d_image,              // realized degrees are exactly 0..characteristic
    d_embedding,          // prefix a 1, stay invariant for any extension
    d_monotonic,          // characteristic grows by at most 1 per extension
    e_nonconstant_bound,  // w <= y_1 + ... + y_{n-1} for non-constant y
    e_size_bound,         // W(y) inside 1 + S(y), at most 2^{n-1} elements
    e_superdec_equality,  // superdecreasing: W(y) = 1 + S(y), counts exact
    e_necc_equality,      // |W| = 2^{n-1} forces the almost-superdecreasing shape
    f_inclusion_bound,    // PA^inv-up inside {1}^{n-chi} x W^chi, with size bound
    l_nondecreasing,      // sorted criterion agrees with the simulator
    l_extend,             // append a car: parks iff new pref <= 1 + m
    l_replace,            // lower a running-minimum preference, still parks
    l_swap,               // swap algorithm properties (i)-(iii)
    l_remove_max,         // drop an argmax entry, stay invariant for the prefix
    l_mod_a,              // almost constant: entries are 1 mod a
    l_order_stat,         // almost constant: x_(i) <= 1 + (i-1)a
};

std::string_view to_string(TheoremId id);
TheoremId theorem_from_string(std::string_view name);  // throws on unknown ids
const std::vector<TheoremId>& all_theorems();

// A concrete configuration demonstrating a violation.  When `permutation`
// is nonempty, replaying it through the parking simulator for `y`
// reproduces the failure described in `note`.
struct Witness {
    std::vector<int> y;
    std::vector<int> x;
    std::vector<int> permutation;
    std::string note;
};

struct CheckReport {
    TheoremId theorem{};
    std::uint64_t inputs_tested = 0;
    bool pass = true;
    bool vacuous = false;  // implication antecedent never fired
    std::optional<Witness> witness;
    std::string details;
    std::chrono::microseconds elapsed{0};
};

struct CheckOptions {
    std::uint64_t budget = 10'000'000;
    // Extension entries probed by d_embedding / d_monotonic / l_extend;
    // 0 means the largest entry of y.
    int max_extension_entry = 0;
};

// Evaluates one theorem statement instantiated at y.
CheckReport check(TheoremId id, const LengthVector& y, const CheckOptions& opts = {});

struct SweepOptions {
    std::uint64_t budget = 10'000'000;
    int workers = 0;  // 0 = hardware concurrency
};

// Runs check over every y in [max_entry]^n for n = 1..max_n, lexicographic.
// The first failing y (in that order) provides the witness regardless of
// worker count.
CheckReport sweep(TheoremId id, int max_n, int max_entry, const SweepOptions& opts = {});

// The known demonstration that the minimal-characteristic conditions are
// not sufficient: y = (1,3,2,2) meets them, yet (1,1,1,4) is invariant.
// Verified against the oracle on every call; throws if that ever breaks.
std::pair<LengthVector, PreferenceVector> converse_counterexample_minimal_invariance();

// Iterative swap algorithm: while the first entry is not the minimum, swap
// it with the last smaller entry.  The result b is a permutation of a with
//   (i)  b_1 = min b
//   (ii) b_i >= a_i on S = {i : a_1 > a_i}, b_i = a_i off S u {1}
//   (iii) b_i = min(b_i..b_n) wherever b_i > a_i on S
// `iterations`, when given, receives the number of swaps performed.
std::vector<int> swap_to_min_prefix(std::vector<int> a, int* iterations = nullptr);

}  // namespace parkinv::theorems
