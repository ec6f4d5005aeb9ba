#include "parkinv/theorems.hpp"

#include "parkinv/closed_forms.hpp"
#include "parkinv/invariance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace parkinv::theorems {

namespace {

using invariance::EnumerationOptions;

// The harness never prunes: a bug in the lemma-based candidate pruning must
// not be able to validate itself here.
EnumerationOptions exhaustive(std::uint64_t budget)
{
    return EnumerationOptions{budget, false};
}

struct NameEntry {
    TheoremId id;
    std::string_view name;
};

constexpr std::array<NameEntry, 19> kRegistry{{
    {TheoremId::a_necc_min_char, "A-necc-min-char"},
    {TheoremId::b_max_char_iff, "B-max-char-iff"},
    {TheoremId::c_almost_constant, "C-almost-constant"},
    {TheoremId::d_closure, "D-closure"},
    {TheoremId::d_image, "D-image"},
    {TheoremId::d_embedding, "D-embedding"},
    {TheoremId::d_monotonic, "D-monotonic"},
    {TheoremId::e_nonconstant_bound, "E-nonconstant-bound"},
    {TheoremId::e_size_bound, "E-size-bound"},
    {TheoremId::e_superdec_equality, "E-superdec-equality"},
    {TheoremId::e_necc_equality, "E-necc-equality"},
    {TheoremId::f_inclusion_bound, "F-inclusion-bound"},
    {TheoremId::l_nondecreasing, "L-nondecreasing"},
    {TheoremId::l_extend, "L-extend"},
    {TheoremId::l_replace, "L-replace"},
    {TheoremId::l_swap, "L-swap"},
    {TheoremId::l_remove_max, "L-remove-max"},
    {TheoremId::l_mod_a, "L-mod-a"},
    {TheoremId::l_order_stat, "L-order-stat"},
}};

std::vector<int> to_vec(std::span<const int> s)
{
    return std::vector<int>(s.begin(), s.end());
}

int extension_bound(const LengthVector& y, const CheckOptions& opts)
{
    return opts.max_extension_entry > 0 ? opts.max_extension_entry : y.max_entry();
}

std::string format_tuple(std::span<const int> t)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i)
        os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

void fail(CheckReport& report, Witness witness)
{
    report.pass = false;
    report.witness = std::move(witness);
}

// Advances t through [1, max_value]^n in lexicographic order.
bool next_tuple(std::vector<int>& t, int max_value)
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
bool next_nondecreasing(std::vector<int>& t, int max_value)
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

void check_a_necc_min_char(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    if (y.size() < 3) {
        r.vacuous = true;
        r.details = "statement restricted to n >= 3";
        return;
    }
    r.inputs_tested = 1;
    if (invariance::characteristic(y, exhaustive(opts.budget)) != 0) {
        r.vacuous = true;  // y is not minimally invariant
        return;
    }
    int min_rest = y[1];
    for (int i = 2; i < y.size(); ++i)
        min_rest = std::min(min_rest, y[i]);
    const long long others = static_cast<long long>(y.total()) - y[1];
    if (!(y[0] < min_rest && y[1] != others))
        fail(r, {to_vec(y.lengths()), {}, {},
                 "minimally invariant, yet y_1 >= min(rest) or y_2 equals the other lengths"});
}

void check_b_max_char_iff(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    r.inputs_tested = 1;
    if (y.size() == 1)
        return;  // chi = 0 = n - 1 and the shape condition is empty
    const bool max_char =
        invariance::characteristic(y, exhaustive(opts.budget)) == y.size() - 1;
    const bool shape = closed_forms::is_max_characteristic(y);
    if (max_char != shape)
        fail(r, {to_vec(y.lengths()), {}, {},
                 max_char ? "characteristic is n-1 without the almost-constant shape"
                          : "almost-constant shape without characteristic n-1"});
}

void check_c_almost_constant(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto cls = closed_forms::classify(y);
    if (!cls) {
        r.vacuous = true;
        return;
    }
    const auto closed = closed_forms::generate_invariant_nd_closed(*cls);
    const auto oracle = invariance::enumerate_invariant_nd(y, exhaustive(opts.budget));
    r.inputs_tested = oracle.size() + 2;
    if (closed != oracle) {
        for (std::size_t i = 0; i < std::max(closed.size(), oracle.size()); ++i) {
            const bool in_closed = i < closed.size();
            const bool in_oracle = i < oracle.size();
            if (in_closed && in_oracle && closed[i] == oracle[i])
                continue;
            const auto& differing = in_closed ? closed[i] : oracle[i];
            fail(r, {to_vec(y.lengths()), to_vec(differing.prefs()), {},
                     "closed-form set differs from the oracle at " +
                         format_tuple(differing.prefs())});
            return;
        }
    }
    std::uint64_t oracle_full = 0;
    for (const PreferenceVector& x : oracle)
        oracle_full += invariance::detail::distinct_permutation_count(x.prefs());
    if (closed_forms::count_invariant_full(*cls) != oracle_full) {
        fail(r, {to_vec(y.lengths()), {}, {}, "full count formula disagrees with the oracle"});
        return;
    }
    if (closed_forms::count_invariant_nd(*cls) != oracle.size())
        fail(r, {to_vec(y.lengths()), {}, {},
                 "nondecreasing count formula disagrees with the oracle"});
}

void check_d_closure(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto nd = invariance::enumerate_invariant_nd(y, exhaustive(opts.budget));
    std::uint64_t experiments = 0;
    bool fired = false;
    for (const PreferenceVector& x : nd) {
        if (invariance::degree(x) == 0)
            continue;
        fired = true;
        std::vector<int> sorted = to_vec(x.prefs());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] == 1)
                continue;
            if (i > 0 && sorted[i] == sorted[i - 1] && sorted[i - 1] != 1)
                continue;  // deleting equal entries gives the same multiset
            std::vector<int> candidate = sorted;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
            candidate.insert(candidate.begin(), 1);
            ++r.inputs_tested;
            std::vector<int> failing;
            if (!invariance::detail::is_invariant_counted(y.lengths(), candidate, experiments,
                                                          opts.budget, &failing)) {
                fail(r, {to_vec(y.lengths()), std::move(candidate), std::move(failing),
                         "dropping entry " + std::to_string(sorted[i]) + " of " +
                             format_tuple(sorted) + " leaves the invariant set"});
                return;
            }
        }
    }
    r.vacuous = !fired;
}

void check_d_image(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto nd = invariance::enumerate_invariant_nd(y, exhaustive(opts.budget));
    r.inputs_tested = nd.size();
    std::vector<char> seen(static_cast<std::size_t>(y.size()), 0);
    int chi = 0;
    for (const PreferenceVector& x : nd) {
        const int d = invariance::degree(x);
        seen[static_cast<std::size_t>(d)] = 1;
        chi = std::max(chi, d);
    }
    for (int d = 0; d <= chi; ++d) {
        if (!seen[static_cast<std::size_t>(d)]) {
            fail(r, {to_vec(y.lengths()), {}, {},
                     "no invariant assortment of degree " + std::to_string(d) +
                         " although the characteristic is " + std::to_string(chi)});
            return;
        }
    }
}

void check_d_embedding(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto nd = invariance::enumerate_invariant_nd(y, exhaustive(opts.budget));
    std::uint64_t experiments = 0;
    for (int t = 1; t <= extension_bound(y, opts); ++t) {
        const LengthVector extended = y.append(t);
        for (const PreferenceVector& x : nd) {
            std::vector<int> candidate = to_vec(x.prefs());
            candidate.insert(candidate.begin(), 1);
            ++r.inputs_tested;
            std::vector<int> failing;
            if (!invariance::detail::is_invariant_counted(extended.lengths(), candidate,
                                                          experiments, opts.budget, &failing)) {
                fail(r, {to_vec(extended.lengths()), std::move(candidate), std::move(failing),
                         "prefixing 1 to " + format_tuple(x.prefs()) +
                             " is not invariant for the extension by " + std::to_string(t)});
                return;
            }
        }
    }
}

void check_d_monotonic(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const int chi = invariance::characteristic(y, exhaustive(opts.budget));
    for (int t = 1; t <= extension_bound(y, opts); ++t) {
        const LengthVector extended = y.append(t);
        const int chi_ext = invariance::characteristic(extended, exhaustive(opts.budget));
        ++r.inputs_tested;
        if (chi_ext != chi && chi_ext != chi + 1) {
            fail(r, {to_vec(extended.lengths()), {}, {},
                     "characteristic jumps from " + std::to_string(chi) + " to " +
                         std::to_string(chi_ext)});
            return;
        }
    }
}

void check_e_nonconstant_bound(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    if (y.is_constant()) {
        r.vacuous = true;
        return;
    }
    const long long limit = static_cast<long long>(y.total()) - y[y.size() - 1];
    for (int w : invariance::invariant_solution_set(y, exhaustive(opts.budget))) {
        ++r.inputs_tested;
        if (w > limit) {
            std::vector<int> x(static_cast<std::size_t>(y.size()), 1);
            x.back() = w;
            fail(r, {to_vec(y.lengths()), std::move(x), {},
                     "invariant solution " + std::to_string(w) + " exceeds y_1 + ... + y_{n-1}"});
            return;
        }
    }
}

void check_e_size_bound(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto wset = invariance::invariant_solution_set(y, exhaustive(opts.budget));
    const auto sums = invariance::binary_combination_set(y);
    for (int w : wset) {
        ++r.inputs_tested;
        if (!std::binary_search(sums.begin(), sums.end(), w - 1)) {
            std::vector<int> x(static_cast<std::size_t>(y.size()), 1);
            x.back() = w;
            fail(r, {to_vec(y.lengths()), std::move(x), {},
                     "invariant solution " + std::to_string(w) +
                         " is not 1 + a binary combination"});
            return;
        }
    }
    ++r.inputs_tested;
    if (y.size() - 1 < 63 && wset.size() > (std::uint64_t{1} << (y.size() - 1)))
        fail(r, {to_vec(y.lengths()), {}, {}, "more than 2^{n-1} invariant solutions"});
}

void check_e_superdec_equality(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    if (!y.is_superdecreasing()) {
        r.vacuous = true;
        return;
    }
    const auto wset = invariance::invariant_solution_set(y, exhaustive(opts.budget));
    std::vector<int> expected;
    for (int s : invariance::binary_combination_set(y))
        expected.push_back(1 + s);
    r.inputs_tested = wset.size() + 3;
    if (wset != expected) {
        fail(r, {to_vec(y.lengths()), {}, {}, "W(y) differs from 1 + S(y)"});
        return;
    }
    const auto counts = closed_forms::superdecreasing_counts(y);
    const auto nd = invariance::enumerate_invariant_nd(y, exhaustive(opts.budget));
    std::uint64_t full = 0;
    int chi = 0;
    for (const PreferenceVector& x : nd) {
        full += invariance::detail::distinct_permutation_count(x.prefs());
        chi = std::max(chi, invariance::degree(x));
    }
    if (counts.nd != nd.size() || counts.full != full) {
        fail(r, {to_vec(y.lengths()), {}, {}, "superdecreasing counts disagree with the oracle"});
        return;
    }
    const int expected_chi = y.size() >= 2 ? 1 : 0;
    if (chi != expected_chi)
        fail(r, {to_vec(y.lengths()), {}, {},
                 "superdecreasing characteristic is " + std::to_string(chi)});
}

bool almost_superdecreasing_shape(const LengthVector& y)
{
    // y_1 >= y_2 and y_j > y_{j+1} + ... + y_n for every j in [n-1] \ {1}
    if (y.size() >= 2 && y[0] < y[1])
        return false;
    long long suffix = 0;
    for (int j = y.size() - 1; j >= 2; --j) {
        suffix += y[j];
        if (y[j - 1] <= suffix)
            return false;
    }
    return true;
}

void check_e_necc_equality(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto wset = invariance::invariant_solution_set(y, exhaustive(opts.budget));
    const bool fires =
        y.size() - 1 < 63 && wset.size() == (std::uint64_t{1} << (y.size() - 1));
    const bool shape = almost_superdecreasing_shape(y);
    if (!fires) {
        r.vacuous = true;
        if (shape)
            r.details = "converse gap: shape (y_1 >= y_2, tail superdecreasing) holds yet |W| = " +
                        std::to_string(wset.size()) + " < 2^{n-1}";
        return;
    }
    r.inputs_tested = 1;
    if (!shape)
        fail(r, {to_vec(y.lengths()), {}, {},
                 "|W| = 2^{n-1} without the almost-superdecreasing shape"});
}

void check_f_inclusion_bound(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto nd = invariance::enumerate_invariant_nd(y, exhaustive(opts.budget));
    const auto wset = invariance::invariant_solution_set(y, exhaustive(opts.budget));
    int chi = 0;
    for (const PreferenceVector& x : nd)
        chi = std::max(chi, invariance::degree(x));
    for (const PreferenceVector& x : nd) {
        ++r.inputs_tested;
        bool inside = true;
        for (int i = 0; i < x.size() && inside; ++i) {
            if (i < y.size() - chi)
                inside = x[i] == 1;
            else
                inside = std::binary_search(wset.begin(), wset.end(), x[i]);
        }
        if (!inside) {
            fail(r, {to_vec(y.lengths()), to_vec(x.prefs()), {},
                     format_tuple(x.prefs()) + " escapes {1}^{n-chi} x W(y)^chi"});
            return;
        }
    }
    ++r.inputs_tested;
    if (closed_forms::BigInt(nd.size()) > closed_forms::max_nd_invariant_bound(y.size()))
        fail(r, {to_vec(y.lengths()), {}, {},
                 "|PA^inv-up| exceeds binom(2^{n-1} + n - 2, n - 1)"});
}

void check_l_nondecreasing(const LengthVector& y, const CheckOptions&, CheckReport& r)
{
    const int n = y.size();
    const int m = y.total();
    std::vector<long long> caps(static_cast<std::size_t>(n));
    long long prefix = 0;
    for (int i = 0; i < n; ++i) {
        caps[static_cast<std::size_t>(i)] = 1 + prefix;
        prefix += y[i];
    }
    std::vector<int> x(static_cast<std::size_t>(n), 1);
    Occupancy occ;
    do {
        bool fast = true;
        for (int i = 0; i < n && fast; ++i)
            fast = x[static_cast<std::size_t>(i)] <= caps[static_cast<std::size_t>(i)];
        const bool simulated = detail::parks_raw(y.lengths(), x, occ);
        ++r.inputs_tested;
        if (fast != simulated) {
            fail(r, {to_vec(y.lengths()), x, x,
                     "nondecreasing criterion and simulator disagree at " + format_tuple(x)});
            return;
        }
    } while (next_nondecreasing(x, m));
}

void check_l_extend(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const int n = y.size();
    const int m = y.total();
    std::vector<LengthVector> extensions;
    for (int extra = 1; extra <= extension_bound(y, opts); ++extra)
        extensions.push_back(y.append(extra));
    std::vector<int> x(static_cast<std::size_t>(n), 1);
    std::vector<int> ext_prefs(static_cast<std::size_t>(n) + 1);
    Occupancy occ;
    do {
        if (!detail::parks_raw(y.lengths(), x, occ))
            continue;
        std::copy(x.begin(), x.end(), ext_prefs.begin());
        for (const LengthVector& extended : extensions) {
            const int extra = extended[n];
            for (int t = 1; t <= m + extra; ++t) {
                ext_prefs.back() = t;
                const bool expected = t <= m + 1;
                const bool actual = detail::parks_raw(extended.lengths(), ext_prefs, occ);
                ++r.inputs_tested;
                if (expected != actual) {
                    fail(r, {to_vec(extended.lengths()), ext_prefs, ext_prefs,
                             "extension of " + format_tuple(x) + " by preference " +
                                 std::to_string(t) +
                                 (actual ? " parks past the bound" : " fails within the bound")});
                    return;
                }
            }
        }
    } while (next_tuple(x, m));
}

void check_l_replace(const LengthVector& y, const CheckOptions&, CheckReport& r)
{
    const int n = y.size();
    const int m = y.total();
    std::vector<int> x(static_cast<std::size_t>(n), 1);
    std::vector<int> suffix_min(static_cast<std::size_t>(n));
    Occupancy occ;
    do {
        if (!detail::parks_raw(y.lengths(), x, occ))
            continue;
        suffix_min[static_cast<std::size_t>(n - 1)] = x[static_cast<std::size_t>(n - 1)];
        for (int i = n - 2; i >= 0; --i)
            suffix_min[static_cast<std::size_t>(i)] =
                std::min(x[static_cast<std::size_t>(i)], suffix_min[static_cast<std::size_t>(i + 1)]);
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<std::size_t>(i)] != suffix_min[static_cast<std::size_t>(i)])
                continue;
            const int original = x[static_cast<std::size_t>(i)];
            for (int replacement = 1; replacement < original; ++replacement) {
                x[static_cast<std::size_t>(i)] = replacement;
                const bool still_parks = detail::parks_raw(y.lengths(), x, occ);
                ++r.inputs_tested;
                if (!still_parks) {
                    std::vector<int> broken = x;
                    x[static_cast<std::size_t>(i)] = original;
                    fail(r, {to_vec(y.lengths()), broken, broken,
                             "lowering a running-minimum preference to " +
                                 std::to_string(replacement) + " breaks " + format_tuple(x)});
                    return;
                }
            }
            x[static_cast<std::size_t>(i)] = original;
        }
    } while (next_tuple(x, m));
}

void check_l_swap(const LengthVector& y, const CheckOptions&, CheckReport& r)
{
    const int n = y.size();
    const int m = y.total();
    std::vector<int> x(static_cast<std::size_t>(n), 1);
    do {
        int iterations = 0;
        const std::vector<int> b = swap_to_min_prefix(x, &iterations);
        ++r.inputs_tested;

        std::vector<int> sx = x;
        std::vector<int> sb = b;
        std::sort(sx.begin(), sx.end());
        std::sort(sb.begin(), sb.end());
        bool ok = sx == sb && b[0] == sx[0] && iterations <= n;
        for (int i = 1; i < n && ok; ++i) {
            const bool in_s = x[0] > x[static_cast<std::size_t>(i)];
            if (in_s)
                ok = b[static_cast<std::size_t>(i)] >= x[static_cast<std::size_t>(i)];
            else
                ok = b[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(i)];
            if (ok && in_s && b[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(i)]) {
                for (int j = i; j < n && ok; ++j)
                    ok = b[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(j)];
            }
        }
        if (!ok) {
            fail(r, {to_vec(y.lengths()), x, b,
                     "swap algorithm output " + format_tuple(b) + " violates (i)-(iii) for " +
                         format_tuple(x)});
            return;
        }
    } while (next_tuple(x, m));
}

void check_l_remove_max(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    if (y.size() < 2) {
        r.vacuous = true;
        return;
    }
    const LengthVector prefix = y.prefix(y.size() - 1);
    std::uint64_t experiments = 0;
    for (const PreferenceVector& x :
         invariance::enumerate_invariant_nd(y, exhaustive(opts.budget))) {
        ++r.inputs_tested;
        std::vector<int> reduced = invariance::remove_max(to_vec(x.prefs()));
        const bool in_street =
            *std::max_element(reduced.begin(), reduced.end()) <= prefix.total();
        std::vector<int> failing;
        if (!in_street ||
            !invariance::detail::is_invariant_counted(prefix.lengths(), reduced, experiments,
                                                      opts.budget, &failing)) {
            fail(r, {to_vec(prefix.lengths()), std::move(reduced), std::move(failing),
                     "removing the maximum of " + format_tuple(x.prefs()) +
                         " is not invariant for the (n-1)-car prefix"});
            return;
        }
    }
}

void check_l_mod_a(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto cls = closed_forms::classify(y);
    if (!cls) {
        r.vacuous = true;
        return;
    }
    for (const PreferenceVector& x :
         invariance::enumerate_invariant_nd(y, exhaustive(opts.budget))) {
        for (int i = 0; i < x.size(); ++i) {
            ++r.inputs_tested;
            if ((x[i] - 1) % cls->a != 0) {
                fail(r, {to_vec(y.lengths()), to_vec(x.prefs()), {},
                         "entry " + std::to_string(x[i]) + " of invariant " +
                             format_tuple(x.prefs()) + " is not 1 mod " +
                             std::to_string(cls->a)});
                return;
            }
        }
    }
}

void check_l_order_stat(const LengthVector& y, const CheckOptions& opts, CheckReport& r)
{
    const auto cls = closed_forms::classify(y);
    if (!cls) {
        r.vacuous = true;
        return;
    }
    for (const PreferenceVector& x :
         invariance::enumerate_invariant_nd(y, exhaustive(opts.budget))) {
        for (int i = 0; i < x.size(); ++i) {
            ++r.inputs_tested;
            if (static_cast<long long>(x[i]) > 1 + static_cast<long long>(i) * cls->a) {
                fail(r, {to_vec(y.lengths()), to_vec(x.prefs()), {},
                         "order statistic " + std::to_string(i + 1) + " of " +
                             format_tuple(x.prefs()) + " exceeds 1 + (i-1)a"});
                return;
            }
        }
    }
}

}  // namespace

std::string_view to_string(TheoremId id)
{
    for (const NameEntry& entry : kRegistry)
        if (entry.id == id)
            return entry.name;
    throw std::invalid_argument("unknown theorem id");
}

TheoremId theorem_from_string(std::string_view name)
{
    for (const NameEntry& entry : kRegistry)
        if (entry.name == name)
            return entry.id;
    throw std::invalid_argument("unknown theorem \"" + std::string(name) + "\"");
}

const std::vector<TheoremId>& all_theorems()
{
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const NameEntry& entry : kRegistry)
            v.push_back(entry.id);
        return v;
    }();
    return ids;
}

CheckReport check(TheoremId id, const LengthVector& y, const CheckOptions& opts)
{
    CheckReport report;
    report.theorem = id;
    const auto start = std::chrono::steady_clock::now();
    switch (id) {
    case TheoremId::a_necc_min_char: check_a_necc_min_char(y, opts, report); break;
    case TheoremId::b_max_char_iff: check_b_max_char_iff(y, opts, report); break;
    case TheoremId::c_almost_constant: check_c_almost_constant(y, opts, report); break;
    case TheoremId::d_closure: check_d_closure(y, opts, report); break;
    case TheoremId::d_image: check_d_image(y, opts, report); break;
    case TheoremId::d_embedding: check_d_embedding(y, opts, report); break;
    case TheoremId::d_monotonic: check_d_monotonic(y, opts, report); break;
    case TheoremId::e_nonconstant_bound: check_e_nonconstant_bound(y, opts, report); break;
    case TheoremId::e_size_bound: check_e_size_bound(y, opts, report); break;
    case TheoremId::e_superdec_equality: check_e_superdec_equality(y, opts, report); break;
    case TheoremId::e_necc_equality: check_e_necc_equality(y, opts, report); break;
    case TheoremId::f_inclusion_bound: check_f_inclusion_bound(y, opts, report); break;
    case TheoremId::l_nondecreasing: check_l_nondecreasing(y, opts, report); break;
    case TheoremId::l_extend: check_l_extend(y, opts, report); break;
    case TheoremId::l_replace: check_l_replace(y, opts, report); break;
    case TheoremId::l_swap: check_l_swap(y, opts, report); break;
    case TheoremId::l_remove_max: check_l_remove_max(y, opts, report); break;
    case TheoremId::l_mod_a: check_l_mod_a(y, opts, report); break;
    case TheoremId::l_order_stat: check_l_order_stat(y, opts, report); break;
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

CheckReport sweep(TheoremId id, int max_n, int max_entry, const SweepOptions& opts)
{
    if (max_n < 1 || max_entry < 1)
        throw std::invalid_argument("sweep bounds must be positive");
    std::vector<std::vector<int>> vectors;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> y(static_cast<std::size_t>(n), 1);
        do {
            vectors.push_back(y);
        } while (next_tuple(y, max_entry));
    }

    const CheckOptions check_opts{opts.budget, max_entry};
    unsigned workers = opts.workers > 0 ? static_cast<unsigned>(opts.workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(vectors.size()));

    std::vector<CheckReport> results(vectors.size());
    std::vector<std::exception_ptr> errors(vectors.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};

    const auto start = std::chrono::steady_clock::now();
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= vectors.size())
                return;
            if (i > first_failure.load())
                continue;  // a lexicographically earlier witness already exists
            try {
                results[i] = check(id, LengthVector(vectors[i]), check_opts);
                if (!results[i].pass) {
                    std::size_t expected = first_failure.load();
                    while (i < expected &&
                           !first_failure.compare_exchange_weak(expected, i)) {
                    }
                }
            } catch (...) {
                errors[i] = std::current_exception();
                std::size_t expected = first_failure.load();
                while (i < expected && !first_failure.compare_exchange_weak(expected, i)) {
                }
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }

    // Merge in lexicographic order so the verdict and the first witness do
    // not depend on the worker count.
    CheckReport merged;
    merged.theorem = id;
    merged.vacuous = true;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        merged.inputs_tested += results[i].inputs_tested;
        merged.vacuous = merged.vacuous && results[i].vacuous;
        if (merged.details.empty() && !results[i].details.empty())
            merged.details = format_tuple(vectors[i]) + ": " + results[i].details;
        if (!results[i].pass) {
            merged.pass = false;
            merged.witness = results[i].witness;
            break;
        }
    }
    merged.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return merged;
}

std::pair<LengthVector, PreferenceVector> converse_counterexample_minimal_invariance()
{
    LengthVector y({1, 3, 2, 2});
    PreferenceVector x({1, 1, 1, 4}, y);
    if (!invariance::is_invariant(y, x))
        throw std::logic_error("(1,1,1,4) is no longer invariant for (1,3,2,2)");
    if (!(y[0] < std::min({y[1], y[2], y[3]})))
        throw std::logic_error("counterexample lost y_1 < min(rest)");
    if (y[1] == y[0] + y[2] + y[3])
        throw std::logic_error("counterexample lost y_2 != sum of the others");
    return {std::move(y), std::move(x)};
}

std::vector<int> swap_to_min_prefix(std::vector<int> a, int* iterations)
{
    if (a.empty())
        throw std::invalid_argument("swap algorithm requires a nonempty list");
    int swaps = 0;
    for (;;) {
        std::size_t j = 0;
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[0] > a[i])
                j = i;  // last entry smaller than the head
        if (j == 0)
            break;
        std::swap(a[0], a[j]);
        ++swaps;
    }
    if (iterations)
        *iterations = swaps;
    return a;
}

}  // namespace parkinv::theorems
