#pragma once

#include <compare>
#include <span>
#include <vector>

// Parking experiment for cars of arbitrary lengths on a one-way street.
//
// A street has m spots numbered 1..m, where m is the total length of all
// cars.  Car i (length y_i) drives to its preferred spot x_i and takes the
// first block of y_i contiguous free spots starting at or after x_i; it
// never backs up.  A preference tuple under which every car parks is a
// parking assortment.

namespace parkinv {

// Car lengths y_1..y_n.  Entries are validated at construction; operations
// assume a valid vector.
class LengthVector {
public:
    explicit LengthVector(std::vector<int> lengths);

    int size() const { return static_cast<int>(lengths_.size()); }
    int total() const { return total_; }  // m, the number of spots
    int operator[](int i) const { return lengths_[static_cast<std::size_t>(i)]; }
    std::span<const int> lengths() const { return lengths_; }

    // First k cars, 1 <= k <= n.
    LengthVector prefix(int k) const;
    // Same cars plus one more of the given length.
    LengthVector append(int extra) const;

    bool is_constant() const;
    // Every entry exceeds the sum of all later entries.
    bool is_superdecreasing() const;
    int max_entry() const;

    friend bool operator==(const LengthVector&, const LengthVector&) = default;

private:
    std::vector<int> lengths_;
    int total_ = 0;
};

// Spot preferences x_1..x_n, validated against the length vector they are
// evaluated with (each entry in [1, m], one per car).
class PreferenceVector {
public:
    PreferenceVector(std::vector<int> prefs, const LengthVector& context);

    int size() const { return static_cast<int>(prefs_.size()); }
    int operator[](int i) const { return prefs_[static_cast<std::size_t>(i)]; }
    std::span<const int> prefs() const { return prefs_; }
    bool is_nondecreasing() const;

    friend bool operator==(const PreferenceVector&, const PreferenceVector&) = default;
    friend std::strong_ordering operator<=>(const PreferenceVector& a, const PreferenceVector& b)
    {
        return a.prefs_ <=> b.prefs_;
    }
    friend PreferenceVector sort_prefs(const PreferenceVector&);

private:
    std::vector<int> prefs_;
};

// Dense per-spot occupancy of the street.  Each parked car covers one
// contiguous interval of spots.
class Occupancy {
public:
    Occupancy() = default;
    explicit Occupancy(int spots) { reset(spots); }

    void reset(int spots);
    int spots() const { return spots_; }
    bool taken(int spot) const { return taken_[static_cast<std::size_t>(spot)] != 0; }
    int occupied_count() const { return occupied_; }

    bool fits(int start, int len) const;
    void place(int start, int len);
    // Smallest s >= from such that [s, s+len-1] lies in the street and is
    // free; 0 if none exists.
    int first_fit(int from, int len) const;

private:
    std::vector<char> taken_;  // index 0 unused; spots are 1-based
    int spots_ = 0;
    int occupied_ = 0;
};

// Result of the parking experiment: start spots s_1..s_n on success
// (car i covers [s_i, s_i + y_i - 1]), or the 1-based index of the first
// car that could not park.
class ParkingOutcome {
public:
    static ParkingOutcome success(std::vector<int> starts);
    static ParkingOutcome failure(int car);

    bool parked() const { return failed_car_ == 0; }
    const std::vector<int>& starts() const { return starts_; }
    int failed_car() const { return failed_car_; }

private:
    std::vector<int> starts_;
    int failed_car_ = 0;
};

// Runs the parking experiment for cars y under preferences x.
ParkingOutcome park(const LengthVector& y, const PreferenceVector& x);

// True iff every car parks, i.e. park(y, x) succeeds.
bool is_parking_assortment(const LengthVector& y, const PreferenceVector& x);

// Fast membership test for nondecreasing x: succeeds iff
// x_i <= 1 + y_1 + ... + y_{i-1} for every i.  Throws if x is not
// nondecreasing.
bool nondecreasing_pa_check(const LengthVector& y, const PreferenceVector& x);

// Nondecreasing rearrangement of the entries of x.
PreferenceVector sort_prefs(const PreferenceVector& x);

namespace detail {

// Allocation-free simulator core for enumeration loops.  Returns 0 when all
// cars park, otherwise the 1-based index of the first car that fails.  The
// occupancy buffer is reset inside; starts (when given) receives the start
// spot of each parked car.
int park_raw(std::span<const int> lengths, std::span<const int> prefs, Occupancy& occ,
             std::vector<int>* starts = nullptr);

inline bool parks_raw(std::span<const int> lengths, std::span<const int> prefs, Occupancy& occ)
{
    return park_raw(lengths, prefs, occ) == 0;
}

}  // namespace detail

}  // namespace parkinv
