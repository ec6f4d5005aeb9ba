#include "parkinv/core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace parkinv {

LengthVector::LengthVector(std::vector<int> lengths) : lengths_(std::move(lengths))
{
    if (lengths_.empty())
        throw std::invalid_argument("length vector must have at least one car");
    long long sum = 0;
    for (int len : lengths_) {
        if (len < 1)
            throw std::invalid_argument("car lengths must be positive");
        sum += len;
    }
    if (sum > std::numeric_limits<int>::max())
        throw std::invalid_argument("total street length overflows");
    total_ = static_cast<int>(sum);
}

LengthVector LengthVector::prefix(int k) const
{
    if (k < 1 || k > size())
        throw std::invalid_argument("prefix length out of range");
    return LengthVector(std::vector<int>(lengths_.begin(), lengths_.begin() + k));
}

LengthVector LengthVector::append(int extra) const
{
    std::vector<int> ext = lengths_;
    ext.push_back(extra);
    return LengthVector(std::move(ext));
}

bool LengthVector::is_constant() const
{
    return std::all_of(lengths_.begin(), lengths_.end(),
                       [&](int len) { return len == lengths_.front(); });
}

bool LengthVector::is_superdecreasing() const
{
    // y_j > sum_{i>j} y_i for every j < n.
    long long suffix = 0;
    for (int j = size() - 1; j >= 1; --j) {
        suffix += lengths_[static_cast<std::size_t>(j)];
        if (lengths_[static_cast<std::size_t>(j - 1)] <= suffix)
            return false;
    }
    return true;
}

int LengthVector::max_entry() const
{
    return *std::max_element(lengths_.begin(), lengths_.end());
}

PreferenceVector::PreferenceVector(std::vector<int> prefs, const LengthVector& context)
    : prefs_(std::move(prefs))
{
    if (static_cast<int>(prefs_.size()) != context.size())
        throw std::invalid_argument("preference count must match car count");
    for (int p : prefs_) {
        if (p < 1 || p > context.total())
            throw std::invalid_argument("preference " + std::to_string(p) +
                                        " outside street [1, " +
                                        std::to_string(context.total()) + "]");
    }
}

bool PreferenceVector::is_nondecreasing() const
{
    return std::is_sorted(prefs_.begin(), prefs_.end());
}

void Occupancy::reset(int spots)
{
    spots_ = spots;
    occupied_ = 0;
    taken_.assign(static_cast<std::size_t>(spots) + 1, 0);
}

bool Occupancy::fits(int start, int len) const
{
    if (start < 1 || start + len - 1 > spots_)
        return false;
    for (int s = start; s < start + len; ++s)
        if (taken(s))
            return false;
    return true;
}

void Occupancy::place(int start, int len)
{
    for (int s = start; s < start + len; ++s)
        taken_[static_cast<std::size_t>(s)] = 1;
    occupied_ += len;
}

int Occupancy::first_fit(int from, int len) const
{
    int s = std::max(from, 1);
    while (s + len - 1 <= spots_) {
        // Scan the window right to left so a hit skips the whole block.
        int blocked = 0;
        for (int t = s + len - 1; t >= s; --t) {
            if (taken(t)) {
                blocked = t;
                break;
            }
        }
        if (blocked == 0)
            return s;
        s = blocked + 1;
    }
    return 0;
}

ParkingOutcome ParkingOutcome::success(std::vector<int> starts)
{
    ParkingOutcome out;
    out.starts_ = std::move(starts);
    return out;
}

ParkingOutcome ParkingOutcome::failure(int car)
{
    ParkingOutcome out;
    out.failed_car_ = car;
    return out;
}

int detail::park_raw(std::span<const int> lengths, std::span<const int> prefs, Occupancy& occ,
                     std::vector<int>* starts)
{
    int total = 0;
    for (int len : lengths)
        total += len;
    occ.reset(total);
    if (starts) {
        starts->clear();
        starts->reserve(lengths.size());
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const int s = occ.first_fit(prefs[i], lengths[i]);
        if (s == 0)
            return static_cast<int>(i) + 1;
        occ.place(s, lengths[i]);
        if (starts)
            starts->push_back(s);
    }
    return 0;
}

ParkingOutcome park(const LengthVector& y, const PreferenceVector& x)
{
    Occupancy occ;
    std::vector<int> starts;
    const int failed = detail::park_raw(y.lengths(), x.prefs(), occ, &starts);
    if (failed != 0)
        return ParkingOutcome::failure(failed);
    return ParkingOutcome::success(std::move(starts));
}

bool is_parking_assortment(const LengthVector& y, const PreferenceVector& x)
{
    Occupancy occ;
    return detail::parks_raw(y.lengths(), x.prefs(), occ);
}

bool nondecreasing_pa_check(const LengthVector& y, const PreferenceVector& x)
{
    if (!x.is_nondecreasing())
        throw std::invalid_argument("nondecreasing_pa_check requires nondecreasing preferences");
    long long prefix = 0;
    for (int i = 0; i < y.size(); ++i) {
        if (x[i] > 1 + prefix)
            return false;
        prefix += y[i];
    }
    return true;
}

PreferenceVector sort_prefs(const PreferenceVector& x)
{
    std::vector<int> sorted(x.prefs().begin(), x.prefs().end());
    std::sort(sorted.begin(), sorted.end());
    PreferenceVector out = x;
    out.prefs_ = std::move(sorted);
    return out;
}

}  // namespace parkinv
