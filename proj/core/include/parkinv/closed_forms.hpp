#pragma once

#include "parkinv/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

// Closed-form generators and counting formulas for the characterized
// families of length vectors: constant, almost constant (b, a^{n-1}), and
// superdecreasing.  Everything here is exact integer arithmetic.

namespace parkinv::closed_forms {

using BigInt = boost::multiprecision::cpp_int;

enum class Regime {
    divides,    // a | b
    large,      // b > (n-1)a  (and a does not divide b)
    irregular,  // a does not divide b and b < (n-1)a
};

// A length vector of the form (b, a^{n-1}) with n >= 2.  When a | b and
// b > (n-1)a both hold, classification prefers `divides`; the two regimes
// generate identical sets.
struct AlmostConstantClass {
    int b = 0;  // first car length
    int a = 0;  // common length of the remaining cars
    int n = 0;  // car count, >= 2
    Regime regime = Regime::divides;

    int quotient() const { return b / a; }  // floor(b/a)
    LengthVector length_vector() const;
};

std::optional<AlmostConstantClass> classify(const LengthVector& y);

// PA^inv-up for an almost constant vector, straight from the order-statistic
// conditions, lexicographically sorted.  Entries are 1 + (k-1)a with k
// ranging over [i] per position (capped at floor(b/a) + 1 in the irregular
// regime).
std::vector<PreferenceVector> generate_invariant_nd_closed(const AlmostConstantClass& cls);

// True iff the characteristic of y is n - 1, i.e. y_1 >= y_2 and
// y_2 = y_3 = ... = y_n.  Requires n >= 2.
bool is_max_characteristic(const LengthVector& y);

// |PA^inv| for an almost constant vector: (n+1)^{n-1} in the divides/large
// regimes, the signed Pitman-Stanley specialization otherwise.
BigInt count_invariant_full(const AlmostConstantClass& cls);

// |PA^inv-up|: the Catalan number C_n in the divides/large regimes,
// (n - q + 1)/(n + 1) * C(n + q, q) with q = floor(b/a) otherwise.
BigInt count_invariant_nd(const AlmostConstantClass& cls);

// |PF_n(u)| for u with successive differences (a, b^{n-k-1}, c, 0^{k-1}):
//   a * sum_{j=0}^{k} C(n,j) (c - (k+1-j)b)^j (a + (n-j)b)^{n-j-1}
// Signed intermediates are expected; the result is a nonnegative integer.
BigInt pitman_stanley_count(int n, long long a, long long b, long long c, int k);

// Ballot numbers f(n, k) = (n-k+1)/(n+1) * C(n+k, k); requires 0 <= k <= n.
BigInt catalan_triangle(int n, int k);

// Exact binomial coefficients.
BigInt binomial(long long n, long long k);
BigInt binomial(const BigInt& n, long long k);

// A nondecreasing vector u with its successive differences Delta(u).
struct UParkingVector {
    explicit UParkingVector(std::vector<int> entries);

    const std::vector<int>& u() const { return u_; }
    std::vector<int> delta() const;

private:
    std::vector<int> u_;
};

// The u vector (1, 2, ..., q, (q+1)^{n-q}) that puts PA^inv of an irregular
// almost constant vector in bijection with PF_n(u).
UParkingVector u_vector_for(const AlmostConstantClass& cls);

// The bijection and its inverse for the irregular regime:
//   phi(x)_i = 1 + (x_i - 1)/a     psi(p)_i = 1 + (p_i - 1) a
// A non-integral division in phi means x violates the mod-a condition and
// raises std::domain_error.
std::vector<int> to_u_parking(const AlmostConstantClass& cls, std::span<const int> x);
std::vector<int> from_u_parking(const AlmostConstantClass& cls, std::span<const int> p);

struct SuperdecreasingCounts {
    BigInt full;  // 2^{n-1} n - n + 1
    BigInt nd;    // 2^{n-1}
};

// Counts for a superdecreasing vector; throws if y is not superdecreasing.
SuperdecreasingCounts superdecreasing_counts(const LengthVector& y);

// Upper bound C(2^{n-1} + n - 2, n - 1) on |PA^inv-up| for any y of n cars.
BigInt max_nd_invariant_bound(int n);

// Closed-form counts for y when some characterized family applies, with the
// formula that produced them.
struct ClosedCounts {
    BigInt full;
    BigInt nd;
    std::string provenance;  // constant | almost-constant-divides |
                             // almost-constant-large | almost-constant-irregular |
                             // superdecreasing
};

std::optional<ClosedCounts> closed_form_counts(const LengthVector& y);

}  // namespace parkinv::closed_forms
