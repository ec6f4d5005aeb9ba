#include "parkinv/closed_forms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace parkinv::closed_forms {

namespace {

BigInt pow_int(BigInt base, int exp)
{
    BigInt result = 1;
    for (int i = 0; i < exp; ++i)
        result *= base;
    return result;
}

// Nondecreasing tuples whose i-th entry is 1 + (k-1)a with k in
// [min(i, kcap)], emitted in lexicographic order.
void emit_tuples(int n, int a, int kcap, int pos, int min_k, std::vector<int>& current,
                 std::vector<std::vector<int>>& out)
{
    const int limit = std::min(pos + 1, kcap);
    for (int k = min_k; k <= limit; ++k) {
        current[static_cast<std::size_t>(pos)] = 1 + (k - 1) * a;
        if (pos + 1 == n)
            out.push_back(current);
        else
            emit_tuples(n, a, kcap, pos + 1, k, current, out);
    }
}

}  // namespace

LengthVector AlmostConstantClass::length_vector() const
{
    std::vector<int> lengths(static_cast<std::size_t>(n), a);
    lengths.front() = b;
    return LengthVector(std::move(lengths));
}

std::optional<AlmostConstantClass> classify(const LengthVector& y)
{
    if (y.size() < 2)
        return std::nullopt;
    const int a = y[1];
    for (int i = 2; i < y.size(); ++i)
        if (y[i] != a)
            return std::nullopt;
    AlmostConstantClass cls{y[0], a, y.size(), Regime::divides};
    if (cls.b % cls.a == 0)
        cls.regime = Regime::divides;
    else if (static_cast<long long>(cls.b) > static_cast<long long>(cls.n - 1) * cls.a)
        cls.regime = Regime::large;
    else
        cls.regime = Regime::irregular;
    return cls;
}

std::vector<PreferenceVector> generate_invariant_nd_closed(const AlmostConstantClass& cls)
{
    const int kcap = cls.regime == Regime::irregular ? cls.quotient() + 1 : cls.n;
    std::vector<std::vector<int>> tuples;
    std::vector<int> current(static_cast<std::size_t>(cls.n));
    emit_tuples(cls.n, cls.a, kcap, 0, 1, current, tuples);

    const LengthVector y = cls.length_vector();
    std::vector<PreferenceVector> out;
    out.reserve(tuples.size());
    for (std::vector<int>& tuple : tuples)
        out.emplace_back(std::move(tuple), y);
    return out;
}

bool is_max_characteristic(const LengthVector& y)
{
    if (y.size() < 2)
        throw std::invalid_argument("max characteristic test requires at least two cars");
    for (int i = 2; i < y.size(); ++i)
        if (y[i] != y[1])
            return false;
    return y[0] >= y[1];
}

BigInt count_invariant_full(const AlmostConstantClass& cls)
{
    const int n = cls.n;
    if (cls.regime != Regime::irregular)
        return pow_int(n + 1, n - 1);
    // sum_{j=0}^{n-q-1} (-1)^j C(n,j) (n-q-j)^j (n-j+1)^{n-j-1}, q = floor(b/a)
    const int q = cls.quotient();
    BigInt total = 0;
    for (int j = 0; j <= n - q - 1; ++j) {
        BigInt term = binomial(n, j) * pow_int(n - q - j, j) * pow_int(n - j + 1, n - j - 1);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

BigInt count_invariant_nd(const AlmostConstantClass& cls)
{
    const int n = cls.n;
    if (cls.regime != Regime::irregular)
        return binomial(2LL * n, n) / (n + 1);  // Catalan number C_n
    const int q = cls.quotient();
    const BigInt numerator = BigInt(n - q + 1) * binomial(n + q, q);
    if (numerator % (n + 1) != 0)
        throw std::logic_error("nondecreasing count formula is not integral");
    return numerator / (n + 1);
}

BigInt pitman_stanley_count(int n, long long a, long long b, long long c, int k)
{
    if (n < 2 || k < 1 || k > n - 1 || a < 1 || b < 0 || c < 0)
        throw std::invalid_argument("malformed difference shape (a, b^{n-k-1}, c, 0^{k-1})");
    BigInt total = 0;
    for (int j = 0; j <= k; ++j) {
        const BigInt inner = BigInt(c) - BigInt(k + 1 - j) * b;
        const BigInt outer = BigInt(a) + BigInt(n - j) * b;
        total += binomial(n, j) * pow_int(inner, j) * pow_int(outer, n - j - 1);
    }
    return BigInt(a) * total;
}

BigInt catalan_triangle(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("catalan triangle requires 0 <= k <= n");
    const BigInt numerator = BigInt(n - k + 1) * binomial(n + k, k);
    if (numerator % (n + 1) != 0)
        throw std::logic_error("catalan triangle closed form is not integral");
    return numerator / (n + 1);
}

BigInt binomial(long long n, long long k)
{
    return binomial(BigInt(n), k);
}

BigInt binomial(const BigInt& n, long long k)
{
    if (k < 0 || n < 0 || n < k)
        return 0;
    if (BigInt(k) * 2 > n && n < (std::numeric_limits<long long>::max)())
        k = static_cast<long long>(n) - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

UParkingVector::UParkingVector(std::vector<int> entries) : u_(std::move(entries))
{
    if (u_.empty() || u_.front() < 1 || !std::is_sorted(u_.begin(), u_.end()))
        throw std::invalid_argument("u must be nondecreasing with positive entries");
}

std::vector<int> UParkingVector::delta() const
{
    std::vector<int> d(u_.size());
    d[0] = u_[0];
    for (std::size_t i = 1; i < u_.size(); ++i)
        d[i] = u_[i] - u_[i - 1];
    return d;
}

UParkingVector u_vector_for(const AlmostConstantClass& cls)
{
    const int q = cls.quotient();
    std::vector<int> u(static_cast<std::size_t>(cls.n));
    for (int i = 0; i < cls.n; ++i)
        u[static_cast<std::size_t>(i)] = std::min(i + 1, q + 1);
    return UParkingVector(std::move(u));
}

std::vector<int> to_u_parking(const AlmostConstantClass& cls, std::span<const int> x)
{
    if (cls.regime != Regime::irregular)
        throw std::invalid_argument("the u-parking bijection applies to the irregular regime");
    std::vector<int> p;
    p.reserve(x.size());
    for (int xi : x) {
        if ((xi - 1) % cls.a != 0)
            throw std::domain_error("entry " + std::to_string(xi) +
                                    " is not congruent to 1 mod " + std::to_string(cls.a));
        p.push_back(1 + (xi - 1) / cls.a);
    }
    return p;
}

std::vector<int> from_u_parking(const AlmostConstantClass& cls, std::span<const int> p)
{
    if (cls.regime != Regime::irregular)
        throw std::invalid_argument("the u-parking bijection applies to the irregular regime");
    std::vector<int> x;
    x.reserve(p.size());
    for (int pi : p) {
        if (pi < 1)
            throw std::invalid_argument("u-parking entries are positive");
        x.push_back(1 + (pi - 1) * cls.a);
    }
    return x;
}

SuperdecreasingCounts superdecreasing_counts(const LengthVector& y)
{
    if (!y.is_superdecreasing())
        throw std::invalid_argument("length vector is not superdecreasing");
    const int n = y.size();
    const BigInt half_space = pow_int(2, n - 1);
    return {half_space * n - n + 1, half_space};
}

BigInt max_nd_invariant_bound(int n)
{
    if (n < 1)
        throw std::invalid_argument("car count must be positive");
    return binomial(pow_int(2, n - 1) + n - 2, n - 1);
}

std::optional<ClosedCounts> closed_form_counts(const LengthVector& y)
{
    if (y.size() == 1)
        return ClosedCounts{1, 1, "constant"};
    if (std::optional<AlmostConstantClass> cls = classify(y)) {
        std::string provenance;
        if (cls->b == cls->a)
            provenance = "constant";
        else if (cls->regime == Regime::divides)
            provenance = "almost-constant-divides";
        else if (cls->regime == Regime::large)
            provenance = "almost-constant-large";
        else
            provenance = "almost-constant-irregular";
        return ClosedCounts{count_invariant_full(*cls), count_invariant_nd(*cls),
                            std::move(provenance)};
    }
    if (y.is_superdecreasing()) {
        SuperdecreasingCounts counts = superdecreasing_counts(y);
        return ClosedCounts{std::move(counts.full), std::move(counts.nd), "superdecreasing"};
    }
    return std::nullopt;
}

}  // namespace parkinv::closed_forms
