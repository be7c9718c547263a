#pragma once

#include <limits>
#include <map>
#include <vector>

#include "hlab/partition.hpp"

namespace hlab {

/// Thrown when a requested coefficient lies above a truncation order.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated Laurent polynomial in hbar on an even-step exponent grid.
/// Exponents above `trunc` are unknown (not zero); exponents below
/// `min_exp` are zero. All stored exponents share the parity of min_exp.
class LaurentGenusSeries {
public:
    static constexpr long kTruncInf = std::numeric_limits<long>::max() / 4;

    LaurentGenusSeries() = default;  // exact zero, trunc = +inf
    LaurentGenusSeries(long min_exp, std::vector<Rat> coeffs, long trunc);

    /// Monomial c * hbar^exp.
    static LaurentGenusSeries monomial(const Rat& c, long exp, long trunc = kTruncInf);
    static LaurentGenusSeries one() { return monomial(1, 0); }

    bool is_zero() const;
    bool known_zero_everywhere() const { return coeffs_.empty() && trunc_ == kTruncInf; }
    long min_exp() const { return min_exp_; }
    long trunc() const { return trunc_; }
    long max_stored_exp() const { return min_exp_ + 2 * (static_cast<long>(coeffs_.size()) - 1); }

    /// Coefficient at exponent `exp`. Throws TruncationError above trunc;
    /// exponents of the wrong parity or below min_exp report zero.
    const Rat& coeff(long exp) const;

    /// Set/accumulate a coefficient (used during construction).
    void add_coeff(long exp, const Rat& c);
    void set_trunc(long trunc);

    LaurentGenusSeries& operator+=(const LaurentGenusSeries& o);
    LaurentGenusSeries& operator-=(const LaurentGenusSeries& o);
    friend LaurentGenusSeries operator+(LaurentGenusSeries a, const LaurentGenusSeries& b) {
        a += b;
        return a;
    }
    friend LaurentGenusSeries operator-(LaurentGenusSeries a, const LaurentGenusSeries& b) {
        a -= b;
        return a;
    }
    friend LaurentGenusSeries operator*(const LaurentGenusSeries& a,
                                        const LaurentGenusSeries& b);
    LaurentGenusSeries& operator*=(const LaurentGenusSeries& o) {
        *this = *this * o;
        return *this;
    }
    LaurentGenusSeries& operator*=(const Rat& c);
    LaurentGenusSeries operator-() const;

    friend bool operator==(const LaurentGenusSeries& a, const LaurentGenusSeries& b);

private:
    void normalize();

    long min_exp_ = 0;
    std::vector<Rat> coeffs_;  // step 2 from min_exp_
    long trunc_ = kTruncInf;
};

/// Key of a PairCoefficient term. Mode 0 uses the empty pair; mode 1
/// carries alpha only (beta = (1^|alpha|) implicit); mode 2 carries both.
struct PairKey {
    Partition alpha, beta;
    friend bool operator==(const PairKey&, const PairKey&) = default;
    friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// Element of the coefficient algebra for the z-exponential series:
/// finite map (alpha, beta) -> LaurentGenusSeries, multiplication by
/// concatenation of partition pairs with hbar-series product.
class PairCoefficient {
public:
    explicit PairCoefficient(int mode = 2) : mode_(mode) {}
    static PairCoefficient zero(int mode) { return PairCoefficient(mode); }
    static PairCoefficient one(int mode);

    int mode() const { return mode_; }
    const std::map<PairKey, LaurentGenusSeries>& terms() const { return terms_; }
    bool is_zero() const;
    bool is_one() const;

    /// Series at a key; absent keys are exact zero.
    const LaurentGenusSeries& at(const PairKey& key) const;
    void add_term(const PairKey& key, const LaurentGenusSeries& s);

    PairCoefficient& operator+=(const PairCoefficient& o);
    PairCoefficient& operator-=(const PairCoefficient& o);
    friend PairCoefficient operator+(PairCoefficient a, const PairCoefficient& b) {
        a += b;
        return a;
    }
    friend PairCoefficient operator-(PairCoefficient a, const PairCoefficient& b) {
        a -= b;
        return a;
    }
    friend PairCoefficient operator*(const PairCoefficient& a, const PairCoefficient& b);
    PairCoefficient& operator*=(const Rat& c);
    PairCoefficient operator-() const;
    friend bool operator==(const PairCoefficient& a, const PairCoefficient& b);

private:
    int mode_;
    std::map<PairKey, LaurentGenusSeries> terms_;
};

/// Algebra traits used by ExpSeries. Specialized for Rat,
/// LaurentGenusSeries and PairCoefficient.
template <class A>
struct AlgebraTraits;

template <>
struct AlgebraTraits<Rat> {
    static Rat zero(const Rat&) { return 0; }
    static Rat one(const Rat&) { return 1; }
    static bool is_zero(const Rat& a) { return a == 0; }
    static bool is_one(const Rat& a) { return a == 1; }
};

template <>
struct AlgebraTraits<LaurentGenusSeries> {
    static LaurentGenusSeries zero(const LaurentGenusSeries&) { return {}; }
    static LaurentGenusSeries one(const LaurentGenusSeries&) {
        return LaurentGenusSeries::one();
    }
    static bool is_zero(const LaurentGenusSeries& a) { return a.is_zero(); }
    static bool is_one(const LaurentGenusSeries& a) { return a == one(a); }
};

template <>
struct AlgebraTraits<PairCoefficient> {
    static PairCoefficient zero(const PairCoefficient& model) {
        return PairCoefficient::zero(model.mode());
    }
    static PairCoefficient one(const PairCoefficient& model) {
        return PairCoefficient::one(model.mode());
    }
    static bool is_zero(const PairCoefficient& a) { return a.is_zero(); }
    static bool is_one(const PairCoefficient& a) { return a.is_one(); }
};

/// Exponential power series 1 + sum_{d>=1} z^d/d! c_d over a commutative
/// coefficient algebra A; coefficients stored against z^d/d!.
template <class A>
class ExpSeries {
public:
    explicit ExpSeries(std::vector<A> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("ExpSeries needs a degree-0 term");
    }
    int dmax() const { return static_cast<int>(c_.size()) - 1; }
    const A& operator[](int d) const { return c_.at(d); }
    A& operator[](int d) { return c_.at(d); }
    const std::vector<A>& coeffs() const { return c_; }

private:
    std::vector<A> c_;
};

/// Binomial convolution: (S*T)^d = sum_c binom(d,c) S^c T^{d-c}.
template <class A>
ExpSeries<A> mul(const ExpSeries<A>& s, const ExpSeries<A>& t) {
    const int dmax = std::min(s.dmax(), t.dmax());
    std::vector<A> out;
    out.reserve(dmax + 1);
    for (int d = 0; d <= dmax; ++d) {
        A acc = AlgebraTraits<A>::zero(s[0]);
        for (int c = 0; c <= d; ++c) {
            A term = s[c] * t[d - c];
            term *= Rat(binomial(d, c));
            acc += term;
        }
        out.push_back(std::move(acc));
    }
    return ExpSeries<A>(std::move(out));
}

/// Exponential-formula inversion: F^d = c_d - sum_{c<d} binom(d-1,c-1) F^c c_{d-c}.
/// Requires unit constant term; the result has zero constant term.
template <class A>
ExpSeries<A> log(const ExpSeries<A>& s) {
    if (!AlgebraTraits<A>::is_one(s[0]))
        throw std::invalid_argument("log: constant term must be the unit");
    std::vector<A> f;
    f.reserve(s.dmax() + 1);
    f.push_back(AlgebraTraits<A>::zero(s[0]));
    for (int d = 1; d <= s.dmax(); ++d) {
        A acc = s[d];
        for (int c = 1; c < d; ++c) {
            A term = f[c] * s[d - c];
            term *= Rat(binomial(d - 1, c - 1));
            acc -= term;
        }
        f.push_back(std::move(acc));
    }
    return ExpSeries<A>(std::move(f));
}

/// Functional inverse of log: E^d = sum_{c>=1} binom(d-1,c-1) F^c E^{d-c}.
/// Requires zero constant term; the result has unit constant term.
template <class A>
ExpSeries<A> exp(const ExpSeries<A>& f) {
    if (!AlgebraTraits<A>::is_zero(f[0]))
        throw std::invalid_argument("exp: constant term must be zero");
    std::vector<A> e;
    e.reserve(f.dmax() + 1);
    e.push_back(AlgebraTraits<A>::one(f[0]));
    for (int d = 1; d <= f.dmax(); ++d) {
        A acc = AlgebraTraits<A>::zero(f[0]);
        for (int c = 1; c <= d; ++c) {
            A term = f[c] * e[d - c];
            term *= Rat(binomial(d - 1, c - 1));
            acc += term;
        }
        e.push_back(std::move(acc));
    }
    return ExpSeries<A>(std::move(e));
}

}  // namespace hlab
