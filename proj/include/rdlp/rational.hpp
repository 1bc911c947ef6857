#ifndef RDLP_RATIONAL_HPP
#define RDLP_RATIONAL_HPP

// Exact rational arithmetic for the LP solver. Values that fit in signed
// 64-bit numerator/denominator stay on a fast path; anything larger is
// promoted to a heap-allocated big integer pair. All results are kept in
// canonical form (den > 0, gcd(num, den) = 1).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdlp {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Failures inside a solver run (as opposed to input validation).
struct SolverError : Error {
    explicit SolverError(const std::string& what) : Error(what) {}
};

namespace detail {

using u128 = unsigned __int128;
using i128 = __int128;

// Sign-magnitude big integer, base 2^32 little-endian limbs.
class BigInt {
public:
    BigInt() = default;

    explicit BigInt(std::int64_t v)
    {
        if (v == 0) return;
        sign_ = v > 0 ? 1 : -1;
        u128 mag = v > 0 ? static_cast<u128>(v) : static_cast<u128>(-(v + 1)) + 1;
        append_u128(mag);
    }

    static BigInt from_u128(u128 mag, int sign)
    {
        BigInt r;
        if (mag == 0) return r;
        r.sign_ = sign;
        r.append_u128(mag);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    void negate()
    {
        sign_ = -sign_;
    }

    bool fits_i64() const
    {
        if (sign_ == 0) return true;
        if (limbs_.size() > 2) return false;
        u128 mag = magnitude_u128();
        if (sign_ > 0) return mag <= static_cast<u128>(INT64_MAX);
        return mag <= static_cast<u128>(INT64_MAX) + 1;
    }

    std::int64_t to_i64() const
    {
        u128 mag = magnitude_u128();
        if (sign_ >= 0) return static_cast<std::int64_t>(mag);
        if (mag == static_cast<u128>(INT64_MAX) + 1) return INT64_MIN;
        return -static_cast<std::int64_t>(mag);
    }

    double to_double() const
    {
        double acc = 0;
        for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
            acc = acc * 4294967296.0 + static_cast<double>(*it);
        return sign_ < 0 ? -acc : acc;
    }

    static int cmp_mag(const BigInt& a, const BigInt& b)
    {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a, b);
        return a.sign_ >= 0 ? c : -c;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a, b);
            if (c == 0) return r;
            const BigInt& big = c > 0 ? a : b;
            const BigInt& small = c > 0 ? b : a;
            r.limbs_ = sub_mag(big.limbs_, small.limbs_);
            r.sign_ = big.sign_;
            r.trim();
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b)
    {
        BigInt nb = b;
        nb.negate();
        return a + nb;
    }

    friend BigInt operator*(const BigInt& a, const BigInt& b)
    {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t prod = ai * static_cast<std::uint64_t>(b.limbs_[j]);
                std::uint64_t cur = static_cast<std::uint64_t>(r.limbs_[i + j]) + (prod & 0xffffffffull) + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
                carry = (prod >> 32) + (cur >> 32);
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = static_cast<std::uint64_t>(r.limbs_[k]) + (carry & 0xffffffffull);
                r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
                carry = (carry >> 32) + (cur >> 32);
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Knuth algorithm D. Quotient truncates toward zero; remainder carries
    // the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
    {
        if (b.sign_ == 0) throw Error("BigInt: division by zero");
        int c = cmp_mag(a, b);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.limbs_.size() == 1) {
            divmod_small(a, b.limbs_[0], q, r);
            q.sign_ = q.is_zero() ? 0 : a.sign_ * b.sign_;
            r.sign_ = r.is_zero() ? 0 : a.sign_;
            return;
        }
        // Normalize so the divisor's top limb has its high bit set.
        int shift = 0;
        std::uint32_t top = b.limbs_.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        std::vector<std::uint32_t> u = shl_mag(a.limbs_, shift);
        std::vector<std::uint32_t> v = shl_mag(b.limbs_, shift);
        u.push_back(0);
        std::size_t n = v.size(), m = u.size() - n - 1;
        std::vector<std::uint32_t> quo(m + 1, 0);
        const std::uint64_t base = 0x100000000ull;
        for (std::size_t j = m + 1; j-- > 0;) {
            u128 num = (static_cast<u128>(u[j + n]) << 32) + u[j + n - 1];
            std::uint64_t qhat = static_cast<std::uint64_t>(num / v[n - 1]);
            std::uint64_t rhat = static_cast<std::uint64_t>(num % v[n - 1]);
            while (qhat >= base ||
                   static_cast<u128>(qhat) * v[n - 2] > (static_cast<u128>(rhat) << 32) + u[j + n - 2]) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // Multiply-subtract qhat * v from u[j .. j+n].
            i128 borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                i128 t = static_cast<i128>(u[i + j]) - static_cast<i128>(p & 0xffffffffull) + borrow;
                u[i + j] = static_cast<std::uint32_t>(t & 0xffffffff);
                borrow = t >> 32;
            }
            i128 t = static_cast<i128>(u[j + n]) - static_cast<i128>(carry) + borrow;
            u[j + n] = static_cast<std::uint32_t>(t & 0xffffffff);
            if (t < 0) {
                // qhat was one too large; add back.
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffull);
                    c2 = s >> 32;
                }
                u[j + n] = static_cast<std::uint32_t>(u[j + n] + c2);
            }
            quo[j] = static_cast<std::uint32_t>(qhat);
        }
        q = BigInt();
        q.limbs_ = std::move(quo);
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        u.resize(n);
        r = BigInt();
        r.limbs_ = shr_mag(u, shift);
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    static BigInt gcd(BigInt a, BigInt b)
    {
        a.sign_ = a.is_zero() ? 0 : 1;
        b.sign_ = b.is_zero() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string to_string() const
    {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> chunks;
        BigInt cur = *this;
        cur.sign_ = 1;
        BigInt q, r;
        while (!cur.is_zero()) {
            divmod_small(cur, 1000000000u, q, r);
            chunks.push_back(r.limbs_.empty() ? 0u : r.limbs_[0]);
            cur = q;
            cur.sign_ = cur.limbs_.empty() ? 0 : 1;
        }
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void append_u128(u128 mag)
    {
        while (mag) {
            limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
            mag >>= 32;
        }
    }

    u128 magnitude_u128() const
    {
        u128 mag = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            mag = (mag << 32) | limbs_[i];
        return mag;
    }

    void trim()
    {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b)
    {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<std::uint32_t>(s & 0xffffffffull);
            carry = s >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b)
    {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (s < 0) {
                s += 0x100000000ll;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    static std::vector<std::uint32_t> shl_mag(const std::vector<std::uint32_t>& a, int shift)
    {
        if (shift == 0) return a;
        std::vector<std::uint32_t> r(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << shift;
            r[i + 1] = a[i] >> (32 - shift);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> shr_mag(const std::vector<std::uint32_t>& a, int shift)
    {
        if (shift == 0) return a;
        std::vector<std::uint32_t> r(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> shift;
            if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - shift);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static void divmod_small(const BigInt& a, std::uint32_t d, BigInt& q, BigInt& r)
    {
        q = BigInt();
        q.limbs_.assign(a.limbs_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : 1;
        r = BigInt(static_cast<std::int64_t>(rem));
    }
};

inline u128 u128_abs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

inline u128 gcd_u128(u128 a, u128 b)
{
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Big numerator/denominator pair, canonical (den > 0, reduced).
struct BigRat {
    BigInt num;
    BigInt den;
};

}  // namespace detail

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : n_(v) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den)
    {
        if (den == 0) throw Error("Rational: zero denominator");
        detail::i128 n = num, d = den;
        assign_i128(n, d);
    }

    static Rational from_big(detail::BigInt num, detail::BigInt den)
    {
        Rational r;
        r.assign_big(std::move(num), std::move(den));
        return r;
    }

    // Nearest rational with denominator a power of two up to 2^20; throws if
    // the input is not within tol of such a value. Used when a builder needs
    // exact coefficients from floating-point information quantities.
    static Rational snap(double x, double tol = 1e-9, int max_den_log2 = 20)
    {
        if (!std::isfinite(x)) throw Error("Rational::snap: non-finite value");
        for (int k = 0; k <= max_den_log2; ++k) {
            double scaled = x * static_cast<double>(std::int64_t(1) << k);
            double rounded = std::nearbyint(scaled);
            if (std::abs(scaled - rounded) <= tol * static_cast<double>(std::int64_t(1) << k) &&
                std::abs(rounded) < 9.0e15) {
                return Rational(static_cast<std::int64_t>(rounded), std::int64_t(1) << k);
            }
        }
        throw Error("Rational::snap: " + std::to_string(x) +
                    " is not close to a dyadic rational; use float mode");
    }

    bool is_big() const { return big_ != nullptr; }
    bool is_zero() const { return big_ ? big_->num.is_zero() : n_ == 0; }
    int sign() const
    {
        if (big_) return big_->num.sign();
        return n_ > 0 ? 1 : n_ < 0 ? -1 : 0;
    }

    std::int64_t num_i64() const
    {
        if (!big_) return n_;
        if (!big_->num.fits_i64()) throw Error("Rational: numerator exceeds 64 bits");
        return big_->num.to_i64();
    }
    std::int64_t den_i64() const
    {
        if (!big_) return d_;
        if (!big_->den.fits_i64()) throw Error("Rational: denominator exceeds 64 bits");
        return big_->den.to_i64();
    }

    double to_double() const
    {
        if (!big_) return static_cast<double>(n_) / static_cast<double>(d_);
        return big_->num.to_double() / big_->den.to_double();
    }

    std::string to_string() const
    {
        if (!big_) {
            std::string s = std::to_string(n_);
            if (d_ != 1) s += "/" + std::to_string(d_);
            return s;
        }
        std::string s = big_->num.to_string();
        if (detail::BigInt::cmp(big_->den, detail::BigInt(1)) != 0) s += "/" + big_->den.to_string();
        return s;
    }
    std::string num_string() const { return big_ ? big_->num.to_string() : std::to_string(n_); }
    std::string den_string() const { return big_ ? big_->den.to_string() : std::to_string(d_); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            detail::i128 n = static_cast<detail::i128>(a.n_) * b.d_ + static_cast<detail::i128>(b.n_) * a.d_;
            detail::i128 d = static_cast<detail::i128>(a.d_) * b.d_;
            Rational r;
            r.assign_i128(n, d);
            return r;
        }
        auto [an, ad] = a.as_big();
        auto [bn, bd] = b.as_big();
        return from_big(an * bd + bn * ad, ad * bd);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    Rational operator-() const
    {
        Rational r = *this;
        if (r.big_) {
            auto copy = std::make_shared<detail::BigRat>(*r.big_);
            copy->num.negate();
            r.big_ = std::move(copy);
        } else {
            r.n_ = -r.n_;
        }
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            detail::i128 n = static_cast<detail::i128>(a.n_) * b.n_;
            detail::i128 d = static_cast<detail::i128>(a.d_) * b.d_;
            Rational r;
            r.assign_i128(n, d);
            return r;
        }
        auto [an, ad] = a.as_big();
        auto [bn, bd] = b.as_big();
        return from_big(an * bn, ad * bd);
    }

    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero()) throw Error("Rational: division by zero");
        if (!a.big_ && !b.big_) {
            detail::i128 n = static_cast<detail::i128>(a.n_) * b.d_;
            detail::i128 d = static_cast<detail::i128>(a.d_) * b.n_;
            Rational r;
            r.assign_i128(n, d);
            return r;
        }
        auto [an, ad] = a.as_big();
        auto [bn, bd] = b.as_big();
        return from_big(an * bd, ad * bn);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        return compare(a, b) == 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    static int compare(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            detail::i128 lhs = static_cast<detail::i128>(a.n_) * b.d_;
            detail::i128 rhs = static_cast<detail::i128>(b.n_) * a.d_;
            return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
        }
        Rational d = a - b;
        return d.sign();
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::shared_ptr<const detail::BigRat> big_;

    // Canonical bound for the fast path; leaves headroom so equality checks
    // on canonical values never overflow.
    static constexpr std::int64_t kFastMax = INT64_MAX;

    std::pair<detail::BigInt, detail::BigInt> as_big() const
    {
        if (big_) return {big_->num, big_->den};
        return {detail::BigInt(n_), detail::BigInt(d_)};
    }

    void assign_i128(detail::i128 n, detail::i128 d)
    {
        if (d == 0) throw Error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            n_ = 0;
            d_ = 1;
            big_.reset();
            return;
        }
        detail::u128 g = detail::gcd_u128(detail::u128_abs(n), static_cast<detail::u128>(d));
        detail::u128 un = detail::u128_abs(n) / g;
        detail::u128 ud = static_cast<detail::u128>(d) / g;
        if (un <= static_cast<detail::u128>(kFastMax) && ud <= static_cast<detail::u128>(kFastMax)) {
            n_ = n < 0 ? -static_cast<std::int64_t>(un) : static_cast<std::int64_t>(un);
            d_ = static_cast<std::int64_t>(ud);
            big_.reset();
            return;
        }
        auto br = std::make_shared<detail::BigRat>();
        br->num = detail::BigInt::from_u128(un, n < 0 ? -1 : 1);
        br->den = detail::BigInt::from_u128(ud, 1);
        big_ = std::move(br);
    }

    void assign_big(detail::BigInt n, detail::BigInt d)
    {
        if (d.is_zero()) throw Error("Rational: zero denominator");
        if (d.sign() < 0) {
            n.negate();
            d.negate();
        }
        if (n.is_zero()) {
            n_ = 0;
            d_ = 1;
            big_.reset();
            return;
        }
        detail::BigInt g = detail::BigInt::gcd(n, d);
        detail::BigInt q, r;
        detail::BigInt::divmod(n, g, q, r);
        n = q;
        detail::BigInt::divmod(d, g, q, r);
        d = q;
        if (n.fits_i64() && d.fits_i64()) {
            n_ = n.to_i64();
            d_ = d.to_i64();
            big_.reset();
            return;
        }
        auto br = std::make_shared<detail::BigRat>();
        br->num = std::move(n);
        br->den = std::move(d);
        big_ = std::move(br);
    }
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace rdlp

#endif
