/**
 * cyclotomic.hpp -- exact arithmetic in the cyclotomic field Q(zeta_N).
 *
 * Elements are represented canonically as polynomials in zeta_N of degree
 * < deg Phi_N, reduced modulo the N-th cyclotomic polynomial Phi_N.  Raw
 * inputs may be given as naive power vectors in the group ring
 * Q[zeta]/(zeta^N - 1); normalization projects onto the Q(zeta_N) component
 * by reducing mod Phi_N.  Since Phi_N is irreducible over Q this gives a
 * genuine field, so every nonzero element is invertible.
 *
 * Coefficients are GMP rationals; there is no floating point anywhere in
 * the arithmetic.  approx() gives a non-authoritative complex embedding
 * for debug printing only.
 *
 * All values are immutable after construction and safe to share across
 * threads.
 */
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace edl {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational (mpq_class requires explicit canonicalization).
inline Rat ratio(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

struct ZeroInverse : std::runtime_error {
    ZeroInverse() : std::runtime_error("inverse of zero") {}
};
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Quotient of polynomial division by a monic divisor; p is reduced in place
// to the remainder.  Coefficient index = degree.
inline void reduce_by_monic(std::vector<Rat>& p, const std::vector<Rat>& monic) {
    const long d = static_cast<long>(monic.size()) - 1;
    for (long k = static_cast<long>(p.size()) - 1; k >= d; --k) {
        if (p[k] == 0) continue;
        Rat c = p[k];
        p[k] = 0;
        for (long j = 0; j < d; ++j) p[k - d + j] -= c * monic[j];
    }
    p.resize(d);
}

inline std::vector<Rat> poly_divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    // den monic up to leading coefficient; exact division (remainder must vanish).
    long dd = static_cast<long>(den.size()) - 1;
    long dn = static_cast<long>(num.size()) - 1;
    std::vector<Rat> q(dn - dd + 1, Rat(0));
    for (long k = dn; k >= dd; --k) {
        if (num[k] == 0) continue;
        Rat c = num[k] / den[dd];
        q[k - dd] = c;
        for (long j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (const Rat& c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return q;
}

}  // namespace detail

/// Field context for a fixed root-of-unity order N.  Contexts are interned
/// and live for the whole process.
class CycCtx {
public:
    int order;                       // N
    std::vector<Rat> phi;            // Phi_N, monic, index = degree
    int deg;                         // deg Phi_N = phi(N)
    std::vector<std::vector<Rat>> zeta_pow;  // zeta^k mod Phi_N for 0 <= k < N

    static const CycCtx& get(int N) {
        static std::map<int, std::unique_ptr<CycCtx>> cache;
        auto it = cache.find(N);
        if (it == cache.end()) it = cache.emplace(N, std::unique_ptr<CycCtx>(new CycCtx(N))).first;
        return *it->second;
    }

private:
    explicit CycCtx(int N) : order(N) {
        if (N < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
        phi = cyclotomic_poly(N);
        deg = static_cast<int>(phi.size()) - 1;
        zeta_pow.resize(N);
        for (int k = 0; k < N; ++k) {
            std::vector<Rat> p(k + 1, Rat(0));
            p[k] = 1;
            detail::reduce_by_monic(p, phi);
            zeta_pow[k] = std::move(p);
        }
    }

    static std::vector<Rat> cyclotomic_poly(int N) {
        // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
        std::vector<Rat> num(N + 1, Rat(0));
        num[0] = -1;
        num[N] = 1;
        if (N == 1) return num;
        for (int d = 1; d < N; ++d) {
            if (N % d != 0) continue;
            num = detail::poly_divide_exact(std::move(num), cyclotomic_poly(d));
        }
        return num;
    }
};

/// Exact element of Q(zeta_N), always kept in canonical form.
class Cyc {
public:
    Cyc() : ctx_(nullptr) {}  // acts as rational 0 in any context

    static Cyc rational(const Rat& r) {
        Cyc c;
        c.ctx_ = nullptr;
        if (r != 0) {
            c.co_.assign(1, r);
        }
        return c;
    }
    static Cyc rational(long n, long d = 1) { return rational(ratio(n, d)); }

    /// zeta_N^k in the order-N context.
    static Cyc zeta(int N, long k = 1) {
        const CycCtx& ctx = CycCtx::get(N);
        long kk = ((k % N) + N) % N;
        Cyc c;
        c.ctx_ = &ctx;
        c.co_ = ctx.zeta_pow[kk];
        c.trim();
        return c;
    }

    /// Canonical form of a raw power vector in Q[zeta]/(zeta^N - 1).
    static Cyc normalize(const std::vector<Rat>& raw, int N) {
        const CycCtx& ctx = CycCtx::get(N);
        if (static_cast<int>(raw.size()) > N)
            throw std::invalid_argument("raw coefficient vector longer than N");
        std::vector<Rat> p = raw;
        detail::reduce_by_monic(p, ctx.phi);
        Cyc c;
        c.ctx_ = &ctx;
        c.co_ = std::move(p);
        c.trim();
        return c;
    }

    bool is_zero() const { return co_.empty(); }
    bool is_rational() const { return co_.size() <= 1; }
    bool is_one() const { return co_.size() == 1 && co_[0] == 1; }
    Rat rat_value() const {
        if (!is_rational()) throw std::logic_error("not a rational element");
        return co_.empty() ? Rat(0) : co_[0];
    }
    int order() const { return ctx_ ? ctx_->order : 1; }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        if (a.co_.size() != b.co_.size()) return false;
        for (size_t i = 0; i < a.co_.size(); ++i)
            if (a.co_[i] != b.co_[i]) return false;
        // Rationals compare equal across contexts; otherwise orders must match.
        if (a.co_.size() > 1 && a.ctx_ != b.ctx_) return false;
        return true;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        const CycCtx* ctx = joint(a, b);
        Cyc r;
        r.ctx_ = ctx;
        r.co_.resize(std::max(a.co_.size(), b.co_.size()), Rat(0));
        for (size_t i = 0; i < a.co_.size(); ++i) r.co_[i] += a.co_[i];
        for (size_t i = 0; i < b.co_.size(); ++i) r.co_[i] += b.co_[i];
        r.trim();
        return r;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
    Cyc operator-() const {
        Cyc r(*this);
        for (Rat& c : r.co_) c = -c;
        return r;
    }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        if (a.is_zero() || b.is_zero()) return Cyc();
        const CycCtx* ctx = joint(a, b);
        // Fast path for rational scalars.
        if (a.is_rational() || b.is_rational()) {
            const Cyc& big = a.is_rational() ? b : a;
            Rat s = (a.is_rational() ? a : b).co_[0];
            Cyc r;
            r.ctx_ = ctx;
            r.co_ = big.co_;
            for (Rat& c : r.co_) c *= s;
            r.trim();
            return r;
        }
        std::vector<Rat> p(a.co_.size() + b.co_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.co_.size(); ++i) {
            if (a.co_[i] == 0) continue;
            for (size_t j = 0; j < b.co_.size(); ++j)
                if (b.co_[j] != 0) p[i + j] += a.co_[i] * b.co_[j];
        }
        detail::reduce_by_monic(p, ctx->phi);
        Cyc r;
        r.ctx_ = ctx;
        r.co_ = std::move(p);
        r.trim();
        return r;
    }

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws ZeroInverse on 0.
    Cyc inverse() const {
        if (is_zero()) throw ZeroInverse();
        if (is_rational()) return rational(Rat(1) / co_[0]);
        // Extended Euclid against Phi_N in Q[x].
        std::vector<Rat> r0 = ctx_->phi, r1 = co_;
        std::vector<Rat> t0, t1{Rat(1)};
        while (!r1.empty()) {
            auto [q, rem] = divmod(r0, r1);
            std::vector<Rat> t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd, a nonzero constant since Phi_N is irreducible.
        if (r0.size() != 1) throw NotInvertible("zero divisor in cyclotomic ring");
        Rat lead = r0[0];
        Cyc r;
        r.ctx_ = ctx_;
        r.co_ = t0;
        for (Rat& c : r.co_) c /= lead;
        detail::reduce_by_monic(r.co_, ctx_->phi);
        r.trim();
        return r;
    }

    /// Galois conjugate zeta -> zeta^k (k coprime to N); also used for complex
    /// conjugation via k = N-1.
    Cyc galois(long k) const {
        if (!ctx_) return *this;
        std::vector<Rat> raw(ctx_->order, Rat(0));
        // write as sum c_i zeta^i, then map zeta^i -> zeta^(ik mod N)
        for (size_t i = 0; i < co_.size(); ++i) {
            if (co_[i] == 0) continue;
            long j = static_cast<long>((static_cast<long long>(i) * k) % ctx_->order);
            if (j < 0) j += ctx_->order;
            raw[j] += co_[i];
        }
        return normalize(raw, ctx_->order);
    }

    /// Full coefficient vector of length N (canonical support in low degrees).
    std::vector<Rat> coeffs_padded() const {
        int N = ctx_ ? ctx_->order : 1;
        std::vector<Rat> out(N, Rat(0));
        for (size_t i = 0; i < co_.size(); ++i) out[i] = co_[i];
        return out;
    }
    const std::vector<Rat>& coeffs() const { return co_; }
    const CycCtx* ctx() const { return ctx_; }

    /// Non-authoritative complex embedding (debug printing only).
    std::complex<double> approx() const {
        if (!ctx_) return {co_.empty() ? 0.0 : co_[0].get_d(), 0.0};
        std::complex<double> z = 0;
        const double pi = 3.14159265358979323846;
        for (size_t i = 0; i < co_.size(); ++i)
            z += co_[i].get_d() *
                 std::exp(std::complex<double>(0, 2 * pi * static_cast<double>(i) / ctx_->order));
        return z;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < co_.size(); ++i) {
            if (co_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += co_[i].get_str();
            if (i > 0) s += "*z^" + std::to_string(i);
        }
        return s;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (const Rat& c : co_) {
            h ^= std::hash<std::string>{}(c.get_str());
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    const CycCtx* ctx_;      // nullptr for plain rationals
    std::vector<Rat> co_;    // canonical, trailing zeros trimmed; empty = 0

    void trim() {
        while (!co_.empty() && co_.back() == 0) co_.pop_back();
        if (co_.size() <= 1) ctx_ = nullptr;  // rationals are context-free
    }

    static const CycCtx* joint(const Cyc& a, const Cyc& b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
            throw std::logic_error("mixing cyclotomic orders");
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }

    static std::pair<std::vector<Rat>, std::vector<Rat>> divmod(std::vector<Rat> num,
                                                                const std::vector<Rat>& den) {
        long dd = static_cast<long>(den.size()) - 1;
        long dn = static_cast<long>(num.size()) - 1;
        if (dn < dd) return {{}, std::move(num)};
        std::vector<Rat> q(dn - dd + 1, Rat(0));
        for (long k = dn; k >= dd; --k) {
            if (num[k] == 0) continue;
            Rat c = num[k] / den[dd];
            q[k - dd] = c;
            for (long j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
        }
        while (!num.empty() && num.back() == 0) num.pop_back();
        return {std::move(q), std::move(num)};
    }
    static std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> p(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
        while (!p.empty() && p.back() == 0) p.pop_back();
        return p;
    }
    static std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

/// Inversion in the raw ring Q[zeta]/(zeta^N - 1), without the canonical
/// projection.  Zero divisors (possible since zeta^N - 1 is reducible) are
/// reported as NotInvertible.  Production code always works with canonical
/// elements; this exists to pin down the ring/field distinction in tests.
inline std::vector<Rat> ring_invert_raw(const std::vector<Rat>& raw, int N) {
    std::vector<Rat> modp(N + 1, Rat(0));
    modp[0] = -1;
    modp[N] = 1;
    std::vector<Rat> r0 = modp, r1 = raw;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    if (r1.empty()) throw ZeroInverse();
    std::vector<Rat> t0, t1{Rat(1)};
    while (!r1.empty()) {
        // divmod
        long dd = static_cast<long>(r1.size()) - 1;
        std::vector<Rat> num = r0, q(std::max<long>(static_cast<long>(num.size()) - 1 - dd + 1, 0), Rat(0));
        for (long k = static_cast<long>(num.size()) - 1; k >= dd; --k) {
            if (num[k] == 0) continue;
            Rat c = num[k] / r1[dd];
            q[k - dd] = c;
            for (long j = 0; j <= dd; ++j) num[k - dd + j] -= c * r1[j];
        }
        while (!num.empty() && num.back() == 0) num.pop_back();
        // t2 = t0 - q t1
        std::vector<Rat> qt(q.empty() || t1.empty() ? 0 : q.size() + t1.size() - 1, Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
        std::vector<Rat> t2(std::max(t0.size(), qt.size()), Rat(0));
        for (size_t i = 0; i < t0.size(); ++i) t2[i] += t0[i];
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        while (!t2.empty() && t2.back() == 0) t2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(num);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw NotInvertible("zero divisor in Q[zeta]/(zeta^N - 1)");
    std::vector<Rat> inv = t0;
    for (Rat& c : inv) c /= r0[0];
    // reduce mod x^N - 1
    std::vector<Rat> out(N, Rat(0));
    for (size_t i = 0; i < inv.size(); ++i) out[i % N] += inv[i];
    return out;
}

}  // namespace edl
