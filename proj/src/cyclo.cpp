#include "cyclo.hpp"

#include <mpfr.h>

#include <algorithm>

namespace pathact {

namespace {

// RAII enclosure [lo, hi] of a real number, both bounds mpfr at fixed precision.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    Interval(const Interval &) = delete;
    Interval &operator=(const Interval &) = delete;

    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

    void add_scaled(mpfr_srcptr vlo, mpfr_srcptr vhi, const Rational &c, mpfr_prec_t prec) {
        if (sgn(c) == 0)
            return;
        mpfr_t t;
        mpfr_init2(t, prec);
        if (sgn(c) > 0) {
            mpfr_mul_q(t, vlo, c.get_mpq_t(), MPFR_RNDD);
            mpfr_add(lo_, lo_, t, MPFR_RNDD);
            mpfr_mul_q(t, vhi, c.get_mpq_t(), MPFR_RNDU);
            mpfr_add(hi_, hi_, t, MPFR_RNDU);
        } else {
            mpfr_mul_q(t, vhi, c.get_mpq_t(), MPFR_RNDD);
            mpfr_add(lo_, lo_, t, MPFR_RNDD);
            mpfr_mul_q(t, vlo, c.get_mpq_t(), MPFR_RNDU);
            mpfr_add(hi_, hi_, t, MPFR_RNDU);
        }
        mpfr_clear(t);
    }

  private:
    mpfr_t lo_, hi_;
};

// Enclosure of the real embedding sum_k c_k cos(k pi / p) at the given precision.
void evaluate(const std::vector<Rational> &coeffs, int p, mpfr_prec_t prec, Interval &out) {
    mpfr_t pi_lo, pi_hi, th_lo, th_hi, c_lo, c_hi;
    mpfr_init2(pi_lo, prec);
    mpfr_init2(pi_hi, prec);
    mpfr_init2(th_lo, prec);
    mpfr_init2(th_hi, prec);
    mpfr_init2(c_lo, prec);
    mpfr_init2(c_hi, prec);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) == 0)
            continue;
        if (k == 0) {
            mpfr_set_ui(c_lo, 1, MPFR_RNDD);
            mpfr_set_ui(c_hi, 1, MPFR_RNDU);
        } else {
            // theta = k pi / p lies in (0, pi); cos is decreasing there, so the
            // enclosure is [cos(theta_hi), cos(theta_lo)].
            mpfr_mul_ui(th_lo, pi_lo, static_cast<unsigned>(k), MPFR_RNDD);
            mpfr_div_ui(th_lo, th_lo, static_cast<unsigned>(p), MPFR_RNDD);
            mpfr_mul_ui(th_hi, pi_hi, static_cast<unsigned>(k), MPFR_RNDU);
            mpfr_div_ui(th_hi, th_hi, static_cast<unsigned>(p), MPFR_RNDU);
            mpfr_cos(c_lo, th_hi, MPFR_RNDD);
            mpfr_cos(c_hi, th_lo, MPFR_RNDU);
        }
        out.add_scaled(c_lo, c_hi, coeffs[k], prec);
    }
    mpfr_clear(pi_lo);
    mpfr_clear(pi_hi);
    mpfr_clear(th_lo);
    mpfr_clear(th_hi);
    mpfr_clear(c_lo);
    mpfr_clear(c_hi);
}

} // namespace

void CycloReal::check_p(int p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("p must be an odd prime >= 5, got " + std::to_string(p));
}

void CycloReal::require_same_field(const CycloReal &o) const {
    if (p_ != o.p_)
        throw std::domain_error("mixed cyclotomic fields: p=" + std::to_string(p_) + " vs p=" +
                                std::to_string(o.p_));
}

std::vector<Rational> CycloReal::reduce(int p, std::vector<Rational> raw) {
    const size_t two_p = static_cast<size_t>(2 * p);
    if (raw.size() < two_p)
        raw.resize(two_p);
    // z^{p+k} = -z^k
    for (size_t k = static_cast<size_t>(p); k < raw.size(); ++k) {
        if (sgn(raw[k]) != 0)
            raw[k - p] -= raw[k];
        raw[k] = 0;
    }
    raw.resize(static_cast<size_t>(p));
    // z^{p-1} = sum_{k<p-1} (-1)^{k+1} z^k  (the 2p-th cyclotomic relation)
    Rational top = raw[p - 1];
    if (sgn(top) != 0) {
        for (int k = 0; k < p - 1; ++k) {
            if (k % 2 == 0)
                raw[k] -= top;
            else
                raw[k] += top;
        }
    }
    raw.resize(static_cast<size_t>(p - 1));
    return raw;
}

CycloReal CycloReal::zero(int p) {
    check_p(p);
    return CycloReal(p);
}

CycloReal CycloReal::one(int p) { return from_rational(p, Rational(1)); }

CycloReal CycloReal::from_rational(int p, const Rational &q) {
    check_p(p);
    CycloReal r(p);
    r.coeffs_[0] = q;
    return r;
}

CycloReal CycloReal::from_coeffs(int p, std::vector<Rational> coeffs) {
    check_p(p);
    if (coeffs.size() > static_cast<size_t>(2 * p))
        throw std::invalid_argument("coefficient vector too long");
    CycloReal r(p);
    r.coeffs_ = reduce(p, std::move(coeffs));
    if (!r.is_real())
        throw std::domain_error("coefficients do not describe a real-subfield element");
    return r;
}

bool CycloReal::is_zero() const {
    for (const auto &c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool CycloReal::is_rational() const {
    for (size_t k = 1; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0)
            return false;
    return true;
}

Rational CycloReal::rational_part() const {
    if (!is_rational())
        throw std::domain_error("element is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CycloReal CycloReal::conjugate() const {
    if (unset())
        return *this;
    // z^k -> z^{2p-k}
    std::vector<Rational> raw(static_cast<size_t>(2 * p_));
    raw[0] = coeffs_[0];
    for (size_t k = 1; k < coeffs_.size(); ++k)
        raw[2 * p_ - k] = coeffs_[k];
    CycloReal r(p_);
    r.coeffs_ = reduce(p_, std::move(raw));
    return r;
}

bool CycloReal::is_real() const { return conjugate() == *this; }

CycloReal CycloReal::operator-() const {
    CycloReal r = *this;
    for (auto &c : r.coeffs_)
        c = -c;
    return r;
}

CycloReal CycloReal::operator+(const CycloReal &o) const {
    CycloReal r = *this;
    r += o;
    return r;
}

CycloReal &CycloReal::operator+=(const CycloReal &o) {
    require_same_field(o);
    for (size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    return *this;
}

CycloReal CycloReal::operator-(const CycloReal &o) const {
    CycloReal r = *this;
    r -= o;
    return r;
}

CycloReal &CycloReal::operator-=(const CycloReal &o) {
    require_same_field(o);
    for (size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    return *this;
}

CycloReal CycloReal::operator*(const CycloReal &o) const {
    require_same_field(o);
    std::vector<Rational> raw(2 * coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (sgn(o.coeffs_[j]) == 0)
                continue;
            raw[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    CycloReal r(p_);
    r.coeffs_ = reduce(p_, std::move(raw));
    return r;
}

CycloReal CycloReal::operator*(const Rational &q) const {
    CycloReal r = *this;
    for (auto &c : r.coeffs_)
        c *= q;
    return r;
}

CycloReal CycloReal::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero");
    // Extended Euclid in Q[x] against the 2p-th cyclotomic polynomial
    // Phi(x) = sum_{k=0}^{p-1} (-1)^k x^k (irreducible, so the gcd is a unit).
    std::vector<Rational> a(static_cast<size_t>(p_));
    for (int k = 0; k < p_; ++k)
        a[k] = Rational((k % 2 == 0) ? 1 : -1);
    std::vector<Rational> b = coeffs_;
    while (!b.empty() && sgn(b.back()) == 0)
        b.pop_back();
    std::vector<Rational> s0{}, s1{Rational(1)}; // coefficients of *this in a, b
    auto deg = [](const std::vector<Rational> &v) { return static_cast<int>(v.size()) - 1; };
    while (deg(b) > 0) {
        // divide a by b
        std::vector<Rational> q(std::max<size_t>(1, a.size() - b.size() + 1));
        std::vector<Rational> rem = a;
        for (int d = deg(rem); d >= deg(b); --d) {
            if (sgn(rem[d]) == 0)
                continue;
            Rational f = rem[d] / b.back();
            q[d - deg(b)] = f;
            for (size_t k = 0; k < b.size(); ++k)
                rem[d - deg(b) + k] -= f * b[k];
        }
        while (!rem.empty() && sgn(rem.back()) == 0)
            rem.pop_back();
        // s2 = s0 - q * s1
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0)
                continue;
            for (size_t j = 0; j < s1.size(); ++j)
                s2[i + j] -= q[i] * s1[j];
        }
        while (!s2.empty() && sgn(s2.back()) == 0)
            s2.pop_back();
        a = std::move(b);
        b = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (b.empty())
            throw std::runtime_error("cyclotomic polynomial not coprime with nonzero element");
    }
    // b is a nonzero constant: inverse = s1 / b[0]
    for (auto &c : s1)
        c /= b[0];
    CycloReal r(p_);
    r.coeffs_ = reduce(p_, std::move(s1));
    return r;
}

CycloReal CycloReal::operator/(const CycloReal &o) const { return *this * o.inverse(); }

RealInterval CycloReal::to_float(unsigned precision_bits) const {
    if (precision_bits < 32)
        throw std::invalid_argument("precision must be >= 32 bits");
    if (unset())
        return {0.0, 0.0};
    Interval iv(static_cast<mpfr_prec_t>(precision_bits));
    evaluate(coeffs_, p_, static_cast<mpfr_prec_t>(precision_bits), iv);
    RealInterval out;
    out.lo = mpfr_get_d(iv.lo(), MPFR_RNDD);
    out.hi = mpfr_get_d(iv.hi(), MPFR_RNDU);
    return out;
}

double CycloReal::to_double() const { return to_float(128).midpoint(); }

int CycloReal::sign() const {
    if (is_zero())
        return 0;
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        Interval iv(prec);
        evaluate(coeffs_, p_, prec, iv);
        if (mpfr_sgn(iv.lo()) > 0)
            return 1;
        if (mpfr_sgn(iv.hi()) < 0)
            return -1;
        if (prec > (1 << 22))
            throw std::runtime_error("sign refinement failed to converge");
    }
}

int CycloReal::cmp_abs(const CycloReal &a, const CycloReal &b) {
    a.require_same_field(b);
    // |a| < |b| iff a^2 - b^2 < 0 in the real field.
    return (a * a - b * b).sign();
}

int CycloReal::compare_repr(const CycloReal &a, const CycloReal &b) {
    if (a.p_ != b.p_)
        return a.p_ < b.p_ ? -1 : 1;
    for (size_t k = 0; k < a.coeffs_.size(); ++k) {
        int c = cmp(a.coeffs_[k], b.coeffs_[k]);
        if (c != 0)
            return c;
    }
    return 0;
}

CycloReal quantum_integer(long n, int p) {
    CycloReal::check_p(p);
    if (n < 0)
        throw std::domain_error("quantum integer index must be >= 0");
    // [n]_q = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}, exponents mod 2p.
    std::vector<Rational> raw(static_cast<size_t>(2 * p));
    const long two_p = 2 * p;
    for (long k = 0; k < n; ++k) {
        long e = ((n - 1 - 2 * k) % two_p + two_p) % two_p;
        raw[e] += 1;
    }
    return CycloReal::from_coeffs(p, std::move(raw));
}

} // namespace pathact
