#pragma once

#include "util.hpp"

namespace pathact {

struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;
    double midpoint() const { return lo + (hi - lo) / 2; }
    double radius() const { return (hi - lo) / 2; }
};

// Exact element of the maximal real subfield of Q(zeta_{2p}), p an odd prime >= 5.
// Stored as the canonical remainder modulo the 2p-th cyclotomic polynomial in the
// basis 1, z, ..., z^{p-2} with z = e^{i pi / p}; real-subfield elements have a
// unique such remainder, so equality is coefficient-vector equality.
class CycloReal {
  public:
    CycloReal() : p_(0) {}

    static CycloReal zero(int p);
    static CycloReal one(int p);
    static CycloReal from_rational(int p, const Rational &q);
    // Raw coefficient vector in the power basis; must describe a real element.
    static CycloReal from_coeffs(int p, std::vector<Rational> coeffs);

    int p() const { return p_; }
    bool unset() const { return p_ == 0; }
    const std::vector<Rational> &coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const; // requires is_rational()

    // Exact sign of the real embedding: -1, 0, +1.
    int sign() const;
    // Exact comparison of |a| and |b|: -1, 0, +1.
    static int cmp_abs(const CycloReal &a, const CycloReal &b);

    // Certified enclosure of the real embedding, >= 32 bits of working precision.
    RealInterval to_float(unsigned precision_bits) const;
    double to_double() const; // convenience, 128-bit evaluation

    CycloReal operator-() const;
    CycloReal operator+(const CycloReal &o) const;
    CycloReal operator-(const CycloReal &o) const;
    CycloReal operator*(const CycloReal &o) const;
    CycloReal operator*(const Rational &q) const;
    CycloReal operator/(const CycloReal &o) const;
    CycloReal &operator+=(const CycloReal &o);
    CycloReal &operator-=(const CycloReal &o);
    bool operator==(const CycloReal &o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }
    bool operator!=(const CycloReal &o) const { return !(*this == o); }

    CycloReal inverse() const;
    CycloReal conjugate() const;
    bool is_real() const; // fixed by complex conjugation

    // Deterministic total order on (p, coeffs); used for canonical sorting only.
    static int compare_repr(const CycloReal &a, const CycloReal &b);

  private:
    explicit CycloReal(int p) : p_(p), coeffs_(p - 1) {}
    static void check_p(int p);
    void require_same_field(const CycloReal &o) const;
    // Reduce a raw coefficient array (exponents already in [0, 2p)) to the
    // canonical remainder mod the 2p-th cyclotomic polynomial.
    static std::vector<Rational> reduce(int p, std::vector<Rational> raw);

    int p_;
    std::vector<Rational> coeffs_; // length p-1 once set

    friend CycloReal quantum_integer(long n, int p);
};

// [n]_q = sin(n pi / p) / sin(pi / p) for q = e^{i pi / p}, exact.
CycloReal quantum_integer(long n, int p);

} // namespace pathact
