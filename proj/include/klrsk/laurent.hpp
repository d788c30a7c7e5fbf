#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace klrsk {

/// Laurent polynomial in q with exact integer coefficients; zero terms are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int64_t constant) { add_term(0, constant); }  // NOLINT: implicit by design

    static LaurentPoly monomial(int exponent, int64_t coef = 1);

    const std::map<int, int64_t>& terms() const noexcept { return c_; }
    int64_t operator[](int exponent) const;
    bool is_zero() const noexcept { return c_.empty(); }
    /// Exactly one term with coefficient 1.
    bool is_unit_monomial() const noexcept { return c_.size() == 1 && c_.begin()->second == 1; }
    bool nonnegative() const noexcept;

    void add_term(int exponent, int64_t coef);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    /// Multiply by q^k.
    LaurentPoly shifted(int k) const;
    /// q -> q^{-1}
    LaurentPoly bar() const;
    int64_t at_one() const noexcept;

    bool operator==(const LaurentPoly&) const = default;

    /// e.g. "q^-1+q", "2", "-q^3"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::map<int, int64_t> c_;
};

} // namespace klrsk
