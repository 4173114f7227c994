#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial; index k holds the coefficient of x^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly constant(const BigInt &c);
    /// c * x^k
    static IntPoly monomial(const BigInt &c, std::size_t k);
    /// 1 + x
    static IntPoly one_plus_x();

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws std::domain_error for the zero polynomial.
    std::size_t degree() const;
    std::size_t length() const noexcept { return coeffs_.size(); }
    const std::vector<BigInt> &coefficients() const noexcept { return coeffs_; }
    /// Zero past the stored degree.
    BigInt operator[](std::size_t k) const;
    BigInt evaluate(const BigInt &x) const;

    IntPoly &operator+=(const IntPoly &rhs);
    IntPoly &operator-=(const IntPoly &rhs);
    IntPoly &operator*=(const IntPoly &rhs);

    friend IntPoly operator+(IntPoly lhs, const IntPoly &rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly &rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly &lhs, const IntPoly &rhs);
    friend IntPoly operator*(const BigInt &c, const IntPoly &p);
    friend bool operator==(const IntPoly &, const IntPoly &) = default;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// p * x^k
IntPoly shift(const IntPoly &p, std::size_t k);
IntPoly pow(const IntPoly &p, std::size_t e);

/// "1 + 4*x + 3*x^2 + 1*x^3"; zero terms omitted except a lone constant.
std::string to_string(const IntPoly &p);
/// "1 4 3 1"; the zero polynomial renders as "0".
std::string coefficient_string(const IntPoly &p);
std::vector<std::string> coefficient_strings(const IntPoly &p);
IntPoly parse_coefficients(const std::vector<std::string> &decimals);

struct Violation {
    std::size_t i;
    std::size_t j;
    std::size_t k;
};

struct UnimodalityReport {
    bool is_unimodal;
    /// Argmax interval of the coefficients.
    std::size_t mode_lo;
    std::size_t mode_hi;
    bool unique_mode;
    /// i < j < k with a_i > a_j < a_k, present iff not unimodal.
    std::optional<Violation> violation;
};

/// Throws std::domain_error on a negative coefficient or the zero polynomial.
UnimodalityReport unimodality(const IntPoly &p);

/// F_0 = F_1 = 1, F_n = F_{n-1} + x F_{n-2}.
IntPoly fibonacci_poly(std::size_t n);
/// sum_k C(n-k, k) x^k
IntPoly fibonacci_binomial_form(std::size_t n);

BigInt binomial(std::size_t n, std::size_t k);

/// Mode of p * (b0 + b1 x) predicted from a mode k of p: k when
/// c_k > c_{k+1}, otherwise k+1. Throws std::domain_error when p is not
/// unimodal or b0 = b1 = 0.
std::size_t degree_one_product_mode(const IntPoly &p, const BigInt &b0, const BigInt &b1);

}  // namespace indpoly
