#include "indpoly/poly.hpp"

#include <algorithm>
#include <sstream>

namespace indpoly {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) : coeffs_(coeffs.begin(), coeffs.end())
{
    trim();
}

IntPoly IntPoly::constant(const BigInt &c)
{
    return IntPoly(std::vector<BigInt>{c});
}

IntPoly IntPoly::monomial(const BigInt &c, std::size_t k)
{
    std::vector<BigInt> coeffs(k + 1);
    coeffs[k] = c;
    return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::one_plus_x()
{
    return IntPoly{1, 1};
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::size_t IntPoly::degree() const
{
    if (coeffs_.empty())
        throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

BigInt IntPoly::operator[](std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : BigInt{0};
}

BigInt IntPoly::evaluate(const BigInt &x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly &IntPoly::operator+=(const IntPoly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly &IntPoly::operator*=(const IntPoly &rhs)
{
    *this = *this * rhs;
    return *this;
}

IntPoly operator*(const IntPoly &lhs, const IntPoly &rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt &c, const IntPoly &p)
{
    std::vector<BigInt> out = p.coeffs_;
    for (auto &a : out)
        a *= c;
    return IntPoly(std::move(out));
}

IntPoly shift(const IntPoly &p, std::size_t k)
{
    if (p.is_zero())
        return {};
    std::vector<BigInt> out(k);
    out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
    return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly &p, std::size_t e)
{
    IntPoly result{1};
    IntPoly base = p;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::string to_string(const IntPoly &p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto &c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0 && !(k == 0 && c.size() == 1))
            continue;
        BigInt mag = c[k] < 0 ? BigInt(-c[k]) : c[k];
        if (first)
            os << (c[k] < 0 ? "-" : "");
        else
            os << (c[k] < 0 ? " - " : " + ");
        os << mag;
        if (k == 1)
            os << "*x";
        else if (k > 1)
            os << "*x^" << k;
        first = false;
    }
    return os.str();
}

std::vector<std::string> coefficient_strings(const IntPoly &p)
{
    std::vector<std::string> out;
    for (const auto &c : p.coefficients())
        out.push_back(c.str());
    return out;
}

std::string coefficient_string(const IntPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto &s : coefficient_strings(p))
        out += (out.empty() ? "" : " ") + s;
    return out;
}

IntPoly parse_coefficients(const std::vector<std::string> &decimals)
{
    std::vector<BigInt> coeffs;
    for (const auto &d : decimals) {
        if (d.empty() || d.find_first_not_of("-0123456789") != std::string::npos)
            throw std::invalid_argument("not a decimal integer: '" + d + "'");
        coeffs.emplace_back(d);
    }
    return IntPoly(std::move(coeffs));
}

UnimodalityReport unimodality(const IntPoly &p)
{
    if (p.is_zero())
        throw std::domain_error("unimodality of the zero polynomial is undefined");
    const auto &a = p.coefficients();
    for (const auto &c : a)
        if (c < 0)
            throw std::domain_error("unimodality needs nonnegative coefficients");

    UnimodalityReport r{true, 0, 0, false, std::nullopt};
    auto top = std::max_element(a.begin(), a.end());
    r.mode_lo = static_cast<std::size_t>(top - a.begin());
    r.mode_hi = r.mode_lo;
    for (std::size_t k = r.mode_lo; k < a.size() && a[k] == *top; ++k)
        r.mode_hi = k;

    std::size_t n = a.size();
    std::size_t fall = 0;
    while (fall + 1 < n && a[fall] <= a[fall + 1])
        ++fall;
    for (std::size_t q = fall + 1; q + 1 < n; ++q)
        if (a[q] < a[q + 1]) {
            r.is_unimodal = false;
            r.violation = Violation{fall, q, q + 1};
            break;
        }
    r.unique_mode = r.is_unimodal && r.mode_lo == r.mode_hi;
    return r;
}

IntPoly fibonacci_poly(std::size_t n)
{
    IntPoly prev{1}, cur{1};
    const IntPoly x{0, 1};
    for (std::size_t i = 2; i <= n; ++i) {
        IntPoly next = cur + x * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly fibonacci_binomial_form(std::size_t n)
{
    std::vector<BigInt> c;
    for (std::size_t k = 0; 2 * k <= n; ++k)
        c.push_back(binomial(n - k, k));
    return IntPoly(std::move(c));
}

BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::size_t degree_one_product_mode(const IntPoly &p, const BigInt &b0, const BigInt &b1)
{
    if (b0 < 0 || b1 < 0 || (b0 == 0 && b1 == 0))
        throw std::domain_error("degree_one_product_mode needs b0, b1 >= 0, not both zero");
    auto rep = unimodality(p);
    if (!rep.is_unimodal)
        throw std::domain_error("degree_one_product_mode needs a unimodal polynomial");
    const std::size_t k = rep.mode_lo;
    auto c = [&](std::size_t i) { return p[i] * b0 + (i ? p[i - 1] * b1 : BigInt{0}); };
    return c(k) > c(k + 1) ? k : k + 1;
}

}  // namespace indpoly
