#ifndef VERMA_SCALAR_HPP
#define VERMA_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace verma
{

using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else,
// including decimal points.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);

bool is_integer(const Rational &q);

Rational factorial(unsigned k);

std::strong_ordering compare(const Rational &a, const Rational &b);

// Exponent vector over the symbols lambda_1, lambda_2, ... Entry s-1 is the
// power of lambda_s; trailing zeros are never stored.
using SymbolPowers = std::vector<unsigned>;

// Polynomial in lambda_1..lambda_{n-1} over the rationals. Numeric scalars
// are the degree-zero case.
class LambdaPoly
{
public:
    using TermMap = std::map<SymbolPowers, Rational>;

    LambdaPoly() = default;
    LambdaPoly(const Rational &c);
    LambdaPoly(long c) : LambdaPoly(Rational(c)) {}
    LambdaPoly(int c) : LambdaPoly(Rational(c)) {}

    // The indeterminate lambda_s, s >= 1.
    static LambdaPoly symbol(unsigned s);

    const TermMap &terms() const { return m_terms; }

    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;
    // Requires is_constant().
    Rational constant_value() const;
    unsigned degree() const;

    LambdaPoly &operator+=(const LambdaPoly &other);
    LambdaPoly &operator-=(const LambdaPoly &other);
    LambdaPoly &operator*=(const LambdaPoly &other);
    LambdaPoly &operator*=(const Rational &c);

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly &b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly &b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly &a, const LambdaPoly &b);
    friend LambdaPoly operator*(LambdaPoly a, const Rational &c) { return a *= c; }
    friend LambdaPoly operator*(const Rational &c, LambdaPoly a) { return a *= c; }
    LambdaPoly operator-() const;

    friend bool operator==(const LambdaPoly &a, const LambdaPoly &b);

    // Replaces every lambda_s by images[s-1] (symbols beyond the vector are
    // left alone).
    LambdaPoly substitute(const std::vector<LambdaPoly> &images) const;

    // Adds c * powers, pruning a cancelled term.
    void add_term(const SymbolPowers &powers, const Rational &c);

private:
    TermMap m_terms;
};

// q0 + sum_s q_s lambda_s, used as an exponent of a subdiagonal variable and
// as a weight coordinate.
class AffineExponent
{
public:
    AffineExponent() = default;
    AffineExponent(const Rational &c) : m_constant(c) {}
    AffineExponent(long c) : m_constant(c) {}
    AffineExponent(int c) : m_constant(c) {}

    static AffineExponent symbol(unsigned s);

    const Rational &constant() const { return m_constant; }
    const std::map<unsigned, Rational> &linear() const { return m_linear; }

    void set_linear(unsigned s, const Rational &c);

    bool is_numeric() const { return m_linear.empty(); }
    bool is_zero() const { return m_linear.empty() && m_constant == 0; }
    bool is_integer() const;
    // Decidably a member of {0, 1, 2, ...}.
    bool is_natural() const;

    LambdaPoly to_poly() const;

    AffineExponent &operator+=(const AffineExponent &other);
    AffineExponent &operator-=(const AffineExponent &other);
    AffineExponent &operator*=(const Rational &c);

    friend AffineExponent operator+(AffineExponent a, const AffineExponent &b) { return a += b; }
    friend AffineExponent operator-(AffineExponent a, const AffineExponent &b) { return a -= b; }
    friend AffineExponent operator*(AffineExponent a, const Rational &c) { return a *= c; }
    friend AffineExponent operator*(const Rational &c, AffineExponent a) { return a *= c; }
    AffineExponent operator-() const;

    friend bool operator==(const AffineExponent &a, const AffineExponent &b);
    friend std::strong_ordering operator<=>(const AffineExponent &a, const AffineExponent &b);

    // Replaces lambda_s by images[s-1] where present.
    AffineExponent substitute(const std::map<unsigned, AffineExponent> &images) const;

private:
    Rational m_constant{0};
    std::map<unsigned, Rational> m_linear;
};

// <gamma>_k = gamma (gamma - 1) ... (gamma - k + 1); <gamma>_0 = 1.
LambdaPoly falling_factorial(const LambdaPoly &gamma, unsigned k);
LambdaPoly falling_factorial(const AffineExponent &gamma, unsigned k);

// Plain text ("l1^2 - 1/2*l1") and LaTeX ("\lambda_1^{2}-\frac{1}{2}\lambda_1").
std::string to_text(const LambdaPoly &p);
std::string to_latex(const LambdaPoly &p);
std::string to_text(const AffineExponent &e);
std::string to_latex(const AffineExponent &e);

} // namespace verma

#endif
