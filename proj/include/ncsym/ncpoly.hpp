#pragma once

#include <vector>

#include <ncsym/linear_combination.hpp>
#include <ncsym/rational.hpp>

namespace ncsym {

// Letters are 1..k; the word's length is its degree.
using Word = std::vector<int>;

// Truncation of Q<<x_1, x_2, ...>> to the variables x_1..x_k.
class NCPolynomial {
public:
    explicit NCPolynomial(int k = 1);

    static NCPolynomial one(int k);
    static NCPolynomial monomial(int k, const Word& w, const Rational& coeff = 1);

    int vars() const noexcept { return k_; }
    const LinearCombination<Word>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Word& w) const { return terms_.coefficient(w); }

    void add(const Word& w, const Rational& coeff);

    NCPolynomial& operator+=(const NCPolynomial& q);
    NCPolynomial& operator-=(const NCPolynomial& q);
    NCPolynomial& operator*=(const Rational& s);

    friend NCPolynomial operator+(NCPolynomial p, const NCPolynomial& q) { return p += q; }
    friend NCPolynomial operator-(NCPolynomial p, const NCPolynomial& q) { return p -= q; }
    friend NCPolynomial operator*(NCPolynomial p, const Rational& s) { return p *= s; }
    friend NCPolynomial operator*(const Rational& s, NCPolynomial p) { return p *= s; }
    friend NCPolynomial operator*(const NCPolynomial& p, const NCPolynomial& q);
    // Throws size_mismatch when the cutoffs differ.
    friend bool operator==(const NCPolynomial& p, const NCPolynomial& q);

private:
    int k_;
    LinearCombination<Word> terms_;
};

NCPolynomial nc_add(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial nc_scale(const NCPolynomial& p, const Rational& s);
NCPolynomial nc_mul(const NCPolynomial& p, const NCPolynomial& q);
bool equal(const NCPolynomial& p, const NCPolynomial& q);

// Truncation of Q[[x_1, x_2, ...]]; keys are exponent vectors of length k.
class CPolynomial {
public:
    explicit CPolynomial(int k = 1);

    int vars() const noexcept { return k_; }
    const LinearCombination<std::vector<int>>& terms() const noexcept { return terms_; }
    Rational coefficient(const std::vector<int>& exponents) const { return terms_.coefficient(exponents); }

    void add(const std::vector<int>& exponents, const Rational& coeff);

    CPolynomial& operator+=(const CPolynomial& q);
    CPolynomial& operator*=(const Rational& s);

    friend CPolynomial operator*(const CPolynomial& p, const CPolynomial& q);
    friend bool operator==(const CPolynomial& p, const CPolynomial& q);

private:
    int k_;
    LinearCombination<std::vector<int>> terms_;
};

CPolynomial commutative_image(const NCPolynomial& p);

} // namespace ncsym
