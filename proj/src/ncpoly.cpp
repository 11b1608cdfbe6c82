#include <ncsym/ncpoly.hpp>

#include <algorithm>
#include <string>

#include <ncsym/errors.hpp>

namespace ncsym {

namespace {

void require_same_vars(int a, int b)
{
    if (a != b) {
        throw size_mismatch("variable cutoffs differ: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace

NCPolynomial::NCPolynomial(int k) : k_(k)
{
    if (k < 1) {
        throw std::invalid_argument("variable cutoff must be at least 1");
    }
}

NCPolynomial NCPolynomial::one(int k) { return monomial(k, {}); }

NCPolynomial NCPolynomial::monomial(int k, const Word& w, const Rational& coeff)
{
    NCPolynomial p(k);
    p.add(w, coeff);
    return p;
}

void NCPolynomial::add(const Word& w, const Rational& coeff)
{
    for (int letter : w) {
        if (letter < 1 || letter > k_) {
            throw std::out_of_range("letter " + std::to_string(letter) + " outside 1.." + std::to_string(k_));
        }
    }
    terms_.add(w, coeff);
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& q)
{
    require_same_vars(k_, q.k_);
    terms_ += q.terms_;
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& q)
{
    require_same_vars(k_, q.k_);
    terms_ -= q.terms_;
    return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Rational& s)
{
    terms_ *= s;
    return *this;
}

NCPolynomial operator*(const NCPolynomial& p, const NCPolynomial& q)
{
    require_same_vars(p.k_, q.k_);
    NCPolynomial out(p.k_);
    for (const auto& [u, a] : p.terms_) {
        for (const auto& [v, b] : q.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.terms_.add(w, a * b);
        }
    }
    return out;
}

bool operator==(const NCPolynomial& p, const NCPolynomial& q)
{
    require_same_vars(p.k_, q.k_);
    return p.terms_ == q.terms_;
}

NCPolynomial nc_add(const NCPolynomial& p, const NCPolynomial& q) { return p + q; }
NCPolynomial nc_scale(const NCPolynomial& p, const Rational& s) { return p * s; }
NCPolynomial nc_mul(const NCPolynomial& p, const NCPolynomial& q) { return p * q; }
bool equal(const NCPolynomial& p, const NCPolynomial& q) { return p == q; }

CPolynomial::CPolynomial(int k) : k_(k)
{
    if (k < 1) {
        throw std::invalid_argument("variable cutoff must be at least 1");
    }
}

void CPolynomial::add(const std::vector<int>& exponents, const Rational& coeff)
{
    if (static_cast<int>(exponents.size()) != k_) {
        throw size_mismatch("exponent vector length differs from the cutoff");
    }
    terms_.add(exponents, coeff);
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& q)
{
    require_same_vars(k_, q.k_);
    terms_ += q.terms_;
    return *this;
}

CPolynomial& CPolynomial::operator*=(const Rational& s)
{
    terms_ *= s;
    return *this;
}

CPolynomial operator*(const CPolynomial& p, const CPolynomial& q)
{
    require_same_vars(p.k_, q.k_);
    CPolynomial out(p.k_);
    for (const auto& [u, a] : p.terms_) {
        for (const auto& [v, b] : q.terms_) {
            std::vector<int> w(u.size());
            std::transform(u.begin(), u.end(), v.begin(), w.begin(), std::plus<>());
            out.terms_.add(w, a * b);
        }
    }
    return out;
}

bool operator==(const CPolynomial& p, const CPolynomial& q)
{
    require_same_vars(p.k_, q.k_);
    return p.terms_ == q.terms_;
}

CPolynomial commutative_image(const NCPolynomial& p)
{
    CPolynomial out(p.vars());
    for (const auto& [w, c] : p.terms()) {
        std::vector<int> exponents(static_cast<std::size_t>(p.vars()), 0);
        for (int letter : w) {
            ++exponents[static_cast<std::size_t>(letter - 1)];
        }
        out.add(exponents, c);
    }
    return out;
}

} // namespace ncsym
