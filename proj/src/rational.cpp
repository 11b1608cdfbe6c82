#include <ncsym/rational.hpp>

#include <cctype>
#include <vector>

#include <ncsym/errors.hpp>

namespace ncsym {

Integer factorial(int n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative number");
    }
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

std::string to_string(const Rational& q)
{
    Rational r(q);
    r.canonicalize();
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i]);
            ++i;
        }
        if (i == start) {
            throw parse_error("expected digits in rational", i);
        }
    };
    std::string num;
    std::string den = "1";
    read_digits(num);
    if (i < text.size() && text[i] == '/') {
        ++i;
        den.clear();
        read_digits(den);
    }
    if (i != text.size()) {
        throw parse_error("unexpected character in rational", i);
    }
    Integer d(den);
    if (d == 0) {
        throw parse_error("zero denominator", i);
    }
    Rational q(Integer(num), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

} // namespace ncsym
