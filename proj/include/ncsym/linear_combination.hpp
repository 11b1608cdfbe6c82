#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include <ncsym/rational.hpp>

namespace ncsym {

// Finite Q-linear combination of keys. Zero coefficients are never stored,
// so structural equality of the term maps is equality of the elements.
template <typename Key, typename Compare = std::less<Key>>
class LinearCombination {
public:
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    static LinearCombination single(const Key& key, const Rational& coeff = 1)
    {
        LinearCombination lc;
        lc.add(key, coeff);
        return lc;
    }

    void add(const Key& key, const Rational& coeff)
    {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    Rational coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    LinearCombination& operator+=(const LinearCombination& other)
    {
        for (const auto& [k, c] : other.terms_) {
            add(k, c);
        }
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& other)
    {
        for (const auto& [k, c] : other.terms_) {
            add(k, -c);
        }
        return *this;
    }

    LinearCombination& operator*=(const Rational& scalar)
    {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) {
            c *= scalar;
        }
        return *this;
    }

    // Relabel every key through f, collecting coinciding images.
    template <typename F>
    LinearCombination transform_keys(F&& f) const
    {
        LinearCombination out;
        for (const auto& [k, c] : terms_) {
            out.add(f(k), c);
        }
        return out;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b)
    {
        return a.terms_ == b.terms_;
    }

private:
    map_type terms_;
};

} // namespace ncsym
