#include <ncsym/nsym.hpp>

#include <algorithm>
#include <map>
#include <mutex>

#include <ncsym/errors.hpp>
#include <ncsym/linalg.hpp>

namespace ncsym {

NSymExpr NSymExpr::single(NSymBasis basis, const Composition& alpha, const Rational& coeff)
{
    NSymExpr f;
    f.basis = basis;
    f.terms.add(alpha, coeff);
    return f;
}

namespace {

void require_same_basis(NSymBasis a, NSymBasis b)
{
    if (a != b) {
        throw basis_mismatch("NSym bases differ: " + basis_name(a) + " vs " + basis_name(b));
    }
}

NSymExpr element_to_H(NSymBasis b, const Composition& alpha)
{
    switch (b) {
    case NSymBasis::H: return NSymExpr::single(NSymBasis::H, alpha);
    case NSymBasis::R: return ribbon_to_H(alpha);
    case NSymBasis::Immaculate: return immaculate_to_H(alpha);
    }
    throw internal_error("unknown NSym basis");
}

struct Transition {
    std::vector<Composition> order;
    Matrix from_H; // row i: H_order[i] in the target basis
};

const Transition& transition(NSymBasis b, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Transition> cache;
    std::lock_guard lock(mutex);
    const auto key = std::make_pair(static_cast<int>(b), n);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    Transition t;
    t.order = enumerate_compositions(n);
    std::sort(t.order.begin(), t.order.end());
    const auto size = t.order.size();
    Matrix to_H(size, std::vector<Rational>(size, 0));
    for (std::size_t i = 0; i < size; ++i) {
        for (const auto& [beta, c] : element_to_H(b, t.order[i]).terms) {
            const auto j = static_cast<std::size_t>(std::lower_bound(t.order.begin(), t.order.end(), beta) -
                                                    t.order.begin());
            to_H[i][j] = c;
        }
    }
    t.from_H = inverse(to_H);
    return cache.emplace(key, std::move(t)).first->second;
}

} // namespace

NSymExpr& NSymExpr::operator+=(const NSymExpr& other)
{
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        basis = other.basis;
    }
    require_same_basis(basis, other.basis);
    terms += other.terms;
    return *this;
}

NSymExpr& NSymExpr::operator-=(const NSymExpr& other)
{
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        basis = other.basis;
    }
    require_same_basis(basis, other.basis);
    terms -= other.terms;
    return *this;
}

NSymExpr& NSymExpr::operator*=(const Rational& s)
{
    terms *= s;
    return *this;
}

std::string basis_name(NSymBasis b)
{
    switch (b) {
    case NSymBasis::H: return "H";
    case NSymBasis::R: return "R";
    case NSymBasis::Immaculate: return "I";
    }
    return "?";
}

NSymExpr ribbon_to_H(const Composition& alpha)
{
    NSymExpr out;
    for (const auto& beta : coarsenings(alpha)) {
        out.terms.add(beta, (alpha.length() + beta.length()) % 2 == 0 ? 1 : -1);
    }
    return out;
}

NSymExpr immaculate_to_H(const Composition& alpha)
{
    NSymExpr out;
    const int l = alpha.length();
    for (const auto& eps : enumerate_permutations(l)) {
        std::vector<int> parts;
        bool dead = false;
        for (int i = 1; i <= l && !dead; ++i) {
            const int c = alpha.parts()[static_cast<std::size_t>(i - 1)] + eps(i) - i;
            dead = c < 0;
            if (c > 0) {
                parts.push_back(c);
            }
        }
        if (!dead) {
            out.terms.add(Composition(std::move(parts)), eps.sign());
        }
    }
    return out;
}

NSymExpr nsym_to_H(const NSymExpr& f)
{
    NSymExpr out;
    for (const auto& [alpha, c] : f.terms) {
        out += c * element_to_H(f.basis, alpha);
    }
    return out;
}

NSymExpr nsym_convert(const NSymExpr& f, NSymBasis target)
{
    if (f.basis == target) {
        return f;
    }
    const NSymExpr h = nsym_to_H(f);
    if (target == NSymBasis::H) {
        return h;
    }
    NSymExpr out;
    out.basis = target;
    for (const auto& [alpha, c] : h.terms) {
        const auto& t = transition(target, alpha.size());
        const auto row = static_cast<std::size_t>(std::lower_bound(t.order.begin(), t.order.end(), alpha) -
                                                  t.order.begin());
        for (std::size_t j = 0; j < t.order.size(); ++j) {
            out.terms.add(t.order[j], c * t.from_H[row][j]);
        }
    }
    return out;
}

NSymExpr nsym_product(const NSymExpr& f, const NSymExpr& g)
{
    const NSymExpr a = nsym_to_H(f);
    const NSymExpr b = nsym_to_H(g);
    NSymExpr out;
    for (const auto& [alpha, x] : a.terms) {
        for (const auto& [beta, y] : b.terms) {
            out.terms.add(concat(alpha, beta), x * y);
        }
    }
    return nsym_convert(out, f.basis);
}

NCSymExpr iota(const NSymExpr& f)
{
    NCSymExpr out;
    out.basis = Basis::h;
    for (const auto& [alpha, c] : nsym_to_H(f).terms) {
        out.terms.add(canonical_partition(alpha), c / Rational(factorial_product(alpha)));
    }
    return out;
}

SymExpr chi(const NSymExpr& f)
{
    SymExpr out;
    out.basis = SymBasis::h;
    for (const auto& [alpha, c] : nsym_to_H(f).terms) {
        out.terms.add(sorted_partition(alpha), c);
    }
    return out;
}

} // namespace ncsym
