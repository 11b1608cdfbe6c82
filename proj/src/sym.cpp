#include <ncsym/sym.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include <ncsym/errors.hpp>
#include <ncsym/linalg.hpp>

namespace ncsym {

SymExpr SymExpr::single(SymBasis basis, const IntegerPartition& lambda, const Rational& coeff)
{
    SymExpr f;
    f.basis = basis;
    f.terms.add(lambda, coeff);
    return f;
}

namespace {

void require_same_basis(SymBasis a, SymBasis b)
{
    if (a != b) {
        throw basis_mismatch(std::string("Sym bases differ: ") + basis_letter(a) + " vs " + basis_letter(b));
    }
}

// Nonnegative integer matrices with the given row and column sums, entries <= cap.
Integer count_matrices(const std::vector<int>& rows, std::vector<int>& cols, std::size_t row, int cap)
{
    if (row == rows.size()) {
        return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
    }
    Integer total = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t col, int remaining) {
        if (col == cols.size()) {
            if (remaining == 0) {
                total += count_matrices(rows, cols, row + 1, cap);
            }
            return;
        }
        const int hi = std::min({remaining, cols[col], cap});
        for (int v = 0; v <= hi; ++v) {
            cols[col] -= v;
            fill(col + 1, remaining - v);
            cols[col] += v;
        }
    };
    fill(0, rows[row]);
    return total;
}

// Maps from the parts of lambda onto the columns of mu, column sums matching.
Integer count_power_assignments(const std::vector<int>& parts, std::vector<int>& cols, std::size_t i)
{
    if (i == parts.size()) {
        return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
    }
    Integer total = 0;
    for (auto& c : cols) {
        if (c >= parts[i]) {
            c -= parts[i];
            total += count_power_assignments(parts, cols, i + 1);
            c += parts[i];
        }
    }
    return total;
}

Integer m_coefficient(SymBasis b, const IntegerPartition& lambda, const IntegerPartition& mu)
{
    std::vector<int> cols = mu.parts();
    switch (b) {
    case SymBasis::m:
        return lambda == mu ? 1 : 0;
    case SymBasis::h:
        return count_matrices(lambda.parts(), cols, 0, lambda.size());
    case SymBasis::e:
        return count_matrices(lambda.parts(), cols, 0, 1);
    case SymBasis::p:
        return count_power_assignments(lambda.parts(), cols, 0);
    case SymBasis::s:
        return kostka(SkewShape(lambda), mu);
    }
    throw internal_error("unknown Sym basis");
}

struct Transition {
    std::vector<IntegerPartition> order;
    Matrix to_m;   // to_m[i][j]: coefficient of m_order[j] in b_order[i]
    Matrix from_m; // inverse of to_m
};

const Transition& transition(SymBasis b, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Transition> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(static_cast<int>(b), n);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return it->second;
    }
    Transition t;
    t.order = enumerate_partitions(n);
    const auto size = t.order.size();
    t.to_m.assign(size, std::vector<Rational>(size, 0));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            t.to_m[i][j] = m_coefficient(b, t.order[i], t.order[j]);
        }
    }
    t.from_m = inverse(t.to_m);
    return cache.emplace(key, std::move(t)).first->second;
}

std::size_t index_of(const std::vector<IntegerPartition>& order, const IntegerPartition& lambda)
{
    return static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), lambda) - order.begin());
}

IntegerPartition union_of(const IntegerPartition& a, const IntegerPartition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return IntegerPartition::from_parts(std::move(parts));
}

} // namespace

SymExpr& SymExpr::operator+=(const SymExpr& other)
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

SymExpr& SymExpr::operator-=(const SymExpr& other)
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

SymExpr& SymExpr::operator*=(const Rational& s)
{
    terms *= s;
    return *this;
}

char basis_letter(SymBasis b)
{
    switch (b) {
    case SymBasis::m: return 'm';
    case SymBasis::p: return 'p';
    case SymBasis::e: return 'e';
    case SymBasis::h: return 'h';
    case SymBasis::s: return 's';
    }
    return '?';
}

SymExpr sym_to_m(const SymExpr& f)
{
    SymExpr out;
    out.basis = SymBasis::m;
    if (f.basis == SymBasis::m) {
        out.terms = f.terms;
        return out;
    }
    for (const auto& [lambda, c] : f.terms) {
        const auto& t = transition(f.basis, lambda.size());
        const auto row = index_of(t.order, lambda);
        for (std::size_t j = 0; j < t.order.size(); ++j) {
            out.terms.add(t.order[j], c * t.to_m[row][j]);
        }
    }
    return out;
}

SymExpr sym_convert(const SymExpr& f, SymBasis target)
{
    if (f.basis == target) {
        return f;
    }
    const SymExpr m = sym_to_m(f);
    if (target == SymBasis::m) {
        return m;
    }
    SymExpr out;
    out.basis = target;
    for (const auto& [lambda, c] : m.terms) {
        const auto& t = transition(target, lambda.size());
        const auto row = index_of(t.order, lambda);
        for (std::size_t j = 0; j < t.order.size(); ++j) {
            out.terms.add(t.order[j], c * t.from_m[row][j]);
        }
    }
    return out;
}

SymExpr sym_product(const SymExpr& f, const SymExpr& g)
{
    const SymBasis mult = (f.basis == SymBasis::p || f.basis == SymBasis::e || f.basis == SymBasis::h)
                              ? f.basis
                              : SymBasis::h;
    const SymExpr a = sym_convert(f, mult);
    const SymExpr b = sym_convert(g, mult);
    SymExpr out;
    out.basis = mult;
    for (const auto& [lambda, x] : a.terms) {
        for (const auto& [mu, y] : b.terms) {
            out.terms.add(union_of(lambda, mu), x * y);
        }
    }
    return sym_convert(out, f.basis);
}

SymExpr sym_omega(const SymExpr& f)
{
    SymExpr out;
    out.basis = f.basis;
    switch (f.basis) {
    case SymBasis::h:
    case SymBasis::e:
        out.terms = f.terms;
        out.basis = f.basis == SymBasis::h ? SymBasis::e : SymBasis::h;
        return sym_convert(out, f.basis);
    case SymBasis::p:
        for (const auto& [lambda, c] : f.terms) {
            out.terms.add(lambda, (lambda.size() - lambda.length()) % 2 == 0 ? c : Rational(-c));
        }
        return out;
    case SymBasis::s:
        for (const auto& [lambda, c] : f.terms) {
            out.terms.add(transpose(lambda), c);
        }
        return out;
    case SymBasis::m:
        return sym_convert(sym_omega(sym_convert(f, SymBasis::h)), SymBasis::m);
    }
    throw internal_error("unknown Sym basis");
}

SymExpr jacobi_trudi(const SkewShape& shape, JTFlavor flavor)
{
    const IntegerPartition lambda = flavor == JTFlavor::h ? shape.outer() : transpose(shape.outer());
    const IntegerPartition mu = flavor == JTFlavor::h ? shape.inner() : transpose(shape.inner());
    const int l = lambda.length();
    SymExpr out;
    out.basis = flavor == JTFlavor::h ? SymBasis::h : SymBasis::e;
    if (l == 0) {
        out.terms.add(IntegerPartition{}, 1);
        return out;
    }
    for (const auto& eps : enumerate_permutations(l)) {
        std::vector<int> parts;
        bool dead = false;
        for (int i = 0; i < l && !dead; ++i) {
            const int j = eps(i + 1) - 1;
            const int c = lambda.part(i) - mu.part(j) - i + j;
            if (c < 0) {
                dead = true;
            } else {
                parts.push_back(c);
            }
        }
        if (!dead) {
            out.terms.add(IntegerPartition::from_parts(std::move(parts)), eps.sign());
        }
    }
    return out;
}

SymExpr skew_schur(const SkewShape& shape, SymBasis target)
{
    return sym_convert(jacobi_trudi(shape, JTFlavor::h), target);
}

Integer littlewood_richardson(const IntegerPartition& lambda, const IntegerPartition& mu, const IntegerPartition& nu)
{
    if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) {
        return 0;
    }
    const Rational c = skew_schur(SkewShape(lambda, mu)).terms.coefficient(nu);
    if (c.get_den() != 1) {
        throw internal_error("non-integral Littlewood-Richardson coefficient");
    }
    return c.get_num();
}

CPolynomial sym_truncate(const SymExpr& f, int k)
{
    CPolynomial out(k);
    for (const auto& [lambda, c] : sym_to_m(f).terms) {
        if (lambda.length() > k) {
            continue;
        }
        std::vector<int> exps = lambda.parts();
        exps.resize(static_cast<std::size_t>(k), 0);
        std::sort(exps.begin(), exps.end());
        do {
            out.add(exps, c);
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return out;
}

} // namespace ncsym
