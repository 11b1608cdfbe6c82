#include <ncsym/ncschur.hpp>

#include <functional>
#include <map>
#include <mutex>

#include <ncsym/errors.hpp>
#include <ncsym/sym.hpp>

namespace ncsym {

namespace {

template <typename Key, typename Compare = std::less<Key>>
class Memo {
public:
    template <typename F>
    NCSymExpr get(const Key& key, F&& compute)
    {
        {
            std::lock_guard lock(mutex_);
            auto it = values_.find(key);
            if (it != values_.end()) {
                return it->second;
            }
        }
        NCSymExpr value = compute();
        std::lock_guard lock(mutex_);
        return values_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, NCSymExpr, Compare> values_;
};

NCSymExpr generator(Basis b, int c)
{
    return NCSymExpr::single(b, canonical_partition(Composition(std::vector<int>(c > 0 ? 1 : 0, c))),
                             Rational(1) / Rational(factorial(c)));
}

NCSymExpr jt_determinant(const SkewShape& shape, Basis b)
{
    const int l = shape.rows();
    std::vector<std::vector<NCSymExpr>> grid(static_cast<std::size_t>(l),
                                             std::vector<NCSymExpr>(static_cast<std::size_t>(l)));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            const int c = shape.outer().part(i) - shape.inner().part(j) - i + j;
            if (c >= 0) {
                grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = generator(b, c);
            }
        }
    }
    if (l == 0) {
        return NCSymExpr::one(b);
    }
    return nc_determinant(grid);
}

// Reduce f against a triangular family whose element for sigma has its
// smallest term at sigma.
NCSymExpr triangular_reduce(NCSymExpr f, Basis target, const std::function<NCSymExpr(const SetPartition&)>& element)
{
    NCSymExpr out;
    out.basis = target;
    while (!f.is_zero()) {
        const SetPartition sigma = f.terms.begin()->first;
        const Rational a = f.terms.begin()->second;
        const NCSymExpr b = element(sigma);
        if (b.is_zero() || !(b.terms.begin()->first == sigma)) {
            throw internal_error("Schur transition is not triangular at " + std::to_string(sigma.size()));
        }
        const Rational c = a / b.terms.begin()->second;
        out.terms.add(sigma, c);
        f -= c * b;
    }
    return out;
}

} // namespace

NCSymExpr nc_determinant(const std::vector<std::vector<NCSymExpr>>& grid)
{
    const std::size_t l = grid.size();
    Basis b = Basis::h;
    for (const auto& row : grid) {
        for (const auto& entry : row) {
            if (!entry.is_zero()) {
                b = entry.basis;
            }
        }
    }
    NCSymExpr det;
    det.basis = b;
    std::vector<char> used(l, 0);
    std::function<void(std::size_t, const NCSymExpr&, int)> rec = [&](std::size_t row, const NCSymExpr& acc,
                                                                       int sign) {
        if (row == l) {
            det += Rational(sign) * acc;
            return;
        }
        int larger_used = 0;
        for (std::size_t c = l; c-- > 0;) {
            if (used[c]) {
                ++larger_used;
                continue;
            }
            const NCSymExpr& entry = grid[row][c];
            if (entry.is_zero()) {
                continue;
            }
            used[c] = 1;
            rec(row + 1, product(acc, entry), larger_used % 2 == 0 ? sign : -sign);
            used[c] = 0;
        }
    };
    rec(0, NCSymExpr::one(b), 1);
    return det;
}

NCSymExpr source_skew_schur(const SkewShape& shape)
{
    static Memo<SkewShape> memo;
    return memo.get(shape, [&] { return jt_determinant(shape, Basis::h); });
}

NCSymExpr source_skew_schur_e(const SkewShape& shape) { return jt_determinant(shape, Basis::e); }

NCSymExpr skew_schur_nc(const Permutation& delta, const SkewShape& shape)
{
    if (delta.size() != shape.size()) {
        throw size_mismatch("permutation of size " + std::to_string(delta.size()) + " with a shape of size " +
                            std::to_string(shape.size()));
    }
    return delta_action(delta, source_skew_schur(shape));
}

NCSymExpr standard_schur(const SetPartition& pi)
{
    static Memo<SetPartition> memo;
    return memo.get(pi, [&] { return skew_schur_nc(delta_pi(pi).delta, SkewShape(pi.shape())); });
}

NCSymExpr transposed_schur(const SetPartition& pi)
{
    static Memo<SetPartition> memo;
    return memo.get(pi, [&] { return delta_action(delta_pi(pi).delta, source_skew_schur_e(SkewShape(pi.shape()))); });
}

NCSymExpr tabloid_schur(const YoungTableau& t)
{
    const NCSymExpr base = source_skew_schur(t.shape());
    NCSymExpr out;
    out.basis = Basis::h;
    for (const auto& member : row_equivalence_class(t)) {
        out += delta_action(member.reading_word(), base);
    }
    return out;
}

NCSymExpr tabloid_schur(const SetPartition& pi)
{
    static Memo<SetPartition> memo;
    return memo.get(pi, [&] { return tabloid_schur(delta_pi(pi).tableau); });
}

NCSymExpr schur_to_h(const NCSymExpr& f)
{
    NCSymExpr out;
    out.basis = Basis::h;
    for (const auto& [pi, c] : f.terms) {
        switch (f.basis) {
        case Basis::s:
            out += c * standard_schur(pi);
            break;
        case Basis::st:
            out += c * convert(transposed_schur(pi), Basis::h);
            break;
        case Basis::tabloid:
            out += c * tabloid_schur(pi);
            break;
        default:
            throw basis_mismatch("schur_to_h expects s, st or tabloid, got " + basis_name(f.basis));
        }
    }
    return out;
}

NCSymExpr h_to_schur(const NCSymExpr& f, Basis target)
{
    if (f.basis != Basis::h) {
        return h_to_schur(convert(f, Basis::h), target);
    }
    switch (target) {
    case Basis::s:
        return triangular_reduce(f, target, [](const SetPartition& p) { return standard_schur(p); });
    case Basis::st:
        return triangular_reduce(convert(f, Basis::e), target,
                                 [](const SetPartition& p) { return transposed_schur(p); });
    case Basis::tabloid:
        return triangular_reduce(f, target, [](const SetPartition& p) { return tabloid_schur(p); });
    default:
        throw std::invalid_argument("h_to_schur target must be s, st or tabloid");
    }
}

SchurTransition schur_transition(int n)
{
    SchurTransition t;
    t.order = enumerate_set_partitions(n);
    std::sort(t.order.begin(), t.order.end(), BasisOrderLess{});
    const auto size = t.order.size();
    std::map<SetPartition, std::size_t> position;
    for (std::size_t i = 0; i < size; ++i) {
        position[t.order[i]] = i;
    }
    t.matrix.assign(size, std::vector<Rational>(size, 0));
    Matrix normalized = t.matrix;
    for (std::size_t i = 0; i < size; ++i) {
        for (const auto& [sigma, c] : standard_schur(t.order[i]).terms) {
            const auto j = position.at(sigma);
            t.matrix[i][j] = c;
            normalized[i][j] = c * factorial_product(sigma.shape());
        }
        t.raw_diagonal.push_back(t.matrix[i][i]);
    }
    t.upper_triangular = is_upper_triangular(t.matrix);
    t.normalized_determinant = determinant(normalized);
    return t;
}

SchurProduct schur_product(const Permutation& delta, const IntegerPartition& lambda, const Permutation& eta,
                           const IntegerPartition& mu)
{
    SchurProduct out;
    out.expanded = product(skew_schur_nc(delta, SkewShape(lambda)), skew_schur_nc(eta, SkewShape(mu)));
    out.delta = shifted_concat(delta, eta);
    out.concat_shape = shape_concat(lambda, mu, ConcatMode::concat);
    out.structured = skew_schur_nc(out.delta, out.concat_shape);
    out.has_near = !lambda.empty() && !mu.empty();
    if (out.has_near) {
        out.near_shape = shape_concat(lambda, mu, ConcatMode::near_concat);
        out.structured += skew_schur_nc(out.delta, out.near_shape);
    }
    out.holds = out.expanded == out.structured;
    return out;
}

SchurProduct schur_product(const SetPartition& pi, const SetPartition& sigma)
{
    SchurProduct out = schur_product(delta_pi(pi).delta, pi.shape(), delta_pi(sigma).delta, sigma.shape());
    // The left side is s_pi s_sigma itself.
    out.expanded = product(standard_schur(pi), standard_schur(sigma));
    out.holds = out.expanded == out.structured;
    return out;
}

std::vector<NCSymExpr> permuted_basis(const Permutation& delta, int n)
{
    std::vector<NCSymExpr> out;
    for (const auto& pi : enumerate_set_partitions(n)) {
        out.push_back(delta_action(delta, standard_schur(pi)));
    }
    return out;
}

int rank_in_h(const std::vector<NCSymExpr>& family)
{
    std::map<SetPartition, std::size_t> column;
    std::vector<NCSymExpr> hs;
    for (const auto& f : family) {
        hs.push_back(convert(f, Basis::h));
        for (const auto& [pi, c] : hs.back().terms) {
            column.emplace(pi, 0);
        }
    }
    std::size_t next = 0;
    for (auto& [pi, j] : column) {
        j = next++;
    }
    Matrix m(hs.size(), std::vector<Rational>(column.size(), 0));
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (const auto& [pi, c] : hs[i].terms) {
            m[i][column.at(pi)] = c;
        }
    }
    return rank(std::move(m));
}

NCSymExpr specht_vector(const YoungTableau& t)
{
    const NCSymExpr base = tabloid_schur(t);
    NCSymExpr out;
    out.basis = Basis::h;
    for (const auto& delta : column_stabilizer(t)) {
        out += Rational(delta.sign()) * delta_action(delta, base);
    }
    return out;
}

int specht_rank(const IntegerPartition& lambda)
{
    std::vector<NCSymExpr> vectors;
    for (const auto& t : enumerate_young_tableaux(SkewShape(lambda))) {
        vectors.push_back(specht_vector(t));
    }
    return rank_in_h(vectors);
}

NCSymExpr rosas_sagan(const SkewShape& shape)
{
    const int n = shape.size();
    std::map<IntegerPartition, Rational> weight;
    for (const auto& nu : enumerate_partitions(n)) {
        weight[nu] = Rational(factorial_product(nu) * kostka(shape, nu));
    }
    NCSymExpr out;
    out.basis = Basis::m;
    for (const auto& pi : enumerate_set_partitions(n)) {
        out.terms.add(pi, weight.at(pi.shape()));
    }
    return out;
}

NCSymExpr sum_over_delta(const SkewShape& shape)
{
    const NCSymExpr base = source_skew_schur(shape);
    NCSymExpr sum;
    sum.basis = Basis::h;
    for (const auto& delta : enumerate_permutations(shape.size())) {
        sum += delta_action(delta, base);
    }
    return to_m(sum);
}

bool rs_refinement_check(const SkewShape& shape) { return sum_over_delta(shape) == rosas_sagan(shape); }

LRExpansion rs_lr_expand(const SkewShape& shape)
{
    LRExpansion out;
    NCSymExpr rhs;
    rhs.basis = Basis::m;
    for (const auto& nu : enumerate_partitions(shape.size())) {
        const Integer c = littlewood_richardson(shape.outer(), shape.inner(), nu);
        if (c != 0) {
            out.terms.emplace_back(nu, c);
            rhs += Rational(c) * rosas_sagan(SkewShape(nu));
        }
    }
    out.holds = rhs == rosas_sagan(shape);
    return out;
}

CoproductCheck rs_coproduct_check(const IntegerPartition& lambda, int i)
{
    CoproductCheck out;
    const int n = lambda.size();
    out.lhs = coproduct(rosas_sagan(SkewShape(lambda)), i);
    for (const auto& mu : enumerate_partitions(i)) {
        if (!lambda.contains(mu)) {
            continue;
        }
        out.rhs += tensor_product(rosas_sagan(SkewShape(mu)), rosas_sagan(SkewShape(lambda, mu)));
    }
    out.rhs *= Rational(binomial(n, i));
    out.holds = out.lhs == out.rhs;
    return out;
}

RibbonSource ribbon_source(const Composition& alpha)
{
    RibbonSource out;
    out.from_coarsenings.basis = Basis::h;
    for (const auto& beta : coarsenings(alpha)) {
        const int sign = (alpha.length() + beta.length()) % 2 == 0 ? 1 : -1;
        out.from_coarsenings.terms.add(canonical_partition(beta), Rational(sign) / Rational(factorial_product(beta)));
    }
    out.from_determinant = source_skew_schur(ribbon_shape(alpha));
    out.agree = out.from_coarsenings == out.from_determinant;
    return out;
}

} // namespace ncsym
