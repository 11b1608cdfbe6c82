#include <ncsym/ncsym_core.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include <ncsym/errors.hpp>
#include <ncsym/ncschur.hpp>

namespace ncsym {

NCSymExpr NCSymExpr::single(Basis basis, const SetPartition& pi, const Rational& coeff)
{
    NCSymExpr f;
    f.basis = basis;
    f.terms.add(pi, coeff);
    return f;
}

int NCSymExpr::degree() const
{
    if (terms.empty()) {
        return -1;
    }
    const int n = terms.begin()->first.size();
    if (std::prev(terms.end())->first.size() != n) {
        throw std::invalid_argument("expression is not homogeneous");
    }
    return n;
}

namespace {

void require_same_basis(Basis a, Basis b)
{
    if (a != b) {
        throw basis_mismatch("NCSym bases differ: " + basis_name(a) + " vs " + basis_name(b));
    }
}

bool is_multiplicative(Basis b) { return b == Basis::p || b == Basis::e || b == Basis::h; }
bool is_schur_type(Basis b) { return b == Basis::s || b == Basis::st || b == Basis::tabloid; }

const std::vector<SetPartition>& all_set_partitions(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<SetPartition>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, enumerate_set_partitions(n)).first;
    }
    return it->second;
}

// All sigma >= pi, each with the Moebius value mu(pi, sigma).
std::vector<std::pair<SetPartition, Integer>> coarsenings_with_moebius(const SetPartition& pi)
{
    std::vector<std::pair<SetPartition, Integer>> out;
    for (const auto& grouping : all_set_partitions(pi.length())) {
        std::vector<std::vector<int>> blocks;
        Integer mu = 1;
        for (const auto& group : grouping.blocks()) {
            std::vector<int> merged;
            for (int b : group) {
                const auto& block = pi.blocks()[static_cast<std::size_t>(b - 1)];
                merged.insert(merged.end(), block.begin(), block.end());
            }
            blocks.push_back(std::move(merged));
            const int k = static_cast<int>(group.size());
            mu *= factorial(k - 1);
            if (k % 2 == 0) {
                mu = -mu;
            }
        }
        out.emplace_back(SetPartition(std::move(blocks)), mu);
    }
    return out;
}

// All rho <= pi, each with mu(0, rho).
std::vector<std::pair<SetPartition, Integer>> refinements_with_moebius(const SetPartition& pi)
{
    std::vector<std::pair<SetPartition, Integer>> out;
    std::vector<std::vector<int>> current;
    std::function<void(std::size_t, Integer)> rec = [&](std::size_t b, Integer mu) {
        if (b == pi.blocks().size()) {
            out.emplace_back(SetPartition(current), mu);
            return;
        }
        const auto& block = pi.blocks()[b];
        for (const auto& split : all_set_partitions(static_cast<int>(block.size()))) {
            Integer local = mu;
            const auto mark = current.size();
            for (const auto& part : split.blocks()) {
                std::vector<int> mapped;
                for (int e : part) {
                    mapped.push_back(block[static_cast<std::size_t>(e - 1)]);
                }
                current.push_back(std::move(mapped));
                local *= factorial(static_cast<int>(part.size()) - 1);
                if (part.size() % 2 == 0) {
                    local = -local;
                }
            }
            rec(b + 1, local);
            current.resize(mark);
        }
    };
    rec(0, 1);
    return out;
}

Integer abs_moebius_from_bottom(const SetPartition& pi)
{
    Integer w = 1;
    for (const auto& b : pi.blocks()) {
        w *= factorial(static_cast<int>(b.size()) - 1);
    }
    return w;
}

Integer moebius_from_bottom(const SetPartition& pi)
{
    return set_partition_sign(pi) * abs_moebius_from_bottom(pi);
}

NCSymExpr m_to_p(const NCSymExpr& f)
{
    NCSymExpr out;
    out.basis = Basis::p;
    for (const auto& [pi, c] : f.terms) {
        for (const auto& [sigma, mu] : coarsenings_with_moebius(pi)) {
            out.terms.add(sigma, c * mu);
        }
    }
    return out;
}

// Triangular solve of p-coordinates into h or e, coarsest index first.
NCSymExpr p_to_multiplicative(NCSymExpr a, Basis target)
{
    NCSymExpr out;
    out.basis = target;
    while (!a.terms.empty()) {
        auto best = a.terms.begin();
        for (auto it = a.terms.begin(); it != a.terms.end(); ++it) {
            if (it->first.length() < best->first.length()) {
                best = it;
            }
        }
        const SetPartition tau = best->first;
        const Integer lead = target == Basis::h ? abs_moebius_from_bottom(tau) : moebius_from_bottom(tau);
        const Rational c = best->second / lead;
        out.terms.add(tau, c);
        for (const auto& [rho, mu] : refinements_with_moebius(tau)) {
            const Integer w = target == Basis::h ? Integer(abs(mu)) : mu;
            a.terms.add(rho, -c * w);
        }
    }
    return out;
}

void add_block_words(const SetPartition& pi, int k, Basis b, WordCounts& counts)
{
    const int n = pi.size();
    const auto rgs = pi.restricted_growth();
    Word w(static_cast<std::size_t>(n), 0);
    std::vector<int> letter_of_block(static_cast<std::size_t>(pi.length()), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t blk) {
        if (blk == letter_of_block.size()) {
            for (int i = 0; i < n; ++i) {
                w[static_cast<std::size_t>(i)] = letter_of_block[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])];
            }
            ++counts[pack_word(w)];
            return;
        }
        for (int x = 1; x <= k; ++x) {
            if (b == Basis::m &&
                std::find(letter_of_block.begin(), letter_of_block.begin() + static_cast<long>(blk), x) !=
                    letter_of_block.begin() + static_cast<long>(blk)) {
                continue;
            }
            letter_of_block[blk] = x;
            rec(blk + 1);
        }
    };
    rec(0);
}

void add_e_words(const SetPartition& pi, int k, WordCounts& counts)
{
    const int n = pi.size();
    const auto rgs = pi.restricted_growth();
    Word w(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            ++counts[pack_word(w)];
            return;
        }
        for (int x = 1; x <= k; ++x) {
            bool clash = false;
            for (int j = 0; j < i && !clash; ++j) {
                clash = rgs[static_cast<std::size_t>(j)] == rgs[static_cast<std::size_t>(i)] &&
                        w[static_cast<std::size_t>(j)] == x;
            }
            if (clash) {
                continue;
            }
            w[static_cast<std::size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

// Block-fixing eta composed with tuples weakly increasing inside each block.
void add_h_words(const SetPartition& pi, int k, WordCounts& counts)
{
    const int n = pi.size();
    std::vector<Permutation> etas{Permutation::identity(n)};
    for (const auto& block : pi.blocks()) {
        std::vector<int> image = block;
        std::vector<Permutation> next;
        do {
            std::vector<int> im(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) {
                im[static_cast<std::size_t>(i - 1)] = i;
            }
            for (std::size_t t = 0; t < block.size(); ++t) {
                im[static_cast<std::size_t>(block[t] - 1)] = image[t];
            }
            const Permutation local(std::move(im));
            for (const auto& e : etas) {
                next.push_back(compose(local, e));
            }
        } while (std::next_permutation(image.begin(), image.end()));
        etas = std::move(next);
    }
    const auto rgs = pi.restricted_growth();
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    std::vector<int> last_in_block(static_cast<std::size_t>(pi.length()), 1);
    Word w(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            for (const auto& eta : etas) {
                for (int a = 1; a <= n; ++a) {
                    w[static_cast<std::size_t>(a - 1)] = tuple[static_cast<std::size_t>(eta(a) - 1)];
                }
                ++counts[pack_word(w)];
            }
            return;
        }
        const auto blk = static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)]);
        const int saved = last_in_block[blk];
        for (int x = saved; x <= k; ++x) {
            tuple[static_cast<std::size_t>(i)] = x;
            last_in_block[blk] = x;
            rec(i + 1);
        }
        last_in_block[blk] = saved;
    };
    rec(0);
}

} // namespace

NCSymExpr& NCSymExpr::operator+=(const NCSymExpr& other)
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

NCSymExpr& NCSymExpr::operator-=(const NCSymExpr& other)
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

NCSymExpr& NCSymExpr::operator*=(const Rational& s)
{
    terms *= s;
    return *this;
}

std::string basis_name(Basis b)
{
    switch (b) {
    case Basis::m: return "m";
    case Basis::p: return "p";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::st: return "st";
    case Basis::tabloid: return "tabloid";
    }
    return "?";
}

std::uint64_t pack_word(const Word& w)
{
    std::uint64_t code = 0;
    for (int letter : w) {
        code = (code << 4) | static_cast<std::uint64_t>(letter);
    }
    return code;
}

Word unpack_word(std::uint64_t code, int length)
{
    Word w(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(code & 15u);
        code >>= 4;
    }
    return w;
}

WordCounts oracle_counts(Basis b, const SetPartition& pi, int k)
{
    if (pi.size() > oracle_max_degree) {
        throw degree_guard_error("oracle expansion limited to degree " + std::to_string(oracle_max_degree) +
                                 ", got " + std::to_string(pi.size()));
    }
    if (k < 1 || k > 15) {
        throw degree_guard_error("oracle cutoff must lie in 1..15");
    }
    WordCounts counts;
    switch (b) {
    case Basis::m:
    case Basis::p:
        add_block_words(pi, k, b, counts);
        break;
    case Basis::e:
        add_e_words(pi, k, counts);
        break;
    case Basis::h:
        add_h_words(pi, k, counts);
        break;
    default:
        throw std::invalid_argument("oracle counts exist for m, p, e, h only");
    }
    return counts;
}

NCPolynomial oracle_expand(const NCSymExpr& f, int k)
{
    if (is_schur_type(f.basis)) {
        return oracle_expand(convert(f, Basis::h), k);
    }
    NCPolynomial out(k);
    for (const auto& [pi, c] : f.terms) {
        for (const auto& [code, count] : oracle_counts(f.basis, pi, k)) {
            out.add(unpack_word(code, pi.size()), c * Rational(static_cast<long>(count)));
        }
    }
    return out;
}

NCSymExpr to_m(const NCSymExpr& f)
{
    if (is_schur_type(f.basis)) {
        return to_m(convert(f, Basis::h));
    }
    NCSymExpr out;
    out.basis = Basis::m;
    if (f.basis == Basis::m) {
        out.terms = f.terms;
        return out;
    }
    for (const auto& [pi, c] : f.terms) {
        if (f.basis == Basis::p) {
            for (const auto& [sigma, mu] : coarsenings_with_moebius(pi)) {
                out.terms.add(sigma, c);
            }
            continue;
        }
        const SetPartition bottom = SetPartition::minimum(pi.size());
        for (const auto& sigma : all_set_partitions(pi.size())) {
            const SetPartition meet = set_partition_meet(sigma, pi);
            if (f.basis == Basis::e) {
                if (meet == bottom) {
                    out.terms.add(sigma, c);
                }
            } else {
                out.terms.add(sigma, c * factorial_product(meet.shape()));
            }
        }
    }
    return out;
}

NCSymExpr from_m(const NCSymExpr& f, Basis target)
{
    if (f.basis != Basis::m) {
        throw basis_mismatch("from_m expects an m-basis expression, got " + basis_name(f.basis));
    }
    switch (target) {
    case Basis::m:
        return f;
    case Basis::p:
        return m_to_p(f);
    case Basis::e:
    case Basis::h:
        return p_to_multiplicative(m_to_p(f), target);
    default:
        throw std::invalid_argument("from_m target must be one of m, p, e, h");
    }
}

NCSymExpr convert(const NCSymExpr& f, Basis target)
{
    if (f.basis == target) {
        return f;
    }
    if (is_schur_type(f.basis)) {
        return convert(schur_to_h(f), target);
    }
    if (is_schur_type(target)) {
        return h_to_schur(convert(f, Basis::h), target);
    }
    return from_m(to_m(f), target);
}

NCSymExpr product(const NCSymExpr& f, const NCSymExpr& g)
{
    const Basis mult = is_multiplicative(f.basis) ? f.basis : Basis::h;
    const NCSymExpr a = convert(f, mult);
    const NCSymExpr b = convert(g, mult);
    NCSymExpr out;
    out.basis = mult;
    for (const auto& [pi, x] : a.terms) {
        for (const auto& [sigma, y] : b.terms) {
            out.terms.add(slash_product(pi, sigma), x * y);
        }
    }
    return convert(out, f.basis);
}

NCSymExpr omega(const NCSymExpr& f)
{
    NCSymExpr out;
    switch (f.basis) {
    case Basis::h:
    case Basis::e:
    case Basis::s:
    case Basis::st:
        out.terms = f.terms;
        out.basis = f.basis == Basis::h ? Basis::e
                  : f.basis == Basis::e ? Basis::h
                  : f.basis == Basis::s ? Basis::st
                                        : Basis::s;
        return out;
    case Basis::p:
        out.basis = Basis::p;
        for (const auto& [pi, c] : f.terms) {
            out.terms.add(pi, set_partition_sign(pi) * c);
        }
        return out;
    case Basis::m:
    case Basis::tabloid:
        return convert(omega(convert(f, Basis::h)), f.basis);
    }
    throw internal_error("unknown NCSym basis");
}

NCSymExpr delta_action(const Permutation& delta, const NCSymExpr& f)
{
    if (is_schur_type(f.basis)) {
        return delta_action(delta, convert(f, Basis::h));
    }
    NCSymExpr out;
    out.basis = f.basis;
    out.terms = f.terms.transform_keys([&](const SetPartition& pi) { return permute_set_partition(delta, pi); });
    return out;
}

SymExpr rho(const NCSymExpr& f)
{
    if (is_schur_type(f.basis)) {
        return rho(convert(f, Basis::h));
    }
    SymExpr out;
    switch (f.basis) {
    case Basis::m: out.basis = SymBasis::m; break;
    case Basis::p: out.basis = SymBasis::p; break;
    case Basis::e: out.basis = SymBasis::e; break;
    default: out.basis = SymBasis::h; break;
    }
    for (const auto& [pi, c] : f.terms) {
        const IntegerPartition& lambda = pi.shape();
        switch (f.basis) {
        case Basis::m:
            out.terms.add(lambda, c * multiplicity_factorial(lambda));
            break;
        case Basis::p:
            out.terms.add(lambda, c);
            break;
        default:
            out.terms.add(lambda, c * factorial_product(lambda));
            break;
        }
    }
    return out;
}

SetPartition standardize(std::vector<std::vector<int>> blocks)
{
    std::vector<int> all;
    for (const auto& b : blocks) {
        all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    for (auto& b : blocks) {
        for (int& e : b) {
            e = static_cast<int>(std::lower_bound(all.begin(), all.end(), e) - all.begin()) + 1;
        }
    }
    return SetPartition(std::move(blocks));
}

NCTensor coproduct(const NCSymExpr& f, int i)
{
    NCTensor out;
    for (const auto& [pi, c] : to_m(f).terms) {
        if (i < 0 || i > pi.size()) {
            throw std::invalid_argument("coproduct bidegree outside 0..n");
        }
        const auto l = static_cast<unsigned>(pi.length());
        for (unsigned mask = 0; mask < (1u << l); ++mask) {
            std::vector<std::vector<int>> left;
            std::vector<std::vector<int>> right;
            int left_size = 0;
            for (unsigned b = 0; b < l; ++b) {
                const auto& block = pi.blocks()[b];
                if (mask & (1u << b)) {
                    left.push_back(block);
                    left_size += static_cast<int>(block.size());
                } else {
                    right.push_back(block);
                }
            }
            if (left_size == i) {
                out.add({standardize(std::move(left)), standardize(std::move(right))}, c);
            }
        }
    }
    return out;
}

NCTensor tensor_product(const NCSymExpr& a, const NCSymExpr& b)
{
    NCTensor out;
    const NCSymExpr am = to_m(a);
    const NCSymExpr bm = to_m(b);
    for (const auto& [pi, x] : am.terms) {
        for (const auto& [sigma, y] : bm.terms) {
            out.add({pi, sigma}, x * y);
        }
    }
    return out;
}

} // namespace ncsym
