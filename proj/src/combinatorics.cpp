#include <ncsym/combinatorics.hpp>

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include <ncsym/errors.hpp>

namespace ncsym {

// ---------------------------------------------------------------- partitions

IntegerPartition::IntegerPartition(std::initializer_list<int> parts)
    : IntegerPartition(std::vector<int>(parts)) {}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("integer partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("integer partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntegerPartition IntegerPartition::from_parts(std::vector<int> parts)
{
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
        throw std::invalid_argument("negative part");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return IntegerPartition(std::move(parts));
}

bool IntegerPartition::contains(const IntegerPartition& inner) const
{
    if (inner.length() > length()) {
        return false;
    }
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.part(i) > part(i)) {
            return false;
        }
    }
    return true;
}

Integer factorial_product(const IntegerPartition& lambda)
{
    Integer r = 1;
    for (int p : lambda.parts()) {
        r *= factorial(p);
    }
    return r;
}

Integer multiplicity_factorial(const IntegerPartition& lambda)
{
    Integer r = 1;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        r *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return r;
}

IntegerPartition transpose(const IntegerPartition& lambda)
{
    std::vector<int> t;
    for (int c = 0; c < lambda.part(0); ++c) {
        int h = 0;
        while (h < lambda.length() && lambda.part(h) > c) {
            ++h;
        }
        t.push_back(h);
    }
    return IntegerPartition(std::move(t));
}

PartitionStats partition_stats(const IntegerPartition& lambda)
{
    return {factorial_product(lambda), multiplicity_factorial(lambda), transpose(lambda)};
}

bool PartitionOrderLess::operator()(const IntegerPartition& a, const IntegerPartition& b) const
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.parts() < b.parts();
}

// -------------------------------------------------------------- compositions

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 1; })) {
        throw std::invalid_argument("composition parts must be positive");
    }
}

int Composition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool CompositionOrderLess::operator()(const Composition& a, const Composition& b) const
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.parts() < b.parts();
}

IntegerPartition sorted_partition(const Composition& alpha) { return IntegerPartition::from_parts(alpha.parts()); }

Integer factorial_product(const Composition& alpha)
{
    Integer r = 1;
    for (int p : alpha.parts()) {
        r *= factorial(p);
    }
    return r;
}

Composition concat(const Composition& alpha, const Composition& beta)
{
    std::vector<int> parts = alpha.parts();
    parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& alpha, const Composition& beta)
{
    if (alpha.empty() || beta.empty()) {
        throw std::invalid_argument("near concatenation needs nonempty compositions");
    }
    std::vector<int> parts = alpha.parts();
    parts.back() += beta.parts().front();
    parts.insert(parts.end(), beta.parts().begin() + 1, beta.parts().end());
    return Composition(std::move(parts));
}

std::vector<Composition> coarsenings(const Composition& alpha)
{
    // Bit g of mask set means the gap after part g is merged.
    const int gaps = std::max(alpha.length() - 1, 0);
    std::vector<Composition> out;
    for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        std::vector<int> parts;
        int current = 0;
        for (int i = 0; i < alpha.length(); ++i) {
            current += alpha.parts()[static_cast<std::size_t>(i)];
            if (i == alpha.length() - 1 || !(mask & (1u << i))) {
                parts.push_back(current);
                current = 0;
            }
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

bool is_coarsening(const Composition& coarse, const Composition& fine)
{
    if (coarse.size() != fine.size()) {
        return false;
    }
    std::set<int> cuts_fine;
    int s = 0;
    for (int p : fine.parts()) {
        cuts_fine.insert(s += p);
    }
    s = 0;
    for (int p : coarse.parts()) {
        if (!cuts_fine.count(s += p)) {
            return false;
        }
    }
    return true;
}

WeakComposition::WeakComposition(std::initializer_list<int> parts)
    : WeakComposition(std::vector<int>(parts)) {}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 0; })) {
        throw std::invalid_argument("weak composition parts must be nonnegative");
    }
}

int WeakComposition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Integer factorial_product(const WeakComposition& alpha)
{
    Integer r = 1;
    for (int p : alpha.parts()) {
        r *= factorial(p);
    }
    return r;
}

// --------------------------------------------------------------- skew shapes

SkewShape::SkewShape(IntegerPartition outer, IntegerPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner))
{
    if (!outer_.contains(inner_)) {
        throw std::invalid_argument("inner partition is not contained in the outer partition");
    }
}

bool SkewShape::has_box(int row, int col) const noexcept
{
    return row >= 0 && row < rows() && col >= row_start(row) && col < row_end(row);
}

SkewShape shape_concat(const IntegerPartition& lambda, const IntegerPartition& mu, ConcatMode mode)
{
    if (mode == ConcatMode::near_concat) {
        if (lambda.empty() || mu.empty()) {
            throw std::invalid_argument("near concatenation needs nonempty partitions");
        }
        std::vector<int> outer;
        std::vector<int> inner;
        const int shift = mu.part(0);
        for (int i = 0; i < lambda.length(); ++i) {
            outer.push_back(lambda.part(i) + shift);
            if (i + 1 < lambda.length()) {
                inner.push_back(shift);
            }
        }
        for (int i = 1; i < mu.length(); ++i) {
            outer.push_back(mu.part(i));
        }
        return SkewShape(IntegerPartition(std::move(outer)), IntegerPartition(std::move(inner)));
    }
    if (mu.empty()) {
        return SkewShape(lambda);
    }
    if (lambda.empty()) {
        return SkewShape(mu);
    }
    std::vector<int> outer;
    std::vector<int> inner;
    const int shift = mu.part(0) - 1;
    for (int p : lambda.parts()) {
        outer.push_back(p + shift);
        if (shift > 0) {
            inner.push_back(shift);
        }
    }
    outer.insert(outer.end(), mu.parts().begin(), mu.parts().end());
    return SkewShape(IntegerPartition(std::move(outer)), IntegerPartition(std::move(inner)));
}

SkewShape ribbon_shape(const Composition& alpha)
{
    const int l = alpha.length();
    std::vector<int> outer(static_cast<std::size_t>(l));
    int suffix = 0;
    for (int i = l - 1; i >= 0; --i) {
        suffix += alpha.parts()[static_cast<std::size_t>(i)];
        outer[static_cast<std::size_t>(i)] = suffix - (l - 1 - i);
    }
    std::vector<int> inner;
    for (int i = 0; i + 1 < l; ++i) {
        inner.push_back(outer[static_cast<std::size_t>(i + 1)] - 1);
    }
    return SkewShape(IntegerPartition(std::move(outer)), IntegerPartition::from_parts(std::move(inner)));
}

namespace {

void partitions_bounded(int n, int max_part, std::vector<int>& current, std::vector<IntegerPartition>& out)
{
    if (n == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_bounded(n - p, p, current, out);
        current.pop_back();
    }
}

std::vector<IntegerPartition> partitions_in_box(int rows, int cols, int total)
{
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == rows) {
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(total, cols);
    return out;
}

} // namespace

std::vector<SkewShape> enumerate_skew_shapes(int n)
{
    // Shapes with no empty row and no empty column, which is finite.
    std::vector<SkewShape> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (int outer_size = n; outer_size <= n * n; ++outer_size) {
        for (const auto& lambda : partitions_in_box(n, n, outer_size)) {
            for (const auto& mu : partitions_in_box(lambda.length(), lambda.part(0), outer_size - n)) {
                if (!lambda.contains(mu)) {
                    continue;
                }
                SkewShape shape(lambda, mu);
                bool ok = true;
                for (int r = 0; r < shape.rows() && ok; ++r) {
                    ok = shape.row_length(r) > 0;
                }
                for (int c = 0; c < lambda.part(0) && ok; ++c) {
                    bool any = false;
                    for (int r = 0; r < shape.rows() && !any; ++r) {
                        any = shape.has_box(r, c);
                    }
                    ok = any;
                }
                if (ok) {
                    out.push_back(std::move(shape));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------ set partitions

SetPartition::SetPartition(std::vector<std::vector<int>> blocks)
{
    int n = 0;
    for (auto& b : blocks) {
        if (b.empty()) {
            throw std::invalid_argument("set partition blocks must be nonempty");
        }
        std::sort(b.begin(), b.end());
        n += static_cast<int>(b.size());
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& b : blocks) {
        for (int e : b) {
            if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]) {
                throw std::invalid_argument("set partition blocks must partition {1..n}");
            }
            seen[static_cast<std::size_t>(e)] = 1;
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    n_ = n;
    blocks_ = std::move(blocks);
    std::vector<int> sizes;
    for (const auto& b : blocks_) {
        sizes.push_back(static_cast<int>(b.size()));
    }
    shape_ = IntegerPartition::from_parts(std::move(sizes));
}

SetPartition SetPartition::from_restricted_growth(const std::vector<int>& rgs)
{
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        const auto b = static_cast<std::size_t>(rgs[i]);
        if (b > blocks.size()) {
            throw std::invalid_argument("not a restricted growth string");
        }
        if (b == blocks.size()) {
            blocks.emplace_back();
        }
        blocks[b].push_back(static_cast<int>(i) + 1);
    }
    return SetPartition(std::move(blocks));
}

SetPartition SetPartition::minimum(int n)
{
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) {
        blocks.push_back({i});
    }
    return SetPartition(std::move(blocks));
}

SetPartition SetPartition::maximum(int n)
{
    if (n == 0) {
        return {};
    }
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return SetPartition({all});
}

std::vector<int> SetPartition::restricted_growth() const
{
    std::vector<int> rgs(static_cast<std::size_t>(n_));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int e : blocks_[b]) {
            rgs[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
        }
    }
    return rgs;
}

bool BasisOrderLess::operator()(const SetPartition& a, const SetPartition& b) const
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    if (a.shape() != b.shape()) {
        return a.shape().parts() < b.shape().parts();
    }
    return a.blocks() < b.blocks();
}

namespace {

void require_same_size(const SetPartition& a, const SetPartition& b)
{
    if (a.size() != b.size()) {
        throw size_mismatch("set partitions of different sizes: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
    }
}

} // namespace

SetPartition set_partition_meet(const SetPartition& pi, const SetPartition& sigma)
{
    require_same_size(pi, sigma);
    std::vector<std::vector<int>> blocks;
    for (const auto& a : pi.blocks()) {
        for (const auto& b : sigma.blocks()) {
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty()) {
                blocks.push_back(std::move(common));
            }
        }
    }
    return SetPartition(std::move(blocks));
}

bool refinement_leq(const SetPartition& pi, const SetPartition& sigma)
{
    require_same_size(pi, sigma);
    const auto rgs = sigma.restricted_growth();
    for (const auto& b : pi.blocks()) {
        const int target = rgs[static_cast<std::size_t>(b.front() - 1)];
        for (int e : b) {
            if (rgs[static_cast<std::size_t>(e - 1)] != target) {
                return false;
            }
        }
    }
    return true;
}

SetPartition slash_product(const SetPartition& pi, const SetPartition& sigma)
{
    auto blocks = pi.blocks();
    for (auto b : sigma.blocks()) {
        for (int& e : b) {
            e += pi.size();
        }
        blocks.push_back(std::move(b));
    }
    return SetPartition(std::move(blocks));
}

IntegerPartition shape_of(const SetPartition& pi) { return pi.shape(); }

SetPartition canonical_partition(const IntegerPartition& lambda)
{
    return canonical_partition(WeakComposition(lambda.parts()));
}

SetPartition canonical_partition(const Composition& alpha) { return canonical_partition(WeakComposition(alpha.parts())); }

SetPartition canonical_partition(const WeakComposition& alpha)
{
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int p : alpha.parts()) {
        if (p == 0) {
            continue;
        }
        std::vector<int> b(static_cast<std::size_t>(p));
        std::iota(b.begin(), b.end(), next);
        next += p;
        blocks.push_back(std::move(b));
    }
    return SetPartition(std::move(blocks));
}

SetPartition permute_set_partition(const Permutation& delta, const SetPartition& pi)
{
    if (delta.size() != pi.size()) {
        throw size_mismatch("permutation of size " + std::to_string(delta.size()) +
                            " acting on a set partition of size " + std::to_string(pi.size()));
    }
    auto blocks = pi.blocks();
    for (auto& b : blocks) {
        for (int& e : b) {
            e = delta(e);
        }
    }
    return SetPartition(std::move(blocks));
}

int set_partition_sign(const SetPartition& pi) { return (pi.size() - pi.length()) % 2 == 0 ? 1 : -1; }

// -------------------------------------------------------------- permutations

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

int Permutation::sign() const
{
    std::vector<char> visited(images_.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (visited[i]) {
            continue;
        }
        int len = 0;
        for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
            visited[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size()) {
        throw size_mismatch("composing permutations of different sizes");
    }
    std::vector<int> im(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) {
        im[static_cast<std::size_t>(i - 1)] = a(b(i));
    }
    return Permutation(std::move(im));
}

Permutation shifted_concat(const Permutation& delta, const Permutation& eta)
{
    std::vector<int> im = delta.images();
    for (int v : eta.images()) {
        im.push_back(v + delta.size());
    }
    return Permutation(std::move(im));
}

// ------------------------------------------------------------------ tableaux

namespace {

void check_rows_fit(const SkewShape& shape, const std::vector<std::vector<int>>& rows)
{
    if (static_cast<int>(rows.size()) != shape.rows()) {
        throw std::invalid_argument("tableau row count does not match its shape");
    }
    for (int r = 0; r < shape.rows(); ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != shape.row_length(r)) {
            throw std::invalid_argument("tableau row length does not match its shape");
        }
    }
}

} // namespace

YoungTableau::YoungTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
    check_rows_fit(shape_, rows_);
    std::vector<int> all;
    for (const auto& r : rows_) {
        all.insert(all.end(), r.begin(), r.end());
    }
    Permutation check(all); // throws unless a bijection onto 1..n
    (void)check;
}

Permutation YoungTableau::reading_word() const
{
    std::vector<int> word;
    for (const auto& r : rows_) {
        word.insert(word.end(), r.begin(), r.end());
    }
    return Permutation(std::move(word));
}

std::vector<std::vector<int>> YoungTableau::columns() const
{
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape_.outer().part(0)));
    for (int r = 0; r < shape_.rows(); ++r) {
        for (int c = shape_.row_start(r); c < shape_.row_end(r); ++c) {
            cols[static_cast<std::size_t>(c)].push_back(
                rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape_.row_start(r))]);
        }
    }
    std::erase_if(cols, [](const auto& c) { return c.empty(); });
    return cols;
}

SemistandardTableau::SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
    check_rows_fit(shape_, rows_);
    auto at = [&](int r, int c) {
        return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape_.row_start(r))];
    };
    for (int r = 0; r < shape_.rows(); ++r) {
        for (int c = shape_.row_start(r); c < shape_.row_end(r); ++c) {
            if (at(r, c) < 1) {
                throw std::invalid_argument("semistandard entries must be positive");
            }
            if (shape_.has_box(r, c - 1) && at(r, c - 1) > at(r, c)) {
                throw std::invalid_argument("semistandard rows must weakly increase");
            }
            if (shape_.has_box(r - 1, c) && at(r - 1, c) >= at(r, c)) {
                throw std::invalid_argument("semistandard columns must strictly increase");
            }
        }
    }
}

std::vector<int> SemistandardTableau::reading_contents() const
{
    std::vector<int> out;
    for (const auto& r : rows_) {
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<int> SemistandardTableau::content() const
{
    std::vector<int> out;
    for (const auto& r : rows_) {
        for (int v : r) {
            if (static_cast<int>(out.size()) < v) {
                out.resize(static_cast<std::size_t>(v), 0);
            }
            ++out[static_cast<std::size_t>(v - 1)];
        }
    }
    return out;
}

CanonicalTableau delta_pi(const SetPartition& pi)
{
    auto rows = pi.blocks();
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    YoungTableau t(SkewShape(pi.shape()), rows);
    Permutation delta = t.reading_word();
    return {std::move(t), std::move(delta)};
}

std::vector<YoungTableau> row_equivalence_class(const YoungTableau& t)
{
    std::vector<std::vector<std::vector<int>>> choices;
    for (auto row : t.rows()) {
        std::sort(row.begin(), row.end());
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(row);
        } while (std::next_permutation(row.begin(), row.end()));
        choices.push_back(std::move(perms));
    }
    std::vector<YoungTableau> out;
    std::vector<std::vector<int>> current(choices.size());
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == choices.size()) {
            out.emplace_back(t.shape(), current);
            return;
        }
        for (const auto& c : choices[r]) {
            current[r] = c;
            rec(r + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Permutation> column_stabilizer(const YoungTableau& t)
{
    if (!t.shape().is_straight()) {
        throw std::invalid_argument("column stabilizer needs a straight shape");
    }
    const int n = t.size();
    std::vector<Permutation> out{Permutation::identity(n)};
    for (const auto& col : t.columns()) {
        std::vector<int> sorted = col;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Permutation> next;
        std::vector<int> image = sorted;
        do {
            std::vector<int> im(static_cast<std::size_t>(n));
            std::iota(im.begin(), im.end(), 1);
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                im[static_cast<std::size_t>(sorted[i] - 1)] = image[i];
            }
            Permutation local(std::move(im));
            for (const auto& p : out) {
                next.push_back(compose(local, p));
            }
        } while (std::next_permutation(image.begin(), image.end()));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// -------------------------------------------------------------- enumerations

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit)
{
    for (const auto& p : enumerate_set_partitions(n)) {
        visit(p);
    }
}

std::vector<SetPartition> enumerate_set_partitions(int n)
{
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            out.push_back(SetPartition::from_restricted_growth(rgs));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_permutations(int n)
{
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<IntegerPartition> enumerate_partitions(int n)
{
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    partitions_bounded(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> enumerate_compositions(int n)
{
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    return coarsenings(Composition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

std::vector<YoungTableau> enumerate_young_tableaux(const SkewShape& shape)
{
    std::vector<YoungTableau> out;
    for (const auto& word : enumerate_permutations(shape.size())) {
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        for (int r = 0; r < shape.rows(); ++r) {
            const auto len = static_cast<std::size_t>(shape.row_length(r));
            rows.emplace_back(word.images().begin() + static_cast<long>(pos),
                              word.images().begin() + static_cast<long>(pos + len));
            pos += len;
        }
        out.emplace_back(shape, std::move(rows));
    }
    return out;
}

void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const SemistandardTableau&)>& visit)
{
    if (max_entry < 1) {
        throw std::invalid_argument("max entry must be at least 1");
    }
    std::vector<std::vector<int>> rows;
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < shape.rows(); ++r) {
        rows.emplace_back(static_cast<std::size_t>(shape.row_length(r)), 0);
        for (int c = shape.row_start(r); c < shape.row_end(r); ++c) {
            boxes.emplace_back(r, c);
        }
    }
    auto at = [&](int r, int c) -> int& {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape.row_start(r))];
    };
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == boxes.size()) {
            visit(SemistandardTableau(shape, rows));
            return;
        }
        const auto [r, c] = boxes[k];
        int lo = 1;
        if (shape.has_box(r, c - 1)) {
            lo = std::max(lo, at(r, c - 1));
        }
        if (shape.has_box(r - 1, c)) {
            lo = std::max(lo, at(r - 1, c) + 1);
        }
        for (int v = lo; v <= max_entry; ++v) {
            at(r, c) = v;
            rec(k + 1);
        }
    };
    rec(0);
}

std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry)
{
    std::vector<SemistandardTableau> out;
    for_each_ssyt(shape, max_entry, [&](const SemistandardTableau& t) { out.push_back(t); });
    return out;
}

Integer kostka(const SkewShape& shape, const IntegerPartition& content)
{
    if (shape.size() != content.size()) {
        return 0;
    }
    if (shape.size() == 0) {
        return 1;
    }
    // Fill in row reading order while tracking remaining multiplicities.
    std::vector<int> remaining = content.parts();
    const int k = content.length();
    std::vector<std::vector<int>> rows;
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < shape.rows(); ++r) {
        rows.emplace_back(static_cast<std::size_t>(shape.row_length(r)), 0);
        for (int c = shape.row_start(r); c < shape.row_end(r); ++c) {
            boxes.emplace_back(r, c);
        }
    }
    auto at = [&](int r, int c) -> int& {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape.row_start(r))];
    };
    Integer count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == boxes.size()) {
            ++count;
            return;
        }
        const auto [r, c] = boxes[idx];
        int lo = 1;
        if (shape.has_box(r, c - 1)) {
            lo = std::max(lo, at(r, c - 1));
        }
        if (shape.has_box(r - 1, c)) {
            lo = std::max(lo, at(r - 1, c) + 1);
        }
        for (int v = lo; v <= k; ++v) {
            auto& rem = remaining[static_cast<std::size_t>(v - 1)];
            if (rem == 0) {
                continue;
            }
            --rem;
            at(r, c) = v;
            rec(idx + 1);
            ++rem;
        }
    };
    rec(0);
    return count;
}

Integer count_standard_tableaux(const IntegerPartition& lambda)
{
    return kostka(SkewShape(lambda), IntegerPartition(std::vector<int>(static_cast<std::size_t>(lambda.size()), 1)));
}

} // namespace ncsym
