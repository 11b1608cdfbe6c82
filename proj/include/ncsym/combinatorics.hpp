#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include <ncsym/rational.hpp>

namespace ncsym {

// Weakly decreasing list of positive parts. The empty partition has size 0.
class IntegerPartition {
public:
    IntegerPartition() = default;
    IntegerPartition(std::initializer_list<int> parts);
    explicit IntegerPartition(std::vector<int> parts);

    // Sorts decreasingly and drops zero parts.
    static IntegerPartition from_parts(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    // 0-based; zero past the last part.
    int part(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    bool contains(const IntegerPartition& inner) const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
    friend std::strong_ordering operator<=>(const IntegerPartition& a, const IntegerPartition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionStats {
    Integer factorial_product;     // lambda! = prod lambda_i!
    Integer multiplicity_factorial; // lambda^! = prod r_i!
    IntegerPartition transpose;
};

PartitionStats partition_stats(const IntegerPartition& lambda);
Integer factorial_product(const IntegerPartition& lambda);
Integer multiplicity_factorial(const IntegerPartition& lambda);
IntegerPartition transpose(const IntegerPartition& lambda);

// Ordered list of positive parts.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

IntegerPartition sorted_partition(const Composition& alpha); // lambda(alpha)
Integer factorial_product(const Composition& alpha);
Composition concat(const Composition& alpha, const Composition& beta);
Composition near_concat(const Composition& alpha, const Composition& beta);
// All beta with beta >= alpha (obtained by adding adjacent parts), alpha included.
std::vector<Composition> coarsenings(const Composition& alpha);
bool is_coarsening(const Composition& coarse, const Composition& fine);

// Tuple of nonnegative integers.
class WeakComposition {
public:
    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> parts);
    explicit WeakComposition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

private:
    std::vector<int> parts_;
};

Integer factorial_product(const WeakComposition& alpha);

// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(IntegerPartition outer, IntegerPartition inner = {});

    const IntegerPartition& outer() const noexcept { return outer_; }
    const IntegerPartition& inner() const noexcept { return inner_; }
    int rows() const noexcept { return outer_.length(); }
    int size() const noexcept { return outer_.size() - inner_.size(); }
    bool is_straight() const noexcept { return inner_.empty(); }

    // Row i (0-based) occupies columns [row_start(i), row_end(i)).
    int row_start(int i) const noexcept { return inner_.part(i); }
    int row_end(int i) const noexcept { return outer_.part(i); }
    int row_length(int i) const noexcept { return row_end(i) - row_start(i); }
    bool has_box(int row, int col) const noexcept;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    IntegerPartition outer_;
    IntegerPartition inner_;
};

enum class ConcatMode { concat, near_concat };

// lambda . mu (rightmost column of mu under leftmost column of lambda) and
// lambda (.) mu (top row of mu left of bottom row of lambda).
SkewShape shape_concat(const IntegerPartition& lambda, const IntegerPartition& mu, ConcatMode mode);
// Ribbon diagram whose row lengths, top to bottom, are alpha.
SkewShape ribbon_shape(const Composition& alpha);
// Skew shapes lambda/mu with |lambda/mu| = n and no empty row or column.
std::vector<SkewShape> enumerate_skew_shapes(int n);

class Permutation;

// Blocks sorted increasingly, block list sorted by least element.
class SetPartition {
public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    // rgs[i] is the block number of element i+1; blocks numbered by first appearance.
    static SetPartition from_restricted_growth(const std::vector<int>& rgs);
    static SetPartition minimum(int n); // 1/2/.../n
    static SetPartition maximum(int n); // 12...n

    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    const IntegerPartition& shape() const noexcept { return shape_; }
    std::vector<int> restricted_growth() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b)
    {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    // Size first, then the canonical-string (lexicographic) order.
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.blocks_ <=> b.blocks_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    IntegerPartition shape_;
};

// Term order for NCSym bases: size, then lambda(pi) lexicographically
// ascending, then canonical string. Compatible with dominance, so the Schur
// transition matrices are triangular under it.
struct BasisOrderLess {
    bool operator()(const SetPartition& a, const SetPartition& b) const;
};

// Size, then parts lexicographically ascending.
struct PartitionOrderLess {
    bool operator()(const IntegerPartition& a, const IntegerPartition& b) const;
};

struct CompositionOrderLess {
    bool operator()(const Composition& a, const Composition& b) const;
};

SetPartition set_partition_meet(const SetPartition& pi, const SetPartition& sigma);
bool refinement_leq(const SetPartition& pi, const SetPartition& sigma);
SetPartition slash_product(const SetPartition& pi, const SetPartition& sigma);
IntegerPartition shape_of(const SetPartition& pi);
SetPartition canonical_partition(const IntegerPartition& lambda);
// [alpha] = [alpha_1] | [alpha_2] | ...; zero parts are skipped.
SetPartition canonical_partition(const Composition& alpha);
SetPartition canonical_partition(const WeakComposition& alpha);
SetPartition permute_set_partition(const Permutation& delta, const SetPartition& pi);
// (-1)^pi = (-1)^(n - l(pi)).
int set_partition_sign(const SetPartition& pi);

// One-line notation, values 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    // 1-based evaluation.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }
    bool is_identity() const noexcept;

    Permutation inverse() const;
    int sign() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation shifted_concat(const Permutation& delta, const Permutation& eta);

// Bijective filling of a skew shape by 1..n; rows[i] lists row i left to right.
class YoungTableau {
public:
    YoungTableau() = default;
    YoungTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }

    // delta_t: rows top to bottom, each left to right.
    Permutation reading_word() const;
    // Entries of each nonempty column, top to bottom.
    std::vector<std::vector<int>> columns() const;

    friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
    friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

// Rows weakly increasing, columns strictly increasing. Boxes are labelled
// T_1..T_n in row reading order.
class SemistandardTableau {
public:
    SemistandardTableau() = default;
    SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    // c(T_1), ..., c(T_n).
    std::vector<int> reading_contents() const;
    // content[i] = number of entries equal to i+1.
    std::vector<int> content() const;

    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

struct CanonicalTableau {
    YoungTableau tableau;
    Permutation delta;
};

// Rows are the blocks of pi, longest first, equal lengths by least element.
CanonicalTableau delta_pi(const SetPartition& pi);

std::vector<YoungTableau> row_equivalence_class(const YoungTableau& t);
// Permutations of values preserving every column of t setwise.
std::vector<Permutation> column_stabilizer(const YoungTableau& t);

// Enumerations; deterministic order.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_set_partitions(int n);
std::vector<Permutation> enumerate_permutations(int n);
std::vector<IntegerPartition> enumerate_partitions(int n);
std::vector<Composition> enumerate_compositions(int n);
std::vector<YoungTableau> enumerate_young_tableaux(const SkewShape& shape);
void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const SemistandardTableau&)>& visit);
std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry);
Integer kostka(const SkewShape& shape, const IntegerPartition& content);
Integer count_standard_tableaux(const IntegerPartition& lambda);

} // namespace ncsym
