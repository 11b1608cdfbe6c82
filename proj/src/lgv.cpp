#include <ncsym/lgv.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <ncsym/errors.hpp>

namespace ncsym {

namespace {

constexpr int infinity = std::numeric_limits<int>::max();

// Vertical extent of the path on column x.
std::pair<int, int> column_extent(const LatticePath& p, int x)
{
    const int t = x - p.start_x;
    const int lo = t == 0 ? 1 : p.heights[static_cast<std::size_t>(t - 1)];
    const int hi = x == p.end_x() ? infinity : p.heights[static_cast<std::size_t>(t)];
    return {lo, hi};
}

void enumerate_heights(int count, int cap, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == count) {
        out.push_back(current);
        return;
    }
    const int lo = current.empty() ? 1 : current.back();
    for (int h = lo; h <= cap; ++h) {
        current.push_back(h);
        enumerate_heights(count, cap, current, out);
        current.pop_back();
    }
}

// (path index, step index) of every E step in label order.
std::vector<std::pair<int, int>> steps_in_label_order(const PathTuple& p)
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
        for (std::size_t t = 0; t < p.paths[i].heights.size(); ++t) {
            out.emplace_back(static_cast<int>(i), static_cast<int>(t));
        }
    }
    return out;
}

} // namespace

std::vector<PathTuple> enumerate_path_tuples(const SkewShape& shape, const Permutation& eps, int height_cap)
{
    if (height_cap < 1) {
        throw std::invalid_argument("height cap must be at least 1");
    }
    const int l = shape.rows();
    if (eps.size() != l) {
        throw size_mismatch("eps must permute the rows of the shape");
    }
    std::vector<int> starts;
    std::vector<std::vector<std::vector<int>>> choices;
    for (int i = 1; i <= l; ++i) {
        const int start = shape.inner().part(eps(i) - 1) - eps(i);
        const int end = shape.outer().part(i - 1) - i;
        if (end < start) {
            return {};
        }
        starts.push_back(start);
        std::vector<int> current;
        choices.emplace_back();
        enumerate_heights(end - start, height_cap, current, choices.back());
    }
    std::vector<PathTuple> out;
    PathTuple tuple{shape, eps, std::vector<LatticePath>(static_cast<std::size_t>(l))};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == choices.size()) {
            out.push_back(tuple);
            return;
        }
        for (const auto& hs : choices[i]) {
            tuple.paths[i] = LatticePath{starts[i], hs};
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<PathTuple> enumerate_path_tuples(const SkewShape& shape, int height_cap)
{
    std::vector<PathTuple> out;
    for (const auto& eps : enumerate_permutations(shape.rows())) {
        auto part = enumerate_path_tuples(shape, eps, height_cap);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::optional<std::pair<int, int>> last_intersection(const LatticePath& a, const LatticePath& b)
{
    const int lo = std::max(a.start_x, b.start_x);
    const int hi = std::min(a.end_x(), b.end_x());
    for (int x = hi; x >= lo; --x) {
        const auto [alo, ahi] = column_extent(a, x);
        const auto [blo, bhi] = column_extent(b, x);
        if (std::max(alo, blo) <= std::min(ahi, bhi)) {
            return std::make_pair(x, std::min(ahi, bhi));
        }
    }
    return std::nullopt;
}

bool has_intersection(const PathTuple& p)
{
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
        for (std::size_t j = i + 1; j < p.paths.size(); ++j) {
            if (last_intersection(p.paths[i], p.paths[j])) {
                return true;
            }
        }
    }
    return false;
}

SwapResult lgv_swap(const PathTuple& p)
{
    const int l = static_cast<int>(p.paths.size());
    int i = -1;
    int j = -1;
    for (int a = l - 1; a >= 0 && i < 0; --a) {
        for (int b = l - 1; b >= 0; --b) {
            if (b != a && last_intersection(p.paths[static_cast<std::size_t>(a)], p.paths[static_cast<std::size_t>(b)])) {
                i = a;
                j = b;
                break;
            }
        }
    }
    if (i < 0) {
        return {p, Permutation::identity(p.steps()), true};
    }
    const auto& pi = p.paths[static_cast<std::size_t>(i)];
    const auto& pj = p.paths[static_cast<std::size_t>(j)];
    const int a = last_intersection(pi, pj)->first;

    // Provenance of every step of the new paths.
    using Step = std::pair<int, int>;
    std::vector<std::vector<Step>> origin(static_cast<std::size_t>(l));
    for (int r = 0; r < l; ++r) {
        for (int t = 0; t < static_cast<int>(p.paths[static_cast<std::size_t>(r)].heights.size()); ++t) {
            origin[static_cast<std::size_t>(r)].emplace_back(r, t);
        }
    }
    auto splice = [&](int head, int tail) {
        std::vector<Step> steps;
        const auto& ph = p.paths[static_cast<std::size_t>(head)];
        const auto& pt = p.paths[static_cast<std::size_t>(tail)];
        for (int t = 0; t < a - ph.start_x; ++t) {
            steps.emplace_back(head, t);
        }
        for (int t = a - pt.start_x; t < static_cast<int>(pt.heights.size()); ++t) {
            steps.emplace_back(tail, t);
        }
        return steps;
    };
    origin[static_cast<std::size_t>(i)] = splice(j, i);
    origin[static_cast<std::size_t>(j)] = splice(i, j);

    PathTuple image = p;
    std::vector<int> eps = p.epsilon.images();
    std::swap(eps[static_cast<std::size_t>(i)], eps[static_cast<std::size_t>(j)]);
    image.epsilon = Permutation(std::move(eps));
    image.paths[static_cast<std::size_t>(i)].start_x = pj.start_x;
    image.paths[static_cast<std::size_t>(j)].start_x = pi.start_x;

    std::map<Step, int> old_label;
    int label = 0;
    for (const auto& s : steps_in_label_order(p)) {
        old_label[s] = ++label;
    }
    std::vector<int> xi(static_cast<std::size_t>(p.steps()), 0);
    label = 0;
    for (int r = 0; r < l; ++r) {
        auto& hs = image.paths[static_cast<std::size_t>(r)].heights;
        hs.clear();
        for (const auto& s : origin[static_cast<std::size_t>(r)]) {
            hs.push_back(p.paths[static_cast<std::size_t>(s.first)].heights[static_cast<std::size_t>(s.second)]);
            xi[static_cast<std::size_t>(old_label.at(s) - 1)] = ++label;
        }
    }
    return {std::move(image), Permutation(std::move(xi)), false};
}

int sign(const PathTuple& p) { return p.epsilon.sign(); }

std::vector<int> label_heights(const PathTuple& p)
{
    std::vector<int> out;
    for (const auto& path : p.paths) {
        out.insert(out.end(), path.heights.begin(), path.heights.end());
    }
    return out;
}

Word monomial(const Permutation& delta, const PathTuple& p)
{
    if (delta.size() != p.steps()) {
        throw size_mismatch("permutation size differs from the number of E steps");
    }
    const auto heights = label_heights(p);
    Word w;
    for (int i = 1; i <= delta.size(); ++i) {
        w.push_back(heights[static_cast<std::size_t>(delta(i) - 1)]);
    }
    return w;
}

SemistandardTableau to_ssyt(const PathTuple& p)
{
    if (!p.epsilon.is_identity()) {
        throw std::invalid_argument("only eps = id tuples correspond to tableaux");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& path : p.paths) {
        rows.push_back(path.heights);
    }
    return SemistandardTableau(p.shape, std::move(rows));
}

SsytCertificate fixed_points_to_ssyt(const SkewShape& shape, int height_cap)
{
    SsytCertificate cert;
    std::set<std::vector<std::vector<int>>> images;
    bool valid = true;
    for (const auto& p : enumerate_path_tuples(shape, Permutation::identity(shape.rows()), height_cap)) {
        if (has_intersection(p)) {
            continue;
        }
        ++cert.path_count;
        try {
            images.insert(to_ssyt(p).rows());
        } catch (const std::invalid_argument&) {
            valid = false;
        }
    }
    cert.ssyt_count = enumerate_ssyt(shape, height_cap).size();
    cert.injective = valid && images.size() == cert.path_count;
    cert.bijective = cert.injective && cert.path_count == cert.ssyt_count;
    return cert;
}

std::string dump(const PathTuple& p)
{
    std::ostringstream out;
    for (const auto& path : p.paths) {
        out << path.start_x << ':';
        for (std::size_t t = 0; t < path.heights.size(); ++t) {
            out << (t == 0 ? " " : ",") << path.heights[t];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ncsym
