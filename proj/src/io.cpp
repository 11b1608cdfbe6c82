#include <ncsym/io.hpp>

#include <cctype>
#include <sstream>

#include <json.hpp>

#include <ncsym/errors.hpp>

namespace ncsym {

namespace {

using json = nlohmann::json;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int read_int(std::string_view text, std::size_t& i, std::size_t base)
{
    const std::size_t start = i;
    long value = 0;
    while (i < text.size() && is_digit(text[i])) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) {
            throw parse_error("integer too large", base + start);
        }
        ++i;
    }
    if (i == start) {
        throw parse_error("expected a digit", base + i);
    }
    return static_cast<int>(value);
}

// Comma-separated integers, or one integer per digit when there is no comma.
std::vector<int> parse_entries(std::string_view text, std::size_t base, std::vector<std::size_t>* offsets = nullptr)
{
    std::vector<int> out;
    if (text.empty()) {
        throw parse_error("empty block", base);
    }
    if (text.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!is_digit(text[i])) {
                throw parse_error(std::string("unexpected character '") + text[i] + "'", base + i);
            }
            out.push_back(text[i] - '0');
            if (offsets) {
                offsets->push_back(base + i);
            }
        }
        return out;
    }
    std::size_t i = 0;
    while (true) {
        if (offsets) {
            offsets->push_back(base + i);
        }
        out.push_back(read_int(text, i, base));
        if (i == text.size()) {
            break;
        }
        if (text[i] != ',') {
            throw parse_error(std::string("unexpected character '") + text[i] + "'", base + i);
        }
        ++i;
    }
    return out;
}

std::vector<std::vector<int>> parse_rows(std::string_view text, std::size_t base,
                                         std::vector<std::size_t>* offsets = nullptr)
{
    std::vector<std::vector<int>> rows;
    if (text.empty()) {
        return rows;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t slash = text.find('/', start);
        const std::size_t end = slash == std::string_view::npos ? text.size() : slash;
        rows.push_back(parse_entries(text.substr(start, end - start), base + start, offsets));
        if (slash == std::string_view::npos) {
            break;
        }
        start = slash + 1;
    }
    return rows;
}

// Dotted parts, or single digits when there is no dot.
std::vector<int> parse_parts(std::string_view text, std::size_t base)
{
    std::vector<int> parts;
    if (text.empty()) {
        return parts;
    }
    if (text.find('.') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!is_digit(text[i])) {
                throw parse_error(std::string("unexpected character '") + text[i] + "'", base + i);
            }
            parts.push_back(text[i] - '0');
        }
        return parts;
    }
    std::size_t i = 0;
    while (true) {
        parts.push_back(read_int(text, i, base));
        if (i == text.size()) {
            break;
        }
        if (text[i] != '.') {
            throw parse_error(std::string("unexpected character '") + text[i] + "'", base + i);
        }
        ++i;
    }
    return parts;
}

IntegerPartition partition_at(std::string_view text, std::size_t base, bool allow_zero_tail)
{
    std::vector<int> parts = parse_parts(text, base);
    if (allow_zero_tail) {
        while (!parts.empty() && parts.back() == 0) {
            parts.pop_back();
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw parse_error("partition parts must be positive", base);
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw parse_error("partition parts must be weakly decreasing", base);
        }
    }
    return IntegerPartition(std::move(parts));
}

// Entries must be exactly 1..n; the error points at the first offending entry.
void require_bijection(const std::vector<int>& values, const std::vector<std::size_t>& offsets)
{
    const std::size_t n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = values[i];
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw parse_error("entry " + std::to_string(v) + " out of range 1.." + std::to_string(n), offsets[i]);
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw parse_error("entry " + std::to_string(v) + " repeated", offsets[i]);
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& rows)
{
    std::vector<int> out;
    for (const auto& r : rows) {
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::string join(const std::vector<int>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + std::to_string(v[i]);
    }
    return out;
}

std::string format_rows(const std::vector<std::vector<int>>& rows, bool wide)
{
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += (r ? "/" : "") + join(rows[r], wide ? "," : "");
    }
    return out;
}

template <typename Terms, typename IndexFormat>
std::string format_terms(const Terms& terms, const std::string& basis, IndexFormat&& index)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (magnitude != 1) {
            out += to_string(magnitude) + " ";
        }
        out += basis + "[" + index(key) + "]";
        first = false;
    }
    return out;
}

template <typename Terms, typename IndexFormat>
json json_terms(const Terms& terms, IndexFormat&& index)
{
    json arr = json::array();
    for (const auto& [key, c] : terms) {
        arr.push_back({{"index", index(key)}, {"coeff", to_string(c)}});
    }
    return arr;
}

struct RawTerm {
    Rational coeff;
    std::string basis;
    std::string index;
    std::size_t index_offset;
};

std::vector<RawTerm> parse_raw_terms(std::string_view text)
{
    std::vector<RawTerm> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip_ws();
    if (text.substr(i) == "0") {
        return out;
    }
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) {
                throw parse_error("empty expression", i);
            }
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms", i);
        }
        Rational coeff = 1;
        if (i < text.size() && is_digit(text[i])) {
            const std::size_t start = i;
            while (i < text.size() && (is_digit(text[i]) || text[i] == '/')) {
                ++i;
            }
            try {
                coeff = parse_rational(text.substr(start, i - start));
            } catch (const parse_error& e) {
                throw parse_error("malformed coefficient", start + e.position());
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        const std::size_t basis_start = i;
        while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '^')) {
            ++i;
        }
        if (i == basis_start) {
            throw parse_error("expected a basis name", i);
        }
        std::string basis(text.substr(basis_start, i - basis_start));
        if (i == text.size() || text[i] != '[') {
            throw parse_error("expected '['", i);
        }
        const std::size_t close = text.find(']', i);
        if (close == std::string_view::npos) {
            throw parse_error("missing ']'", text.size());
        }
        out.push_back({coeff * sign, basis, std::string(text.substr(i + 1, close - i - 1)), i + 1});
        i = close + 1;
        first = false;
    }
    return out;
}

} // namespace

SetPartition parse_set_partition(std::string_view text)
{
    std::vector<std::size_t> offsets;
    auto rows = parse_rows(text, 0, &offsets);
    require_bijection(flatten(rows), offsets);
    try {
        return SetPartition(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0);
    }
}

IntegerPartition parse_partition(std::string_view text) { return partition_at(text, 0, false); }

Composition parse_composition(std::string_view text)
{
    std::vector<int> parts = parse_parts(text, 0);
    for (int p : parts) {
        if (p < 1) {
            throw parse_error("composition parts must be positive", 0);
        }
    }
    return Composition(std::move(parts));
}

Permutation parse_permutation(std::string_view text)
{
    std::vector<std::size_t> offsets;
    std::vector<int> images = text.empty() ? std::vector<int>{} : parse_entries(text, 0, &offsets);
    require_bijection(images, offsets);
    try {
        return Permutation(std::move(images));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0);
    }
}

SkewShape parse_skew_shape(std::string_view text)
{
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return SkewShape(partition_at(text, 0, false));
    }
    IntegerPartition outer = partition_at(text.substr(0, slash), 0, false);
    IntegerPartition inner = partition_at(text.substr(slash + 1), slash + 1, true);
    if (!outer.contains(inner)) {
        throw parse_error("inner shape is not contained in the outer shape", slash + 1);
    }
    return SkewShape(std::move(outer), std::move(inner));
}

YoungTableau parse_tableau(std::string_view text)
{
    std::vector<std::size_t> offsets;
    auto rows = parse_rows(text, 0, &offsets);
    require_bijection(flatten(rows), offsets);
    std::vector<int> lengths;
    for (const auto& r : rows) {
        lengths.push_back(static_cast<int>(r.size()));
    }
    for (std::size_t i = 1; i < lengths.size(); ++i) {
        if (lengths[i] > lengths[i - 1]) {
            throw parse_error("tableau rows must weakly decrease in length", 0);
        }
    }
    try {
        return YoungTableau(SkewShape(IntegerPartition(std::move(lengths))), std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0);
    }
}

Basis parse_basis(std::string_view text)
{
    if (text == "m") return Basis::m;
    if (text == "p") return Basis::p;
    if (text == "e") return Basis::e;
    if (text == "h") return Basis::h;
    if (text == "s") return Basis::s;
    if (text == "st" || text == "s^t") return Basis::st;
    if (text == "tabloid") return Basis::tabloid;
    throw parse_error("unknown basis '" + std::string(text) + "'", 0);
}

SymBasis parse_sym_basis(std::string_view text)
{
    if (text == "m") return SymBasis::m;
    if (text == "p") return SymBasis::p;
    if (text == "e") return SymBasis::e;
    if (text == "h") return SymBasis::h;
    if (text == "s") return SymBasis::s;
    throw parse_error("unknown Sym basis '" + std::string(text) + "'", 0);
}

NSymBasis parse_nsym_basis(std::string_view text)
{
    if (text == "H") return NSymBasis::H;
    if (text == "R") return NSymBasis::R;
    if (text == "I") return NSymBasis::Immaculate;
    throw parse_error("unknown NSym basis '" + std::string(text) + "'", 0);
}

NCSymExpr parse_ncsym_expr(std::string_view text)
{
    NCSymExpr f;
    f.basis = Basis::h;
    bool have_basis = false;
    for (const auto& t : parse_raw_terms(text)) {
        Basis b;
        try {
            b = parse_basis(t.basis);
        } catch (const parse_error&) {
            throw parse_error("unknown basis '" + t.basis + "'", t.index_offset - 1 - t.basis.size());
        }
        if (have_basis && b != f.basis) {
            throw parse_error("terms use different bases", t.index_offset);
        }
        f.basis = b;
        have_basis = true;
        try {
            f.terms.add(parse_set_partition(t.index), t.coeff);
        } catch (const parse_error& e) {
            throw parse_error("malformed set partition", t.index_offset + e.position());
        }
    }
    return f;
}

NSymExpr parse_nsym_expr(std::string_view text)
{
    NSymExpr f;
    bool have_basis = false;
    for (const auto& t : parse_raw_terms(text)) {
        NSymBasis b;
        try {
            b = parse_nsym_basis(t.basis);
        } catch (const parse_error&) {
            throw parse_error("unknown basis '" + t.basis + "'", t.index_offset - 1 - t.basis.size());
        }
        if (have_basis && b != f.basis) {
            throw parse_error("terms use different bases", t.index_offset);
        }
        f.basis = b;
        have_basis = true;
        try {
            f.terms.add(parse_composition(t.index), t.coeff);
        } catch (const parse_error& e) {
            throw parse_error("malformed composition", t.index_offset + e.position());
        }
    }
    return f;
}

NCSymExpr ncsym_expr_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms") || !j["basis"].is_string() ||
        !j["terms"].is_array()) {
        throw parse_error("expected {\"basis\":..., \"terms\":[...]}", 0);
    }
    NCSymExpr f;
    f.basis = parse_basis(j["basis"].get<std::string>());
    for (const auto& term : j["terms"]) {
        if (!term.contains("index") || !term.contains("coeff")) {
            throw parse_error("term needs index and coeff", 0);
        }
        f.terms.add(parse_set_partition(term["index"].get<std::string>()),
                    parse_rational(term["coeff"].get<std::string>()));
    }
    return f;
}

std::string format(const SetPartition& pi) { return format_rows(pi.blocks(), pi.size() >= 10); }

std::string format(const IntegerPartition& lambda) { return join(lambda.parts(), "."); }

std::string format(const Composition& alpha) { return join(alpha.parts(), "."); }

std::string format(const Permutation& delta) { return join(delta.images(), delta.size() > 9 ? "," : ""); }

std::string format(const SkewShape& shape)
{
    if (shape.is_straight()) {
        return format(shape.outer());
    }
    return format(shape.outer()) + "/" + format(shape.inner());
}

std::string format(const YoungTableau& t) { return format_rows(t.rows(), t.size() >= 10); }

std::string format(const Word& w)
{
    std::string out;
    for (int letter : w) {
        out += "x" + std::to_string(letter);
    }
    return out.empty() ? "1" : out;
}

std::string format(const NCSymExpr& f)
{
    return format_terms(f.terms, basis_name(f.basis), [](const SetPartition& pi) { return format(pi); });
}

std::string format(const SymExpr& f)
{
    return format_terms(f.terms, std::string(1, basis_letter(f.basis)),
                        [](const IntegerPartition& l) { return format(l); });
}

std::string format(const NSymExpr& f)
{
    return format_terms(f.terms, basis_name(f.basis), [](const Composition& a) { return format(a); });
}

std::string format(const NCPolynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (magnitude != 1) {
            out += to_string(magnitude) + " ";
        }
        out += format(w);
        first = false;
    }
    return out;
}

std::string format(const NCTensor& t)
{
    return format_terms(t, "m", [](const std::pair<SetPartition, SetPartition>& k) {
        return format(k.first) + "] (x) m[" + format(k.second);
    });
}

std::string to_json(const NCSymExpr& f)
{
    json j{{"basis", basis_name(f.basis)},
           {"terms", json_terms(f.terms, [](const SetPartition& pi) { return format(pi); })}};
    return j.dump();
}

std::string to_json(const SymExpr& f)
{
    json j{{"basis", std::string(1, basis_letter(f.basis))},
           {"terms", json_terms(f.terms, [](const IntegerPartition& l) { return format(l); })}};
    return j.dump();
}

std::string to_json(const NSymExpr& f)
{
    json j{{"basis", basis_name(f.basis)},
           {"terms", json_terms(f.terms, [](const Composition& a) { return format(a); })}};
    return j.dump();
}

std::string to_json(const NCPolynomial& p)
{
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) {
        terms.push_back({{"word", w}, {"coeff", to_string(c)}});
    }
    return json{{"k", p.vars()}, {"terms", terms}}.dump();
}

std::string to_json(const NCTensor& t)
{
    json terms = json::array();
    for (const auto& [k, c] : t) {
        terms.push_back({{"left", format(k.first)}, {"right", format(k.second)}, {"coeff", to_string(c)}});
    }
    return json{{"basis", "m(x)m"}, {"terms", terms}}.dump();
}

} // namespace ncsym
