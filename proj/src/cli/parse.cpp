#include "monalg/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>

namespace monalg {

namespace {

constexpr std::string_view kLetters = "xyzw";

// Whitespace-free view of the input that remembers original columns.
struct Compact {
    std::string text;
    std::vector<std::size_t> column; // 1-based column of each kept character
    std::size_t end_column = 1;
};

Compact compact(std::string_view raw) {
    Compact c;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(raw[i]))) continue;
        c.text.push_back(raw[i]);
        c.column.push_back(i + 1);
    }
    c.end_column = raw.size() + 1;
    return c;
}

// Variables are keys: letters by their position in "xyzw", indexed names
// by their index.
struct RawFactor {
    std::size_t key;
    int exponent;
};

class Parser {
public:
    explicit Parser(const Compact& input) : in_(input) {}

    std::vector<std::vector<RawFactor>> ideal() {
        if (in_.text.empty()) fail("empty ideal");
        bool paren = accept('(');
        std::vector<std::vector<RawFactor>> gens;
        gens.push_back(generator());
        while (accept(',')) gens.push_back(generator());
        if (paren && !accept(')')) fail("expected ')'");
        if (pos_ != in_.text.size()) fail(std::string("unexpected '") + in_.text[pos_] + "'");
        return gens;
    }

    bool indexed() const { return style_ == Style::Indexed; }

private:
    enum class Style { Unknown, Letters, Indexed };

    std::vector<RawFactor> generator() {
        if (peek() == '1') {
            std::size_t at = pos_;
            int value = integer();
            if (value == 1 && (peek() == ',' || peek() == ')' || peek() == '\0'))
                throw MonomialError(ErrorCode::ZeroGenerator,
                                    "constant generator at column " + std::to_string(column(at)));
            fail_at(at, "coefficients are not allowed");
        }
        std::vector<RawFactor> factors;
        factors.push_back(factor());
        while (true) {
            if (accept('*')) {
                factors.push_back(factor());
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                factors.push_back(factor());
            } else {
                break;
            }
        }
        return factors;
    }

    RawFactor factor() {
        std::size_t at = pos_;
        char ch = peek();
        if (ch == '\0') fail("expected a variable");
        if (!std::isalpha(static_cast<unsigned char>(ch))) fail(std::string("expected a variable, found '") + ch + "'");
        if (kLetters.find(ch) == std::string_view::npos)
            fail(std::string("unknown variable '") + ch + "' (use x, y, z, w or x1, x2, ...)");
        ++pos_;

        RawFactor f{0, 1};
        if (ch == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
            set_style(Style::Indexed, at);
            int index = integer();
            if (index == 0) fail_at(at, "variable indices start at 1");
            f.key = static_cast<std::size_t>(index - 1);
        } else {
            set_style(Style::Letters, at);
            f.key = kLetters.find(ch);
        }
        if (accept('^')) {
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative exponent after '^'");
            f.exponent = integer();
        }
        return f;
    }

    int integer() {
        std::size_t at = pos_;
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (in_.text[pos_] - '0');
            if (value > std::numeric_limits<int>::max() / 2) fail_at(at, "integer too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    void set_style(Style s, std::size_t at) {
        if (style_ == Style::Unknown) style_ = s;
        if (style_ != s) fail_at(at, "cannot mix letter variables with indexed variables");
    }

    char peek() const { return pos_ < in_.text.size() ? in_.text[pos_] : '\0'; }
    bool accept(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }
    std::size_t column(std::size_t at) const { return at < in_.column.size() ? in_.column[at] : in_.end_column; }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw SyntaxError(column(at), msg); }

    const Compact& in_;
    std::size_t pos_ = 0;
    Style style_ = Style::Unknown;
};

} // namespace

std::vector<std::string> default_variables(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(n <= kLetters.size() ? std::string(1, kLetters[i]) : "x" + std::to_string(i + 1));
    return names;
}

ParsedIdeal parse_ideal_source(std::string_view text) {
    const Compact input = compact(text);
    Parser parser(input);
    const auto raw_gens = parser.ideal();

    // Map variable keys onto lattice coordinates.
    std::map<std::size_t, std::size_t> coordinate;
    std::vector<std::string> names;
    if (parser.indexed()) {
        std::size_t n = 0;
        for (const auto& g : raw_gens)
            for (const auto& f : g) n = std::max(n, f.key + 1);
        for (std::size_t i = 0; i < n; ++i) {
            coordinate[i] = i;
            names.push_back("x" + std::to_string(i + 1));
        }
    } else {
        for (const auto& g : raw_gens)
            for (const auto& f : g) coordinate[f.key] = 0;
        std::size_t next = 0;
        for (auto& [key, coord] : coordinate) {
            coord = next++;
            names.emplace_back(1, kLetters[key]);
        }
    }

    const std::size_t n = names.size();
    std::vector<ExponentVector> gens;
    for (const auto& g : raw_gens) {
        ExponentVector e(n);
        for (const auto& f : g) e[coordinate.at(f.key)] += f.exponent;
        gens.push_back(std::move(e));
    }
    return ParsedIdeal{IdealSource{std::string(text), n, std::move(names)}, MonomialIdeal(n, std::move(gens))};
}

ParsedIdeal parse_full_finite(std::string_view text) {
    ParsedIdeal parsed = parse_ideal_source(text);
    if (!is_full(parsed.ideal)) throw MonomialError(ErrorCode::NotFull, "some variable lies in the ideal");
    if (!is_finite(parsed.ideal))
        throw MonomialError(ErrorCode::InfiniteAlgebra, "some variable has no pure power in the ideal");
    return parsed;
}

MonomialIdeal parse_ideal(std::string_view text) { return parse_full_finite(text).ideal; }

std::string render_monomial(const ExponentVector& m, const std::vector<std::string>& variables) {
    if (variables.size() != m.size())
        throw MonomialError(ErrorCode::DimensionMismatch, "variable list does not match " + to_string(m));
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += variables[i];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string render_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& variables) {
    std::string out;
    for (const auto& g : ideal.generators()) {
        if (!out.empty()) out += ", ";
        out += render_monomial(g, variables);
    }
    return out;
}

std::string render_ideal(const MonomialIdeal& ideal) { return render_ideal(ideal, default_variables(ideal.dim())); }

} // namespace monalg
