#include "subtrop/parser.hpp"

#include "subtrop/error.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace subtrop {

namespace {

bool is_ident_start(char ch) { return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || ch == '_'; }
bool is_ident_char(char ch) { return is_ident_start(ch) || (ch >= '0' && ch <= '9'); }
bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

// Cursor over one source line; columns are 1-based.
class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }

    void expect(char ch, const char* what) {
        if (!consume(ch)) fail(ErrorCode::Syntax, std::string("expected ") + what);
    }

    std::string identifier(const char* what) {
        skip_space();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail(ErrorCode::Syntax, std::string("expected ") + what);
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string digits(const char* what) {
        skip_space();
        if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail(ErrorCode::Syntax, std::string("expected ") + what);
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (pos_ < text_.size() && is_ident_start(text_[pos_])) fail(ErrorCode::Syntax, "malformed number");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t column() {
        skip_space();
        return pos_ + 1;
    }
    std::size_t line() const { return line_; }

    [[noreturn]] void fail(ErrorCode code, const std::string& message) {
        throw ParseError(code, line_, column(), message);
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct RawTerm {
    int sign = 1;
    std::optional<BigRational> number;
    std::optional<std::string> name;
    std::vector<Exponent> exponents;
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t coeff_column = 0;
};

struct RawPoly {
    std::string name;
    std::vector<RawTerm> terms;
};

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

class SystemParser {
public:
    explicit SystemParser(std::string_view source) : source_(source) {}

    SignedSystem run() {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= source_.size()) {
            const auto nl = source_.find('\n', start);
            const auto end = nl == std::string_view::npos ? source_.size() : nl;
            ++line_no;
            parse_line(strip_comment(source_.substr(start, end - start)), line_no);
            if (nl == std::string_view::npos) break;
            start = nl + 1;
        }
        if (!have_header_) throw ParseError(ErrorCode::Syntax, line_no, 1, "missing 'vars' header");
        return build();
    }

private:
    void parse_line(std::string_view text, std::size_t line_no) {
        LineCursor cur(text, line_no);
        if (cur.at_end()) return;
        const std::size_t keyword_column = cur.column();
        const std::string keyword = cur.identifier("'vars' or 'poly'");
        if (keyword == "vars") {
            if (have_header_) throw ParseError(ErrorCode::Syntax, line_no, keyword_column, "duplicate 'vars' header");
            have_header_ = true;
            while (!cur.at_end()) {
                const std::size_t col = cur.column();
                std::string name = cur.identifier("variable name");
                if (name == "vars" || name == "poly")
                    throw ParseError(ErrorCode::Syntax, line_no, col, "reserved word used as a variable");
                if (var_index_.contains(name))
                    throw ParseError(ErrorCode::Syntax, line_no, col, "duplicate variable '" + name + "'");
                var_index_.emplace(name, vars_.size());
                vars_.push_back(std::move(name));
            }
            return;
        }
        if (keyword != "poly") throw ParseError(ErrorCode::Syntax, line_no, keyword_column, "expected 'vars' or 'poly'");
        if (!have_header_) throw ParseError(ErrorCode::Syntax, line_no, keyword_column, "'poly' before 'vars' header");

        RawPoly poly;
        const std::size_t name_column = cur.column();
        poly.name = cur.identifier("polynomial name");
        if (!poly_names_.insert(poly.name).second)
            throw ParseError(ErrorCode::Syntax, line_no, name_column, "duplicate polynomial '" + poly.name + "'");
        cur.expect('=', "'='");
        parse_body(cur, poly);
        if (!cur.at_end()) cur.fail(ErrorCode::Syntax, "unexpected character");
        polys_.push_back(std::move(poly));
    }

    void parse_body(LineCursor& cur, RawPoly& poly) {
        // Identically zero polynomial.
        if (cur.peek() == '0') {
            LineCursor probe = cur;
            const std::string digits = probe.digits("number");
            if (probe.at_end() && digits.find_first_not_of('0') == std::string::npos) {
                cur = probe;
                return;
            }
        }
        int sign = 1;
        if (cur.consume('-')) sign = -1;
        else cur.consume('+');
        for (;;) {
            poly.terms.push_back(parse_term(cur, sign));
            if (cur.consume('+')) sign = 1;
            else if (cur.consume('-')) sign = -1;
            else break;
        }
    }

    RawTerm parse_term(LineCursor& cur, int sign) {
        RawTerm term;
        term.sign = sign;
        term.line = cur.line();
        term.column = cur.column();
        term.exponents.assign(vars_.size(), 0);

        bool first = true;
        bool have_factor = false;
        do {
            const char ch = cur.peek();
            const std::size_t col = cur.column();
            if (is_digit(ch)) {
                if (!first) cur.fail(ErrorCode::Syntax, "numeric factor must lead the term");
                const std::string num = cur.digits("number");
                std::string den = "1";
                if (cur.consume('/')) den = cur.digits("denominator");
                const BigInt p(num, 10);
                const BigInt q(den, 10);
                if (p == 0 || q == 0)
                    throw ParseError(ErrorCode::NonPositiveCoefficient, cur.line(), col, "coefficient must be positive");
                term.number = BigRational(p, q);
                term.coeff_column = col;
            } else if (is_ident_start(ch)) {
                const std::string id = cur.identifier("identifier");
                const auto var = var_index_.find(id);
                if (var == var_index_.end()) {
                    if (!first) throw ParseError(ErrorCode::Syntax, cur.line(), col, "unknown variable '" + id + "'");
                    if (cur.peek() == '^')
                        throw ParseError(ErrorCode::Syntax, cur.line(), col, "unknown variable '" + id + "'");
                    term.name = id;
                    term.coeff_column = col;
                } else {
                    Exponent power = 1;
                    if (cur.consume('^')) {
                        if (cur.peek() == '-') cur.fail(ErrorCode::NegativeExponent, "negative exponents are not allowed");
                        const std::size_t ecol = cur.column();
                        const std::string digits = cur.digits("exponent");
                        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
                        if (ec != std::errc{} || power > kMaxExponent)
                            throw ParseError(ErrorCode::Syntax, cur.line(), ecol, "exponent too large");
                    }
                    Exponent& slot = term.exponents[var->second];
                    slot += power;
                    if (slot > kMaxExponent) throw ParseError(ErrorCode::Syntax, cur.line(), col, "exponent too large");
                    have_factor = true;
                }
            } else {
                cur.fail(ErrorCode::Syntax, "expected a coefficient or a variable");
            }
            first = false;
        } while (cur.consume('*'));

        if (!have_factor && !term.number && !term.name) cur.fail(ErrorCode::Syntax, "empty term");
        return term;
    }

    SignedSystem build() {
        bool parametric = false;
        for (const auto& poly : polys_) {
            for (const auto& term : poly.terms) {
                if (term.number || term.name) {
                    parametric = term.name.has_value();
                    goto decided;
                }
            }
        }
    decided:
        std::map<std::vector<Exponent>, std::size_t> mono_index;
        std::vector<std::vector<Exponent>> monos;
        for (const auto& poly : polys_) {
            for (const auto& term : poly.terms) {
                if (parametric && term.number)
                    throw ParseError(ErrorCode::MixedCoefficientModes, term.line, term.coeff_column,
                                     "numeric coefficient in a parametric system");
                if (parametric && !term.name)
                    throw ParseError(ErrorCode::MissingCoefficient, term.line, term.column,
                                     "parametric terms need a named coefficient");
                if (!parametric && term.name)
                    throw ParseError(ErrorCode::MixedCoefficientModes, term.line, term.coeff_column,
                                     "named coefficient in a concrete system");
                if (mono_index.emplace(term.exponents, monos.size()).second) monos.push_back(term.exponents);
            }
        }

        const std::size_t u = polys_.size();
        const std::size_t v = monos.size();
        const std::size_t d = vars_.size();
        SignMatrix signs(u, v, 0);
        ExponentMatrix exponents(v, d, 0);
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t l = 0; l < d; ++l) exponents(j, l) = monos[j][l];

        std::vector<std::string> row_names;
        for (const auto& poly : polys_) row_names.push_back(poly.name);

        if (parametric) {
            Matrix<std::string> names(u, v);
            std::set<std::string> seen;
            for (std::size_t i = 0; i < u; ++i) {
                for (const auto& term : polys_[i].terms) {
                    const std::size_t j = mono_index.at(term.exponents);
                    if (signs(i, j) != 0)
                        throw ParseError(ErrorCode::DuplicateMonomial, term.line, term.column,
                                         "monomial repeated in parametric polynomial '" + polys_[i].name + "'");
                    if (!seen.insert(*term.name).second)
                        throw ParseError(ErrorCode::DuplicateCoefficientName, term.line, term.coeff_column,
                                         "duplicate coefficient name '" + *term.name + "'");
                    signs(i, j) = term.sign;
                    names(i, j) = *term.name;
                }
            }
            return SignedSystem(std::move(signs), std::move(exponents), ParametricCoefficients{std::move(names)},
                                vars_, std::move(row_names));
        }

        Matrix<BigRational> sums(u, v, BigRational(0));
        for (std::size_t i = 0; i < u; ++i) {
            for (const auto& term : polys_[i].terms) {
                const BigRational value = term.number.value_or(BigRational(1));
                BigRational& slot = sums(i, mono_index.at(term.exponents));
                slot += term.sign < 0 ? -value : value;
            }
        }
        Matrix<BigRational> values(u, v, BigRational(1));
        for (std::size_t i = 0; i < u; ++i) {
            for (std::size_t j = 0; j < v; ++j) {
                signs(i, j) = sums(i, j).sign();
                if (signs(i, j) != 0) values(i, j) = sums(i, j).abs();
            }
        }
        return SignedSystem(std::move(signs), std::move(exponents), ConcreteCoefficients{std::move(values)}, vars_,
                            std::move(row_names));
    }

    std::string_view source_;
    bool have_header_ = false;
    std::vector<std::string> vars_;
    std::map<std::string, std::size_t> var_index_;
    std::set<std::string> poly_names_;
    std::vector<RawPoly> polys_;
};

std::string monomial_text(const SignedSystem& sys, std::size_t j) {
    std::string out;
    const auto mono = sys.monomial(j);
    for (std::size_t l = 0; l < mono.size(); ++l) {
        if (mono[l] == 0) continue;
        if (!out.empty()) out += '*';
        out += sys.var_names()[l];
        if (mono[l] != 1) out += '^' + std::to_string(mono[l]);
    }
    return out;
}

} // namespace

SignedSystem parse_system(std::string_view source) { return SystemParser(source).run(); }

std::string print_system(const SignedSystem& sys) {
    const std::size_t u = sys.num_rows();
    const std::size_t v = sys.num_monomials();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    // A column that is zero in the row where it must first occur is emitted as a
    // cancelling pair `m - m` there.
    std::vector<std::size_t> first_nonzero(v, none);
    for (std::size_t j = 0; j < v; ++j)
        for (std::size_t i = 0; i < u && first_nonzero[j] == none; ++i)
            if (sys.sign(i, j) != 0) first_nonzero[j] = i;
    std::vector<std::size_t> anchor(v, u == 0 ? 0 : u - 1);
    for (std::size_t j = v; j-- > 0;) {
        std::size_t best = std::min(first_nonzero[j], u == 0 ? std::size_t{0} : u - 1);
        if (j + 1 < v) best = std::min(best, anchor[j + 1]);
        anchor[j] = best;
    }

    std::ostringstream out;
    out << "vars";
    for (const auto& name : sys.var_names()) out << ' ' << name;
    out << '\n';

    for (std::size_t i = 0; i < u; ++i) {
        std::string body;
        auto append = [&body](int sign, const std::string& term) {
            if (body.empty()) body = sign < 0 ? "-" + term : term;
            else body += (sign < 0 ? " - " : " + ") + term;
        };
        for (std::size_t j = 0; j < v; ++j) {
            const std::string mono = monomial_text(sys, j);
            const int s = sys.sign(i, j);
            if (s == 0) {
                if (anchor[j] == i && first_nonzero[j] != i && !sys.is_parametric()) {
                    const std::string term = mono.empty() ? "1" : mono;
                    append(1, term);
                    append(-1, term);
                }
                continue;
            }
            std::string coeff;
            if (sys.is_parametric()) {
                coeff = sys.parametric().names(i, j);
            } else {
                const BigRational& value = sys.concrete().values(i, j);
                if (value != 1 || mono.empty()) coeff = value.to_string();
            }
            if (coeff.empty()) append(s, mono);
            else if (mono.empty()) append(s, coeff);
            else append(s, coeff + "*" + mono);
        }
        out << "poly " << sys.row_names()[i] << " = " << (body.empty() ? "0" : body) << '\n';
    }
    return out.str();
}

CoefficientBinding parse_coefficients(std::string_view source) {
    CoefficientBinding out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        const auto nl = source.find('\n', start);
        const auto end = nl == std::string_view::npos ? source.size() : nl;
        ++line_no;
        LineCursor cur(strip_comment(source.substr(start, end - start)), line_no);
        if (!cur.at_end()) {
            const std::size_t col = cur.column();
            const std::string name = cur.identifier("coefficient name");
            cur.expect('=', "'='");
            const std::size_t vcol = cur.column();
            if (cur.peek() == '-') cur.fail(ErrorCode::NonPositiveCoefficient, "coefficient must be positive");
            const std::string num = cur.digits("number");
            std::string den = "1";
            if (cur.consume('/')) den = cur.digits("denominator");
            if (!cur.at_end()) cur.fail(ErrorCode::Syntax, "unexpected character");
            const BigInt p(num, 10);
            const BigInt q(den, 10);
            if (p == 0 || q == 0)
                throw ParseError(ErrorCode::NonPositiveCoefficient, line_no, vcol, "coefficient must be positive");
            if (!out.emplace(name, BigRational(p, q)).second)
                throw ParseError(ErrorCode::DuplicateCoefficientName, line_no, col, "duplicate binding for '" + name + "'");
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return out;
}

} // namespace subtrop
