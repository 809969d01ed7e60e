#include "eisres/field_spec_io.hpp"

#include "eisres/error.hpp"

#include <fstream>
#include <sstream>

namespace eisres {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

QVector parse_row(const std::string& text) {
    std::istringstream is(text);
    QVector row;
    std::string tok;
    while (is >> tok) row.push_back(parse_rational(tok));
    return row;
}

const char* const kQ = R"(field-spec v1
label: q
poly: 0 1
integral_basis:
  1
fundamental_units:
)";

const char* const kQSqrt5 = R"(field-spec v1
label: q_sqrt5
poly: -1 -1 1
integral_basis:
  1 0
  0 1
fundamental_units:
  0 1
)";

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw Error(ErrorCode::ParseError, "empty rational");
    const auto slash = t.find('/');
    auto integer = [&](const std::string& s) {
        std::string u = s;
        if (!u.empty() && u[0] == '+') u = u.substr(1);
        if (u.empty() || u == "-") throw Error(ErrorCode::ParseError, "malformed rational '" + t + "'");
        for (std::size_t i = (u[0] == '-') ? 1 : 0; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') throw Error(ErrorCode::ParseError, "malformed rational '" + t + "'");
        return Integer(u);
    };
    if (slash == std::string::npos) return Rational(integer(t));
    Integer num = integer(trim(t.substr(0, slash)));
    Integer den = integer(trim(t.substr(slash + 1)));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + t + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QVector parse_rational_list(const std::string& text, char sep) {
    QVector out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) out.push_back(parse_rational(cur));
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
    return out;
}

FieldSpec parse_field_spec(std::istream& in) {
    FieldSpec spec;
    std::string line;
    bool header = false;
    QMatrix* target = nullptr;
    bool have_poly = false;
    bool have_basis = false;
    bool have_units = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const bool indented = !line.empty() && (line[0] == ' ' || line[0] == '\t');
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (!header) {
            if (t != "field-spec v1")
                throw Error(ErrorCode::ParseError, "expected header 'field-spec v1' on line " + std::to_string(lineno));
            header = true;
            continue;
        }
        if (indented) {
            if (!target) throw Error(ErrorCode::ParseError, "unexpected indented line " + std::to_string(lineno));
            target->push_back(parse_row(t));
            continue;
        }
        const auto colon = t.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::ParseError, "expected 'key:' on line " + std::to_string(lineno));
        const std::string key = trim(t.substr(0, colon));
        const std::string value = trim(t.substr(colon + 1));
        target = nullptr;
        if (key == "label") {
            spec.label = value;
        } else if (key == "poly") {
            for (const auto& q : parse_row(value)) {
                if (q.get_den() != 1) throw Error(ErrorCode::ParseError, "poly coefficients must be integers");
                spec.poly.push_back(q.get_num());
            }
            have_poly = true;
        } else if (key == "integral_basis") {
            target = &spec.integral_basis;
            have_basis = true;
            if (!value.empty()) target->push_back(parse_row(value));
        } else if (key == "fundamental_units") {
            target = &spec.fundamental_units;
            have_units = true;
            if (!value.empty()) target->push_back(parse_row(value));
        } else {
            throw Error(ErrorCode::ParseError, "unknown key '" + key + "' on line " + std::to_string(lineno));
        }
    }
    if (!header) throw Error(ErrorCode::ParseError, "missing header 'field-spec v1'");
    if (!have_poly || !have_basis || !have_units)
        throw Error(ErrorCode::ParseError, "field spec needs poly, integral_basis and fundamental_units");
    return spec;
}

FieldSpec parse_field_spec(const std::string& text) {
    std::istringstream is(text);
    return parse_field_spec(is);
}

std::string format_field_spec(const FieldSpec& spec) {
    std::ostringstream os;
    os << "field-spec v1\nlabel: " << spec.label << "\npoly:";
    for (const auto& c : spec.poly) os << ' ' << c.get_str();
    os << "\nintegral_basis:\n";
    for (const auto& row : spec.integral_basis) {
        os << ' ';
        for (const auto& x : row) os << ' ' << x.get_str();
        os << '\n';
    }
    os << "fundamental_units:\n";
    for (const auto& row : spec.fundamental_units) {
        os << ' ';
        for (const auto& x : row) os << ' ' << x.get_str();
        os << '\n';
    }
    return os.str();
}

std::optional<FieldSpec> builtin_field_spec(const std::string& name) {
    if (name == "q") return parse_field_spec(std::string(kQ));
    if (name == "q_sqrt5") return parse_field_spec(std::string(kQSqrt5));
    return std::nullopt;
}

FieldSpec read_field_spec(const std::string& name_or_path) {
    if (auto b = builtin_field_spec(name_or_path)) return *b;
    std::ifstream in(name_or_path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open field spec '" + name_or_path + "'");
    return parse_field_spec(in);
}

}  // namespace eisres
