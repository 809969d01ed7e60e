#include "eisres/cli.hpp"

#include "eisres/error.hpp"
#include "eisres/field_spec_io.hpp"
#include "eisres/residue.hpp"
#include "eisres/units.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace eisres {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
    }
}

LValueOptions lvalue_options(const RunConfig& c) {
    LValueOptions o;
    o.precision = c.precision;
    if (c.tolerance) o.tolerance = *c.tolerance;
    if (c.max_norm_bound) o.max_norm_bound = parse_rational(*c.max_norm_bound);
    if (c.norm_bound) o.fixed_norm_bound = parse_rational(*c.norm_bound);
    o.threads = c.threads;
    return o;
}

void add_lvalue(Report& r, const std::string& prefix, const LValueResult& l) {
    r.add(prefix + "value", l.value);
    r.add_double(prefix + "trunc_bound", l.trunc_bound);
    r.add_double(prefix + "round_bound", l.round_bound);
    r.add(prefix + "norm_bound_used", l.norm_bound_used);
    r.add(prefix + "term_count", static_cast<unsigned long>(l.term_count));
    r.add_double(prefix + "last_change", l.last_change);
    r.add(prefix + "doublings", l.doublings);
}

void add_cplx(Report& r, const std::string& key, cplx z) {
    r.add_double(key + ".re", z.real());
    r.add_double(key + ".im", z.imag());
}

void add_lvalue_params(Report& r, const RunConfig& c) {
    r.add("tolerance", format_double(lvalue_options(c).tolerance));
    r.add("max_norm_bound", lvalue_options(c).max_norm_bound);
    r.add("norm_bound", c.norm_bound ? *c.norm_bound : std::string("auto"));
}

TorsionDatum make_datum(const TotallyRealField& field, const RunConfig& c) {
    return TorsionDatum{parse_ideal(field, c.ideal), c.level, parse_element(field, c.b_prime),
                        parse_element(field, c.b), c.lambda};
}

void add_datum(Report& r, const TorsionDatum& d, bool with_b_prime) {
    r.add("ideal", d.a.to_string());
    r.add("level", d.level);
    if (with_b_prime) r.add("b_prime", d.b_prime.to_string());
    r.add("b", d.b.to_string());
    r.add("lambda", d.lambda);
}

void command_body(const RunConfig& c, const TotallyRealField& field, Report& r, int& code) {
    const std::string& cmd = c.command;
    if (cmd == "lvalue" || cmd == "lvalue-plus") {
        const auto a = parse_ideal(field, c.ideal);
        const auto b = parse_element(field, c.b);
        r.add("ideal", a.to_string());
        r.add("level", c.level);
        r.add("b", b.to_string());
        r.add("s", c.s);
        add_lvalue_params(r, c);
        const auto l = cmd == "lvalue" ? lvalue(field, a, c.level, b, c.s, lvalue_options(c))
                                       : lvalue_plus(field, a, c.level, b, c.s, lvalue_options(c));
        add_lvalue(r, "", l);
    } else if (cmd == "partial-zeta") {
        const auto bi = parse_ideal(field, c.b_ideal);
        const auto fi = parse_ideal(field, c.f_ideal);
        r.add("b_ideal", bi.to_string());
        r.add("f_ideal", fi.to_string());
        r.add("s", c.s);
        add_lvalue_params(r, c);
        add_lvalue(r, "", partial_zeta(field, bi, fi, c.s, lvalue_options(c)));
    } else if (cmd == "char-sum") {
        const auto a = parse_ideal(field, c.ideal);
        const auto b = parse_element(field, c.b);
        r.add("ideal", a.to_string());
        r.add("b", b.to_string());
        r.add("modulus", c.modulus);
        r.add("value", character_sum(field, a, b, c.modulus, c.precision));
    } else if (cmd == "eis-eval") {
        const auto d = make_datum(field, c);
        validate_torsion_datum(field, d);
        const auto tau = parse_tau(c.tau);
        add_datum(r, d, true);
        for (std::size_t k = 0; k < tau.size(); ++k) add_cplx(r, "tau." + std::to_string(k + 1), tau[k]);
        r.add_double("radius", c.radius);
        const auto form = eis_form_value(field, d, tau, c.radius);
        r.add("prefactor", form.prefactor);
        r.add("two_pi_i_power", form.two_pi_i_power);
        r.add("term_count", static_cast<unsigned long>(form.term_count));
        r.add_double("tail_estimate", form.tail_estimate);
        const auto proj = pr_res_project(d, form);
        for (std::size_t k = 0; k < proj.size(); ++k) add_cplx(r, "pr_res.mu" + std::to_string(k + 1), proj[k]);
    } else if (cmd == "residue") {
        const auto d = make_datum(field, c);
        add_datum(r, d, false);
        add_lvalue_params(r, c);
        r.add("certify", c.certify);
        ResidueOptions o;
        o.lvalue = lvalue_options(c);
        o.certify = c.certify;
        const auto rep = residue_closed_form(field, d, o);
        r.add("rational_prefactor", rep.rational_prefactor);
        r.add("discriminant", rep.discriminant);
        r.add("two_pi_i_exponent", rep.two_pi_i_exponent);
        r.add("l_value.s", d.lambda + 2);
        add_lvalue(r, "l_value.", rep.l_value);
        r.add("numeric_value", rep.numeric_value);
        r.add_double("error_bound", rep.error_bound);
        if (rep.certificate) r.add("certificate", *rep.certificate);
    } else if (cmd == "verify-k") {
        const auto ap = parse_element(field, c.a_prime);
        r.add("a_prime", ap.to_string());
        r.add("lambda", c.lambda);
        const double tol = c.tolerance.value_or(1e-10);
        r.add_double("tolerance", tol);
        const auto q = k_integral_quadrature(field, ap, c.lambda, tol);
        const auto closed = k_integral_closed_form(field, ap, c.lambda, c.precision);
        const double cf = closed.to_double();
        const double rel = std::abs(q.value - cf) / std::abs(cf);
        r.add_double("quadrature", q.value);
        r.add_double("quadrature.change", q.change);
        r.add_double("quadrature.step", q.step);
        r.add_double("quadrature.half_width", q.half_width);
        r.add("closed_form", closed);
        r.add_double("ratio", q.value / cf);
        r.add_double("rel_error", rel);
        r.add_double("threshold", 1e-8);
        const bool pass = rel <= 1e-8;
        r.add("verdict", pass ? "PASS" : "FAIL");
        if (!pass) code = 1;
    } else if (cmd == "verify-cycle-g1") {
        const auto d = make_datum(field, c);
        add_datum(r, d, true);
        r.add_double("r", c.r);
        CycleOptions co;
        co.r = c.r;
        co.tolerance = c.tolerance.value_or(1e-6);
        r.add_double("tolerance", co.tolerance);
        const auto cyc = cycle_residue_quadrature_g1(field, d, co);
        ResidueOptions ro;
        ro.lvalue = lvalue_options(c);
        const auto rep = residue_closed_form(field, d, ro);
        const cplx closed(rep.numeric_value.re.to_double(), rep.numeric_value.im.to_double());
        add_cplx(r, "cycle", cyc.value);
        add_cplx(r, "cycle.zero_sector", cyc.zero_sector);
        add_cplx(r, "cycle.nonzero_sector", cyc.nonzero_sector);
        r.add_double("cycle.change", cyc.change);
        r.add_double("cycle.volume", cyc.volume);
        r.add("cycle.a_prime_radius", cyc.a_prime_radius);
        r.add("cycle.a_radius", cyc.a_radius);
        r.add("cycle.points", cyc.points);
        r.add("rational_prefactor", rep.rational_prefactor);
        add_cplx(r, "closed_form", closed);
        const cplx ratio = cyc.value / closed;
        const double rel = std::abs(cyc.value - closed) / std::abs(closed);
        add_cplx(r, "ratio", ratio);
        r.add_double("rel_error", rel);
        r.add_double("threshold", 1e-4);
        const bool pass = rel <= 1e-4;
        r.add("verdict", pass ? "PASS" : "FAIL");
        if (!pass) code = 1;
    } else if (cmd == "certify-ks") {
        const auto a = parse_ideal(field, c.ideal);
        const auto b = parse_element(field, c.b);
        r.add("ideal", a.to_string());
        r.add("level", c.level);
        r.add("b", b.to_string());
        r.add("lambda", c.lambda);
        CertifyOptions o;
        o.lvalue = lvalue_options(c);
        if (!c.tolerance) o.lvalue.tolerance = kCertifyTolerance;
        r.add("tolerance", format_double(o.lvalue.tolerance));
        r.add("max_norm_bound", o.lvalue.max_norm_bound);
        r.add("norm_bound", c.norm_bound ? *c.norm_bound : std::string("auto"));
        const auto cert = klingen_siegel_certify(field, a, c.level, b, c.lambda, o);
        r.add("certificate", cert.value);
        r.add("denom_bound", cert.denom_bound);
        for (std::size_t i = 0; i < cert.runs.size(); ++i) {
            const auto& run = cert.runs[i];
            const std::string p = "run" + std::to_string(i + 1) + ".";
            r.add(p + "precision", run.precision);
            r.add(p + "norm_bound", run.norm_bound);
            r.add(p + "q_hat", run.q_hat);
            r.add_double(p + "budget", run.budget);
            r.add_double(p + "residual", run.residual);
            r.add(p + "term_count", static_cast<unsigned long>(run.l_value.term_count));
        }
    } else if (cmd == "nonvanishing") {
        const auto d = make_datum(field, c);
        add_datum(r, d, true);
        add_lvalue_params(r, c);
        const auto res = nonvanishing_check(field, d, lvalue_options(c));
        r.add("l_value.s", d.lambda + 2);
        add_lvalue(r, "l_value.", res.l_value);
        r.add_double("abs_value", res.abs_value);
        r.add_double("error_budget", res.error_budget);
        r.add_double("margin", res.margin);
        r.add("nonzero", res.nonzero);
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown command '" + cmd + "'");
    }
}

}  // namespace

unsigned default_precision() {
    if (const char* env = std::getenv("EISRES_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 53 && v <= 1 << 16) return static_cast<unsigned>(v);
    }
    return 128;
}

FractionalIdeal parse_ideal(const TotallyRealField& field, const std::string& text) {
    const std::string t = trim(text);
    if (t == "O" || t == "I" || t == "1") return FractionalIdeal::unit(field);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
        return FractionalIdeal::principal(field, parse_element(field, t.substr(1, t.size() - 2)));
    QMatrix rows;
    for (const auto& row : split(t, ';')) {
        QVector v = parse_rational_list(row);
        if (v.size() != field.degree())
            throw Error(ErrorCode::ParseError, "ideal row '" + row + "' needs " + std::to_string(field.degree()) +
                                                   " entries");
        rows.push_back(std::move(v));
    }
    if (rows.size() != field.degree())
        throw Error(ErrorCode::ParseError, "ideal '" + t + "' needs " + std::to_string(field.degree()) + " rows");
    return FractionalIdeal::from_basis(field, rows);
}

FieldElement parse_element(const TotallyRealField& field, const std::string& text) {
    QVector v = parse_rational_list(text);
    if (v.empty() || v.size() > field.degree())
        throw Error(ErrorCode::ParseError, "element '" + text + "' needs 1.." + std::to_string(field.degree()) +
                                               " coordinates");
    return field.element(std::move(v));
}

std::vector<cplx> parse_tau(const std::string& text) {
    std::vector<cplx> tau;
    for (const auto& part : split(text, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "tau entry '" + part + "' is not re:im");
        tau.emplace_back(parse_double(trim(part.substr(0, colon))), parse_double(trim(part.substr(colon + 1))));
    }
    return tau;
}

Report run_report(const RunConfig& config, int& exit_code) {
    Report r;
    r.add("tool_version", kToolVersion);
    r.add("command", config.command);
    exit_code = 0;
    try {
        const auto field = TotallyRealField::load(read_field_spec(config.field), config.precision);
        r.add("field", field.label());
        r.add("degree", static_cast<unsigned long>(field.degree()));
        r.add("precision", config.precision);
        command_body(config, field, r, exit_code);
        r.add("status", exit_code == 0 ? "ok" : "fail");
    } catch (const Error& e) {
        r.add("status", "error");
        r.add("error_code", static_cast<int>(e.code()));
        r.add("error_name", std::string(error_name(e.code())));
        r.add("message", e.what());
        exit_code = (e.code() == ErrorCode::NotCertified || e.code() == ErrorCode::Inconclusive) ? 2 : 1;
    }
    return r;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    int code = 0;
    Report r;
    try {
        r = run_report(config, code);
    } catch (const std::exception& e) {
        err << "eisres: " << e.what() << '\n';
        return 1;
    }
    const std::string body = config.json ? r.json() : r.text();
    if (config.output.empty()) {
        out << body;
    } else {
        std::ofstream f(config.output, std::ios::binary);
        if (!f) {
            err << "eisres: cannot write " << config.output << '\n';
            return 1;
        }
        f << body;
    }
    if (r.get("status") == "error") err << "eisres: " << r.get("message") << '\n';
    return code;
}

}  // namespace eisres
