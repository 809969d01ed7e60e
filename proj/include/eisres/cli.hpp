#ifndef EISRES_CLI_HPP
#define EISRES_CLI_HPP

#include "eisres/eisenstein.hpp"
#include "eisres/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eisres {

inline const std::vector<std::string> kCommands = {
    "lvalue", "lvalue-plus", "partial-zeta", "char-sum",   "eis-eval",
    "residue", "verify-k",   "verify-cycle-g1", "certify-ks", "nonvanishing",
};

struct RunConfig {
    std::string command;
    /// Builtin name ("q", "q_sqrt5") or path to a field-spec file.
    std::string field = "q";
    /// "O" (or "I", "1"), "(x1,...,xg)" for a principal ideal, or Z-basis rows "a,b;c,d".
    std::string ideal = "O";
    long level = 3;
    std::string b = "0";
    std::string b_prime = "0";
    long lambda = 3;
    long s = 2;
    std::string a_prime = "1";
    std::string b_ideal = "O";
    std::string f_ideal = "(3)";
    long modulus = 3;
    /// "re:im,re:im,..."; one entry per embedding.
    std::string tau;
    double radius = 16.0;
    double r = 1.0;
    unsigned precision = 128;
    std::optional<double> tolerance;
    std::optional<std::string> max_norm_bound;
    std::optional<std::string> norm_bound;
    unsigned threads = 1;
    bool certify = false;
    bool json = false;
    std::string output;
};

/// EISRES_PRECISION if set and valid, else 128.
unsigned default_precision();

FractionalIdeal parse_ideal(const TotallyRealField& field, const std::string& text);
FieldElement parse_element(const TotallyRealField& field, const std::string& text);
std::vector<cplx> parse_tau(const std::string& text);

/// Builds the report for `config`; module errors are reported, not thrown.
Report run_report(const RunConfig& config, int& exit_code);

/// Writes the report to config.output (or `out`); diagnostics go to `err`.
/// Returns 0 on success, 2 on NotCertified / Inconclusive, 1 otherwise.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace eisres

#endif
