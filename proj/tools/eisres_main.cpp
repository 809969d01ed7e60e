#include "eisres/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    eisres::RunConfig c;
    c.precision = eisres::default_precision();

    CLI::App app{"Twisted partial L-values and Eisenstein cusp residues over totally real fields"};
    app.set_version_flag("--version", std::string(eisres::kToolVersion));
    app.add_option("command", c.command, "Command to run")
        ->required()
        ->check(CLI::IsMember(eisres::kCommands));
    app.add_option("--field", c.field, "Builtin field (q, q_sqrt5) or field-spec path")->capture_default_str();
    app.add_option("--ideal", c.ideal, "Ideal: O, (x1,..,xg), or basis rows a,b;c,d")->capture_default_str();
    app.add_option("--level", c.level, "Level N")->capture_default_str();
    app.add_option("--b", c.b, "Twist b (coordinates)")->capture_default_str();
    app.add_option("--bprime", c.b_prime, "b' (coordinates)")->capture_default_str();
    app.add_option("--lambda", c.lambda, "Weight lambda")->capture_default_str();
    app.add_option("--s", c.s, "Integer s")->capture_default_str();
    app.add_option("--aprime", c.a_prime, "a' for verify-k (coordinates)")->capture_default_str();
    app.add_option("--b-ideal", c.b_ideal, "Integral ideal b for partial-zeta")->capture_default_str();
    app.add_option("--f-ideal", c.f_ideal, "Conductor f for partial-zeta")->capture_default_str();
    app.add_option("--modulus", c.modulus, "M for char-sum")->capture_default_str();
    app.add_option("--tau", c.tau, "Point re:im,re:im,... for eis-eval");
    app.add_option("--radius", c.radius, "Gamma radius for eis-eval")->capture_default_str();
    app.add_option("--r", c.r, "Height r for verify-cycle-g1")->capture_default_str();
    app.add_option("--precision", c.precision, "Working precision in bits (env EISRES_PRECISION)")
        ->capture_default_str()
        ->check(CLI::Range(53u, 65536u));
    app.add_option("--tolerance", c.tolerance, "Relative tolerance");
    app.add_option("--max-norm-bound", c.max_norm_bound, "Cap on the norm bound X (p/q)");
    app.add_option("--norm-bound", c.norm_bound, "Fixed norm bound X (p/q), no doubling");
    app.add_option("--threads", c.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
    app.add_flag("--certify", c.certify, "residue: also reconstruct a rational");
    app.add_flag("--json", c.json, "Emit JSON");
    app.add_option("--output,-o", c.output, "Write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);
    return eisres::run(c, std::cout, std::cerr);
}
