/*
   Copyright 2026 The maxcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// maxcurve: curve, audit, code, conjecture and normalize reports as JSON on stdout.
// Exit codes: 0 all checks pass, 1 an identity failed, 2 invalid input, 3 budget exceeded.

#include <iostream>

#include <CLI11.hpp>

#include "maxcurve/commands.hpp"

namespace {

using maxcurve::CommandConfig;

void add_field_flags(CLI::App* cmd, CommandConfig& c) {
    cmd->add_option("--p", c.p, "characteristic")->required();
    cmd->add_option("--a", c.a, "q = p^a")->required();
}

void add_curve_flags(CLI::App* cmd, CommandConfig& c) {
    add_field_flags(cmd, c);
    cmd->add_option("--hermitian-m", c.hermitian_m, "curve y^q + y = x^m, m | q+1");
    cmd->add_option("--additive", c.additive, "coefficients a_0,a_1,... of F(y) = sum a_i y^(p^i)")->delimiter(',');
    cmd->add_option("--d", c.d, "exponent of x for --additive");
}

int fail(const std::string& message, int code) {
    nlohmann::json err = {{"error", message}, {"exit_code", code}};
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal curves over F_{q^2}: counts, order sequences, identities and one-point codes"};
    app.require_subcommand(1);
    CommandConfig c;

    auto* curve = app.add_subcommand("curve", "genus, point counts, maximality and genus bounds");
    add_curve_flags(curve, c);

    auto* audit = app.add_subcommand("audit", "order sequences, divisor accounting, embedding and dichotomy");
    add_curve_flags(audit, c);
    audit->add_option("--sample-seed", c.sample_seed, "seed for sampled F_{q^4}-points");
    audit->add_option("--sample-size", c.sample_size, "non-rational points sampled when q is large");
    audit->add_option("--full-check-max-q", c.full_check_max_q, "check every F_{q^4}-point up to this q");
    audit->add_option("--orders-csv", c.orders_csv, "write order sequences (x, y, orders, type) to this path");

    auto* code = app.add_subcommand("code", "one-point code C(D, lambda P_inf)");
    add_curve_flags(code, c);
    code->add_option("--lambda", c.lambda, "degree of the divisor at infinity")->required();
    code->add_flag("--exact", c.exact, "exact minimum distance by codeword scan");
    code->add_option("--emit", c.emit, "write the generator matrix to this path");
    code->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    code->add_option("--budget", c.budget, "codeword-symbol operations allowed");

    auto* conj = app.add_subcommand("conjecture", "scan F(y) = x^d with F additive monic of degree m1");
    add_field_flags(conj, c);
    conj->add_option("--m1", c.m1, "degree of F, a power of p")->required();
    conj->add_option("--d", c.d, "exponent of x, default q+1");
    conj->add_option("--budget", c.budget, "coefficient vectors visited");

    auto* norm = app.add_subcommand("normalize", "bring a y^q + b y = x^m to y^q + y = x^m");
    add_field_flags(norm, c);
    norm->add_option("--coef-a", c.coef_a, "a (integer mod p or c0:c1:... digits)")->required();
    norm->add_option("--coef-b", c.coef_b, "b")->required();
    norm->add_option("--m", c.m, "exponent of x, m | q+1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        maxcurve::CommandResult r;
        if (app.got_subcommand(curve))
            r = maxcurve::run_curve(c);
        else if (app.got_subcommand(audit))
            r = maxcurve::run_audit(c);
        else if (app.got_subcommand(code))
            r = maxcurve::run_code(c);
        else if (app.got_subcommand(conj))
            r = maxcurve::run_conjecture(c);
        else
            r = maxcurve::run_normalize(c);
        std::cout << maxcurve::render(r.report);
        return r.exit_code;
    } catch (const maxcurve::Error& e) {
        return fail(e.what(), maxcurve::exit_code_for(e));
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
}
