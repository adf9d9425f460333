#include "ringdim/commands.hpp"
#include "ringdim/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CliInput {
    std::string file;
    std::string ring, vars, order, ideal;
    ringdim::RunOptions options;
    std::string scan_name = "asc";
};

void add_common(CLI::App* sub, CliInput& in, bool with_poly) {
    sub->add_option("file", in.file, "problem file (ring:/vars:/order:/ideal: headers)");
    sub->add_option("--ring", in.ring, "coefficient ring: ZZ, QQ or Fp:<p>");
    sub->add_option("--vars", in.vars, "comma separated variables, greatest first");
    sub->add_option("--order", in.order, "monomial order: lex, deglex or degrevlex");
    sub->add_option("--ideal", in.ideal, "generators separated by ';' (inline alternative to a file)");
    sub->add_option("--format", in.options.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--terms", in.options.terms, "series coefficients to display (default 8)");
    sub->add_option("--scan-order", in.scan_name, "left basic set scan: asc or desc precedence")
        ->check(CLI::IsMember({"asc", "desc"}));
    if (with_poly)
        sub->add_option("--poly", in.options.poly, "polynomial to reduce to normal form");
}

ringdim::ProblemSpec load_spec(const CliInput& in) {
    bool inline_given = !in.ring.empty() || !in.vars.empty() || !in.order.empty() || !in.ideal.empty();
    if (!in.file.empty() && inline_given)
        throw ringdim::input_error("give either a problem file or --ring/--vars/--order/--ideal, not both");
    if (!in.file.empty()) {
        std::ifstream fin(in.file);
        if (!fin)
            throw ringdim::input_error("cannot open '" + in.file + "'");
        std::ostringstream buf;
        buf << fin.rdbuf();
        return ringdim::parse_problem(buf.str());
    }
    if (in.ring.empty() || in.vars.empty() || in.order.empty() || in.ideal.empty())
        throw ringdim::input_error("need a problem file, or all of --ring, --vars, --order, --ideal");
    std::string contents = "ring: " + in.ring + "\nvars: " + in.vars + "\norder: " + in.order + "\nideal:\n";
    std::string gen;
    for (char c : in.ideal) {
        if (c == ';') {
            contents += gen + "\n";
            gen.clear();
        } else {
            gen += c;
        }
    }
    contents += gen + "\n";
    return ringdim::parse_problem(contents);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"free module representations and dimensions of residue class rings"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"gb", "check-free", "cdim", "hilbert", "kdim", "reduce"};
    const std::map<std::string, std::string> help = {
        {"gb", "reduced (strong) Groebner basis of the ideal"},
        {"check-free", "test whether the residue ring is a free module"},
        {"cdim", "combinatorial dimension and independent variable sets"},
        {"hilbert", "Hilbert series, coefficients and polynomial of the leading term ideal"},
        {"kdim", "Krull dimension of the residue class ring"},
        {"reduce", "normal form of --poly modulo the ideal"},
    };

    CliInput in;
    for (const std::string& name : commands)
        add_common(app.add_subcommand(name, help.at(name)), in, name == "reduce");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string command = app.get_subcommands().front()->get_name();
    in.options.scan = in.scan_name == "desc" ? ringdim::ScanOrder::DescendingPrecedence
                                             : ringdim::ScanOrder::AscendingPrecedence;
    try {
        ringdim::ProblemSpec spec = load_spec(in);
        return ringdim::execute(command, spec, in.options, std::cout, std::cerr);
    } catch (const ringdim::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
