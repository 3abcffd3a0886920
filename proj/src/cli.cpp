#include "perichar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "perichar/euler.hpp"
#include "perichar/selftest.hpp"
#include "perichar/serialize.hpp"
#include "perichar/superchar.hpp"

namespace perichar::cli {

namespace {

constexpr const char* kGrammar =
    "usage: perichar <schur|thinkac|diagram|member|ds|translate|tensorv|kernel|euler|probe|selftest>\n"
    "                [--n INT] [--weight CSV] [--k INT] [--gamma CSV]\n"
    "                [--a INT | --a-min INT --a-max INT]\n"
    "                [--poly-file PATH | --stdin] [--json | --text]\n";

struct CommonOpts {
    std::string weight_csv;
    std::string gamma_csv;
    int n = -1;
    std::int64_t k = std::numeric_limits<std::int64_t>::min();
    std::int64_t a = std::numeric_limits<std::int64_t>::min();
    std::int64_t a_min = std::numeric_limits<std::int64_t>::min();
    std::int64_t a_max = std::numeric_limits<std::int64_t>::min();
    std::string poly_file;
    bool use_stdin = false;
    bool json = false;
    bool text = false;

    bool has(std::int64_t v) const { return v != std::numeric_limits<std::int64_t>::min(); }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Weight required_weight(const CommonOpts& o) {
    if (o.weight_csv.empty()) throw UsageError("--weight is required for this command");
    Weight w = parse_csv_integers(o.weight_csv);
    if (o.n >= 0 && o.n != static_cast<int>(w.size()))
        throw UsageError("--n disagrees with the length of --weight");
    return w;
}

LaurentPolynomial read_poly(const CommonOpts& o, std::istream& in) {
    if (o.use_stdin == o.poly_file.empty())
        throw UsageError("exactly one of --poly-file or --stdin is required");
    std::string text;
    if (o.use_stdin) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(o.poly_file);
        if (!file) throw DomainError("cannot open polynomial file: " + o.poly_file);
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    LaurentPolynomial f = poly_from_string(text);
    if (o.n >= 0 && o.n != f.nvars()) throw UsageError("--n disagrees with the polynomial's nvars");
    return f;
}

void print_poly(const LaurentPolynomial& f, const CommonOpts& o, std::ostream& out) {
    out << (o.json ? poly_to_string(f) : poly_to_text(f)) << "\n";
}

void print_combo(const ThinKacCombination& c, const CommonOpts& o, std::ostream& out) {
    out << (o.json ? combo_to_json(c).dump() : combo_to_text(c)) << "\n";
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n);
    cmd->add_option("--weight", o.weight_csv);
    cmd->add_option("--k", o.k);
    cmd->add_option("--gamma", o.gamma_csv);
    cmd->add_option("--a", o.a);
    cmd->add_option("--a-min", o.a_min);
    cmd->add_option("--a-max", o.a_max);
    cmd->add_option("--poly-file", o.poly_file);
    cmd->add_flag("--stdin", o.use_stdin);
    cmd->add_flag("--json", o.json);
    cmd->add_flag("--text", o.text);
}

int dispatch(const std::string& sub, const CommonOpts& o, std::istream& in, std::ostream& out) {
    const CancelToken* cancel = &global_cancel();
    if (sub == "schur") {
        print_poly(schur_laurent(required_weight(o)), o, out);
    } else if (sub == "thinkac") {
        print_poly(sch_thin_kac(required_weight(o)).poly(), o, out);
    } else if (sub == "diagram") {
        const Weight w = required_weight(o);
        const WeightDiagram d = to_diagram(w);
        if (o.json) {
            nlohmann::ordered_json j;
            j["n"] = static_cast<int>(w.size());
            j["bullets"] = d.bullets;
            out << j.dump() << "\n";
        } else {
            std::int64_t lo, hi;
            if (o.has(o.a_min) && o.has(o.a_max)) {
                lo = o.a_min;
                hi = o.a_max;
            } else if (!d.bullets.empty()) {
                lo = d.bullets.back() - 2;
                hi = d.bullets.front() + 2;
            } else {
                lo = -2;
                hi = 2;
            }
            out << render_diagram(w, lo, hi);
        }
    } else if (sub == "member") {
        LaurentPolynomial f = read_poly(o, in);
        const SupercharElement elem(f.nvars(), std::move(f));
        out << (jn_membership(elem) ? "true" : "false") << "\n";
    } else if (sub == "ds") {
        LaurentPolynomial f = read_poly(o, in);
        const int k = o.has(o.k) ? static_cast<int>(o.k) : 1;
        SupercharElement elem(f.nvars(), std::move(f));
        print_poly(ds_iterate(elem, k).poly(), o, out);
    } else if (sub == "translate") {
        if (!o.has(o.k)) throw UsageError("--k is required for translate");
        print_combo(translate_thin_kac(required_weight(o), o.k), o, out);
    } else if (sub == "tensorv") {
        print_combo(tensor_V_decompose(required_weight(o)), o, out);
    } else if (sub == "kernel") {
        LaurentPolynomial f = read_poly(o, in);
        const SupercharElement elem(f.nvars(), std::move(f));
        print_combo(kernel_decompose(elem), o, out);
    } else if (sub == "euler") {
        if (o.gamma_csv.empty()) throw UsageError("--gamma is required for euler");
        const Weight lambda = required_weight(o);
        const std::vector<std::int64_t> gamma = parse_csv_integers(o.gamma_csv);
        print_poly(euler_characteristic(lambda, gamma, cancel).poly(), o, out);
    } else if (sub == "probe") {
        if (o.n < 0 || !o.has(o.k)) throw UsageError("--n and --k are required for probe");
        std::int64_t lo, hi;
        if (o.has(o.a)) {
            if (o.has(o.a_min) || o.has(o.a_max)) throw UsageError("--a excludes --a-min/--a-max");
            lo = hi = o.a;
        } else if (o.has(o.a_min) && o.has(o.a_max)) {
            lo = o.a_min;
            hi = o.a_max;
        } else {
            throw UsageError("probe needs --a or both --a-min and --a-max");
        }
        const ProbeReport report = surjectivity_probe(o.n, static_cast<int>(o.k), lo, hi, cancel);
        out << (o.text ? probe_to_text(report) : probe_to_json(report).dump() + "\n");
    } else {
        throw UsageError("unknown subcommand: " + sub);
    }
    return 0;
}

} // namespace

CancelToken& global_cancel() {
    static CancelToken token;
    return token;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact supercharacter computations for the periplectic supergroup P(n)", "perichar"};
    app.require_subcommand(1);

    const std::vector<std::string> names = {"schur",   "thinkac", "diagram", "member", "ds",
                                            "translate", "tensorv", "kernel",  "euler",  "probe"};
    std::map<std::string, CommonOpts> opts;
    for (const auto& name : names) {
        auto* cmd = app.add_subcommand(name);
        add_common(cmd, opts[name]);
    }
    auto* selftest_cmd = app.add_subcommand("selftest");
    bool quick = false, full = false;
    selftest_cmd->add_flag("--quick", quick);
    selftest_cmd->add_flag("--full", full);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (selftest_cmd->parsed()) {
            if (quick && full) throw UsageError("--quick excludes --full");
            const auto scale = full ? selftest::Scale::full : selftest::Scale::quick;
            const selftest::Report report = selftest::run(scale, &global_cancel(), &out);
            return report.all_pass() ? 0 : 1;
        }
        for (const auto& name : names)
            if (app.get_subcommand(name)->parsed()) return dispatch(name, opts[name], in, out);
        throw UsageError("no subcommand given");
    } catch (const CLI::CallForHelp&) {
        out << app.help() << kGrammar;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ERROR: " << e.what() << "\n" << kGrammar;
        return 2;
    } catch (const UsageError& e) {
        err << "ERROR: " << e.what() << "\n" << kGrammar;
        return 2;
    } catch (const OperationCancelled&) {
        err << "ERROR: cancelled\n";
        return 130;
    } catch (const DomainError& e) {
        err << "ERROR: " << e.what() << "\n";
        return 1;
    }
}

} // namespace perichar::cli
