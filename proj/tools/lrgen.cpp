#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrgen/generic_ext.hpp"
#include "lrgen/oracle.hpp"
#include "lrgen/star.hpp"
#include "lrgen/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

std::string read_arg(const std::string& arg) {
    if (arg != "-")
        return arg;
    std::string line, all;
    while (std::getline(std::cin, line)) {
        if (!all.empty())
            all += ' ';
        all += line;
    }
    return all;
}

struct StarArgs {
    std::string left, right;
    std::string render;
    bool trace = false;
    bool json = false;
};

int run_star(const StarArgs& args) {
    std::string left_text = read_arg(args.left);
    std::string right_text = read_arg(args.right);
    bool extended = lrgen::has_free_field(left_text) || lrgen::has_free_field(right_text);
    lrgen::ExtTableau y = lrgen::parse_tableau(left_text);  // left factor
    lrgen::ExtTableau x = lrgen::parse_tableau(right_text); // right factor

    nlohmann::json out;
    lrgen::StarTrace trace_data;
    lrgen::ExtTableau z;
    if (extended) {
        z = lrgen::star_ext(x, y);
    } else {
        z = lrgen::ExtTableau(lrgen::star_lr1(x.tab, y.tab, args.trace ? &trace_data : nullptr), 0);
    }

    if (args.json) {
        out["beta"] = lrgen::to_string(z.tab.beta());
        out["gamma"] = lrgen::to_string(z.tab.gamma());
        if (extended)
            out["free"] = z.free;
        if (args.trace && !extended) {
            out["trace"] = {{"counters", trace_data.counters},
                            {"appended", trace_data.appended_ones}};
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << lrgen::to_string(z) << "\n";
        if (args.trace && !extended) {
            std::cout << "trace:";
            for (std::size_t i = 0; i < trace_data.counters.size(); ++i)
                std::cout << " n_" << i << "=" << trace_data.counters[i];
            std::cout << " appended=" << trace_data.appended_ones << "\n";
        }
    }
    if (!args.render.empty()) {
        auto conv = args.render == "paper" ? lrgen::RenderConvention::Paper
                                           : lrgen::RenderConvention::Definition;
        std::cout << lrgen::render(z.tab, conv);
    }
    return kExitOk;
}

int classify_error(const std::exception& e) {
    if (dynamic_cast<const lrgen::SearchSpaceTooLarge*>(&e))
        return kExitGuard;
    if (dynamic_cast<const lrgen::NonUniqueMinimum*>(&e))
        return kExitVerificationFailed;
    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operations on LR-tableaux with unit entries and generic extensions of "
                 "nilpotent linear operator homomorphisms"};
    app.require_subcommand(1);

    StarArgs star_args;
    auto* star = app.add_subcommand("star", "product of two tableaux (left * right)");
    star->add_option("left", star_args.left, "left factor, beta=..;gamma=..[;free=n]")->required();
    star->add_option("right", star_args.right, "right factor")->required();
    star->add_option("--render", star_args.render, "draw the result")
        ->check(CLI::IsMember({"definition", "paper"}));
    star->add_flag("--trace", star_args.trace, "print the internal counters n_i");
    star->add_flag("--json", star_args.json);

    std::string fill_tableau;
    int fill_n = 0;
    bool fill_json = false;
    auto* fill_cmd = app.add_subcommand("fill", "place n entries into empty rows, bottom-up");
    fill_cmd->add_option("tableau", fill_tableau)->required();
    fill_cmd->add_option("n", fill_n)->required()->check(CLI::NonNegativeNumber);
    fill_cmd->add_flag("--json", fill_json);

    std::string decompose_arg;
    bool decompose_json = false;
    auto* decompose = app.add_subcommand("decompose", "tableau to picket form");
    decompose->add_option("tableau", decompose_arg)->required();
    decompose->add_flag("--json", decompose_json);

    std::string compose_arg;
    bool compose_json = false;
    auto* compose = app.add_subcommand("compose", "picket form to tableau");
    compose->add_option("object", compose_arg)->required();
    compose->add_flag("--json", compose_json);

    std::string homdim_m, homdim_n;
    bool homdim_json = false;
    auto* homdim = app.add_subcommand("homdim", "dim Hom(first, second)");
    homdim->add_option("from", homdim_m)->required();
    homdim->add_option("to", homdim_n)->required();
    homdim->add_flag("--json", homdim_json);

    std::string homorder_m, homorder_n;
    bool homorder_json = false;
    auto* homorder = app.add_subcommand("homorder", "test first <=_hom second");
    homorder->add_option("first", homorder_m)->required();
    homorder->add_option("second", homorder_n)->required();
    homorder->add_flag("--json", homorder_json);

    std::string endo_arg;
    bool endo_json = false;
    auto* endo = app.add_subcommand("endo", "endomorphism ring dimension");
    endo->add_option("object", endo_arg)->required();
    endo->add_flag("--json", endo_json);

    std::string genext_n, genext_m;
    bool genext_json = false;
    auto* genext = app.add_subcommand("genext", "generic extension N*M, combinatorially");
    genext->add_option("N", genext_n, "quotient object")->required();
    genext->add_option("M", genext_m, "sub-object")->required();
    genext->add_flag("--json", genext_json);

    std::string oracle_n, oracle_m;
    int oracle_prime = 2;
    int oracle_max_homdim = 20;
    std::int64_t oracle_max_b = 6;
    bool oracle_serial = false, oracle_json = false, oracle_dump = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force generic extension vs the algorithm");
    oracle->add_option("N", oracle_n)->required();
    oracle->add_option("M", oracle_m)->required();
    oracle->add_option("--prime", oracle_prime)->check(CLI::IsMember({2, 3, 5, 7}));
    oracle->add_option("--max-homdim", oracle_max_homdim);
    oracle->add_option("--max-b", oracle_max_b);
    oracle->add_flag("--serial", oracle_serial, "disable the OpenMP candidate scan");
    oracle->add_flag("--dump-matrices", oracle_dump, "print the realizations");
    oracle->add_flag("--json", oracle_json);

    std::string verify_suite = "main";
    int verify_max_b = 5;
    int verify_max_free = 2;
    int verify_prime = 2;
    int verify_trials = 10000;
    int verify_max_weight = 12;
    std::uint64_t verify_seed = 20260809;
    bool verify_serial = false, verify_json = false;
    auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify->add_option("--suite", verify_suite)
        ->check(CLI::IsMember({"table", "roundtrip", "main", "assoc", "lemmas"}));
    verify->add_option("--max-b", verify_max_b);
    verify->add_option("--max-free", verify_max_free);
    verify->add_option("--prime", verify_prime)->check(CLI::IsMember({2, 3, 5, 7}));
    verify->add_option("--trials", verify_trials);
    verify->add_option("--max-weight", verify_max_weight);
    verify->add_option("--seed", verify_seed);
    verify->add_flag("--serial", verify_serial);
    verify->add_flag("--json", verify_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (star->parsed())
            return run_star(star_args);

        if (fill_cmd->parsed()) {
            lrgen::ExtTableau x = lrgen::parse_tableau(read_arg(fill_tableau));
            lrgen::FillResult r = lrgen::fill(x.tab, fill_n);
            lrgen::ExtTableau z(r.tab, r.leftover);
            if (fill_json) {
                nlohmann::json out{{"beta", lrgen::to_string(z.tab.beta())},
                                   {"gamma", lrgen::to_string(z.tab.gamma())},
                                   {"free", z.free}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << lrgen::to_string(z) << "\n";
            }
            return kExitOk;
        }

        if (decompose->parsed()) {
            lrgen::ExtTableau t = lrgen::parse_tableau(read_arg(decompose_arg));
            std::string pickets = lrgen::to_string(lrgen::from_ext_tableau(t));
            if (decompose_json)
                std::cout << nlohmann::json{{"pickets", pickets}}.dump() << "\n";
            else
                std::cout << pickets << "\n";
            return kExitOk;
        }

        if (compose->parsed()) {
            lrgen::H1Object m = lrgen::parse_object(read_arg(compose_arg));
            lrgen::ExtTableau t = lrgen::gamma_hat(m);
            if (compose_json) {
                nlohmann::json out{{"beta", lrgen::to_string(t.tab.beta())},
                                   {"gamma", lrgen::to_string(t.tab.gamma())},
                                   {"free", t.free}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << lrgen::to_string(t) << "\n";
            }
            return kExitOk;
        }

        if (homdim->parsed()) {
            auto d = lrgen::hom_dim(lrgen::parse_object(read_arg(homdim_m)),
                                    lrgen::parse_object(read_arg(homdim_n)));
            if (homdim_json)
                std::cout << nlohmann::json{{"dim", d}}.dump() << "\n";
            else
                std::cout << d << "\n";
            return kExitOk;
        }

        if (homorder->parsed()) {
            bool leq = lrgen::hom_leq(lrgen::parse_object(read_arg(homorder_m)),
                                      lrgen::parse_object(read_arg(homorder_n)));
            std::string text = leq ? "LEQ" : "NOT_LEQ";
            if (homorder_json)
                std::cout << nlohmann::json{{"order", text}}.dump() << "\n";
            else
                std::cout << text << "\n";
            return kExitOk;
        }

        if (endo->parsed()) {
            auto d = lrgen::end_dim(lrgen::parse_object(read_arg(endo_arg)));
            if (endo_json)
                std::cout << nlohmann::json{{"dim", d}}.dump() << "\n";
            else
                std::cout << d << "\n";
            return kExitOk;
        }

        if (genext->parsed()) {
            lrgen::H1Object result = lrgen::generic_extension(
                lrgen::parse_object(read_arg(genext_n)), lrgen::parse_object(read_arg(genext_m)));
            std::string text = lrgen::to_string(result);
            if (genext_json)
                std::cout << nlohmann::json{{"result", text}}.dump() << "\n";
            else
                std::cout << text << "\n";
            return kExitOk;
        }

        if (oracle->parsed()) {
            lrgen::H1Object n = lrgen::parse_object(read_arg(oracle_n));
            lrgen::H1Object m = lrgen::parse_object(read_arg(oracle_m));
            lrgen::OracleOptions opts;
            opts.field = lrgen::FieldParam(oracle_prime);
            opts.max_hom_dim = oracle_max_homdim;
            opts.max_total_b = oracle_max_b;
            opts.parallel = !oracle_serial;
            if (oracle_dump) {
                for (const auto& [label, obj] : {std::pair{"N", n}, std::pair{"M", m}}) {
                    lrgen::MatObject mat = lrgen::realize(obj, opts.field);
                    std::cout << label << " = " << lrgen::to_string(obj) << "\n"
                              << "J =\n"
                              << mat.j.to_text() << "f =\n"
                              << mat.f.to_text();
                }
            }
            lrgen::H1Object brute = lrgen::brute_generic_ext(n, m, opts);
            lrgen::H1Object combinatorial = lrgen::generic_extension(n, m);
            bool agree = brute == combinatorial;
            if (oracle_json) {
                nlohmann::json out{{"oracle", lrgen::to_string(brute)},
                                   {"combinatorial", lrgen::to_string(combinatorial)},
                                   {"agree", agree}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "oracle: " << lrgen::to_string(brute) << "\n"
                          << "combinatorial: " << lrgen::to_string(combinatorial) << "\n"
                          << (agree ? "AGREE" : "DISAGREE") << "\n";
            }
            return agree ? kExitOk : kExitVerificationFailed;
        }

        if (verify->parsed()) {
            lrgen::OracleOptions opts;
            opts.field = lrgen::FieldParam(verify_prime);
            opts.parallel = !verify_serial;
            lrgen::VerifyReport report;
            if (verify_suite == "table")
                report = lrgen::verify_table(verify_max_b, {verify_prime});
            else if (verify_suite == "roundtrip")
                report = lrgen::verify_roundtrip(8, 3, verify_max_b, verify_prime);
            else if (verify_suite == "assoc")
                report = lrgen::verify_assoc(verify_trials, verify_max_weight, verify_seed);
            else if (verify_suite == "lemmas")
                report = lrgen::verify_lemmas(verify_max_b, 5, opts);
            else
                report = lrgen::verify_main(verify_max_b, verify_max_free, opts);

            if (verify_json) {
                nlohmann::json out{{"suite", report.suite},
                                   {"checked", report.checked},
                                   {"failures", report.failures}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "suite " << report.suite << ": checked " << report.checked
                          << ", failures " << report.failures.size() << "\n";
                for (const std::string& f : report.failures)
                    std::cout << "  " << f << "\n";
            }
            return report.ok() ? kExitOk : kExitVerificationFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    }
    return kExitInputError;
}
