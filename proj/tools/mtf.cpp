// Command-line driver: build the E^1 complex of a mapping-torus family,
// compute its homology, compare against the closed-form answer, and run
// verification sweeps.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtf/verify.hpp"

namespace {

const std::map<std::string, mtf::Family> kFamilies = {
    {"identity", mtf::Family::identity},
    {"nonsep", mtf::Family::nonsep},
    {"pair", mtf::Family::pair},
    {"sep", mtf::Family::sep},
};

struct SpecFlags {
    std::string family = "identity";
    int g = 2, k = 1, n = 1, m = 1, i = 0, a = 0, b = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--family", family, "family: identity|nonsep|pair|sep")
            ->check(CLI::IsMember({"identity", "nonsep", "pair", "sep"}));
        cmd->add_option("--g", g, "surface genus");
        cmd->add_option("--k", k, "spin^c level k (nonzero)");
        cmd->add_option("--n", n, "twist exponent n");
        cmd->add_option("--m", m, "twist exponent m (pair family)");
        cmd->add_option("--i", i, "torsion index i (nonsep family)");
        cmd->add_option("--a", a, "torsion index a (pair family)");
        cmd->add_option("--b", b, "torsion index b (pair family)");
    }

    mtf::FamilySpec spec() const {
        mtf::FamilySpec s;
        s.family = kFamilies.at(family);
        s.g = g;
        s.k = k;
        if (s.family != mtf::Family::identity) s.n = n;
        if (s.family == mtf::Family::pair) s.m = m;
        if (s.family == mtf::Family::nonsep) s.i = i;
        if (s.family == mtf::Family::pair) {
            s.a = a;
            s.b = b;
        }
        s.validate();
        return s;
    }
};

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output path " + out_path);
    f << content;
    if (!f.good()) throw std::runtime_error("write failed for " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homology engine for Dehn-twist mapping-torus families"};
    app.set_config("--config", "", "flat key=value config file");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string mode = "relative";
    std::string format = "json";
    std::string out_path;
    app.add_option("--mode", mode, "comparison mode")->check(CLI::IsMember({"relative", "absolute"}));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "output file (default stdout)");

    auto* compute = app.add_subcommand("compute", "build one complex and print its homology");
    SpecFlags compute_spec;
    compute_spec.add_to(compute);
    std::string dump_path;
    compute->add_option("--dump", dump_path, "also dump the built complex as CSV");

    auto* verify = app.add_subcommand("verify", "verify one case against its closed form");
    SpecFlags verify_spec;
    verify_spec.add_to(verify);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify a Cartesian family sweep");
    std::vector<int> genera{2, 3, 4};
    std::vector<int> k_values;
    std::vector<int> exponents{-2, -1, 1, 2};
    std::vector<std::string> family_names{"identity", "nonsep", "pair", "sep"};
    int jobs = 1;
    bool write_golden = false;
    sweep_cmd->add_option("--g", genera, "genera to sweep");
    sweep_cmd->add_option("--k", k_values, "k values (default: all valid per genus)");
    sweep_cmd->add_option("--exponents", exponents, "twist exponent set");
    sweep_cmd->add_option("--family", family_names, "families to sweep")
        ->check(CLI::IsMember({"identity", "nonsep", "pair", "sep"}));
    sweep_cmd->add_option("--jobs", jobs, "concurrent verification jobs");
    sweep_cmd->add_flag("--write-golden", write_golden,
                        "write per-case homology CSVs to --out directory");

    auto* table = app.add_subcommand("table", "dump ranks of X(g,d) or a prediction");
    SpecFlags table_spec;
    table_spec.add_to(table);
    bool table_predict = false;
    table->add_flag("--predict", table_predict, "dump predict(spec) instead of ranks_X");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    mtf::IsoMode iso_mode = mode == "absolute" ? mtf::IsoMode::absolute : mtf::IsoMode::relative;
    try {
        if (compute->parsed()) {
            mtf::FamilySpec spec = compute_spec.spec();
            mtf::E1Complex c = mtf::build_e1(spec);
            if (!dump_path.empty()) write_output(dump_path, mtf::dump_complex_csv(c));
            auto h = mtf::homology(c.cc);
            nlohmann::ordered_json j;
            j["spec"] = mtf::spec_to_json(spec);
            j["generators"] = c.cc.generators.size();
            j["homology"] = mtf::to_json(h);
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }
        if (verify->parsed()) {
            mtf::CaseResult r = mtf::verify_case(verify_spec.spec(), iso_mode);
            mtf::VerificationReport rep;
            rep.params = "single case";
            rep.cases.push_back(r);
            (r.pass ? rep.passed : rep.failed)++;
            write_output(out_path, mtf::emit_report(rep, format));
            return r.pass ? 0 : 1;
        }
        if (sweep_cmd->parsed()) {
            mtf::SweepOptions opt;
            opt.genera = genera;
            opt.k_values = k_values;
            opt.exponents = exponents;
            for (const auto& f : family_names) opt.families.push_back(kFamilies.at(f));
            opt.mode = iso_mode;
            opt.jobs = jobs;
            mtf::VerificationReport rep = mtf::sweep(opt);
            if (write_golden) {
                if (out_path.empty())
                    throw std::runtime_error("--write-golden requires --out DIRECTORY");
                std::filesystem::create_directories(out_path);
                for (const auto& c : rep.cases) {
                    auto p = std::filesystem::path(out_path) / mtf::golden_filename(c.spec);
                    std::ofstream f(p);
                    if (!f) throw std::runtime_error("cannot open " + p.string());
                    f << mtf::to_csv(c.computed);
                }
                std::cerr << "wrote " << rep.cases.size() << " golden files to " << out_path
                          << "\n";
            } else {
                write_output(out_path, mtf::emit_report(rep, format));
            }
            return rep.failed == 0 ? 0 : 1;
        }
        if (table->parsed()) {
            mtf::FamilySpec spec = table_spec.spec();
            nlohmann::ordered_json j;
            if (table_predict) {
                mtf::Prediction p = mtf::predict(spec);
                j["spec"] = mtf::spec_to_json(spec);
                j["special"] = p.special;
                j["group"] = mtf::to_json(p.group);
            } else {
                j["g"] = spec.g;
                j["d"] = spec.depth();
                j["group"] = mtf::to_json(mtf::ranks_x(spec.g, spec.depth()));
            }
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
