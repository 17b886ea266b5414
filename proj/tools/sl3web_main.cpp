#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl3web/analysis.hpp"
#include "sl3web/diagram.hpp"
#include "sl3web/homfly.hpp"
#include "sl3web/knotinfo.hpp"
#include "sl3web/statesum.hpp"
#include "sl3web/version.hpp"

namespace {

using namespace sl3web;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "2:[1,1,1]" -> braid closure on 2 strands
LinkDiagram parse_braid_text(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("braid format is STRANDS:[i,j,...], e.g. 2:[1,1,1]");
    const int strands = std::stoi(text.substr(0, colon));
    std::string rest = text.substr(colon + 1);
    std::vector<int> word;
    std::string num;
    for (char c : rest) {
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            num.push_back(c);
        } else if (!num.empty()) {
            word.push_back(std::stoi(num));
            num.clear();
        }
    }
    if (!num.empty()) word.push_back(std::stoi(num));
    return LinkDiagram::from_braid_word(word, strands);
}

struct DiagramInput {
    std::string braid;
    std::string pd;       // inline PD code or a path to a .pd file
    std::string json_file;

    LinkDiagram load() const {
        const int given = (!braid.empty()) + (!pd.empty()) + (!json_file.empty());
        if (given != 1)
            throw std::invalid_argument("give exactly one of --braid, --pd, --json");
        if (!braid.empty()) return parse_braid_text(braid);
        if (!pd.empty()) {
            std::string text = pd;
            if (pd.find("X[") == std::string::npos) text = slurp(pd);
            return LinkDiagram::from_pd_code(text);
        }
        return LinkDiagram::from_json(nlohmann::json::parse(slurp(json_file)));
    }
};

LinkDiagram load_corpus_entry(const nlohmann::json& entry, const std::string& base_dir) {
    if (entry.contains("braid")) return parse_braid_text(entry["braid"].get<std::string>());
    if (entry.contains("pd")) return LinkDiagram::from_pd_code(entry["pd"].get<std::string>());
    if (entry.contains("pd_file")) {
        std::string path = entry["pd_file"].get<std::string>();
        if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
        return LinkDiagram::from_pd_code(slurp(path));
    }
    if (entry.contains("connected_sum")) {
        const auto& parts = entry["connected_sum"];
        LinkDiagram acc = load_corpus_entry(parts.at(0), base_dir);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            LinkDiagram next = load_corpus_entry(parts.at(i), base_dir);
            acc = LinkDiagram::connected_sum(acc, acc.some_arc(), next, next.some_arc());
        }
        return acc;
    }
    throw std::invalid_argument("corpus entry needs braid, pd, pd_file or connected_sum");
}

std::string base_dir_of(const std::string& path) {
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string() : path.substr(0, slash);
}

HomflyConvention load_convention(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("SL3WEB_CONVENTION")) path = env;
    }
    if (path.empty()) return {};
    return HomflyConvention::from_json(nlohmann::json::parse(slurp(path)));
}

int cmd_compute(const DiagramInput& in, const StatesumOptions& opts, const std::string& format) {
    const LinkDiagram d = in.load();
    const InvariantReport rep = analyze(d, opts);
    if (format == "json") {
        nlohmann::json j = rep.to_json();
        j["engine_version"] = kEngineVersion;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "polynomial,n,gamma1,gamma2,gamma3,v,e,e_prime,mu,theta,fibered\n";
        std::cout << '"' << rep.polynomial.str() << '"' << ',' << rep.g.n << ','
                  << rep.g.gamma1 << ',' << rep.g.gamma2 << ',' << rep.g.gamma3 << ','
                  << rep.stats.v << ',' << rep.stats.e << ',' << rep.stats.e_prime << ','
                  << rep.stats.mu << ',' << rep.stats.theta << ','
                  << (rep.fibered ? (*rep.fibered ? "yes" : "no") : "") << "\n";
    } else {
        std::cout << "polynomial: " << rep.polynomial.str() << "\n";
        std::cout << "leading degree n = " << rep.g.n << ", gamma1 = " << rep.g.gamma1
                  << ", gamma2 = " << rep.g.gamma2 << ", gamma3 = " << rep.g.gamma3 << "\n";
        std::cout << "v = " << rep.stats.v << ", e = " << rep.stats.e
                  << ", e' = " << rep.stats.e_prime << ", mu = " << rep.stats.mu
                  << ", theta = " << rep.stats.theta << "\n";
        if (rep.fibered)
            std::cout << "fibered (tree criterion): " << (*rep.fibered ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_verify_theorems(const std::string& corpus_path, const StatesumOptions& opts) {
    const auto corpus = nlohmann::json::parse(slurp(corpus_path));
    const std::string base = base_dir_of(corpus_path);
    if (corpus.empty()) {
        std::cout << "warning: empty corpus, nothing verified\n";
        return kExitOk;
    }
    int failures = 0;
    for (const auto& entry : corpus) {
        const std::string name = entry.value("name", "<unnamed>");
        try {
            const LinkDiagram d = load_corpus_entry(entry, base);
            const CoefficientCheck chk = verify_coefficient_theorems(d, opts);
            bool ok = true;
            std::string why;
            if (entry.contains("expected")) {
                const auto& ex = entry["expected"];
                auto want = [&](const char* key, std::int64_t got) {
                    if (ex.contains(key) && ex[key].get<std::int64_t>() != got) {
                        ok = false;
                        why += std::string(" ") + key + "=" + std::to_string(got) + " (expected " +
                               std::to_string(ex[key].get<std::int64_t>()) + ")";
                    }
                };
                want("v", chk.stats.v);
                want("e", chk.stats.e);
                want("e_prime", chk.stats.e_prime);
                want("mu", chk.stats.mu);
                want("theta", chk.stats.theta);
                want("n", chk.g.n);
                want("gamma2", chk.g.gamma2);
                want("gamma3", chk.g.gamma3);
            }
            // cross-assertion gamma2 = 1 iff tree lives inside this call
            fibered_criterion(d, opts);
            if (ok) {
                std::cout << "[PASS] " << name << " (gamma2 = " << chk.g.gamma2
                          << ", gamma3 = " << chk.g.gamma3 << ")\n";
            } else {
                std::cout << "[FAIL] " << name << ":" << why << "\n";
                ++failures;
            }
        } catch (const std::exception& ex) {
            std::cout << "[FAIL] " << name << ": " << ex.what() << "\n";
            ++failures;
        }
    }
    return failures == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_oracle_compare(const std::string& corpus_path, const StatesumOptions& opts) {
    const auto corpus = nlohmann::json::parse(slurp(corpus_path));
    const std::string base = base_dir_of(corpus_path);
    int failures = 0;
    for (const auto& entry : corpus) {
        const std::string name = entry.value("name", "<unnamed>");
        try {
            const LinkDiagram d = load_corpus_entry(entry, base);
            if (d.crossings() > opts.crossing_cap) {
                std::cout << "[SKIP] " << name << ": " << d.crossings()
                          << " crossings exceeds the cap\n";
                continue;
            }
            const LaurentPoly lhs = invariant(d, opts);
            HomflyOptions hopts;
            hopts.crossing_cap = opts.crossing_cap;
            const LaurentPoly rhs = specialize_sl3(homfly(d, hopts));
            if (lhs == rhs) {
                std::cout << "[PASS] " << name << " (" << lhs.str() << ")\n";
            } else {
                std::cout << "[FAIL] " << name << ": state sum " << lhs.str()
                          << " != specialized HOMFLY " << rhs.str() << "\n";
                ++failures;
            }
        } catch (const std::exception& ex) {
            std::cout << "[FAIL] " << name << ": " << ex.what() << "\n";
            ++failures;
        }
    }
    return failures == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_table(const std::string& csv_path, const std::string& expected_path,
              const std::string& conv_path, bool require_complete) {
    const HomflyConvention conv = load_convention(conv_path);
    std::ifstream csv(csv_path);
    if (!csv) throw std::invalid_argument("cannot open csv: " + csv_path);
    std::ifstream exp(expected_path);
    if (!exp) throw std::invalid_argument("cannot open expected table: " + expected_path);
    const auto data = parse_knotinfo_csv(csv, conv);
    const auto expected = parse_expected_table(exp);
    const TableCheck chk = check_table(data, expected, conv);

    std::cout << "engine " << kEngineVersion << ", conventions " << conv.fingerprint() << "\n";
    std::cout << "calibration (3_1): " << (chk.calibrated ? "ok" : "FAILED") << "\n";
    for (const auto& m : chk.mismatches) std::cout << "[FAIL] " << m << "\n";
    for (const auto& m : chk.missing) std::cout << "[MISSING] " << m << "\n";
    std::cout << chk.rows_matched << "/" << chk.rows_present << " present rows match ("
              << chk.rows_expected << " expected)\n";
    if (!chk.calibrated || !chk.all_present_match()) return kExitVerifyFail;
    if (require_complete && !chk.complete()) {
        std::cout << "[FAIL] table incomplete: " << chk.missing.size() << " rows missing\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_ow_experiment(const DiagramInput& in, int trials, std::uint64_t seed) {
    const LinkDiagram d = in.load();
    const OwExperimentReport rep = ow_move_experiment(d, trials, seed);
    std::cout << "trials: " << rep.trials << ", degree unchanged: " << rep.delta_zero
              << ", dropped by 2: " << rep.delta_two << ", violations: " << rep.violations << "\n";
    return rep.violations == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_mixing(int max_m) {
    int failures = 0;
    for (int m = 2; m <= max_m; ++m) {
        const MixingCombinatoricsReport rep = verify_mixing_combinatorics(m);
        const bool ok = rep.formula_ok && rep.symmetry_ok && rep.constraints_ok &&
                        rep.alternating_sum == 0;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "m = " << m
                  << ": formula " << (rep.formula_ok ? "ok" : "BAD") << ", symmetry "
                  << (rep.symmetry_ok ? "ok" : "BAD") << ", constraints "
                  << (rep.constraints_ok ? "ok" : "BAD") << ", alternating sum "
                  << rep.alternating_sum << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum sl3 (A2 web) link polynomial toolkit"};
    app.require_subcommand(1);

    StatesumOptions opts;
    DiagramInput input;
    std::string format = "text";
    std::string corpus_path, csv_path, expected_path, conv_path;
    bool require_complete = false;
    int trials = 1000;
    std::uint64_t seed = 20240001;
    int max_m = 8;

    auto add_diagram_flags = [&](CLI::App* cmd) {
        cmd->add_option("--braid", input.braid, "braid closure, STRANDS:[i,j,...]");
        cmd->add_option("--pd", input.pd, "PD code string or .pd file");
        cmd->add_option("--json", input.json_file, "diagram JSON file");
        cmd->add_option("--cap", opts.crossing_cap, "crossing cap for the state sum");
        cmd->add_option("--workers", opts.workers, "worker threads");
    };

    auto* compute = app.add_subcommand("compute", "state-sum invariant and report");
    add_diagram_flags(compute);
    compute->add_option("--format", format, "text, json or csv");

    auto* verify = app.add_subcommand("verify-theorems", "coefficient theorems over a corpus");
    verify->add_option("--corpus", corpus_path, "corpus JSON")->required();
    verify->add_option("--cap", opts.crossing_cap, "crossing cap");
    verify->add_option("--workers", opts.workers, "worker threads");

    auto* table = app.add_subcommand("table", "verify gamma3 table against a HOMFLY csv");
    table->add_option("--csv", csv_path, "knot table csv (name, homfly_polynomial)")->required();
    table->add_option("--expected", expected_path, "expected rows csv")->required();
    table->add_option("--convention", conv_path, "convention config json (or SL3WEB_CONVENTION)");
    table->add_flag("--require-complete", require_complete, "fail when expected rows are missing");

    auto* oracle = app.add_subcommand("oracle-compare", "state sum vs specialized HOMFLY");
    oracle->add_option("--corpus", corpus_path, "corpus JSON")->required();
    oracle->add_option("--cap", opts.crossing_cap, "crossing cap");
    oracle->add_option("--workers", opts.workers, "worker threads");

    auto* ow = app.add_subcommand("ow-experiment", "random O->W flips on a positive diagram");
    add_diagram_flags(ow);
    ow->add_option("--trials", trials, "number of random flips");
    ow->add_option("--seed", seed, "random seed");

    auto* mixing = app.add_subcommand("mixing-combinatorics", "brute-force support counting");
    mixing->add_option("--max-m", max_m, "largest mixing index to enumerate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(input, opts, format);
        if (verify->parsed()) return cmd_verify_theorems(corpus_path, opts);
        if (table->parsed()) return cmd_table(csv_path, expected_path, conv_path, require_complete);
        if (oracle->parsed()) return cmd_oracle_compare(corpus_path, opts);
        if (ow->parsed()) return cmd_ow_experiment(input, trials, seed);
        if (mixing->parsed()) return cmd_mixing(max_m);
    } catch (const CapExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitInputError;
}
