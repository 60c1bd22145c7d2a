// liecoh command-line front end. All computation goes through the C API
// in liecoh.h; this file only parses flags and renders the returned JSON
// as a table, raw JSON, or CSV.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liecoh.h"

using nlohmann::json;

namespace {

struct RsDeleter {
    void operator()(lc_root_system* rs) const { lc_root_system_destroy(rs); }
};
using RsHandle = std::unique_ptr<lc_root_system, RsDeleter>;

RsHandle open_system(const std::string& type) {
    lc_root_system* raw = nullptr;
    if (lc_root_system_create(type.c_str(), &raw) != LC_OK) {
        std::cerr << "error: " << lc_last_error() << "\n";
        std::exit(1);
    }
    return RsHandle(raw);
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

// Calls fn, checks the status, parses and returns the JSON document.
template <typename Fn>
json call(Fn&& fn) {
    char* out = nullptr;
    lc_status st = fn(&out);
    if (st != LC_OK) {
        std::cerr << "error: " << lc_last_error() << "\n";
        std::exit(1);
    }
    json j = json::parse(out);
    lc_string_free(out);
    return j;
}

std::string join(const json& arr, const char* sep = ",") {
    std::string out;
    bool first = true;
    for (const auto& v : arr) {
        if (!first) out += sep;
        out += v.dump();
        first = false;
    }
    return out;
}

std::string weight_str(const json& arr) { return "(" + join(arr) + ")"; }

void print_character_table(const json& ch, std::ostream& os) {
    os << "weight : mult\n";
    for (const auto& entry : ch) os << weight_str(entry["weight"]) << " : " << entry["mult"] << "\n";
}

void print_hypotheses(const json& hyps, std::ostream& os) {
    for (const auto& h : hyps) {
        os << "hypothesis: " << h["name"].get<std::string>() << " -> "
           << (h["satisfied"].get<bool>() ? "satisfied" : "NOT satisfied")
           << (h["checked"].get<bool>() ? "" : " (recorded, not checked)") << "\n";
    }
}

void emit(const json& j, const std::string& format, const std::string& kind) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ostream& os = std::cout;
    const bool csv = format == "csv";
    if (kind == "roots") {
        if (csv) {
            os << "index,root,height\n";
            int idx = 1;
            for (const auto& r : j["positive_roots"])
                os << idx++ << "," << join(r, " ") << "," << [&r] {
                    int h = 0;
                    for (const auto& c : r) h += c.get<int>();
                    return h;
                }() << "\n";
            return;
        }
        os << "type " << j["type"].get<std::string>() << ": rank " << j["rank"] << ", |Phi+| = "
           << j["num_positive_roots"] << ", h = " << j["coxeter_number"] << "\n";
        os << "symmetrizers d = " << weight_str(j["symmetrizers"]) << "\n";
        os << "highest root = " << weight_str(j["highest_root"])
           << ", highest short root = " << weight_str(j["highest_short_root"]) << "\n";
        os << "positive roots (simple-root coordinates, by height):\n";
        for (const auto& r : j["positive_roots"]) os << "  " << weight_str(r) << "\n";
    } else if (kind == "weyl-summary") {
        os << "type " << j["type"].get<std::string>() << ": |W| = " << j["order"]
           << ", l(w0) = " << j["longest_length"] << ", w0 = " << weight_str(j["longest_word"])
           << "\n";
    } else if (kind == "weyl-element") {
        os << "word = " << weight_str(j["word"]) << ", length = " << j["length"] << "\n";
        os << "w.0 = " << weight_str(j["dot_zero"]) << "\n";
        os << "inversions:\n";
        for (const auto& r : j["inversions"]) os << "  " << weight_str(r) << "\n";
    } else if (kind == "weyl-action") {
        os << j["action"].get<std::string>() << " action: " << weight_str(j["weight"]) << " -> "
           << weight_str(j["result"]) << "\n";
    } else if (kind == "coset") {
        if (csv) {
            os << "word,length\n";
            for (const auto& r : j["reps"]) os << join(r["word"], " ") << "," << r["length"] << "\n";
            return;
        }
        os << "J = " << weight_str(j["J"]) << ", N_J = " << j["N_J"] << ", |^JW| = "
           << j["num_reps"] << "\n";
        os << "w0J word = " << weight_str(j["w0J_word"]) << "\n";
        os << "reps (word : length):\n";
        for (const auto& r : j["reps"])
            os << "  " << weight_str(r["word"]) << " : " << r["length"] << "\n";
        os << "adapted w0 word = " << weight_str(j["adapted_w0_word"]) << "\n";
        os << "induced root order:\n";
        for (const auto& r : j["adapted_root_order"]) os << "  " << weight_str(r) << "\n";
    } else if (kind == "kostant") {
        if (csv) {
            os << "degree,count\n";
            int k = 0;
            for (const auto& c : j["poly"]) os << k++ << "," << c << "\n";
            return;
        }
        os << "mu = " << weight_str(j["mu"]) << " over Phi+ minus Phi_J+, J = "
           << weight_str(j["J"]) << "\n";
        os << "poly = " << j["poly_string"].get<std::string>() << " (q=1: " << j["count"] << ")\n";
    } else if (kind == "character") {
        if (csv) {
            os << "weight,mult\n";
            for (const auto& e : j["character"])
                os << join(e["weight"], " ") << "," << e["mult"] << "\n";
            return;
        }
        os << "lambda = " << weight_str(j["lambda"]) << ", dim = " << j["dim"] << "\n";
        print_character_table(j["character"], os);
    } else if (kind == "induce") {
        if (csv) {
            os << "weight,mult\n";
            for (const auto& e : j["decomposition"])
                os << join(e["weight"], " ") << "," << e["mult"] << "\n";
            return;
        }
        os << "degree " << j["degree"] << ", gamma = " << weight_str(j["gamma"]) << ", dim = "
           << j["dim"] << "\n";
        os << "decomposition into H^0(sigma):\n";
        for (const auto& e : j["decomposition"])
            os << "  " << weight_str(e["weight"]) << " : " << e["mult"] << "\n";
    } else if (kind == "multiplicity") {
        if (csv) {
            os << "degree,mult\n";
            int k = 0;
            for (const auto& c : j["poly"]) os << k++ << "," << c << "\n";
            return;
        }
        os << "[ind(S^bullet(u_J^*) (x) gamma) : H^0" << weight_str(j["sigma"])
           << "]_q = " << j["poly_string"].get<std::string>() << "\n";
        if (j["assumption_violated"].get<bool>())
            os << "warning: negative multiplicity; vanishing hypotheses fail here\n";
    } else if (kind == "series") {
        if (csv) {
            os << "degree,dim\n";
            int k = 0;
            for (const auto& c : j["series"]) os << k++ << "," << c << "\n";
            return;
        }
        os << "series = " << join(j["series"], ", ") << "\n";
    } else if (kind == "predict") {
        if (csv) {
            os << "n,dimension\n";
            for (const auto& d : j["degrees"]) os << d["n"] << "," << d["dimension"] << "\n";
            return;
        }
        os << "realization " << j["realization"].get<std::string>() << " ("
           << j["mode"].get<std::string>() << "), t = " << j["parity_offset"] << "\n";
        print_hypotheses(j["hypotheses"], os);
        if (j["assumption_violated"].get<bool>())
            os << "warning: negative multiplicity; vanishing hypotheses fail here\n";
        std::string dims;
        for (const auto& d : j["degrees"]) {
            if (!dims.empty()) dims += ",";
            dims += d["dimension"].dump();
        }
        os << "dims = " << dims << "\n";
        for (const auto& d : j["degrees"]) {
            if (d["decomposition"].empty()) continue;
            os << "n = " << d["n"] << ": ";
            bool first = true;
            for (const auto& e : d["decomposition"]) {
                if (!first) os << " + ";
                if (e["mult"].get<long long>() != 1) os << e["mult"] << " ";
                os << "H^0" << weight_str(e["weight"]);
                first = false;
            }
            os << "  (dim " << d["dimension"] << ")\n";
        }
    } else if (kind == "verify") {
        os << "check " << j["check"].get<std::string>() << ": conformant = "
           << (j["conformant"].get<bool>() ? "true" : "false") << "\n";
        if (j.contains("sweep")) {
            for (const auto& rep : j["sweep"]) {
                if (rep.contains("error")) {
                    os << "  w = " << join(rep["w"]) << ": error " << rep["error"].get<std::string>()
                       << "\n";
                    continue;
                }
                os << "  w = " << weight_str(rep["config"]["w"]) << ": conformant = "
                   << (rep["conformant"].get<bool>() ? "true" : "false") << "\n";
            }
            return;
        }
        print_hypotheses(j["hypotheses"], os);
        if (j.contains("solutions")) {
            os << "solutions (" << j["solutions"].size() << "):\n";
            for (const auto& s : j["solutions"])
                os << "  y = " << weight_str(s["y"]) << ", nu = " << weight_str(s["nu"]) << ", mu = "
                   << weight_str(s["mu"]) << ", sigma = " << weight_str(s["sigma"])
                   << (s["trivial"].get<bool>() ? "  [trivial]" : "  [NONTRIVIAL]") << "\n";
        }
        if (j.contains("violations")) {
            os << "weights checked: " << j["weights_checked"] << ", violations: "
               << j["violations"].size() << "\n";
            for (const auto& v : j["violations"]) os << "  " << weight_str(v) << "\n";
        }
        if (j.contains("linked_pairs")) {
            os << "linked pairs (" << j["linked_pairs"].size() << "):\n";
            for (const auto& p : j["linked_pairs"])
                os << "  y = " << weight_str(p["y"]) << ", nu = " << weight_str(p["nu"])
                   << ", witnesses = " << p["witnesses"].size()
                   << (p["expected"].get<bool>() ? "  [expected]" : "  [UNEXPECTED]") << "\n";
        }
    } else if (kind == "orbit") {
        if (csv) {
            os << "key,value\n";
            os << "n," << j["n"] << "\n";
            os << "sigma," << join(j["sigma"], " ") << "\n";
            os << "lambda," << join(j["lambda"], " ") << "\n";
            os << "dim," << j["dim"] << "\n";
            if (j.contains("series")) os << "series," << join(j["series"], " ") << "\n";
            return;
        }
        os << "n = " << j["n"] << ", J = " << weight_str(j["J"]) << "\n";
        os << "sigma(J) = " << weight_str(j["sigma"]) << ", lambda = sigma(J)^t = "
           << weight_str(j["lambda"]) << ", dim = " << j["dim"] << "\n";
        if (j.contains("series")) os << "series = " << join(j["series"], ", ") << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liecoh: exact Lie-theoretic characters, multiplicities and cohomology predictions"};
    app.require_subcommand(1);

    std::string type = "A2", format = "table";
    std::string j_str, mu_str, lambda_str, gamma_str, sigma_str, w_str, word_str, weight_str_in;
    std::string thm = "4.2", check = "weighteq";
    long long ell = 0, p = 0, cap = 100000;
    int degree = 0, upto = 10, t = 0, n = 4, nu_bound = 3, workers = 1;
    bool use_dot = false, levi = false;

    auto add_common = [&](CLI::App* cmd, bool with_type = true) {
        if (with_type) cmd->add_option("--type", type, "root system, e.g. A2, B3, G2");
        cmd->add_option("--format", format, "table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* roots_cmd = app.add_subcommand("roots", "Cartan data and positive roots");
    add_common(roots_cmd);

    auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group summary, elements, actions");
    add_common(weyl_cmd);
    weyl_cmd->add_option("--word", word_str, "Weyl word, 1-based letters, e.g. 1,2,1");
    weyl_cmd->add_option("--weight", weight_str_in, "weight to act on");
    weyl_cmd->add_flag("--dot", use_dot, "use the dot action");

    auto* coset_cmd = app.add_subcommand("coset", "Minimal coset representatives ^JW");
    add_common(coset_cmd);
    coset_cmd->add_option("--J", j_str, "subset of simple indices, e.g. 1,3; empty for none");

    auto* kostant_cmd = app.add_subcommand("kostant", "q-analog Kostant partition function");
    add_common(kostant_cmd);
    kostant_cmd->add_option("--mu", mu_str, "target in simple-root coordinates")->required();
    kostant_cmd->add_option("--J", j_str, "roots used are Phi+ minus Phi_J+; empty J gives Phi+");

    auto* char_cmd = app.add_subcommand("character", "Weyl character of H^0(lambda)");
    add_common(char_cmd);
    char_cmd->add_option("--lambda", lambda_str, "highest weight")->required();
    char_cmd->add_flag("--levi", levi, "Levi character for the subset --J");
    char_cmd->add_option("--J", j_str, "Levi subset (with --levi)");

    auto* induce_cmd = app.add_subcommand("induce", "Euler characteristic of ind(S^n(u_J^*) (x) gamma)");
    add_common(induce_cmd);
    induce_cmd->add_option("--J", j_str, "parabolic subset");
    induce_cmd->add_option("--degree", degree, "symmetric power degree")->required();
    induce_cmd->add_option("--gamma", gamma_str, "twisting weight")->required();

    auto* mult_cmd = app.add_subcommand("multiplicity", "graded multiplicity of H^0(sigma)");
    add_common(mult_cmd);
    mult_cmd->add_option("--J", j_str, "parabolic subset");
    mult_cmd->add_option("--gamma", gamma_str, "twisting weight")->required();
    mult_cmd->add_option("--sigma", sigma_str, "dominant weight")->required();

    auto* series_cmd = app.add_subcommand("series", "Poincare series of the twisted coordinate ring");
    add_common(series_cmd);
    series_cmd->add_option("--J", j_str, "parabolic subset");
    series_cmd->add_option("--gamma", gamma_str, "twisting weight")->required();
    series_cmd->add_option("--upto", upto, "top degree");

    auto* predict_cmd = app.add_subcommand("predict", "cohomology prediction table");
    add_common(predict_cmd);
    predict_cmd->add_option("--thm", thm, "realization: 3.3, 4.2, 5.1, 7.1, 7.3 or 7.4");
    predict_cmd->add_option("--l", ell, "quantum parameter (realizations 3.3/4.2/5.1)");
    predict_cmd->add_option("--p", p, "prime (realizations 7.1/7.3/7.4)");
    predict_cmd->add_option("--J", j_str, "parabolic subset");
    predict_cmd->add_option("--gamma", gamma_str, "twisting weight")->required();
    predict_cmd->add_option("--w", w_str, "coset representative word (default identity)");
    predict_cmd->add_option("--t", t, "parity offset (3.3/7.1 only)");
    predict_cmd->add_option("--upto", upto, "top cohomological degree");

    auto* verify_cmd = app.add_subcommand("verify", "verification sweeps");
    add_common(verify_cmd);
    verify_cmd->add_option("--check", check, "weighteq, kempf or linkage")->required();
    verify_cmd->add_option("--l", ell, "quantum parameter")->required();
    verify_cmd->add_option("--J", j_str, "parabolic subset");
    verify_cmd->add_option("--w", w_str, "word, or 'all' for every w in ^JW");
    verify_cmd->add_option("--gamma", gamma_str, "twisting weight (kempf)");
    verify_cmd->add_option("--nu-bound", nu_bound, "coordinate bound for the nu sweep (linkage)");
    verify_cmd->add_option("--cap", cap, "cap on dim H^0(epsilon_J) (weighteq)");
    verify_cmd->add_option("--workers", workers, "threads for --w all sweeps");

    auto* orbit_cmd = app.add_subcommand("orbit", "type-A Richardson orbit dictionary");
    add_common(orbit_cmd, false);
    orbit_cmd->add_option("--n", n, "size of the matrices (GL_n)")->required();
    orbit_cmd->add_option("--J", j_str, "subset of simple indices of A_{n-1}");
    orbit_cmd->add_option("--upto", upto, "series degree bound; negative omits the series");
    orbit_cmd->add_option("--format", format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(orbit_cmd)) {
            auto J = parse_ints(j_str);
            emit(call([&](char** out) { return lc_orbit_json(n, J.data(), J.size(), upto, out); }),
                 format, "orbit");
            return 0;
        }

        auto rs = open_system(type);
        auto J = parse_ints(j_str);

        if (app.got_subcommand(roots_cmd)) {
            emit(call([&](char** out) { return lc_roots_json(rs.get(), out); }), format, "roots");
        } else if (app.got_subcommand(weyl_cmd)) {
            auto word = parse_ints(word_str);
            if (!weight_str_in.empty()) {
                auto wt = parse_ints(weight_str_in);
                emit(call([&](char** out) {
                         return lc_weyl_action_json(rs.get(), word.data(), word.size(), wt.data(),
                                                    wt.size(), use_dot ? 1 : 0, out);
                     }),
                     format, "weyl-action");
            } else if (!word_str.empty()) {
                emit(call([&](char** out) {
                         return lc_weyl_element_json(rs.get(), word.data(), word.size(), out);
                     }),
                     format, "weyl-element");
            } else {
                emit(call([&](char** out) { return lc_weyl_summary_json(rs.get(), out); }), format,
                     "weyl-summary");
            }
        } else if (app.got_subcommand(coset_cmd)) {
            emit(call([&](char** out) { return lc_coset_json(rs.get(), J.data(), J.size(), out); }),
                 format, "coset");
        } else if (app.got_subcommand(kostant_cmd)) {
            auto mu = parse_ints(mu_str);
            emit(call([&](char** out) {
                     return lc_kostant_json(rs.get(), J.data(), J.size(), mu.data(), mu.size(), out);
                 }),
                 format, "kostant");
        } else if (app.got_subcommand(char_cmd)) {
            auto lambda = parse_ints(lambda_str);
            emit(call([&](char** out) {
                     return lc_character_json(rs.get(), lambda.data(), lambda.size(), levi ? 1 : 0,
                                              J.data(), J.size(), out);
                 }),
                 format, "character");
        } else if (app.got_subcommand(induce_cmd)) {
            auto gamma = parse_ints(gamma_str);
            emit(call([&](char** out) {
                     return lc_induce_json(rs.get(), J.data(), J.size(), degree, gamma.data(),
                                           gamma.size(), out);
                 }),
                 format, "induce");
        } else if (app.got_subcommand(mult_cmd)) {
            auto gamma = parse_ints(gamma_str);
            auto sigma = parse_ints(sigma_str);
            emit(call([&](char** out) {
                     return lc_multiplicity_json(rs.get(), J.data(), J.size(), gamma.data(),
                                                 sigma.data(), gamma.size(), out);
                 }),
                 format, "multiplicity");
        } else if (app.got_subcommand(series_cmd)) {
            auto gamma = parse_ints(gamma_str);
            emit(call([&](char** out) {
                     return lc_series_json(rs.get(), J.data(), J.size(), gamma.data(), gamma.size(),
                                           upto, out);
                 }),
                 format, "series");
        } else if (app.got_subcommand(predict_cmd)) {
            auto gamma = parse_ints(gamma_str);
            auto w = parse_ints(w_str);
            bool frob = thm.rfind("7.", 0) == 0;
            long long param = frob ? p : ell;
            if (param == 0) {
                std::cerr << "error: " << (frob ? "--p" : "--l") << " is required for realization "
                          << thm << "\n";
                return 2;
            }
            emit(call([&](char** out) {
                     return lc_predict_json(rs.get(), thm.c_str(), param, J.data(), J.size(),
                                            gamma.data(), gamma.size(), w.data(), w.size(), t, upto,
                                            out);
                 }),
                 format, "predict");
        } else if (app.got_subcommand(verify_cmd)) {
            bool w_all = (w_str == "all");
            auto w = w_all ? std::vector<int>{} : parse_ints(w_str);
            auto gamma = parse_ints(gamma_str);
            const int* gamma_ptr = gamma_str.empty() ? nullptr : gamma.data();
            emit(call([&](char** out) {
                     return lc_verify_json(rs.get(), check.c_str(), ell, J.data(), J.size(), w.data(),
                                           w.size(), w_all ? 1 : 0, gamma_ptr, gamma.size(), nu_bound,
                                           cap, workers, out);
                 }),
                 format, "verify");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
