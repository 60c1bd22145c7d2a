// C bindings: thin translation layer over the core. Converts 1-based
// boundary indices to the core's 0-based ones, renders results as
// canonical JSON, and maps exceptions to status codes plus a thread-local
// error message.

#include "liecoh.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "core/characters.hpp"
#include "core/json_io.hpp"
#include "core/orbits.hpp"
#include "core/predictions.hpp"
#include "core/rootsystem.hpp"
#include "core/weyl.hpp"

using namespace liecoh;

struct lc_root_system {
    RootSystem rs;
};

namespace {

thread_local std::string g_last_error = "no error";

lc_status status_of(const Error& e) {
    switch (e.code()) {
    case ErrorCode::GroupTooLarge:
    case ErrorCode::TooLarge: return LC_ERR_TOO_LARGE;
    case ErrorCode::InvalidRank:
    case ErrorCode::InvalidArgument:
    case ErrorCode::IndexOutOfRange: return LC_ERR_INVALID_ARGUMENT;
    default: return LC_ERR_DOMAIN;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
lc_status guarded(char** out_json, Fn&& fn) {
    if (!out_json) {
        g_last_error = "out_json must not be NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    try {
        json j = fn();
        char* s = dup_string(dump_canonical(j));
        if (!s) {
            g_last_error = "out of memory";
            return LC_ERR_INTERNAL;
        }
        *out_json = s;
        return LC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LC_ERR_INTERNAL;
    }
}

std::vector<int> to_zero_based(const int* data, size_t len, const char* what) {
    std::vector<int> out;
    out.reserve(len);
    for (size_t i = 0; i < len; ++i) {
        if (!data) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
        out.push_back(data[i] - 1);
    }
    return out;
}

Weight to_weight(const RootSystem& rs, const int* data, size_t rank, const char* what) {
    if (rank != static_cast<size_t>(rs.rank()))
        fail(ErrorCode::DimensionMismatch, std::string(what) + " has wrong length");
    if (!data && rank > 0) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
    return Weight(std::vector<int>(data, data + rank));
}

WeylElement element_or_identity(const RootSystem& rs, const int* word, size_t len) {
    if (!word || len == 0) return weyl_identity(rs);
    return weyl_from_word(rs, to_zero_based(word, len, "word"));
}

json verify_one(const RootSystem& rs, const std::string& check, long long ell,
                const std::vector<int>& J, const WeylElement& w, const Weight& gamma, int nu_bound,
                long long cap) {
    if (check == "weighteq") return weighteq_to_json(rs, verify_weighteq(rs, ell, J, w, cap));
    if (check == "kempf") return kempf_to_json(rs, verify_kempf_dominance(rs, ell, J, w, gamma));
    if (check == "linkage")
        return linkage_to_json(rs, verify_linkage_uniqueness(rs, ell, J, w, nu_bound));
    fail(ErrorCode::InvalidArgument, "unknown check '" + check + "'");
}

}  // namespace

extern "C" {

lc_status lc_root_system_create(const char* name, lc_root_system** out) {
    if (!name || !out) {
        g_last_error = "name and out must not be NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    try {
        *out = new lc_root_system{RootSystem::build(name)};
        return LC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LC_ERR_INTERNAL;
    }
}

void lc_root_system_destroy(lc_root_system* rs) { delete rs; }

int lc_root_system_rank(const lc_root_system* rs) { return rs ? rs->rs.rank() : 0; }

const char* lc_last_error(void) { return g_last_error.c_str(); }

void lc_string_free(char* s) { std::free(s); }

lc_status lc_roots_json(const lc_root_system* rs, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] { return to_json(rs->rs); });
}

lc_status lc_weyl_summary_json(const lc_root_system* rs, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        WeylGroup group(rs->rs);
        const auto& w0 = group.longest();
        return json{{"type", rs->rs.name()},
                    {"order", group.order()},
                    {"num_positive_roots", rs->rs.num_positive_roots()},
                    {"longest_word", word_to_json(w0.word)},
                    {"longest_length", w0.length()}};
    });
}

lc_status lc_weyl_element_json(const lc_root_system* rs, const int* word, size_t word_len,
                               char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto w = element_or_identity(rs->rs, word, word_len);
        json out = element_to_json(rs->rs, w);
        out["type"] = rs->rs.name();
        return out;
    });
}

lc_status lc_weyl_action_json(const lc_root_system* rs, const int* word, size_t word_len,
                              const int* weight, size_t rank, int use_dot, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto w = element_or_identity(rs->rs, word, word_len);
        Weight lambda = to_weight(rs->rs, weight, rank, "weight");
        Weight image = use_dot ? dot(rs->rs, w, lambda) : act(rs->rs, w, lambda);
        return json{{"type", rs->rs.name()},
                    {"word", word_to_json(w.word)},
                    {"action", use_dot ? "dot" : "linear"},
                    {"weight", to_json(lambda)},
                    {"result", to_json(image)}};
    });
}

lc_status lc_coset_json(const lc_root_system* rs, const int* J, size_t J_len, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto j = to_zero_based(J, J_len, "J");
        auto par = parabolic(rs->rs, j);
        auto reps = min_coset_reps(rs->rs, j);
        json rep_list = json::array();
        for (const auto& w : reps)
            rep_list.push_back({{"word", word_to_json(w.word)}, {"length", w.length()}});
        auto adapted = adapted_w0_word(rs->rs, j);
        json order = json::array();
        for (const auto& r : adapted.root_order) order.push_back(to_json(r));
        return json{{"type", rs->rs.name()},
                    {"J", subset_to_json(j)},
                    {"N_J", par.N_J},
                    {"w0J_word", word_to_json(par.w0J.word)},
                    {"num_reps", reps.size()},
                    {"reps", rep_list},
                    {"adapted_w0_word", word_to_json(adapted.word)},
                    {"adapted_root_order", order}};
    });
}

lc_status lc_kostant_json(const lc_root_system* rs, const int* J, size_t J_len, const int* mu,
                          size_t rank, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto j = to_zero_based(J, J_len, "J");
        if (rank != static_cast<size_t>(rs->rs.rank()))
            fail(ErrorCode::DimensionMismatch, "mu has wrong length");
        RootVector target(std::vector<int>(mu, mu + rank));
        auto roots = rs->rs.positive_roots_complement(j);
        QPolynomial p = q_partition(rs->rs, target, roots);
        return json{{"type", rs->rs.name()},
                    {"J", subset_to_json(j)},
                    {"mu", to_json(target)},
                    {"poly", to_json(p)},
                    {"poly_string", p.str()},
                    {"count", p.eval_at_one()}};
    });
}

lc_status lc_character_json(const lc_root_system* rs, const int* lambda, size_t rank, int levi,
                            const int* J, size_t J_len, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        Weight hw = to_weight(rs->rs, lambda, rank, "lambda");
        json out{{"type", rs->rs.name()}, {"lambda", to_json(hw)}};
        if (levi) {
            auto j = to_zero_based(J, J_len, "J");
            const Character& ch = weyl_character_levi(rs->rs, j, hw);
            out["levi_J"] = subset_to_json(j);
            out["character"] = to_json(ch);
            out["dim"] = ch.mass();
        } else {
            const Character& ch = weyl_character(rs->rs, hw);
            out["character"] = to_json(ch);
            out["dim"] = weyl_dim(rs->rs, hw);
        }
        return out;
    });
}

lc_status lc_induce_json(const lc_root_system* rs, const int* J, size_t J_len, int degree,
                         const int* gamma, size_t rank, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto j = to_zero_based(J, J_len, "J");
        Weight g = to_weight(rs->rs, gamma, rank, "gamma");
        Character sym = sym_character(rs->rs, j, degree);
        Character euler = euler_induction(rs->rs, sym, g);
        auto dec = decompose(rs->rs, euler);
        return json{{"type", rs->rs.name()},
                    {"J", subset_to_json(j)},
                    {"degree", degree},
                    {"gamma", to_json(g)},
                    {"sym_character", to_json(sym)},
                    {"character", to_json(euler)},
                    {"dim", euler.mass()},
                    {"decomposition", decomposition_to_json(dec)}};
    });
}

lc_status lc_multiplicity_json(const lc_root_system* rs, const int* J, size_t J_len,
                               const int* gamma, const int* sigma, size_t rank, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto j = to_zero_based(J, J_len, "J");
        Weight g = to_weight(rs->rs, gamma, rank, "gamma");
        Weight s = to_weight(rs->rs, sigma, rank, "sigma");
        auto gm = graded_multiplicity(rs->rs, j, g, s);
        return json{{"type", rs->rs.name()},
                    {"J", subset_to_json(j)},
                    {"gamma", to_json(g)},
                    {"sigma", to_json(s)},
                    {"poly", to_json(gm.poly)},
                    {"poly_string", gm.poly.str()},
                    {"assumption_violated", gm.assumption_violated}};
    });
}

lc_status lc_series_json(const lc_root_system* rs, const int* J, size_t J_len, const int* gamma,
                         size_t rank, int up_to, char** out_json) {
    if (!rs) {
        g_last_error = "rs is NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto j = to_zero_based(J, J_len, "J");
        Weight g = to_weight(rs->rs, gamma, rank, "gamma");
        auto series = poincare_series(rs->rs, j, g, up_to);
        return json{{"type", rs->rs.name()},
                    {"J", subset_to_json(j)},
                    {"gamma", to_json(g)},
                    {"upto", up_to},
                    {"series", series}};
    });
}

lc_status lc_predict_json(const lc_root_system* rs, const char* realization, long long ell_or_p,
                          const int* J, size_t J_len, const int* gamma, size_t rank,
                          const int* w_word, size_t w_len, int t, int up_to, char** out_json) {
    if (!rs || !realization) {
        g_last_error = "rs and realization must not be NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto j = to_zero_based(J, J_len, "J");
        Weight g = to_weight(rs->rs, gamma, rank, "gamma");
        auto w = element_or_identity(rs->rs, w_word, w_len);
        auto r = realization_from_id(realization);
        auto pred = predicted_cohomology(rs->rs, r, ell_or_p, j, g, w, t, up_to);
        json out = prediction_to_json(rs->rs, pred);
        out["J"] = subset_to_json(j);
        out["gamma"] = to_json(g);
        out["w"] = word_to_json(w.word);
        out["upto"] = up_to;
        return out;
    });
}

lc_status lc_verify_json(const lc_root_system* rs, const char* check, long long ell, const int* J,
                         size_t J_len, const int* w_word, size_t w_len, int w_all,
                         const int* gamma, size_t rank, int nu_bound, long long cap, int workers,
                         char** out_json) {
    if (!rs || !check) {
        g_last_error = "rs and check must not be NULL";
        return LC_ERR_INVALID_ARGUMENT;
    }
    return guarded(out_json, [&] {
        auto j = to_zero_based(J, J_len, "J");
        Weight g = gamma ? to_weight(rs->rs, gamma, rank, "gamma") : rs->rs.zero_weight();
        std::string check_name(check);
        if (!w_all) {
            auto w = element_or_identity(rs->rs, w_word, w_len);
            return verify_one(rs->rs, check_name, ell, j, w, g, nu_bound, cap);
        }
        auto reps = min_coset_reps(rs->rs, j);
        std::vector<json> results(reps.size());
        std::vector<std::string> errors(reps.size());
        const int nthreads = std::max(1, workers);
        std::atomic<std::size_t> next{0};
        auto run = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= reps.size()) break;
                try {
                    results[i] = verify_one(rs->rs, check_name, ell, j, reps[i], g, nu_bound, cap);
                } catch (const Error& e) {
                    errors[i] = e.what();
                    results[i] = json{{"w", word_to_json(reps[i].word)}, {"error", e.what()}};
                }
            }
        };
        if (nthreads == 1) {
            run();
        } else {
            std::vector<std::thread> pool;
            for (int k = 0; k < nthreads; ++k) pool.emplace_back(run);
            for (auto& th : pool) th.join();
        }
        bool conformant = true;
        json sweep = json::array();
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (!errors[i].empty() || !results[i].value("conformant", false)) conformant = false;
            sweep.push_back(std::move(results[i]));
        }
        return json{{"check", check_name},
                    {"config",
                     json{{"type", rs->rs.name()}, {"l", ell}, {"J", subset_to_json(j)}, {"w", "all"}}},
                    {"sweep", sweep},
                    {"conformant", conformant}};
    });
}

lc_status lc_orbit_json(int n, const int* J, size_t J_len, int up_to, char** out_json) {
    return guarded(out_json, [&] {
        std::vector<int> j;
        j.reserve(J_len);
        for (size_t i = 0; i < J_len; ++i) {
            if (!J) fail(ErrorCode::InvalidArgument, "J is NULL");
            j.push_back(J[i] - 1);
        }
        auto orbit = richardson_orbit(j, n);
        std::vector<long long> series;
        if (up_to >= 0) series = orbit_ring_series(j, n, up_to);
        return orbit_to_json(orbit, series);
    });
}

}  // extern "C"
