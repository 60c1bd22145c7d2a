#include "json_io.hpp"

namespace liecoh {

json to_json(const Weight& w) { return json(w.coords); }
json to_json(const RootVector& r) { return json(r.coords); }
json to_json(const QPolynomial& p) { return json(p.coeffs); }

json word_to_json(const std::vector<int>& word) {
    json out = json::array();
    for (int i : word) out.push_back(i + 1);
    return out;
}

json subset_to_json(const std::vector<int>& J) { return word_to_json(J); }

json to_json(const Character& c) {
    json out = json::array();
    for (const auto& [mu, m] : c.terms) out.push_back({{"weight", to_json(mu)}, {"mult", m}});
    return out;
}

json to_json(const GradedCharacter& c) {
    json out = json::array();
    for (const auto& [mu, p] : c.terms) out.push_back({{"weight", to_json(mu)}, {"poly", to_json(p)}});
    return out;
}

json to_json(const Partition& p) { return json(p.parts); }

json decomposition_to_json(const std::map<Weight, long long>& dec) {
    json out = json::array();
    for (const auto& [sigma, m] : dec) out.push_back({{"weight", to_json(sigma)}, {"mult", m}});
    return out;
}

json to_json(const Hypothesis& h) {
    return json{{"name", h.name}, {"satisfied", h.satisfied}, {"checked", h.checked}};
}

json hypotheses_to_json(const std::vector<Hypothesis>& hs) {
    json out = json::array();
    for (const auto& h : hs) out.push_back(to_json(h));
    return out;
}

json to_json(const RootSystem& rs) {
    json roots = json::array();
    for (const auto& r : rs.positive_roots()) roots.push_back(to_json(r));
    return json{{"type", rs.name()},
                {"rank", rs.rank()},
                {"cartan", rs.cartan()},
                {"symmetrizers", rs.symmetrizers()},
                {"num_positive_roots", rs.num_positive_roots()},
                {"coxeter_number", rs.coxeter_number()},
                {"rho", to_json(rs.rho())},
                {"highest_root", to_json(rs.highest_root())},
                {"highest_short_root", to_json(rs.highest_short_root())},
                {"positive_roots", roots}};
}

json element_to_json(const RootSystem& rs, const WeylElement& w) {
    json inv = json::array();
    for (const auto& r : inversion_set(rs, w)) inv.push_back(to_json(r));
    return json{{"word", word_to_json(w.word)},
                {"length", w.length()},
                {"inversions", inv},
                {"dot_zero", to_json(dot(rs, w, rs.zero_weight()))}};
}

json prediction_to_json(const RootSystem& rs, const CohomologyPrediction& p) {
    json degrees = json::array();
    for (const auto& [n, row] : p.per_degree) {
        json entry{{"n", n},
                   {"dimension", row.dimension},
                   {"decomposition", decomposition_to_json(row.decomposition)}};
        if (p.mode == Mode::Frobenius) {
            json twisted = json::array();
            for (const auto& [sigma, m] : row.decomposition)
                twisted.push_back(
                    {{"weight", to_json(sigma * static_cast<int>(p.twist))}, {"mult", m}});
            entry["twisted_decomposition"] = twisted;
        }
        degrees.push_back(std::move(entry));
    }
    return json{{"realization", p.realization},
                {"mode", p.mode == Mode::Frobenius ? "frobenius" : "quantum"},
                {p.mode == Mode::Frobenius ? "p" : "l", p.ell},
                {"type", rs.name()},
                {"parity_offset", p.parity_offset},
                {"twist", p.twist},
                {"hypotheses", hypotheses_to_json(p.hypotheses)},
                {"assumption_violated", p.assumption_violated},
                {"degrees", degrees}};
}

json weighteq_to_json(const RootSystem& rs, const WeighteqReport& r) {
    json sols = json::array();
    for (const auto& s : r.solutions)
        sols.push_back({{"y", word_to_json(s.y.word)},
                        {"nu", to_json(s.nu)},
                        {"mu", to_json(s.mu)},
                        {"mu_mult", s.mu_mult},
                        {"sigma", to_json(s.sigma)},
                        {"sigma_mult", s.sigma_mult},
                        {"trivial", s.trivial}});
    return json{{"check", "weighteq"},
                {"config",
                 json{{"type", rs.name()},
                      {"l", r.ell},
                      {"J", subset_to_json(r.J)},
                      {"w", word_to_json(r.w.word)}}},
                {"hypotheses", hypotheses_to_json(r.hypotheses)},
                {"dim_h0_epsilon", r.dim_h0_epsilon},
                {"solutions", sols},
                {"conformant", r.conformant}};
}

json kempf_to_json(const RootSystem& rs, const KempfReport& r) {
    json viol = json::array();
    for (const auto& mu : r.violations) viol.push_back(to_json(mu));
    return json{{"check", "kempf"},
                {"config",
                 json{{"type", rs.name()},
                      {"l", r.ell},
                      {"J", subset_to_json(r.J)},
                      {"w", word_to_json(r.w.word)},
                      {"gamma", to_json(r.gamma)}}},
                {"hypotheses", hypotheses_to_json(r.hypotheses)},
                {"weights_checked", r.weights_checked},
                {"violations", viol},
                {"conformant", r.conformant}};
}

json linkage_to_json(const RootSystem& rs, const LinkageReport& r) {
    json pairs = json::array();
    for (const auto& p : r.linked_pairs) {
        json wits = json::array();
        for (const auto& w : p.witnesses)
            wits.push_back({{"x", word_to_json(w.x.word)}, {"sigma", to_json(w.sigma)}});
        pairs.push_back({{"y", word_to_json(p.y.word)},
                         {"nu", to_json(p.nu)},
                         {"witnesses", wits},
                         {"expected", p.expected}});
    }
    return json{{"check", "linkage"},
                {"config",
                 json{{"type", rs.name()},
                      {"l", r.ell},
                      {"J", subset_to_json(r.J)},
                      {"w", word_to_json(r.w.word)},
                      {"nu_bound", r.nu_bound}}},
                {"hypotheses", hypotheses_to_json(r.hypotheses)},
                {"linked_pairs", pairs},
                {"conformant", r.conformant}};
}

json orbit_to_json(const OrbitDescriptor& o, const std::vector<long long>& series) {
    json out{{"n", o.n},
             {"J", subset_to_json(o.J_source)},
             {"sigma", to_json(o.sigma)},
             {"lambda", to_json(o.lambda)},
             {"dim", o.dim}};
    if (!series.empty()) out["series"] = json(series);
    return out;
}

Weight weight_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::InvalidArgument, "weight must be a JSON array");
    return Weight(j.get<std::vector<int>>());
}

RootVector root_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::InvalidArgument, "root must be a JSON array");
    return RootVector(j.get<std::vector<int>>());
}

QPolynomial qpoly_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::InvalidArgument, "polynomial must be a JSON array");
    return QPolynomial(j.get<std::vector<long long>>());
}

std::vector<int> word_from_json(const json& j) {
    auto word = j.get<std::vector<int>>();
    for (int& i : word) --i;
    return word;
}

std::vector<int> subset_from_json(const json& j) { return word_from_json(j); }

Character character_from_json(const json& j) {
    Character c;
    for (const auto& entry : j)
        c.add(weight_from_json(entry.at("weight")), entry.at("mult").get<long long>());
    return c;
}

GradedCharacter graded_character_from_json(const json& j) {
    GradedCharacter c;
    for (const auto& entry : j)
        c.add(weight_from_json(entry.at("weight")), qpoly_from_json(entry.at("poly")));
    return c;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace liecoh
