#include "ccforge/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace ccforge {

using nlohmann::json;

json series_to_json(const GradedSeries& s) {
    json gens = json::array();
    for (const auto& g : s.table()->generators())
        gens.push_back({{"name", g.name}, {"weight", g.weight}});
    json terms = json::array();
    for (const auto& [mono, c] : s.terms())
        terms.push_back({{"exps", mono}, {"coeff", c.str()}});
    return {{"generators", gens}, {"truncation", s.truncation()}, {"terms", terms}};
}

GradedSeries series_from_json(const json& j) {
    std::vector<GeneratorTable::Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("weight").get<int>()});
    GradedSeries s(make_table(std::move(gens)), j.at("truncation").get<int>());
    for (const auto& t : j.at("terms")) {
        const Monomial mono = t.at("exps").get<Monomial>();
        s.add_term(mono, Rat::parse(t.at("coeff").get<std::string>()));
    }
    return s;
}

json bundle_to_json(const FormalBundle& b) {
    json chern = json::array();
    for (const auto& c : b.chern()) chern.push_back(series_to_json(c));
    return {{"rank", b.rank()}, {"chern", chern}};
}

FormalBundle bundle_from_json(const json& j) {
    const int rank = j.at("rank").get<int>();
    std::vector<GradedSeries> chern;
    for (const auto& c : j.at("chern")) chern.push_back(series_from_json(c));
    if (rank == 0)
        throw std::invalid_argument("bundle_from_json: rank-0 bundles are not serializable");
    return {rank, std::move(chern)};
}

json one_var_to_json(const OneVarSeries& s) {
    json out = json::array();
    for (const auto& c : s.coeffs()) out.push_back(c.str());
    return out;
}

OneVarSeries one_var_from_json(const json& j, bool is_polynomial) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(Rat::parse(c.get<std::string>()));
    return OneVarSeries(std::move(coeffs), is_polynomial);
}

json theory_to_json(const BCTheory& t) {
    return {{"phi", one_var_to_json(t.phi())},
            {"s_genus", one_var_to_json(t.s_genus().profile)},
            {"homogeneous", t.homogeneous_theory()}};
}

BCTheory theory_from_json(const json& j) {
    const OneVarSeries phi = one_var_from_json(j.at("phi"));
    BCTheory t = BCTheory::from_phi(phi);
    if (j.contains("homogeneous") && j.at("homogeneous").get<bool>() != t.homogeneous_theory())
        throw std::invalid_argument("theory_from_json: homogeneity flag contradicts phi");
    if (j.contains("s_genus")) {
        const OneVarSeries given = one_var_from_json(j.at("s_genus"));
        const int order = std::min(given.order(), t.s_genus().profile.order());
        if (given.truncate_to(order) != t.s_genus().profile.truncate_to(order))
            throw std::invalid_argument("theory_from_json: s_genus contradicts phi");
    }
    return t;
}

json json_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

GradedSeries series_from_file(const std::string& path) {
    return series_from_json(json_from_file(path));
}

FormalBundle bundle_from_file(const std::string& path) {
    return bundle_from_json(json_from_file(path));
}

}  // namespace ccforge
