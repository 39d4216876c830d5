#include "steininfo/io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace steininfo {

using nlohmann::json;

std::string pmf_to_json(const Pmf& p) {
    json j;
    j["a"] = p.a();
    j["probs"] = p.probs();
    j["tail_mass"] = p.tail_mass();
    j["label"] = p.label();
    return j.dump();
}

Pmf pmf_from_json(const std::string& text) {
    json j = json::parse(text);
    const int a = j.at("a").get<int>();
    auto probs = j.at("probs").get<std::vector<double>>();
    const double tail = j.at("tail_mass").get<double>();
    const std::string label = j.value("label", std::string("pmf"));
    // A stored tail marks the law as a truncation of something larger.
    return Pmf::from_values(a, std::move(probs), tail, label, tail > 0.0);
}

Pmf load_pmf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pmf file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return pmf_from_json(text);
}

std::string lattice_to_json(const LatticeFunction& f) {
    json j;
    j["window_lo"] = f.lo();
    j["values"] = f.values();
    return j.dump();
}

LatticeFunction lattice_from_json(const std::string& text) {
    json j = json::parse(text);
    return LatticeFunction(j.at("window_lo").get<int>(),
                           j.at("values").get<std::vector<double>>());
}

std::string identity_report_to_json(const IdentityReport& rep) {
    json j;
    j["lhs"] = rep.lhs;
    j["main_term"] = rep.main_term;
    j["error_term"] = rep.error_term;
    j["residual"] = rep.residual;
    return j.dump();
}

std::string bound_report_to_json(const BoundReport& rep) {
    json j;
    j["distance"] = rep.distance_exact;
    j["info"] = rep.info_value;
    j["constant"] = rep.magic_constant;
    j["error_term"] = rep.error_term;
    j["bound"] = rep.bound_value;
    j["slack"] = rep.slack;
    j["holds"] = rep.holds;
    j["kind"] = rep.kind;
    return j.dump();
}

std::string example_row_to_json(const ExampleRow& row) {
    json j;
    j["params"] = row.params;
    j["tv"] = row.tv_exact;
    j["k1"] = row.k1;
    j["k1_bound"] = row.k1_bound;
    if (row.k2) j["k2"] = *row.k2;
    if (row.k2_bound) j["k2_bound"] = *row.k2_bound;
    j["khj_ref"] = row.khj_reference;
    j["error_term"] = row.error_term;
    if (!row.better_bound.empty()) j["better_bound"] = row.better_bound;
    return j.dump();
}

}  // namespace steininfo
