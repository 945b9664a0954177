#include <mmf/serialize.hpp>

namespace mmf {

Json to_json(const QSeries& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(format_rat(c));
    return Json{{"lattice_den", f.lattice_den()},
                {"lead", f.lead()},
                {"coeffs", std::move(coeffs)},
                {"prec_steps", f.prec_steps()},
                {"exact", f.is_exact()}};
}

QSeries qseries_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_rat(s.get<std::string>()));
    bool exact = j.value("exact", false);
    return QSeries(j.at("lattice_den").get<long>(), j.at("lead").get<long>(),
                   std::move(coeffs), exact);
}

Json to_json(const ModularFormExact& f) {
    Json coords = Json::object();
    for (const auto& [mono, v] : f.coords)
        coords[std::to_string(mono.first) + "," + std::to_string(mono.second)] = format_rat(v);
    return Json{{"weight", f.weight}, {"coords", std::move(coords)}};
}

ModularFormExact mform_from_json(const Json& j) {
    ModularFormExact f;
    f.weight = j.at("weight").get<long>();
    for (const auto& [key, v] : j.at("coords").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad monomial key");
        int a = std::stoi(key.substr(0, comma));
        int b = std::stoi(key.substr(comma + 1));
        f.coords[{a, b}] = parse_rat(v.get<std::string>());
    }
    return f;
}

Json to_json(const MLDE& L) {
    Json coeffs = Json::object();
    for (const auto& [tw, P] : L.coeffs) coeffs[std::to_string(tw)] = to_json(P);
    return Json{{"weight", format_rat(L.weight)},
                {"order", L.order},
                {"coeffs", std::move(coeffs)}};
}

MLDE mlde_from_json(const Json& j) {
    MLDE L;
    L.weight = parse_rat(j.at("weight").get<std::string>());
    L.order = j.at("order").get<long>();
    for (const auto& [key, v] : j.at("coeffs").items())
        L.coeffs[std::stol(key)] = mform_from_json(v);
    return L;
}

Json to_json(const TransformReport& r) {
    return Json{{"p", r.p},
                {"relation", r.relation},
                {"max_abs_dev", r.max_abs_dev},
                {"tol", r.tol},
                {"pass", r.pass}};
}

} // namespace mmf
