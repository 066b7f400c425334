#include "pluriharm/mapspec.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pluriharm {

namespace {

using nlohmann::json;

std::map<std::string, double> parse_query(const std::string& query) {
    std::map<std::string, double> params;
    std::istringstream is(query);
    std::string item;
    while (std::getline(is, item, '&')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw BadSpec("builtin: malformed parameter " + item);
        try {
            params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw BadSpec("builtin: non-numeric parameter value in " + item);
        }
    }
    return params;
}

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

MultiIndex parse_multi_index(const std::string& key, int n) {
    MultiIndex beta;
    std::istringstream is(key);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            beta.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw BadSpec("bad multi-index key: " + key);
        }
    }
    if (static_cast<int>(beta.size()) != n) {
        throw BadSpec("multi-index length != n in key: " + key);
    }
    return beta;
}

CVector parse_coeff_vector(const json& jc, int n) {
    if (!jc.is_array() || static_cast<int>(jc.size()) != n) {
        throw BadSpec("coefficient must be an array of n [re, im] pairs");
    }
    CVector v(n);
    for (int i = 0; i < n; ++i) {
        const json& p = jc[i];
        if (!p.is_array() || p.size() != 2) throw BadSpec("complex number must be [re, im]");
        v(i) = std::complex<double>(p[0].get<double>(), p[1].get<double>());
    }
    return v;
}

HoloFn part_from_json(const json& jp, int n) {
    const std::string kind = jp.at("kind").get<std::string>();
    if (kind == "zero") return zero_holo(n);
    if (kind == "identity") return identity_map(n).h;
    if (kind == "polynomial") {
        std::map<MultiIndex, CVector> coeffs;
        for (const auto& [key, val] : jp.at("coefficients").items()) {
            coeffs[parse_multi_index(key, n)] = parse_coeff_vector(val, n);
        }
        return PolynomialModel(n, std::move(coeffs)).fn();
    }
    if (kind == "family") {
        const std::string fam = jp.at("family").get<std::string>();
        if (fam != "pommerenke") {
            throw BadSpec("only the pommerenke family is addressable as an h/g part; "
                          "use a top-level builtin for the coupled extremals");
        }
        if (n != 1) throw BadSpec("pommerenke family is n = 1 only");
        ExtremalSpec spec;
        spec.family = ExtremalFamily::pommerenke;
        spec.alpha = jp.at("params").at("alpha").get<double>();
        return build_extremal(spec).h;
    }
    throw BadSpec("unknown part kind: " + kind);
}

}  // namespace

MapModel builtin_map(const std::string& uri) {
    const auto q = uri.find('?');
    const std::string name = uri.substr(0, q);
    const std::map<std::string, double> params =
        q == std::string::npos ? std::map<std::string, double>{}
                               : parse_query(uri.substr(q + 1));
    if (name == "identity") {
        const int n = static_cast<int>(get_param(params, "n", 1));
        if (n < 1) throw BadSpec("identity: n must be >= 1");
        return identity_map(n);
    }
    ExtremalSpec spec;
    spec.family = family_from_name(name);
    spec.alpha = get_param(params, "alpha", 1.0);
    spec.k = get_param(params, "k", 0.0);
    spec.t = get_param(params, "t", 0.0);
    spec.sign = get_param(params, "sign", 1.0) < 0 ? -1 : +1;
    return build_extremal(spec);
}

MapModel map_from_json(const nlohmann::json& j, const std::string& id) {
    try {
        if (j.contains("builtin")) {
            std::string uri = j.at("builtin").get<std::string>();
            if (j.contains("params")) {
                std::string sep = "?";
                for (const auto& [key, val] : j.at("params").items()) {
                    uri += sep + key + "=" + std::to_string(val.get<double>());
                    sep = "&";
                }
            }
            return builtin_map(uri);
        }
        const int n = j.at("n").get<int>();
        if (n < 1) throw BadSpec("map spec: n must be >= 1");
        MapModel m;
        m.n = n;
        m.h = part_from_json(j.at("h"), n);
        m.g = part_from_json(j.at("g"), n);
        m.id = id;
        return m;
    } catch (const json::exception& e) {
        throw BadSpec(std::string("map spec: ") + e.what());
    }
}

MapModel load_map_spec(const std::string& path_or_uri) {
    constexpr const char* prefix = "builtin:";
    if (path_or_uri.rfind(prefix, 0) == 0) {
        return builtin_map(path_or_uri.substr(std::string(prefix).size()));
    }
    std::ifstream in(path_or_uri);
    if (!in) throw BadSpec("cannot open map spec file: " + path_or_uri);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadSpec(std::string("malformed map spec: ") + e.what());
    }
    return map_from_json(j, path_or_uri);
}

}  // namespace pluriharm
