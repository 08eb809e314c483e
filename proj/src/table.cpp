#include "lieball/table.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lieball {

using ojson = nlohmann::ordered_json;

std::string_view to_string(TableKind kind)
{
    return kind == TableKind::multiplicity ? "multiplicity" : "Euler characteristic";
}

std::optional<TableDifference> first_difference(const KTypeTable& a, const KTypeTable& b)
{
    std::set<KTypeParam> keys;
    for (const auto& [k, v] : a.entries) keys.insert(k);
    for (const auto& [k, v] : b.entries) keys.insert(k);
    for (const auto& k : keys) {
        const auto ia = a.entries.find(k);
        const auto ib = b.entries.find(k);
        const int va = ia == a.entries.end() ? 0 : ia->second;
        const int vb = ib == b.entries.end() ? 0 : ib->second;
        if (va != vb) return TableDifference{k, va, vb};
    }
    return std::nullopt;
}

std::string table_to_json(const KTypeTable& table)
{
    ojson j;
    j["m"] = table.m;
    j["lambda"] = table.lambda;
    j["kind"] = table.kind == TableKind::multiplicity ? "multiplicity" : "euler_characteristic";
    j["max_mu0"] = table.max_mu0;
    j["max_mu1"] = table.max_mu1;
    j["entries"] = ojson::array();
    for (const auto& [k, mult] : table.entries) {
        ojson e;
        e["mu0"] = k.mu0;
        e["mu"] = k.mu;
        e["mult"] = mult;
        j["entries"].push_back(std::move(e));
    }
    return j.dump(2);
}

KTypeTable table_from_json(std::string_view json)
{
    ojson j;
    try {
        j = ojson::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("K-type table: malformed JSON: ") + e.what());
    }
    try {
        KTypeTable t;
        t.m = j.at("m").get<int>();
        t.lambda = j.at("lambda").get<int>();
        t.max_mu0 = j.value("max_mu0", 0);
        t.max_mu1 = j.value("max_mu1", 0);
        const auto kind = j.value("kind", std::string("multiplicity"));
        if (kind == "multiplicity")
            t.kind = TableKind::multiplicity;
        else if (kind == "euler_characteristic")
            t.kind = TableKind::euler_characteristic;
        else
            throw std::invalid_argument("K-type table: unknown kind '" + kind + "'");
        for (const auto& e : j.at("entries")) {
            KTypeParam k{e.at("mu0").get<int>(), e.at("mu").get<std::vector<int>>()};
            if (static_cast<int>(k.mu.size()) != t.m)
                throw std::invalid_argument("K-type table: entry " + k.to_string() + " has wrong length");
            const int mult = e.at("mult").get<int>();
            if (mult == 0) throw std::invalid_argument("K-type table: zero entries are not stored");
            if (!t.entries.emplace(std::move(k), mult).second)
                throw std::invalid_argument("K-type table: duplicate entry");
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("K-type table: schema violation: ") + e.what());
    }
}

std::string table_to_csv(const KTypeTable& table)
{
    std::ostringstream os;
    os << "mu0";
    for (int i = 1; i <= table.m; ++i) os << ",mu_" << i;
    os << ",mult\n";
    for (const auto& [k, mult] : table.entries) {
        os << k.mu0;
        for (int v : k.mu) os << ',' << v;
        os << ',' << mult << '\n';
    }
    return os.str();
}

}  // namespace lieball
