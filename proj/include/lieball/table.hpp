#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "lieball/kostant.hpp"

namespace lieball {

/// What the numbers in a K-type table mean. Outside the weakly fair range the
/// Blattner sum is only an Euler characteristic of the derived functor modules.
enum class TableKind { multiplicity, euler_characteristic };

std::string_view to_string(TableKind kind);

/// K-types with nonzero value, ordered lexicographically in (mu_0, mu).
struct KTypeTable {
    int m = 0;
    int lambda = 0;
    int max_mu0 = 0;
    int max_mu1 = 0;
    TableKind kind = TableKind::multiplicity;
    std::map<KTypeParam, int> entries;

    friend bool operator==(const KTypeTable&, const KTypeTable&) = default;
};

struct TableDifference {
    KTypeParam ktype;
    int left;
    int right;
};

/// First K-type (in table order) where the entries differ; absent K-types count as 0.
std::optional<TableDifference> first_difference(const KTypeTable& a, const KTypeTable& b);

/// {"m":..,"lambda":..,"kind":..,"max_mu0":..,"max_mu1":..,"entries":[{"mu0":..,"mu":[..],"mult":..}]}
std::string table_to_json(const KTypeTable& table);
/// Inverse of table_to_json. "kind" and the bounds are optional on input.
/// Throws std::invalid_argument on schema violations.
KTypeTable table_from_json(std::string_view json);

/// Header "mu0,mu_1,...,mu_m,mult" then one row per entry.
std::string table_to_csv(const KTypeTable& table);

}  // namespace lieball
