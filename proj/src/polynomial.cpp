#include "lieball/polynomial.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lieball {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

nlohmann::ordered_json integer_to_json(const mpz_class& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class integer_from_json(const nlohmann::ordered_json& j)
{
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("polynomial JSON: bad integer string");
        return z;
    }
    throw std::invalid_argument("polynomial JSON: num/den must be integers");
}

}  // namespace

bool GrlexOrder::operator()(const Exponent& a, const Exponent& b) const
{
    const int da = total(a), db = total(b);
    if (da != db) return da < db;
    return a > b;
}

std::vector<Exponent> monomial_basis(int nvars, int degree)
{
    if (nvars < 1) throw std::invalid_argument("monomial_basis: need at least one variable");
    std::vector<Exponent> out;
    if (degree < 0) return out;
    Exponent e(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> fill = [&](int pos, int remaining) {
        if (pos == nvars - 1) {
            e[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(e);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            e[static_cast<std::size_t>(pos)] = a;
            fill(pos + 1, remaining - a);
        }
    };
    fill(0, degree);
    return out;
}

SparsePolynomial::SparsePolynomial(int nvars) : nvars_(nvars)
{
    if (nvars < 1) throw std::invalid_argument("SparsePolynomial: need at least one variable");
}

SparsePolynomial SparsePolynomial::constant(int nvars, const mpq_class& c)
{
    SparsePolynomial p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int index)
{
    Exponent e(static_cast<std::size_t>(nvars), 0);
    if (index < 0 || index >= nvars) throw std::out_of_range("SparsePolynomial::variable: index out of range");
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, std::move(e));
}

SparsePolynomial SparsePolynomial::monomial(int nvars, Exponent exp, const mpq_class& c)
{
    SparsePolynomial p(nvars);
    p.add_term(exp, c);
    return p;
}

mpq_class SparsePolynomial::coefficient(const Exponent& exp) const
{
    const auto it = terms_.find(exp);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& exp, const mpq_class& c)
{
    if (static_cast<int>(exp.size()) != nvars_) throw std::invalid_argument("SparsePolynomial: exponent length mismatch");
    for (int a : exp)
        if (a < 0) throw std::invalid_argument("SparsePolynomial: negative exponent");
    mpq_class value(c);
    value.canonicalize();  // GMP arithmetic assumes canonical operands
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, value);
    if (inserted) return;
    it->second += value;
    if (it->second == 0) terms_.erase(it);
}

int SparsePolynomial::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
}

std::optional<int> SparsePolynomial::homogeneous_degree() const
{
    if (terms_.empty()) return 0;
    const int d = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total(e) != d) return std::nullopt;
    return d;
}

SparsePolynomial SparsePolynomial::derivative(int index) const
{
    if (index < 0 || index >= nvars_) throw std::out_of_range("derivative: variable index out of range");
    const auto i = static_cast<std::size_t>(index);
    SparsePolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        --d[i];
        out.add_term(d, c * e[i]);
    }
    return out;
}

SparsePolynomial SparsePolynomial::times_variable(int index) const
{
    if (index < 0 || index >= nvars_) throw std::out_of_range("times_variable: variable index out of range");
    SparsePolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        ++d[static_cast<std::size_t>(index)];
        out.terms_.emplace(std::move(d), c);
    }
    return out;
}

void SparsePolynomial::require_same_ring(const SparsePolynomial& o) const
{
    if (o.nvars_ != nvars_) throw std::invalid_argument("SparsePolynomial: variable count mismatch");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o)
{
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o)
{
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const mpq_class& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b)
{
    a.require_same_ring(b);
    SparsePolynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string SparsePolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*z" << i + 1;
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

std::string polynomial_to_json(const SparsePolynomial& p)
{
    nlohmann::ordered_json j;
    j["nvars"] = p.nvars();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = e;
        t["num"] = integer_to_json(c.get_num());
        t["den"] = integer_to_json(c.get_den());
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

SparsePolynomial polynomial_from_json(std::string_view json)
{
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    try {
        SparsePolynomial p(j.at("nvars").get<int>());
        for (const auto& t : j.at("terms")) {
            const mpz_class den = integer_from_json(t.at("den"));
            if (den == 0) throw std::invalid_argument("polynomial JSON: zero denominator");
            mpq_class c(integer_from_json(t.at("num")), den);
            c.canonicalize();
            p.add_term(t.at("exp").get<Exponent>(), c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
}

}  // namespace lieball
