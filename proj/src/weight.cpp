#include "lieball/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace lieball {

std::string HalfInt::to_string() const
{
    if (is_integer()) return std::to_string(as_integer());
    return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

Weight Weight::from_ints(std::span<const int> v)
{
    Weight w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w.coords_[i] = HalfInt(v[i]);
    return w;
}

Weight Weight::constant(std::size_t rank, HalfInt c)
{
    return Weight(std::vector<HalfInt>(rank, c));
}

Weight Weight::unit(std::size_t rank, std::size_t index)
{
    if (index >= rank) throw std::out_of_range("Weight::unit: index beyond rank");
    Weight w(rank);
    w.coords_[index] = 1;
    return w;
}

bool Weight::is_integral() const
{
    for (auto c : coords_)
        if (!c.is_integer()) return false;
    return true;
}

std::vector<int> Weight::to_ints() const
{
    std::vector<int> out;
    out.reserve(coords_.size());
    for (auto c : coords_) {
        if (!c.is_integer()) throw std::domain_error("Weight::to_ints: non-integral coordinate " + c.to_string());
        out.push_back(static_cast<int>(c.as_integer()));
    }
    return out;
}

Weight Weight::halved() const
{
    Weight out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!coords_[i].is_integer())
            throw std::domain_error("Weight::halved: coordinate " + coords_[i].to_string() + " would leave (1/2)Z");
        out.coords_[i] = HalfInt::from_twice(coords_[i].as_integer());
    }
    return out;
}

Weight& Weight::operator+=(const Weight& o)
{
    if (o.rank() != rank()) throw std::invalid_argument("Weight: rank mismatch in +");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    if (o.rank() != rank()) throw std::invalid_argument("Weight: rank mismatch in -");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Weight Weight::operator-() const
{
    Weight out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
}

Weight operator*(std::int64_t k, const Weight& w)
{
    Weight out(w);
    for (auto& c : out.coords_) c = k * c;
    return out;
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

HalfInt pairing(const Weight& w, const Weight& root)
{
    if (w.rank() != root.rank()) throw std::invalid_argument("pairing: rank mismatch");
    std::int64_t twice = 0;
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (!root[i].is_integer()) throw std::domain_error("pairing: second argument must be integral");
        twice += w[i].twice() * root[i].as_integer();
    }
    return HalfInt::from_twice(twice);
}

}  // namespace lieball
