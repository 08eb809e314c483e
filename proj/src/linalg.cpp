#include "lieball/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lieball {

namespace {

// a - f * b, both sorted by column.
SparseRow axpy(const SparseRow& a, const mpq_class& f, const SparseRow& b)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -f * b[j].second);
            ++j;
        } else {
            mpq_class v = a[i].second - f * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Pivot rows keyed by leading column, each normalized to leading coefficient 1.
std::map<std::size_t, SparseRow> echelon(const std::vector<SparseRow>& rows)
{
    std::map<std::size_t, SparseRow> pivots;
    for (const auto& input : rows) {
        SparseRow r = input;
        while (!r.empty()) {
            const auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                const mpq_class lead = r.front().second;
                for (auto& [c, v] : r) v /= lead;
                pivots.emplace(r.front().first, std::move(r));
                break;
            }
            r = axpy(r, r.front().second, it->second);
        }
    }
    return pivots;
}

}  // namespace

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows)
{
}

void SparseRationalMatrix::add(std::size_t r, std::size_t c, const mpq_class& v)
{
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseRationalMatrix::add: index out of range");
    mpq_class value(v);
    value.canonicalize();  // GMP arithmetic assumes canonical operands
    if (value == 0) return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += value;
        if (it->second == 0) row.erase(it);
    } else {
        row.emplace(it, c, std::move(value));
    }
}

mpq_class SparseRationalMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseRationalMatrix::at: index out of range");
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? it->second : mpq_class(0);
}

std::size_t SparseRationalMatrix::rank() const { return echelon(data_).size(); }

std::vector<std::vector<mpq_class>> SparseRationalMatrix::kernel_basis() const
{
    auto pivots = echelon(data_);
    // Back substitution, largest leading column first, so each row is reduced
    // against rows that already have zeros in all other pivot columns.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        SparseRow& r = it->second;
        SparseRow pending = r;
        for (const auto& [c, v] : pending) {
            if (c == it->first) continue;
            const auto p = pivots.find(c);
            if (p == pivots.end()) continue;
            const mpq_class f = v;
            r = axpy(r, f, p->second);
        }
    }

    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (pivots.count(free)) continue;
        std::vector<mpq_class> x(cols_, 0);
        x[free] = 1;
        for (const auto& [lead, r] : pivots) {
            auto e = std::lower_bound(r.begin(), r.end(), free, [](const auto& t, std::size_t col) { return t.first < col; });
            if (e != r.end() && e->first == free) x[lead] = -e->second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<mpz_class>> SparseRationalMatrix::to_integer_rows() const
{
    std::vector<std::vector<mpz_class>> out(rows_, std::vector<mpz_class>(cols_, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
        mpz_class l = 1;
        for (const auto& [c, v] : data_[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        for (const auto& [c, v] : data_[r]) out[r][c] = v.get_num() * (l / v.get_den());
    }
    return out;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a)
{
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a.front().size();
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("bareiss_rank: ragged matrix");

    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const mpz_class& p = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = p * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace lieball
