#include "klrsk/mackey.hpp"

#include "klrsk/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace klrsk {

std::vector<RootVector> MackeyMatrix::row(int i) const
{
    std::vector<RootVector> out;
    for (int j = 0; j < cols_; ++j)
        out.push_back(at(i, j));
    return out;
}

std::vector<RootVector> MackeyMatrix::col(int j) const
{
    std::vector<RootVector> out;
    for (int i = 0; i < rows_; ++i)
        out.push_back(at(i, j));
    return out;
}

RootVector MackeyMatrix::row_sum(int i) const
{
    RootVector r;
    for (int j = 0; j < cols_; ++j)
        r += at(i, j);
    return r;
}

RootVector MackeyMatrix::col_sum(int j) const
{
    RootVector r;
    for (int i = 0; i < rows_; ++i)
        r += at(i, j);
    return r;
}

std::string MackeyMatrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j)
            os << (j ? " | " : "") << at(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

int64_t degree(const MackeyMatrix& delta)
{
    int64_t total = 0;
    for (int i = 0; i < delta.rows(); ++i)
        for (int i2 = i + 1; i2 < delta.rows(); ++i2)
            for (int j = 0; j < delta.cols(); ++j)
                for (int j2 = 0; j2 < j; ++j2)
                    total += form(delta.at(i, j), delta.at(i2, j2));
    return -total;
}

namespace {

using Table = std::vector<int>;  // rows * cols, row-major

// All nonnegative integer tables with the given margins.
std::vector<Table> tables(const std::vector<int>& row, const std::vector<int>& col)
{
    const size_t k = row.size(), l = col.size();
    std::vector<Table> out;
    Table t(k * l, 0);
    std::vector<int> rrem = row, crem = col;
    std::function<void(size_t)> rec = [&](size_t cell) {
        if (cell == k * l) {
            for (int c : crem)
                if (c != 0)
                    return;
            out.push_back(t);
            return;
        }
        const size_t i = cell / l, j = cell % l;
        if (j + 1 == l) {
            // last column takes what the row has left
            const int v = rrem[i];
            if (v > crem[j])
                return;
            t[cell] = v;
            rrem[i] -= v;
            crem[j] -= v;
            rec(cell + 1);
            rrem[i] += v;
            crem[j] += v;
            t[cell] = 0;
            return;
        }
        for (int v = 0; v <= std::min(rrem[i], crem[j]); ++v) {
            t[cell] = v;
            rrem[i] -= v;
            crem[j] -= v;
            rec(cell + 1);
            rrem[i] += v;
            crem[j] += v;
        }
        t[cell] = 0;
    };
    rec(0);
    return out;
}

} // namespace

void for_each_mackey(const std::vector<RootVector>& beta, const std::vector<RootVector>& gamma,
                     const std::function<void(const MackeyMatrix&)>& visit, int cap)
{
    RootVector sb, sg;
    for (const auto& b : beta)
        sb += b;
    for (const auto& g : gamma)
        sg += g;
    if (sb != sg)
        throw Error(ErrorKind::WeightMismatch, "row total " + sb.to_string() + " differs from column total " +
                                                   sg.to_string());
    if (sb.height() > cap)
        throw Error(ErrorKind::CapExceeded,
                    "height " + std::to_string(sb.height()) + " exceeds cap " + std::to_string(cap));
    const int k = static_cast<int>(beta.size()), l = static_cast<int>(gamma.size());

    // the constraints split over root indices, so enumerate one table per index
    std::vector<int> indices;
    std::vector<std::vector<Table>> per_index;
    for (auto [x, c] : sb.entries()) {
        std::vector<int> row, col;
        for (const auto& b : beta)
            row.push_back(b[x]);
        for (const auto& g : gamma)
            col.push_back(g[x]);
        indices.push_back(x);
        per_index.push_back(tables(row, col));
    }

    MackeyMatrix m(k, l);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == indices.size()) {
            visit(m);
            return;
        }
        for (const auto& t : per_index[idx]) {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < l; ++j)
                    m.at(i, j).add(indices[idx], t[size_t(i) * l + j]);
            rec(idx + 1);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < l; ++j)
                    m.at(i, j).add(indices[idx], -t[size_t(i) * l + j]);
        }
    };
    rec(0);
}

std::vector<MackeyMatrix> enumerate_mackey(const std::vector<RootVector>& beta, const std::vector<RootVector>& gamma,
                                           int cap)
{
    std::vector<MackeyMatrix> out;
    for_each_mackey(beta, gamma, [&](const MackeyMatrix& m) { out.push_back(m); }, cap);
    return out;
}

} // namespace klrsk
