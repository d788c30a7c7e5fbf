#include "klrsk/rsk.hpp"

#include "klrsk/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

namespace klrsk {

namespace {

// Index order of I: begin ascending, ties by end descending, then insertion.
std::vector<Segment> ordered_body(const Multisegment& m)
{
    auto segs = m.segments();
    std::stable_sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
        return x.b < y.b || (x.b == y.b && x.e > y.e);
    });
    return segs;
}

} // namespace

bool is_permissible(const LadderMultisegment& l, const Multisegment& m)
{
    const auto& js = l.segments();
    auto segs = m.segments();
    // larger segments first, so every s with segs[i] << segs[s] is already placed
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.b > y.b; });
    const int n = static_cast<int>(segs.size());
    std::vector<int> placed(n, 0);
    for (int i = 0; i < n; ++i) {
        int floor = 0;
        for (int s = 0; s < i; ++s)
            if (ladder_less(segs[i], segs[s]))
                floor = std::max(floor, placed[s]);
        const Segment shifted = segs[i].shifted_left();
        int pos = 0;
        for (int t = floor + 1; t <= static_cast<int>(js.size()); ++t)
            if (precedes(shifted, js[t - 1])) {
                pos = t;
                break;
            }
        if (pos == 0)
            return false;
        placed[i] = pos;
    }
    return true;
}

PermissiblePair build_permissible(const LadderMultisegment& l, const Multisegment& m)
{
    if (!is_permissible(l, m))
        throw Error(ErrorKind::NotPermissible, "(" + l.to_string() + ", " + m.to_string() + ")");

    PermissiblePair p{l, m, ordered_body(m), 0, {}, {}, {}, {}, {}};
    p.body_size = static_cast<int>(p.segs.size());
    const int n = p.body_size;
    const int len = l.size();
    p.segs.insert(p.segs.end(), l.segments().begin(), l.segments().end());
    const int total = n + len;

    p.depth_prime.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const Segment shifted = p.segs[i].shifted_left();
        for (int t = 1; t <= len; ++t)
            if (ladder_less(shifted, p.segs[p.j(t)]))
                p.depth_prime[i] = t;
        if (p.depth_prime[i] == 0)
            throw Error(ErrorKind::InternalInconsistency, "permissible pair with empty depth set");
    }

    // s << i forces b(s) < b(i), hence s < i in the index order
    p.depth.assign(total, 0);
    for (int i = 0; i < n; ++i) {
        int d = p.depth_prime[i];
        for (int s = 0; s < i; ++s)
            if (ladder_less(p.segs[s], p.segs[i]))
                d = std::min(d, p.depth[s] - 1);
        if (d < 1 || d > len)
            throw Error(ErrorKind::InternalInconsistency,
                        "depth " + std::to_string(d) + " out of range for " + p.segs[i].to_string());
        p.depth[i] = d;
    }
    for (int t = 1; t <= len; ++t)
        p.depth[p.j(t)] = t;

    p.sigma.assign(total, -1);
    for (int t = 1; t <= len; ++t) {
        std::vector<int> cycle;
        for (int i = n - 1; i >= 0; --i)
            if (p.depth[i] == t)
                cycle.push_back(i);
        cycle.push_back(p.j(t));
        for (size_t k = 0; k < cycle.size(); ++k)
            p.sigma[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }

    p.club.resize(total);
    for (int i = 0; i < total; ++i)
        p.club[i] = Segment(p.segs[i].b, p.segs[p.sigma[i]].e);

    std::vector<int> inverse(total);
    for (int i = 0; i < total; ++i)
        inverse[p.sigma[i]] = i;
    p.vee.assign(total, -1);
    for (int i = 0; i < total; ++i) {
        int x = inverse[i];
        while (x != i) {
            if (p.club[x].e != p.segs[x].e) {
                p.vee[i] = x;
                break;
            }
            x = inverse[x];
        }
        if (p.vee[i] < 0)
            p.vee[i] = p.j(p.depth[i]);
    }
    return p;
}

std::vector<int> depth_by_chains(const PermissiblePair& p)
{
    const int n = p.body_size;
    std::vector<int> out(n, std::numeric_limits<int>::max());
    std::function<void(int, int, int)> walk = [&](int start, int cur, int k) {
        out[start] = std::min(out[start], p.depth_prime[cur] - k);
        for (int s = 0; s < n; ++s)
            if (ladder_less(p.segs[s], p.segs[cur]))
                walk(start, s, k + 1);
    };
    for (int i = 0; i < n; ++i)
        walk(i, i, 0);
    return out;
}

void validate(const PermissiblePair& p)
{
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidCertificate, msg); };
    const int n = p.body_size;
    const int len = p.ladder_size();
    const int total = n + len;
    if (len != p.ladder.size() || n != p.body.size())
        fail("index sets do not match the pair");
    if (static_cast<int>(p.depth.size()) != total || static_cast<int>(p.sigma.size()) != total ||
        static_cast<int>(p.depth_prime.size()) != n || static_cast<int>(p.club.size()) != total)
        fail("table sizes");
    if (!is_permissible(p.ladder, p.body))
        fail("pair is not permissible");
    for (int t = 1; t <= len; ++t)
        if (p.segs[p.j(t)] != p.ladder.segments()[t - 1] || p.depth[p.j(t)] != t)
            fail("ladder indices");
    for (int i = 0; i < n; ++i) {
        int d = p.depth_prime[i];
        for (int s = 0; s < n; ++s)
            if (ladder_less(p.segs[s], p.segs[i]))
                d = std::min(d, p.depth[s] - 1);
        if (d != p.depth[i])
            fail("depth recursion fails at " + p.segs[i].to_string());
    }
    for (int t = 1; t <= len; ++t) {
        std::vector<int> cycle;
        for (int i = n - 1; i >= 0; --i)
            if (p.depth[i] == t)
                cycle.push_back(i);
        cycle.push_back(p.j(t));
        for (size_t k = 0; k < cycle.size(); ++k)
            if (p.sigma[cycle[k]] != cycle[(k + 1) % cycle.size()])
                fail("sigma cycle for depth " + std::to_string(t));
    }
    for (int i = 0; i < total; ++i)
        if (p.club[i].b != p.segs[i].b || p.club[i].e != p.segs[p.sigma[i]].e)
            fail("club segment");
}

Multisegment k_prime(const PermissiblePair& p)
{
    validate(p);
    return Multisegment(p.club);
}

Multisegment k_prime(const LadderMultisegment& l, const Multisegment& m)
{
    return k_prime(build_permissible(l, m));
}

KResult k_forward(const Multisegment& m, bool verify)
{
    if (m.empty())
        throw Error(ErrorKind::ZeroMultisegment, "K of the zero multisegment");
    auto pts = m.segments();
    const int n = static_cast<int>(pts.size());
    std::sort(pts.begin(), pts.end(), [](const Segment& x, const Segment& y) { return x.b > y.b; });

    // shadow line of a point: length of the longest chain above it
    std::vector<int> line(n, 1);
    int lines = 0;
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < i; ++s)
            if (ladder_less(pts[i], pts[s]))
                line[i] = std::max(line[i], line[s] + 1);
        lines = std::max(lines, line[i]);
    }

    std::vector<Segment> ladder;
    Multisegment rest;
    for (int t = 1; t <= lines; ++t) {
        std::vector<Segment> on;
        for (int i = 0; i < n; ++i)
            if (line[i] == t)
                on.push_back(pts[i]);
        std::sort(on.begin(), on.end(), [](const Segment& x, const Segment& y) {
            return x.b > y.b || (x.b == y.b && x.e < y.e);
        });
        ladder.emplace_back(on.front().b, on.back().e);
        for (size_t k = 1; k < on.size(); ++k)
            rest.add(Segment(on[k].b, on[k - 1].e));
    }

    std::optional<LadderMultisegment> l;
    try {
        l.emplace(std::move(ladder));
    } catch (const Error& e) {
        throw Error(ErrorKind::InternalInconsistency, "K(" + m.to_string() + ") head is not a ladder");
    }
    if (verify && k_prime(*l, rest) != m)
        throw Error(ErrorKind::InternalInconsistency, "K' does not invert K on " + m.to_string());
    return {std::move(*l), std::move(rest)};
}

std::vector<LadderMultisegment> rsk_transform(const Multisegment& m)
{
    if (m.empty())
        throw Error(ErrorKind::ZeroMultisegment, "RSK of the zero multisegment");
    std::vector<LadderMultisegment> out;
    Multisegment cur = m;
    for (;;) {
        if (auto last = as_ladder(cur)) {
            out.push_back(std::move(*last));
            return out;
        }
        auto step = k_forward(cur);
        out.push_back(std::move(step.ladder));
        cur = std::move(step.rest);
    }
}

Multisegment from_rsk(const std::vector<LadderMultisegment>& ladders)
{
    if (ladders.empty())
        return {};
    Multisegment cur = ladders.back().to_multisegment();
    for (size_t k = ladders.size() - 1; k-- > 0;)
        cur = k_prime(ladders[k], cur);
    return cur;
}

std::vector<int> TableauPair::conjugate() const
{
    std::vector<int> out;
    for (int row = 0; row < static_cast<int>(shape.size()); ++row)
        for (int col = 0; col < shape[row]; ++col) {
            if (col >= static_cast<int>(out.size()))
                out.push_back(0);
            ++out[col];
        }
    return out;
}

TableauPair tableaux(const Multisegment& m)
{
    TableauPair t;
    for (const auto& l : rsk_transform(m)) {
        t.shape.push_back(l.size());
        t.P.push_back(l.lambda());
        t.Q.push_back(l.mu());
    }
    if (!is_inverted_semistandard(t))
        throw Error(ErrorKind::InternalInconsistency, "tableaux of " + m.to_string() + " are not semistandard");
    return t;
}

bool is_inverted_semistandard(const TableauPair& t)
{
    const size_t rows = t.shape.size();
    if (t.P.size() != rows || t.Q.size() != rows)
        return false;
    for (size_t r = 0; r < rows; ++r) {
        if (t.shape[r] <= 0 || (r > 0 && t.shape[r] > t.shape[r - 1]))
            return false;
        for (const auto* tab : {&t.P, &t.Q}) {
            const auto& row = (*tab)[r];
            if (static_cast<int>(row.size()) != t.shape[r])
                return false;
            for (size_t c = 0; c < row.size(); ++c) {
                if (c > 0 && row[c] >= row[c - 1])
                    return false;
                if (r > 0 && row[c] > (*tab)[r - 1][c])
                    return false;
            }
        }
    }
    return true;
}

} // namespace klrsk
