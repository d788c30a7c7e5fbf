#include "klrsk/invariants.hpp"

#include "klrsk/error.hpp"

namespace klrsk {

int c_count(const Multisegment& m1, const Multisegment& m2)
{
    int total = 0;
    const RootVector ends = m2.ends();
    for (const auto& [s, c] : m1.terms())
        total += c * ends[s.b - 1];
    return total;
}

NuSets nu_sets(const PermissiblePair& p)
{
    NuSets out;
    const int n = p.body_size;
    const auto& seg = p.segs;
    const auto& club = p.club;
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) {
            if (seg[i1].b <= seg[i2].b && seg[i2].e < club[i2].e && club[i2].e == seg[i1].e)
                out.nu1.emplace_back(i1, i2);
            if (seg[i1].b < seg[i2].b && seg[i1].e == seg[i2].e && seg[i2].e < club[i2].e)
                out.nu2.emplace_back(i1, i2);
        }
        for (int t = 1; t <= p.ladder_size(); ++t) {
            const int j = p.j(t);
            if (seg[i1].b <= seg[j].b && club[j].e == seg[i1].e)
                out.nu3.emplace_back(i1, j);
        }
    }
    return out;
}

int d_count(const PermissiblePair& p)
{
    const NuSets nu = nu_sets(p);
    return static_cast<int>(nu.nu1.size()) - static_cast<int>(nu.nu2.size()) + static_cast<int>(nu.nu3.size());
}

int kappa(const PermissiblePair& p)
{
    return c_count(p.ladder.to_multisegment(), p.body) - d_count(p);
}

int lambda_tilde(const LadderMultisegment& l, const Multisegment& m)
{
    return m.size() - c_count(l.to_multisegment(), m);
}

int64_t lambda_invariant(const LadderMultisegment& l, const Multisegment& m)
{
    return 2 * int64_t(lambda_tilde(l, m)) - form(l.weight(), m.weight());
}

int d_of_m(const Multisegment& m)
{
    const auto rsk = rsk_transform(m);
    int d = 0;
    for (size_t i = 0; i < rsk.size(); ++i) {
        d -= static_cast<int>(i) * rsk[i].size();
        for (size_t j = i + 1; j < rsk.size(); ++j)
            d += c_count(rsk[i].to_multisegment(), rsk[j].to_multisegment());
    }
    return d;
}

int d_by_lambda_tilde(const Multisegment& m)
{
    return head_shift(rsk_transform(m));
}

int d_by_residuals(const Multisegment& m)
{
    if (m.empty())
        throw Error(ErrorKind::ZeroMultisegment, "d of the zero multisegment");
    int d = 0;
    Multisegment cur = m;
    while (!as_ladder(cur)) {
        auto step = k_forward(cur);
        d -= lambda_tilde(step.ladder, step.rest);
        cur = std::move(step.rest);
    }
    return d;
}

int d_of_m_tableau(const TableauPair& t)
{
    int d = 0;
    for (int len : t.conjugate())
        d -= len * (len - 1) / 2;
    for (size_t i = 0; i < t.P.size(); ++i)
        for (size_t k = i + 1; k < t.Q.size(); ++k)
            for (int c : t.P[i])
                for (int dd : t.Q[k])
                    if (c == dd)
                        ++d;
    return d;
}

int d_of_m_tableau(const Multisegment& m)
{
    return d_of_m_tableau(tableaux(m));
}

bool is_normal_sequence(const std::vector<LadderMultisegment>& ladders)
{
    for (size_t head = 0; head + 1 < ladders.size(); ++head) {
        const std::vector<LadderMultisegment> tail(ladders.begin() + head + 1, ladders.end());
        Multisegment h;
        try {
            h = from_rsk(tail);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotPermissible)
                return false;
            throw;
        }
        if (!is_permissible(ladders[head], h))
            return false;
        int sum = 0;
        for (const auto& l : tail) {
            if (!is_permissible(ladders[head], l.to_multisegment()))
                return false;
            sum += lambda_tilde(ladders[head], l.to_multisegment());
        }
        if (lambda_tilde(ladders[head], h) != sum)
            return false;
    }
    return true;
}

int head_shift(const std::vector<LadderMultisegment>& ladders)
{
    int h = 0;
    for (size_t i = 0; i < ladders.size(); ++i)
        for (size_t j = i + 1; j < ladders.size(); ++j)
            h -= lambda_tilde(ladders[i], ladders[j].to_multisegment());
    return h;
}

GammaDescriptor gamma_descriptor(const Multisegment& m)
{
    return {rsk_transform(m), d_of_m(m)};
}

} // namespace klrsk
