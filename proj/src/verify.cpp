#include "klrsk/verify.hpp"

#include "klrsk/characters.hpp"
#include "klrsk/error.hpp"
#include "klrsk/invariants.hpp"
#include "klrsk/mackey.hpp"
#include "klrsk/rsk.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <sstream>

namespace klrsk {

// ---------------------------------------------------------------------------
// Grid specification and enumeration

namespace {

int parse_int(std::string_view s, std::string_view what)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorKind::Parse, "bad integer '" + std::string(s) + "' for " + std::string(what));
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

} // namespace

GridSpec GridSpec::parse(std::string_view text)
{
    GridSpec g;
    while (!text.empty()) {
        const size_t comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty())
            continue;
        const size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::Parse, "grid item '" + std::string(item) + "' lacks '='");
        const std::string_view key = trim(item.substr(0, eq));
        const std::string_view val = trim(item.substr(eq + 1));
        if (key == "window") {
            const size_t dots = val.find("..");
            if (dots == std::string_view::npos)
                throw Error(ErrorKind::Parse, "window must look like lo..hi");
            g.lo = parse_int(val.substr(0, dots), "window");
            g.hi = parse_int(val.substr(dots + 2), "window");
        } else if (key == "maxsegs") {
            g.maxsegs = parse_int(val, key);
        } else if (key == "maxmult") {
            g.maxmult = parse_int(val, key);
        } else {
            throw Error(ErrorKind::Parse, "unknown grid key '" + std::string(key) + "'");
        }
    }
    if (g.lo > g.hi || g.maxsegs < 1 || g.maxmult < 1)
        throw Error(ErrorKind::Parse, "empty grid " + g.to_string());
    return g;
}

std::string GridSpec::to_string() const
{
    return "window=" + std::to_string(lo) + ".." + std::to_string(hi) + ",maxsegs=" + std::to_string(maxsegs) +
           ",maxmult=" + std::to_string(maxmult);
}

namespace {

std::vector<Segment> window_segments(const GridSpec& g)
{
    std::vector<Segment> out;
    for (int b = g.lo; b <= g.hi; ++b)
        for (int e = b; e <= g.hi; ++e)
            out.emplace_back(b, e);
    return out;
}

} // namespace

std::vector<Multisegment> grid_multisegments(const GridSpec& g)
{
    const auto segs = window_segments(g);
    std::vector<Multisegment> out;
    std::vector<int> mult(segs.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t k, int left) {
        if (k == segs.size()) {
            Multisegment m;
            for (size_t i = 0; i < segs.size(); ++i)
                m.add(segs[i], mult[i]);
            if (!m.empty())
                out.push_back(std::move(m));
            return;
        }
        for (int c = 0; c <= g.maxmult && c <= left; ++c) {
            mult[k] = c;
            rec(k + 1, left - c);
        }
        mult[k] = 0;
    };
    rec(0, g.maxsegs);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LadderMultisegment> window_ladders(const GridSpec& g)
{
    const auto segs = window_segments(g);
    std::vector<LadderMultisegment> out;
    std::vector<Segment> chain;
    std::function<void()> rec = [&]() {
        if (!chain.empty())
            out.emplace_back(chain);
        for (const auto& s : segs)
            if (chain.empty() || ladder_less(chain.back(), s)) {
                chain.push_back(s);
                rec();
                chain.pop_back();
            }
    };
    rec();
    return out;
}

std::vector<std::pair<LadderMultisegment, Multisegment>> grid_pairs(const GridSpec& g)
{
    auto bodies = grid_multisegments(g);
    bodies.insert(bodies.begin(), Multisegment{});
    std::vector<std::pair<LadderMultisegment, Multisegment>> out;
    for (const auto& l : window_ladders(g))
        for (const auto& m : bodies)
            if (is_permissible(l, m))
                out.emplace_back(l, m);
    return out;
}

// ---------------------------------------------------------------------------
// Sweep driver

namespace {

using Probe = std::function<std::string(long)>;

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs probe(0..n-1); a probe reports failure by returning a nonempty message
// or by throwing.
CheckResult sweep(const std::string& name, long n, Exec exec, const Probe& probe)
{
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.cases = n;
    long failures = 0;
    long first = -1;
    std::string first_msg;
    const bool parallel = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : failures) if (parallel)
    for (long k = 0; k < n; ++k) {
        std::string msg;
        try {
            msg = probe(k);
        } catch (const std::exception& e) {
            msg = std::string("threw ") + e.what();
        }
        if (!msg.empty()) {
            ++failures;
#pragma omp critical(klrsk_first_failure)
            if (first < 0 || k < first) {
                first = k;
                first_msg = msg;
            }
        }
    }
    r.failures = failures;
    r.pass = failures == 0;
    r.counterexample = first_msg;
    r.seconds = seconds_since(t0);
    return r;
}

void merge(CheckResult& into, const CheckResult& part)
{
    into.cases += part.cases;
    into.failures += part.failures;
    into.pass = into.pass && part.pass;
    if (into.counterexample.empty() && !part.counterexample.empty())
        into.counterexample = part.name + ": " + part.counterexample;
    into.seconds += part.seconds;
}

CheckResult combined(const std::string& name, std::initializer_list<CheckResult> parts)
{
    CheckResult r;
    r.name = name;
    for (const auto& p : parts)
        merge(r, p);
    return r;
}

std::string pair_string(const LadderMultisegment& l, const Multisegment& m)
{
    return "(" + l.to_string() + ", " + m.to_string() + ")";
}

std::string ladders_string(const std::vector<LadderMultisegment>& ls)
{
    std::string s;
    for (size_t i = 0; i < ls.size(); ++i)
        s += (i ? " ; (" : "(") + ls[i].to_string() + ")";
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// 1-6: combinatorics of the RSK transform

CheckResult check_roundtrips(const VerifyOptions& o)
{
    const auto ms = grid_multisegments(o.grid);
    const auto pairs = grid_pairs(o.grid);
    auto a = sweep("K' after K", static_cast<long>(ms.size()), o.exec, [&](long k) -> std::string {
        const auto r = k_forward(ms[k], false);
        const auto back = k_prime(r.ladder, r.rest);
        return back == ms[k] ? "" : ms[k].to_string() + " -> " + pair_string(r.ladder, r.rest) + " -> " +
                                        back.to_string();
    });
    auto b = sweep("K after K'", static_cast<long>(pairs.size()), o.exec, [&](long k) -> std::string {
        const auto& [l, m] = pairs[k];
        const auto n = k_prime(l, m);
        const auto r = k_forward(n, false);
        return r.ladder == l && r.rest == m ? "" : pair_string(l, m) + " -> " + n.to_string() + " -> " +
                                                       pair_string(r.ladder, r.rest);
    });
    return combined("bijection roundtrips", {a, b});
}

CheckResult check_width_law(const VerifyOptions& o)
{
    const auto ms = grid_multisegments(o.grid);
    auto r = sweep("width law", static_cast<long>(ms.size()), o.exec, [&](long k) -> std::string {
        const auto& m = ms[k];
        const int w = width(m);
        const auto rsk = rsk_transform(m);
        if (static_cast<int>(rsk.size()) != w)
            return m.to_string() + ": width " + std::to_string(w) + " but " + std::to_string(rsk.size()) + " rows";
        if (w >= 2) {
            const int w1 = width(k_forward(m, false).rest);
            if (w1 != w - 1)
                return m.to_string() + ": residual width " + std::to_string(w1);
        }
        return "";
    });
    r.name = "width law";
    return r;
}

CheckResult check_endpoint_preservation(const VerifyOptions& o)
{
    const auto ms = grid_multisegments(o.grid);
    auto r = sweep("endpoint preservation", static_cast<long>(ms.size()), o.exec, [&](long k) -> std::string {
        const auto& m = ms[k];
        RootVector b, e;
        for (const auto& l : rsk_transform(m)) {
            b += l.to_multisegment().begins();
            e += l.to_multisegment().ends();
        }
        return b == m.begins() && e == m.ends() ? "" : m.to_string();
    });
    return r;
}

CheckResult check_d_theorem(const VerifyOptions& o)
{
    const auto pairs = grid_pairs(o.grid);
    return sweep("D(l,m) = |m|", static_cast<long>(pairs.size()), o.exec, [&](long k) -> std::string {
        const auto& [l, m] = pairs[k];
        const auto p = build_permissible(l, m);
        const int d = d_count(p);
        if (d != m.size())
            return pair_string(l, m) + ": D=" + std::to_string(d);
        if (kappa(p) != -lambda_tilde(l, m))
            return pair_string(l, m) + ": kappa=" + std::to_string(kappa(p));
        return "";
    });
}

CheckResult check_degree_coherence(const VerifyOptions& o)
{
    auto ms = grid_multisegments(o.grid);
    const Multisegment desk = parse_multisegment("2*[1,1]");
    auto desk_result = sweep("desk case", 1, Exec::Serial, [&](long) -> std::string {
        const int d = d_of_m(desk);
        return d == -1 ? "" : "d(2*[1,1]) = " + std::to_string(d);
    });
    auto grid = sweep("grid", static_cast<long>(ms.size()), o.exec, [&](long k) -> std::string {
        const auto& m = ms[k];
        const int a = d_of_m(m);
        const int b = d_by_lambda_tilde(m);
        const int c = d_of_m_tableau(m);
        const int d = d_by_residuals(m);
        if (a == b && b == c && c == d)
            return "";
        return m.to_string() + ": " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + " " +
               std::to_string(d);
    });
    return combined("degree coherence", {desk_result, grid});
}

CheckResult check_normality(const VerifyOptions& o)
{
    const auto ms = grid_multisegments(o.grid);
    return sweep("normal RSK sequences", static_cast<long>(ms.size()), o.exec, [&](long k) -> std::string {
        const auto rsk = rsk_transform(ms[k]);
        return is_normal_sequence(rsk) ? "" : ms[k].to_string() + " -> " + ladders_string(rsk);
    });
}

// ---------------------------------------------------------------------------
// 7: character identities

namespace {

// Every pair (beta1, beta2) with beta1 + beta2 = beta.
std::vector<std::pair<RootVector, RootVector>> two_block_splits(const RootVector& beta)
{
    std::vector<std::pair<RootVector, RootVector>> out;
    std::vector<std::pair<int, int>> entries(beta.entries().begin(), beta.entries().end());
    RootVector first;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == entries.size()) {
            out.emplace_back(first, beta - first);
            return;
        }
        for (int c = 0; c <= entries[k].second; ++c) {
            first.add(entries[k].first, c);
            rec(k + 1);
            first.add(entries[k].first, -c);
        }
    };
    rec(0);
    return out;
}

// Ordered tuples of nonzero root vectors summing to beta, with at most `parts` entries.
std::vector<std::vector<RootVector>> compositions(const RootVector& beta, int parts)
{
    std::vector<std::vector<RootVector>> out;
    std::vector<RootVector> cur;
    std::function<void(const RootVector&)> rec = [&](const RootVector& rest) {
        if (rest.empty()) {
            if (!cur.empty())
                out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == parts)
            return;
        for (const auto& [head, tail] : two_block_splits(rest)) {
            if (head.empty())
                continue;
            cur.push_back(head);
            rec(tail);
            cur.pop_back();
        }
    };
    rec(beta);
    return out;
}

RootVector ladder_weight(const std::vector<int>& lambda, const std::vector<int>& mu)
{
    RootVector r;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int x = lambda[i]; x < mu[i]; ++x)
            r.add(x);
    return r;
}

// Restriction of a ladder character to (beta1, beta2) from the direct-sum formula.
Restriction ladder_restriction_formula(const LadderMultisegment& l, const RootVector& beta1)
{
    const auto lambda = l.lambda();
    const auto mu = l.mu();
    const size_t r = lambda.size();
    Restriction out;
    std::vector<int> nu(r);
    std::function<void(size_t)> rec = [&](size_t j) {
        if (j == r) {
            for (size_t i = 1; i < r; ++i)
                if (nu[i] >= nu[i - 1])
                    return;
            if (ladder_weight(nu, mu) != beta1)
                return;
            const auto top = ladder_char(nu, mu);
            const auto bottom = ladder_char(lambda, nu);
            for (const auto& [u, cu] : top.terms())
                for (const auto& [v, cv] : bottom.terms())
                    out[{u, v}] += cu * cv;
            return;
        }
        for (int x = lambda[j]; x <= mu[j]; ++x) {
            nu[j] = x;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Word> words_up_to(int max_len, int lo, int hi)
{
    std::vector<Word> out;
    std::vector<Word> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int x = lo; x <= hi; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Both sides of the Mackey formula for Res_gamma(u o v) with single words u, v.
std::string mackey_mismatch(const Word& u, const Word& v, const std::vector<RootVector>& gamma)
{
    const auto lhs = restrict_char(shuffle(GradedCharacter::of_word(u), GradedCharacter::of_word(v)), gamma);
    const std::vector<RootVector> beta{RootVector::of_word(u), RootVector::of_word(v)};
    Restriction rhs;
    for_each_mackey(beta, gamma, [&](const MackeyMatrix& delta) {
        const auto top = restrict_char(GradedCharacter::of_word(u), delta.row(0));
        const auto bottom = restrict_char(GradedCharacter::of_word(v), delta.row(1));
        const int deg = static_cast<int>(degree(delta));
        for (const auto& [us, cu] : top)
            for (const auto& [vs, cv] : bottom) {
                // column j induces the pieces us[j] o vs[j]
                std::vector<Restriction::value_type> acc{{std::vector<Word>{}, (cu * cv).shifted(deg)}};
                for (size_t j = 0; j < gamma.size(); ++j) {
                    const auto col = shuffle(GradedCharacter::of_word(us[j]), GradedCharacter::of_word(vs[j]));
                    std::vector<Restriction::value_type> next;
                    for (const auto& [ws, c] : acc)
                        for (const auto& [w, cw] : col.terms()) {
                            auto key = ws;
                            key.push_back(w);
                            next.emplace_back(std::move(key), c * cw);
                        }
                    acc = std::move(next);
                }
                for (auto& [key, c] : acc)
                    rhs[key] += c;
            }
    });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs == rhs)
        return "";
    std::string g;
    for (const auto& x : gamma)
        g += "(" + x.to_string() + ")";
    return word_to_string(u) + " o " + word_to_string(v) + " restricted to " + g;
}

} // namespace

CheckResult check_character_identities(const VerifyOptions& o)
{
    std::vector<Multisegment> small;
    for (const auto& m : grid_multisegments(o.grid))
        if (m.weight().height() <= o.char_cap)
            small.push_back(m);
    auto kr = sweep("KR = Sigma", static_cast<long>(small.size()), o.exec, [&](long k) -> std::string {
        return kr_char(small[k]) == sigma_char(small[k]) ? "" : small[k].to_string();
    });

    std::vector<std::pair<Segment, Segment>> unlinked;
    const auto segs = window_segments(o.grid);
    for (const auto& s1 : segs)
        for (const auto& s2 : segs)
            if (right_less(s1, s2) && !is_linked(s1, s2))
                unlinked.emplace_back(s1, s2);
    auto unlink = sweep("unlinked commutation", static_cast<long>(unlinked.size()), o.exec, [&](long k) -> std::string {
        const auto& [s1, s2] = unlinked[k];
        const auto c1 = segment_char(s1), c2 = segment_char(s2);
        const int shift = (s1.b == s2.b || s1.e == s2.e) ? -1 : 0;
        return shuffle(c2, c1) == shuffle(c1, c2).shifted(shift) ? "" : s1.to_string() + " " + s2.to_string();
    });

    const auto ladders = window_ladders(o.grid);
    auto ladder = sweep("ladder characters", static_cast<long>(ladders.size()), o.exec, [&](long k) -> std::string {
        const auto& l = ladders[k];
        const auto ch = ladder_char(l);
        if (!ch.homogeneous_unit() || !ch.is_self_dual() || ch.empty())
            return l.to_string() + " not homogeneous";
        for (const auto& [b1, b2] : two_block_splits(l.weight()))
            if (restrict_char(ch, {b1, b2}) != ladder_restriction_formula(l, b1))
                return l.to_string() + " restricted to (" + b1.to_string() + ", " + b2.to_string() + ")";
        return "";
    });

    struct MackeyCase {
        Word u, v;
        std::vector<RootVector> gamma;
    };
    std::vector<MackeyCase> cases;
    const auto words = words_up_to(o.char_cap - 1, 1, 3);
    for (const auto& u : words)
        for (const auto& v : words) {
            if (static_cast<int>(u.size() + v.size()) > o.char_cap)
                continue;
            for (auto& gamma : compositions(RootVector::of_word(u) + RootVector::of_word(v), 3))
                cases.push_back({u, v, std::move(gamma)});
        }
    auto mackey = sweep("Mackey identity", static_cast<long>(cases.size()), o.exec, [&](long k) {
        return mackey_mismatch(cases[k].u, cases[k].v, cases[k].gamma);
    });
    return combined("character identities", {kr, unlink, ladder, mackey});
}

// ---------------------------------------------------------------------------
// 8-10

CheckResult check_kappa_monomial(const VerifyOptions& o)
{
    std::vector<std::pair<LadderMultisegment, Multisegment>> pairs;
    for (auto& pr : grid_pairs(o.grid))
        if (!pr.second.empty() && as_ladder(pr.second))
            pairs.push_back(std::move(pr));
    return sweep("kappa monomial", static_cast<long>(pairs.size()), o.exec, [&](long k) -> std::string {
        const auto& [l, m] = pairs[k];
        const auto n = k_prime(l, m);
        Word w;
        LaurentPoly indicator = 1;
        for (const auto& block : left_aligned_decomposition(n)) {
            const Word part = spherical_word(block.to_multisegment().weight());
            indicator = indicator * nabla_char(block).coefficient(part);
            w.insert(w.end(), part.begin(), part.end());
        }
        const LaurentPoly got = coefficient_in_product(w, {ladder_char(l), ladder_char(*as_ladder(m))});
        const int kap = c_count(l.to_multisegment(), m) - m.size();
        const LaurentPoly want = indicator.shifted(kap);
        return got == want ? "" : pair_string(l, m) + ": coefficient " + got.to_string() + ", expected " +
                                      want.to_string();
    });
}

CheckResult check_depth_lemmas(const VerifyOptions& o)
{
    const auto pairs = grid_pairs(o.grid);
    return sweep("depth lemmas", static_cast<long>(pairs.size()), o.exec, [&](long k) -> std::string {
        const auto& [l, m] = pairs[k];
        const auto p = build_permissible(l, m);
        validate(p);
        const std::string where = pair_string(l, m);
        const int n = p.body_size;
        const int total = static_cast<int>(p.segs.size());
        const auto& s = p.segs;
        if (depth_by_chains(p) != std::vector<int>(p.depth.begin(), p.depth.begin() + n))
            return where + ": depth recursion differs from chain minimum";
        for (int i = 0; i < n; ++i)
            for (int lvl = p.depth[i] + 1; lvl <= p.depth_prime[i]; ++lvl) {
                bool found = false;
                for (int x = 0; x < n && !found; ++x)
                    found = ladder_less(s[x], s[i]) && p.depth[x] == lvl;
                if (!found)
                    return where + ": no witness of depth " + std::to_string(lvl) + " below " + s[i].to_string();
            }
        for (int i = 0; i < total; ++i)
            for (int ip = 0; ip < n; ++ip) {
                if (ip == i)
                    continue;
                const Segment& vee = s[p.vee[i]];
                if (i < n && s[i].e == s[ip].e && s[i].b < s[ip].b && s[ip].b <= vee.b &&
                    (p.depth[ip] != p.depth[i] || p.club[ip] != s[ip]))
                    return where + ": first import implication at " + s[i].to_string() + ", " + s[ip].to_string();
                if (i >= n && s[i].e == s[ip].e && s[ip].b <= vee.b && p.depth[ip] != p.depth[i])
                    return where + ": second import implication at " + s[i].to_string() + ", " + s[ip].to_string();
                const Segment& sharp = s[p.sigma[i]];
                if (s[i].b == s[ip].b && s[i].e < s[ip].e && s[ip].e <= sharp.e &&
                    (p.depth[ip] != p.depth[i] || sharp != s[ip]))
                    return where + ": third import implication at " + s[i].to_string() + ", " + s[ip].to_string();
            }
        return "";
    });
}

CheckResult check_dominant_multiplicity(const VerifyOptions& o)
{
    std::vector<Multisegment> ms;
    for (const auto& m : grid_multisegments(o.grid))
        if (o.dominant_cap <= 0 || m.weight().height() <= o.dominant_cap)
            ms.push_back(m);
    std::vector<char> unique(ms.size(), 0), literal(ms.size(), 0);
    auto r = sweep("dominant word multiplicity", static_cast<long>(ms.size()), o.exec, [&](long k) -> std::string {
        const auto& m = ms[k];
        const Word w = dominant_word(m);
        auto seg_words = [](const Multisegment& x) {
            std::vector<Word> out;
            for (const auto& s : x.segments())
                out.push_back(segment_char(s).terms().begin()->first);
            return out;
        };
        for (const auto& other : multisegments_of_weight(m.weight()))
            if (other != m && !coefficient_in_word_product(w, seg_words(other)).is_zero())
                return "";  // outside the subfamily
        unique[k] = 1;
        int kr_shift = 0;
        for (const auto& [s, c] : m.terms())
            kr_shift += c * (c - 1) / 2;
        const LaurentPoly in_kr = coefficient_in_word_product(w, seg_words(m)).shifted(kr_shift);
        const auto desc = gamma_descriptor(m);
        std::vector<GradedCharacter> factors;
        for (const auto& l : desc.factors)
            factors.push_back(ladder_char(l));
        const LaurentPoly in_gamma = coefficient_in_product(w, factors).shifted(-desc.shift);
        literal[k] = in_gamma == LaurentPoly(1);
        if (in_gamma != in_kr)
            return m.to_string() + " at " + word_to_string(w) + ": Gamma gives " + in_gamma.to_string() +
                   ", the simple module gives " + in_kr.to_string();
        return "";
    });
    const long subfamily = std::count(unique.begin(), unique.end(), 1);
    const long unit = std::count(literal.begin(), literal.end(), 1);
    const std::string cap = o.dominant_cap > 0 ? "height<=" + std::to_string(o.dominant_cap) + ": " : "";
    r.note = cap + std::to_string(subfamily) + " of " +
             std::to_string(ms.size()) + " have a word unique to them; coefficient exactly 1 in " +
             std::to_string(unit) + " of those";
    return r;
}

std::vector<CheckResult> run_all(const VerifyOptions& o)
{
    return {check_roundtrips(o),        check_width_law(o),       check_endpoint_preservation(o),
            check_d_theorem(o),         check_degree_coherence(o), check_normality(o),
            check_character_identities(o), check_kappa_monomial(o), check_depth_lemmas(o),
            check_dominant_multiplicity(o)};
}

std::string format_result(const CheckResult& r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS " : "FAIL ") << r.name << " (cases=" << r.cases << ", failures=" << r.failures << ", ";
    os.setf(std::ios::fixed);
    os.precision(2);
    os << r.seconds << "s)";
    if (!r.note.empty())
        os << " [" << r.note << "]";
    if (!r.counterexample.empty())
        os << "\n    first counterexample: " << r.counterexample;
    return os.str();
}

} // namespace klrsk
