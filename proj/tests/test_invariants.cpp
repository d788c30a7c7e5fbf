#include "klrsk/invariants.hpp"
#include "klrsk/verify.hpp"

#include <doctest.h>

using namespace klrsk;

namespace {

Multisegment M(const char* s)
{
    return parse_multisegment(s);
}

LadderMultisegment L(const char* s)
{
    return *as_ladder(parse_multisegment(s));
}

// Direct pair count over expanded segments.
int c_by_pairs(const Multisegment& a, const Multisegment& b)
{
    int n = 0;
    for (const auto& x : a.segments())
        for (const auto& y : b.segments())
            n += x.b == y.e + 1;
    return n;
}

// Re-scan of every index pair, reading the club ends straight off sigma.
int d_by_rescan(const PermissiblePair& p)
{
    const auto& s = p.segs;
    auto club_e = [&](int i) { return s[p.sigma[i]].e; };
    int d = 0;
    for (int x = 0; x < int(s.size()); ++x)
        for (int y = 0; y < int(s.size()); ++y) {
            if (!p.in_body(x))
                continue;
            if (p.in_body(y)) {
                d += s[x].b <= s[y].b && s[y].e < club_e(y) && club_e(y) == s[x].e;
                d -= s[x].b < s[y].b && s[x].e == s[y].e && s[y].e < club_e(y);
            } else {
                d += s[x].b <= s[y].b && club_e(y) == s[x].e;
            }
        }
    return d;
}

} // namespace

TEST_CASE("C examples")
{
    CHECK(c_count(M("[2,3]"), M("[1,1]")) == 1);
    CHECK(c_count(M("[1,1]"), M("[1,1]")) == 0);
    CHECK(c_count(M("2*[2,2]"), M("[1,1]+[1,3]")) == 2);
    for (const auto& a : grid_multisegments(GridSpec{0, 3, 2, 2}))
        for (const auto& b : grid_multisegments(GridSpec{0, 3, 2, 1}))
            REQUIRE(c_count(a, b) == c_by_pairs(a, b));
}

TEST_CASE("C is additive")
{
    const auto ms = grid_multisegments(GridSpec{0, 3, 2, 1});
    for (const auto& a : ms)
        for (const auto& b : ms)
            for (const auto& c : {M("[1,1]"), M("[0,2]+[3,3]")}) {
                REQUIRE(c_count(a + b, c) == c_count(a, c) + c_count(b, c));
                REQUIRE(c_count(c, a + b) == c_count(c, a) + c_count(c, b));
            }
}

TEST_CASE("nu-sets, D and kappa examples")
{
    auto p = build_permissible(L("[2,3]"), M("[1,2]"));
    auto nu = nu_sets(p);
    CHECK(nu.nu1.empty());
    CHECK(nu.nu2.empty());
    CHECK(nu.nu3 == std::vector<std::pair<int, int>>{{0, p.j(1)}});
    CHECK(d_count(p) == 1);
    CHECK(kappa(p) == -1);

    p = build_permissible(L("[2,3]+[1,2]"), Multisegment{});
    CHECK(d_count(p) == 0);
    CHECK(kappa(p) == 0);

    p = build_permissible(L("[1,1]"), M("[1,1]"));
    CHECK(d_count(p) == 1);
    p = build_permissible(L("[1,2]"), M("[1,1]"));
    CHECK(kappa(p) == -1);
}

TEST_CASE("D agrees with a re-scan and equals |m|")
{
    for (const auto& [l, m] : grid_pairs(GridSpec{})) {
        const auto p = build_permissible(l, m);
        REQUIRE(d_count(p) == d_by_rescan(p));
        REQUIRE(d_count(p) == m.size());
        REQUIRE(kappa(p) == -lambda_tilde(l, m));
    }
}

TEST_CASE("lambda tilde and Lambda examples")
{
    CHECK(lambda_tilde(L("[1,1]"), M("[1,1]")) == 1);
    CHECK(lambda_tilde(L("[1,2]"), M("[1,1]")) == 1);
    CHECK(lambda_tilde(L("[1,2]"), Multisegment{}) == 0);
    CHECK(lambda_invariant(L("[1,1]"), M("[1,1]")) == 0);
    // C([1,2],[3,3]) = 0, so lambda_tilde = 1 and the form is -1
    CHECK(lambda_invariant(L("[1,2]"), M("[3,3]")) == 3);
    CHECK(lambda_invariant(L("[1,2]"), Multisegment{}) == 0);
}

TEST_CASE("lambda tilde is translation invariant")
{
    for (const auto& [l, m] : grid_pairs(GridSpec{0, 3, 3, 2})) {
        const auto lt = LadderMultisegment(l.to_multisegment().translated(7).segments());
        REQUIRE(lambda_tilde(lt, m.translated(7)) == lambda_tilde(l, m));
        REQUIRE(lambda_invariant(lt, m.translated(7)) == lambda_invariant(l, m));
    }
}

TEST_CASE("d(m) examples in every form")
{
    for (const char* s : {"2*[1,1]", "[1,3]+[2,2]"}) {
        const auto m = M(s);
        CHECK(d_of_m(m) == -1);
        CHECK(d_by_lambda_tilde(m) == -1);
        CHECK(d_of_m_tableau(m) == -1);
        CHECK(d_by_residuals(m) == -1);
    }
    CHECK(d_of_m(M("[0,1]+[1,2]")) == 0);
    CHECK(d_of_m_tableau(M("[0,1]+[1,2]")) == 0);
    CHECK(gamma_descriptor(M("2*[1,1]")).shift == -1);
    CHECK(gamma_descriptor(M("[1,3]+[2,2]")).factors == std::vector<LadderMultisegment>{L("[2,3]"), L("[1,2]")});
    CHECK(gamma_descriptor(M("[1,3]")).shift == 0);
}

TEST_CASE("normal sequences and head shift")
{
    CHECK(is_normal_sequence({L("[1,1]")}));
    CHECK(is_normal_sequence({L("[1,1]"), L("[1,1]")}));
    CHECK(head_shift({L("[1,1]"), L("[1,1]")}) == -1);
    CHECK(head_shift({L("[1,1]")}) == 0);
    CHECK(head_shift(rsk_transform(M("[1,3]+[2,2]"))) == -1);
    // ([1,3], [2,2]) is not permissible, so this is not a normal sequence
    CHECK_FALSE(is_normal_sequence({L("[1,3]"), L("[2,2]")}));
}

TEST_CASE("C of the first ladder splits over the tail")
{
    for (const auto& m : grid_multisegments(GridSpec{})) {
        const auto r = rsk_transform(m);
        if (r.size() < 2)
            continue;
        const auto rest = k_forward(m).rest;
        int sum = 0;
        for (size_t j = 1; j < r.size(); ++j)
            sum += c_count(r[0].to_multisegment(), r[j].to_multisegment());
        REQUIRE_MESSAGE(c_count(r[0].to_multisegment(), rest) == sum, m.to_string());
    }
}
