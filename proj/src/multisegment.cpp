#include "klrsk/multisegment.hpp"

#include "klrsk/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

namespace klrsk {

Segment::Segment(int begin, int end) : b(begin), e(end)
{
    if (begin > end)
        throw Error(ErrorKind::InvalidSegment,
                    "segment [" + std::to_string(begin) + "," + std::to_string(end) + "] has begin > end");
}

std::string Segment::to_string() const
{
    return "[" + std::to_string(b) + "," + std::to_string(e) + "]";
}

// ---------------------------------------------------------------------------
// Multisegment

Multisegment::Multisegment(const std::vector<Segment>& segments)
{
    for (const auto& s : segments)
        add(s);
}

Multisegment::Multisegment(const std::vector<Term>& terms)
{
    for (const auto& [s, c] : terms)
        add(s, c);
}

std::vector<Segment> Multisegment::segments() const
{
    std::vector<Segment> out;
    out.reserve(size_);
    for (const auto& [s, c] : terms_)
        out.insert(out.end(), c, s);
    return out;
}

int Multisegment::multiplicity(const Segment& s) const
{
    for (const auto& [t, c] : terms_)
        if (t == s)
            return c;
    return 0;
}

void Multisegment::add(const Segment& s, int mult)
{
    if (mult <= 0) {
        if (mult < 0)
            throw Error(ErrorKind::WeightMismatch, "negative multiplicity for " + s.to_string());
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const Segment& x) { return right_less(t.first, x); });
    if (it != terms_.end() && it->first == s)
        it->second += mult;
    else
        terms_.insert(it, {s, mult});
    size_ += mult;
}

Multisegment& Multisegment::operator+=(const Multisegment& other)
{
    for (const auto& [s, c] : other.terms_)
        add(s, c);
    return *this;
}

Multisegment Multisegment::operator+(const Multisegment& other) const
{
    Multisegment r = *this;
    r += other;
    return r;
}

RootVector Multisegment::weight() const
{
    RootVector r;
    for (const auto& [s, c] : terms_)
        for (int i = s.b; i <= s.e; ++i)
            r.add(i, c);
    return r;
}

RootVector Multisegment::begins() const
{
    RootVector r;
    for (const auto& [s, c] : terms_)
        r.add(s.b, c);
    return r;
}

RootVector Multisegment::ends() const
{
    RootVector r;
    for (const auto& [s, c] : terms_)
        r.add(s.e, c);
    return r;
}

Multisegment Multisegment::translated(int offset) const
{
    Multisegment r;
    for (const auto& [s, c] : terms_)
        r.add(Segment(s.b + offset, s.e + offset), c);
    return r;
}

bool Multisegment::operator<(const Multisegment& o) const
{
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(), [](const Term& x, const Term& y) {
            if (x.first != y.first)
                return right_less(x.first, y.first);
            return x.second < y.second;
        });
}

std::string Multisegment::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first)
            os << '+';
        first = false;
        if (c != 1)
            os << c << '*';
        os << s.to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Ladders

LadderMultisegment::LadderMultisegment(std::vector<Segment> segments) : segs_(std::move(segments))
{
    if (segs_.empty())
        throw Error(ErrorKind::MalformedLadder, "a ladder has at least one segment");
    std::sort(segs_.begin(), segs_.end(), [](const Segment& x, const Segment& y) { return lex_less(y, x); });
    for (size_t i = 1; i < segs_.size(); ++i)
        if (!ladder_less(segs_[i], segs_[i - 1]))
            throw Error(ErrorKind::MalformedLadder,
                        segs_[i].to_string() + " and " + segs_[i - 1].to_string() + " are not ladder-comparable");
}

LadderMultisegment LadderMultisegment::from_lambda_mu(const std::vector<int>& lambda, const std::vector<int>& mu)
{
    if (lambda.size() != mu.size() || lambda.empty())
        throw Error(ErrorKind::MalformedLadder, "lambda and mu must be nonempty and of equal length");
    std::vector<Segment> segs;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i > 0 && (lambda[i] >= lambda[i - 1] || mu[i] >= mu[i - 1]))
            throw Error(ErrorKind::MalformedLadder, "lambda and mu must be strictly decreasing");
        if (lambda[i] >= mu[i])
            throw Error(ErrorKind::MalformedLadder, "need lambda_i < mu_i for a nonempty segment");
        segs.emplace_back(lambda[i], mu[i] - 1);
    }
    return LadderMultisegment(std::move(segs));
}

std::vector<int> LadderMultisegment::lambda() const
{
    std::vector<int> out;
    for (const auto& s : segs_)
        out.push_back(s.b);
    return out;
}

std::vector<int> LadderMultisegment::mu() const
{
    std::vector<int> out;
    for (const auto& s : segs_)
        out.push_back(s.e + 1);
    return out;
}

Multisegment LeftAlignedBlock::to_multisegment() const
{
    Multisegment m;
    for (int e : ends)
        m.add(Segment(a, e));
    return m;
}

// ---------------------------------------------------------------------------
// Width: minimum chain cover of the strict poset, via bipartite matching.

namespace {

bool augment(int x, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& seen)
{
    for (int y : adj[x]) {
        if (seen[y])
            continue;
        seen[y] = 1;
        if (match_right[y] < 0 || augment(match_right[y], adj, match_right, seen)) {
            match_right[y] = x;
            return true;
        }
    }
    return false;
}

} // namespace

int width(const Multisegment& m)
{
    if (m.empty())
        throw Error(ErrorKind::ZeroMultisegment, "width of the zero multisegment");
    const auto segs = m.segments();
    const int n = static_cast<int>(segs.size());
    std::vector<std::vector<int>> adj(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (ladder_less(segs[x], segs[y]))
                adj[x].push_back(y);
    std::vector<int> match_right(n, -1);
    int matched = 0;
    for (int x = 0; x < n; ++x) {
        std::vector<char> seen(n, 0);
        if (augment(x, adj, match_right, seen))
            ++matched;
    }
    return n - matched;
}

std::vector<LeftAlignedBlock> left_aligned_decomposition(const Multisegment& m)
{
    if (m.empty())
        throw Error(ErrorKind::ZeroMultisegment, "left-aligned decomposition of the zero multisegment");
    std::map<int, std::vector<int>> groups;
    for (const auto& [s, c] : m.terms())
        groups[s.b].insert(groups[s.b].end(), c, s.e);
    std::vector<LeftAlignedBlock> out;
    for (auto& [a, ends] : groups) {
        std::sort(ends.begin(), ends.end(), std::greater<>());
        out.push_back({a, std::move(ends)});
    }
    return out;
}

bool pairwise_unlinked(const Multisegment& m)
{
    const auto& t = m.terms();
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (is_linked(t[i].first, t[j].first))
                return false;
    return true;
}

std::vector<Multisegment> multisegments_of_weight(const RootVector& beta)
{
    std::vector<Multisegment> out;
    std::vector<Segment> chosen;
    std::function<void(RootVector&)> rec = [&](RootVector& rest) {
        if (rest.empty()) {
            out.emplace_back(chosen);
            return;
        }
        // the smallest remaining index must begin some segment
        const int b = rest.entries().begin()->first;
        int e_cap = b;
        while (rest[e_cap + 1] > 0)
            ++e_cap;
        if (!chosen.empty() && chosen.back().b == b)
            e_cap = std::min(e_cap, chosen.back().e);
        for (int e = b; e <= e_cap; ++e) {
            Segment s(b, e);
            RootVector next = rest - s.weight();
            chosen.push_back(s);
            rec(next);
            chosen.pop_back();
        }
    };
    RootVector start = beta;
    rec(start);
    std::sort(out.begin(), out.end());
    return out;
}

Multisegment spherical_multisegment(const RootVector& beta)
{
    if (beta.empty())
        throw Error(ErrorKind::ZeroWeight, "spherical multisegment of zero weight");
    Multisegment m;
    RootVector rest = beta;
    while (!rest.empty()) {
        // peel maximal runs of consecutive indices in the current support
        std::vector<Segment> run_segments;
        auto it = rest.entries().begin();
        int run_b = it->first, run_e = it->first;
        for (++it; it != rest.entries().end(); ++it) {
            if (it->first == run_e + 1) {
                run_e = it->first;
            } else {
                run_segments.emplace_back(run_b, run_e);
                run_b = run_e = it->first;
            }
        }
        run_segments.emplace_back(run_b, run_e);
        for (const auto& s : run_segments) {
            rest = rest - s.weight();
            m.add(s);
        }
    }
    if (pairwise_unlinked(m))
        return m;
    if (beta.height() < 8) {
        for (const auto& cand : multisegments_of_weight(beta))
            if (pairwise_unlinked(cand))
                return cand;
    }
    throw Error(ErrorKind::InternalInconsistency, "no unlinked multisegment found for " + beta.to_string());
}

std::optional<LadderMultisegment> as_ladder(const Multisegment& m)
{
    if (m.empty())
        return std::nullopt;
    for (const auto& [s, c] : m.terms())
        if (c > 1)
            return std::nullopt;
    auto segs = m.segments();
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return lex_less(y, x); });
    for (size_t i = 1; i < segs.size(); ++i)
        if (!ladder_less(segs[i], segs[i - 1]))
            return std::nullopt;
    return LadderMultisegment(std::move(segs));
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class Parser {
public:
    explicit Parser(std::string_view text)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                s_.push_back(ch);
    }

    Multisegment parse()
    {
        if (s_ == "0")
            return {};
        if (s_.empty())
            fail("empty input");
        Multisegment m;
        parse_term(m);
        while (pos_ < s_.size()) {
            expect('+');
            parse_term(m);
        }
        return m;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void expect(char c)
    {
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int()
    {
        int value = 0;
        const char* begin = s_.data() + pos_;
        const char* end = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc())
            fail("expected integer");
        pos_ += static_cast<size_t>(ptr - begin);
        return value;
    }

    void parse_term(Multisegment& m)
    {
        int mult = 1;
        if (pos_ < s_.size() && s_[pos_] != '[') {
            mult = parse_int();
            expect('*');
            if (mult < 1)
                fail("multiplicity must be positive");
        }
        expect('[');
        int a = parse_int();
        expect(',');
        int b = parse_int();
        expect(']');
        if (a > b)
            fail("segment [" + std::to_string(a) + "," + std::to_string(b) + "] needs a <= b");
        m.add(Segment(a, b), mult);
    }

    std::string s_;
    size_t pos_ = 0;
};

} // namespace

Multisegment parse_multisegment(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace klrsk
