// Command-line front end for the klrsk library.
//
// Exit codes: 0 success, 2 parse error, 3 domain error, 4 verification failure.

#include "klrsk/characters.hpp"
#include "klrsk/error.hpp"
#include "klrsk/invariants.hpp"
#include "klrsk/rsk.hpp"
#include "klrsk/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>

using namespace klrsk;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

std::string read_arg(const std::string& arg)
{
    if (arg != "-")
        return arg;
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
    return text;
}

Multisegment read_multisegment(const std::string& arg)
{
    return parse_multisegment(read_arg(arg));
}

// Splits "(l1) ; (l2)" lines as printed by `rsk`; parentheses are optional.
std::vector<LadderMultisegment> read_ladders(const std::vector<std::string>& args)
{
    std::vector<std::string> pieces;
    for (const auto& a : args) {
        std::string text = read_arg(a);
        const auto nl = text.find('\n');
        if (nl != std::string::npos)
            text.resize(nl);
        size_t start = 0;
        for (;;) {
            const size_t semi = text.find(';', start);
            pieces.push_back(text.substr(start, semi - start));
            if (semi == std::string::npos)
                break;
            start = semi + 1;
        }
    }
    std::vector<LadderMultisegment> out;
    for (auto p : pieces) {
        std::erase_if(p, [](char c) { return c == '(' || c == ')'; });
        auto m = parse_multisegment(p);
        auto l = as_ladder(m);
        if (!l)
            throw Error(ErrorKind::MalformedLadder, m.to_string() + " is not a ladder");
        out.push_back(std::move(*l));
    }
    return out;
}

void check_cap(const RootVector& w, int cap)
{
    if (w.height() > cap)
        throw Error(ErrorKind::CapExceeded,
                    "height " + std::to_string(w.height()) + " exceeds --cap " + std::to_string(cap));
}

std::string ladders_line(const std::vector<LadderMultisegment>& ls)
{
    std::string s;
    for (size_t i = 0; i < ls.size(); ++i)
        s += (i ? " ; (" : "(") + ls[i].to_string() + ")";
    return s;
}

std::string int_tuple(const std::vector<int>& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

json ladders_json(const std::vector<LadderMultisegment>& ls)
{
    json a = json::array();
    for (const auto& l : ls)
        a.push_back(l.to_string());
    return a;
}

json poly_json(const LaurentPoly& p)
{
    json o = json::object();
    for (auto [e, c] : p.terms())
        o[std::to_string(e)] = c;
    return o;
}

json weight_json(const RootVector& w)
{
    json o = json::object();
    for (auto [i, c] : w.entries())
        o[std::to_string(i)] = c;
    return o;
}

json character_json(const GradedCharacter& ch)
{
    json terms = json::array();
    for (const auto& [w, c] : ch.terms())
        terms.push_back({{"word", w}, {"coeff", poly_json(c)}});
    return {{"weight", weight_json(ch.weight())}, {"terms", terms}};
}

GradedCharacter character_of(const Multisegment& m, const std::string& kind)
{
    if (kind == "kr")
        return kr_char(m);
    if (kind == "sigma")
        return sigma_char(m);
    if (kind == "gamma")
        return gamma_char(m);
    if (kind == "ladder") {
        auto l = as_ladder(m);
        if (!l)
            throw Error(ErrorKind::MalformedLadder, m.to_string() + " is not a ladder");
        return ladder_char(*l);
    }
    if (kind == "nabla") {
        const auto blocks = left_aligned_decomposition(m);
        if (blocks.size() != 1)
            throw Error(ErrorKind::InvalidSegment, m.to_string() + " is not left-aligned");
        return nabla_char(blocks.front());
    }
    // "segment"
    if (m.size() != 1)
        throw Error(ErrorKind::InvalidSegment, m.to_string() + " is not a single segment");
    return segment_char(m.terms().front().first);
}

void print_character(const GradedCharacter& ch, bool as_json)
{
    if (as_json)
        std::cout << character_json(ch).dump() << '\n';
    else
        std::cout << ch.to_string();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"RSK transform, invariants and graded characters of multisegments"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    int cap = kDefaultWordCap;
    app.add_flag("--json", as_json, "emit JSON");
    app.add_option("--cap", cap, "height cap for character computations");

    std::string arg1, arg2;

    auto* rsk = app.add_subcommand("rsk", "RSK transform of a multisegment");
    rsk->add_option("m", arg1)->required();
    auto* inv = app.add_subcommand("inv-rsk", "rebuild a multisegment from its RSK ladders");
    inv->add_option("ladders", arg1, "ladders separated by ';', as printed by rsk")->required();
    auto* wid = app.add_subcommand("width", "minimal number of ladders");
    wid->add_option("m", arg1)->required();
    auto* tab = app.add_subcommand("tableaux", "tableau pair (P, Q)");
    tab->add_option("m", arg1)->required();
    auto* invs = app.add_subcommand("invariants", "C, D, kappa, lambda_tilde, d, normality");
    std::vector<std::string> pair_args;
    auto* pair_opt = invs->add_option("--pair", pair_args, "ladder and multisegment")->expected(2)->allow_extra_args(false);
    invs->add_option("m", arg1);
    auto* dcmd = app.add_subcommand("d", "normalisation shift d(m)");
    dcmd->add_option("m", arg1)->required();
    auto* gam = app.add_subcommand("gamma", "ladder factors and shift of the RSK-standard module");
    gam->add_option("m", arg1)->required();
    std::string kind = "kr";
    auto* chr = app.add_subcommand("char", "graded character");
    chr->add_option("m", arg1)->required();
    chr->add_option("--kind", kind, "segment|ladder|nabla|kr|sigma|gamma")
        ->check(CLI::IsMember({"segment", "ladder", "nabla", "kr", "sigma", "gamma"}));
    auto* shf = app.add_subcommand("shuffle", "shuffle product of two characters");
    shf->add_option("m1", arg1)->required();
    shf->add_option("m2", arg2)->required();
    shf->add_option("--kind", kind, "character kind of both factors")
        ->check(CLI::IsMember({"segment", "ladder", "nabla", "kr", "sigma", "gamma"}));
    std::string grid = GridSpec{}.to_string();
    bool serial = false;
    auto* ver = app.add_subcommand("verify", "run the property sweeps over a grid");
    ver->add_option("--grid", grid, "e.g. window=0..3,maxsegs=4,maxmult=2");
    ver->add_flag("--serial", serial, "use the serial reference path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*rsk) {
            const auto m = read_multisegment(arg1);
            const auto ls = rsk_transform(m);
            const auto t = tableaux(m);
            if (as_json)
                std::cout << json{{"input", m.to_string()}, {"ladders", ladders_json(ls)}, {"shape", t.shape}}.dump()
                          << '\n';
            else
                std::cout << ladders_line(ls) << '\n' << "shape " << int_tuple(t.shape) << '\n';
        } else if (*inv) {
            const auto m = from_rsk(read_ladders({arg1}));
            if (as_json)
                std::cout << json{{"multisegment", m.to_string()}}.dump() << '\n';
            else
                std::cout << m.to_string() << '\n';
        } else if (*wid) {
            const int w = width(read_multisegment(arg1));
            if (as_json)
                std::cout << json{{"width", w}}.dump() << '\n';
            else
                std::cout << w << '\n';
        } else if (*tab) {
            const auto t = tableaux(read_multisegment(arg1));
            if (as_json) {
                std::cout << json{{"shape", t.shape}, {"P", t.P}, {"Q", t.Q}}.dump() << '\n';
            } else {
                std::cout << "shape " << int_tuple(t.shape) << '\n' << "P";
                for (const auto& row : t.P)
                    std::cout << ' ' << int_tuple(row);
                std::cout << '\n' << "Q";
                for (const auto& row : t.Q)
                    std::cout << ' ' << int_tuple(row);
                std::cout << '\n';
            }
        } else if (*invs) {
            LadderMultisegment l({Segment(0, 0)});
            Multisegment body, n;
            if (*pair_opt) {
                const auto ls = read_ladders({pair_args[0]});
                if (ls.size() != 1)
                    throw Error(ErrorKind::Parse, "--pair takes one ladder");
                l = ls.front();
                body = read_multisegment(pair_args[1]);
                n = k_prime(l, body);
            } else {
                if (arg1.empty())
                    throw Error(ErrorKind::Parse, "invariants needs a multisegment or --pair");
                n = read_multisegment(arg1);
                auto step = k_forward(n);
                l = step.ladder;
                body = step.rest;
            }
            const auto p = build_permissible(l, body);
            const int c = c_count(l.to_multisegment(), body);
            const int d = d_count(p);
            const int dm = d_of_m(n);
            const bool normal = is_normal_sequence(rsk_transform(n));
            if (as_json)
                std::cout << json{{"C", c},           {"D", d},  {"kappa", c - d}, {"lambda_tilde", lambda_tilde(l, body)},
                                  {"d", dm},           {"normal", normal}}
                                 .dump()
                          << '\n';
            else
                std::cout << "C=" << c << " D=" << d << " kappa=" << c - d
                          << " lambda_tilde=" << lambda_tilde(l, body) << " d=" << dm
                          << " normal=" << (normal ? "true" : "false") << '\n';
        } else if (*dcmd) {
            const int d = d_of_m(read_multisegment(arg1));
            if (as_json)
                std::cout << json{{"d", d}}.dump() << '\n';
            else
                std::cout << d << '\n';
        } else if (*gam) {
            const auto g = gamma_descriptor(read_multisegment(arg1));
            if (as_json)
                std::cout << json{{"factors", ladders_json(g.factors)}, {"d", g.shift}}.dump() << '\n';
            else
                std::cout << ladders_line(g.factors) << '\n' << "d=" << g.shift << '\n';
        } else if (*chr) {
            const auto m = read_multisegment(arg1);
            check_cap(m.weight(), cap);
            print_character(character_of(m, kind), as_json);
        } else if (*shf) {
            const auto m1 = read_multisegment(arg1);
            const auto m2 = read_multisegment(arg2);
            check_cap(m1.weight() + m2.weight(), cap);
            print_character(shuffle(character_of(m1, kind), character_of(m2, kind)), as_json);
        } else if (*ver) {
            VerifyOptions o;
            o.grid = GridSpec::parse(grid);
            o.exec = serial ? Exec::Serial : Exec::Parallel;
            const auto results = run_all(o);
            bool ok = true;
            if (as_json) {
                json a = json::array();
                for (const auto& r : results) {
                    a.push_back({{"name", r.name},
                                 {"pass", r.pass},
                                 {"cases", r.cases},
                                 {"failures", r.failures},
                                 {"counterexample", r.counterexample},
                                 {"note", r.note}});
                    ok = ok && r.pass;
                }
                std::cout << json{{"grid", o.grid.to_string()}, {"checks", a}}.dump(2) << '\n';
            } else {
                std::cout << "grid " << o.grid.to_string() << '\n';
                for (const auto& r : results) {
                    std::cout << format_result(r) << '\n';
                    ok = ok && r.pass;
                }
            }
            return ok ? 0 : kExitVerify;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Parse ? kExitParse : kExitDomain;
    }
    return 0;
}
