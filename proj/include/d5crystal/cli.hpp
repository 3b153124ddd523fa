#pragma once

// d5crystal command line: enumerate, graph, verify, tropicalize, preimage, omega.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coherent_family.hpp"
#include "perfect_crystal.hpp"
#include "tropical.hpp"
#include "ud_crystal.hpp"
#include "verify.hpp"

namespace d5 {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

struct RunConfig {
    std::int64_t l = 1;
    std::int64_t samples = 100;
    std::int64_t box = 5;
    std::uint64_t seed = 1;
    std::string format;
    std::string out;
};

namespace detail {
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_format(std::string const& f, std::initializer_list<char const*> allowed) {
    for (auto a : allowed)
        if (f == a) return;
    std::string msg = "--format must be one of:";
    for (auto a : allowed) msg += std::string(" ") + a;
    throw UsageError(msg);
}

inline UDPoint ud_from(std::vector<std::int64_t> const& v) {
    if (v.size() != kDim) throw UsageError("--x takes exactly 10 integers");
    UDPoint x;
    std::copy(v.begin(), v.end(), x.v.begin());
    return x;
}

inline PCElement limit_element_from(std::string const& text) {
    PCElement e;
    try {
        e = element_from_json(Json::parse(text));
    } catch (Json::exception const& ex) {
        throw UsageError(std::string("bad --element: ") + ex.what());
    } catch (std::invalid_argument const& ex) {
        throw UsageError(std::string("bad --element: ") + ex.what());
    }
    if (!e.regime.is_limit()) throw UsageError("--element must be a limit-regime element");
    if (!is_member(e)) throw UsageError("--element is not in B^{5,inf}");
    return e;
}

inline Json ud_named(UDPoint const& x) {
    Json j = Json::object();
    for (std::size_t i = 0; i < kDim; ++i) j[std::string(kSlotNamesV1[i])] = x[i];
    return j;
}

inline std::string cmd_enumerate(RunConfig const& rc) {
    if (rc.l < 1 || rc.l > kMaxEnumerateLevel)
        throw UsageError("enumerate supports 1 <= l <= " + std::to_string(kMaxEnumerateLevel));
    std::string const fmt = rc.format.empty() ? "json" : rc.format;
    require_format(fmt, {"json", "text"});
    auto const all = enumerate(rc.l);
    std::ostringstream os;
    if (fmt == "json") {
        Json j;
        j["l"] = rc.l;
        j["count"] = all.size();
        j["elements"] = Json::array();
        for (auto const& b : all) {
            Json e = to_json(b);
            e["minimal"] = level(eps(b)) == rc.l;
            j["elements"].push_back(std::move(e));
        }
        os << j.dump(2) << '\n';
    } else {
        for (auto const& b : all) os << label(b) << (level(eps(b)) == rc.l ? "  min" : "") << '\n';
    }
    return os.str();
}

inline std::string cmd_graph(RunConfig const& rc) {
    if (rc.l < 1 || rc.l > kMaxGraphLevel)
        throw UsageError("graph supports 1 <= l <= " + std::to_string(kMaxGraphLevel));
    std::string const fmt = rc.format.empty() ? "dot" : rc.format;
    require_format(fmt, {"dot", "json"});
    auto const g = crystal_graph(rc.l);
    if (fmt == "dot") return to_dot(g, rc.l);
    Json j;
    j["l"] = rc.l;
    j["vertices"] = Json::array();
    for (auto const& v : g.vertices) j["vertices"].push_back(to_json(v));
    j["edges"] = Json::array();
    for (auto const& e : g.edges) j["edges"].push_back(Json{{"from", e.from}, {"k", e.k}, {"to", e.to}});
    return j.dump(2) + '\n';
}

inline std::string cmd_verify(std::string const& suite, RunConfig const& rc, bool l_given, bool& ok) {
    std::string const fmt = rc.format.empty() ? "json" : rc.format;
    require_format(fmt, {"json", "text"});
    VerifyConfig cfg;
    cfg.seed = rc.seed;
    cfg.samples = rc.samples;
    cfg.box = rc.box;
    if (l_given) cfg.levels = {rc.l};
    try {
        cfg.validate();
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
    Report const rep = run_suite(suite, cfg);
    ok = rep.ok();
    if (fmt == "json") return rep.to_json().dump(2) + '\n';
    std::ostringstream os;
    os << "suite " << rep.suite() << " seed " << rc.seed << (ok ? " PASS" : " FAIL") << '\n';
    for (auto const& [name, c] : rep.checks())
        os << (c.ok() ? "  ok    " : "  FAIL  ") << name << "  " << c.passed << '/' << c.samples << '\n';
    return os.str();
}

inline std::string cmd_tropicalize(std::string const& text, RunConfig const& rc) {
    std::string const fmt = rc.format.empty() ? "text" : rc.format;
    require_format(fmt, {"text", "json"});
    ExprPtr const e = parse(text);
    TropPtr const t = tropicalize(*e);
    if (fmt == "text") return to_string(*t) + '\n';
    Json j;
    j["input"] = text;
    j["parsed"] = to_string(*e);
    j["tropical"] = to_string(*t);
    return j.dump(2) + '\n';
}

inline std::string cmd_preimage(PCElement const& bp, RunConfig const& rc) {
    std::string const fmt = rc.format.empty() ? "json" : rc.format;
    require_format(fmt, {"json", "text"});
    auto const p = preimage(bp);
    if (fmt == "text") {
        std::ostringstream os;
        os << "l = " << p.l << "\na = (";
        for (int k = 0; k < kRank; ++k) os << (k ? "," : "") << p.a[k];
        os << ")\nb  = " << p.b << "\nb0 = " << p.b0 << '\n';
        return os.str();
    }
    Json j;
    j["bp"] = to_json(bp);
    j["l"] = p.l;
    j["a"] = Json(p.a);
    j["b"] = to_json(p.b);
    j["b0"] = to_json(p.b0);
    return j.dump(2) + '\n';
}

inline std::string cmd_omega(std::optional<PCElement> const& b, std::optional<UDPoint> const& x, RunConfig const& rc) {
    std::string const fmt = rc.format.empty() ? "json" : rc.format;
    require_format(fmt, {"json", "text"});
    PCElement const elem = b ? *b : omega_inv(*x);
    UDPoint const pt = b ? omega(*b) : *x;
    if (fmt == "text") {
        std::ostringstream os;
        os << "element " << elem << "\nx      " << pt << '\n';
        return os.str();
    }
    Json j;
    j["element"] = to_json(elem);
    j["x"] = to_json(pt);
    j["slots"] = ud_named(pt);
    return j.dump(2) + '\n';
}
}  // namespace detail

inline int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spin-node crystals of type D5^(1)", "d5crystal"};
    app.require_subcommand(1);
    RunConfig rc;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", rc.out, "write output to this file"); };

    auto* en = app.add_subcommand("enumerate", "list every element of B^{5,l}");
    en->add_option("--l", rc.l, "level, 1..4")->required();
    en->add_option("--format", rc.format, "json (default) or text");
    add_out(en);

    auto* gr = app.add_subcommand("graph", "crystal graph of B^{5,l} (f arrows)");
    gr->add_option("--l", rc.l, "level, 1..3")->required();
    gr->add_option("--format", rc.format, "dot (default) or json");
    add_out(gr);

    std::string suite;
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("suite", suite, "geometric | perfect | coherent | ud-match | iso")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    ve->add_option("--samples", rc.samples, "random samples");
    ve->add_option("--box", rc.box, "integer box [-box, box] for Z^10 samples");
    ve->add_option("--seed", rc.seed, "RNG seed");
    auto* ve_l = ve->add_option("--l", rc.l, "restrict the perfect suite to one level");
    ve->add_option("--format", rc.format, "json (default) or text");
    add_out(ve);

    std::string expr;
    auto* tr = app.add_subcommand("tropicalize", "tropicalize a subtraction-free rational expression");
    tr->add_option("expr", expr, "expression, e.g. \"x*y/(x + y)\"")->required();
    tr->add_option("--format", rc.format, "text (default) or json");
    add_out(tr);

    std::vector<std::int64_t> xs;
    std::string element;
    auto* pre = app.add_subcommand("preimage", "(l, a, b) whose embedding is a given B^{5,inf} element");
    auto* pre_x = pre->add_option("--x", xs, "10 integers, read through omega_inv")->expected(10);
    auto* pre_e = pre->add_option("--element", element, "limit element as JSON");
    pre_x->excludes(pre_e);
    pre->add_option("--format", rc.format, "json (default) or text");
    add_out(pre);

    auto* om = app.add_subcommand("omega", "the isomorphism B^{5,inf} <-> Z^10");
    auto* om_x = om->add_option("--x", xs, "10 integers; prints omega_inv(x)")->expected(10);
    auto* om_e = om->add_option("--element", element, "limit element as JSON; prints omega(b)");
    om_x->excludes(om_e);
    om->add_option("--format", rc.format, "json (default) or text");
    add_out(om);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    int status = kExitOk;
    std::string text;
    try {
        if (*en) {
            text = detail::cmd_enumerate(rc);
        } else if (*gr) {
            text = detail::cmd_graph(rc);
        } else if (*ve) {
            bool ok = false;
            text = detail::cmd_verify(suite, rc, ve_l->count() > 0, ok);
            status = ok ? kExitOk : kExitFailed;
        } else if (*tr) {
            text = detail::cmd_tropicalize(expr, rc);
        } else if (*pre || *om) {
            bool const want_x = (*pre ? pre_x : om_x)->count() > 0;
            bool const want_e = (*pre ? pre_e : om_e)->count() > 0;
            if (!want_x && !want_e) throw detail::UsageError("give --x or --element");
            std::optional<PCElement> b;
            std::optional<UDPoint> x;
            if (want_e)
                b = detail::limit_element_from(element);
            else
                x = detail::ud_from(xs);
            if (*pre)
                text = detail::cmd_preimage(b ? *b : omega_inv(*x), rc);
            else
                text = detail::cmd_omega(b, x, rc);
        }
    } catch (ParseError const& e) {
        err << "parse error: " << e.what() << '\n';
        if (*tr) err << "  " << expr << "\n  " << std::string(e.position, ' ') << "^\n";
        return kExitUsage;
    } catch (detail::UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (rc.out.empty()) {
        out << text;
    } else {
        std::ofstream f(rc.out, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << rc.out << '\n';
            return kExitUsage;
        }
        f << text;
    }
    return status;
}

}  // namespace d5
