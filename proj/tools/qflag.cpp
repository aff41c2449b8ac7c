// qflag command-line tool: exact q-analog values, tables, and the
// identity-verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qflag/cyclotomic.hpp"
#include "qflag/ffspace.hpp"
#include "qflag/rogers_szego.hpp"
#include "qflag/verify.hpp"

using json = nlohmann::json;
using namespace qflag;

namespace {

constexpr int kSchema = 1;

// Documented hard caps; they keep every command desk-scale.
constexpr int kMaxQbinomN = 40;
constexpr int kMaxMultinomSum = 24;
constexpr int kMaxRsN = 12;
constexpr int kMaxRsM = 8;
constexpr int kMaxGaloisN = 30;
constexpr int kMaxGengalN = 16;
constexpr int kMaxGengalM = 8;
constexpr int kMaxEnumQ = 9;
constexpr int kMaxEnumN = 5;
constexpr int kMaxEnumM = 5;
constexpr int kMaxVerifyN = 14;
constexpr int kMaxVerifyM = 6;
constexpr int kMaxVerifyCap = 16;

struct Output {
    std::string path; // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot open output file: " + path);
        out << text;
    }
};

int thread_budget() {
    if (const char* env = std::getenv("QFLAG_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return int(std::min(4u, hw == 0 ? 1u : hw));
}

void require(bool cond, const std::string& message) {
    if (!cond) throw InvalidArguments(message);
}

std::vector<int> parse_comp(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(std::stoi(item));
    require(!parts.empty(), "empty composition");
    return parts;
}

json record(const std::string& kind, json inputs, const std::string& value) {
    return json{{"schema", kSchema}, {"kind", kind}, {"inputs", std::move(inputs)},
                {"value", value}};
}

std::string eval_at_q(const MPoly& p, long q) {
    std::map<VarId, Int> at{{VarId::q(), Int(q)}};
    return p.eval(at).get_str();
}

// ------------------------------------------------------------- commands

int cmd_qbinom(int n, int k, long evalq, bool do_eval, const Output& out) {
    require(n >= 0 && n <= kMaxQbinomN, "qbinom: need 0 <= n <= " + std::to_string(kMaxQbinomN));
    require(k >= 0 && k <= n, "qbinom: need 0 <= k <= n");
    MPoly v = qbinomial(n, k);
    json inputs{{"n", n}, {"k", k}};
    if (do_eval) inputs["q"] = evalq;
    out.emit(record("qbinom", inputs, do_eval ? eval_at_q(v, evalq) : v.to_string()).dump() + "\n");
    return 0;
}

int cmd_qmultinom(const std::vector<int>& parts, long evalq, bool do_eval, const Output& out) {
    Composition c(parts);
    require(c.sum() <= kMaxMultinomSum,
            "qmultinom: composition sum capped at " + std::to_string(kMaxMultinomSum));
    MPoly v = qmultinomial(c);
    json inputs{{"comp", parts}};
    if (do_eval) inputs["q"] = evalq;
    out.emit(record("qmultinom", inputs, do_eval ? eval_at_q(v, evalq) : v.to_string()).dump() +
             "\n");
    return 0;
}

int cmd_rs(int n, int m, bool homogeneous, const Output& out) {
    require(n >= 0 && n <= kMaxRsN, "rs: need 0 <= n <= " + std::to_string(kMaxRsN));
    require(m >= 2 && m <= kMaxRsM, "rs: need 2 <= m <= " + std::to_string(kMaxRsM));
    MPoly v = homogeneous ? rs_homogeneous(n, m).value : rs(n, m).value;
    json inputs{{"n", n}, {"m", m}, {"homogeneous", homogeneous}};
    out.emit(record("rs", inputs, v.to_string()).dump() + "\n");
    return 0;
}

int cmd_galois(int n, long evalq, bool do_eval, const Output& out) {
    require(n >= 0 && n <= kMaxGaloisN, "galois: need 0 <= n <= " + std::to_string(kMaxGaloisN));
    MPoly v = galois(n);
    json inputs{{"n", n}};
    if (do_eval) inputs["q"] = evalq;
    out.emit(record("galois", inputs, do_eval ? eval_at_q(v, evalq) : v.to_string()).dump() +
             "\n");
    return 0;
}

int cmd_gengal(int n, int m, long evalq, bool do_eval, const Output& out) {
    require(n >= 0 && n <= kMaxGengalN, "gengal: need 0 <= n <= " + std::to_string(kMaxGengalN));
    require(m >= 2 && m <= kMaxGengalM, "gengal: need 2 <= m <= " + std::to_string(kMaxGengalM));
    MPoly v = galois_general(n, m);
    json inputs{{"n", n}, {"m", m}};
    if (do_eval) inputs["q"] = evalq;
    out.emit(record("gengal", inputs, do_eval ? eval_at_q(v, evalq) : v.to_string()).dump() +
             "\n");
    return 0;
}

int cmd_special(int n, int m, bool scaled, const Output& out) {
    require(n >= 0 && n <= kMaxRsN, "special: need 0 <= n <= " + std::to_string(kMaxRsN));
    require(m >= 2 && m <= kMaxRsM, "special: need 2 <= m <= " + std::to_string(kMaxRsM));
    MPoly formula = scaled ? special3_formula(n, m) : special1_formula(n, m);
    CycPoly ev = rs_eval_roots(n, m, scaled);
    json rec = record("special", json{{"n", n}, {"m", m}, {"scaled", scaled}},
                      formula.to_string());
    rec["evaluation"] = ev.to_string();
    rec["match"] = (ev == CycPoly::from_qpoly(m, formula));
    out.emit(rec.dump() + "\n");
    return 0;
}

int cmd_flagcount(int p, int e, const std::string& comp_text, int n, int m, bool list,
                  const Output& out) {
    FieldSpec f = FieldSpec::build(p, e);
    require(f.q() <= kMaxEnumQ, "flagcount: field size capped at " + std::to_string(kMaxEnumQ));
    json inputs{{"p", p}, {"e", e}};
    Int count;
    json flags = json::array();
    if (!comp_text.empty()) {
        Composition c(parse_comp(comp_text));
        require(c.sum() <= kMaxEnumN,
                "flagcount: ambient dimension capped at " + std::to_string(kMaxEnumN));
        require(c.length() <= kMaxEnumM,
                "flagcount: composition length capped at " + std::to_string(kMaxEnumM));
        inputs["comp"] = c.parts();
        if (list) {
            long seen = 0;
            for_each_flag(f, c.sum(), c, [&](const FlagChain& flag) {
                ++seen;
                json blocks = json::array();
                for (const auto& w : flag.chain)
                    blocks.push_back(json{{"k", w.k}, {"rows", w.rows}});
                flags.push_back(json{{"comp", flag.comp.parts()}, {"blocks", blocks}});
            });
            count = seen;
        } else {
            count = count_flags(f, c);
        }
    } else {
        require(!list, "flagcount: --list needs --comp");
        require(n >= 0 && n <= kMaxEnumN, "flagcount: need 0 <= n <= " + std::to_string(kMaxEnumN));
        require(m >= 2 && m <= kMaxEnumM, "flagcount: need 2 <= m <= " + std::to_string(kMaxEnumM));
        inputs["n"] = n;
        inputs["m"] = m;
        count = total_flags(f, n, m);
    }
    json rec = record("flagcount", inputs, count.get_str());
    if (list) rec["flags"] = std::move(flags);
    out.emit(rec.dump() + "\n");
    return 0;
}

int cmd_table(const std::string& kind, int max_n, int max_m, long evalq, bool do_eval,
              const std::string& format, const Output& out) {
    require(format == "json" || format == "csv", "table: format must be json or csv");
    struct Row {
        std::vector<int> keys; // in header order
        std::string value;
    };
    std::vector<std::string> header;
    std::vector<Row> rows;
    if (kind == "qbinom") {
        require(max_n >= 0 && max_n <= 16, "table qbinom: max-n capped at 16");
        header = {"n", "k"};
        for (int n = 0; n <= max_n; ++n)
            for (int k = 0; k <= n; ++k) {
                MPoly v = qbinomial(n, k);
                rows.push_back({{n, k}, do_eval ? eval_at_q(v, evalq) : v.to_string()});
            }
    } else if (kind == "galois") {
        require(max_n >= 0 && max_n <= 16, "table galois: max-n capped at 16");
        header = {"n"};
        for (int n = 0; n <= max_n; ++n) {
            MPoly v = galois(n);
            rows.push_back({{n}, do_eval ? eval_at_q(v, evalq) : v.to_string()});
        }
    } else if (kind == "gengal") {
        require(max_n >= 0 && max_n <= 10, "table gengal: max-n capped at 10");
        require(max_m >= 2 && max_m <= 5, "table gengal: max-m in 2..5");
        header = {"n", "m"};
        for (int n = 0; n <= max_n; ++n)
            for (int m = 2; m <= max_m; ++m) {
                MPoly v = galois_general(n, m);
                rows.push_back({{n, m}, do_eval ? eval_at_q(v, evalq) : v.to_string()});
            }
    } else {
        throw InvalidArguments("table: kind must be qbinom, galois, or gengal");
    }

    if (format == "json") {
        json j{{"schema", kSchema}, {"kind", "table"}, {"table", kind}};
        if (do_eval) j["q"] = evalq;
        j["rows"] = json::array();
        for (auto& r : rows) {
            json jr;
            for (size_t i = 0; i < header.size(); ++i) jr[header[i]] = r.keys[i];
            jr["value"] = r.value;
            j["rows"].push_back(std::move(jr));
        }
        out.emit(j.dump() + "\n");
    } else {
        std::ostringstream os;
        for (const auto& h : header) os << h << ",";
        os << "value\n";
        for (auto& r : rows) {
            for (int key : r.keys) os << key << ",";
            os << r.value << "\n";
        }
        out.emit(os.str());
    }
    return 0;
}

struct VerifyOptions {
    std::string suite;
    int max_n = -1;
    int max_m = -1;
    int xcap = -1;
    int qcap = -1;
    int p = 0;
    int e = 1;
    std::string corrupt;
};

VerifyCaps caps_for(const VerifyOptions& opt) {
    VerifyCaps caps;
    if (opt.xcap >= 0) {
        require(opt.xcap <= kMaxVerifyCap, "verify: xcap capped at " + std::to_string(kMaxVerifyCap));
        caps.xcap = opt.xcap;
    }
    if (opt.qcap >= 0) {
        require(opt.qcap <= 2 * kMaxVerifyCap, "verify: qcap capped at " + std::to_string(2 * kMaxVerifyCap));
        caps.qcap = opt.qcap;
    }
    if (opt.max_n >= 0) {
        require(opt.max_n <= kMaxVerifyN, "verify: max-n capped at " + std::to_string(kMaxVerifyN));
        caps.rec_max_n = opt.max_n;
        caps.qshift_max_n = opt.max_n;
        caps.special_max_n = opt.max_n;
        caps.special2_max_n = std::min(opt.max_n, caps.special2_max_n);
        caps.subspace_max_n = std::min(opt.max_n, kMaxEnumN);
        caps.flag_max_n = std::min(opt.max_n, kMaxEnumN);
        caps.census_max_dim = std::min(opt.max_n, kMaxEnumN);
    }
    if (opt.max_m >= 0) {
        require(opt.max_m >= 2 && opt.max_m <= kMaxVerifyM,
                "verify: max-m in 2.." + std::to_string(kMaxVerifyM));
        caps.genfn_max_m = std::min(opt.max_m, 4);
        caps.rec_max_m = std::min(opt.max_m, 5);
        caps.qshift_max_m = std::min(opt.max_m, 4);
        caps.special_max_m = opt.max_m;
        caps.special2_max_m = std::min(opt.max_m, caps.special2_max_m);
        caps.lemma_max_m = std::min(opt.max_m, 4);
        caps.flag_max_m = std::min(opt.max_m, kMaxEnumM);
        caps.pattern_max_m = std::min(opt.max_m, 4);
    }
    if (opt.p != 0) {
        FieldSpec f = FieldSpec::build(opt.p, opt.e); // validates primality
        require(f.q() <= kMaxEnumQ, "verify: field size capped at " + std::to_string(kMaxEnumQ));
        caps.subspace_fields = {{opt.p, opt.e}};
        caps.flag_fields = {{opt.p, opt.e}};
    }
    return caps;
}

int cmd_verify(const VerifyOptions& opt, const Output& out) {
    if (!opt.corrupt.empty()) {
        auto nums = parse_comp(opt.corrupt);
        require(nums.size() >= 2 && nums.size() <= 4,
                "corrupt-qbinom expects n,k[,qexp[,delta]]");
        int n = nums[0], k = nums[1];
        int qexp = nums.size() >= 3 ? nums[2] : 1;
        long delta = nums.size() >= 4 ? nums[3] : 1;
        require(delta != 0, "corrupt-qbinom: delta must be nonzero");
        testing::inject_qbinomial_corruption(n, k, qexp, delta);
    }
    bool known = opt.suite == "all";
    for (const auto& name : verify_suites()) known = known || name == opt.suite;
    require(known, "unknown suite '" + opt.suite + "'");

    VerifyCaps caps = caps_for(opt);
    auto results = run_verify(opt.suite, caps, thread_budget());

    std::ostringstream os;
    size_t failed = 0;
    for (const auto& r : results) {
        json j{{"schema", kSchema}, {"kind", "verify"}, {"suite", r.suite},
               {"check", r.name},   {"status", r.ok ? "ok" : "failed"}};
        if (!r.ok) {
            j["counterexample"] = r.counterexample;
            ++failed;
        }
        os << j.dump() << "\n";
    }
    json summary{{"schema", kSchema},
                 {"kind", "verify"},
                 {"suite", opt.suite},
                 {"check", "summary"},
                 {"status", failed == 0 ? "ok" : "failed"},
                 {"total", results.size()},
                 {"failed", failed}};
    os << summary.dump() << "\n";
    out.emit(os.str());
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qflag: exact Rogers-Szego / q-multinomial / Galois-number toolkit\n"
                 "All arithmetic is exact; every identity check compares canonical forms."};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    std::function<int()> action;

    // qbinom
    {
        auto* sub = app.add_subcommand("qbinom", "Gaussian binomial coefficient binom(n,k)_q");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto evalq = std::make_shared<long>(0);
        auto* opt_n = sub->add_option("--n", *n, "upper index (0..40)")->required();
        sub->add_option("--k", *k, "lower index")->required();
        auto* opt_q = sub->add_option("--eval-q", *evalq, "evaluate at integer q");
        (void)opt_n;
        sub->callback([&action, n, k, evalq, opt_q, &out_path]() {
            action = [=]() { return cmd_qbinom(*n, *k, *evalq, opt_q->count() > 0, Output{out_path}); };
        });
    }
    // qmultinom
    {
        auto* sub = app.add_subcommand("qmultinom", "q-multinomial coefficient of a composition");
        auto comp = std::make_shared<std::string>();
        auto evalq = std::make_shared<long>(0);
        sub->add_option("--comp", *comp, "comma-separated parts, e.g. 1,1,1")->required();
        auto* opt_q = sub->add_option("--eval-q", *evalq, "evaluate at integer q");
        sub->callback([&action, comp, evalq, opt_q, &out_path]() {
            action = [=]() {
                return cmd_qmultinom(parse_comp(*comp), *evalq, opt_q->count() > 0,
                                     Output{out_path});
            };
        });
    }
    // rs
    {
        auto* sub = app.add_subcommand("rs", "Rogers-Szego polynomial H_n (or homogeneous form)");
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<int>(2);
        auto hom = std::make_shared<bool>(false);
        sub->add_option("--n", *n, "degree (0..12)")->required();
        sub->add_option("--m", *m, "length (2..8)")->required();
        sub->add_flag("--homogeneous", *hom, "emit the homogeneous form in t_1..t_m");
        sub->callback([&action, n, m, hom, &out_path]() {
            action = [=]() { return cmd_rs(*n, *m, *hom, Output{out_path}); };
        });
    }
    // galois
    {
        auto* sub = app.add_subcommand("galois", "Galois number polynomial G_n");
        auto n = std::make_shared<int>(0);
        auto evalq = std::make_shared<long>(0);
        sub->add_option("--n", *n, "degree (0..30)")->required();
        auto* opt_q = sub->add_option("--eval-q", *evalq, "evaluate at integer q");
        sub->callback([&action, n, evalq, opt_q, &out_path]() {
            action = [=]() { return cmd_galois(*n, *evalq, opt_q->count() > 0, Output{out_path}); };
        });
    }
    // gengal
    {
        auto* sub = app.add_subcommand("gengal", "generalized Galois number polynomial G_n^(m)");
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<int>(2);
        auto evalq = std::make_shared<long>(0);
        sub->add_option("--n", *n, "degree (0..16)")->required();
        sub->add_option("--m", *m, "length (2..8)")->required();
        auto* opt_q = sub->add_option("--eval-q", *evalq, "evaluate at integer q");
        sub->callback([&action, n, m, evalq, opt_q, &out_path]() {
            action = [=]() {
                return cmd_gengal(*n, *m, *evalq, opt_q->count() > 0, Output{out_path});
            };
        });
    }
    // special
    {
        auto* sub = app.add_subcommand(
            "special", "root-of-unity special value: closed formula and direct evaluation");
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<int>(2);
        auto scaled = std::make_shared<bool>(false);
        sub->add_option("--n", *n, "degree (0..12)")->required();
        sub->add_option("--m", *m, "conductor / length (2..8)")->required();
        sub->add_flag("--scaled", *scaled, "evaluate at t_i = w^i q instead of t_i = w^i");
        sub->callback([&action, n, m, scaled, &out_path]() {
            action = [=]() { return cmd_special(*n, *m, *scaled, Output{out_path}); };
        });
    }
    // flagcount
    {
        auto* sub = app.add_subcommand("flagcount",
                                       "brute-force flag/subspace count over a finite field");
        auto p = std::make_shared<int>(2);
        auto e = std::make_shared<int>(1);
        auto comp = std::make_shared<std::string>();
        auto n = std::make_shared<int>(-1);
        auto m = std::make_shared<int>(-1);
        auto list = std::make_shared<bool>(false);
        sub->add_option("--p", *p, "prime characteristic")->required();
        sub->add_option("--e", *e, "extension degree (default 1)");
        sub->add_option("--comp", *comp, "composition of dimension drops, e.g. 1,1,1");
        sub->add_option("--n", *n, "ambient dimension (with --m: count all flags)");
        sub->add_option("--m", *m, "flag length (with --n)");
        sub->add_flag("--list", *list, "also emit every flag as subspace blocks");
        sub->callback([&action, p, e, comp, n, m, list, &out_path]() {
            action = [=]() {
                require(!comp->empty() || (*n >= 0 && *m >= 2),
                        "flagcount: pass --comp or both --n and --m");
                return cmd_flagcount(*p, *e, *comp, *n, *m, *list, Output{out_path});
            };
        });
    }
    // table
    {
        auto* sub = app.add_subcommand("table", "value table over a parameter grid");
        auto kind = std::make_shared<std::string>();
        auto max_n = std::make_shared<int>(0);
        auto max_m = std::make_shared<int>(4);
        auto evalq = std::make_shared<long>(0);
        auto format = std::make_shared<std::string>("json");
        sub->add_option("--kind", *kind, "qbinom | galois | gengal")->required();
        sub->add_option("--max-n", *max_n, "largest n in the grid")->required();
        sub->add_option("--max-m", *max_m, "largest m (gengal only, 2..5)");
        auto* opt_q = sub->add_option("--eval-q", *evalq, "evaluate at integer q");
        sub->add_option("--format", *format, "json (default) or csv");
        sub->callback([&action, kind, max_n, max_m, evalq, opt_q, format, &out_path]() {
            action = [=]() {
                return cmd_table(*kind, *max_n, *max_m, *evalq, opt_q->count() > 0, *format,
                                 Output{out_path});
            };
        });
    }
    // verify
    {
        auto* sub = app.add_subcommand("verify", "run an identity-verification suite");
        auto opt = std::make_shared<VerifyOptions>();
        std::string suites;
        for (const auto& s : verify_suites()) suites += s + " | ";
        sub->add_option("suite", opt->suite, "one of: " + suites + "all")->required();
        sub->add_option("--max-n", opt->max_n, "suite-specific n cap (default: shipping caps)");
        sub->add_option("--max-m", opt->max_m, "suite-specific m cap");
        sub->add_option("--xcap", opt->xcap, "x-truncation for series suites (default 8)");
        sub->add_option("--qcap", opt->qcap, "q-truncation for series suites (default 12)");
        sub->add_option("--p", opt->p, "prime for enumeration suites (with --e)");
        sub->add_option("--e", opt->e, "extension degree for enumeration suites");
        sub->add_option("--corrupt-qbinom", opt->corrupt,
                        "TESTING ONLY: n,k[,qexp[,delta]] single-coefficient fault injection")
            ->group("");
        sub->callback([&action, opt, &out_path]() {
            action = [=]() { return cmd_verify(*opt, Output{out_path}); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
