// Command-line front end: single-polynomial computation and classification,
// corpus verification, and oracle comparison.
//
// Exit codes: 0 ok, 1 check or expectation failure, 2 input error,
// 3 non-isolated singularity, 4 internal invariant violation.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <singspec/singspec.hpp>

namespace {

using json = nlohmann::json;
using namespace singspec;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InputError("empty entry in comma-separated list");
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw InputError("empty comma-separated list");
    return out;
}

std::vector<long long> split_csv_longs(const std::string& text) {
    std::vector<long long> out;
    for (const auto& s : split_csv(text)) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + s + "'");
        }
    }
    return out;
}

std::string join_longs(const std::vector<long long>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// Detects c_1..c_{n+1} for sums of pure powers (any nonzero coefficients):
// the shape whose spectrum the Brieskorn-Pham oracle enumerates directly.
std::optional<std::vector<long long>> brieskorn_pham_exponents(const Polynomial& f) {
    std::vector<long long> c(f.variable_count(), 0);
    for (const auto& [e, coeff] : f.terms()) {
        std::size_t var = f.variable_count();
        for (std::size_t i = 0; i < f.variable_count(); ++i) {
            if (e[i] == 0) continue;
            if (var != f.variable_count()) return std::nullopt;  // mixed monomial
            var = i;
        }
        if (var == f.variable_count() || e[var] < 2 || c[var] != 0) return std::nullopt;
        c[var] = e[var];
    }
    for (long long ci : c)
        if (ci == 0) return std::nullopt;
    return c;
}

// Optional developer fault hook: corrupts the computed spectrum so the
// internal-invariant error path (exit 4) can be driven end to end.
void maybe_inject_fault(const Analysis& a) {
    const char* fault = std::getenv("SINGSPEC_INJECT_FAULT");
    if (!fault || a.spectrum.empty()) return;
    std::string kind(fault);
    Spectrum::Entries entries = a.spectrum.entries();
    if (kind == "symmetry") {
        entries[a.spectrum.min_alpha()] += 1;
        Spectrum::from_multiset(std::move(entries), a.spectrum.n(), a.report.mu + 1);
    } else if (kind == "mass") {
        Spectrum::from_multiset(std::move(entries), a.spectrum.n(), a.report.mu + 1);
    }
}

std::string classification_lines(const InvariantReport& r) {
    std::ostringstream os;
    if (r.max_du_bois < 0)
        os << "max_du_bois = not Du Bois\n";
    else
        os << "max_du_bois = " << r.max_du_bois << "\n";
    if (r.max_rational < 0)
        os << "max_rational = not rational\n";
    else
        os << "max_rational = " << r.max_rational << "\n";
    os << "liminal_k = " << (r.liminal_k ? std::to_string(*r.liminal_k) : "none") << "\n";
    return os.str();
}

std::string flags_line(const InvariantReport& r) {
    std::vector<std::string> flags;
    if (r.smooth) flags.push_back("smooth");
    if (r.odp) flags.push_back("odp");
    if (r.outside_paper_convention) flags.push_back("outside-paper-convention");
    if (flags.empty()) return "";
    std::string s = "flags =";
    for (const auto& f : flags) s += " " + f;
    return s + "\n";
}

std::string render_human(const Polynomial& f, const Analysis& a, bool with_spectrum) {
    std::ostringstream os;
    os << "polynomial = " << f.str() << "\n";
    std::string vars;
    for (std::size_t i = 0; i < f.variable_count(); ++i)
        vars += (i ? "," : "") + f.variables()[i];
    os << "variables = " << vars << "\n";
    if (a.ws) {
        os << "weights = " << join_longs(a.ws->a()) << "\n";
        os << "degree = " << a.ws->d() << "\n";
    }
    os << "n = " << a.report.n << "\n";
    os << "mu = " << a.report.mu << "\n";
    if (with_spectrum && !a.report.smooth) os << "spectrum = " << a.spectrum.str() << "\n";
    if (a.report.alpha_tilde) os << "alpha_tilde = " << a.report.alpha_tilde->str() << "\n";
    std::string s;
    for (std::size_t i = 0; i < a.report.s.size(); ++i)
        s += (i ? "," : "") + std::to_string(a.report.s[i]);
    os << "s = " << s << "\n";
    if (!a.report.smooth) os << classification_lines(a.report);
    os << flags_line(a.report);
    long long passed = 0;
    for (const auto& c : a.checks) passed += c.passed ? 1 : 0;
    os << "checks = " << passed << "/" << a.checks.size() << " passed\n";
    for (const auto& c : a.checks)
        if (!c.passed) os << "check FAILED " << c.check_id << ": " << c.detail << "\n";
    return os.str();
}

json spectrum_to_json(const Spectrum& s) {
    json arr = json::array();
    for (const auto& [alpha, m] : s.entries()) arr.push_back({{"alpha", alpha.str()}, {"mult", m}});
    return arr;
}

json report_to_json(const Polynomial& f, const Analysis& a, bool with_spectrum,
                    const std::optional<std::string>& name) {
    json j;
    if (name) j["name"] = *name;
    j["polynomial"] = f.str();
    j["variables"] = f.variables();
    if (a.ws)
        j["weights"] = {{"a", a.ws->a()}, {"d", a.ws->d()}};
    else
        j["weights"] = nullptr;
    j["n"] = a.report.n;
    j["mu"] = a.report.mu;
    if (with_spectrum) j["spectrum"] = spectrum_to_json(a.spectrum);
    j["alpha_tilde"] = a.report.alpha_tilde ? json(a.report.alpha_tilde->str()) : json(nullptr);
    j["s"] = a.report.s;
    j["max_du_bois"] = a.report.smooth ? json(nullptr) : json(a.report.max_du_bois);
    j["max_rational"] = a.report.smooth ? json(nullptr) : json(a.report.max_rational);
    j["liminal_k"] = a.report.liminal_k ? json(*a.report.liminal_k) : json(nullptr);
    j["flags"] = {{"smooth", a.report.smooth},
                  {"odp", a.report.odp},
                  {"outside_paper_convention", a.report.outside_paper_convention}};
    json checks = json::array();
    for (const auto& c : a.checks)
        checks.push_back({{"id", c.check_id}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    return j;
}

struct PolyOptions {
    std::string poly;
    std::string vars;
    std::string weights;
    long long degree = -1;
};

Analysis analyze_options(const PolyOptions& opt, Polynomial& out_f) {
    std::vector<std::string> vars = split_csv(opt.vars);
    out_f = parse_polynomial(opt.poly, vars);
    if (opt.weights.empty() != (opt.degree < 0))
        throw InputError("--weights and --degree must be given together");
    if (!opt.weights.empty()) {
        try {
            WeightSystem ws(split_csv_longs(opt.weights), opt.degree);
            return analyze(out_f, ws);
        } catch (const SmoothPoint&) {
            return smooth_analysis(static_cast<long long>(vars.size()) - 1);
        }
    }
    return analyze(out_f);
}

int cmd_compute(const PolyOptions& opt, bool as_json, bool with_spectrum) {
    Polynomial f({"x"});
    Analysis a = analyze_options(opt, f);
    maybe_inject_fault(a);
    bool checks_ok = std::all_of(a.checks.begin(), a.checks.end(),
                                 [](const PropertyOutcome& c) { return c.passed; });
    if (as_json)
        std::cout << report_to_json(f, a, with_spectrum, std::nullopt).dump(2) << "\n";
    else
        std::cout << render_human(f, a, with_spectrum);
    return checks_ok ? 0 : 1;
}

struct RecordResult {
    bool ok = true;
    std::string text;  // human lines, pre-rendered
    json doc;
};

RecordResult process_record(const CorpusRecord& rec) {
    RecordResult res;
    std::vector<std::string> problems;

    Polynomial f = parse_polynomial(rec.poly, rec.vars);
    Analysis a = rec.weights ? [&] {
        try {
            WeightSystem ws(*rec.weights, *rec.degree);
            return analyze(f, ws);
        } catch (const SmoothPoint&) {
            return smooth_analysis(static_cast<long long>(rec.vars.size()) - 1);
        }
    }()
                             : analyze(f);

    for (const auto& c : a.checks)
        if (!c.passed) problems.push_back("check " + c.check_id + ": " + c.detail);

    if (rec.expect) {
        const auto& e = *rec.expect;
        auto mismatch = [&](const std::string& field, const std::string& want,
                            const std::string& got) {
            problems.push_back("expect " + field + ": want " + want + ", got " + got);
        };
        if (e.mu && *e.mu != a.report.mu)
            mismatch("mu", std::to_string(*e.mu), std::to_string(a.report.mu));
        if (e.alpha_tilde) {
            if (!a.report.alpha_tilde)
                mismatch("alpha_tilde", e.alpha_tilde->str(), "undefined");
            else if (!(*e.alpha_tilde == *a.report.alpha_tilde))
                mismatch("alpha_tilde", e.alpha_tilde->str(), a.report.alpha_tilde->str());
        }
        if (e.s && *e.s != a.report.s) {
            mismatch("s", "[" + join_longs(*e.s) + "]", "[" + join_longs(a.report.s) + "]");
        }
        if (e.max_du_bois && *e.max_du_bois != a.report.max_du_bois)
            mismatch("max_du_bois", std::to_string(*e.max_du_bois),
                     std::to_string(a.report.max_du_bois));
        if (e.max_rational && *e.max_rational != a.report.max_rational)
            mismatch("max_rational", std::to_string(*e.max_rational),
                     std::to_string(a.report.max_rational));
        if (e.liminal_given) {
            std::string want = e.liminal_k ? std::to_string(*e.liminal_k) : "none";
            std::string got = a.report.liminal_k ? std::to_string(*a.report.liminal_k) : "none";
            if (want != got) mismatch("liminal_k", want, got);
        }
    }

    // oracle triangle: engine vs product oracle always, vs the Brieskorn-Pham
    // oracle when the record has that shape
    if (a.ws) {
        Spectrum product = spectrum_oracle_product(*a.ws);
        if (!(product == a.spectrum))
            problems.push_back("oracle: product generating function disagrees with engine");
        if (auto c = brieskorn_pham_exponents(f)) {
            Spectrum bp = spectrum_oracle_brieskorn_pham(*c, a.ws->n());
            if (!(bp == a.spectrum))
                problems.push_back("oracle: Brieskorn-Pham enumeration disagrees with engine");
        }
    }

    res.ok = problems.empty();
    std::ostringstream os;
    if (res.ok) {
        os << "ok " << rec.name << " mu=" << a.report.mu;
        if (a.report.alpha_tilde) os << " alpha_tilde=" << a.report.alpha_tilde->str();
        os << " checks=" << a.checks.size() << "/" << a.checks.size() << "\n";
    } else {
        os << "FAIL " << rec.name << "\n";
        for (const auto& p : problems) os << "  " << p << "\n";
    }
    res.text = os.str();
    res.doc = report_to_json(f, a, true, rec.name);
    res.doc["ok"] = res.ok;
    if (!problems.empty()) res.doc["problems"] = problems;
    return res;
}

int cmd_verify(const std::string& corpus_path, bool as_json, int jobs) {
    std::ifstream in(corpus_path);
    if (!in) throw CorpusError("cannot open " + corpus_path);
    std::vector<CorpusRecord> records = load_corpus(in);
    if (records.empty()) throw CorpusError("no records in " + corpus_path);

    std::vector<RecordResult> results(records.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(records.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < records.size(); ++i) results[i] = process_record(records[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr first_error;
        std::mutex error_mutex;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= records.size()) return;
                    try {
                        results[i] = process_record(records[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::size_t failures = 0;
    for (const auto& r : results) failures += r.ok ? 0 : 1;
    if (as_json) {
        json doc;
        doc["records"] = json::array();
        for (auto& r : results) doc["records"].push_back(std::move(r.doc));
        doc["total"] = records.size();
        doc["failures"] = failures;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : results) std::cout << r.text;
        std::cout << records.size() << " records, " << failures << " failure"
                  << (failures == 1 ? "" : "s") << "\n";
    }
    return failures == 0 ? 0 : 1;
}

std::optional<std::pair<Rational, std::pair<long long, long long>>> first_spectrum_difference(
    const Spectrum& a, const Spectrum& b) {
    if (a.n() != b.n()) return std::make_pair(Rational(0), std::make_pair(a.n(), b.n()));
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first))
            return std::make_pair(ia->first, std::make_pair(ia->second, 0LL));
        if (ia == a.entries().end() || ib->first < ia->first)
            return std::make_pair(ib->first, std::make_pair(0LL, ib->second));
        if (ia->second != ib->second)
            return std::make_pair(ia->first, std::make_pair(ia->second, ib->second));
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

int cmd_oracle_compare(const std::string& bp, const PolyOptions& opt, bool as_json) {
    std::vector<std::pair<std::string, Spectrum>> spectra;

    std::optional<WeightSystem> ws;
    if (!opt.weights.empty() || opt.degree >= 0) {
        if (opt.weights.empty() || opt.degree < 0)
            throw InputError("--weights and --degree must be given together");
        ws = WeightSystem(split_csv_longs(opt.weights), opt.degree);
    }

    if (!bp.empty()) {
        std::vector<long long> c = split_csv_longs(bp);
        spectra.emplace_back("brieskorn-pham",
                             spectrum_oracle_brieskorn_pham(c, static_cast<long long>(c.size()) - 1));
        if (!ws) {
            long long l = 1;
            for (long long ci : c) l = std::lcm(l, ci);
            std::vector<long long> a;
            for (long long ci : c) a.push_back(l / ci);
            ws = WeightSystem(std::move(a), l);
        }
    }

    std::optional<Polynomial> f;
    if (!opt.poly.empty()) {
        if (opt.vars.empty()) throw InputError("--poly requires --vars");
        f = parse_polynomial(opt.poly, split_csv(opt.vars));
        if (!ws) ws = infer_weights(*f);
    }
    if (!ws) throw InputError("need --bp, --weights/--degree, or --poly");

    spectra.emplace_back("product", spectrum_oracle_product(*ws));
    if (f) spectra.emplace_back("engine", compute_spectrum(milnor_data(*f, *ws)));

    bool equal = true;
    std::string diff;
    for (std::size_t i = 1; i < spectra.size() && equal; ++i) {
        auto d = first_spectrum_difference(spectra[0].second, spectra[i].second);
        if (d) {
            equal = false;
            diff = "first difference between " + spectra[0].first + " and " + spectra[i].first +
                   " at alpha = " + d->first.str() + ": " + std::to_string(d->second.first) +
                   " vs " + std::to_string(d->second.second);
        }
    }

    if (as_json) {
        json j;
        for (const auto& [name, s] : spectra) j[name] = spectrum_to_json(s);
        j["equal"] = equal;
        if (!equal) j["difference"] = diff;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [name, s] : spectra)
            std::cout << name << " = " << s.str() << "\n";
        std::cout << (equal ? "spectra agree" : diff) << "\n";
    }
    return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra and Hodge-theoretic invariants of isolated "
                 "quasi-homogeneous hypersurface singularities"};
    app.require_subcommand(1);

    PolyOptions opt;
    bool as_json = false;
    std::string corpus_path;
    std::string bp;
    int jobs = 1;

    auto add_poly_flags = [&](CLI::App* cmd, bool poly_required) {
        auto* p = cmd->add_option("--poly", opt.poly, "polynomial expression");
        if (poly_required) p->required();
        cmd->add_option("--vars", opt.vars, "comma-separated variable names");
        cmd->add_option("--weights", opt.weights, "comma-separated positive integer weights");
        cmd->add_option("--degree", opt.degree, "weighted degree");
        cmd->add_flag("--json", as_json, "structured JSON output");
    };

    auto* compute = app.add_subcommand("compute", "full invariant report incl. spectrum");
    add_poly_flags(compute, true);
    compute->callback([&] {
        if (opt.vars.empty()) throw InputError("--poly requires --vars");
    });

    auto* classify_cmd = app.add_subcommand("classify", "invariant report without the spectrum");
    add_poly_flags(classify_cmd, true);
    classify_cmd->callback([&] {
        if (opt.vars.empty()) throw InputError("--poly requires --vars");
    });

    auto* verify = app.add_subcommand("verify", "run the whole pipeline over a corpus file");
    verify->add_option("--corpus", corpus_path, "JSON-lines corpus file")->required();
    verify->add_flag("--json", as_json, "structured JSON output");
    verify->add_option("--jobs", jobs, "worker threads (records stay in corpus order)");

    auto* oracle = app.add_subcommand("oracle-compare", "compare oracle and engine spectra");
    oracle->add_option("--bp", bp, "Brieskorn-Pham exponents c_1,..,c_{n+1}");
    add_poly_flags(oracle, false);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            std::cerr << "error: usage: " << e.what() << "\n";
            return 2;
        }
        if (compute->parsed()) return cmd_compute(opt, as_json, true);
        if (classify_cmd->parsed()) return cmd_compute(opt, as_json, false);
        if (verify->parsed()) return cmd_verify(corpus_path, as_json, jobs);
        if (oracle->parsed()) return cmd_oracle_compare(bp, opt, as_json);
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: syntax: " << e.what() << "\n";
        return 2;
    } catch (const UnknownVariable& e) {
        std::cerr << "error: unknown-variable: " << e.what() << "\n";
        return 2;
    } catch (const ConstantTerm& e) {
        std::cerr << "error: constant-term: " << e.what() << "\n";
        return 2;
    } catch (const NotQuasiHomogeneous& e) {
        std::cerr << "error: not-quasi-homogeneous: " << e.what() << "\n";
        return 2;
    } catch (const AmbiguousWeights& e) {
        std::cerr << "error: ambiguous-weights: " << e.what() << "\n";
        return 2;
    } catch (const CorpusError& e) {
        std::cerr << "error: corpus: " << e.what() << "\n";
        return 2;
    } catch (const NonIsolatedSingularity& e) {
        std::cerr << "error: non-isolated: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 2;
    }
}
