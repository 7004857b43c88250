// Command-line front end: solve quadruples, expand n-term identities,
// verify catalogs, and reproduce the bundled reference suite.
//
// Exit codes: 0 success, 1 verification failure, 2 search exhaustion,
// 3 usage or data error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biquad/catalog.hpp"
#include "biquad/compose.hpp"
#include "biquad/curve.hpp"
#include "biquad/derive.hpp"
#include "biquad/numeric.hpp"
#include "biquad/pointsearch.hpp"
#include "biquad/reference.hpp"

namespace {

using namespace biquad;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 3;

Registry load_registry_lenient() {
    if (const char* env = std::getenv("BIQUAD_REGISTRY")) return Registry::load_file(env);
    const std::string path = registry_default_path();
    if (!std::filesystem::exists(path)) return Registry{};
    return Registry::load_file(path);
}

struct SolveOptions {
    Rational h;
    std::optional<Rational> t;
    std::optional<int> multiple;
    BigInt search_num = 2000;
    BigInt search_den = 4;
    std::size_t scale_tries = 12;
    int multiple_tries = 6;
};

struct Solved {
    Quadruple quad;  // for the target h
    Rational t;
    Point generator;
    int multiple;
};

// Walk scales, then candidate base points (registry first, bounded search
// otherwise), then multiples, until a nontrivial quadruple for the target h
// appears.  Explicit --t / --multiple pin their loops to a single value.
Solved solve_target(const SolveOptions& opt, const Registry& registry) {
    if (opt.h.is_zero()) throw DegenerateParameter("h=0 admits no curve for any scale t");

    std::vector<Rational> scales =
        opt.t ? std::vector<Rational>{*opt.t} : scale_sequence(opt.scale_tries);
    for (const Rational& t : scales) {
        const ScalePlan plan(opt.h, t);
        std::unique_ptr<Curve> curve;
        try {
            curve = std::make_unique<Curve>(plan.effective_h);
        } catch (const DegenerateParameter&) {
            if (opt.t) throw;  // the user asked for this exact scale
            continue;
        }

        std::vector<Point> candidates = registry.generators(plan.effective_h);
        if (candidates.empty()) {
            SearchBounds bounds;
            bounds.max_numerator = opt.search_num;
            bounds.max_denominator_base = opt.search_den;
            candidates = search_points(*curve, bounds);
        }

        for (const Point& base : candidates) {
            if (base.is_infinity() || base.y().is_zero()) continue;
            std::vector<int> multiples;
            if (opt.multiple)
                multiples.push_back(*opt.multiple);
            else
                for (int n = 1; n <= opt.multiple_tries; ++n) multiples.push_back(n);
            for (int n : multiples) {
                try {
                    const Point pt = scalar_mul(*curve, n, base);
                    Quadruple quad = rescale(quadruple_from_point(*curve, pt), plan);
                    if (quad.trivial()) continue;
                    return Solved{std::move(quad), t, base, n};
                } catch (const TrivialQuadruple&) {
                    continue;
                } catch (const DegeneratePoint&) {
                    continue;
                }
            }
        }
    }
    throw SearchExhausted("no usable point found for h=" + opt.h.str() +
                          " under the configured scales, bounds, and multiples");
}

// All-positive rendering of A^4 + h*B^4 = C^4 + h*D^4 with h = v/u; a
// negative h moves the B/D terms across.
std::string quadruple_equation(const Quadruple& q) {
    const BigInt u = q.h.den();
    const BigInt v = q.h.num();
    auto term = [](const BigInt& w, const BigInt& x) {
        return (w == 1 ? std::string() : w.str() + "*") + x.str() + "^4";
    };
    if (v > 0)
        return term(u, q.a()) + "+" + term(v, q.b()) + "=" + term(u, q.c()) + "+" +
               term(v, q.d());
    return term(u, q.a()) + "+" + term(-v, q.d()) + "=" + term(u, q.c()) + "+" +
           term(-v, q.b());
}

int cmd_solve(const SolveOptions& opt) {
    const Registry registry = load_registry_lenient();
    const Solved s = solve_target(opt, registry);
    const WeightedQuadruple check =
        as_weighted(s.quad, s.quad.h.den(),
                    s.quad.h.num());  // re-verifies the weighted identity exactly
    (void)check;
    std::cout << "quadruple=" << s.quad.str() << " h=" << s.quad.h.str()
              << " t=" << s.t.str() << " point=" << s.generator.str()
              << " multiple=" << s.multiple << "\n";
    std::cout << quadruple_equation(s.quad) << "\n";
    return kExitOk;
}

struct ExpandOptions {
    SolveOptions solve;
    int n = 0;
    bool cancel = false;
    std::string dec_spec;
    BigInt bound = 8;
    std::string catalog = "identities.jsonl";
};

int cmd_expand(const ExpandOptions& opt) {
    const Registry registry = load_registry_lenient();

    std::optional<Decomposition> dec;
    if (!opt.dec_spec.empty()) {
        dec = Decomposition::parse(opt.dec_spec);
        if (dec->value() != opt.solve.h)
            throw DomainError("--dec sums to " + dec->value().str() + ", not h=" +
                              opt.solve.h.str());
        if (opt.n && opt.n != static_cast<int>(dec->size()) + 1)
            throw DomainError("--n disagrees with the --dec term count");
    } else {
        if (opt.n < 2) throw DomainError("--n N (N >= 2) is required without --dec");
        const auto found = decompose(opt.solve.h, opt.n, opt.bound);
        if (found.empty()) {
            std::cerr << "no decomposition of h=" << opt.solve.h.str() << " into "
                      << opt.n - 1 << " signed fourth powers under bound "
                      << opt.bound.str() << "\n";
            return kExitExhausted;
        }
        // Distinct bases give identities without systematic repeats; fall back
        // to the first hit otherwise.
        for (const auto& candidate : found)
            if (candidate.distinct_bases()) {
                dec = candidate;
                break;
            }
        if (!dec) dec = found.front();
    }

    const Solved s = solve_target(opt.solve, registry);
    const Identity id = dec->weighted() ? expand_weighted(s.quad, *dec)
                                        : expand_identity(s.quad, *dec, opt.cancel);
    std::cout << id.str() << "\n";

    if (!opt.catalog.empty()) {
        append_record(opt.catalog,
                      make_record(id, s.quad.h, *dec, s.generator, s.multiple, opt.cancel));
        std::cerr << "appended to " << opt.catalog << "\n";
    }
    return kExitOk;
}

std::vector<BigInt> parse_int_list(const std::string& csv) {
    std::vector<BigInt> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t end = csv.find(',', pos);
        if (end == std::string::npos) end = csv.size();
        const Rational v = Rational::parse(csv.substr(pos, end - pos));
        if (!v.is_integer()) throw ParseError("expected integer term: " + v.str());
        out.push_back(v.num());
        pos = end + 1;
        if (end == csv.size()) break;
    }
    return out;
}

int cmd_verify(const std::string& file, const std::string& left, const std::string& right,
               const std::string& lweights, const std::string& rweights) {
    if (!file.empty()) {
        const auto records = read_catalog(file);
        bool all_ok = true;
        for (std::size_t i = 0; i < records.size(); ++i) {
            Verdict v;
            std::string note;
            try {
                v = verify_record(records[i]);
            } catch (const Error& e) {
                v = Verdict{false, false};
                note = std::string(" (") + e.what() + ")";
            }
            std::cout << "record " << (i + 1) << ": "
                      << (v.valid ? (v.nontrivial ? "valid, nontrivial" : "valid, TRIVIAL")
                                  : "INVALID")
                      << note << "\n";
            all_ok = all_ok && v.valid && v.nontrivial;
        }
        std::cout << records.size() << " records\n";
        return all_ok ? kExitOk : kExitVerifyFailed;
    }

    if (left.empty() || right.empty())
        throw DomainError("verify needs a catalog file or --left/--right term lists");
    const auto l = parse_int_list(left);
    const auto r = parse_int_list(right);
    std::vector<BigInt> lw, rw;
    if (!lweights.empty()) lw = parse_int_list(lweights);
    if (!rweights.empty()) rw = parse_int_list(rweights);
    const Verdict v = verify_identity(l, r, lw, rw);
    std::cout << (v.valid ? "valid" : "INVALID") << ", "
              << (v.nontrivial ? "nontrivial" : "trivial") << "\n";
    return v.valid ? kExitOk : kExitVerifyFailed;
}

int cmd_reproduce(std::optional<int> only) {
    const Registry registry = Registry::load_file(registry_default_path());
    const auto results = run_reference_checks(registry, only);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
        if (!r.pass) {
            ++failed;
            std::cout << "    " << r.detail << "\n";
        }
    }
    std::cout << results.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equal sums of fourth powers via elliptic curves"};
    app.require_subcommand(1);

    std::string h_text, t_text, dec_spec, catalog = "identities.jsonl";
    std::string verify_file, verify_left, verify_right, verify_lw, verify_rw;
    std::string search_num = "2000", search_den = "4", bound = "8";
    int n = 0, multiple = 0, only = 0;
    bool cancel = false;

    CLI::App* solve = app.add_subcommand("solve", "derive a quadruple A^4+h*B^4=C^4+h*D^4");
    solve->add_option("--h", h_text, "target h as num/den")->required();
    solve->add_option("--t", t_text, "scale: solve via the curve for h*t^4");
    solve->add_option("--multiple", multiple, "use this multiple of the base point");
    solve->add_option("--search-num", search_num, "point search numerator bound");
    solve->add_option("--search-den", search_den, "point search denominator-base bound");

    CLI::App* expand = app.add_subcommand("expand", "expand into an n-term identity");
    expand->add_option("--h", h_text, "target h as num/den")->required();
    expand->add_option("--n", n, "terms per side");
    expand->add_flag("--cancel", cancel, "cancel equal terms across sides");
    expand->add_option("--dec", dec_spec, "decomposition, e.g. '+5/2^4,-1/2^4,-4/2^4'");
    expand->add_option("--t", t_text, "scale for the quadruple derivation");
    expand->add_option("--multiple", multiple, "use this multiple of the base point");
    expand->add_option("--bound", bound, "decomposition search bound");
    expand->add_option("--search-num", search_num, "point search numerator bound");
    expand->add_option("--search-den", search_den, "point search denominator-base bound");
    expand->add_option("--catalog", catalog, "JSONL catalog to append to ('' disables)");

    CLI::App* verify = app.add_subcommand("verify", "check identities exactly");
    verify->add_option("file", verify_file, "JSONL catalog of identity records");
    verify->add_option("--left", verify_left, "comma-separated left terms");
    verify->add_option("--right", verify_right, "comma-separated right terms");
    verify->add_option("--left-weights", verify_lw, "weights for the left terms");
    verify->add_option("--right-weights", verify_rw, "weights for the right terms");

    CLI::App* reproduce = app.add_subcommand("reproduce", "re-derive the bundled reference suite");
    reproduce->add_option("--only", only, "restrict to one example number (1-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed() || expand->parsed()) {
            SolveOptions sopt;
            sopt.h = Rational::parse(h_text);
            if (!t_text.empty()) sopt.t = Rational::parse(t_text);
            if (multiple != 0) {
                if (multiple < 0) throw DomainError("--multiple must be positive");
                sopt.multiple = multiple;
            }
            sopt.search_num = BigInt(search_num);
            sopt.search_den = BigInt(search_den);
            if (solve->parsed()) return cmd_solve(sopt);
            ExpandOptions eopt;
            eopt.solve = sopt;
            eopt.n = n;
            eopt.cancel = cancel;
            eopt.dec_spec = dec_spec;
            eopt.bound = BigInt(bound);
            eopt.catalog = catalog;
            return cmd_expand(eopt);
        }
        if (verify->parsed())
            return cmd_verify(verify_file, verify_left, verify_right, verify_lw, verify_rw);
        if (reproduce->parsed())
            return cmd_reproduce(only ? std::optional<int>(only) : std::nullopt);
    } catch (const SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const TrivialQuadruple& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const TrivialIdentity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
