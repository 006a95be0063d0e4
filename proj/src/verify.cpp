#include "tropfrieze/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "tropfrieze/finite_type.hpp"

namespace tropfrieze {

namespace {

const std::vector<std::string> kClosureTypes{"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
const std::vector<std::string> kCoreTypes{"A2", "A3", "B2", "G2"};

struct Partial {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failed;
    std::vector<std::string> info;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (failed.size() < 20) failed.push_back(what);
        }
    }
    // Runs body; an exception counts as a failed check.
    void guarded(const std::string& what, const std::function<bool()>& body) {
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = std::string(": ") + e.what();
        }
        check(ok, what + why);
    }
};

IntVec random_vec(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
    std::uniform_int_distribution<Int> d(lo, hi);
    IntVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

std::string label(const std::string& type, const std::string& what) { return type + " " + what; }

Int max_h(const RootSystemData& rd) { return *std::max_element(rd.h.begin(), rd.h.end()); }

RationalFunction parse_free(std::size_t n, std::initializer_list<std::pair<Exponent, int>> num,
                            std::initializer_list<std::pair<Exponent, int>> den) {
    LaurentPoly p(n), q(n);
    for (const auto& [e, c] : num) p += LaurentPoly::monomial(e, c);
    for (const auto& [e, c] : den) q += LaurentPoly::monomial(e, c);
    return rf_reduce(p, q);
}

Partial rank_two_y_suite() {
    Partial out;
    const IntMatrix b{{0, -1}, {1, 0}};
    const MutationMatrix mb(b);
    const ExchangeGraph g = enumerate_exchange_graph(SeedKind::Y, mb);
    out.check(g.variables.size() == 10, "Y-exchange graph has " + std::to_string(g.variables.size()) + " variables");

    auto rf = [](std::initializer_list<std::pair<Exponent, int>> num, std::initializer_list<std::pair<Exponent, int>> den) {
        return parse_free(2, num, den);
    };
    const std::vector<std::vector<RationalFunction>> chain{
        {rf({{{-1, 0}, 1}}, {{{0, 0}, 1}}), rf({{{0, 1}, 1}, {{1, 1}, 1}}, {{{0, 0}, 1}})},
        {rf({{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}, {{{1, 0}, 1}}), rf({{{0, 0}, 1}}, {{{0, 1}, 1}, {{1, 1}, 1}})},
        {rf({{{1, 0}, 1}}, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}), rf({{{0, 0}, 1}, {{0, 1}, 1}}, {{{1, 1}, 1}})},
        {rf({{{0, 0}, 1}}, {{{0, 1}, 1}}), rf({{{1, 1}, 1}}, {{{0, 0}, 1}, {{0, 1}, 1}})},
        {rf({{{0, 1}, 1}}, {{{0, 0}, 1}}), rf({{{1, 0}, 1}}, {{{0, 0}, 1}})},
    };
    Seed s = root_seed(SeedKind::Y, mb);
    for (std::size_t step = 0; step < chain.size(); ++step) {
        s = mutate_Y_seed(s, step % 2);
        out.check(s.cluster == chain[step], "Y chain step " + std::to_string(step + 1));
    }

    const std::vector<RationalFunction> expected_global{
        rf({{{1, 0}, 1}}, {{{0, 0}, 1}}),
        rf({{{0, 1}, 1}, {{1, 1}, 1}}, {{{0, 0}, 1}}),
        rf({{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}, {{{1, 0}, 1}}),
        rf({{{0, 0}, 1}, {{0, 1}, 1}}, {{{1, 1}, 1}}),
        rf({{{0, 0}, 1}}, {{{0, 1}, 1}}),
    };
    std::size_t laurent_count = 0, global_count = 0;
    for (const Seed& seed : g.seeds)
        for (std::size_t i = 0; i < 2; ++i) {
            const RationalFunction& v = seed.cluster[i];
            bool universal = true;
            for (const Seed& other : g.seeds)
                if (!express_in_cluster(SeedKind::Y, b, other.address, v).is_laurent()) universal = false;
            IntVec e(2, 0);
            e[i] = 1;
            const bool global = is_global_Y_monomial(mb, seed.address, e);
            const bool listed = std::find(expected_global.begin(), expected_global.end(), v) != expected_global.end();
            laurent_count += universal;
            global_count += global;
            out.check(universal == listed, "universal Laurent test of " + v.to_string("y"));
            out.check(global == listed, "global Y-monomial test of " + v.to_string("y"));
        }
    out.check(laurent_count == 5, "universally Laurent count " + std::to_string(laurent_count));
    out.check(global_count == 5, "global count " + std::to_string(global_count));
    out.info.push_back("Y-variables " + std::to_string(g.variables.size()) + ", global " + std::to_string(global_count));
    return out;
}

Partial closure_suite(const std::string& type) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const RootSystemData& rd = root_data(a);
    const ExchangeGraph g = enumerate_exchange_graph(SeedKind::A, B_of(a).transpose());
    const std::size_t expected = a.rank() + rd.positive_roots.size();
    out.check(g.variables.size() == expected, label(type, "cluster variables " + std::to_string(g.variables.size()) +
                                                              " vs r + |Phi|/2 = " + std::to_string(expected)));
    out.check(rd.domain_size() == expected, label(type, "fundamental domain size"));
    out.info.push_back(type + " variables " + std::to_string(g.variables.size()));
    return out;
}

Partial periodicity_suite(const std::string& type, std::size_t trials, std::uint64_t seed) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const RootSystemData& rd = root_data(a);
    const Int m1 = 2 * max_h(rd) + 4;
    std::mt19937_64 rng(seed);
    std::vector<FriezeFunction> samples;
    for (std::size_t t = 0; t < trials; ++t) {
        samples.emplace_back(FriezeKind::TropicalFrieze, a, random_vec(rng, a.rank(), -3, 3));
        samples.emplace_back(FriezeKind::ClusterAdditive, a, random_vec(rng, a.rank(), -3, 3));
    }
    const PeriodicityReport rep = verify_periodicity(a, -2, m1, samples, true);
    out.checks += rep.checks;
    out.failures += rep.violations.size();
    for (std::size_t i = 0; i < std::min<std::size_t>(rep.violations.size(), 10); ++i)
        out.failed.push_back(label(type, rep.violations[i]));
    return out;
}

Partial realization_suite(const std::string& type, std::size_t trials, std::uint64_t seed) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const IntMatrix b = B_of(a).matrix();
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const IntVec dv = random_vec(rng, a.rank(), -3, 3), rv = random_vec(rng, a.rank(), -3, 3);
        out.guarded(label(type, "frieze readback " + vec_to_string(dv)), [&] {
            const TropPoint delta = TropPoint::on_A(b.transpose(), dv);
            const FriezeTable direct = point_table(delta, -6, 6);
            IntVec s(a.rank());
            for (std::size_t i = 0; i < a.rank(); ++i) s[i] = direct.at(i, 0);
            const FriezeFunction rec(FriezeKind::TropicalFrieze, a.transpose(), s);
            return rec.window(-6, 6) == direct && table_satisfies(FriezeKind::TropicalFrieze, a.transpose(), direct);
        });
        out.guarded(label(type, "cluster-additive readback " + vec_to_string(rv)), [&] {
            const TropPoint rho = TropPoint::on_Y(b, rv);
            const FriezeTable direct = point_table(rho, -6, 6);
            IntVec s(a.rank());
            for (std::size_t i = 0; i < a.rank(); ++i) s[i] = direct.at(i, 0);
            const FriezeFunction rec(FriezeKind::ClusterAdditive, a, s);
            return rec.window(-6, 6) == direct && table_satisfies(FriezeKind::ClusterAdditive, a, direct);
        });
    }
    return out;
}

Partial pairing_suite(const std::string& type, std::size_t trials, std::uint64_t seed) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const IntMatrix b = B_of(a).matrix();
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const TropPoint delta = TropPoint::on_A(b.transpose(), random_vec(rng, a.rank(), -3, 3));
        const TropPoint rho = TropPoint::on_Y(b, random_vec(rng, a.rank(), -3, 3));
        const std::string tag = vec_to_string(delta.anchor_coords()) + " " + vec_to_string(rho.anchor_coords());
        out.guarded(label(type, "pairing routes " + tag), [&] {
            pairing(a, delta, rho);
            return true;
        });
        out.guarded(label(type, "y_from_delta " + tag),
                    [&] { return y_from_delta(a, delta).value == mono_from_gvector_Y(delta).value; });
        out.guarded(label(type, "x_from_rho " + tag),
                    [&] { return x_from_rho(a, rho).value == mono_from_gvector_A(rho).value; });
    }
    return out;
}

Partial decomposition_suite(const std::string& type, std::size_t trials, std::uint64_t seed) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const RootSystemData& rd = root_data(a);
    const Int hm = max_h(rd);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const IntVec s = random_vec(rng, a.rank(), -3, 3);
        out.guarded(label(type, "hammock decomposition of slice " + vec_to_string(s)), [&] {
            decompose_hammocks(FriezeFunction(FriezeKind::ClusterAdditive, a, s));
            return true;
        });
    }
    for (const GridPoint& p : rd.fundamental_domain()) {
        const FriezeFunction h = hammock(a, p.i, p.m);
        out.check(h.satisfies(FriezeKind::TropicalFrieze, -hm - 3, 2 * hm + 4),
                  label(type, "hammock (" + std::to_string(p.i + 1) + "," + std::to_string(p.m) + ") tropical frieze"));
    }
    return out;
}

Partial duality_suite(const std::string& type) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const DualityReport rep = d_duality_check(a);
    out.checks += rep.pairs;
    out.failures += rep.violations.size();
    for (std::size_t i = 0; i < std::min<std::size_t>(rep.violations.size(), 10); ++i)
        out.failed.push_back(label(type, rep.violations[i]));
    const IntMatrix b = B_of(a).matrix();
    const std::size_t r = a.rank();
    const auto domain = root_data(a).fundamental_domain();
    for (const GridPoint& p : domain)
        for (const GridPoint& q : domain) {
            const TreeAddress tp = canonical_address(r, p.i, p.m);
            const RationalFunction z = seed_at(SeedKind::A, MutationMatrix(b), canonical_address(r, q.i, q.m)).cluster[q.i];
            out.guarded(label(type, "denominator readback"), [&] {
                return d_compat_degree(TropSpace::A, b, tp, p.i, z) == denominator_exponent(SeedKind::A, b, tp, p.i, z);
            });
        }
    return out;
}

Partial fpoly_suite(const std::string& type) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const RootSystemData& rd = root_data(a);
    const MutationMatrix b = B_of(a);
    const auto F = Fim_recursion(a, max_h(rd));
    for (const GridPoint& p : rd.fundamental_domain()) {
        const GCFData gcf = extract_gcf(b, canonical_address(a.rank(), p.i, p.m));
        out.check(gcf.f[p.i] == F.at(p), label(type, "F(" + std::to_string(p.i + 1) + "," + std::to_string(p.m) + ")"));
    }
    const ExchangeGraph g = enumerate_exchange_graph(SeedKind::A, b);
    for (const Seed& s : g.seeds) {
        out.guarded(label(type, "separation at " + s.address.to_string()), [&] { return separation_check(b, s.address); });
        const GCFData gcf = extract_gcf(b, s.address);
        out.check(gcf.g * matrix_at(b.matrix(), s.address) == b.matrix() * gcf.c,
                  label(type, "G_t B_t = B C_t at " + s.address.to_string()));
        bool positive = true;
        for (const auto& f : gcf.f)
            if (f.coefficient(Exponent(a.rank(), 0)) != 1 || !f.all_coefficients_positive()) positive = false;
        out.check(positive, label(type, "F-polynomial positivity at " + s.address.to_string()));
    }
    return out;
}

Partial shift_suite(const std::string& type, std::size_t trials, std::uint64_t seed) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const IntMatrix b = B_of(a).matrix();
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const IntVec s = random_vec(rng, a.rank(), -5, 5);
        const FriezeFunction k(FriezeKind::ClusterAdditive, a, s);
        out.check(slice_step(a, s) == k.slice(1), label(type, "slice step " + vec_to_string(s)));
        out.check(slice_step_back(a, s) == k.slice(-1), label(type, "slice step back " + vec_to_string(s)));
        out.check(EA_invert(a, PLSign::Plus, EA_apply(a, PLSign::Plus, s)) == s &&
                      EA_invert(a, PLSign::Minus, EA_apply(a, PLSign::Minus, s)) == s,
                  label(type, "E round trip " + vec_to_string(s)));
        const TropPoint rho = TropPoint::on_Y(b, s);
        out.guarded(label(type, "shift law " + vec_to_string(s)), [&] {
            const FriezeFunction shifted_point = k_from_trop_point(shift_trop(rho));
            const FriezeFunction shifted_function = shift(k_from_trop_point(rho));
            return shifted_point.equal_on(shifted_function, -6, 6);
        });
    }
    return out;
}

Partial admissibility_suite(const std::string& type, std::size_t depth) {
    Partial out;
    const CartanMatrix a = cartan_by_name(type);
    const std::size_t r = a.rank();
    const IntMatrix b = B_of(a).matrix();
    const ExchangeGraph g = enumerate_exchange_graph(SeedKind::A, MutationMatrix(b.transpose()));
    std::set<std::string> seen;
    for (const Seed& s : g.seeds) {
        for (Int code = 1; code < 9; ++code) {
            IntVec m(r, 0);
            Int c = code;
            for (std::size_t i = 0; i < r; ++i) {
                m[i] = c % 3;
                c /= 3;
            }
            RationalFunction x = RationalFunction::constant(r, 1);
            for (std::size_t i = 0; i < r; ++i) x = x * s.cluster[i].pow(m[i]);
            if (!seen.insert(x.to_string()).second) continue;
            const TropPoint rho = g_vector_of_cluster_monomial(b, s.address, m);
            out.guarded(label(type, "cluster monomial " + x.to_string() + " admissible"), [&] {
                const AdmissibilityReport rep = check_admissible_A(x, rho, depth);
                return rep.verdict == Verdict::Yes && rep.closed;
            });
        }
    }
    const auto& vars = g.variables;
    for (std::size_t p = 0; p < vars.size(); ++p)
        for (std::size_t q = p + 1; q < vars.size(); ++q) {
            const RationalFunction sum = vars[p] + vars[q];
            out.guarded(label(type, "sum " + sum.to_string() + " rejected"), [&] {
                Int total = 1;
                for (std::size_t i = 0; i < r; ++i) total *= 5;
                for (Int code = 0; code < total; ++code) {
                    IntVec coords(r, 0);
                    Int c = code;
                    for (std::size_t i = 0; i < r; ++i) {
                        coords[i] = c % 5 - 2;
                        c /= 5;
                    }
                    if (check_admissible_A(sum, TropPoint::on_Y(b, coords), depth).verdict != Verdict::No) return false;
                }
                return true;
            });
        }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"remark-not-in", "closure", "periodicity", "realization", "pairing", "decomposition",
            "duality",       "fpoly",   "shift",       "admissibility"};
}

std::vector<std::string> default_suite_types(const std::string& suite) {
    if (suite == "remark-not-in") return {};
    if (suite == "closure" || suite == "periodicity" || suite == "fpoly") return kClosureTypes;
    if (suite == "admissibility") return {"A2", "B2"};
    return kCoreTypes;
}

std::size_t default_suite_trials(const std::string& suite) {
    if (suite == "periodicity") return 200;
    if (suite == "realization" || suite == "decomposition") return 100;
    if (suite == "pairing") return 50;
    if (suite == "shift") return 250;
    return 0;
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& options) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw InvalidInput("unknown verification suite '" + suite + "'");
    SuiteReport report;
    report.suite = suite;
    report.types = options.types.empty() ? default_suite_types(suite) : options.types;
    const std::size_t trials = options.trials ? options.trials : default_suite_trials(suite);
    for (const auto& t : report.types) cartan_by_name(t);

    std::vector<std::future<Partial>> jobs;
    if (suite == "remark-not-in") {
        jobs.push_back(std::async(std::launch::async, rank_two_y_suite));
    } else {
        for (std::size_t idx = 0; idx < report.types.size(); ++idx) {
            const std::string type = report.types[idx];
            const std::uint64_t seed = options.seed * 1000003u + idx;
            const std::size_t depth = options.depth;
            jobs.push_back(std::async(std::launch::async, [=]() -> Partial {
                if (suite == "closure") return closure_suite(type);
                if (suite == "periodicity") return periodicity_suite(type, trials, seed);
                if (suite == "realization") return realization_suite(type, trials, seed);
                if (suite == "pairing") return pairing_suite(type, trials, seed);
                if (suite == "decomposition") return decomposition_suite(type, trials, seed);
                if (suite == "duality") return duality_suite(type);
                if (suite == "fpoly") return fpoly_suite(type);
                if (suite == "shift") return shift_suite(type, trials, seed);
                return admissibility_suite(type, depth);
            }));
        }
    }
    std::vector<std::string> info;
    for (auto& job : jobs) {
        Partial p = job.get();
        report.checks += p.checks;
        report.failures += p.failures;
        report.details.insert(report.details.end(), p.failed.begin(), p.failed.end());
        info.insert(info.end(), p.info.begin(), p.info.end());
    }
    report.details.insert(report.details.end(), info.begin(), info.end());
    return report;
}

}  // namespace tropfrieze
