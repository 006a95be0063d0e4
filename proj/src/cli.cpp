#include "tropfrieze/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropfrieze/finite_type.hpp"
#include "tropfrieze/verify.hpp"

namespace tropfrieze {

namespace {

using json = nlohmann::ordered_json;

constexpr Int kMaxWindowWidth = 4096;

struct Options {
    std::string cartan, matrix, input, kind, slice, coords, anchor, target, window, space, side, delta, rho, suite,
        types;
    std::string format = "tsv";
    std::size_t depth = 16, budget = kDefaultBudget, trials = 0;
    std::uint64_t seed = 1;
    std::size_t i = 1;
    Int m = 0;
    bool transpose = false, enumerate = false;
};

IntVec parse_ints(std::string text, const std::string& what) {
    for (char& c : text)
        if (c == '[' || c == ']') c = ' ';
    IntVec out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::istringstream cell(item);
        long long v = 0;
        std::string rest;
        if (!(cell >> v) || (cell >> rest)) throw InvalidInput("cannot parse " + what + " entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

IntVec parse_vector(const std::string& text, std::size_t n, const std::string& what) {
    IntVec v = text.empty() ? IntVec(n, 0) : parse_ints(text, what);
    if (v.size() != n)
        throw InvalidInput(what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
    return v;
}

std::pair<Int, Int> parse_window(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw InvalidInput("window must look like a..b, got '" + text + "'");
    const IntVec lo = parse_ints(text.substr(0, dots), "window"), hi = parse_ints(text.substr(dots + 2), "window");
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0] || hi[0] - lo[0] > kMaxWindowWidth)
        throw InvalidInput("window '" + text + "' must be a..b with a <= b and width at most " +
                           std::to_string(kMaxWindowWidth));
    return {lo[0], hi[0]};
}

// 1-based comma-separated labels.
TreeAddress parse_word(const std::string& text, std::size_t rank) {
    std::vector<int> word;
    for (Int label : text.empty() ? IntVec{} : parse_ints(text, "address"))
        if (label < 1 || static_cast<std::size_t>(label) > rank)
            throw InvalidInput("address label " + std::to_string(label) + " outside 1.." + std::to_string(rank));
        else
            word.push_back(static_cast<int>(label - 1));
    return TreeAddress::from_word(word);
}

TreeAddress word_from_json(const json& j, std::size_t rank) {
    std::string text;
    for (const auto& v : j) text += (text.empty() ? "" : ",") + std::to_string(v.get<Int>());
    return parse_word(text, rank);
}

IntMatrix matrix_from_json(const json& j) {
    std::vector<IntVec> rows;
    for (const auto& row : j) rows.push_back(row.get<IntVec>());
    return IntMatrix::from_rows(rows);
}

json read_json_source(const std::string& source) {
    if (!source.empty() && (source.front() == '[' || source.front() == '{')) return json::parse(source);
    std::ifstream in(source);
    if (!in) throw InvalidInput("cannot open '" + source + "'");
    return json::parse(in);
}

// A registered type name, inline JSON, or a path to a JSON file holding a matrix or {"cartan": matrix}.
CartanMatrix load_cartan(const std::string& source) {
    if (source.empty()) throw InvalidInput("--cartan is required");
    const auto names = registered_cartan_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) return cartan_by_name(source);
    const json j = read_json_source(source);
    if (j.is_array()) return CartanMatrix(matrix_from_json(j), "custom");
    return CartanMatrix(matrix_from_json(j.at("cartan")), j.value("name", std::string("custom")));
}

json to_json(const IntMatrix& m) {
    json j = json::array();
    for (const auto& row : m.to_rows()) j.push_back(row);
    return j;
}

json word_json(const TreeAddress& addr) {
    json j = json::array();
    for (int k : addr.word()) j.push_back(k + 1);
    return j;
}

json table_json(const FriezeTable& t) { return {{"m0", t.m0}, {"m1", t.m1}, {"rows", t.rows}}; }

std::string row_string(const IntVec& v) { return vec_to_string(v); }

void emit(std::ostream& out, const Options& o, const json& j, const std::string& tsv) {
    if (o.format == "json")
        out << j.dump(2) << '\n';
    else
        out << tsv;
}

FriezeKind numeric_kind(const std::string& kind) {
    if (kind == "trop") return FriezeKind::TropicalFrieze;
    if (kind == "cluster-add") return FriezeKind::ClusterAdditive;
    return FriezeKind::Additive;
}

int cmd_frieze(const Options& o, std::ostream& out) {
    const CartanMatrix a = load_cartan(o.cartan);
    const auto [m0, m1] = parse_window(o.window.empty() ? "0..6" : o.window);
    json j{{"cartan", a.name()}, {"kind", o.kind}, {"window", {m0, m1}}};
    std::ostringstream tsv;
    if (o.kind == "generic-a" || o.kind == "generic-y") {
        const bool a_side = o.kind == "generic-a";
        json entries = json::array();
        tsv << "i\tm\tvalue\n";
        for (Int m = m0; m <= m1; ++m)
            for (std::size_t i = 0; i < a.rank(); ++i) {
                const RationalFunction v = a_side ? generic_A_frieze(a, i, m) : generic_Y_frieze(a, i, m);
                const std::string s = v.to_string(a_side ? "x" : "y");
                entries.push_back({{"i", i + 1}, {"m", m}, {"value", s}});
                tsv << i + 1 << '\t' << m << '\t' << s << '\n';
            }
        j["entries"] = entries;
    } else {
        const IntVec slice = parse_vector(o.slice, a.rank(), "slice");
        const FriezeTable t = FriezeFunction(numeric_kind(o.kind), a, slice).window(m0, m1);
        j["slice"] = slice;
        j["table"] = table_json(t);
        tsv << t.to_tsv();
    }
    emit(out, o, j, tsv.str());
    return kExitOk;
}

int cmd_mutate(const Options& o, std::ostream& out) {
    IntMatrix b;
    std::string word_text = o.anchor;
    std::optional<TreeAddress> word;
    if (!o.input.empty()) {
        const json j = read_json_source(o.input);
        b = matrix_from_json(j.at("B"));
        if (j.contains("word")) word = word_from_json(j.at("word"), b.rows());
    } else if (!o.matrix.empty()) {
        b = matrix_from_json(read_json_source(o.matrix));
    } else {
        b = B_of(load_cartan(o.cartan)).matrix();
    }
    const MutationMatrix mb(b);
    const TreeAddress addr = word ? *word : parse_word(word_text, mb.size());
    json j{{"B", to_json(b)}, {"word", word_json(addr)}, {"kind", o.kind}};
    std::ostringstream tsv;
    tsv << "B\t" << b.to_string() << "\nword\t" << addr.to_string() << '\n';
    if (o.enumerate) {
        const ExchangeGraph g = enumerate_exchange_graph(o.kind == "Y" ? SeedKind::Y : SeedKind::A, mb, o.budget);
        json vars = json::array();
        for (const auto& v : g.variables) vars.push_back(v.to_string(o.kind == "Y" ? "y" : "x"));
        j["seeds"] = g.seeds.size();
        j["variables"] = vars;
        tsv << "seeds\t" << g.seeds.size() << "\nvariables\t" << g.variables.size() << '\n';
        for (const auto& v : vars) tsv << v.get<std::string>() << '\n';
    } else if (o.kind == "principal") {
        const PrincipalSeed ps = principal_pattern_at(mb, addr);
        const GCFData gcf = extract_gcf(mb, addr);
        json u = json::array(), f = json::array();
        for (const auto& v : ps.u) u.push_back(v.to_string("x"));
        for (const auto& v : gcf.f) f.push_back(v.to_string("p"));
        j["matrix"] = to_json(ps.b);
        j["c_vectors"] = to_json(gcf.c);
        j["g_vectors"] = to_json(gcf.g);
        j["cluster"] = u;
        j["f_polynomials"] = f;
        tsv << "matrix\t" << ps.b.to_string() << "\nC\t" << gcf.c.to_string() << "\nG\t" << gcf.g.to_string() << '\n';
        for (std::size_t i = 0; i < ps.u.size(); ++i)
            tsv << "x" << i + 1 << '\t' << u[i].get<std::string>() << "\tF\t" << f[i].get<std::string>() << '\n';
    } else {
        const SeedKind kind = o.kind == "Y" ? SeedKind::Y : SeedKind::A;
        const Seed s = seed_at(kind, mb, addr);
        const std::string prefix = kind == SeedKind::Y ? "y" : "x";
        json cluster = json::array();
        for (const auto& v : s.cluster) cluster.push_back(v.to_string(prefix));
        j["matrix"] = to_json(s.matrix.matrix());
        j["cluster"] = cluster;
        tsv << "matrix\t" << s.matrix.matrix().to_string() << '\n';
        for (std::size_t i = 0; i < cluster.size(); ++i)
            tsv << prefix << i + 1 << '\t' << cluster[i].get<std::string>() << '\n';
    }
    emit(out, o, j, tsv.str());
    return kExitOk;
}

int cmd_trop(const Options& o, std::ostream& out) {
    std::string space_name = o.space, coords_text = o.coords, anchor_text = o.anchor;
    IntMatrix pattern;
    std::optional<IntVec> coords;
    std::optional<TreeAddress> anchor;
    json input = json::object();
    if (!o.input.empty()) {
        input = read_json_source(o.input);
        space_name = input.value("space", space_name);
        if (input.contains("pattern")) pattern = matrix_from_json(input.at("pattern"));
        if (input.contains("coords")) coords = input.at("coords").get<IntVec>();
    }
    if (pattern.rows() == 0) {
        if (!o.matrix.empty())
            pattern = matrix_from_json(read_json_source(o.matrix));
        else
            pattern = B_of(load_cartan(input.value("cartan", o.cartan))).matrix();
    }
    if (o.transpose) pattern = pattern.transpose();
    const TropSpace space = trop_space_from_string(space_name.empty() ? "A" : space_name);
    const std::size_t r = pattern.rows();
    const std::size_t n = space == TropSpace::Yprin ? 2 * r : r;
    if (input.contains("anchor")) anchor = word_from_json(input.at("anchor"), r);
    const TreeAddress at = anchor ? *anchor : parse_word(anchor_text, r);
    const IntVec c = coords ? *coords : parse_vector(coords_text, n, "coords");
    const TropPoint p = space == TropSpace::A   ? TropPoint::on_A(pattern, c, at)
                        : space == TropSpace::Y ? TropPoint::on_Y(pattern, c, at)
                                                : TropPoint::on_Yprin(pattern, c, at);
    const TreeAddress target = parse_word(o.target, r);
    const IntVec tc = p.coords_at(target);
    json j{{"space", to_string(space)}, {"pattern", to_json(pattern)}, {"anchor", word_json(at)}, {"coords", c},
           {"target", word_json(target)},  {"target_coords", tc},        {"target_matrix", to_json(p.matrix_at(target))}};
    std::ostringstream tsv;
    tsv << "space\t" << to_string(space) << "\ntarget\t" << target.to_string() << "\ncoords\t" << row_string(tc)
        << '\n';
    if (!o.window.empty()) {
        const auto [m0, m1] = parse_window(o.window);
        const FriezeTable t = point_table(p, m0, m1);
        j["readback"] = table_json(t);
        tsv << t.to_tsv();
    }
    emit(out, o, j, tsv.str());
    return kExitOk;
}

int cmd_pairing(const Options& o, std::ostream& out) {
    const CartanMatrix a = load_cartan(o.cartan);
    const IntMatrix b = B_of(a).matrix();
    const TropPoint delta = TropPoint::on_A(b.transpose(), parse_vector(o.delta, a.rank(), "delta"));
    const TropPoint rho = TropPoint::on_Y(b, parse_vector(o.rho, a.rank(), "rho"));
    const PairingResult p = pairing(a, delta, rho);
    const json j{{"cartan", a.name()},
                 {"delta", delta.anchor_coords()},
                 {"rho", rho.anchor_coords()},
                 {"pairing", p.value},
                 {"witness", {{"via_x", p.via_x}, {"via_y", p.via_y}, {"via_domain", p.via_domain}, {"via_max", p.via_max}}}};
    std::ostringstream tsv;
    tsv << "pairing\t" << p.value << "\nvia_x\t" << p.via_x << "\nvia_y\t" << p.via_y << "\nvia_domain\t" << p.via_domain
        << "\nvia_max\t" << p.via_max << '\n';
    emit(out, o, j, tsv.str());
    return kExitOk;
}

json domain_json(const DomainProduct& d) {
    json j = json::array();
    for (const auto& [p, e] : d.exponents) j.push_back({{"i", p.i + 1}, {"m", p.m}, {"exponent", e}});
    return j;
}

int cmd_monomial(const Options& o, std::ostream& out) {
    const CartanMatrix a = load_cartan(o.cartan);
    const IntMatrix b = B_of(a).matrix();
    const bool a_side = o.side.empty() || o.side == "A";
    const IntVec c = parse_vector(o.coords, a.rank(), "coords");
    Monomial mono;
    DomainProduct prod;
    if (a_side) {
        const TropPoint rho = TropPoint::on_Y(b, c);
        mono = mono_from_gvector_A(rho);
        prod = x_from_rho(a, rho);
    } else {
        const TropPoint delta = TropPoint::on_A(b.transpose(), c);
        mono = mono_from_gvector_Y(delta);
        prod = y_from_delta(a, delta);
    }
    if (!(mono.value == prod.value))
        throw RouteDisagreement("exchange-graph monomial and fundamental-domain product differ");
    const std::string prefix = a_side ? "x" : "y";
    const json j{{"cartan", a.name()},    {"side", a_side ? "A" : "Y"},          {"coords", c},
                 {"address", word_json(mono.address)}, {"exponents", mono.exponents}, {"value", mono.value.to_string(prefix)},
                 {"domain_product", domain_json(prod)}};
    std::ostringstream tsv;
    tsv << "value\t" << mono.value.to_string(prefix) << "\naddress\t" << mono.address.to_string() << "\nexponents\t"
        << row_string(mono.exponents) << '\n';
    emit(out, o, j, tsv.str());
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const CartanMatrix a = load_cartan(o.cartan);
    const IntVec slice = parse_vector(o.slice, a.rank(), "slice");
    const auto parts = decompose_hammocks(FriezeFunction(FriezeKind::ClusterAdditive, a, slice));
    json list = json::array();
    std::ostringstream tsv;
    tsv << "i\tm\tmultiplicity\n";
    for (const auto& [p, mult] : parts) {
        if (mult == 0) continue;
        list.push_back({{"i", p.i + 1}, {"m", p.m}, {"multiplicity", mult}});
        tsv << p.i + 1 << '\t' << p.m << '\t' << mult << '\n';
    }
    emit(out, o, json{{"cartan", a.name()}, {"slice", slice}, {"hammocks", list}}, tsv.str());
    return kExitOk;
}

int cmd_hammock(const Options& o, std::ostream& out) {
    const CartanMatrix a = load_cartan(o.cartan);
    if (o.i < 1 || o.i > a.rank()) throw InvalidInput("--i must lie in 1.." + std::to_string(a.rank()));
    const auto [m0, m1] = parse_window(o.window.empty() ? std::to_string(o.m) + ".." + std::to_string(o.m + 6) : o.window);
    const FriezeFunction h = hammock(a, o.i - 1, o.m);
    const FriezeTable t = h.window(m0, m1);
    emit(out, o, json{{"cartan", a.name()}, {"i", o.i}, {"m", o.m}, {"table", table_json(t)}}, t.to_tsv());
    return kExitOk;
}

int cmd_fpoly(const Options& o, std::ostream& out) {
    json j;
    std::ostringstream tsv;
    if (!o.anchor.empty() || !o.matrix.empty()) {
        const IntMatrix b = o.matrix.empty() ? B_of(load_cartan(o.cartan)).matrix() : matrix_from_json(read_json_source(o.matrix));
        const MutationMatrix mb(b);
        const TreeAddress addr = parse_word(o.anchor, mb.size());
        const GCFData gcf = extract_gcf(mb, addr);
        json f = json::array();
        for (const auto& p : gcf.f) f.push_back(p.to_string("p"));
        j = {{"B", to_json(b)}, {"word", word_json(addr)}, {"g_vectors", to_json(gcf.g)}, {"c_vectors", to_json(gcf.c)}, {"f_polynomials", f}};
        tsv << "G\t" << gcf.g.to_string() << "\nC\t" << gcf.c.to_string() << '\n';
        for (std::size_t i = 0; i < f.size(); ++i) tsv << "F" << i + 1 << '\t' << f[i].get<std::string>() << '\n';
    } else {
        const CartanMatrix a = load_cartan(o.cartan);
        const RootSystemData& rd = root_data(a);
        const auto table = Fim_recursion(a, *std::max_element(rd.h.begin(), rd.h.end()));
        json entries = json::array();
        tsv << "i\tm\tF\n";
        for (const GridPoint& p : rd.fundamental_domain()) {
            const std::string s = table.at(p).to_string("p");
            entries.push_back({{"i", p.i + 1}, {"m", p.m}, {"F", s}});
            tsv << p.i + 1 << '\t' << p.m << '\t' << s << '\n';
        }
        j = {{"cartan", a.name()}, {"entries", entries}};
    }
    emit(out, o, j, tsv.str());
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> suites;
    if (o.suite.empty() || o.suite == "all")
        suites = suite_names();
    else
        for (std::string s; const char c : o.suite + ",")
            if (c == ',') {
                if (!s.empty()) suites.push_back(s);
                s.clear();
            } else {
                s += c;
            }
    VerifyOptions vo;
    vo.trials = o.trials;
    vo.seed = o.seed;
    vo.depth = o.depth;
    for (std::string s; const char c : o.types + ",")
        if (c == ',') {
            if (!s.empty()) vo.types.push_back(s);
            s.clear();
        } else {
            s += c;
        }
    json reports = json::array();
    std::ostringstream tsv;
    tsv << "# rng_seed " << o.seed << "\nsuite\tchecks\tfailures\tstatus\n";
    bool ok = true;
    for (const auto& s : suites) {
        const SuiteReport r = run_suite(s, vo);
        ok = ok && r.ok();
        reports.push_back({{"suite", r.suite}, {"types", r.types}, {"checks", r.checks}, {"failures", r.failures},
                           {"ok", r.ok()}, {"details", r.details}});
        tsv << r.suite << '\t' << r.checks << '\t' << r.failures << '\t' << (r.ok() ? "PASS" : "FAIL") << '\n';
        for (const auto& d : r.details) tsv << "#   " << d << '\n';
    }
    emit(out, o, json{{"rng_seed", o.seed}, {"ok", ok}, {"suites", reports}}, tsv.str());
    return ok ? kExitOk : kExitVerifyFailed;
}

struct Diagnosis {
    std::string name;
    int code;
};

Diagnosis diagnose(const std::exception& e) {
    if (dynamic_cast<const NotFiniteType*>(&e)) return {"NotFiniteType", kExitInvalidInput};
    if (dynamic_cast<const NegativeExponent*>(&e)) return {"NegativeExponent", kExitInvalidInput};
    if (dynamic_cast<const DimensionMismatch*>(&e)) return {"DimensionMismatch", kExitInvalidInput};
    if (dynamic_cast<const InvalidInput*>(&e)) return {"InvalidInput", kExitInvalidInput};
    if (dynamic_cast<const NotAdmissible*>(&e)) return {"NotAdmissible", kExitInvalidInput};
    if (dynamic_cast<const SubtractionFreeViolation*>(&e)) return {"SubtractionFreeViolation", kExitInvalidInput};
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return {"InvalidJson", kExitInvalidInput};
    if (dynamic_cast<const BudgetExceeded*>(&e)) return {"BudgetExceeded", kExitBudget};
    if (dynamic_cast<const Overflow*>(&e)) return {"Overflow", kExitBudget};
    if (dynamic_cast<const RouteDisagreement*>(&e)) return {"RouteDisagreement", kExitRouteDisagreement};
    if (dynamic_cast<const NotFound*>(&e)) return {"NotFound", kExitInternal};
    return {"InternalError", kExitInternal};
}

int report(std::ostream& err, const std::string& name, const std::string& message, int code) {
    err << json{{"error", name}, {"message", message}, {"exit_code", code}}.dump() << '\n';
    return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tropical friezes, cluster-additive functions and cluster pattern utilities", "tropfrieze"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"tsv", "json"};

    auto add_cartan = [&](CLI::App* sub) {
        sub->add_option("--cartan", o.cartan, "Type name such as A2, inline JSON matrix, or JSON file path");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };

    CLI::App* frieze = app.add_subcommand("frieze", "Frieze tables and generic frieze patterns");
    add_cartan(frieze);
    frieze->add_option("--kind", o.kind, "Function kind")
        ->check(CLI::IsMember({"trop", "cluster-add", "additive", "generic-a", "generic-y"}))
        ->default_val("trop");
    frieze->add_option("--slice", o.slice, "Values at column 0, comma separated");
    frieze->add_option("--window", o.window, "Columns a..b");
    add_format(frieze);

    CLI::App* mutate = app.add_subcommand("mutate", "Seed of an A-, Y- or principal pattern at an address");
    add_cartan(mutate);
    mutate->add_option("--matrix", o.matrix, "Exchange matrix as JSON or file path");
    mutate->add_option("--input", o.input, "JSON {\"B\": matrix, \"word\": [labels]} or file path");
    mutate->add_option("--anchor", o.anchor, "Mutation word, 1-based labels");
    mutate->add_option("--kind", o.kind, "Pattern kind")->check(CLI::IsMember({"A", "Y", "principal"}))->default_val("A");
    mutate->add_flag("--enumerate", o.enumerate, "Enumerate the exchange graph instead");
    mutate->add_option("--budget", o.budget, "Seed budget for enumeration");
    add_format(mutate);

    CLI::App* trop = app.add_subcommand("trop", "Tropical point coordinates and frieze readback");
    add_cartan(trop);
    trop->add_option("--matrix", o.matrix, "Pattern matrix as JSON or file path");
    trop->add_option("--input", o.input, "JSON {\"space\", \"pattern\"|\"cartan\", \"anchor\", \"coords\"} or file path");
    trop->add_option("--space", o.space, "A, Y or Yprin")->check(CLI::IsMember({"A", "Y", "Yprin"}));
    trop->add_flag("--transpose", o.transpose, "Use the transposed pattern matrix");
    trop->add_option("--coords", o.coords, "Coordinates at the anchor");
    trop->add_option("--anchor", o.anchor, "Anchor word, 1-based labels");
    trop->add_option("--target", o.target, "Target word, 1-based labels");
    trop->add_option("--window", o.window, "Readback columns a..b");
    add_format(trop);

    CLI::App* pair = app.add_subcommand("pairing", "Duality pairing of an A-point of B^T and a Y-point of B");
    add_cartan(pair);
    pair->add_option("--delta", o.delta, "A-point coordinates at the root");
    pair->add_option("--rho", o.rho, "Y-point coordinates at the root");
    add_format(pair);

    CLI::App* mono = app.add_subcommand("monomial", "Global monomial with a given tropical point");
    add_cartan(mono);
    mono->add_option("--side", o.side, "A: cluster monomial of a Y-point; Y: Y-monomial of an A-point")
        ->check(CLI::IsMember({"A", "Y"}));
    mono->add_option("--coords", o.coords, "Coordinates at the root");
    add_format(mono);

    CLI::App* decomp = app.add_subcommand("decompose", "Hammock decomposition of a cluster-additive function");
    add_cartan(decomp);
    decomp->add_option("--slice", o.slice, "Values at column 0");
    add_format(decomp);

    CLI::App* ham = app.add_subcommand("hammock", "Cluster-hammock function table");
    add_cartan(ham);
    ham->add_option("--i", o.i, "Row, 1-based");
    ham->add_option("--m", o.m, "Column");
    ham->add_option("--window", o.window, "Columns a..b");
    add_format(ham);

    CLI::App* fpoly = app.add_subcommand("fpoly", "F-polynomials, g- and c-vectors");
    add_cartan(fpoly);
    fpoly->add_option("--matrix", o.matrix, "Exchange matrix as JSON or file path");
    fpoly->add_option("--anchor", o.anchor, "Mutation word; omit for the fundamental-domain table");
    add_format(fpoly);

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite, "Suite name, comma list, or all")->default_val("all");
    verify->add_option("--types", o.types, "Comma-separated type names");
    verify->add_option("--trials", o.trials, "Random trials per type");
    verify->add_option("--rng-seed", o.seed, "Seed for random trials");
    verify->add_option("--depth", o.depth, "Exchange-graph depth for admissibility checks");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        return report(err, "ParseError", e.what(), kExitInvalidInput);
    }

    try {
        if (frieze->parsed()) return cmd_frieze(o, out);
        if (mutate->parsed()) return cmd_mutate(o, out);
        if (trop->parsed()) return cmd_trop(o, out);
        if (pair->parsed()) return cmd_pairing(o, out);
        if (mono->parsed()) return cmd_monomial(o, out);
        if (decomp->parsed()) return cmd_decompose(o, out);
        if (ham->parsed()) return cmd_hammock(o, out);
        if (fpoly->parsed()) return cmd_fpoly(o, out);
        return cmd_verify(o, out);
    } catch (const std::exception& e) {
        const Diagnosis d = diagnose(e);
        return report(err, d.name, e.what(), d.code);
    }
}

}  // namespace tropfrieze
