#include "orbidim/cli.hpp"

#include "orbidim/arith.hpp"
#include "orbidim/cases.hpp"
#include "orbidim/kacaut.hpp"
#include "orbidim/modcurve.hpp"
#include "orbidim/orbifold.hpp"
#include "orbidim/qseries.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace orbidim::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integers stay JSON numbers; everything else is a "p/q" string.
ordered_json rat_json(const Rational& q)
{
    if (is_integer(q)) {
        Integer z = q.get_num();
        if (z.fits_slong_p()) return z.get_si();
    }
    return to_string(q);
}

struct Table {
    std::vector<std::string> head;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_table(std::ostream& out, const Table& t)
{
    std::vector<std::size_t> w(t.head.size(), 0);
    for (std::size_t k = 0; k < t.head.size(); ++k) w[k] = t.head[k].size();
    for (const auto& row : t.rows)
        for (std::size_t k = 0; k < row.size() && k < w.size(); ++k) w[k] = std::max(w[k], row[k].size());
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string cell = row[k];
            if (k + 1 < row.size()) cell.resize(std::max(cell.size(), w[k]), ' ');
            s += cell + (k + 1 < row.size() ? "  " : "");
        }
        out << s << "\n";
    };
    line(t.head);
    for (const auto& row : t.rows) line(row);
}

void print_csv(std::ostream& out, const Table& t)
{
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(row[k]);
        out << "\n";
    };
    line(t.head);
    for (const auto& row : t.rows) line(row);
}

void emit(std::ostream& out, const std::string& format, const Table& t, const ordered_json& j)
{
    if (format == "json") {
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_csv(out, t);
    } else {
        print_table(out, t);
    }
}

Rational parse_rat_arg(const std::string& s, const char* what)
{
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + " must be a rational number, got '" + s + "'");
    }
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + p.string());
}

// ---- table builders shared by commands and regen ----

ordered_json coeff_json(long n)
{
    ordered_json j = ordered_json::object();
    for (const auto& [d, c] : orbifold::c_coefficients(n)) j[std::to_string(d)] = rat_json(c);
    return j;
}

ordered_json dtable_json()
{
    ordered_json all = ordered_json::array();
    for (long n : modcurve::genus_zero_levels()) {
        if (n < 2) continue;
        for (long i = 1; i < n; ++i) {
            for (long j = 1; j < n; ++j) {
                long k = (i * j) % n;
                if (k == 0) continue;
                Integer v = orbifold::d_coefficient(n, i, j, k);
                all.push_back({{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"gcd", gcd(gcd(i, j), n)}, {"d", v.get_si()}});
            }
        }
    }
    return all;
}

ordered_json prop_table_json(const cases::Summary& s)
{
    ordered_json rows = ordered_json::array();
    for (const auto& r : s.reports) {
        rows.push_back({{"id", r.id},
                        {"V1", r.source},
                        {"n", r.n},
                        {"fixed", r.fixed.str()},
                        {"hNormSq", rat_json(r.h_norm_sq)},
                        {"d", rat_json(r.d)},
                        {"orbifold", r.survivors.size() == 1 ? r.survivors.front() : ""},
                        {"passed", r.passed()}});
    }
    return rows;
}

ordered_json fixed_rank_json(const std::vector<cases::OrbifoldCase>& cs)
{
    ordered_json rows = ordered_json::array();
    for (const auto& c : cs) {
        for (const auto& v : c.variants) {
            auto st = orbifold::cycle_shape_stats(v.shape);
            rows.push_back({{"id", v.label},
                            {"lattice", c.lattice},
                            {"cycleShape", v.shape.str()},
                            {"degree", st.degree},
                            {"fixedRank", st.fixed_rank},
                            {"rho", rat_json(st.rho)},
                            {"type", orbifold::twist_type(c.n, st.rho).str()},
                            {"paperAsserted",
                             {{"provenance", cases::PaperAsserted::provenance},
                              {"fixedLatticeGenus", v.asserted.fixed_lattice_genus},
                              {"rootFixedLatticeGenus", v.asserted.root_fixed_lattice_genus},
                              {"cosetGroup", v.asserted.coset_group},
                              {"conjClassLength", v.asserted.conj_class_length}}}});
        }
    }
    return rows;
}

ordered_json screening_json(const cases::Summary& s)
{
    ordered_json rows = ordered_json::array();
    for (const auto& r : s.reports) {
        for (const auto& lvl : r.screening) {
            ordered_json probs = ordered_json::array();
            for (const auto& e : lvl.result.problematic) {
                probs.push_back({{"lambda", cases::screen_entry_string(e)}, {"rhoM", rat_json(e.rho)}, {"rhoTwisted", rat_json(e.twisted)}});
            }
            rows.push_back({{"id", r.id}, {"i", lvl.i}, {"count", lvl.result.problematic.size()}, {"problematic", probs}});
        }
    }
    return rows;
}

struct Data {
    std::vector<cases::OrbifoldCase> cases;
    std::vector<cases::SchellekensEntry> table;
};

Data load_data(const std::filesystem::path& dir)
{
    Data d;
    d.table = cases::load_schellekens(dir / "schellekens.json");
    d.cases = cases::load_cases(dir / "cases.json");
    return d;
}

const cases::OrbifoldCase& find_case(const Data& d, const std::string& id)
{
    for (const auto& c : d.cases) {
        if (c.id == id) return c;
        for (const auto& v : c.variants)
            if (v.label == id) return c;
    }
    throw UsageError("unknown case '" + id + "'");
}

} // namespace

RegenResult regen_tables(const std::filesystem::path& out_dir, const std::filesystem::path& golden_dir,
                         const std::filesystem::path& data_dir)
{
    Data data = load_data(data_dir);
    cases::Summary summary = cases::verify_all(data.cases, data.table);

    std::vector<std::pair<std::string, ordered_json>> tables;
    {
        ordered_json c = ordered_json::object();
        for (long n : modcurve::genus_zero_levels()) c[std::to_string(n)] = coeff_json(n);
        tables.emplace_back("coefficients.json", c);
    }
    tables.emplace_back("d_coefficients.json", dtable_json());
    tables.emplace_back("orbifold_table.json", prop_table_json(summary));
    tables.emplace_back("fixed_ranks.json", fixed_rank_json(data.cases));
    tables.emplace_back("screening.json", screening_json(summary));

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());

    RegenResult res;
    ordered_json manifest;
    manifest["files"] = ordered_json::array();
    for (const auto& [name, j] : tables) {
        std::string text = j.dump(1) + "\n";
        write_file(out_dir / name, text);
        res.files.push_back(name);
        manifest["files"].push_back({{"name", name}, {"sha256", cases::sha256_hex(text)}});

        std::filesystem::path g = golden_dir / name;
        if (!std::filesystem::exists(g)) {
            res.mismatches.push_back(name + ": missing golden");
            continue;
        }
        std::string want = read_file(g);
        if (want == text) continue;
        std::istringstream a(text), b(want);
        std::string la, lb;
        long line = 1;
        while (true) {
            bool ga = static_cast<bool>(std::getline(a, la));
            bool gb = static_cast<bool>(std::getline(b, lb));
            if (!ga || !gb || la != lb) break;
            ++line;
        }
        res.mismatches.push_back(name + ": differs from golden at line " + std::to_string(line));
    }
    write_file(out_dir / "manifest.json", manifest.dump(1) + "\n");
    res.files.push_back("manifest.json");
    return res;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Orbifold dimension formulae, Kac automorphisms and the fifteen uniqueness cases", "orbidim"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    std::string data_dir = cases::default_data_dir().string();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--data", data_dir, "Directory holding cases.json and schellekens.json");

    long n = 0, i = 0, j = 0, k = 0, order = 0, dim = 0, level_i = 1;
    std::string prec = "10", cusp, quotient, algebra, hvec, case_id, fixed_spec, floor_s = "1", cap_s = "3";
    std::string out_dir, golden_dir = (cases::default_data_dir() / "golden").string();
    bool divisor = false, all = false;

    auto* coeffs = app.add_subcommand("coeffs", "c_d coefficients of the dimension formula");
    coeffs->add_option("--n", n, "Genus-zero level")->required();

    auto* dcoeff = app.add_subcommand("dcoeff", "Coefficient d_{i,j,k}");
    dcoeff->add_option("--n", n)->required();
    dcoeff->add_option("--i", i)->required();
    dcoeff->add_option("--j", j)->required();
    dcoeff->add_option("--k", k)->required();

    auto* cusps = app.add_subcommand("cusps", "Cusps of Gamma0(n) with widths");
    cusps->add_option("--n", n)->required();

    auto* haupt = app.add_subcommand("hauptmodul", "Hauptmodul q-expansion");
    haupt->add_option("--n", n)->required();
    haupt->add_option("--prec", prec, "Exclusive precision in q");

    auto* fs = app.add_subcommand("fs", "Eta quotient with a simple pole at a cusp");
    fs->add_option("--n", n)->required();
    fs->add_option("--cusp", cusp, "Cusp a/c")->required();
    fs->add_option("--prec", prec);
    fs->add_flag("--divisor", divisor, "Print the divisor instead of the expansion");

    auto* eta = app.add_subcommand("eta", "q-expansion of an eta quotient");
    eta->add_option("--quotient", quotient, "d:r,d:r,...")->required();
    eta->add_option("--prec", prec);

    auto* kac = app.add_subcommand("kac", "Automorphism classes of a given order");
    kac->add_option("--algebra", algebra)->required();
    kac->add_option("--order", order)->required();

    auto* inner = app.add_subcommand("inner", "Inner automorphism exp(2 pi i ad h)");
    inner->set_help_flag("--help", "Print this help message and exit");
    inner->add_option("--algebra", algebra)->required();
    inner->add_option("--h", hvec, "Values a_i(h), e.g. 1/5,1/5,1/5,1/5")->required();

    auto* screen = app.add_subcommand("screen", "Twisted modules of low conformal weight for a case");
    screen->add_option("--case", case_id)->required();
    screen->add_option("--i", level_i, "Power of sigma_h");
    screen->add_option("--floor", floor_s);
    screen->add_option("--rho-cap", cap_s);

    auto* casecmd = app.add_subcommand("case", "Case pipeline");
    casecmd->require_subcommand(1);
    auto* caserun = casecmd->add_subcommand("run", "Verify one case or all");
    caserun->add_option("id", case_id);
    caserun->add_flag("--all", all);

    auto* sch = app.add_subcommand("schellekens", "Schellekens list");
    sch->require_subcommand(1);
    auto* scan = sch->add_subcommand("scan", "Entries admitting a fixed-point subalgebra");
    scan->add_option("--dim", dim)->required();
    scan->add_option("--fixed", fixed_spec)->required();
    scan->add_option("--order", order)->required();

    auto* tables = app.add_subcommand("tables", "Reproduction tables");
    tables->require_subcommand(1);
    auto* regen = tables->add_subcommand("regen", "Regenerate and compare with golden files");
    regen->add_option("--out", out_dir)->required();
    regen->add_option("--golden", golden_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (coeffs->parsed()) {
            Table t{{"d", "c_d"}, {}};
            for (const auto& [d, c] : orbifold::c_coefficients(n)) t.rows.push_back({std::to_string(d), to_string(c)});
            emit(out, format, t, coeff_json(n));
        } else if (dcoeff->parsed()) {
            Integer v = orbifold::d_coefficient(n, i, j, k);
            ordered_json jv = {{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"d", v.get_si()}};
            emit(out, format, Table{{"n", "i", "j", "k", "d"}, {{std::to_string(n), std::to_string(i), std::to_string(j), std::to_string(k), v.get_str()}}}, jv);
        } else if (cusps->parsed()) {
            Table t{{"cusp", "width"}, {}};
            ordered_json arr = ordered_json::array();
            long total = 0;
            for (const auto& c : modcurve::cusp_classes(n)) {
                t.rows.push_back({c.str(), std::to_string(c.width)});
                arr.push_back({{"cusp", c.str()}, {"width", c.width}});
                total += c.width;
            }
            if (format == "table") t.rows.push_back({"total", std::to_string(total)});
            emit(out, format, t, arr);
        } else if (haupt->parsed() || eta->parsed() || fs->parsed()) {
            qseries::EtaQuotient f;
            if (haupt->parsed()) {
                f = modcurve::hauptmodul(n);
            } else if (eta->parsed()) {
                f = qseries::parse_eta_quotient(quotient);
            } else {
                f = modcurve::cusp_function(n, modcurve::parse_cusp(n, cusp));
            }
            if (fs->parsed() && divisor) {
                auto div = modcurve::divisor(f, n);
                Table t{{"cusp", "width", "order"}, {}};
                for (const auto& e : div) t.rows.push_back({e.cusp.str(), std::to_string(e.cusp.width), to_string(e.order)});
                ordered_json jd = ordered_json::parse(modcurve::divisor_json(div).dump());
                emit(out, format, t, jd);
            } else {
                auto s = qseries::etaq_expand(f, parse_rat_arg(prec, "--prec"));
                Table t{{"exponent", "coefficient"}, {}};
                ordered_json terms = ordered_json::array();
                for (const auto& [p, c] : s.terms()) {
                    Rational e(p, s.denom());
                    e.canonicalize();
                    t.rows.push_back({to_string(e), to_string(c)});
                    terms.push_back({{"exponent", rat_json(e)}, {"coefficient", rat_json(c)}});
                }
                ordered_json js = {{"quotient", qseries::to_string(f)}, {"prec", rat_json(s.prec())}, {"terms", terms}};
                if (format == "table") {
                    out << qseries::to_string(f) << " = " << qseries::render(s) << "\n";
                } else {
                    emit(out, format, t, js);
                }
            }
        } else if (kac->parsed()) {
            auto kind = liealg::Kind::parse(algebra);
            Table t{{"diagram", "s", "order", "fixed"}, {}};
            ordered_json arr = ordered_json::array();
            for (const auto& c : kacaut::enumerate_classes(kind, order)) {
                std::vector<std::string> s;
                for (int x : c.s) s.push_back(std::to_string(x));
                std::string sv = "[";
                for (std::size_t q = 0; q < s.size(); ++q) sv += (q ? "," : "") + s[q];
                sv += "]";
                std::string diag = kacaut::affine_diagram(kind, c.twist).name();
                t.rows.push_back({diag, sv, std::to_string(c.order), c.fixed.str()});
                arr.push_back({{"diagram", diag}, {"s", c.s}, {"order", c.order}, {"fixed", c.fixed.str()}});
            }
            emit(out, format, t, arr);
        } else if (inner->parsed()) {
            const auto& rs = liealg::root_system(liealg::Kind::parse(algebra));
            auto h = liealg::parse_coweight(hvec);
            auto a = kacaut::inner_from_coweight(rs, h);
            long bound = kacaut::module_order_bound(rs, h);
            auto kc = kacaut::kac_class_of_coweight(rs, h);
            auto rep = orbifold::alcove_representative(rs, h);
            Table t{{"field", "value"},
                    {{"order", std::to_string(a.order)},
                     {"fixed", a.fixed.str()},
                     {"module order bound", std::to_string(bound)},
                     {"kac", kc.serialize()},
                     {"alcove representative", liealg::coweight_to_string(rep)}}};
            ordered_json ji = {{"order", a.order}, {"fixed", a.fixed.str()}, {"moduleOrderBound", bound},
                               {"kac", kc.serialize()}, {"alcoveRepresentative", liealg::coweight_to_string(rep)}};
            emit(out, format, t, ji);
        } else if (screen->parsed()) {
            Data d = load_data(data_dir);
            const auto& c = find_case(d, case_id);
            if (level_i < 1 || level_i >= std::max<long>(c.n, 2)) throw UsageError("--i must lie in [1, n)");
            std::vector<liealg::CoweightVec> hs;
            for (std::size_t f = 0; f < c.h.size(); ++f) {
                auto h = c.h[f];
                for (auto& x : h) x *= level_i;
                hs.push_back(orbifold::alcove_representative(liealg::root_system(c.source.factors[f].kind), h));
            }
            auto r = orbifold::screen_problematic_modules(c.source, hs, parse_rat_arg(floor_s, "--floor"), parse_rat_arg(cap_s, "--rho-cap"));
            Table t{{"lambda", "rho(M)", "rho(M^(h))"}, {}};
            ordered_json probs = ordered_json::array();
            for (const auto& e : r.problematic) {
                t.rows.push_back({cases::screen_entry_string(e), to_string(e.rho), to_string(e.twisted)});
                probs.push_back({{"lambda", cases::screen_entry_string(e)}, {"rhoM", rat_json(e.rho)}, {"rhoTwisted", rat_json(e.twisted)}});
            }
            ordered_json js = {{"case", c.id}, {"i", level_i}, {"problematic", probs}, {"beyondCap", r.beyond_cap.size()}, {"examined", r.examined}};
            emit(out, format, t, js);
            if (format == "table") out << r.problematic.size() << " problematic, " << r.beyond_cap.size() << " above the cap\n";
            if (!r.beyond_cap.empty()) throw VerificationFailure("tuples below the floor exist above the rho(M) cap");
        } else if (caserun->parsed()) {
            if (all == !case_id.empty()) throw UsageError("case run takes either an id or --all");
            Data d = load_data(data_dir);
            bool ok = true;
            if (all) {
                auto s = cases::verify_all(d.cases, d.table);
                ok = s.passed == static_cast<int>(s.reports.size());
                if (format == "json") {
                    ordered_json arr = ordered_json::array();
                    for (const auto& r : s.reports) arr.push_back(ordered_json::parse(cases::report_json(r)));
                    out << arr.dump(2) << "\n";
                } else if (format == "csv") {
                    Table t{{"id", "V1", "n", "fixed", "d", "orbifold", "passed"}, {}};
                    for (const auto& r : s.reports) {
                        t.rows.push_back({r.id, r.source, std::to_string(r.n), r.fixed.str(), to_string(r.d),
                                          r.survivors.size() == 1 ? r.survivors.front() : "", r.passed() ? "PASS" : "FAIL"});
                    }
                    print_csv(out, t);
                } else {
                    out << cases::summary_table(s);
                }
            } else {
                const auto& c = find_case(d, case_id);
                auto r = cases::verify_case(c, d.table);
                ok = r.passed();
                if (format == "json") {
                    out << cases::report_json(r) << "\n";
                } else if (format == "csv") {
                    Table t{{"step", "title", "passed", "expected", "actual"}, {}};
                    for (const auto& st : r.steps) t.rows.push_back({st.step, st.title, st.passed ? "PASS" : "FAIL", st.expected, st.actual});
                    print_csv(out, t);
                } else {
                    out << cases::report_text(r);
                }
            }
            if (!ok) throw VerificationFailure("case verification failed");
        } else if (scan->parsed()) {
            Data d;
            d.table = cases::load_schellekens(std::filesystem::path(data_dir) / "schellekens.json");
            auto fixed = kacaut::FixedAlgebra::parse(fixed_spec);
            Table t{{"index", "structure", "dim"}, {}};
            ordered_json arr = ordered_json::array();
            for (const auto* e : cases::schellekens_scan(d.table, dim, fixed, order)) {
                t.rows.push_back({std::to_string(e->index), e->text, std::to_string(e->dim)});
                arr.push_back({{"index", e->index}, {"structure", e->text}, {"dim", e->dim}});
            }
            emit(out, format, t, arr);
        } else if (regen->parsed()) {
            auto res = regen_tables(out_dir, golden_dir, data_dir);
            for (const auto& f : res.files) out << "wrote " << (std::filesystem::path(out_dir) / f).string() << "\n";
            for (const auto& m : res.mismatches) err << "mismatch: " << m << "\n";
            if (!res.mismatches.empty()) throw VerificationFailure(std::to_string(res.mismatches.size()) + " table(s) differ from golden files");
            out << res.files.size() - 1 << " tables match their golden files\n";
        }
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const modcurve::NotImplementedLevel& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace orbidim::cli
