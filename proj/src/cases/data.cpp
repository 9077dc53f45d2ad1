#include "orbidim/cases.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef ORBIDIM_DATA_DIR
#define ORBIDIM_DATA_DIR "data"
#endif

namespace orbidim::cases {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw std::runtime_error(path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "." + key, "missing field");
    return *it;
}

std::string get_string(const json& obj, const std::string& key, const std::string& path)
{
    const json& v = field(obj, key, path);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

long get_long(const json& obj, const std::string& key, const std::string& path)
{
    const json& v = field(obj, key, path);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<long>();
}

template <class F>
auto guarded(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
}

json parse_json(const std::string& text, const std::string& what)
{
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) fail(what, "empty document");
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(what, e.what());
    }
}

PaperAsserted parse_asserted(const json& obj, const std::string& path)
{
    PaperAsserted a;
    a.conj_class_length = get_string(obj, "conjClassLength", path);
    a.fixed_lattice_genus = get_string(obj, "fixedLatticeGenus", path);
    a.root_fixed_lattice_genus = get_string(obj, "rootFixedLatticeGenus", path);
    a.coset_group = get_string(obj, "cosetGroup", path);
    if (obj.contains("classSelection")) a.class_selection = get_string(obj, "classSelection", path);
    if (obj.contains("shiftedRho")) {
        const json& arr = field(obj, "shiftedRho", path);
        if (!arr.is_array()) fail(path + ".shiftedRho", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string p = path + ".shiftedRho[" + std::to_string(i) + "]";
            if (!arr[i].is_string()) fail(p, "expected a rational string");
            a.shifted_rho.push_back(guarded(p, [&] { return parse_rational(arr[i].get<std::string>()); }));
        }
    }
    return a;
}

OrbifoldCase parse_case(const json& obj, const std::string& path)
{
    OrbifoldCase c;
    c.id = get_string(obj, "id", path);
    c.lattice = get_string(obj, "lattice", path);
    guarded(path + ".lattice", [&] { return liealg::parse_structure(c.lattice); });
    c.n = get_long(obj, "n", path);
    if (c.n < 1) fail(path + ".n", "order must be positive");
    c.source_text = get_string(obj, "sourceStructure", path);
    c.source = guarded(path + ".sourceStructure", [&] { return liealg::parse_structure(c.source_text); });
    c.schellekens_index = static_cast<int>(get_long(obj, "schellekensIndex", path));

    const json& hs = field(obj, "h", path);
    if (!hs.is_array() || hs.size() != c.source.factors.size()) fail(path + ".h", "expected one coweight per simple factor");
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::string p = path + ".h[" + std::to_string(i) + "]";
        if (!hs[i].is_string()) fail(p, "expected a coweight string");
        CoweightVec h = guarded(p, [&] { return liealg::parse_coweight(hs[i].get<std::string>()); });
        if (static_cast<int>(h.size()) != liealg::root_system(c.source.factors[i].kind).rank) fail(p, "rank mismatch");
        c.h.push_back(std::move(h));
    }
    const json& orders = field(obj, "factorOrders", path);
    if (!orders.is_array() || orders.size() != c.source.factors.size()) fail(path + ".factorOrders", "expected one order per simple factor");
    for (const json& o : orders) {
        if (!o.is_number_integer()) fail(path + ".factorOrders", "expected integers");
        c.factor_orders.push_back(o.get<long>());
    }
    c.h_norm_sq = guarded(path + ".hNormSq", [&] { return parse_rational(get_string(obj, "hNormSq", path)); });
    c.fixed = guarded(path + ".fixedAlgebra", [&] { return FixedAlgebra::parse(get_string(obj, "fixedAlgebra", path)); });
    c.expected_d = get_long(obj, "expectedD", path);
    const json& rho = field(obj, "rhoRequired", path);
    if (!rho.is_boolean()) fail(path + ".rhoRequired", "expected a boolean");
    c.rho_required = rho.get<bool>();
    if (obj.contains("expectedScreen")) {
        const json& es = field(obj, "expectedScreen", path);
        if (!es.is_object()) fail(path + ".expectedScreen", "expected an object");
        for (auto it = es.begin(); it != es.end(); ++it) {
            std::string p = path + ".expectedScreen." + it.key();
            long i = guarded(p, [&] { return std::stol(it.key()); });
            if (!it.value().is_number_integer()) fail(p, "expected an integer");
            c.expected_screen[i] = it.value().get<long>();
        }
    }

    const json& vs = field(obj, "variants", path);
    if (!vs.is_array() || vs.empty()) fail(path + ".variants", "expected a non-empty array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string p = path + ".variants[" + std::to_string(i) + "]";
        ShapeVariant v;
        v.label = get_string(vs[i], "label", p);
        v.shape = guarded(p + ".cycleShape", [&] { return CycleShape::parse(get_string(vs[i], "cycleShape", p)); });
        v.asserted = parse_asserted(field(vs[i], "paperAsserted", p), p + ".paperAsserted");
        c.variants.push_back(std::move(v));
    }
    return c;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::map<std::string, std::string> read_sums(const std::filesystem::path& dir)
{
    std::map<std::string, std::string> sums;
    std::istringstream in(read_file(dir / "SHA256SUMS"));
    std::string digest, name;
    while (in >> digest >> name) sums[name] = digest;
    return sums;
}

void check_sum(const std::filesystem::path& path, const std::string& bytes)
{
    auto sums = read_sums(path.parent_path());
    auto it = sums.find(path.filename().string());
    if (it == sums.end()) throw std::runtime_error(path.string() + " is not listed in SHA256SUMS");
    if (sha256_hex(bytes) != it->second) throw std::runtime_error(path.string() + " does not match its SHA256SUMS digest");
}

} // namespace

std::vector<OrbifoldCase> parse_cases(const std::string& json_text)
{
    json doc = parse_json(json_text, "cases");
    const json& arr = field(doc, "cases", "cases");
    if (!arr.is_array() || arr.empty()) fail("cases.cases", "expected a non-empty array");
    std::vector<OrbifoldCase> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(parse_case(arr[i], "cases[" + std::to_string(i) + "]"));
        for (const auto& v : out.back().variants) {
            long deg = orbifold::cycle_shape_stats(v.shape).degree;
            if (deg != 24) fail("cases[" + std::to_string(i) + "]", "cycle shape " + v.shape.str() + " has degree " + std::to_string(deg));
        }
    }
    return out;
}

std::vector<SchellekensEntry> parse_schellekens(const std::string& json_text)
{
    json doc = parse_json(json_text, "schellekens");
    const json& arr = field(doc, "entries", "schellekens");
    if (!arr.is_array()) fail("schellekens.entries", "expected an array");
    std::vector<SchellekensEntry> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string p = "schellekens.entries[" + std::to_string(i) + "]";
        SchellekensEntry e;
        e.index = static_cast<int>(get_long(arr[i], "index", p));
        e.text = get_string(arr[i], "structure", p);
        e.dim = get_long(arr[i], "dim", p);
        std::string at = "entry " + std::to_string(e.index);
        long computed = 0;
        if (e.text == "0") {
            computed = 0;
        } else if (e.text == "C" || e.text.rfind("C^", 0) == 0) {
            FixedAlgebra f = guarded(p, [&] { return FixedAlgebra::parse(e.text); });
            if (!f.simple.empty()) fail(p, "unexpected structure " + e.text);
            e.abelian_rank = f.abelian;
            computed = f.abelian;
        } else {
            e.structure = guarded(p, [&] { return liealg::parse_structure(e.text); });
            computed = e.structure.dim();
            auto chk = liealg::schellekens_constraint(e.structure);
            if (!chk.holds) fail(at, "h^v/k differs from (dim - 24)/24 for " + e.text);
        }
        if (computed != e.dim) {
            fail(at, "stated dimension " + std::to_string(e.dim) + " but " + e.text + " has dimension " + std::to_string(computed));
        }
        if (e.index != static_cast<int>(i)) fail(at, "entries must be numbered consecutively from 0");
        out.push_back(std::move(e));
    }
    if (out.size() != 71) fail("schellekens.entries", "expected 71 entries, found " + std::to_string(out.size()));
    return out;
}

std::vector<OrbifoldCase> load_cases(const std::filesystem::path& path, bool check)
{
    std::string bytes = read_file(path);
    if (check) check_sum(path, bytes);
    return parse_cases(bytes);
}

std::vector<SchellekensEntry> load_schellekens(const std::filesystem::path& path, bool check)
{
    std::string bytes = read_file(path);
    if (check) check_sum(path, bytes);
    return parse_schellekens(bytes);
}

std::filesystem::path default_data_dir()
{
    if (const char* env = std::getenv("ORBIDIM_DATA_DIR"); env && *env) return env;
    return ORBIDIM_DATA_DIR;
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::vector<std::string> checksum_mismatches(const std::filesystem::path& dir)
{
    std::vector<std::string> bad;
    for (const auto& [name, digest] : read_sums(dir)) {
        std::filesystem::path p = dir / name;
        if (!std::filesystem::exists(p) || sha256_hex(read_file(p)) != digest) bad.push_back(name);
    }
    return bad;
}

} // namespace orbidim::cases
