// leibnizctl: command-line front end over the C API.
//
// Exit codes: 0 pass, 1 mathematical failure, 2 I/O, schema or usage error.

#include <leibniz/leibniz.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kInputFailure = 2;

struct AlgebraDeleter {
    void operator()(lz_algebra* a) const { lz_algebra_free(a); }
};
using AlgebraPtr = std::unique_ptr<lz_algebra, AlgebraDeleter>;

int exit_code_for(lz_status s) {
    switch (s) {
        case LZ_OK: return kPass;
        case LZ_ERR_MATH: return kMathFailure;
        default: return kInputFailure;
    }
}

int report_error(lz_status s) {
    std::cerr << "error (" << lz_status_name(s) << "): " << lz_last_error() << "\n";
    return exit_code_for(s);
}

struct Loaded {
    AlgebraPtr alg;
    int code = kPass;
};

Loaded load(const std::string& path) {
    lz_algebra* raw = nullptr;
    const auto s = lz_algebra_load(path.c_str(), &raw);
    if (s != LZ_OK) return {nullptr, report_error(s)};
    return {AlgebraPtr(raw), kPass};
}

// Runs a report call and takes ownership of the returned string.
template <typename Call>
int fetch(Call&& call, Json& out) {
    char* raw = nullptr;
    const auto s = call(&raw);
    if (s != LZ_OK) return report_error(s);
    out = Json::parse(raw);
    lz_string_free(raw);
    return kPass;
}

std::string join(const Json& arr, const char* sep = ", ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : arr) {
        if (!first) os << sep;
        first = false;
        os << (x.is_string() ? x.get<std::string>() : x.dump());
    }
    return os.str();
}

std::string vec(const Json& v) {
    return "(" + join(v) + ")";
}

// Nonzero coordinates as "c*name" terms.
std::string combination(const Json& v, const Json& names) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto c = v[i].get<std::string>();
        if (c == "0") continue;
        if (any) os << " + ";
        any = true;
        os << (c == "1" ? "" : c + "*") << names[i].get<std::string>();
    }
    return any ? os.str() : "0";
}

void header(const Json& r) {
    const auto& a = r["algebra"];
    std::cout << a["name"].get<std::string>() << " (dim " << a["dim"] << "; basis " << join(a["basis"]) << ")\n";
}

void print_check(const Json& r) {
    header(r);
    const auto& l = r["leibniz"];
    std::cout << "leibniz identity: " << (l["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    for (const auto& v : l["violations"])
        std::cout << "  violated on (" << join(v["triple"]) << "): defect " << vec(v["defect"]) << "\n";
    const auto& s = r["squares_ideal"];
    if (s["pass"].get<bool>())
        std::cout << "ideal of squares: dim " << s["dim"] << ", two-sided, [L, I] = 0\n";
    else
        std::cout << "ideal of squares: FAIL (" << s["error"].get<std::string>() << ")\n";
    const auto& lv = r["levi"];
    if (!lv["present"].get<bool>())
        std::cout << "levi datum: absent\n";
    else if (lv["pass"].get<bool>())
        std::cout << "levi datum: valid\n";
    else
        std::cout << "levi datum: FAIL (" << lv["error"].get<std::string>() << ")\n";
    std::cout << (r["ok"].get<bool>() ? "result: pass" : "result: FAIL") << "\n";
}

void print_derive(const Json& r) {
    header(r);
    const auto& names = r["algebra"]["basis"];
    const auto& d = r["dims"];
    std::cout << "dim Der = " << d["der"] << ", inner = " << d["inner"] << ", outer = " << d["outer"] << "\n";
    if (r.contains("components")) {
        std::cout << "I components:";
        for (const auto& c : r["components"]) std::cout << " [dim " << c.size() << "]";
        std::cout << "\n";
    }
    if (r.contains("decomposition")) {
        for (const auto& e : r["decomposition"]) {
            std::cout << "derivation " << e["index"] << ":\n";
            std::cout << "  a = " << combination(e["a"], names) << "\n";
            const auto& al = e["alpha"];
            std::cout << "  alpha: module map " << (al["module_map"].get<bool>() ? "yes" : "NO") << "; scalars [";
            bool first = true;
            for (const auto& s : al["scalars"]) {
                std::cout << (first ? "" : ", ") << (s.is_null() ? std::string("non-scalar") : s.get<std::string>());
                first = false;
            }
            std::cout << "]; off-diagonal blocks " << (al["off_diagonal_zero"].get<bool>() ? "zero" : "NONZERO") << "\n";
            const auto& de = e["delta"];
            std::cout << "  delta: span dim " << de["span_dim"] << " (" << de["classification"].get<std::string>()
                      << "), module identity " << (de["module_check"].get<bool>() ? "holds" : "FAILS") << "\n";
            for (const auto& img : de["images"])
                std::cout << "    delta(" << img["of"].get<std::string>() << ") = " << combination(img["value"], names)
                          << "\n";
        }
        const auto& ds = r["delta_summary"];
        std::cout << "delta span over all derivations: dim " << ds["span_dim"] << "\n";
    }
    if (r.contains("probe")) {
        const auto& p = r["probe"];
        std::cout << "completeness probe (seed " << p["seed"] << "): " << p["agreements"] << "/" << p["trials"]
                  << " agree\n";
    }
    std::cout << (r["ok"].get<bool>() ? "result: pass" : "result: FAIL") << "\n";
}

void print_radical(const Json& r) {
    header(r);
    std::cout << "ideal of squares: dim " << r["squares_ideal"]["dim"] << "\n";
    std::cout << "derived series dims: " << join(r["derived_series_dims"]) << "\n";
    std::cout << "solvable: " << (r["is_solvable"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "solvable radical: dim " << r["radical"]["dim"] << "\n";
    std::cout << "semisimple: " << (r["is_semisimple"].get<bool>() ? "yes" : "no") << "\n";
    const auto& q = r["quotient"];
    std::cout << "L/I: dim " << q["dim"] << ", Lie " << (q["is_lie"].get<bool>() ? "yes" : "no");
    if (q.contains("simple_summand_dims")) std::cout << ", simple summands [" << join(q["simple_summand_dims"]) << "]";
    std::cout << "\n";
    if (r.contains("simple")) {
        const auto& s = r["simple"];
        std::cout << "simple: " << s["verdict"].get<std::string>() << " (" << s["reason"].get<std::string>() << ")";
        if (s.contains("witness")) std::cout << "; witness ideal of dim " << s["witness"].size();
        std::cout << "\n";
    }
}

void print_modules(const Json& r) {
    header(r);
    const auto& names = r["algebra"]["basis"];
    for (const auto& t : r["triples"]) {
        std::cout << "triple (" << join(t["triple"]) << "): relations "
                  << (t["relations_hold"].get<bool>() ? "hold" : "FAIL") << "\n";
        if (t.contains("weights")) {
            std::cout << "  weights:";
            for (const auto& w : t["weights"]) std::cout << " " << w["weight"].get<std::string>() << "^" << w["dim"];
            std::cout << "\n";
        }
        if (t.contains("decomposition"))
            for (const auto& c : t["decomposition"])
                std::cout << "  component: highest weight " << c["highest_weight"] << ", dim " << c["basis"].size()
                          << ", top " << combination(c["basis"][0], names) << "\n";
        if (t.contains("error")) std::cout << "  error: " << t["error"].get<std::string>() << "\n";
    }
    if (r.contains("conditions")) {
        const auto& c = r["conditions"];
        auto mark = [](const Json& b) { return b.get<bool>() ? "pass" : "FAIL"; };
        std::cout << "conditions: (a) " << mark(c["a"]) << ", (b) " << mark(c["b"]) << ", (c) " << mark(c["c"]) << "\n";
        for (const auto& n : c["notes"]) std::cout << "  " << n.get<std::string>() << "\n";
    }
}

int finish(const Json& r, bool as_json, void (*printer)(const Json&)) {
    if (as_json)
        std::cout << r.dump(2) << "\n";
    else
        printer(r);
    return r["ok"].get<bool>() ? kPass : kMathFailure;
}

// "simple:2,pair:1,sl2" -> direct sum of the listed catalog members.
int build_sum(const std::string& parts, bool force, AlgebraPtr& out) {
    std::stringstream ss(parts);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        const std::string family = item.substr(0, colon);
        long m = 0;
        if (colon != std::string::npos) {
            try {
                m = std::stol(item.substr(colon + 1));
            } catch (const std::exception&) {
                std::cerr << "error: bad parameter in \"" << item << "\"\n";
                return kInputFailure;
            }
        }
        lz_algebra* raw = nullptr;
        auto s = lz_catalog_build(family.c_str(), m, force ? 1 : 0, &raw);
        if (s != LZ_OK) return report_error(s);
        AlgebraPtr part(raw);
        if (!out) {
            out = std::move(part);
            continue;
        }
        lz_algebra* summed = nullptr;
        s = lz_algebra_direct_sum(out.get(), part.get(), &summed);
        if (s != LZ_OK) return report_error(s);
        out.reset(summed);
    }
    if (!out) {
        std::cerr << "error: --parts is empty\n";
        return kInputFailure;
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact derivation and structure analysis of finite-dimensional right Leibniz algebras"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    bool decompose = false;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "validate an algebra file");
    check->add_option("path", path, "algebra JSON file")->required();
    check->add_flag("--json", as_json, "emit the JSON report");

    auto* derive = app.add_subcommand("derive", "derivation algebra and its canonical decomposition");
    derive->add_option("path", path, "algebra JSON file")->required();
    derive->add_flag("--decompose", decompose, "decompose every basis derivation as R_a + alpha + delta");
    derive->add_flag("--json", as_json, "emit the JSON report");
    auto* seed_opt = derive->add_option("--seed", seed, "run the randomized completeness probe with this seed");

    auto* radical = app.add_subcommand("radical", "ideal of squares, radical and simplicity");
    radical->add_option("path", path, "algebra JSON file")->required();
    radical->add_flag("--json", as_json, "emit the JSON report");

    auto* modules = app.add_subcommand("modules", "sl2-module structure of the ideal of squares");
    modules->add_option("path", path, "algebra JSON file")->required();
    modules->add_flag("--json", as_json, "emit the JSON report");

    std::string family;
    long m = 0;
    std::string output;
    std::string parts;
    bool force = false;
    auto* catalog = app.add_subcommand("catalog", "write a catalog algebra as JSON");
    catalog->add_option("family", family, "sl2 | simple | pair | solvable2 | sum")->required();
    catalog->add_option("--m", m, "family parameter");
    catalog->add_option("-o", output, "output path (stdout when omitted)");
    catalog->add_option("--parts", parts, "for sum: comma-separated family:m list, e.g. simple:2,simple:3");
    catalog->add_flag("--force", force, "allow parameters outside the certified range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputFailure;
    }

    if (*catalog) {
        AlgebraPtr alg;
        if (family == "sum") {
            if (const int code = build_sum(parts, force, alg); code != kPass) return code;
        } else {
            lz_algebra* raw = nullptr;
            const auto s = lz_catalog_build(family.c_str(), m, force ? 1 : 0, &raw);
            if (s != LZ_OK) return report_error(s);
            alg.reset(raw);
        }
        if (!output.empty()) {
            const auto s = lz_algebra_save(alg.get(), output.c_str());
            return s == LZ_OK ? kPass : report_error(s);
        }
        char* text = nullptr;
        const auto s = lz_algebra_to_json(alg.get(), &text);
        if (s != LZ_OK) return report_error(s);
        std::cout << text;
        lz_string_free(text);
        return kPass;
    }

    auto loaded = load(path);
    if (!loaded.alg) return loaded.code;
    const lz_algebra* alg = loaded.alg.get();

    Json report;
    int code = kPass;
    if (*check) {
        code = fetch([&](char** out) { return lz_report_check(alg, out); }, report);
        return code != kPass ? code : finish(report, as_json, print_check);
    }
    if (*derive) {
        const int use_seed = seed_opt->count() > 0 ? 1 : 0;
        code = fetch([&](char** out) { return lz_report_derive(alg, decompose ? 1 : 0, use_seed, seed, out); }, report);
        return code != kPass ? code : finish(report, as_json, print_derive);
    }
    if (*radical) {
        code = fetch([&](char** out) { return lz_report_radical(alg, out); }, report);
        return code != kPass ? code : finish(report, as_json, print_radical);
    }
    code = fetch([&](char** out) { return lz_report_modules(alg, out); }, report);
    return code != kPass ? code : finish(report, as_json, print_modules);
}
