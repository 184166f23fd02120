#include <leibniz/error.hpp>
#include <leibniz/serialize.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace leibniz {

namespace {

[[noreturn]] void schema_error(const std::string& msg) {
    throw Error(ErrorKind::Schema, msg);
}

const Json& field(const Json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t index_value(const Json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(std::string(what) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json& v, const char* what) {
    if (!v.is_array()) schema_error(std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : v) out.push_back(index_value(x, what));
    return out;
}

LeviDatum parse_levi(const Json& j) {
    if (!j.is_object()) schema_error("\"levi\" must be an object");
    LeviDatum levi;
    levi.g_indices = index_list(field(j, "g"), "levi.g");
    levi.i_indices = index_list(field(j, "i"), "levi.i");
    if (auto it = j.find("sl2_triples"); it != j.end()) {
        if (!it->is_array()) schema_error("levi.sl2_triples must be an array");
        for (const auto& t : *it) {
            if (!t.is_array() || t.size() != 3) schema_error("each sl2 triple must be [e, f, h]");
            levi.sl2_triples.push_back(
                {index_value(t[0], "sl2 index"), index_value(t[1], "sl2 index"), index_value(t[2], "sl2 index")});
        }
    }
    return levi;
}

}  // namespace

AlgebraDocument parse_algebra_json(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        schema_error(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) schema_error("top level must be an object");

    const auto& name = field(root, "name");
    if (!name.is_string()) schema_error("\"name\" must be a string");
    const std::size_t dim = index_value(field(root, "dim"), "\"dim\"");

    const auto& basis_json = field(root, "basis");
    if (!basis_json.is_array()) schema_error("\"basis\" must be an array");
    std::vector<std::string> basis;
    for (const auto& b : basis_json) {
        if (!b.is_string()) schema_error("basis labels must be strings");
        basis.push_back(b.get<std::string>());
    }
    if (basis.size() != dim) schema_error("\"basis\" length differs from \"dim\"");

    const auto& products_json = field(root, "products");
    if (!products_json.is_array()) schema_error("\"products\" must be an array");
    std::vector<ProductEntry> products;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& p : products_json) {
        if (!p.is_object()) schema_error("product entries must be objects");
        ProductEntry entry;
        entry.left = index_value(field(p, "left"), "product.left");
        entry.right = index_value(field(p, "right"), "product.right");
        if (entry.left >= dim || entry.right >= dim) schema_error("product index out of range");
        if (!seen.insert({entry.left, entry.right}).second) schema_error("duplicate product entry");

        const auto& result = field(p, "result");
        if (!result.is_array()) schema_error("product.result must be an array");
        std::set<std::size_t> ks;
        for (const auto& t : result) {
            if (!t.is_object()) schema_error("result terms must be objects");
            Term term;
            term.k = index_value(field(t, "k"), "term.k");
            if (term.k >= dim) schema_error("term index out of range");
            if (!ks.insert(term.k).second) schema_error("repeated k within one product");
            const auto& c = field(t, "c");
            if (!c.is_string()) schema_error("coefficients must be \"p/q\" strings");
            term.c = parse_rational(c.get<std::string>());
            entry.result.push_back(std::move(term));
        }
        products.push_back(std::move(entry));
    }

    AlgebraDocument doc{Algebra(name.get<std::string>(), std::move(basis), products), std::nullopt};
    if (auto it = root.find("levi"); it != root.end()) doc.levi = parse_levi(*it);
    return doc;
}

AlgebraDocument load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_json(buf.str());
}

std::string emit_algebra_json(const Algebra& alg, const std::optional<LeviDatum>& levi) {
    Json root;
    root["name"] = alg.name();
    root["dim"] = alg.dim();
    root["basis"] = alg.basis_names();
    Json products = Json::array();
    for (const auto& p : alg.products()) {
        Json result = Json::array();
        for (const auto& t : p.result) result.push_back({{"k", t.k}, {"c", to_string(t.c)}});
        products.push_back({{"left", p.left}, {"right", p.right}, {"result", std::move(result)}});
    }
    root["products"] = std::move(products);
    if (levi) {
        Json triples = Json::array();
        for (const auto& t : levi->sl2_triples) triples.push_back({t[0], t[1], t[2]});
        root["levi"] = {{"g", levi->g_indices}, {"i", levi->i_indices}, {"sl2_triples", std::move(triples)}};
    }
    return root.dump(2) + "\n";
}

Json to_json(const Rational& r) {
    return to_string(r);
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Json to_json(const Subspace& s) {
    return to_json(s.basis());
}

Json to_json(const ModuleDecomposition& d) {
    Json out = Json::array();
    for (const auto& c : d.components) out.push_back({{"highest_weight", c.highest_weight}, {"basis", to_json(c.space)}});
    return out;
}

}  // namespace leibniz
