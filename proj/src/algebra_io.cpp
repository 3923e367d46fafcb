#include "leibhom/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace leibhom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &field, const std::string &why)
{
    throw InputError("algebra file: " + field + ": " + why);
}

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where)
{
    for (const auto &item : obj.items()) {
        if (!allowed.contains(item.key())) {
            fail(where + item.key(), "unknown key");
        }
    }
}

const json &require(const json &obj, const std::string &key, const std::string &where)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where + key, "missing");
    }
    return *it;
}

std::size_t basis_index(const LeibnizAlgebra &a, const json &v, const std::string &field)
{
    if (!v.is_string()) {
        fail(field, "expected a basis name string");
    }
    auto idx = a.index_of(v.get<std::string>());
    if (!idx) {
        fail(field, "unknown basis name '" + v.get<std::string>() + "'");
    }
    return *idx;
}

} // namespace

LeibnizAlgebra algebra_from_json(const json &doc)
{
    if (!doc.is_object()) {
        fail("<root>", "expected a JSON object");
    }
    reject_unknown(doc, {"name", "dimension", "basis", "brackets", "weights"}, "");

    const json &name = require(doc, "name", "");
    if (!name.is_string()) {
        fail("name", "expected a string");
    }
    const json &dimension = require(doc, "dimension", "");
    if (!dimension.is_number_unsigned()) {
        fail("dimension", "expected a non-negative integer");
    }
    const json &basis = require(doc, "basis", "");
    if (!basis.is_array()) {
        fail("basis", "expected an array of strings");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_string()) {
            fail("basis[" + std::to_string(i) + "]", "expected a string");
        }
        names.push_back(basis[i].get<std::string>());
    }
    if (names.size() != dimension.get<std::size_t>()) {
        fail("basis", "has " + std::to_string(names.size()) + " entries but dimension is " +
                          std::to_string(dimension.get<std::size_t>()));
    }

    std::optional<std::vector<unsigned>> weights;
    if (auto it = doc.find("weights"); it != doc.end()) {
        if (!it->is_array()) {
            fail("weights", "expected an array of positive integers");
        }
        weights.emplace();
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json &w = (*it)[i];
            if (!w.is_number_unsigned() || w.get<unsigned>() == 0) {
                fail("weights[" + std::to_string(i) + "]", "expected a positive integer");
            }
            weights->push_back(w.get<unsigned>());
        }
    }

    LeibnizAlgebra a(name.get<std::string>(), names, weights);

    const json &brackets = require(doc, "brackets", "");
    if (!brackets.is_array()) {
        fail("brackets", "expected an array");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t b = 0; b < brackets.size(); ++b) {
        const std::string where = "brackets[" + std::to_string(b) + "].";
        const json &entry = brackets[b];
        if (!entry.is_object()) {
            fail("brackets[" + std::to_string(b) + "]", "expected an object");
        }
        reject_unknown(entry, {"left", "right", "value"}, where);
        const std::size_t i = basis_index(a, require(entry, "left", where), where + "left");
        const std::size_t j = basis_index(a, require(entry, "right", where), where + "right");
        if (!seen.emplace(i, j).second) {
            fail(where + "left", "duplicate bracket {" + names[i] + "," + names[j] + "}");
        }
        const json &value = require(entry, "value", where);
        if (!value.is_object()) {
            fail(where + "value", "expected an object of basis name -> rational string");
        }
        SparseVector v;
        for (const auto &item : value.items()) {
            const std::string field = where + "value." + item.key();
            auto k = a.index_of(item.key());
            if (!k) {
                fail(field, "unknown basis name '" + item.key() + "'");
            }
            if (!item.value().is_string()) {
                fail(field, "expected a rational string such as \"-3/2\"");
            }
            try {
                v[*k] = Scalar::parse(item.value().get<std::string>());
            } catch (const std::invalid_argument &e) {
                fail(field, e.what());
            }
        }
        a.set_bracket(i, j, v);
    }
    return a;
}

LeibnizAlgebra algebra_from_string(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("algebra file: JSON syntax error: ") + e.what());
    }
    return algebra_from_json(doc);
}

LeibnizAlgebra algebra_from_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open algebra file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return algebra_from_string(buffer.str());
    } catch (const InputError &e) {
        throw InputError(path + ": " + e.what());
    }
}

json algebra_to_json(const LeibnizAlgebra &a)
{
    json doc;
    doc["name"] = a.name();
    doc["dimension"] = a.dimension();
    doc["basis"] = a.basis_names();
    json brackets = json::array();
    const auto &names = a.basis_names();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            const auto &v = a.structure(i, j);
            if (v.empty()) {
                continue;
            }
            json value = json::object();
            for (const auto &[k, c] : v) {
                value[names[k]] = c.to_string();
            }
            brackets.push_back({{"left", names[i]}, {"right", names[j]}, {"value", value}});
        }
    }
    doc["brackets"] = brackets;
    if (a.weights()) {
        doc["weights"] = *a.weights();
    }
    return doc;
}

} // namespace leibhom
