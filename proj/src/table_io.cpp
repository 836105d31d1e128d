#include <fstream>

#include "comax/codecs.hpp"
#include "comax/errors.hpp"
#include "comax/ring_ops.hpp"
#include "comax/ring_spec.hpp"

namespace comax {

nlohmann::json table_ring_to_json(const Ring& ring)
{
    const auto n = static_cast<Element>(ring.size());
    std::vector<Element> add(std::size_t{n} * n), mul(std::size_t{n} * n);
    std::vector<std::string> labels(n);
    for (Element a = 0; a < n; ++a) {
        labels[a] = ring.label(a);
        for (Element b = 0; b < n; ++b) {
            add[std::size_t{a} * n + b] = ring.add(a, b);
            mul[std::size_t{a} * n + b] = ring.mul(a, b);
        }
    }
    nlohmann::json doc;
    doc["size"] = n;
    doc["one"] = ring.one();
    doc["add"] = add;
    doc["mul"] = mul;
    doc["labels"] = labels;
    return doc;
}

namespace {

std::vector<Element> read_table(const nlohmann::json& doc, const char* key, std::size_t n)
{
    if (!doc.contains(key) || !doc[key].is_array())
        throw TableError(std::string("table ring: missing array \"") + key + "\"");
    const auto& arr = doc[key];
    if (arr.size() != n * n)
        throw TableError(std::string("table ring: \"") + key + "\" must have size^2 = " + std::to_string(n * n) +
                         " entries, found " + std::to_string(arr.size()));
    std::vector<Element> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& v = arr[i];
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::uint64_t>() >= n)
            throw TableError(std::string("table ring: \"") + key + "\" entry " + std::to_string(i) +
                                 " is not an element index",
                             "closure", {i / n, i % n});
        out.push_back(v.get<Element>());
    }
    return out;
}

} // namespace

RingPtr table_ring_from_json(const nlohmann::json& doc, std::string name, std::size_t max_size)
{
    if (!doc.is_object())
        throw TableError("table ring: top level must be a JSON object");
    if (!doc.contains("size") || !doc["size"].is_number_integer() || doc["size"].get<std::int64_t>() < 0)
        throw TableError("table ring: missing non-negative integer \"size\"");
    const auto n = doc["size"].get<std::size_t>();
    if (n < 2)
        throw TableError("table ring: size must be at least 2");
    if (n > max_size)
        throw ResourceError("table ring has " + std::to_string(n) + " elements, above the cap of " +
                            std::to_string(max_size));
    if (!doc.contains("one") || !doc["one"].is_number_integer() || doc["one"].get<std::int64_t>() < 0 ||
        doc["one"].get<std::size_t>() >= n)
        throw TableError("table ring: \"one\" must be an element index");
    const auto one = doc["one"].get<Element>();
    if (one == 0)
        throw TableError("table ring: one must differ from zero (element 0)", "zero != one", {0});
    auto add = read_table(doc, "add", n);
    auto mul = read_table(doc, "mul", n);
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array() || doc["labels"].size() != n)
            throw TableError("table ring: \"labels\" must be an array of size strings");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                throw TableError("table ring: labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    auto ring = std::make_shared<Ring>(make_table_codec(n, one, std::move(add), std::move(mul), std::move(labels)),
                                       std::move(name));
    if (auto violation = check_ring_axioms(*ring)) {
        std::string w;
        for (auto x : violation->witness)
            w += (w.empty() ? "" : ",") + std::to_string(x);
        throw TableError("table ring violates " + violation->axiom + " at (" + w + ")", violation->axiom,
                         std::vector<std::size_t>(violation->witness.begin(), violation->witness.end()));
    }
    return ring;
}

RingPtr load_table_ring(const std::filesystem::path& path, std::size_t max_size)
{
    std::ifstream in(path);
    if (!in)
        throw TableError("cannot open table ring file " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw TableError("table ring file " + path.string() + " is not valid JSON: " + e.what());
    }
    return table_ring_from_json(doc, "table:" + path.string(), max_size);
}

void save_table_ring(const Ring& ring, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw TableError("cannot write table ring file " + path.string());
    out << table_ring_to_json(ring).dump() << '\n';
}

} // namespace comax
