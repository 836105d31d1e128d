#include "comax/export.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "comax/errors.hpp"

namespace comax {

namespace {

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_dot(const SimpleGraph& g)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        out << "  " << v << " [label=" << quote(g.labels()[v]) << "];\n";
    for (const auto& [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json to_json(const SimpleGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.size()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("graph JSON needs n and edges", 0, {"n", "edges"});
    const auto n = doc["n"].get<std::size_t>();
    SimpleGraph g(n);
    if (doc.contains("labels")) {
        auto labels = doc["labels"].get<std::vector<std::string>>();
        if (labels.size() != n)
            throw ParseError("label count differs from n", 0, {});
        g.set_labels(std::move(labels));
    }
    for (const auto& e : doc["edges"]) {
        const auto u = e.at(0).get<std::size_t>(), v = e.at(1).get<std::size_t>();
        if (u >= n || v >= n || u == v)
            throw ParseError("edge endpoint out of range or loop", 0, {});
        g.add_edge(u, v);
    }
    return g;
}

namespace {

class DotReader {
  public:
    explicit DotReader(std::string_view text) : text_(text) {}

    SimpleGraph read()
    {
        expect("graph");
        skip_space();
        while (pos_ < text_.size() && text_[pos_] != '{' && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        expect("{");
        std::vector<std::string> labels;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (;;) {
            skip_space();
            if (peek() == '}') {
                ++pos_;
                break;
            }
            const auto u = number();
            skip_space();
            if (peek() == '[') {
                expect("[");
                expect("label");
                expect("=");
                if (u != labels.size())
                    fail("node lines must be in vertex order", {});
                labels.push_back(string());
                expect("]");
            } else {
                expect("--");
                edges.emplace_back(u, number());
            }
            expect(";");
        }
        SimpleGraph g(labels.size());
        g.set_labels(std::move(labels));
        for (const auto& [u, v] : edges) {
            if (u >= g.size() || v >= g.size() || u == v)
                fail("edge endpoint out of range or loop", {});
            g.add_edge(u, v);
        }
        return g;
    }

  private:
    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const
    {
        throw ParseError(message, pos_, std::move(expected));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(std::string_view token)
    {
        skip_space();
        if (text_.substr(pos_, token.size()) != token)
            fail("unexpected input", {std::string(token)});
        pos_ += token.size();
    }

    std::size_t number()
    {
        skip_space();
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc())
            fail("expected a vertex number", {"number"});
        pos_ = static_cast<std::size_t>(end - text_.data());
        return value;
    }

    std::string string()
    {
        skip_space();
        if (peek() != '"')
            fail("expected a quoted label", {"\""});
        ++pos_;
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
                ++pos_;
            out += text_[pos_++];
        }
        if (pos_ >= text_.size())
            fail("unterminated label", {"\""});
        ++pos_;
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SimpleGraph graph_from_dot(std::string_view text)
{
    return DotReader(text).read();
}

} // namespace comax
