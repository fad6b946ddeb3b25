#include "wonderful/io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace wonderful {

GeometryConfig config_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");
    for (const char* key : {"n", "dim_X", "space"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("config is missing \"") + key + "\"");
    GeometryConfig g;
    try {
        g.n = j.at("n").get<int>();
        g.ambient_dim = j.at("dim_X").get<int>();
        g.space = parse_space_kind(j.at("space").get<std::string>());
        if (j.contains("components")) {
            for (const auto& c : j.at("components")) {
                Component comp;
                comp.name = c.value("name", "c" + std::to_string(g.components.size() + 1));
                comp.dim = c.at("dim").get<int>();
                g.components.push_back(comp);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad config field: ") + e.what());
    }
    g.validate();
    return g;
}

nlohmann::json config_to_json(const GeometryConfig& g)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : g.components)
        comps.push_back({{"name", c.name}, {"dim", c.dim}});
    return {{"n", g.n}, {"dim_X", g.ambient_dim}, {"components", comps}, {"space", std::string(to_string(g.space))}};
}

GeometryConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config " + path + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

std::vector<std::string> split_label_list(std::string_view text)
{
    std::size_t a = 0;
    std::size_t b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1])))
        --b;
    text = text.substr(a, b - a);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("label list must be enclosed in [ ]");
    std::vector<std::string> pieces(1);
    int depth = 0;
    for (char ch : text.substr(1, text.size() - 2)) {
        if (ch == '{')
            ++depth;
        else if (ch == '}')
            --depth;
        if (depth < 0)
            throw std::invalid_argument("unbalanced braces in label list");
        if (ch == ',' && depth == 0)
            pieces.emplace_back();
        else if (ch != '"' && !std::isspace(static_cast<unsigned char>(ch)))
            pieces.back() += ch;
    }
    if (depth != 0)
        throw std::invalid_argument("unbalanced braces in label list");
    if (pieces.size() == 1 && pieces.front().empty())
        return {};
    for (const auto& p : pieces)
        if (p.empty())
            throw std::invalid_argument("empty entry in label list");
    return pieces;
}

LabelExtent label_extent(const std::vector<std::string>& labels)
{
    LabelExtent e;
    for (const auto& l : labels) {
        std::size_t pos = 0;
        if (l.rfind("D:c", 0) == 0) {
            pos = 3;
            int c = 0;
            while (pos < l.size() && std::isdigit(static_cast<unsigned char>(l[pos])))
                c = c * 10 + (l[pos++] - '0');
            e.max_component = std::max(e.max_component, c);
        }
        for (; pos < l.size(); ++pos) {
            if (!std::isdigit(static_cast<unsigned char>(l[pos])))
                continue;
            int v = 0;
            while (pos < l.size() && std::isdigit(static_cast<unsigned char>(l[pos])))
                v = v * 10 + (l[pos++] - '0');
            e.max_point = std::max(e.max_point, v);
        }
    }
    return e;
}

std::vector<BoundaryDivisor> parse_divisors(const std::vector<std::string>& labels, int n)
{
    std::vector<BoundaryDivisor> out;
    for (const auto& l : labels)
        out.push_back(parse_divisor(l, n));
    return out;
}

std::vector<Center> parse_centers(const std::vector<std::string>& labels, int n)
{
    std::vector<Center> out;
    for (const auto& l : labels)
        out.push_back(parse_center(l, n));
    return out;
}

nlohmann::json labels_json(const std::vector<Center>& centers)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : centers)
        out.push_back(c.label());
    return out;
}

nlohmann::json labels_json(const std::vector<BoundaryDivisor>& divisors)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : divisors)
        out.push_back(d.label());
    return out;
}

} // namespace wonderful
