#include "wonderful/blowup_orders.hpp"
#include "wonderful/certify.hpp"
#include "wonderful/degenerations.hpp"
#include "wonderful/io.hpp"
#include "wonderful/nested_sets.hpp"
#include "wonderful/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace wonderful;
using nlohmann::json;

namespace {

struct CommonOptions {
    std::string config_path;
    std::optional<int> n;
    std::optional<int> dim_x;
    std::optional<int> components;
    std::optional<int> component_dim;
    std::optional<std::string> space;
    std::string format = "table";
    int workers = 1;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void add_common(CLI::App* cmd, CommonOptions& o, std::vector<std::string> formats)
{
    cmd->add_option("--config", o.config_path, "geometry config JSON file");
    cmd->add_option("--n", o.n, "number of marked points");
    cmd->add_option("--dim-x", o.dim_x, "dimension of X (default 1)");
    cmd->add_option("--components", o.components, "number of components of D");
    cmd->add_option("--component-dim", o.component_dim, "dimension of every component (default 0)");
    cmd->add_option("--space", o.space, "XD_upper, XD_bracket (default) or FM");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--workers", o.workers, "enumeration threads")->check(CLI::Range(1, 256));
}

/// Config file first, then flags, then whatever the labels imply.
GeometryConfig resolve_geometry(const CommonOptions& o, const std::vector<std::string>& labels = {})
{
    try {
        GeometryConfig g;
        bool from_file = !o.config_path.empty();
        if (from_file)
            g = load_config(o.config_path);
        else
            g = make_geometry(0, 1, 0, 0, SpaceKind::XDBracket);
        LabelExtent ext = label_extent(labels);
        if (o.n)
            g.n = *o.n;
        else if (!from_file)
            g.n = ext.max_point;
        if (o.dim_x)
            g.ambient_dim = *o.dim_x;
        if (o.space)
            g.space = parse_space_kind(*o.space);
        int count = g.component_count();
        if (o.components)
            count = *o.components;
        else if (!from_file)
            count = ext.max_component;
        int dim = o.component_dim.value_or(g.components.empty() ? 0 : g.components.front().dim);
        if (count != g.component_count() || o.component_dim)
            g.components = make_geometry(g.n, g.ambient_dim, count, dim, g.space).components;
        g.validate();
        if (ext.max_point > g.n)
            throw std::invalid_argument("labels mention point " + std::to_string(ext.max_point) + " but n = " +
                                        std::to_string(g.n));
        return g;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void print_labels(const json& labels, const std::string& format, const std::string& header)
{
    if (format == "json") {
        std::cout << labels.dump() << '\n';
        return;
    }
    if (format == "csv")
        std::cout << header << '\n';
    for (const auto& l : labels)
        std::cout << l.get<std::string>() << '\n';
}

std::string joined(const std::vector<BoundaryDivisor>& ds)
{
    std::string out;
    for (std::size_t k = 0; k < ds.size(); ++k)
        out += (k ? " " : "") + ds[k].label();
    return out.empty() ? "{}" : out;
}

void print_nested(const std::vector<NestedSet>& sets, const std::string& format)
{
    if (format == "json") {
        json arr = json::array();
        for (const auto& ns : sets)
            arr.push_back(labels_json(ns.divisors()));
        std::cout << arr.dump() << '\n';
        return;
    }
    if (format == "csv")
        std::cout << "size,divisors\n";
    for (const auto& ns : sets) {
        if (format == "csv")
            std::cout << ns.size() << ",\"" << joined(ns.divisors()) << "\"\n";
        else
            std::cout << joined(ns.divisors()) << '\n';
    }
}

void print_fvector(const std::vector<std::uint64_t>& f, const std::string& format)
{
    if (format == "json") {
        std::cout << json(f).dump() << '\n';
        return;
    }
    if (format == "csv") {
        for (std::size_t k = 0; k < f.size(); ++k)
            std::cout << (k ? "," : "") << 'f' << k;
        std::cout << '\n';
        for (std::size_t k = 0; k < f.size(); ++k)
            std::cout << (k ? "," : "") << f[k];
        std::cout << '\n';
        return;
    }
    for (std::size_t k = 0; k < f.size(); ++k)
        std::cout << 'f' << k << ' ' << f[k] << '\n';
}

json tree_json(const DegenerationTree& t)
{
    json vs = json::array();
    for (const auto& v : t.vertices) {
        json j;
        switch (v.kind) {
        case VertexKind::Root: j["kind"] = "root"; break;
        case VertexKind::DLevel: j["kind"] = "d-level"; break;
        case VertexKind::Screen: j["kind"] = "screen"; break;
        }
        if (v.kind == VertexKind::DLevel) {
            j["component"] = v.component + 1;
            j["depth"] = v.depth;
        }
        j["parent"] = v.parent;
        j["markings"] = v.markings;
        vs.push_back(j);
    }
    return {{"vertices", vs}, {"stable", is_stable(t).stable}};
}

json step_json(const SwapStep& s)
{
    return {{"position", s.position},
            {"left", s.left.label()},
            {"right", s.right.label()},
            {"certified", std::string(to_string(s.certified))}};
}

int run_certify(const GeometryConfig& g, const CommonOptions& o)
{
    auto results = run_certification(g, o.workers);
    bool failed = false;
    json arr = json::array();
    for (const auto& r : results) {
        failed = failed || r.status == CheckStatus::Fail;
        arr.push_back({{"check", r.name}, {"status", std::string(to_string(r.status))}, {"detail", r.detail}});
    }
    if (o.format == "json") {
        std::cout << arr.dump() << '\n';
    } else if (o.format == "csv") {
        std::cout << "check,status,detail\n";
        for (const auto& r : results)
            std::cout << r.name << ',' << to_string(r.status) << ",\"" << r.detail << "\"\n";
    } else {
        for (const auto& r : results)
            std::cout << to_string(r.status) << ' ' << r.name << ": " << r.detail << '\n';
    }
    return failed ? 1 : 0;
}

void print_error(const std::string& kind, const std::string& message)
{
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Combinatorics of wonderful compactifications of configuration spaces"};
    app.require_subcommand(1);
    CommonOptions o;
    const std::vector<std::string> listing = {"table", "json", "csv"};

    auto* divisors = app.add_subcommand("divisors", "list boundary divisors");
    add_common(divisors, o, listing);

    auto* nested = app.add_subcommand("nested", "enumerate nested sets, or test one");
    add_common(nested, o, listing);
    std::optional<int> max_size;
    bool want_fvector = false;
    std::string check_literal;
    nested->add_option("--max-size", max_size, "largest nested set to list");
    nested->add_flag("--fvector", want_fvector, "print the f-vector as f0,f1,...");
    nested->add_option("--check", check_literal, "report whether this label list is nested");

    auto* facets = app.add_subcommand("facets", "list maximal nested sets");
    add_common(facets, o, listing);

    auto* fvector = app.add_subcommand("fvector", "f-vector of the nested set complex");
    add_common(fvector, o, listing);

    auto* order = app.add_subcommand("order", "generate a blowup order");
    add_common(order, o, listing);
    std::string scheme = "inclusion";
    order->add_option("--scheme", scheme, "inclusion, reshuffled, interleaved or two-block");

    auto* rewrite = app.add_subcommand("rewrite", "rewrite one blowup order into another by certified swaps");
    add_common(rewrite, o, listing);
    std::string from_scheme = "two-block";
    std::string to_scheme = "interleaved";
    rewrite->add_option("--from", from_scheme, "starting scheme");
    rewrite->add_option("--to", to_scheme, "target scheme");
    bool ambient_only = false;
    rewrite->add_flag("--ambient-rule", ambient_only, "classify swaps in the ambient space only");

    auto* fiber = app.add_subcommand("fiber", "degeneration tree of a nested set");
    add_common(fiber, o, {"table", "json", "dot"});
    std::string fiber_literal;
    fiber->add_option("--nested", fiber_literal, "nested set literal")->required();

    auto* orbit = app.add_subcommand("orbits", "S_n orbits of divisors or nested sets");
    add_common(orbit, o, listing);
    int orbit_k = 0;
    orbit->add_option("--k", orbit_k, "nested set size; 0 lists divisor orbits");

    auto* certify = app.add_subcommand("certify", "run the cross-validation checks");
    add_common(certify, o, listing);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return 2;
    }

    try {
        EnumerationOptions eopts;
        eopts.workers = o.workers;

        if (divisors->parsed()) {
            auto g = resolve_geometry(o);
            print_labels(labels_json(all_divisors(g)), o.format, "label");
        } else if (nested->parsed()) {
            std::vector<std::string> labels;
            if (!check_literal.empty())
                labels = split_label_list(check_literal);
            auto g = resolve_geometry(o, labels);
            if (!check_literal.empty()) {
                auto ds = parse_divisors(labels, g.n);
                bool ok = is_nested(g, ds);
                if (o.format == "json")
                    std::cout << json{{"nested", ok}}.dump() << '\n';
                else
                    std::cout << (ok ? "nested" : "not nested") << '\n';
                return 0;
            }
            eopts.max_size = max_size;
            if (want_fvector) {
                auto f = f_vector(g, eopts);
                for (std::size_t k = 0; k < f.size(); ++k)
                    std::cout << (k ? "," : "") << f[k];
                std::cout << '\n';
            } else {
                print_nested(enumerate_nested_sets(g, eopts), o.format);
            }
        } else if (facets->parsed()) {
            print_nested(maximal_nested_sets(resolve_geometry(o), eopts), o.format);
        } else if (fvector->parsed()) {
            print_fvector(f_vector(resolve_geometry(o), eopts), o.format);
        } else if (order->parsed()) {
            auto g = resolve_geometry(o);
            if (order->count("--format") == 0)
                o.format = "json";
            auto seq = generate_order(g, parse_order_scheme(scheme));
            print_labels(labels_json(seq.centers), o.format, "label");
        } else if (rewrite->parsed()) {
            auto g = resolve_geometry(o);
            auto from = generate_order(g, parse_order_scheme(from_scheme));
            auto to = generate_order(g, parse_order_scheme(to_scheme));
            auto res = swap_rewrite(from, to, ambient_only ? SwapRule::Ambient : SwapRule::StageAware);
            json out{{"ok", res.ok}, {"swaps", res.trace.size()}};
            json steps = json::array();
            for (const auto& s : res.trace)
                steps.push_back(step_json(s));
            out["trace"] = steps;
            if (res.blocking)
                out["blocking"] = {res.blocking->first.label(), res.blocking->second.label(),
                                   std::string(to_string(res.blocking_position))};
            out["final_order"] = labels_json(res.final_order);
            if (o.format == "json") {
                std::cout << out.dump() << '\n';
            } else {
                if (o.format == "csv")
                    std::cout << "position,left,right,certified\n";
                for (const auto& s : res.trace)
                    std::cout << s.position << (o.format == "csv" ? "," : " ") << s.left.label()
                              << (o.format == "csv" ? "," : " ") << s.right.label() << (o.format == "csv" ? "," : " ")
                              << to_string(s.certified) << '\n';
                if (o.format == "table")
                    std::cout << (res.ok ? "ok" : "blocked") << '\n';
            }
            return res.ok ? 0 : 1;
        } else if (fiber->parsed()) {
            auto labels = split_label_list(fiber_literal);
            auto g = resolve_geometry(o, labels);
            NestedSet ns(g, parse_divisors(labels, g.n));
            auto t = fiber_tree(ns);
            if (o.format == "dot")
                std::cout << to_dot(t);
            else if (o.format == "json")
                std::cout << tree_json(t).dump() << '\n';
            else
                std::cout << to_dot(t);
        } else if (orbit->parsed()) {
            auto g = resolve_geometry(o);
            auto os = orbit_k == 0 ? orbits(g, OrbitKind::Divisors) : orbits(g, OrbitKind::NestedK, orbit_k);
            if (o.format == "json") {
                json arr = json::array();
                for (const auto& ob : os)
                    arr.push_back({{"representative", labels_json(ob.representative)}, {"size", ob.size}});
                std::cout << arr.dump() << '\n';
            } else {
                if (o.format == "csv")
                    std::cout << "size,representative\n";
                for (const auto& ob : os)
                    std::cout << ob.size << (o.format == "csv" ? ",\"" : " ") << joined(ob.representative)
                              << (o.format == "csv" ? "\"" : "") << '\n';
            }
        } else if (certify->parsed()) {
            return run_certify(resolve_geometry(o), o);
        }
    } catch (const ConfigError& e) {
        print_error("invalid-config", e.what());
        return 2;
    } catch (const BudgetExceeded& e) {
        print_error("budget-exceeded", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        print_error("invalid-input", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
    return 0;
}
