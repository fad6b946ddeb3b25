#include "wonderful/locus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace wonderful {

std::string_view to_string(SpaceKind s)
{
    switch (s) {
    case SpaceKind::XDUpper: return "XD_upper";
    case SpaceKind::XDBracket: return "XD_bracket";
    case SpaceKind::FM: return "FM";
    }
    return "?";
}

SpaceKind parse_space_kind(std::string_view text)
{
    if (text == "XD_upper")
        return SpaceKind::XDUpper;
    if (text == "XD_bracket")
        return SpaceKind::XDBracket;
    if (text == "FM")
        return SpaceKind::FM;
    throw std::invalid_argument("unknown space \"" + std::string(text) + "\" (expected XD_upper, XD_bracket or FM)");
}

void GeometryConfig::validate() const
{
    if (n < 0 || n > kMaxPoints)
        throw std::invalid_argument("n must lie in [0, 64], got " + std::to_string(n));
    if (ambient_dim < 1)
        throw std::invalid_argument("dim_X must be positive, got " + std::to_string(ambient_dim));
    for (const auto& c : components) {
        if (c.dim < 0 || c.dim >= ambient_dim)
            throw std::invalid_argument("component \"" + c.name + "\" has dim " + std::to_string(c.dim) +
                                        "; need 0 <= dim < dim_X = " + std::to_string(ambient_dim));
    }
}

GeometryConfig GeometryConfig::with_points(int points) const
{
    GeometryConfig out = *this;
    out.n = points;
    return out;
}

GeometryConfig make_geometry(int n, int ambient_dim, int count, int dim, SpaceKind space)
{
    GeometryConfig g;
    g.n = n;
    g.ambient_dim = ambient_dim;
    g.space = space;
    for (int c = 0; c < count; ++c)
        g.components.push_back({"c" + std::to_string(c + 1), dim});
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// Center

Center Center::d_locus(int component, const IndexSubset& subset)
{
    if (component < 0)
        throw std::invalid_argument("component index must be nonnegative");
    if (subset.empty())
        throw std::invalid_argument("D-locus needs a nonempty index set");
    Center c;
    c.kind_ = Kind::DLocus;
    c.component_ = component;
    c.subset_ = subset;
    c.partition_ = Partition::discrete(subset.population());
    return c;
}

Center Center::diagonal(const IndexSubset& block)
{
    if (block.size() < 2)
        throw std::invalid_argument("diagonal needs |I| >= 2, got " + block.to_string());
    return diagonal(Partition::simple(block));
}

Center Center::diagonal(const Partition& partition)
{
    auto support = partition.support();
    if (support.empty())
        throw std::invalid_argument("polydiagonal needs a block of size >= 2");
    Center c;
    c.kind_ = Kind::Diagonal;
    c.partition_ = partition;
    c.subset_ = support.size() == 1 ? support.front() : IndexSubset(partition.population(), 0);
    return c;
}

bool Center::is_simple_diagonal() const
{
    return kind_ == Kind::Diagonal && partition_.support().size() == 1;
}

int Center::population() const { return partition_.population(); }

std::string Center::label() const
{
    if (kind_ == Kind::DLocus)
        return "D:c" + std::to_string(component_ + 1) + ":" + subset_.to_string();
    if (is_simple_diagonal())
        return "Delta:" + subset_.to_string();
    return "Delta:" + partition_.to_string();
}

void Center::validate(const GeometryConfig& g) const
{
    if (population() != g.n)
        throw std::invalid_argument("center " + label() + " is over " + std::to_string(population()) +
                                    " points, geometry has n = " + std::to_string(g.n));
    if (kind_ == Kind::DLocus && component_ >= g.component_count())
        throw std::invalid_argument("center " + label() + " names a component the geometry lacks");
}

std::strong_ordering operator<=>(const Center& a, const Center& b)
{
    if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0)
        return c;
    if (a.kind_ == Center::Kind::DLocus) {
        if (auto c = a.component_ <=> b.component_; c != 0)
            return c;
        return a.subset_ <=> b.subset_;
    }
    bool sa = a.is_simple_diagonal();
    bool sb = b.is_simple_diagonal();
    if (sa != sb)
        return sa ? std::strong_ordering::less : std::strong_ordering::greater;
    if (sa)
        return a.subset_ <=> b.subset_;
    return a.partition_ <=> b.partition_;
}

Center parse_center(std::string_view text, int n)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.starts_with("Delta:")) {
        auto body = trim(text.substr(6));
        if (body.size() > 1 && body[0] == '{' && body.find('{', 1) != std::string_view::npos)
            return Center::diagonal(parse_partition(body, n));
        return Center::diagonal(parse_subset(body, n));
    }
    if (text.starts_with("D:c")) {
        auto rest = text.substr(3);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos || colon == 0)
            throw std::invalid_argument("malformed D-label \"" + std::string(text) + "\"");
        int index = 0;
        for (char ch : rest.substr(0, colon)) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("malformed component index in \"" + std::string(text) + "\"");
            index = index * 10 + (ch - '0');
        }
        if (index < 1)
            throw std::invalid_argument("component indices in labels start at 1: \"" + std::string(text) + "\"");
        return Center::d_locus(index - 1, parse_subset(rest.substr(colon + 1), n));
    }
    throw std::invalid_argument("unrecognized center label \"" + std::string(text) + "\"");
}

// ---------------------------------------------------------------------------
// Locus

Locus Locus::whole(int n)
{
    Locus l;
    l.partition_ = Partition::discrete(n);
    l.pins_.assign(static_cast<std::size_t>(n), -1);
    return l;
}

Locus Locus::empty(int n)
{
    Locus l = whole(n);
    l.empty_ = true;
    return l;
}

Locus Locus::make(const Partition& partition, std::vector<int> block_pins, const GeometryConfig& g)
{
    int n = partition.population();
    if (block_pins.size() != partition.block_count())
        throw std::invalid_argument("Locus::make: one pin entry per block required");
    // Merge every block pinned to the same point component.
    std::map<int, std::uint64_t> point_pins;
    std::vector<std::pair<std::uint64_t, int>> blocks;
    for (std::size_t k = 0; k < partition.block_count(); ++k) {
        int pin = block_pins[k];
        std::uint64_t bits = partition.block_bits()[k];
        if (pin >= 0 && g.component_dim(pin) == 0)
            point_pins[pin] |= bits;
        else
            blocks.emplace_back(bits, pin);
    }
    for (auto [pin, bits] : point_pins)
        blocks.emplace_back(bits, pin);

    std::vector<IndexSubset> subs;
    for (auto& b : blocks)
        subs.emplace_back(n, b.first);
    Locus l;
    l.partition_ = Partition::from_blocks(n, subs);
    l.pins_.assign(l.partition_.block_count(), -1);
    for (std::size_t k = 0; k < l.partition_.block_count(); ++k) {
        std::uint64_t bits = l.partition_.block_bits()[k];
        for (auto& b : blocks)
            if (b.first == bits)
                l.pins_[k] = b.second;
    }
    return l;
}

int Locus::pin_of(int i) const { return pins_[partition_.block_of(i)]; }

std::string Locus::to_string() const
{
    if (empty_)
        return "empty";
    std::string out = "[";
    for (std::size_t k = 0; k < partition_.block_count(); ++k) {
        if (k != 0)
            out += ' ';
        out += partition_.block(k).to_string();
        if (pins_[k] >= 0)
            out += "@c" + std::to_string(pins_[k] + 1);
    }
    return out + "]";
}

Locus center_to_locus(const Center& c, const GeometryConfig& g)
{
    c.validate(g);
    if (c.is_diagonal())
        return Locus::make(c.partition(), std::vector<int>(c.partition().block_count(), -1), g);
    Partition discrete = Partition::discrete(g.n);
    std::vector<int> pins(static_cast<std::size_t>(g.n), -1);
    for (int i : c.subset().members())
        pins[discrete.block_of(i)] = c.component();
    return Locus::make(discrete, std::move(pins), g);
}

Locus intersect(const Locus& a, const Locus& b, const GeometryConfig& g)
{
    if (a.population() != b.population())
        throw std::invalid_argument("intersect: loci over different populations");
    int n = a.population();
    if (a.is_empty() || b.is_empty())
        return Locus::empty(n);
    Partition joined = meet(a.partition(), b.partition());
    std::vector<int> pins(joined.block_count(), -1);
    for (const Locus* side : {&a, &b}) {
        for (std::size_t k = 0; k < side->partition().block_count(); ++k) {
            int pin = side->pins()[k];
            if (pin < 0)
                continue;
            std::size_t target = joined.block_of(side->partition().block(k).min_member());
            if (pins[target] >= 0 && pins[target] != pin)
                return Locus::empty(n);
            pins[target] = pin;
        }
    }
    return Locus::make(joined, std::move(pins), g);
}

Locus intersect(const Center& a, const Center& b, const GeometryConfig& g)
{
    return intersect(center_to_locus(a, g), center_to_locus(b, g), g);
}

std::optional<int> dimension(const Locus& l, const GeometryConfig& g)
{
    if (l.is_empty())
        return std::nullopt;
    int dim = 0;
    for (int pin : l.pins())
        dim += pin >= 0 ? g.component_dim(pin) : g.ambient_dim;
    return dim;
}

std::optional<int> codimension(const Locus& l, const GeometryConfig& g)
{
    auto dim = dimension(l, g);
    if (!dim)
        return std::nullopt;
    return l.population() * g.ambient_dim - *dim;
}

bool contains(const Locus& outer, const Locus& inner)
{
    if (outer.population() != inner.population())
        throw std::invalid_argument("contains: loci over different populations");
    if (inner.is_empty())
        return true;
    if (outer.is_empty())
        return false;
    const Partition& op = outer.partition();
    const Partition& ip = inner.partition();
    for (std::size_t k = 0; k < op.block_count(); ++k) {
        std::uint64_t bits = op.block_bits()[k];
        std::size_t host = ip.block_of(std::countr_zero(bits) + 1);
        if ((bits & ~ip.block_bits()[host]) != 0)
            return false;
        int pin = outer.pins()[k];
        if (pin >= 0 && inner.pins()[host] != pin)
            return false;
    }
    return true;
}

bool contains(const Center& outer, const Center& inner, const GeometryConfig& g)
{
    return contains(center_to_locus(outer, g), center_to_locus(inner, g));
}

std::string_view to_string(PairPosition p)
{
    switch (p) {
    case PairPosition::Disjoint: return "disjoint";
    case PairPosition::Transversal: return "transversal";
    case PairPosition::CleanContainment: return "clean-containment";
    case PairPosition::CleanOverlap: return "clean-overlap";
    case PairPosition::NotClean: return "not-clean";
    }
    return "?";
}

PairPosition pair_position(const Center& a, const Center& b, const GeometryConfig& g)
{
    Locus la = center_to_locus(a, g);
    Locus lb = center_to_locus(b, g);
    Locus both = intersect(la, lb, g);
    if (both.is_empty())
        return PairPosition::Disjoint;
    if (contains(la, lb) || contains(lb, la))
        return PairPosition::CleanContainment;
    if (*codimension(both, g) == *codimension(la, g) + *codimension(lb, g))
        return PairPosition::Transversal;
    return PairPosition::CleanOverlap;
}

std::optional<PairPosition> closed_form_position(const Center& a, const Center& b, const GeometryConfig& g)
{
    a.validate(g);
    b.validate(g);
    if ((a.is_diagonal() && !a.is_simple_diagonal()) || (b.is_diagonal() && !b.is_simple_diagonal()))
        return std::nullopt;

    const IndexSubset& s = a.subset();
    const IndexSubset& t = b.subset();
    int common = (s & t).size();

    if (a.is_d_locus() && b.is_d_locus()) {
        if (a.component() != b.component())
            return common > 0 ? PairPosition::Disjoint : PairPosition::Transversal;
        if (s.is_subset_of(t) || t.is_subset_of(s))
            return PairPosition::CleanContainment;
        return common == 0 ? PairPosition::Transversal : PairPosition::CleanOverlap;
    }
    if (a.is_diagonal() && b.is_diagonal()) {
        if (s.is_subset_of(t) || t.is_subset_of(s))
            return PairPosition::CleanContainment;
        return common <= 1 ? PairPosition::Transversal : PairPosition::CleanOverlap;
    }
    // Mixed: D_{c,S} against Δ_I. A point component puts D_{c,S} inside Δ_I for I ⊆ S.
    const Center& d = a.is_d_locus() ? a : b;
    const Center& delta = a.is_d_locus() ? b : a;
    if (g.component_dim(d.component()) == 0 && delta.subset().is_subset_of(d.subset()))
        return PairPosition::CleanContainment;
    return common <= 1 ? PairPosition::Transversal : PairPosition::CleanOverlap;
}

bool separates(const Center& v1, const Center& v2, const Center& separator, const GeometryConfig& g)
{
    if (pair_position(v1, v2, g) == PairPosition::NotClean)
        return false;
    Locus l1 = center_to_locus(v1, g);
    Locus lz = center_to_locus(separator, g);
    Locus meet12 = intersect(l1, center_to_locus(v2, g), g);
    return contains(lz, meet12) && contains(l1, lz) && l1 != lz;
}

} // namespace wonderful
