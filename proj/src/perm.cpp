#include "cyclefact/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclefact {

Perm::Perm(int degree) : degree_(degree)
{
    require(degree >= 1, errc::bad_input, "degree must be >= 1");
    img_.resize(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i)
        img_[static_cast<size_t>(i)] = i + 1;
}

Perm::Perm(int degree, std::vector<int> images) : degree_(degree), img_(std::move(images))
{
    require(degree >= 1, errc::bad_input, "degree must be >= 1");
    require(static_cast<int>(img_.size()) == degree, errc::bad_input,
            "image table size does not match degree");
    std::vector<char> seen(static_cast<size_t>(degree), 0);
    for (int v : img_) {
        require(v >= 1 && v <= degree, errc::bad_input, "image out of range");
        require(!seen[static_cast<size_t>(v) - 1], errc::bad_input, "image table is not a bijection");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

bool Perm::is_identity() const
{
    for (int i = 1; i <= degree_; ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

Perm Perm::inverse() const
{
    std::vector<int> inv(static_cast<size_t>(degree_));
    for (int i = 1; i <= degree_; ++i)
        inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Perm(degree_, std::move(inv));
}

Perm compose(const Perm& p, const Perm& q)
{
    require(p.degree() == q.degree(), errc::bad_input, "compose: degree mismatch");
    std::vector<int> img(static_cast<size_t>(p.degree()));
    for (int x = 1; x <= p.degree(); ++x)
        img[static_cast<size_t>(x) - 1] = p(q(x));
    return Perm(p.degree(), std::move(img));
}

Cycle::Cycle(int deg, std::vector<int> pts) : degree(deg), points(std::move(pts))
{
    require(points.size() >= 2, errc::bad_input, "cycle needs at least 2 points");
    std::vector<char> seen(static_cast<size_t>(degree), 0);
    for (int p : points) {
        require(p >= 1 && p <= degree, errc::bad_input, "cycle point out of range");
        require(!seen[static_cast<size_t>(p) - 1], errc::bad_input, "repeated point in cycle");
        seen[static_cast<size_t>(p) - 1] = 1;
    }
}

Perm Cycle::as_perm() const
{
    std::vector<int> img(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i)
        img[static_cast<size_t>(i)] = i + 1;
    const size_t len = points.size();
    for (size_t i = 0; i < len; ++i)
        img[static_cast<size_t>(points[i]) - 1] = points[(i + 1) % len];
    return Perm(degree, std::move(img));
}

Cycle Cycle::canonical() const
{
    const auto it = std::min_element(points.begin(), points.end());
    std::vector<int> rot;
    rot.reserve(points.size());
    rot.insert(rot.end(), it, points.end());
    rot.insert(rot.end(), points.begin(), it);
    return Cycle(degree, std::move(rot));
}

Cycle Cycle::inverse() const
{
    std::vector<int> rev(points.rbegin(), points.rend());
    return Cycle(degree, std::move(rev)).canonical();
}

bool Cycle::same_permutation(const Cycle& other) const
{
    if (degree != other.degree || points.size() != other.points.size())
        return false;
    return canonical().points == other.canonical().points;
}

CycleDecomposition dcd_star(const Perm& p)
{
    CycleDecomposition d;
    const int n = p.degree();
    std::vector<char> visited(static_cast<size_t>(n), 0);
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<size_t>(start) - 1])
            continue;
        std::vector<int> orbit;
        int x = start;
        do {
            visited[static_cast<size_t>(x) - 1] = 1;
            orbit.push_back(x);
            x = p(x);
        } while (x != start);
        if (orbit.size() >= 2) {
            d.support += static_cast<int>(orbit.size());
            d.cycle_count += 1;
            d.histogram[static_cast<int>(orbit.size())] += 1;
            d.cycles.emplace_back(n, std::move(orbit));
        }
    }
    return d;
}

Perm recompose(const CycleDecomposition& d, int degree)
{
    std::vector<int> img(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i)
        img[static_cast<size_t>(i)] = i + 1;
    for (const Cycle& c : d.cycles) {
        const size_t len = c.points.size();
        for (size_t i = 0; i < len; ++i) {
            require(c.points[i] <= degree, errc::bad_input, "recompose: point exceeds degree");
            img[static_cast<size_t>(c.points[i]) - 1] = c.points[(i + 1) % len];
        }
    }
    return Perm(degree, std::move(img));
}

int support_size(const Perm& p)
{
    int m = 0;
    for (int i = 1; i <= p.degree(); ++i)
        if (p(i) != i)
            ++m;
    return m;
}

bool is_even(const Perm& p)
{
    int m = 0, nc = 0;
    const int n = p.degree();
    std::vector<char> visited(static_cast<size_t>(n), 0);
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<size_t>(start) - 1] || p(start) == start)
            continue;
        int x = start, len = 0;
        do {
            visited[static_cast<size_t>(x) - 1] = 1;
            ++len;
            x = p(x);
        } while (x != start);
        m += len;
        nc += 1;
    }
    return (m + nc) % 2 == 0;
}

bool is_fixed_point_free(const Perm& p)
{
    return support_size(p) == p.degree();
}

std::string format_cycle(const Cycle& c)
{
    std::ostringstream os;
    os << '(';
    const Cycle canon = c.canonical();
    for (size_t i = 0; i < canon.points.size(); ++i) {
        if (i)
            os << ' ';
        os << canon.points[i];
    }
    os << ')';
    return os.str();
}

std::string format_perm(const Perm& p)
{
    const CycleDecomposition d = dcd_star(p);
    if (d.cycles.empty())
        return "id";
    std::string out;
    for (const Cycle& c : d.cycles)
        out += format_cycle(c);
    return out;
}

namespace {

void skip_ws(std::string_view s, size_t& i)
{
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
}

int parse_int(std::string_view s, size_t& i)
{
    skip_ws(s, i);
    require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])), errc::bad_input,
            "expected a point number in cycle notation");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        require(v <= 1000000000L, errc::bad_input, "point number too large");
        ++i;
    }
    return static_cast<int>(v);
}

} // namespace

Perm parse_perm(std::string_view text, int n)
{
    require(n >= 1, errc::bad_input, "degree must be >= 1");
    size_t i = 0;
    skip_ws(text, i);

    // Optional "deg=N;" prefix.
    if (text.substr(i).starts_with("deg=")) {
        i += 4;
        const int deg = parse_int(text, i);
        skip_ws(text, i);
        require(i < text.size() && text[i] == ';', errc::bad_input, "expected ';' after deg=N");
        ++i;
        require(deg == n, errc::bad_input, "deg=N prefix does not match the supplied degree");
        skip_ws(text, i);
    }

    if (text.substr(i).starts_with("id")) {
        i += 2;
        skip_ws(text, i);
        require(i == text.size(), errc::bad_input, "trailing characters after identity");
        return Perm::identity(n);
    }

    std::vector<int> img(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        img[static_cast<size_t>(x)] = x + 1;
    std::vector<char> used(static_cast<size_t>(n), 0);
    bool any_cycle = false;

    while (i < text.size()) {
        skip_ws(text, i);
        if (i == text.size())
            break;
        require(text[i] == '(', errc::bad_input, "expected '(' in cycle notation");
        ++i;
        std::vector<int> pts;
        skip_ws(text, i);
        while (i < text.size() && text[i] != ')') {
            const int p = parse_int(text, i);
            require(p >= 1 && p <= n, errc::bad_input,
                    "point " + std::to_string(p) + " exceeds degree " + std::to_string(n));
            require(!used[static_cast<size_t>(p) - 1], errc::bad_input,
                    "repeated point " + std::to_string(p) + " in cycle notation");
            used[static_cast<size_t>(p) - 1] = 1;
            pts.push_back(p);
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',')
                ++i; // tolerate comma separators
        }
        require(i < text.size() && text[i] == ')', errc::bad_input, "unbalanced parenthesis");
        ++i;
        any_cycle = true;
        // Singleton "(x)" is the identity on x; nothing to record.
        const size_t len = pts.size();
        for (size_t j = 0; j + 1 < len; ++j)
            img[static_cast<size_t>(pts[j]) - 1] = pts[j + 1];
        if (len >= 2)
            img[static_cast<size_t>(pts[len - 1]) - 1] = pts[0];
    }
    require(any_cycle, errc::bad_input, "empty permutation text");
    return Perm(n, std::move(img));
}

} // namespace cyclefact
