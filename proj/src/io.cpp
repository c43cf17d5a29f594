#include "medisk/io.hpp"

#include "medisk/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <system_error>

namespace medisk {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

bool parse_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<Vec2> read_points(std::istream& in) {
    std::vector<Vec2> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        // A single comma, optionally padded by whitespace, or whitespace alone.
        std::string fields_text(t);
        const auto comma = fields_text.find(',');
        bool ok = fields_text.find(',', comma == std::string::npos ? comma : comma + 1) == std::string::npos;
        if (comma != std::string::npos) {
            const std::string_view left = trim(std::string_view(fields_text).substr(0, comma));
            const std::string_view right = trim(std::string_view(fields_text).substr(comma + 1));
            ok = ok && !left.empty() && !right.empty();
            fields_text[comma] = ' ';
        }
        std::istringstream fields(fields_text);
        std::vector<std::string> tok;
        for (std::string w; fields >> w;) tok.push_back(w);
        if (!ok) tok.clear();
        Vec2 p;
        if (tok.size() != 2 || !parse_double(tok[0], p.x) || !parse_double(tok[1], p.y) || !p.is_finite()) {
            throw ParseError("line " + std::to_string(lineno) + ": expected two finite numbers, got '" +
                             std::string(t) + "'");
        }
        out.push_back(p);
    }
    return out;
}

std::vector<Vec2> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_points(in);
}

std::vector<Vec2> generate_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec2> out(n);
    for (auto& p : out) {
        p.x = u(rng);
        p.y = u(rng);
    }
    return out;
}

void write_structured(std::ostream& os, const SolveReport& r) {
    os << "algorithm=" << to_string(r.algorithm) << '\n';
    os << "center_x=" << format_double(r.disk.center.x) << '\n';
    os << "center_y=" << format_double(r.disk.center.y) << '\n';
    os << "radius=" << format_double(r.disk.radius) << '\n';
    os << "support_count=" << r.support.size() << '\n';
    for (std::size_t i = 0; i < r.support.size(); ++i) {
        os << "support_" << i << "_x=" << format_double(r.support[i].x) << '\n';
        os << "support_" << i << "_y=" << format_double(r.support[i].y) << '\n';
        if (i < r.support_indices.size()) os << "support_" << i << "_index=" << r.support_indices[i] << '\n';
    }
    os << "iterations=" << r.iterations.size() << '\n';
}

StructuredResult read_structured(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) throw ParseError("structured output: missing '=' in '" + std::string(t) + "'");
        kv[std::string(t.substr(0, eq))] = std::string(t.substr(eq + 1));
    }

    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("structured output: missing key '" + key + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto number = [&](const std::string& key) {
        const std::string s = take(key);
        double v = 0.0;
        if (!parse_double(s, v)) throw ParseError("structured output: bad number for '" + key + "': " + s);
        return v;
    };
    auto count = [&](const std::string& key) {
        const std::string s = take(key);
        std::size_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            throw ParseError("structured output: bad count for '" + key + "': " + s);
        }
        return v;
    };

    StructuredResult r;
    r.algorithm = take("algorithm");
    r.center = {number("center_x"), number("center_y")};
    r.radius = number("radius");
    const std::size_t k = count("support_count");
    for (std::size_t i = 0; i < k; ++i) {
        const std::string base = "support_" + std::to_string(i);
        r.support.push_back({number(base + "_x"), number(base + "_y")});
        if (kv.count(base + "_index")) r.support_indices.push_back(count(base + "_index"));
    }
    r.iterations = count("iterations");
    r.extra = std::move(kv);
    return r;
}

void write_svg(std::ostream& os, const PointSet& points, const Disk& disk) {
    constexpr int samples = 256;
    std::vector<Vec2> boundary(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        boundary[i] = disk.center + disk.radius * disk.norm.unit_circle_point(t);
    }

    double xmin = disk.center.x, xmax = disk.center.x, ymin = disk.center.y, ymax = disk.center.y;
    auto grow = [&](Vec2 p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const Vec2& p : points.points()) grow(p);
    for (const Vec2& p : boundary) grow(p);

    // Unit ball sits to the right of the data, scaled to a fifth of its height.
    const double span0 = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double ball_r = 0.2 * span0;
    const Vec2 ball_c{xmax + 1.2 * ball_r, 0.5 * (ymin + ymax)};
    std::vector<Vec2> ball(samples);
    for (int i = 0; i < samples; ++i) {
        ball[i] = ball_c + ball_r * disk.norm.unit_circle_point(2.0 * std::numbers::pi * i / samples);
    }
    for (const Vec2& p : ball) grow(p);

    const double w = std::max(xmax - xmin, 1e-9);
    const double h = std::max(ymax - ymin, 1e-9);
    const double px = 0.1 * w, py = 0.1 * h;
    const double vx = xmin - px, vy = -(ymax + py), vw = w + 2 * px, vh = h + 2 * py;
    const double stroke = 0.004 * std::max(vw, vh);

    auto polyline = [&](const std::vector<Vec2>& pts, const char* color) {
        os << "  <polygon fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << format_double(stroke)
           << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) os << ' ';
            os << format_double(pts[i].x) << ',' << format_double(-pts[i].y);
        }
        os << "\"/>\n";
    };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(vx) << ' ' << format_double(vy)
       << ' ' << format_double(vw) << ' ' << format_double(vh) << "\" width=\"640\" height=\""
       << static_cast<int>(std::lround(640.0 * vh / vw)) << "\">\n";
    os << "  <title>" << disk.norm.name() << " enclosing disk</title>\n";
    polyline(boundary, "steelblue");
    polyline(ball, "gray");
    for (const Vec2& p : points.points()) {
        os << "  <circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(-p.y) << "\" r=\""
           << format_double(1.5 * stroke) << "\" fill=\"black\"/>\n";
    }
    os << "  <circle cx=\"" << format_double(disk.center.x) << "\" cy=\"" << format_double(-disk.center.y)
       << "\" r=\"" << format_double(1.5 * stroke) << "\" fill=\"crimson\"/>\n";
    os << "</svg>\n";
}

} // namespace medisk
