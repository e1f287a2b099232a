#include "oritatami/render.hpp"

#include "oritatami/error.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>

namespace oritatami {

namespace {

// Two decimals and never "-0.00".
std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00")
        s = "0.00";
    return s;
}

std::string fill_for(const BeadType& bead)
{
    std::uint32_t h = 2166136261u;
    for (unsigned char ch : bead)
        h = (h ^ ch) * 16777619u;
    return "hsl(" + std::to_string(h % 360) + ",60%,72%)";
}

std::string escape(const std::string& text)
{
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::string render_svg(const Conformation& c, const RenderOptions& o)
{
    std::vector<std::pair<double, double>> at;
    for (const auto& p : c.path()) {
        auto [x, y] = to_cartesian(p);
        at.emplace_back(x * o.scale, -y * o.scale);
    }
    const double radius = o.scale * 0.3;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (at.empty()) {
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\">\n</svg>\n";
        return out;
    }
    double x0 = at[0].first, x1 = x0, y0 = at[0].second, y1 = y0;
    for (auto [x, y] : at) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    const double margin = o.scale;
    const double width = x1 - x0 + 2 * margin;
    const double height = y1 - y0 + 2 * margin;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\""
           + num(height) + "\" viewBox=\"" + num(x0 - margin) + ' ' + num(y0 - margin) + ' ' + num(width) + ' '
           + num(height) + "\">\n";
    if (at.size() > 1) {
        out += "<polyline class=\"path\" fill=\"none\" stroke=\"#444\" stroke-width=\"" + num(o.scale * 0.08)
               + "\" points=\"";
        for (std::size_t i = 0; i < at.size(); ++i)
            out += (i ? " " : "") + num(at[i].first) + ',' + num(at[i].second);
        out += "\"/>\n";
    }
    if (o.show_bonds) {
        for (const auto& b : c.bonds()) {
            out += "<line class=\"bond\" x1=\"" + num(at[b.first].first) + "\" y1=\"" + num(at[b.first].second)
                   + "\" x2=\"" + num(at[b.second].first) + "\" y2=\"" + num(at[b.second].second)
                   + "\" stroke=\"#c33\" stroke-dasharray=\"" + num(o.scale * 0.12) + ' ' + num(o.scale * 0.08)
                   + "\"/>\n";
        }
    }
    for (std::size_t i = 0; i < at.size(); ++i) {
        out += "<circle class=\"bead\" cx=\"" + num(at[i].first) + "\" cy=\"" + num(at[i].second) + "\" r=\""
               + num(radius) + "\" fill=\"" + fill_for(c.beads()[i]) + "\" stroke=\"#222\"/>\n";
        if (o.label_beads) {
            out += "<text x=\"" + num(at[i].first) + "\" y=\"" + num(at[i].second + radius * 0.35)
                   + "\" font-size=\"" + num(radius * 0.9) + "\" text-anchor=\"middle\">"
                   + escape(c.beads()[i]) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

// Column in half-cells is 2x + y, which is twice the Cartesian abscissa.
std::string render_ascii(const Conformation& c, const RenderOptions& o)
{
    if (c.empty())
        return {};
    std::size_t label = 1;
    if (o.label_beads)
        for (const auto& b : c.beads())
            label = std::max(label, b.size());
    const std::size_t half = (label + 2) / 2;
    std::map<int, std::map<int, std::string>, std::greater<>> rows;
    int min_col = 2 * c.path()[0].x + c.path()[0].y;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Point p = c.path()[i];
        min_col = std::min(min_col, 2 * p.x + p.y);
        rows[p.y][2 * p.x + p.y] = o.label_beads ? c.beads()[i] : std::string("o");
    }
    std::string out;
    for (const auto& [y, cells] : rows) {
        std::string line;
        for (const auto& [col, text] : cells) {
            const std::size_t at = static_cast<std::size_t>(col - min_col) * half;
            line.resize(std::max(line.size(), at), ' ');
            line += text;
        }
        out += line + '\n';
    }
    if (o.show_bonds) {
        for (const auto& b : c.bonds())
            out += "bond " + std::to_string(b.first + 1) + '-' + std::to_string(b.second + 1) + '\n';
    }
    return out;
}

} // namespace

std::string render(const Conformation& c, const RenderOptions& options)
{
    if (!(options.scale > 0))
        throw InvalidInput("render scale must be positive");
    return options.format == RenderFormat::svg ? render_svg(c, options) : render_ascii(c, options);
}

} // namespace oritatami
