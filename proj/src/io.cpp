#include "dimerlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace dimerlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

Offset parse_offset(const std::string& tok, int lineno) {
    int dx, dy;
    char close = 0;
    if (std::sscanf(tok.c_str(), "(%d,%d%c", &dx, &dy, &close) != 3 || close != ')')
        throw ParseError(lineno, "malformed offset " + tok + ", expected (dx,dy)");
    return {dx, dy};
}

std::string format_layout(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

DimerQuiver parse_dimer(const std::string& text) {
    DimerQuiver q;
    std::map<std::string, ArrowId> by_name;
    std::map<int, std::optional<std::array<double, 2>>> vertices;
    bool header_seen = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!header_seen) {
            if (toks.size() != 2 || toks[0] != "dimer" || toks[1] != "1")
                throw ParseError(lineno, "expected header 'dimer 1'");
            header_seen = true;
            continue;
        }
        if (toks[0] == "vertex") {
            if (toks.size() != 2 && toks.size() != 4)
                throw ParseError(lineno, "vertex takes an id and optionally x y");
            int id;
            try {
                id = std::stoi(toks[1]);
            } catch (...) {
                throw ParseError(lineno, "bad vertex id " + toks[1]);
            }
            if (vertices.count(id)) throw ParseError(lineno, "duplicate vertex id " + toks[1]);
            std::optional<std::array<double, 2>> pos;
            if (toks.size() == 4) {
                try {
                    pos = {{std::stod(toks[2]), std::stod(toks[3])}};
                } catch (...) {
                    throw ParseError(lineno, "bad vertex coordinates");
                }
            }
            vertices[id] = pos;
        } else if (toks[0] == "arrow") {
            if (toks.size() != 5)
                throw ParseError(lineno, "arrow takes name, tail, head, (dx,dy)");
            if (by_name.count(toks[1]))
                throw ParseError(lineno, "duplicate arrow name " + toks[1]);
            Arrow a;
            a.id = static_cast<int>(q.arrows.size());
            a.name = toks[1];
            try {
                a.tail = std::stoi(toks[2]);
                a.head = std::stoi(toks[3]);
            } catch (...) {
                throw ParseError(lineno, "bad arrow endpoints");
            }
            a.offset = parse_offset(toks[4], lineno);
            by_name[a.name] = a.id;
            q.arrows.push_back(std::move(a));
        } else if (toks[0] == "face") {
            if (toks.size() < 3) throw ParseError(lineno, "face takes a sign and arrow names");
            Face f;
            f.id = static_cast<int>(q.faces.size());
            if (toks[1] == "+")
                f.sign = FaceSign::plus;
            else if (toks[1] == "-")
                f.sign = FaceSign::minus;
            else
                throw ParseError(lineno, "face sign must be + or -");
            for (size_t k = 2; k < toks.size(); ++k) {
                auto it = by_name.find(toks[k]);
                if (it == by_name.end())
                    throw ParseError(lineno, "face references undeclared arrow " + toks[k]);
                f.arrows.push_back(it->second);
            }
            q.faces.push_back(std::move(f));
        } else {
            throw ParseError(lineno, "unknown directive " + toks[0]);
        }
    }
    if (!header_seen) throw ParseError(lineno, "missing header 'dimer 1'");

    q.vertex_count = static_cast<int>(vertices.size());
    bool any_layout = false;
    int expect = 0;
    for (const auto& [id, pos] : vertices) {
        if (id != expect++) throw ParseError(0, "vertex ids must be dense from 0");
        if (pos) any_layout = true;
    }
    if (any_layout) {
        q.layout.resize(static_cast<size_t>(q.vertex_count));
        for (const auto& [id, pos] : vertices) q.layout[static_cast<size_t>(id)] = pos;
    }
    for (const Arrow& a : q.arrows)
        if (a.tail < 0 || a.tail >= q.vertex_count || a.head < 0 || a.head >= q.vertex_count)
            throw ParseError(0, "arrow " + a.name + " references undeclared vertex");
    return q;
}

DimerQuiver parse_dimer_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimer(buf.str());
}

std::string serialize(const DimerQuiver& q) {
    std::ostringstream out;
    out << "dimer 1\n";
    for (int v = 0; v < q.vertex_count; ++v) {
        out << "vertex " << v;
        if (static_cast<size_t>(v) < q.layout.size() && q.layout[static_cast<size_t>(v)]) {
            auto pos = *q.layout[static_cast<size_t>(v)];
            out << " " << format_layout(pos[0]) << " " << format_layout(pos[1]);
        }
        out << "\n";
    }
    for (const Arrow& a : q.arrows)
        out << "arrow " << a.name << " " << a.tail << " " << a.head << " " << to_string(a.offset)
            << "\n";
    for (const Face& f : q.faces) {
        out << "face " << (f.sign == FaceSign::plus ? "+" : "-");
        for (ArrowId a : f.arrows) out << " " << q.arrow(a).name;
        out << "\n";
    }
    return out.str();
}

void write_dimer_file(const DimerQuiver& q, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(0, "cannot write " + path);
    out << serialize(q);
}

}  // namespace dimerlab
