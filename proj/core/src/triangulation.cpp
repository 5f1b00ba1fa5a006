#include "crosscap/triangulation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace crosscap {

void Triangulation::set_gluing(int i, int a, int j, const Perm4& p) {
    if (i < 0 || i >= tet_count() || j < 0 || j >= tet_count())
        throw std::invalid_argument("set_gluing: tetrahedron index out of range");
    if (a < 0 || a > 3) throw std::invalid_argument("set_gluing: face index out of range");
    int b = p[a];
    auto& src = glue_[static_cast<size_t>(i)][static_cast<size_t>(a)];
    auto& dst = glue_[static_cast<size_t>(j)][static_cast<size_t>(b)];
    if (i == j && a == b) throw std::invalid_argument("set_gluing: cannot glue a face to itself");
    if (src || dst) throw std::invalid_argument("set_gluing: face already glued");
    src = Gluing{j, b, p};
    dst = Gluing{i, a, p.inverse()};
}

void Triangulation::clear_gluing(int i, int a) {
    auto& src = glue_[static_cast<size_t>(i)][static_cast<size_t>(a)];
    if (!src) return;
    Gluing g = *src;
    src.reset();
    if (g.tet != i || g.face != a) glue_[static_cast<size_t>(g.tet)][static_cast<size_t>(g.face)].reset();
}

bool Triangulation::is_closed() const { return boundary_face_count() == 0; }

int Triangulation::boundary_face_count() const {
    int n = 0;
    for (const auto& t : glue_)
        for (const auto& g : t)
            if (!g) ++n;
    return n;
}

std::string Triangulation::validate() const {
    for (int i = 0; i < tet_count(); ++i) {
        for (int a = 0; a < 4; ++a) {
            const auto& g = gluing(i, a);
            if (!g) continue;
            if (g->tet < 0 || g->tet >= tet_count())
                return "gluing target out of range at tet " + std::to_string(i) + " face " + std::to_string(a);
            if (g->face != g->perm[a])
                return "stored target face disagrees with the permutation at tet " + std::to_string(i) +
                       " face " + std::to_string(a);
            const auto& back = gluing(g->tet, g->face);
            if (!back)
                return "one-sided gluing at tet " + std::to_string(i) + " face " + std::to_string(a);
            if (back->tet != i || back->face != a || back->perm != g->perm.inverse())
                return "non-involutive gluing at tet " + std::to_string(i) + " face " + std::to_string(a);
        }
    }
    return "";
}

Triangulation double_triangulation(const Triangulation& t) {
    if (t.is_closed()) throw std::invalid_argument("double_triangulation: input has no boundary");
    int n = t.tet_count();
    Triangulation d(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < 4; ++a) {
            const auto& g = t.gluing(i, a);
            if (!g) {
                d.set_gluing(i, a, n + i, Perm4::identity());
            } else if (g->tet > i || (g->tet == i && g->face >= a)) {
                // interior gluings are copied into each half; set each pair once
                d.set_gluing(i, a, g->tet, g->perm);
                d.set_gluing(n + i, a, n + g->tet, g->perm);
            }
        }
    }
    return d;
}

Triangulation triangulation_from_tetrahedra(const std::vector<std::array<long long, 4>>& tets) {
    Triangulation t(static_cast<int>(tets.size()));
    std::map<std::array<long long, 3>, std::pair<int, int>> open_face;
    for (int i = 0; i < t.tet_count(); ++i) {
        const auto& pts = tets[static_cast<size_t>(i)];
        for (int v = 0; v < 4; ++v)
            for (int w = v + 1; w < 4; ++w)
                if (pts[static_cast<size_t>(v)] == pts[static_cast<size_t>(w)])
                    throw std::invalid_argument("tetrahedron " + std::to_string(i) +
                                                " repeats a point label");
        for (int a = 0; a < 4; ++a) {
            std::array<long long, 3> key;
            for (int v = 0, k = 0; v < 4; ++v)
                if (v != a) key[static_cast<size_t>(k++)] = pts[static_cast<size_t>(v)];
            std::sort(key.begin(), key.end());

            auto [it, fresh] = open_face.try_emplace(key, i, a);
            if (fresh) continue;
            if (it->second.first < 0)
                throw std::invalid_argument("face shared by more than two tetrahedra");
            auto [j, b] = it->second;
            it->second.first = -1; // consumed; a third taker is an error
            int img[4];
            img[a] = b;
            const auto& other = tets[static_cast<size_t>(j)];
            for (int v = 0; v < 4; ++v) {
                if (v == a) continue;
                for (int w = 0; w < 4; ++w)
                    if (other[static_cast<size_t>(w)] == pts[static_cast<size_t>(v)]) img[v] = w;
            }
            t.set_gluing(i, a, j, Perm4(img[0], img[1], img[2], img[3]));
        }
    }
    return t;
}

std::string serialize_triangulation(const Triangulation& t) {
    std::ostringstream out;
    out << "tri " << t.tet_count() << "\n";
    for (int i = 0; i < t.tet_count(); ++i) {
        for (int a = 0; a < 4; ++a) {
            if (a) out << ' ';
            const auto& g = t.gluing(i, a);
            if (!g)
                out << '-';
            else
                out << g->tet << ':' << g->perm.digits();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("triangulation parse error, line " + std::to_string(line) + ": " + msg);
}

} // namespace

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_content_line()) parse_fail(lineno, "empty input");
    {
        std::istringstream hdr(line);
        std::string tag;
        long long n = -1;
        if (!(hdr >> tag >> n) || tag != "tri" || n < 0)
            parse_fail(lineno, "expected header 'tri <tet_count>'");
        std::string extra;
        if (hdr >> extra) parse_fail(lineno, "trailing tokens after header");
        Triangulation t(static_cast<int>(n));

        for (int i = 0; i < t.tet_count(); ++i) {
            if (!next_content_line()) parse_fail(lineno, "missing line for tetrahedron " + std::to_string(i));
            std::istringstream ls(line);
            std::string tok;
            for (int a = 0; a < 4; ++a) {
                if (!(ls >> tok)) parse_fail(lineno, "expected 4 entries, got " + std::to_string(a));
                if (tok == "-") {
                    if (t.gluing(i, a))
                        parse_fail(lineno, "entry '-' contradicts an earlier entry (one-sided gluing)");
                    continue;
                }
                auto colon = tok.find(':');
                if (colon == std::string::npos) parse_fail(lineno, "malformed entry '" + tok + "'");
                long long target = -1;
                try {
                    size_t used = 0;
                    target = std::stoll(tok.substr(0, colon), &used);
                    if (used != colon) parse_fail(lineno, "malformed target index in '" + tok + "'");
                } catch (const std::exception&) {
                    parse_fail(lineno, "malformed target index in '" + tok + "'");
                }
                if (target < 0 || target >= t.tet_count())
                    parse_fail(lineno, "target tetrahedron out of range in '" + tok + "'");
                Perm4 p;
                try {
                    p = Perm4::from_digits(tok.substr(colon + 1));
                } catch (const std::exception& e) {
                    parse_fail(lineno, e.what());
                }
                // The mirror entry is parsed on its own line; only record this side.
                const auto& existing = t.gluing(i, a);
                if (existing) {
                    if (existing->tet != static_cast<int>(target) || existing->perm != p)
                        parse_fail(lineno, "gluing disagrees with the already-parsed mirror entry");
                } else {
                    try {
                        t.set_gluing(i, a, static_cast<int>(target), p);
                    } catch (const std::exception& e) {
                        parse_fail(lineno, e.what());
                    }
                }
            }
            std::string extra2;
            if (ls >> extra2) parse_fail(lineno, "trailing tokens after 4 entries");
        }
        if (next_content_line()) parse_fail(lineno, "trailing content after last tetrahedron");

        std::string err = t.validate();
        if (!err.empty()) throw std::runtime_error("triangulation parse error: " + err);
        return t;
    }
}

} // namespace crosscap
