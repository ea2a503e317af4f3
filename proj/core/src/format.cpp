#include "ptri/format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace ptri {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Whitespace split, except inside [...] which is kept as one token.
std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (std::isspace(static_cast<unsigned char>(c)) && depth <= 0) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const Line& l, const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(l.number, "expected an integer, got '" + s + "'");
    }
}

// key=value attributes after position `from`
std::map<std::string, std::string> attributes(const Line& l, std::size_t from) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = from; i < l.tokens.size(); ++i) {
        const auto& tok = l.tokens[i];
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            kv.emplace(tok, "");
            continue;
        }
        if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
            throw ParseError(l.number, "duplicate attribute '" + tok.substr(0, eq) + "'");
    }
    return kv;
}

std::vector<std::string> bracket_list(const Line& l, const std::string& v) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') throw ParseError(l.number, "expected [..] list");
    const std::string inner = v.substr(1, v.size() - 2);
    if (inner.empty()) return {};
    auto items = split(inner, ',');
    for (auto& it : items)
        if (it.empty()) throw ParseError(l.number, "empty list item");
    return items;
}

}  // namespace

PartialTriangulation parse_ptri(std::string_view text, RingSpec ring) {
    std::vector<Line> lines;
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        int n = 0;
        while (std::getline(in, raw)) {
            ++n;
            if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
            auto toks = tokenize(raw);
            if (!toks.empty()) lines.push_back({n, std::move(toks)});
        }
    }
    PartialTriangulation t;
    t.ring = ring;
    bool have_header = false;
    std::vector<const Line*> arc_lines, rot_lines, face_lines;

    for (const auto& l : lines) {
        const auto& kw = l.tokens[0];
        if (kw == "surface") {
            if (have_header) throw ParseError(l.number, "second surface line");
            have_header = true;
            auto kv = attributes(l, 1);
            for (const auto& [k, v] : kv)
                if (k != "genus" && k != "boundaries") throw ParseError(l.number, "unknown attribute '" + k + "'");
            if (!kv.count("genus") || !kv.count("boundaries"))
                throw ParseError(l.number, "surface needs genus= and boundaries=");
            t.genus = to_int(l, kv["genus"]);
            t.boundary_count = to_int(l, kv["boundaries"]);
            if (t.genus < 0 || t.boundary_count < 0) throw ParseError(l.number, "negative genus or boundary count");
        } else if (kw == "point") {
            if (l.tokens.size() < 3) throw ParseError(l.number, "point <id> interior|boundary=<c>:<pos> ...");
            MarkedPoint p;
            p.id = l.tokens[1];
            if (t.find_point(p.id) >= 0) throw ParseError(l.number, "duplicate point '" + p.id + "'");
            auto kv = attributes(l, 2);
            p.lambda = Scalar::one(ring);
            for (const auto& [k, v] : kv) {
                if (k == "interior") {
                    if (!v.empty()) throw ParseError(l.number, "interior takes no value");
                } else if (k == "boundary") {
                    auto parts = split(v, ':');
                    if (parts.size() != 2) throw ParseError(l.number, "boundary=<component>:<position>");
                    p.on_boundary = true;
                    p.component = to_int(l, parts[0]);
                    p.position = to_int(l, parts[1]);
                } else if (k == "m") {
                    p.multiplicity = to_int(l, v);
                    if (p.multiplicity < 1) throw ParseError(l.number, "m must be >= 1");
                } else if (k == "lambda") {
                    try {
                        p.lambda = Scalar::parse(ring, v);
                    } catch (const std::exception& e) {
                        throw ParseError(l.number, e.what());
                    }
                    if (p.lambda.is_zero()) throw ParseError(l.number, "lambda must be nonzero");
                } else {
                    throw ParseError(l.number, "unknown attribute '" + k + "'");
                }
            }
            if (kv.count("interior") == kv.count("boundary"))
                throw ParseError(l.number, "point needs exactly one of interior / boundary=");
            if (p.on_boundary && (p.component < 0 || p.component >= t.boundary_count))
                throw ParseError(l.number, "boundary component out of range");
            t.points.push_back(std::move(p));
            t.rotation.emplace_back();
        } else if (kw == "arc") {
            arc_lines.push_back(&l);
        } else if (kw == "rotation") {
            rot_lines.push_back(&l);
        } else if (kw == "face") {
            face_lines.push_back(&l);
        } else {
            throw ParseError(l.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_header) throw ParseError(lines.empty() ? 1 : lines.front().number, "missing surface line");

    for (const Line* l : arc_lines) {
        if (l->tokens.size() != 4) throw ParseError(l->number, "arc <id> <h>@<point> <h>@<point>");
        Arc a;
        a.id = l->tokens[1];
        if (t.find_arc(a.id) >= 0) throw ParseError(l->number, "duplicate arc '" + a.id + "'");
        for (int k = 0; k < 2; ++k) {
            const auto& tok = l->tokens[2 + k];
            const auto at = tok.find('@');
            if (at == std::string::npos || at == 0 || at + 1 == tok.size())
                throw ParseError(l->number, "expected <halfedge>@<point>, got '" + tok + "'");
            HalfEdge h;
            h.id = tok.substr(0, at);
            h.point = t.find_point(tok.substr(at + 1));
            if (h.point < 0) throw ParseError(l->number, "unknown point '" + tok.substr(at + 1) + "'");
            if (t.find_halfedge(h.id) >= 0) throw ParseError(l->number, "duplicate half-edge '" + h.id + "'");
            h.arc = static_cast<int>(t.arcs.size());
            a.ends[k] = static_cast<int>(t.halfedges.size());
            t.halfedges.push_back(std::move(h));
        }
        t.arcs.push_back(std::move(a));
    }
    std::vector<bool> rotated(t.points.size(), false);
    for (const Line* l : rot_lines) {
        if (l->tokens.size() < 2 || l->tokens[1].empty() || l->tokens[1].back() != ':')
            throw ParseError(l->number, "rotation <point>: <halfedges...>");
        const std::string pid = l->tokens[1].substr(0, l->tokens[1].size() - 1);
        const int p = t.find_point(pid);
        if (p < 0) throw ParseError(l->number, "unknown point '" + pid + "'");
        if (rotated[p]) throw ParseError(l->number, "second rotation for '" + pid + "'");
        rotated[p] = true;
        for (std::size_t i = 2; i < l->tokens.size(); ++i) {
            const int h = t.find_halfedge(l->tokens[i]);
            if (h < 0) throw ParseError(l->number, "unknown half-edge '" + l->tokens[i] + "'");
            if (t.halfedges[h].point != p)
                throw ParseError(l->number, "half-edge '" + l->tokens[i] + "' is not at " + pid);
            t.rotation[p].push_back(h);
        }
    }
    for (const Line* l : face_lines) {
        if (l->tokens.size() < 2) throw ParseError(l->number, "face <id> ...");
        FaceAnnotation f;
        f.id = l->tokens[1];
        for (const auto& g : t.faces)
            if (g.id == f.id) throw ParseError(l->number, "duplicate face '" + f.id + "'");
        for (const auto& [k, v] : attributes(*l, 2)) {
            if (k == "genus") {
                f.genus = to_int(*l, v);
                if (f.genus < 0) throw ParseError(l->number, "negative genus");
            } else if (k == "encloses") {
                for (const auto& s : bracket_list(*l, v)) {
                    const int c = to_int(*l, s);
                    if (c < 0 || c >= t.boundary_count) throw ParseError(l->number, "boundary index out of range");
                    f.enclosed_boundaries.push_back(c);
                }
            } else if (k == "isolated") {
                for (const auto& s : bracket_list(*l, v)) {
                    const int p = t.find_point(s);
                    if (p < 0) throw ParseError(l->number, "unknown point '" + s + "'");
                    f.isolated_points.push_back(p);
                }
            } else if (k == "side") {
                for (const auto& s : split(v, ',')) {
                    const auto dot = s.rfind('.');
                    if (dot == std::string::npos || (s.substr(dot + 1) != "L" && s.substr(dot + 1) != "R"))
                        throw ParseError(l->number, "side=<halfedge>.<L|R>");
                    const int h = t.find_halfedge(s.substr(0, dot));
                    if (h < 0) throw ParseError(l->number, "unknown half-edge '" + s.substr(0, dot) + "'");
                    f.sides.push_back({h, s.substr(dot + 1) == "L"});
                }
            } else {
                throw ParseError(l->number, "unknown attribute '" + k + "'");
            }
        }
        t.faces.push_back(std::move(f));
    }
    try {
        check_well_formed(t);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw InputError(std::string("malformed map: ") + e.what());
    }
    return t;
}

PartialTriangulation load_ptri(const std::string& path, RingSpec ring) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ptri(ss.str(), ring);
}

std::string serialize_ptri(const PartialTriangulation& t) {
    std::ostringstream os;
    os << "surface genus=" << t.genus << " boundaries=" << t.boundary_count << "\n";
    for (const auto& p : t.points) {
        os << "point " << p.id << ' ';
        if (p.on_boundary)
            os << "boundary=" << p.component << ':' << p.position;
        else
            os << "interior";
        os << " m=" << p.multiplicity << " lambda=" << p.lambda << "\n";
    }
    for (const auto& a : t.arcs) {
        os << "arc " << a.id;
        for (int h : a.ends) os << ' ' << t.halfedges[h].id << '@' << t.points[t.halfedges[h].point].id;
        os << "\n";
    }
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        if (t.rotation[p].empty()) continue;
        os << "rotation " << t.points[p].id << ":";
        for (int h : t.rotation[p]) os << ' ' << t.halfedges[h].id;
        os << "\n";
    }
    for (const auto& f : t.faces) {
        os << "face " << f.id << " genus=" << f.genus << " encloses=[";
        for (std::size_t i = 0; i < f.enclosed_boundaries.size(); ++i)
            os << (i ? "," : "") << f.enclosed_boundaries[i];
        os << "] isolated=[";
        for (std::size_t i = 0; i < f.isolated_points.size(); ++i)
            os << (i ? "," : "") << t.points[f.isolated_points[i]].id;
        os << "]";
        if (!f.sides.empty()) {
            os << " side=";
            for (std::size_t i = 0; i < f.sides.size(); ++i)
                os << (i ? "," : "") << t.halfedges[f.sides[i].halfedge].id << (f.sides[i].left ? ".L" : ".R");
        }
        os << "\n";
    }
    return os.str();
}

PartialTriangulation change_ring(const PartialTriangulation& t, RingSpec ring) {
    if (t.ring == ring) return t;
    if (!t.ring.is_rational()) throw InputError("can only change the field of a rational triangulation");
    PartialTriangulation out = t;
    out.ring = ring;
    for (auto& p : out.points) {
        try {
            p.lambda = Scalar(ring, p.lambda.rational());
        } catch (const std::domain_error&) {
            throw InputError("lambda of " + p.id + " is not defined over " + ring.name());
        }
        if (p.lambda.is_zero()) throw InputError("lambda of " + p.id + " vanishes over " + ring.name());
    }
    return out;
}

}  // namespace ptri
