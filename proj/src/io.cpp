#include "ewb/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ewb/enumerate.hpp"
#include "ewb/kalmbach.hpp"

namespace ewb {

namespace {

[[noreturn]] void bad(int line, const std::string& msg) {
    throw MalformedInput("line " + std::to_string(line) + ": " + msg);
}

struct Line {
    int no;
    std::vector<std::string> tok;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line l{no, {}};
        std::string t;
        while (ls >> t) l.tok.push_back(t);
        if (!l.tok.empty()) out.push_back(std::move(l));
    }
    return out;
}

UnitRational parse_rational(int no, const std::string& t) {
    try {
        return UnitRational(BigRational(t));
    } catch (const MalformedInput& e) {
        bad(no, std::string(e.what()) + " '" + t + "'");
    } catch (const std::exception&) {
        bad(no, "bad rational '" + t + "'");
    }
}

/// Shared line-by-line state for the structure kinds. Shape checks happen
/// here; anything law-like is the checkers' business after parsing.
struct BodyParser {
    ParsedDocument& doc;
    int head_no;
    std::map<std::string, ElemId> index;
    std::optional<ElemId> bottom, top, zero, one;
    std::set<std::pair<ElemId, ElemId>> covers;
    std::vector<ElemId> perp;
    struct Triple {
        int no;
        ElemId x, y, z;
        std::string xs, ys;
    };
    std::vector<Triple> sums, muls;

    explicit BodyParser(ParsedDocument& d, int head) : doc(d), head_no(head) {}

    int n() const { return static_cast<int>(doc.labels.size()); }

    ElemId elem(int no, const std::string& t) const {
        auto it = index.find(t);
        if (it == index.end()) bad(no, "unknown element '" + t + "'");
        return it->second;
    }

    void elements(const Line& l) {
        if (!doc.labels.empty()) bad(l.no, "duplicate 'elements'");
        if (l.tok.size() < 2) bad(l.no, "'elements' needs at least one element");
        for (size_t i = 1; i < l.tok.size(); ++i) {
            if (!index.emplace(l.tok[i], static_cast<ElemId>(doc.labels.size())).second)
                bad(l.no, "duplicate element '" + l.tok[i] + "'");
            doc.labels.push_back(l.tok[i]);
        }
        perp.assign(doc.labels.size(), -1);
    }

    void single(const Line& l, std::optional<ElemId>& slot, const char* field) {
        if (l.tok.size() != 2) bad(l.no, std::string("'") + field + "' needs one element");
        if (slot) bad(l.no, std::string("duplicate '") + field + "'");
        slot = elem(l.no, l.tok[1]);
    }

    void cover(const Line& l) {
        if (l.tok.size() != 3) bad(l.no, "'cover' needs two elements");
        ElemId x = elem(l.no, l.tok[1]), y = elem(l.no, l.tok[2]);
        if (x == y) bad(l.no, "cover relates '" + l.tok[1] + "' to itself");
        if (!covers.emplace(x, y).second)
            bad(l.no, "duplicate cover ('" + l.tok[1] + "','" + l.tok[2] + "')");
    }

    void perp_pair(const Line& l) {
        if (l.tok.size() != 3) bad(l.no, "'perp' needs two elements");
        ElemId x = elem(l.no, l.tok[1]), y = elem(l.no, l.tok[2]);
        if (perp[static_cast<size_t>(x)] >= 0)
            bad(l.no, "duplicate perp for '" + l.tok[1] + "'");
        if (perp[static_cast<size_t>(y)] >= 0)
            bad(l.no, "duplicate perp for '" + l.tok[2] + "'");
        perp[static_cast<size_t>(x)] = y;
        perp[static_cast<size_t>(y)] = x;
    }

    void triple(const Line& l, std::vector<Triple>& into, const char* field) {
        if (l.tok.size() != 4) bad(l.no, std::string("'") + field + "' needs three elements");
        into.push_back({l.no, elem(l.no, l.tok[1]), elem(l.no, l.tok[2]), elem(l.no, l.tok[3]),
                        l.tok[1], l.tok[2]});
    }

    void require(bool have, const char* field) const {
        if (!have) bad(head_no, "missing field '" + std::string(field) + "'");
    }

    void require_perp_total() const {
        for (int x = 0; x < n(); ++x)
            if (perp[static_cast<size_t>(x)] < 0)
                bad(head_no, "perp undefined for '" + doc.labels[static_cast<size_t>(x)] + "'");
    }

    /// relation = transitive closure of the cover pairs
    void finish_poset() {
        require(!doc.labels.empty(), "elements");
        require(bottom.has_value(), "bottom");
        require(top.has_value(), "top");
        const int m = n();
        std::vector<uint8_t> rel(static_cast<size_t>(m) * m, 0);
        for (auto [a, b] : covers) rel[static_cast<size_t>(a) * m + b] = 1;
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (rel[static_cast<size_t>(a) * m + k] && rel[static_cast<size_t>(k) * m + b])
                        rel[static_cast<size_t>(a) * m + b] = 1;
        doc.raw.name = doc.name;
        doc.raw.size = m;
        doc.raw.bottom = *bottom;
        doc.raw.top = *top;
        doc.raw.labels = doc.labels;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && rel[static_cast<size_t>(a) * m + b]) doc.raw.relation.emplace_back(a, b);
    }

    void finish_ea() {
        require(!doc.labels.empty(), "elements");
        require(zero.has_value(), "zero");
        require(one.has_value(), "one");
        require_perp_total();
        const int m = n();
        FinEffectAlgebra& e = doc.ea;
        e.size = m;
        e.zero = *zero;
        e.one = *one;
        e.name = doc.name;
        e.perp = perp;
        e.sum.assign(static_cast<size_t>(m) * m, -1);
        for (ElemId x = 0; x < m; ++x) {
            e.sum[static_cast<size_t>(e.zero) * m + x] = static_cast<int16_t>(x);
            e.sum[static_cast<size_t>(x) * m + e.zero] = static_cast<int16_t>(x);
        }
        std::set<std::pair<ElemId, ElemId>> seen;
        for (const auto& s : sums) {
            if (s.x == e.zero || s.y == e.zero) bad(s.no, "sums with zero are implicit");
            auto key = std::minmax(s.x, s.y);
            if (!seen.insert(key).second)
                bad(s.no, "duplicate sum for ('" + s.xs + "','" + s.ys + "')");
            e.sum[static_cast<size_t>(s.x) * m + s.y] = static_cast<int16_t>(s.z);
            e.sum[static_cast<size_t>(s.y) * m + s.x] = static_cast<int16_t>(s.z);
        }
    }

    void finish_em() {
        finish_ea();
        const int m = n();
        FinEffectMonoid& em = doc.em;
        em.ea = doc.ea;
        std::vector<ElemId> mul(static_cast<size_t>(m) * m, -1);
        for (ElemId x = 0; x < m; ++x) {
            mul[static_cast<size_t>(em.ea.zero) * m + x] = em.ea.zero;
            mul[static_cast<size_t>(x) * m + em.ea.zero] = em.ea.zero;
            mul[static_cast<size_t>(em.ea.one) * m + x] = x;
            mul[static_cast<size_t>(x) * m + em.ea.one] = x;
        }
        for (const auto& s : muls) {
            if (s.x == em.ea.zero || s.y == em.ea.zero || s.x == em.ea.one || s.y == em.ea.one)
                bad(s.no, "products with 0 and 1 are implicit");
            if (mul[static_cast<size_t>(s.x) * m + s.y] >= 0)
                bad(s.no, "duplicate mul for ('" + s.xs + "','" + s.ys + "')");
            mul[static_cast<size_t>(s.x) * m + s.y] = s.z;
        }
        for (ElemId x = 0; x < m; ++x)
            for (ElemId y = 0; y < m; ++y)
                if (mul[static_cast<size_t>(x) * m + y] < 0)
                    bad(head_no, "mul undefined for ('" + doc.labels[static_cast<size_t>(x)] +
                                     "','" + doc.labels[static_cast<size_t>(y)] + "')");
        em.mul = std::move(mul);
    }
};

std::string quote_escaped(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_text(const BoundedPoset& p, const std::string& name,
                     const std::vector<ElemId>* perp) {
    std::ostringstream out;
    out << "digraph \"" << quote_escaped(name) << "\" {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n  edge [arrowhead=none];\n";
    for (int i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=\"" << quote_escaped(p.label(i)) << "\"];\n";
    for (auto [a, b] : hasse_covers(p)) out << "  n" << a << " -> n" << b << ";\n";
    if (perp && perp->size() == static_cast<size_t>(p.size()))
        for (int a = 0; a < p.size(); ++a) {
            ElemId b = (*perp)[static_cast<size_t>(a)];
            if (a < b) out << "  n" << a << " -> n" << b << " [style=dashed, constraint=false];\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace

ParsedDocument parse_document(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw MalformedInput("line 1: empty document");
    const Line& head = lines.front();
    const std::string& kw = head.tok[0];

    ParsedDocument doc;
    if (kw == "poset")
        doc.kind = DocKind::Poset;
    else if (kw == "omp")
        doc.kind = DocKind::Omp;
    else if (kw == "effectalgebra")
        doc.kind = DocKind::EffectAlgebra;
    else if (kw == "effectmonoid")
        doc.kind = DocKind::EffectMonoid;
    else if (kw == "map")
        doc.kind = DocKind::Map;
    else if (kw == "rchain")
        doc.kind = DocKind::RChain;
    else
        bad(head.no, "unknown document kind '" + kw + "'");

    if (doc.kind == DocKind::Map) {
        if (head.tok.size() != 4) bad(head.no, "map header needs 'map NAME FROM TO'");
        doc.name = head.tok[1];
        doc.map = {head.tok[1], head.tok[2], head.tok[3], {}};
        std::set<std::string> sent;
        for (size_t i = 1; i < lines.size(); ++i) {
            const Line& l = lines[i];
            if (l.tok[0] != "send") bad(l.no, "unknown directive '" + l.tok[0] + "'");
            if (l.tok.size() != 3) bad(l.no, "'send' needs two elements");
            if (!sent.insert(l.tok[1]).second) bad(l.no, "duplicate send for '" + l.tok[1] + "'");
            doc.map.sends.emplace_back(l.tok[1], l.tok[2]);
        }
        return doc;
    }

    if (head.tok.size() != 2) bad(head.no, "header needs '" + kw + " NAME'");
    doc.name = head.tok[1];

    if (doc.kind == DocKind::RChain) {
        bool have_points = false;
        for (size_t i = 1; i < lines.size(); ++i) {
            const Line& l = lines[i];
            if (l.tok[0] != "points") bad(l.no, "unknown directive '" + l.tok[0] + "'");
            if (have_points) bad(l.no, "duplicate 'points'");
            have_points = true;
            for (size_t j = 1; j < l.tok.size(); ++j)
                doc.rchain.points.push_back(parse_rational(l.no, l.tok[j]));
        }
        if (!have_points) bad(head.no, "missing field 'points'");
        return doc;
    }

    BodyParser body(doc, head.no);
    const bool order_kind = doc.kind == DocKind::Poset || doc.kind == DocKind::Omp;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string& d = l.tok[0];
        if (d == "elements") {
            body.elements(l);
        } else if (order_kind && d == "bottom") {
            body.single(l, body.bottom, "bottom");
        } else if (order_kind && d == "top") {
            body.single(l, body.top, "top");
        } else if (order_kind && d == "cover") {
            body.cover(l);
        } else if (!order_kind && d == "zero") {
            body.single(l, body.zero, "zero");
        } else if (!order_kind && d == "one") {
            body.single(l, body.one, "one");
        } else if (!order_kind && d == "sum") {
            body.triple(l, body.sums, "sum");
        } else if (doc.kind == DocKind::EffectMonoid && d == "mul") {
            body.triple(l, body.muls, "mul");
        } else if (doc.kind != DocKind::Poset && d == "perp") {
            body.perp_pair(l);
        } else {
            bad(l.no, "unknown directive '" + d + "'");
        }
    }

    switch (doc.kind) {
    case DocKind::Poset:
        body.finish_poset();
        break;
    case DocKind::Omp:
        body.finish_poset();
        body.require_perp_total();
        doc.perp = body.perp;
        break;
    case DocKind::EffectAlgebra:
        body.finish_ea();
        break;
    case DocKind::EffectMonoid:
        body.finish_em();
        doc.ea = doc.em.ea;
        break;
    default:
        break;
    }
    return doc;
}

std::string serialize_document(const ParsedDocument& doc) {
    std::ostringstream out;
    auto sorted = [&](std::vector<std::string> ls) {
        std::sort(ls.begin(), ls.end());
        for (const auto& l : ls) out << l << "\n";
    };
    auto elements_line = [&]() {
        out << "elements";
        for (const auto& l : doc.labels) out << " " << l;
        out << "\n";
    };

    switch (doc.kind) {
    case DocKind::Poset:
    case DocKind::Omp: {
        out << (doc.kind == DocKind::Poset ? "poset " : "omp ") << doc.name << "\n";
        elements_line();
        out << "bottom " << doc.labels[static_cast<size_t>(doc.raw.bottom)] << "\n";
        out << "top " << doc.labels[static_cast<size_t>(doc.raw.top)] << "\n";
        const int n = doc.raw.size;
        std::vector<uint8_t> rel(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) rel[static_cast<size_t>(i) * n + i] = 1;
        for (auto [a, b] : doc.raw.relation) rel[static_cast<size_t>(a) * n + b] = 1;
        BoundedPoset p(n, rel, doc.raw.bottom, doc.raw.top, doc.labels);
        std::vector<std::string> ls;
        for (auto [a, b] : hasse_covers(p))
            ls.push_back("cover " + doc.labels[static_cast<size_t>(a)] + " " +
                         doc.labels[static_cast<size_t>(b)]);
        sorted(std::move(ls));
        if (doc.kind == DocKind::Omp) {
            std::vector<std::string> ps;
            for (int a = 0; a < n; ++a)
                if (doc.perp[static_cast<size_t>(a)] >= a)
                    ps.push_back("perp " + doc.labels[static_cast<size_t>(a)] + " " +
                                 doc.labels[static_cast<size_t>(doc.perp[static_cast<size_t>(a)])]);
            sorted(std::move(ps));
        }
        break;
    }
    case DocKind::EffectAlgebra:
    case DocKind::EffectMonoid: {
        const FinEffectAlgebra& e = doc.kind == DocKind::EffectMonoid ? doc.em.ea : doc.ea;
        out << (doc.kind == DocKind::EffectAlgebra ? "effectalgebra " : "effectmonoid ")
            << doc.name << "\n";
        elements_line();
        out << "zero " << doc.labels[static_cast<size_t>(e.zero)] << "\n";
        out << "one " << doc.labels[static_cast<size_t>(e.one)] << "\n";
        std::vector<std::string> ls;
        for (ElemId a = 0; a < e.size; ++a)
            for (ElemId b = a; b < e.size; ++b)
                if (a != e.zero && b != e.zero && e.defined(a, b))
                    ls.push_back("sum " + doc.labels[static_cast<size_t>(a)] + " " +
                                 doc.labels[static_cast<size_t>(b)] + " " +
                                 doc.labels[static_cast<size_t>(e.add(a, b))]);
        sorted(std::move(ls));
        std::vector<std::string> ps;
        for (ElemId a = 0; a < e.size; ++a)
            if (e.comp(a) >= a)
                ps.push_back("perp " + doc.labels[static_cast<size_t>(a)] + " " +
                             doc.labels[static_cast<size_t>(e.comp(a))]);
        sorted(std::move(ps));
        if (doc.kind == DocKind::EffectMonoid) {
            std::vector<std::string> ms;
            for (ElemId a = 0; a < e.size; ++a)
                for (ElemId b = 0; b < e.size; ++b) {
                    if (a == e.zero || a == e.one || b == e.zero || b == e.one) continue;
                    ms.push_back("mul " + doc.labels[static_cast<size_t>(a)] + " " +
                                 doc.labels[static_cast<size_t>(b)] + " " +
                                 doc.labels[static_cast<size_t>(doc.em.times(a, b))]);
                }
            sorted(std::move(ms));
        }
        break;
    }
    case DocKind::Map: {
        out << "map " << doc.map.name << " " << doc.map.from << " " << doc.map.to << "\n";
        std::vector<std::string> ls;
        for (const auto& [x, y] : doc.map.sends) ls.push_back("send " + x + " " + y);
        sorted(std::move(ls));
        break;
    }
    case DocKind::RChain: {
        out << "rchain " << doc.name << "\npoints";
        for (const auto& p : doc.rchain.points) out << " " << p.str();
        out << "\n";
        break;
    }
    }
    return out.str();
}

ParsedDocument parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MalformedInput("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_document(buf.str());
}

std::string export_dot(const BoundedPoset& p, const std::string& name) {
    return dot_text(p, name, nullptr);
}

std::string export_dot(const OrthoPoset& p) { return dot_text(p.poset, p.name, &p.perp); }

namespace {

int report_exit(const Report& r, std::ostream& out) {
    out << r.to_text();
    return r.pass() ? 0 : 1;
}

int expects(std::ostream& out, const char* cmd, const char* kind) {
    out << cmd << " expects " << kind << " document\n";
    return 2;
}

int do_validate(const ParsedDocument& doc, std::ostream& out) {
    switch (doc.kind) {
    case DocKind::Poset:
        return report_exit(validate_bounded_poset(doc.raw), out);
    case DocKind::Omp: {
        Report r = validate_bounded_poset(doc.raw);
        if (!r.pass()) return report_exit(r, out);
        OrthoPoset a{poset_from_raw(doc.raw), doc.perp, doc.name};
        return report_exit(check_omp(a), out);
    }
    case DocKind::EffectAlgebra:
        return report_exit(check_effect_algebra(doc.ea), out);
    case DocKind::EffectMonoid:
        return report_exit(check_effect_monoid(doc.em), out);
    case DocKind::Map:
        out << "PASS " << doc.name << " (shape only; endpoints bind in factorize)\n";
        return 0;
    case DocKind::RChain:
        if (valid_rchain(doc.rchain)) {
            out << "PASS " << doc.name << "\n";
            return 0;
        }
        out << "LAW=even-ascending WITNESS=() STRUCTURE=" << doc.name << "\n";
        return 1;
    }
    return 2;
}

int do_kalmbach(const std::string& file, const std::string& dot_path, std::ostream& out) {
    ParsedDocument doc = parse_file(file);
    if (doc.kind != DocKind::Poset) return expects(out, "kalmbach", "a poset");
    Report r = validate_bounded_poset(doc.raw);
    if (!r.pass()) return report_exit(r, out);
    BoundedPoset p = poset_from_raw(doc.raw);
    KalmbachExtension k = kalmbach_extension(p);
    out << "K(" << doc.name << ") size " << k.poset.size() << "\n";
    for (int i = 0; i < k.poset.size(); ++i)
        out << "element " << i << " " << k.poset.label(i) << "\n";
    if (!dot_path.empty()) {
        OrthoPoset o = omp_of(k);
        o.name = "K(" + doc.name + ")";
        std::string dot = export_dot(o);
        if (dot_path == "-") {
            out << dot;
        } else {
            std::ofstream f(dot_path);
            if (!f) {
                out << "cannot write '" << dot_path << "'\n";
                return 2;
            }
            f << dot;
        }
    }
    return 0;
}

int do_action(const std::string& file, std::ostream& out) {
    ParsedDocument doc = parse_file(file);
    if (doc.kind != DocKind::EffectAlgebra && doc.kind != DocKind::EffectMonoid)
        return expects(out, "action", "an effect algebra or effect monoid");
    const FinEffectAlgebra& e = doc.ea;
    Report r = check_effect_algebra(e);
    if (!r.pass()) return report_exit(r, out);

    BoundedPoset ord = induced_order(e);
    KalmbachExtension k = kalmbach_extension(ord);
    PosetMap act = algebra_action(e, k);
    PosetMap unit = unit_embedding(ord, k);
    bool unit_ok = compose(act, unit).assign == identity_map(ord).assign;

    KalmbachExtension kk = kalmbach_extension(k.poset);
    PosetMap kact = kalmbach_map(act, kk, k);
    PosetMap mult = monad_mult(ord, k, kk);
    bool square_ok = compose(act, kact).assign == compose(act, mult).assign;

    bool dsum_ok = dposet_sum(e) == e.sum;

    out << "action-unit: " << (unit_ok ? "ok" : "violated") << "\n";
    out << "action-square: " << (square_ok ? "ok" : "violated") << "\n";
    out << "difference-roundtrip: " << (dsum_ok ? "ok" : "violated") << "\n";
    return unit_ok && square_ok && dsum_ok ? 0 : 1;
}

int do_factorize(const std::string& p_file, const std::string& a_file, const std::string& m_file,
                 std::ostream& out) {
    ParsedDocument pd = parse_file(p_file);
    if (pd.kind != DocKind::Poset) return expects(out, "factorize", "a poset");
    ParsedDocument ad = parse_file(a_file);
    if (ad.kind != DocKind::Omp) return expects(out, "factorize", "an omp");
    ParsedDocument md = parse_file(m_file);
    if (md.kind != DocKind::Map) return expects(out, "factorize", "a map");
    if (md.map.from != pd.name || md.map.to != ad.name) {
        out << "map endpoints (" << md.map.from << " -> " << md.map.to
            << ") do not match the documents\n";
        return 2;
    }

    Report rp = validate_bounded_poset(pd.raw);
    if (!rp.pass()) return report_exit(rp, out);
    Report ra = validate_bounded_poset(ad.raw);
    if (!ra.pass()) return report_exit(ra, out);
    BoundedPoset p = poset_from_raw(pd.raw);
    OrthoPoset a{poset_from_raw(ad.raw), ad.perp, ad.name};
    Report ro = check_omp(a);
    if (!ro.pass()) return report_exit(ro, out);

    std::map<std::string, ElemId> pidx, aidx;
    for (size_t i = 0; i < pd.labels.size(); ++i) pidx[pd.labels[i]] = static_cast<ElemId>(i);
    for (size_t i = 0; i < ad.labels.size(); ++i) aidx[ad.labels[i]] = static_cast<ElemId>(i);
    std::vector<ElemId> assign(static_cast<size_t>(p.size()), -1);
    for (const auto& [sx, sy] : md.map.sends) {
        auto ix = pidx.find(sx);
        if (ix == pidx.end()) {
            out << "unknown element '" << sx << "' in map\n";
            return 2;
        }
        auto iy = aidx.find(sy);
        if (iy == aidx.end()) {
            out << "unknown element '" << sy << "' in map\n";
            return 2;
        }
        assign[static_cast<size_t>(ix->second)] = iy->second;
    }
    for (int x = 0; x < p.size(); ++x)
        if (assign[static_cast<size_t>(x)] < 0) {
            out << "send undefined for '" << pd.labels[static_cast<size_t>(x)] << "'\n";
            return 2;
        }

    PosetMap f{p, a.poset, assign};
    Report rf = check_poset_map(f);
    if (!rf.pass()) return report_exit(rf, out);

    FreeFactorization ff = free_factorization(f, a);
    out << "extension size " << ff.extension.poset.size() << "\n";
    for (int i = 0; i < ff.extension.poset.size(); ++i)
        out << "h " << ff.extension.poset.label(i) << " -> "
            << a.poset.label(ff.h[static_cast<size_t>(i)]) << "\n";
    Report rm = check_omp_morphism(omp_of(ff.extension), a, ff.h);
    out << rm.to_text();
    out << "unique: " << (ff.unique_certified ? "yes" : "not-verified")
        << " searched=" << ff.searched << "\n";
    return rm.pass() ? 0 : 1;
}

int do_decompose(const std::string& file, const std::string& idem_label, std::ostream& out) {
    ParsedDocument doc = parse_file(file);
    if (doc.kind != DocKind::EffectMonoid) return expects(out, "decompose", "an effect monoid");
    const FinEffectMonoid& m = doc.em;
    Report r = check_effect_monoid(m);
    if (!r.pass()) return report_exit(r, out);

    ElemId p = -1;
    if (!idem_label.empty()) {
        auto it = std::find(doc.labels.begin(), doc.labels.end(), idem_label);
        if (it == doc.labels.end()) {
            out << "unknown element '" << idem_label << "'\n";
            return 2;
        }
        p = static_cast<ElemId>(it - doc.labels.begin());
    } else {
        for (ElemId q : idempotents(m))
            if (q != m.ea.zero && q != m.ea.one) {
                p = q;
                break;
            }
    }

    EmClassification c = classify_finite_em(m);
    if (p < 0) {
        out << "irreducible: yes\nclass: " << c.descriptor << "\n";
        return c.failed ? 1 : 0;
    }

    CornerDecomposition d = corner_decompose(m, p);
    out << "split at " << doc.labels[static_cast<size_t>(p)] << "\n";
    out << "left unit " << doc.labels[static_cast<size_t>(p)] << "\n" << em_table_text(d.left);
    out << "right unit " << doc.labels[static_cast<size_t>(m.ea.comp(p))] << "\n"
        << em_table_text(d.right);
    out << "pairing certified: " << (d.certified ? "yes" : "no") << "\n";
    out << "class: " << c.descriptor << "\n";
    return d.certified && !c.failed ? 0 : 1;
}

int do_enumerate(const std::string& kind, int maxn, std::ostream& out) {
    if (kind == "ea") {
        for (const auto& e : enumerate_effect_algebras(maxn)) {
            out << e.name << "\nsize " << e.size << "\nsum";
            for (ElemId a = 0; a < e.size; ++a)
                for (ElemId b = 0; b < e.size; ++b) {
                    int16_t s = e.sum[static_cast<size_t>(a) * e.size + b];
                    out << " " << (s < 0 ? std::string(".") : std::to_string(s));
                }
            out << "\nperp";
            for (ElemId a = 0; a < e.size; ++a) out << " " << e.comp(a);
            out << "\n";
        }
    } else {
        for (const auto& m : enumerate_effect_monoids(maxn))
            out << m.ea.name << "\n" << em_table_text(m);
    }
    return 0;
}

int do_census(int maxn, const std::string& out_path, std::ostream& out) {
    CensusReport rep = census(maxn);
    out << rep.canonical_text();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            out << "cannot write '" << out_path << "'\n";
            return 2;
        }
        f << rep.canonical_text();
    }
    return rep.counterexample.empty() ? 0 : 1;
}

int do_counterexample(int steps, std::ostream& out) {
    for (const auto& c : no_lub_witness(steps)) out << rchain_text(c) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"finite effect-algebra workbench"};
    app.require_subcommand(1);

    std::string file, dot_path, out_path, kind, idem;
    std::string p_file, a_file, m_file;
    int maxn = 0, steps = 0;

    auto* validate = app.add_subcommand("validate", "parse a document and run its law checker");
    validate->add_option("file", file, "document to check")->required();

    auto* kal = app.add_subcommand("kalmbach", "build the chain extension of a poset");
    kal->add_option("file", file, "poset document")->required();
    kal->add_option("--dot", dot_path, "write a DOT rendering ('-' for standard output)");

    auto* comp = app.add_subcommand("check-omp", "orthomodular poset laws");
    comp->add_option("file", file)->required();
    auto* cea = app.add_subcommand("check-ea", "effect algebra laws");
    cea->add_option("file", file)->required();
    auto* cem = app.add_subcommand("check-em", "effect monoid laws");
    cem->add_option("file", file)->required();

    auto* action = app.add_subcommand("action", "verify the collapse action laws");
    action->add_option("file", file, "effect algebra document")->required();

    auto* fact = app.add_subcommand("factorize", "extend a poset map through the chain embedding");
    fact->add_option("poset", p_file, "poset document")->required();
    fact->add_option("omp", a_file, "omp document")->required();
    fact->add_option("map", m_file, "map document")->required();

    auto* dec = app.add_subcommand("decompose", "split an effect monoid at an idempotent");
    dec->add_option("file", file, "effect monoid document")->required();
    dec->add_option("--idempotent", idem, "element label to split at");

    auto* enm = app.add_subcommand("enumerate", "stream canonical structures");
    enm->add_option("--kind", kind, "ea or em")
        ->required()
        ->check(CLI::IsMember({"ea", "em"}));
    enm->add_option("--max", maxn, "size bound")->required();

    auto* cen = app.add_subcommand("census", "classify every monoid up to a size bound");
    cen->add_option("--max", maxn, "size bound")->required();
    cen->add_option("--out", out_path, "also write the report to a file");

    auto* cex = app.add_subcommand("counterexample", "descending chain of upper bounds");
    cex->add_option("--steps", steps, "number of descents")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (validate->parsed()) return do_validate(parse_file(file), out);
        if (kal->parsed()) return do_kalmbach(file, dot_path, out);
        if (comp->parsed()) {
            ParsedDocument doc = parse_file(file);
            if (doc.kind != DocKind::Omp) return expects(out, "check-omp", "an omp");
            return do_validate(doc, out);
        }
        if (cea->parsed()) {
            ParsedDocument doc = parse_file(file);
            if (doc.kind != DocKind::EffectAlgebra && doc.kind != DocKind::EffectMonoid)
                return expects(out, "check-ea", "an effect algebra");
            Report r = check_effect_algebra(doc.ea);
            return report_exit(r, out);
        }
        if (cem->parsed()) {
            ParsedDocument doc = parse_file(file);
            if (doc.kind != DocKind::EffectMonoid) return expects(out, "check-em", "an effect monoid");
            return do_validate(doc, out);
        }
        if (action->parsed()) return do_action(file, out);
        if (fact->parsed()) return do_factorize(p_file, a_file, m_file, out);
        if (dec->parsed()) return do_decompose(file, idem, out);
        if (enm->parsed()) return do_enumerate(kind, maxn, out);
        if (cen->parsed()) return do_census(maxn, out_path, out);
        if (cex->parsed()) return do_counterexample(steps, out);
    } catch (const BudgetExceeded& e) {
        out << "BUDGET " << e.what() << " estimate=" << e.estimate << "\n";
        return 3;
    } catch (const MalformedInput& e) {
        out << "MALFORMED " << e.what() << "\n";
        return 2;
    } catch (const PreconditionFailure& e) {
        out << "PRECONDITION " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        out << "LAW " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace ewb
