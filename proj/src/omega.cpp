#include "ewb/omega.hpp"

#include <algorithm>

namespace ewb {

MonotoneSeq constant_seq(ElemId x) { return MonotoneSeq{{}, x}; }

bool valid_monotone_seq(const BoundedPoset& p, const MonotoneSeq& s) {
    const size_t len = s.prefix.size();
    for (size_t i = 0; i + 1 < len; ++i)
        if (!p.leq(s.prefix[i], s.prefix[i + 1])) return false;
    if (len > 0 && !p.leq(s.prefix[len - 1], s.eventual)) return false;
    if (s.eventual < 0 || s.eventual >= p.size()) return false;
    for (ElemId x : s.prefix)
        if (x < 0 || x >= p.size()) return false;
    return true;
}

ElemId seq_class_of(const BoundedPoset& p, const MonotoneSeq& s) {
    if (!valid_monotone_seq(p, s)) throw MalformedInput("sequence is not monotone");
    return s.eventual;
}

bool seq_eventually_equal(const BoundedPoset& p, const MonotoneSeq& s, const MonotoneSeq& t) {
    // beyond both prefixes the sequences are constant, so agreement from an
    // index on is agreement of the eventual values
    return seq_class_of(p, s) == seq_class_of(p, t);
}

bool seq_leq(const BoundedPoset& p, const MonotoneSeq& s, const MonotoneSeq& t) {
    seq_class_of(p, s);
    seq_class_of(p, t);
    // from the horizon on both sequences are constant, so the existential
    // over starting indices is settled by the tails
    size_t horizon = std::max(s.prefix.size(), t.prefix.size());
    return p.leq(s.at(horizon), t.at(horizon));
}

SeqModel seq_functor(const BoundedPoset& p) {
    const int n = p.size();
    // one representative per class: the constant sequence
    std::vector<MonotoneSeq> repr;
    repr.reserve(static_cast<size_t>(n));
    for (ElemId x = 0; x < n; ++x) repr.push_back(constant_seq(x));

    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b)
            leq[static_cast<size_t>(a) * n + b] =
                seq_leq(p, repr[static_cast<size_t>(a)], repr[static_cast<size_t>(b)]) ? 1 : 0;

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (ElemId x = 0; x < n; ++x) labels.push_back("[" + p.label(x) + "...]");

    SeqModel out{BoundedPoset(n, leq,
                              seq_class_of(p, constant_seq(p.bottom())),
                              seq_class_of(p, constant_seq(p.top())), labels),
                 PosetMap{}, false};

    std::vector<ElemId> assign(static_cast<size_t>(n));
    for (ElemId x = 0; x < n; ++x)
        assign[static_cast<size_t>(x)] = seq_class_of(p, repr[static_cast<size_t>(x)]);
    out.stab = PosetMap{out.poset, p, assign};

    // certify stabilization as an order isomorphism, not just a bijection
    std::vector<char> hit(static_cast<size_t>(n), 0);
    bool ok = check_poset_map(out.stab).pass();
    for (ElemId x = 0; x < n && ok; ++x) {
        ElemId v = assign[static_cast<size_t>(x)];
        if (hit[static_cast<size_t>(v)]) ok = false;
        hit[static_cast<size_t>(v)] = 1;
    }
    for (ElemId a = 0; a < n && ok; ++a)
        for (ElemId b = 0; b < n && ok; ++b)
            if (out.poset.leq(a, b) !=
                p.leq(assign[static_cast<size_t>(a)], assign[static_cast<size_t>(b)]))
                ok = false;
    out.certified = ok;
    return out;
}

PosetMap seq_map(const PosetMap& f) {
    if (!check_poset_map(f).pass())
        throw PreconditionFailure("not a bounded-poset morphism");
    SeqModel src = seq_functor(f.source);
    SeqModel dst = seq_functor(f.target);
    std::vector<ElemId> assign(static_cast<size_t>(src.poset.size()));
    for (ElemId x = 0; x < src.poset.size(); ++x) {
        // image of a representative of the class of x, then its class
        MonotoneSeq image = constant_seq(f(src.stab(x)));
        assign[static_cast<size_t>(x)] = seq_class_of(f.target, image);
    }
    return PosetMap{src.poset, dst.poset, assign};
}

PosetMap sup_map(const FinEffectAlgebra& e) {
    BoundedPoset order = induced_order(e);
    SeqModel model = seq_functor(order);
    // the largest value of a weakly increasing sequence is its eventual
    // value, so the supremum is the stabilization value
    return model.stab;
}

PosetMap const_embedding(const BoundedPoset& p) {
    SeqModel model = seq_functor(p);
    std::vector<ElemId> assign(static_cast<size_t>(p.size()));
    for (ElemId x = 0; x < p.size(); ++x)
        assign[static_cast<size_t>(x)] = seq_class_of(p, constant_seq(x));
    return PosetMap{p, model.poset, assign};
}

namespace {

/// Least upper bound of a finite set when it exists.
std::optional<ElemId> finite_lub(const BoundedPoset& p, const std::vector<ElemId>& xs) {
    std::vector<ElemId> ubs;
    for (ElemId u = 0; u < p.size(); ++u) {
        bool above = true;
        for (ElemId x : xs)
            if (!p.leq(x, u)) above = false;
        if (above) ubs.push_back(u);
    }
    for (ElemId u : ubs) {
        bool least = true;
        for (ElemId v : ubs)
            if (!p.leq(u, v)) least = false;
        if (least) return u;
    }
    return std::nullopt;
}

} // namespace

bool check_omega_normal(const FinEffectAlgebra& src, const FinEffectAlgebra& dst,
                        const std::vector<ElemId>& assign) {
    BoundedPoset ps = induced_order(src);
    BoundedPoset pt = induced_order(dst);
    PosetMap f{ps, pt, assign};
    Report r = check_poset_map(f);
    if (!r.pass())
        throw PreconditionFailure("not a bounded-poset morphism: " + r.violations.front().law);

    // every monotone sequence with prefix length up to three: suprema on
    // both sides must exist and correspond
    const int n = ps.size();
    std::vector<std::vector<ElemId>> prefixes = {{}};
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<ElemId>> next;
        for (const auto& pre : prefixes) {
            if (static_cast<int>(pre.size()) != len - 1) continue;
            for (ElemId x = 0; x < n; ++x) {
                if (!pre.empty() && !ps.leq(pre.back(), x)) continue;
                auto ext = pre;
                ext.push_back(x);
                next.push_back(ext);
            }
        }
        for (auto& pre : next) prefixes.push_back(std::move(pre));
    }
    for (const auto& pre : prefixes)
        for (ElemId ev = 0; ev < n; ++ev) {
            MonotoneSeq s{pre, ev};
            if (!valid_monotone_seq(ps, s)) continue;
            std::vector<ElemId> range = pre;
            range.push_back(ev);
            auto sup_src = finite_lub(ps, range);
            if (!sup_src || *sup_src != seq_class_of(ps, s)) return false;
            std::vector<ElemId> image;
            for (ElemId x : range) image.push_back(f(x));
            auto sup_dst = finite_lub(pt, image);
            if (!sup_dst || *sup_dst != f(*sup_src)) return false;
        }
    return true;
}

std::vector<IntervalPair> interval_pairs(const BoundedPoset& p) {
    std::vector<IntervalPair> out;
    for (ElemId a = 0; a < p.size(); ++a)
        for (ElemId b = 0; b < p.size(); ++b)
            if (p.leq(a, b)) out.push_back({a, b});
    return out;
}

bool interval_leq(const BoundedPoset& p, const IntervalPair& a, const IntervalPair& b) {
    return p.leq(b.low, a.low) && p.leq(a.high, b.high);
}

Report check_monoid_naturality(const FinEffectMonoid& m) {
    const auto& e = m.ea;
    const int n = e.size;
    if (m.mul.size() != static_cast<size_t>(n) * n)
        throw MalformedInput("mul table not total");
    BoundedPoset order = induced_order(e);
    Report rep;
    rep.structure = e.name.empty() ? "effect monoid" : e.name;

    // pairing a -> (a, 1) with 0 -> (0, 0), collapsed by multiplication
    for (ElemId a = 0; a < n; ++a) {
        ElemId left = a;
        ElemId right = (a == e.zero) ? e.zero : e.one;
        if (m.times(left, right) != a) rep.fail("pairing-collapse", {a});
    }

    // multiplying a triple from the left or from the right first
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b)
            for (ElemId c = 0; c < n; ++c)
                if (m.times(m.times(a, b), c) != m.times(a, m.times(b, c)))
                    rep.fail("two-sided-collapse", {a, b, c});

    // the pairing map is a bounded-poset morphism into the square
    {
        PosetProduct sq = product_poset(order, order);
        std::vector<ElemId> pair_id(static_cast<size_t>(n) * n, -1);
        for (size_t i = 0; i < sq.pairs.size(); ++i)
            pair_id[static_cast<size_t>(sq.pairs[i].first) * n + sq.pairs[i].second] =
                static_cast<ElemId>(i);
        std::vector<ElemId> assign(static_cast<size_t>(n));
        for (ElemId a = 0; a < n; ++a) {
            ElemId right = (a == e.zero) ? e.zero : e.one;
            assign[static_cast<size_t>(a)] = pair_id[static_cast<size_t>(a) * n + right];
        }
        PosetMap eps{order, sq.poset, assign};
        Report er = check_poset_map(eps);
        for (const auto& v : er.violations)
            rep.fail("pairing-morphism", v.witness, v.law);
    }

    auto intervals = interval_pairs(order);

    // scaling intervals: a * [b <= c] = [a*b <= a*c] must land on intervals
    for (ElemId a = 0; a < n; ++a)
        for (const auto& iv : intervals)
            if (!order.leq(m.times(a, iv.low), m.times(a, iv.high)))
                rep.fail("scaling-well-defined", {a, iv.low, iv.high});

    // and be monotone in the interval argument
    for (ElemId a = 0; a < n; ++a)
        for (const auto& u : intervals)
            for (const auto& v : intervals) {
                if (!interval_leq(order, u, v)) continue;
                IntervalPair iu{m.times(a, u.low), m.times(a, u.high)};
                IntervalPair iv{m.times(a, v.low), m.times(a, v.high)};
                if (!order.leq(iu.low, iu.high) || !order.leq(iv.low, iv.high)) continue;
                if (!interval_leq(order, iu, iv))
                    rep.fail("scaling-monotone-interval", {a, u.low, u.high},
                             "target [" + std::to_string(v.low) + "," +
                                 std::to_string(v.high) + "]");
            }

    // difference as a map out of intervals is monotone for the pair order
    for (const auto& u : intervals)
        for (const auto& v : intervals) {
            if (!interval_leq(order, u, v)) continue;
            auto du = ominus(e, u.high, u.low);
            auto dv = ominus(e, v.high, v.low);
            if (!du || !dv) {
                rep.fail("difference-total", {u.low, u.high});
                continue;
            }
            if (!order.leq(*du, *dv))
                rep.fail("difference-monotone", {u.low, u.high, v.low, v.high});
        }

    // multiplying then subtracting equals subtracting then multiplying:
    // a*(c - b) = (a*c) - (a*b) whenever b <= c
    for (ElemId a = 0; a < n; ++a)
        for (const auto& iv : intervals) {
            auto d = ominus(e, iv.high, iv.low);
            if (!d) {
                rep.fail("difference-total", {iv.low, iv.high});
                continue;
            }
            auto rhs = ominus(e, m.times(a, iv.high), m.times(a, iv.low));
            if (!rhs)
                rep.fail("difference-distribution", {a, iv.low, iv.high},
                         "difference of scaled endpoints undefined");
            else if (m.times(a, *d) != *rhs)
                rep.fail("difference-distribution", {a, iv.low, iv.high});
        }

    return rep;
}

} // namespace ewb
