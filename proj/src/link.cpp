#include "talex/link.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace talex {

// ------------------------------------------------------------ braid parsing

namespace {

struct BraidTok {
    int gen;  // signed generator power unit
    int pow;
};

void expand_group(const std::vector<std::pair<int, int>>& group, int pow, std::vector<int>& out) {
    for (int r = 0; r < (pow < 0 ? -pow : pow); ++r) {
        if (pow > 0) {
            for (auto& [g, p] : group)
                for (int i = 0; i < (p < 0 ? -p : p); ++i) out.push_back(p < 0 ? -g : g);
        } else {
            for (auto it = group.rbegin(); it != group.rend(); ++it)
                for (int i = 0; i < (it->second < 0 ? -it->second : it->second); ++i)
                    out.push_back(it->second < 0 ? it->first : -it->first);
        }
    }
}

}  // namespace

BraidWord parse_braid(const std::string& text, int strands) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    std::vector<int> letters;
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&](const char* what) -> long {
        bool neg = false;
        if (i < n && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("braid: expected ") + what, i);
        long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return neg ? -v : v;
    };

    std::function<void(std::vector<std::pair<int, int>>&)> parse_seq =
        [&](std::vector<std::pair<int, int>>& seq) {
            for (;;) {
                skip_ws();
                if (i >= n || text[i] == ')') return;
                if (text[i] == '(') {
                    ++i;
                    std::vector<std::pair<int, int>> inner;
                    parse_seq(inner);
                    skip_ws();
                    if (i >= n || text[i] != ')') throw ParseError("braid: expected ')'", i);
                    ++i;
                    long pow = 1;
                    skip_ws();
                    if (i < n && text[i] == '^') {
                        ++i;
                        pow = parse_int("exponent");
                    }
                    std::vector<int> flat;
                    expand_group(inner, static_cast<int>(pow), flat);
                    for (int g : flat) seq.push_back({g < 0 ? -g : g, g < 0 ? -1 : 1});
                    continue;
                }
                if (text[i] == 's' || text[i] == 'S') {
                    ++i;
                    long k = parse_int("generator index");
                    if (k <= 0) throw ParseError("braid: generator index must be positive", i);
                    long pow = 1;
                    skip_ws();
                    if (i < n && text[i] == '^') {
                        ++i;
                        pow = parse_int("exponent");
                    }
                    seq.push_back({static_cast<int>(k), static_cast<int>(pow)});
                    continue;
                }
                throw ParseError(std::string("braid: unexpected character '") + text[i] + "'", i);
            }
        };

    std::vector<std::pair<int, int>> seq;
    parse_seq(seq);
    skip_ws();
    if (i < n) throw ParseError("braid: unexpected ')'", i);
    for (auto& [g, p] : seq)
        for (int r = 0; r < (p < 0 ? -p : p); ++r) letters.push_back(p < 0 ? -g : g);

    BraidWord b;
    int maxg = 0;
    for (int l : letters) maxg = std::max(maxg, l < 0 ? -l : l);
    b.strands = strands > 0 ? strands : maxg + 1;
    if (b.strands < 1) b.strands = 1;
    for (int l : letters) {
        int k = l < 0 ? -l : l;
        if (k > b.strands - 1)
            throw ParseError("braid: generator s" + std::to_string(k) + " out of range for " +
                                 std::to_string(b.strands) + " strands",
                             0);
    }
    b.letters = std::move(letters);
    return b;
}

// ---------------------------------------------------------------- diagrams

LinkDiagram::LinkDiagram(int arc_count, std::vector<Crossing> crossings)
    : arc_count_(arc_count), crossings_(std::move(crossings)) {
    end_crossing_.assign(arc_count_, -1);
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        const Crossing& x = crossings_[c];
        if (x.over < 0 || x.over >= arc_count_ || x.under_in < 0 || x.under_in >= arc_count_ ||
            x.under_out < 0 || x.under_out >= arc_count_)
            throw ParseError("diagram: arc index out of range");
        if (x.sign != 1 && x.sign != -1) throw ParseError("diagram: crossing sign must be ±1");
        if (end_crossing_[x.under_in] != -1)
            throw ParseError("diagram: arc " + std::to_string(x.under_in) +
                             " ends at two crossings");
        end_crossing_[x.under_in] = c;
    }
    // successor iteration; every arc must close up into a cycle
    std::vector<int> succ(arc_count_, -1);
    std::vector<bool> is_start(arc_count_, false);
    for (const Crossing& x : crossings_) succ[x.under_in] = x.under_out;
    std::vector<bool> seen(arc_count_, false);
    for (int a = 0; a < arc_count_; ++a) {
        if (seen[a]) continue;
        std::vector<int> cyc;
        if (succ[a] == -1) {
            // free loop: verify it appears nowhere as under_out or over
            for (const Crossing& x : crossings_)
                if (x.under_out == a)
                    throw ParseError("diagram: arc starts at a crossing but never ends");
            cyc.push_back(a);
            seen[a] = true;
        } else {
            int b = a;
            do {
                if (b == -1) throw ParseError("diagram: broken arc cycle");
                if (seen[b]) throw ParseError("diagram: arc cycles intersect");
                seen[b] = true;
                cyc.push_back(b);
                b = succ[b];
            } while (b != a);
        }
        components_.push_back(std::move(cyc));
    }
    std::sort(components_.begin(), components_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return *std::min_element(a.begin(), a.end()) <
                         *std::min_element(b.begin(), b.end());
              });
    // rotate each cycle to start at its least arc
    for (auto& cyc : components_) {
        auto it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), it, cyc.end());
    }
    comp_of_.assign(arc_count_, -1);
    for (int c = 0; c < static_cast<int>(components_.size()); ++c)
        for (int a : components_[c]) comp_of_[a] = c;
}

bool LinkDiagram::is_free_loop(int comp) const {
    return components_.at(comp).size() == 1 && end_crossing_[components_[comp][0]] == -1;
}

namespace {

struct Builder {
    std::vector<Crossing> crossings;
    int next_arc = 0;
    std::map<int, int> parent;  // closure identifications

    int find(int a) {
        while (parent.count(a)) a = parent.at(a);
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
    LinkDiagram finish() {
        std::set<int> roots;
        for (int a = 0; a < next_arc; ++a) roots.insert(find(a));
        std::map<int, int> idx;
        for (int r : roots) idx[r] = static_cast<int>(idx.size());
        for (auto& x : crossings) {
            x.over = idx[find(x.over)];
            x.under_in = idx[find(x.under_in)];
            x.under_out = idx[find(x.under_out)];
        }
        return LinkDiagram(static_cast<int>(roots.size()), crossings);
    }
};

void run_braid(Builder& bld, const BraidWord& b, std::vector<int>& cur) {
    for (int s : b.letters) {
        int i = (s < 0 ? -s : s) - 1;
        if (i < 0 || i >= b.strands - 1) throw ParseError("braid: letter out of range");
        if (s > 0) {
            int over = cur[i], uin = cur[i + 1];
            int uout = bld.next_arc++;
            bld.crossings.push_back({over, uin, uout, +1});
            cur[i] = uout;
            cur[i + 1] = over;
        } else {
            int over = cur[i + 1], uin = cur[i];
            int uout = bld.next_arc++;
            bld.crossings.push_back({over, uin, uout, -1});
            cur[i] = over;
            cur[i + 1] = uout;
        }
    }
}

}  // namespace

LinkDiagram diagram_from_braid(const BraidWord& b) {
    if (b.strands < 1) throw ParseError("braid: needs at least one strand");
    if (b.letters.empty() && b.strands == 1) {
        // crossing-free unknot
        return LinkDiagram(1, {});
    }
    if (b.letters.empty())
        throw ParseError("braid: empty word on several strands is a split unlink; not supported");
    Builder bld;
    std::vector<int> cur(b.strands);
    std::iota(cur.begin(), cur.end(), 0);
    bld.next_arc = b.strands;
    run_braid(bld, b, cur);
    for (int p = 0; p < b.strands; ++p) bld.unite(cur[p], p);
    return bld.finish();
}

LinkDiagram braid_closure_with_axis(const BraidWord& b) {
    const int n = b.strands;
    Builder bld;
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    bld.next_arc = n;
    run_braid(bld, b, cur);
    // Axis below the braid. Under-passing edge: the axis dips under every
    // strand; its arc entering the pass at strand position p is C[n-1-p] and
    // the arc leaving is C[(n-p) % n] (the axis traverses the strand row from
    // the right to the left). All crossings get sign +1; the over-passing
    // return edge is the arc C[0].
    std::vector<int> C(n);
    for (int k = 0; k < n; ++k) C[k] = bld.next_arc++;
    for (int p = 0; p < n; ++p)
        bld.crossings.push_back({cur[p], C[(n - 1 - p) % n], C[(n - p) % n], +1});
    for (int p = 0; p < n; ++p) {
        int uout = bld.next_arc++;
        bld.crossings.push_back({C[0], cur[p], uout, +1});
        cur[p] = uout;
    }
    for (int p = 0; p < n; ++p) bld.unite(cur[p], p);
    return bld.finish();
}

// ------------------------------------------------------------------ PD code

LinkDiagram parse_pd(const std::string& text) {
    struct PDX {
        int e[4];
        std::size_t pos;
    };
    std::vector<PDX> xs;
    std::vector<std::pair<int, std::size_t>> loops;
    std::size_t i = 0;
    const std::size_t n = text.size();
    std::function<void()> skip2 = [&] {
        for (;;) {
            while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                             text[i] == ';'))
                ++i;
            if (i < n && text[i] == '#') {
                while (i < n && text[i] != '\n') ++i;
                continue;
            }
            return;
        }
    };
    auto skip_spaces = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto parse_num = [&]() -> int {
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("pd: expected edge label", i);
        int v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return v;
    };
    for (;;) {
        skip2();
        if (i >= n) break;
        char c = text[i];
        if (c == 'X' || c == 'x') {
            std::size_t pos = i;
            ++i;
            skip_spaces();
            if (i >= n || text[i] != '[') throw ParseError("pd: expected '[' after X", i);
            ++i;
            PDX x{};
            x.pos = pos;
            for (int k = 0; k < 4; ++k) {
                skip_spaces();
                x.e[k] = parse_num();
                skip_spaces();
                if (k < 3) {
                    if (i >= n || text[i] != ',') throw ParseError("pd: expected ','", i);
                    ++i;
                }
            }
            skip_spaces();
            if (i >= n || text[i] != ']') throw ParseError("pd: expected ']'", i);
            ++i;
            xs.push_back(x);
        } else if (c == 'O' || c == 'o' || c == 'U' || c == 'u') {
            std::size_t pos = i;
            ++i;
            skip_spaces();
            if (i >= n || text[i] != '[') throw ParseError("pd: expected '[' after O", i);
            ++i;
            skip_spaces();
            int v = parse_num();
            skip_spaces();
            if (i >= n || text[i] != ']') throw ParseError("pd: expected ']'", i);
            ++i;
            loops.push_back({v, pos});
        } else {
            throw ParseError(std::string("pd: unexpected character '") + c + "'", i);
        }
    }
    if (xs.empty() && loops.empty()) throw ParseError("pd: no crossings", 0);

    // collect edges, check each appears exactly twice
    std::map<int, int> edge_uses;
    for (const auto& x : xs)
        for (int k = 0; k < 4; ++k) ++edge_uses[x.e[k]];
    for (const auto& [e, cnt] : edge_uses)
        if (cnt != 2)
            throw ParseError("pd: edge " + std::to_string(e) + " appears " + std::to_string(cnt) +
                             " times (expected 2)");

    // union-find edges into components: under-in joins under-out, over pair joins
    std::map<int, int> par;
    std::function<int(int)> find = [&](int a) {
        while (par.count(a) && par[a] != a) a = par[a] = par[par[a]];
        return a;
    };
    auto unite = [&](int a, int b) {
        par.emplace(a, a);
        par.emplace(b, b);
        int ra = find(a), rb = find(b);
        if (ra != rb) par[ra] = rb;
    };
    for (const auto& x : xs) {
        unite(x.e[0], x.e[2]);
        unite(x.e[1], x.e[3]);
    }
    // component edge ranges; successor of e is the numerically next edge in
    // its component, wrapping at the top
    std::map<int, std::vector<int>> comp_edges;
    for (const auto& [e, cnt] : edge_uses) {
        par.emplace(e, e);
        comp_edges[find(e)].push_back(e);
    }
    std::map<int, int> next_edge;
    for (auto& [root, edges] : comp_edges) {
        std::sort(edges.begin(), edges.end());
        for (std::size_t k = 0; k < edges.size(); ++k)
            next_edge[edges[k]] = edges[(k + 1) % edges.size()];
        // consecutive labels along a component
        for (std::size_t k = 0; k + 1 < edges.size(); ++k)
            if (edges[k + 1] != edges[k] + 1)
                throw ParseError("pd: component edges not consecutively numbered (" +
                                 std::to_string(edges[k]) + " then " +
                                 std::to_string(edges[k + 1]) + ")");
    }

    // orient crossings, assign signs
    struct XInfo {
        int under_in, under_out, over_in, over_out, sign;
    };
    std::vector<XInfo> info;
    for (const auto& x : xs) {
        XInfo xi{};
        xi.under_in = x.e[0];
        xi.under_out = x.e[2];
        if (next_edge[x.e[0]] != x.e[2])
            throw ParseError("pd: under-strand at X[" + std::to_string(x.e[0]) +
                                 ",...] is not oriented (expected successor " +
                                 std::to_string(next_edge[x.e[0]]) + ")",
                             x.pos);
        if (next_edge[x.e[1]] == x.e[3]) {
            xi.over_in = x.e[1];
            xi.over_out = x.e[3];
            xi.sign = +1;
        } else if (next_edge[x.e[3]] == x.e[1]) {
            xi.over_in = x.e[3];
            xi.over_out = x.e[1];
            xi.sign = -1;
        } else {
            throw ParseError("pd: over-strand orientation inconsistent at crossing", x.pos);
        }
        info.push_back(xi);
    }

    // Wirtinger arcs: edges merged across over-passes
    std::map<int, int> apar;
    std::function<int(int)> afind = [&](int a) {
        while (apar.count(a) && apar[a] != a) a = apar[a] = apar[apar[a]];
        return a;
    };
    auto aunite = [&](int a, int b) {
        apar.emplace(a, a);
        apar.emplace(b, b);
        int ra = afind(a), rb = afind(b);
        if (ra != rb) apar[ra] = rb;
    };
    for (const auto& [e, cnt] : edge_uses) apar.emplace(e, e);
    for (const auto& xi : info) aunite(xi.over_in, xi.over_out);
    std::map<int, int> arc_id;
    for (const auto& [e, cnt] : edge_uses) {
        int r = afind(e);
        if (!arc_id.count(r)) arc_id[r] = static_cast<int>(arc_id.size());
    }
    int next_id = static_cast<int>(arc_id.size());
    std::vector<Crossing> crossings;
    for (const auto& xi : info)
        crossings.push_back({arc_id[afind(xi.over_in)], arc_id[afind(xi.under_in)],
                             arc_id[afind(xi.under_out)], xi.sign});
    for (const auto& [lbl, pos] : loops) {
        if (edge_uses.count(lbl))
            throw ParseError("pd: free loop label also used at a crossing", pos);
        ++next_id;
    }
    return LinkDiagram(next_id, crossings);
}

// ----------------------------------------------------------------- analysis

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
    const int k = d.component_count();
    std::vector<std::vector<int>> lk(k, std::vector<int>(k, 0));
    for (const Crossing& x : d.crossings()) {
        int co = d.component_of(x.over);
        int cu = d.component_of(x.under_in);
        if (co != cu) {
            lk[co][cu] += x.sign;
            lk[cu][co] += x.sign;
        }
    }
    for (auto& row : lk)
        for (auto& v : row) v /= 2;
    return lk;
}

Word longitude_word(const LinkDiagram& d, int comp) {
    if (d.is_free_loop(comp)) return Word();
    const auto& cyc = d.components().at(comp);
    std::vector<Word::Letter> events;
    for (int arc : cyc) {
        const Crossing& x = d.crossings().at(d.ending_crossing(arc));
        events.push_back({x.over, x.sign});
    }
    int self_exp = 0;
    for (const auto& [g, s] : events)
        if (d.component_of(g) == comp) self_exp += s;
    std::vector<Word::Letter> letters;
    for (auto it = events.rbegin(); it != events.rend(); ++it) letters.push_back(*it);
    Word w(letters);
    if (self_exp != 0) w *= Word::generator(cyc.front(), -self_exp);
    return w;
}

Word wirtinger_relator(const LinkDiagram& d, const std::vector<int>& arc_gen, int crossing) {
    const Crossing& x = d.crossings().at(crossing);
    Word w = Word::generator(arc_gen[x.under_out], -1);
    w *= Word::generator(arc_gen[x.over], x.sign);
    w *= Word::generator(arc_gen[x.under_in], 1);
    w *= Word::generator(arc_gen[x.over], -x.sign);
    return w;
}

WirtingerPresentation wirtinger(const LinkDiagram& d, int surgery_component) {
    WirtingerPresentation p;
    p.diagram = &d;
    p.surgery_component = surgery_component;
    const int nc = static_cast<int>(d.crossings().size());
    if (surgery_component >= d.component_count())
        throw std::invalid_argument("wirtinger: no such component");

    // choose omitted relator
    int omit = -1;
    if (nc > 0) {
        if (surgery_component < 0) {
            omit = 0;
        } else {
            for (int c = 0; c < nc && omit < 0; ++c) {
                const Crossing& x = d.crossings()[c];
                if (d.component_of(x.under_in) != surgery_component &&
                    d.component_of(x.over) != surgery_component)
                    omit = c;
            }
            // fall back: any relator whose under-strand avoids the surgery
            // component (keeps the Lemma-1 redundant relator available)
            for (int c = 0; c < nc && omit < 0; ++c)
                if (d.component_of(d.crossings()[c].under_in) != surgery_component) omit = c;
            if (omit < 0)
                throw ParseError(
                    "wirtinger: every crossing has the surgery component as under-strand; "
                    "no omissible relator");
        }
    }
    p.omitted_crossing = omit;

    // generator order: x0 = first arc of the first non-surgery component,
    // x_n = first arc of the surgery component, others in arc order.
    int x0_arc = -1, xn_arc = -1;
    if (surgery_component >= 0) {
        for (int c = 0; c < d.component_count(); ++c)
            if (c != surgery_component) {
                x0_arc = d.components()[c].front();
                break;
            }
        if (x0_arc < 0) throw std::invalid_argument("wirtinger: surgery needs another component");
        xn_arc = d.components()[surgery_component].front();
    } else {
        x0_arc = d.components().front().front();
        for (int a = d.arc_count() - 1; a >= 0; --a)
            if (a != x0_arc) {
                xn_arc = a;
                break;
            }
        if (xn_arc < 0) xn_arc = x0_arc;  // single-generator diagram
    }
    std::vector<int> order;
    order.push_back(x0_arc);
    for (int a = 0; a < d.arc_count(); ++a)
        if (a != x0_arc && a != xn_arc) order.push_back(a);
    if (xn_arc != x0_arc) order.push_back(xn_arc);

    p.generator_count = static_cast<int>(order.size());
    p.gen_arc = order;
    p.arc_gen.assign(d.arc_count(), -1);
    for (int g = 0; g < p.generator_count; ++g) p.arc_gen[order[g]] = g;
    p.gen_component.resize(p.generator_count);
    for (int g = 0; g < p.generator_count; ++g) p.gen_component[g] = d.component_of(order[g]);
    p.distinguished_meridian = p.arc_gen[xn_arc];

    for (int c = 0; c < nc; ++c) {
        if (c == omit) continue;
        p.relators.push_back(wirtinger_relator(d, p.arc_gen, c));
        p.relator_crossing.push_back(c);
    }
    return p;
}

}  // namespace talex
