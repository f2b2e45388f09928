#include "tangles/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

namespace tangles {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

int sigma(const RibbonDiagram& d, int h) {
    if (h < d.legs) return (h + 1) % d.legs;
    const int base = d.legs + 4 * d.vertex_of(h);
    return base + (h - base + 1) % 4;
}

struct Edge {
    int a, b;  // graph nodes
};

// Graph nodes: internal vertices 0..V-1, then either one outer node or one
// node per leg.
std::vector<Edge> graph_edges(const RibbonDiagram& d, bool split_legs) {
    const int V = d.vertices();
    auto node = [&](int h) { return h < d.legs ? V + (split_legs ? h : 0) : d.vertex_of(h); };
    std::vector<Edge> edges;
    for (int h = 0; h < d.half_edges(); ++h) {
        if (d.pairing[h] > h) edges.push_back({node(h), node(d.pairing[h])});
    }
    return edges;
}

UnionFind components_without(int nodes, const std::vector<Edge>& edges, size_t skip1, size_t skip2) {
    UnionFind uf(nodes);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i != skip1 && i != skip2) uf.join(edges[i].a, edges[i].b);
    }
    return uf;
}

bool all_joined(UnionFind& uf, int nodes) {
    const int r = uf.find(0);
    for (int i = 1; i < nodes; ++i) {
        if (uf.find(i) != r) return false;
    }
    return true;
}

// Depth-first construction of rooted planar maps. Open half-edges are kept
// as cyclic sequences, one per face still under construction; the smallest
// open half-edge is either paired with another open half-edge of its face
// (splitting the face) or attached to half-edge 0 of a new vertex.
class ShapeBuilder {
public:
    ShapeBuilder(int legs, int max_vertices, const ShapeVisitor& visit)
        : legs_(legs), maxv_(max_vertices), visit_(visit) {
        pairing_.assign(legs + 4 * max_vertices, -1);
        if (legs > 0) {
            std::vector<int> outer(legs);
            std::iota(outer.begin(), outer.end(), 0);
            regions_.push_back(outer);
        } else {
            nv_ = 1;
            regions_.push_back({0, 1, 2, 3});
        }
    }

    // Runs the search, restricted to one first-step choice when branch >= 0.
    // Returns the number of first-step choices.
    int run(int branch) { return step(branch, true); }

private:
    int step(int branch, bool top) {
        int r = -1;
        size_t pos = 0;
        int best = -1;
        for (size_t i = 0; i < regions_.size(); ++i) {
            for (size_t p = 0; p < regions_[i].size(); ++p) {
                if (best < 0 || regions_[i][p] < best) {
                    best = regions_[i][p];
                    r = static_cast<int>(i);
                    pos = p;
                }
            }
        }
        if (r < 0) {
            emit();
            return 0;
        }
        const std::vector<int> region = regions_[r];
        const int h = region[pos];
        std::vector<int> rest;
        for (size_t q = 1; q < region.size(); ++q) rest.push_back(region[(pos + q) % region.size()]);
        const int m = static_cast<int>(rest.size());

        int choice = 0;
        auto take = [&]() { return !top || branch < 0 || branch == choice; };
        for (int i = 0; i < m; ++i, ++choice) {
            // Both remaining arcs must have even length to close up.
            if ((i % 2) != 0) continue;
            if (!take()) continue;
            const int partner = rest[i];
            std::vector<int> left(rest.begin(), rest.begin() + i);
            std::vector<int> right(rest.begin() + i + 1, rest.end());
            auto saved = regions_;
            regions_.erase(regions_.begin() + r);
            if (!left.empty()) regions_.push_back(left);
            if (!right.empty()) regions_.push_back(right);
            pairing_[h] = partner;
            pairing_[partner] = h;
            step(branch, false);
            pairing_[h] = pairing_[partner] = -1;
            regions_ = std::move(saved);
        }
        if (nv_ < maxv_) {
            if (take()) {
                const int base = legs_ + 4 * nv_;
                ++nv_;
                auto saved = regions_;
                std::vector<int> grown{base + 1, base + 2, base + 3};
                grown.insert(grown.end(), rest.begin(), rest.end());
                regions_[r] = std::move(grown);
                pairing_[h] = base;
                pairing_[base] = h;
                step(branch, false);
                pairing_[h] = pairing_[base] = -1;
                regions_ = std::move(saved);
                --nv_;
            }
            ++choice;
        }
        return choice;
    }

    void emit() {
        RibbonDiagram d;
        d.legs = legs_;
        d.kinds.assign(nv_, VertexKind::cross);
        d.pairing.assign(pairing_.begin(), pairing_.begin() + legs_ + 4 * nv_);
        visit_(d);
    }

    int legs_;
    int maxv_;
    int nv_ = 0;
    const ShapeVisitor& visit_;
    std::vector<int> pairing_;
    std::vector<std::vector<int>> regions_;
};

void check_cap(int total) {
    if (total > kOracleHardCap) {
        throw OrderCapExceeded("oracle order " + std::to_string(total) + " exceeds the hard cap " +
                               std::to_string(kOracleHardCap));
    }
}

// counts[(j, k, loops)] for one selector.
using Tally = std::map<std::tuple<int, int, int>, long long>;

NPoly tally_coeff(const Tally& t, int j, int k) {
    NPoly p;
    for (const auto& [key, c] : t) {
        if (std::get<0>(key) == j && std::get<1>(key) == k) p.add_term(std::get<2>(key), Rational(static_cast<long>(c)));
    }
    return p;
}

BiSeries<NPoly> tally_series(const Tally& t, int order, const Rational& scale_by_total = Rational(0)) {
    BiSeries<NPoly> s(order);
    for (const auto& [key, c] : t) {
        const auto [j, k, loops] = key;
        if (j + k > order) continue;
        Rational w(static_cast<long>(c));
        if (scale_by_total != 0 && j + k > 0) w *= scale_by_total / Rational(j + k);
        s.add(j, k, NPoly::monomial(loops, w));
    }
    return s;
}

// Runs fn(kinds-assigned diagram, crosses, avoids) for all 3^V kind choices.
template <class Fn>
void for_each_kinding(RibbonDiagram d, Fn&& fn) {
    const int V = d.vertices();
    std::vector<int> digit(V, 0);
    static constexpr VertexKind kinds[3] = {VertexKind::cross, VertexKind::avoid_a, VertexKind::avoid_b};
    while (true) {
        int j = 0;
        for (int v = 0; v < V; ++v) {
            d.kinds[v] = kinds[digit[v]];
            if (digit[v] == 0) ++j;
        }
        fn(d, j, V - j);
        int v = 0;
        while (v < V && ++digit[v] == 3) digit[v++] = 0;
        if (v == V) break;
    }
}

enum Slot { kBare1, kBare2, kBare2Rot, kSkel1, kSkel2, kH1, kH2, kV1, kV2, kD1, kD2, kSlots };

struct FourPointTally {
    std::array<Tally, kSlots> slot;
    void merge(const FourPointTally& o) {
        for (int s = 0; s < kSlots; ++s) {
            for (const auto& [key, c] : o.slot[s]) slot[s][key] += c;
        }
    }
};

void tally_four_point(const RibbonDiagram& shape, FourPointTally& out) {
    if (!is_connected_without_outer(shape)) return;
    if (euler_characteristic(shape) != 2) throw DomainError("oracle produced a non-planar diagram");
    const bool skel = is_skeleton(shape);
    ChannelClass cls;
    if (skel) cls = channel_classify(shape);
    for_each_kinding(shape, [&](const RibbonDiagram& d, int j, int k) {
        const auto st = strands(d);
        const auto key = std::make_tuple(j, k, st.closed_loops);
        const int p = st.leg_partner[0];
        if (p == 1) {
            out.slot[kBare2][key] += 1;
        } else if (p == 3) {
            out.slot[kBare2Rot][key] += 1;
        } else {
            out.slot[kBare1][key] += 1;
        }
        if (!skel || p == 3) return;
        const bool type1 = p == 2;
        out.slot[type1 ? kSkel1 : kSkel2][key] += 1;
        if (!cls.h_reducible) out.slot[type1 ? kH1 : kH2][key] += 1;
        if (!cls.v_reducible) out.slot[type1 ? kV1 : kV2][key] += 1;
        if (!cls.h_reducible && !cls.v_reducible) out.slot[type1 ? kD1 : kD2][key] += 1;
    });
}

void tally_plain(const RibbonDiagram& shape, Tally& out) {
    if (shape.legs > 0 && !is_connected_without_outer(shape)) return;
    if (euler_characteristic(shape) != 2) throw DomainError("oracle produced a non-planar diagram");
    for_each_kinding(shape, [&](const RibbonDiagram& d, int j, int k) {
        out[std::make_tuple(j, k, strands(d).closed_loops)] += 1;
    });
}

// Per-branch parallel reduction with a fixed merge order.
template <class T, class Work>
std::vector<T> fan_out(int legs, int max_vertices, int threads, Work&& work) {
    const int branches = first_branch_count(legs, max_vertices);
    std::vector<T> parts(branches);
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::max(1, std::min(threads, branches));
    auto worker = [&](int t) {
        for (int b = t; b < branches; b += threads) {
            for_each_planar_shape(legs, max_vertices, [&](const RibbonDiagram& d) { work(d, parts[b]); }, b);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    return parts;
}

} // namespace

int face_count(const RibbonDiagram& d) {
    const int H = d.half_edges();
    std::vector<char> seen(H, 0);
    int faces = 0;
    for (int h = 0; h < H; ++h) {
        if (seen[h]) continue;
        ++faces;
        for (int x = h; !seen[x]; x = sigma(d, d.pairing[x])) seen[x] = 1;
    }
    return faces;
}

int euler_characteristic(const RibbonDiagram& d) {
    const int V = d.vertices() + (d.legs > 0 ? 1 : 0);
    const int E = d.half_edges() / 2;
    return V - E + face_count(d);
}

int genus(const RibbonDiagram& d) { return (2 - euler_characteristic(d)) / 2; }

StrandData strands(const RibbonDiagram& d) {
    const int H = d.half_edges();
    UnionFind uf(H);
    for (int h = 0; h < H; ++h) uf.join(h, d.pairing[h]);
    for (int v = 0; v < d.vertices(); ++v) {
        const int b = d.legs + 4 * v;
        switch (d.kinds[v]) {
        case VertexKind::cross:
            uf.join(b, b + 2);
            uf.join(b + 1, b + 3);
            break;
        case VertexKind::avoid_a:
            uf.join(b, b + 1);
            uf.join(b + 2, b + 3);
            break;
        case VertexKind::avoid_b:
            uf.join(b + 1, b + 2);
            uf.join(b + 3, b);
            break;
        }
    }
    StrandData out;
    out.leg_partner.assign(d.legs, -1);
    std::vector<char> root(H, 0);
    int comps = 0;
    for (int h = 0; h < H; ++h) {
        const int r = uf.find(h);
        if (!root[r]) {
            root[r] = 1;
            ++comps;
        }
    }
    for (int a = 0; a < d.legs; ++a) {
        for (int b = 0; b < d.legs; ++b) {
            if (a != b && uf.find(a) == uf.find(b)) out.leg_partner[a] = b;
        }
    }
    out.closed_loops = comps - d.legs / 2;
    return out;
}

bool is_connected_without_outer(const RibbonDiagram& d) {
    const int nodes = d.vertices() + d.legs;
    const auto edges = graph_edges(d, true);
    auto uf = components_without(nodes, edges, edges.size(), edges.size());
    return all_joined(uf, nodes);
}

bool is_skeleton(const RibbonDiagram& d) {
    const int nodes = d.vertices() + (d.legs > 0 ? 1 : 0);
    const auto edges = graph_edges(d, false);
    for (size_t e = 0; e < edges.size(); ++e) {
        for (size_t f = e + 1; f < edges.size(); ++f) {
            auto uf = components_without(nodes, edges, e, f);
            if (!all_joined(uf, nodes)) return false;
        }
    }
    return true;
}

ChannelClass channel_classify(const RibbonDiagram& d) {
    if (d.legs != 4) throw WrongLegCount("channel classification needs a 4-leg diagram");
    const int V = d.vertices();
    const int nodes = V + 4;
    const auto edges = graph_edges(d, true);
    ChannelClass out;
    for (size_t e = 0; e < edges.size(); ++e) {
        for (size_t f = e + 1; f < edges.size(); ++f) {
            auto uf = components_without(nodes, edges, e, f);
            auto same = [&](int a, int b) { return uf.find(V + a) == uf.find(V + b); };
            if (same(0, 3) && same(1, 2) && !same(0, 1)) out.h_reducible = true;
            if (same(0, 1) && same(2, 3) && !same(0, 3)) out.v_reducible = true;
        }
    }
    out.two_particle_reducible = out.h_reducible || out.v_reducible || !is_skeleton(d);
    return out;
}

void for_each_planar_shape(int legs, int max_vertices, const ShapeVisitor& visit, int branch) {
    if (legs < 0 || legs % 2 != 0) throw WrongLegCount("leg count must be even and nonnegative");
    if (legs == 0 && max_vertices < 1) return;
    ShapeBuilder(legs, max_vertices, visit).run(branch);
}

int first_branch_count(int legs, int max_vertices) {
    if (legs == 0 && max_vertices < 1) return 0;
    // Counting pass that visits nothing: restrict to a branch that does not exist.
    const ShapeVisitor none = [](const RibbonDiagram&) {};
    return ShapeBuilder(legs, max_vertices, none).run(1 << 30);
}

NPoly enumerate_coefficient(Observable obs, int j, int k, int cap) {
    if (j < 0 || k < 0) throw DomainError("negative coupling exponent");
    check_cap(cap);
    if (j + k > cap) {
        throw OrderCapExceeded("total order " + std::to_string(j + k) + " exceeds the configured cap " +
                               std::to_string(cap));
    }
    const int V = j + k;
    auto only = [V](const RibbonDiagram& d) { return d.vertices() == V; };
    switch (obs) {
    case Observable::G: {
        Tally t;
        for_each_planar_shape(2, V, [&](const RibbonDiagram& d) {
            if (only(d)) tally_plain(d, t);
        });
        return tally_coeff(t, j, k);
    }
    case Observable::F: {
        if (V == 0) return NPoly();
        Tally t;
        for_each_planar_shape(0, V, [&](const RibbonDiagram& d) {
            if (only(d)) tally_plain(d, t);
        });
        return tally_coeff(t, j, k) * NPoly(make_rational(1, 4 * V));
    }
    case Observable::gamma1:
    case Observable::gamma2: {
        FourPointTally t;
        for_each_planar_shape(4, V, [&](const RibbonDiagram& d) {
            if (only(d)) tally_four_point(d, t);
        });
        return tally_coeff(t.slot[obs == Observable::gamma1 ? kBare1 : kBare2], j, k);
    }
    }
    return NPoly();
}

OracleBundle oracle_bundle(int max_total_order, int threads) {
    check_cap(max_total_order);
    const int P = max_total_order;
    OracleBundle b;
    b.order = P;

    auto two = fan_out<Tally>(2, P, threads, [](const RibbonDiagram& d, Tally& t) { tally_plain(d, t); });
    Tally g_tally;
    for (const auto& part : two) {
        for (const auto& [key, c] : part) g_tally[key] += c;
    }
    b.bare_G = tally_series(g_tally, P);

    auto vac = fan_out<Tally>(0, P, threads, [](const RibbonDiagram& d, Tally& t) { tally_plain(d, t); });
    Tally f_tally;
    for (const auto& part : vac) {
        for (const auto& [key, c] : part) f_tally[key] += c;
    }
    b.F = tally_series(f_tally, P, make_rational(1, 4));

    auto four = fan_out<FourPointTally>(4, P, threads,
                                        [](const RibbonDiagram& d, FourPointTally& t) { tally_four_point(d, t); });
    FourPointTally all;
    for (const auto& part : four) all.merge(part);
    b.bare_gamma1 = tally_series(all.slot[kBare1], P);
    b.bare_gamma2 = tally_series(all.slot[kBare2], P);
    b.gamma1 = tally_series(all.slot[kSkel1], P);
    b.gamma2 = tally_series(all.slot[kSkel2], P);
    b.H1 = tally_series(all.slot[kH1], P);
    b.H2 = tally_series(all.slot[kH2], P);
    b.V1 = tally_series(all.slot[kV1], P);
    b.V2 = tally_series(all.slot[kV2], P);
    b.D1 = tally_series(all.slot[kD1], P);
    b.D2 = tally_series(all.slot[kD2], P);
    return b;
}

TruncSeries<NPoly> oracle_t_series(const OracleBundle& b) {
    const auto ren = renormalize(b.bare_G, {});
    std::vector<NPoly> c(b.order + 1);
    for (int j = 0; j <= b.order; ++j) c[j] = ren.t.coeff(j, 0);
    return TruncSeries<NPoly>(Var::g, b.order, std::move(c));
}

std::pair<DPrimeModel::Poly2, DPrimeModel::Poly2> dprime_in_gammas(const OracleBundle& b) {
    const int P = b.order;
    const auto g1 = BiSeries<NPoly>::monomial(P, 1, 0);
    const auto g2 = BiSeries<NPoly>::monomial(P, 0, 1);
    const auto [inv1, inv2] = bi_invert(b.gamma1, b.gamma2);
    const auto d1 = bi_compose(b.D1 - g1, inv1, inv2);
    const auto d2 = bi_compose(b.D2 - g2, inv1, inv2);
    DPrimeModel::Poly2 p1, p2;
    for (const auto& [key, c] : d1.terms()) p1[key] = c;
    for (const auto& [key, c] : d2.terms()) p2[key] = c;
    return {p1, p2};
}

DPrimeModel dprime_model_from_oracle(const OracleBundle& b) {
    const auto [p1, p2] = dprime_in_gammas(b);
    DPrimeModel m;
    m.validity = b.order;
    for (const auto& [key, c] : p1) {
        if (key.first + 2 * key.second <= b.order) m.d1[key] = c;
    }
    for (const auto& [key, c] : p2) {
        if (key.first + 2 * key.second <= b.order) m.d2[key] = c;
    }
    return m;
}

} // namespace tangles
