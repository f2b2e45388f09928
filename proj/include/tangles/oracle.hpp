#pragma once

#include "tangles/biseries.hpp"
#include "tangles/flype_general.hpp"
#include "tangles/sparse_poly.hpp"

#include <functional>
#include <vector>

namespace tangles {

// cross: strands join opposite half-edges (the g_1 vertex).
// avoid_a / avoid_b: strands join (0,1)(2,3) / (1,2)(3,0) (the two orientations
// of the g_2 vertex relative to half-edge 0).
enum class VertexKind { cross, avoid_a, avoid_b };

// Half-edges 0..legs-1 sit on the outer (observable) vertex in cyclic order;
// internal vertex v owns legs + 4v .. legs + 4v + 3, also cyclically ordered.
struct RibbonDiagram {
    int legs = 0;
    std::vector<VertexKind> kinds;
    std::vector<int> pairing;

    int vertices() const { return static_cast<int>(kinds.size()); }
    int half_edges() const { return legs + 4 * vertices(); }
    int vertex_of(int h) const { return h < legs ? -1 : (h - legs) / 4; }
};

// Orbits of h -> sigma(pairing(h)), sigma the cyclic successor at a vertex.
int face_count(const RibbonDiagram& d);
// 2 - 2 genus = V - E + F, the outer vertex counting as a vertex when legs > 0.
int euler_characteristic(const RibbonDiagram& d);
int genus(const RibbonDiagram& d);

struct StrandData {
    int closed_loops = 0;
    std::vector<int> leg_partner;  // leg -> leg at the other end of its strand
};
StrandData strands(const RibbonDiagram& d);

struct ChannelClass {
    bool h_reducible = false;
    bool v_reducible = false;
    bool two_particle_reducible = false;
};
// Legs 0..3 run top-left, top-right, bottom-right, bottom-left: h cuts separate
// {0,3} from {1,2}, v cuts separate {0,1} from {2,3}.
ChannelClass channel_classify(const RibbonDiagram& d);

// No pair of propagators disconnects the diagram with its outer vertex kept.
bool is_skeleton(const RibbonDiagram& d);
// Connected once the outer vertex is removed.
bool is_connected_without_outer(const RibbonDiagram& d);

enum class Observable { G, gamma1, gamma2, F };

constexpr int kOracleDefaultCap = 5;
constexpr int kOracleHardCap = 6;

using ShapeVisitor = std::function<void(const RibbonDiagram&)>;

// Calls `visit` once per rooted planar shape (kinds left as cross) with at most
// max_vertices internal vertices. For legs == 0 the root is internal vertex 0
// and max_vertices counts it. Shapes are grouped by the first construction
// step; `branch` selects one group (-1 for all) and first_branch_count says
// how many there are.
void for_each_planar_shape(int legs, int max_vertices, const ShapeVisitor& visit, int branch = -1);
int first_branch_count(int legs, int max_vertices);

// Coefficient of g_1^j g_2^k of the bare connected planar expansion.
NPoly enumerate_coefficient(Observable obs, int j, int k, int cap = kOracleDefaultCap);

struct OracleBundle {
    int order = 0;
    // Bare series in (g_1, g_2).
    BiSeries<NPoly> bare_G, bare_gamma1, bare_gamma2, F;
    // Renormalized (skeleton) series in the renormalized couplings.
    BiSeries<NPoly> gamma1, gamma2, H1, H2, V1, V2, D1, D2;
};

// threads <= 0 picks the hardware concurrency.
OracleBundle oracle_bundle(int max_total_order, int threads = 1);

// t(g) of the one-coupling model (g_2 = 0), from t = G(1, g/t^2).
TruncSeries<NPoly> oracle_t_series(const OracleBundle& bundle);

// D'_i = D_i - g_i re-expanded as polynomials in (Gamma_1, Gamma_2), keeping
// the monomials of weighted degree a + 2b <= order (all of them are exact).
DPrimeModel dprime_model_from_oracle(const OracleBundle& bundle);

// Coefficients of Gamma_1^a Gamma_2^b with a + b <= order of the re-expanded
// D'_1, D'_2 (before the weighted cut).
std::pair<DPrimeModel::Poly2, DPrimeModel::Poly2> dprime_in_gammas(const OracleBundle& bundle);

} // namespace tangles
