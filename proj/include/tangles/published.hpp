#pragma once

#include "tangles/sparse_poly.hpp"
#include "tangles/trig_elem.hpp"

#include <string>
#include <vector>

namespace tangles {

// Printed reference values, transcribed as printed (including entries known
// to be inconsistent). Blank cells are zero.

// Flype classes of prime alternating tangles by crossing number p = 1..8,
// as polynomials in n; index 0 unused.
std::vector<NPoly> published_census_type1();
std::vector<NPoly> published_census_type2();

struct PublishedRow {
    std::string name;  // OrientedCensus row key
    int first;         // exponent of g of values[0]
    std::vector<Rational> values;
};
// Oriented census rows q2, dtheta (g^2..g^12), b, c, g1, g2, gamma_b, gamma_c.
std::vector<PublishedRow> published_oriented_rows();

struct BareAnchor {
    std::string series;  // b0, G, gamma_b, gamma_c, dprime_b, dprime_c
    int power;           // of tau
    ThetaElem value;
};
// Every tau coefficient of the printed low-order bare expansions up to and
// including the last printed power.
std::vector<BareAnchor> published_bare_anchors();

} // namespace tangles
