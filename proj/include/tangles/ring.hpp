#pragma once

#include "tangles/sparse_poly.hpp"
#include "tangles/trig_elem.hpp"

#include <optional>
#include <string>

namespace tangles {

// Uniform ring interface used by the series templates.

inline bool is_zero(const Rational& r) { return r == 0; }
template <class Var>
bool is_zero(const SparsePoly<Var>& p) { return p.is_zero(); }
template <class Var>
bool is_zero(const TrigElem<Var>& t) { return t.is_zero(); }

inline std::optional<Rational> try_inverse(const Rational& r) {
    if (r == 0) return std::nullopt;
    return Rational(1 / r);
}
template <class Var>
std::optional<SparsePoly<Var>> try_inverse(const SparsePoly<Var>& p) { return p.inverse(); }
template <class Var>
std::optional<TrigElem<Var>> try_inverse(const TrigElem<Var>& t) { return t.inverse(); }

inline std::string ring_str(const Rational& r) { return r.get_str(); }
template <class Var>
std::string ring_str(const SparsePoly<Var>& p) { return p.str(); }
template <class Var>
std::string ring_str(const TrigElem<Var>& t) { return t.str(); }

// a += b * c without temporaries where the ring allows it.
inline void fma_into(Rational& a, const Rational& b, const Rational& c) {
    if (b == 0 || c == 0) return;
    a += b * c;
}
template <class R>
void fma_into(R& a, const R& b, const R& c) {
    if (is_zero(b) || is_zero(c)) return;
    a += b * c;
}

} // namespace tangles
