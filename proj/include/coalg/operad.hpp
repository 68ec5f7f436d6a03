// Operad structure on trees and divided powers, the induced Hopf products,
// and the connections between composite coalgebras and their operad targets.
//
// Trees form an operad under grafting (argument i replaces leaf i); divided
// powers form one by adding degrees.  Each connection pairs a composite with
// a target algebra carrying the operad structure:
//
//   * side fr: the target is the outer base; the collapse map f applies an
//     index map to every inner letter and grafts.  The composite becomes a
//     right module via e * d = mu_l(d (x) Delta^(deg d) e), and
//     x . y := x * f(y) is an associative product with a right-sided unit and
//     a left-sided antipode.
//   * side fl: the target is the inner letter algebra; f applies an index map
//     to the base and grafts the letters onto it.  The composite becomes a
//     left module via d * e = mu_r(e (x) Delta^(deg e) d), and
//     x . y := f(x) * y has a left-sided unit and a right-sided antipode.
//
// The catalog of connections is closed: twelve in total, six per side.

#pragma once

#include "coalg/compose.hpp"

#include <string>
#include <vector>

namespace coalg {

/// Operadic composition: degree(base) + 1 arguments replace the slots of the
/// base.  Defined for trees (grafting) and divided powers (degree addition).
Elem operad_gamma(const Elem& base, const std::vector<Elem>& args);

/// Right-iterated coproduct into n + 1 tensor factors.
LinearComb<std::vector<Elem>> iterated_coproduct(const Elem& e, int n);
LinearComb<std::vector<Composed>> compose_iterated_coproduct(const Composed& e, int n);

/// The Hopf product induced by the operad: a . b = gamma(b; Delta^(deg b) a).
/// Coincides with `product` from coalg/basealg.hpp on trees and divided powers.
LinearComb<Elem> operad_product(const Elem& a, const Elem& b);

enum class Side { FL, FR };
enum class LambdaKind { Id, Tau, Kappa, KappaTau, Incl };

struct Connection {
    CompId comp;
    Alg target;
    Side side;
    LambdaKind lambda;
    std::string name;  // "psym.fr", "cksym.fl", "ssym-ysym.fr", ...
};

/// The full catalog (twelve connections).
const std::vector<Connection>& connections();
/// Lookup by name; accepts the canonical short names and the long
/// "<inner>-<outer>.<side>" forms.  Null when unknown.
const Connection* find_connection(const std::string& name);

Elem apply_lambda(LambdaKind k, const Elem& e);

/// The collapse map onto the target algebra (an index map on basis elements).
Elem conn_f(const Connection& c, const Composed& e);

/// Right module action e * d (side fr).
LinearComb<Composed> star_right(const Connection& c, const Composed& e, const Elem& d);
/// Left module action d * e (side fl).
LinearComb<Composed> star_left(const Connection& c, const Elem& d, const Composed& e);

/// The one-sided product on the composite.
LinearComb<Composed> conn_product(const Connection& c, const Composed& x, const Composed& y);
LinearComb<Composed> conn_product(const Connection& c, const LinearComb<Composed>& x,
                                  const LinearComb<Composed>& y);

/// Comodule structure over the target: (id (x) f) Delta for fr,
/// (f (x) id) Delta for fl.
LinearComb<std::pair<Composed, Elem>> coaction_right(const Connection& c, const Composed& e);
LinearComb<std::pair<Elem, Composed>> coaction_left(const Connection& c, const Composed& e);

/// One-sided antipode, memoized: solves m(S (x) id) Delta = unit counit for fr
/// and m(id (x) S) Delta = unit counit for fl.
LinearComb<Composed> conn_antipode(const Connection& c, const Composed& e);
LinearComb<Composed> conn_antipode(const Connection& c, const LinearComb<Composed>& x);

}  // namespace coalg
