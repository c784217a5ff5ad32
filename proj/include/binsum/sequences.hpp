#pragma once

#include "binsum/exact.hpp"

namespace binsum {

/// Recurrence parameter p for the generalized Fibonacci/Lucas pair
/// u_{n+1} = p*u_n + u_{n-1}, v_{n+1} = p*v_n + v_{n-1}, with the
/// discriminant p^2 + 4 cached alongside.
struct SeqParams {
    QuadElem p;
    QuadElem disc;

    explicit SeqParams(QuadElem param) : p(std::move(param)), disc(p * p + QuadElem(4)) {}
};

struct SeqPair {
    QuadElem u;
    QuadElem v;
    Integer index;
};

/// u_n with u_0 = 0, u_1 = 1; negative n via u_{-n} = (-1)^{n+1} u_n.
QuadElem seq_u(const Integer& n, const SeqParams& params);

/// v_n with v_0 = 2, v_1 = p; negative n via v_{-n} = (-1)^n v_n.
QuadElem seq_v(const Integer& n, const SeqParams& params);

/// (u_n, v_n) in O(log n) ring operations via
///   u_{2k} = u_k v_k,                 v_{2k} = v_k^2 - 2(-1)^k,
///   u_{2k+1} = (p u_{2k} + v_{2k})/2, v_{2k+1} = (p v_{2k} + (p^2+4) u_{2k})/2.
/// Equals the iterative values exactly; the halvings are exact in Q.
SeqPair seq_pair_fastdouble(const Integer& n, const SeqParams& params);

/// Checks u_n = (alpha^n - beta^n)/(alpha - beta) and v_n = alpha^n + beta^n
/// with alpha, beta = (p +- sqrt(p^2+4))/2. Requires a pure-rational p, so
/// that alpha and beta stay inside a quadratic ring.
bool binet_check(const Integer& n, const SeqParams& params);

/// Checks v_{n+m} - (-1)^m v_{n-m} = (p^2+4) u_n u_m for 0 <= m <= n.
bool identity4_check(const Integer& n, const Integer& m, const SeqParams& params);

}  // namespace binsum
