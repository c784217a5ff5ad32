#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binsum/exact.hpp"
#include "binsum/sequences.hpp"

namespace binsum {

/// Every numbered identity handled by the verifier, plus the two modular
/// congruences.
enum class IdentityId {
    UPower,      // sum C(2n,n+k) u_k^{2r}, both parity branches
    VPower,      // sum C(2n,n+k) v_k^{2r}
    DiffSum,     // sum C(2n,n+k)(v_{km} - v_{kt})
    V2k,         // sum C(2n,n+k) v_{2k}
    Classic1a,   // sum C(n,k) F_k            = F_{2n}
    Classic1b,   // sum C(n,k) 2^k F_k        = F_{3n}
    Classic1c,   // sum C(2n,k) F_{2k}        = 5^n F_{2n}
    Classic2a,   // sum (-1)^k C(m,k) F_{n+m-k} = F_{n-m}
    Classic2b,   // sum C(2n,k) F_k^2         = 5^{n-1} L_{2n}
    Classic3a,   // sum C(2n,k) L_{2k}        = 5^n L_{2n}
    Classic3b,   // sum (-1)^k C(2n,k) 2^{k-1} L_k = 5^n
    Hoggatt,     // sum C(n,k) F_{4mk}        = L_{2m}^n F_{2mn}
    Generalized, // F_v^n F_{un+r} as a weighted sum over F_{vk+r}
    New1,        // sum C(2n,n+k) F_k^2 = 5^{n-1}
    New2,        // sum C(2n,n+k) L_k^2 = 5^n + 2 C(2n,n)
    New3,        // sum C(2n,n+k) P_k^2 = 8^{n-1}
    New12,       // sum C(2n,n+k) F_k^4
    New22,       // sum C(2n,n+k) L_k^4
    New32,       // sum C(2n,n+k) P_k^4 (known erratum; see rhs_u_power)
    F8,          // sum C(2n,n+k) F_k^8
    Cong25,      // 3^{2n} - 4(-1)^n + 3*2^{2n}       == 0 (mod 25)
    Cong625,     // the five-term F^8 numerator        == 0 (mod 625)
};

/// Which side of a known erratum to evaluate. For identities without a
/// recorded discrepancy the two forms coincide.
enum class Form { Corrected, Printed };

std::string identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name);

struct AxisSpec {
    std::string name;
    Integer lo;
    Integer hi;
    bool even_only = false;
};

struct IdentityInfo {
    IdentityId id;
    std::string name;
    std::vector<AxisSpec> axes;       // iteration order: leftmost is outermost
    bool variable_p = false;          // p sweepable (otherwise fixed by the identity)
    std::vector<QuadElem> default_p;  // sweep values, or the single fixed value
    bool two_forms = false;           // printed form differs from corrected form
    Form default_form = Form::Corrected;
    bool congruence = false;
};

const IdentityInfo& identity_info(IdentityId id);
const std::vector<IdentityInfo>& all_identities();

// --- power-sum evaluators ---------------------------------------------------

/// Oracle: sum_{k=0}^{n} C(2n,n+k) u_k^{2r} by direct summation.
QuadElem lhs_u_power(const Integer& n, const Integer& r, const SeqParams& params);

/// Closed form for the u-power sum.
///   r even: (C(2r,r) 2^{2n-1} + sum_i (-1)^{i(n+1)} C(2r,i) v_{r-i}^{2n}) / (p^2+4)^r
///   r odd:  (p^2+4)^{n-r} sum_i (-1)^{i(n+1)} C(2r,i) u_{r-i}^{2n}
/// The corrected form uses the constant 2^{2n-1} (the printed 2^{2n-2}
/// fails the oracle at n=1, r=2, p=1) and subtracts C(2r,r)/(2(p^2+4)^r)
/// at n=0 for odd r, where the printed branch misses the k=0 boundary.
QuadElem rhs_u_power(const Integer& n, const Integer& r, const SeqParams& params,
                     Form form = Form::Corrected);

/// Oracle: sum_{k=0}^{n} C(2n,n+k) v_k^{2r}.
QuadElem lhs_v_power(const Integer& n, const Integer& r, const SeqParams& params);

/// Closed form for the v-power sum.
///   r even: C(2r,r) 2^{2n-1} + 2^{2r-1} C(2n,n) + sum_i (-1)^{in} C(2r,i) v_{r-i}^{2n}
///   r odd:  2^{2r-1} C(2n,n) + (p^2+4)^n sum_i (-1)^{in} C(2r,i) u_{r-i}^{2n}
/// The corrected form adds C(2r,r)/2 at n=0 for odd r (same boundary as above).
QuadElem rhs_v_power(const Integer& n, const Integer& r, const SeqParams& params,
                     Form form = Form::Corrected);

// --- difference sums and the v_{2k} special case ----------------------------

/// Oracle: sum_{k=0}^{n} C(2n,n+k)(v_{km} - v_{kt}); m, t even.
QuadElem diff_sum_lhs(const Integer& n, const Integer& m, const Integer& t,
                      const SeqParams& params);

/// Corrected closed form g(m) - g(t) with
///   g(s) = (p^2+4)^n u_{s/2}^{2n}  when s/2 is odd,
///   g(s) = v_{s/2}^{2n}            when s/2 is even.
/// The printed form (p^2+4)^n (u_{m/2}^{2n} - u_{t/2}^{2n}) agrees exactly
/// when m and t are both 2 (mod 4).
QuadElem diff_sum_rhs(const Integer& n, const Integer& m, const Integer& t,
                      const SeqParams& params, Form form = Form::Corrected);

/// Oracle: sum_{k=0}^{n} C(2n,n+k) v_{2k}.
QuadElem v2k_oracle(const Integer& n, const SeqParams& params);

/// Corrected closed form (p^2+4)^n + C(2n,n); the printed form drops
/// the central binomial term and fails already at n=1, p=1 (5 vs oracle 7).
QuadElem v2k_closed(const Integer& n, const SeqParams& params, Form form = Form::Corrected);

// --- classical suite --------------------------------------------------------

/// Evaluates both sides of any identity at one parameter tuple, in the axis
/// order of identity_info(id). `p` feeds the variable-p identities and is
/// ignored elsewhere; congruence identities report (residue, 0). Throws
/// std::invalid_argument on arity mismatch and std::domain_error when the
/// tuple is outside the identity's domain.
std::pair<QuadElem, QuadElem> evaluate_identity(IdentityId id, std::span<const Integer> args,
                                                Form form = Form::Corrected,
                                                const QuadElem* p = nullptr);

/// evaluate_identity restricted to the classical/new suite (the identities
/// whose parameters are a plain integer tuple: Classic*, Hoggatt,
/// Generalized, New*, F8). Returns (summation side, closed side);
/// Generalized needs uv(u-v) != 0, Classic2a needs n >= m.
std::pair<QuadElem, QuadElem> classical_eval(IdentityId id, std::span<const Integer> args,
                                             Form form = Form::Corrected);

/// Residue of the congruence expression at index n, in [0, modulus).
Integer congruence_value(IdentityId id, const Integer& n);

// --- grids, verification, reporting ----------------------------------------

struct GridAxes {
    std::vector<std::pair<std::string, std::vector<Integer>>> int_axes;
    std::vector<QuadElem> p_values;  // empty for identities with fixed p
};

/// The acceptance-sized default sweep for an identity.
GridAxes default_grid(IdentityId id);

struct Counterexample {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    bool two_forms = false;
    Form form = Form::Corrected;
    std::vector<std::pair<std::string, std::string>> grid;
    std::int64_t checked = 0;
    std::int64_t passed = 0;
    std::vector<Counterexample> counterexamples;
    bool corrected_form_passes = true;  // meaningful when two_forms
    bool printed_form_passes = true;
    std::int64_t elapsed_ms = 0;

    bool ok() const { return counterexamples.empty(); }
};

struct TableRow {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

/// Exact comparison at every grid point, row-major in axis order with p
/// innermost, so counterexample order is deterministic. When the identity
/// has two forms, both are evaluated and summarized; pass/fail counts
/// follow `form` (or the identity's default form).
IdentityReport verify_grid(IdentityId id, const GridAxes& grid,
                           std::optional<Form> form = std::nullopt);

/// Same walk as verify_grid, but returns one row per grid point.
std::vector<TableRow> tabulate(IdentityId id, const GridAxes& grid,
                               std::optional<Form> form = std::nullopt);

/// Sweeps a congruence identity over 1..n_max with modular exponentiation.
IdentityReport congruence_check(IdentityId id, const Integer& n_max);

}  // namespace binsum
