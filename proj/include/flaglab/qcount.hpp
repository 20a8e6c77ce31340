#pragma once

#include <gmpxx.h>

#include "flaglab/error.hpp"

namespace flaglab {

/// Exact arbitrary-precision integer; gauss values overflow 64 bits at
/// moderate parameters and all equality oracles require exactness.
using BigInt = mpz_class;

BigInt q_pow(long q, long e);

/// Gaussian coefficient [b a]_q = prod_{i=1..a} (q^{b-a+i}-1)/(q^i-1);
/// 0 when not 0 <= a <= b. Symmetric in a <-> b-a.
BigInt gauss(long b, long a, long q);

/// gauss(2n, n+1)·gauss(n+1, 1) + gauss(2n-1, n-1)·q^n — the common size of
/// all four extremal constructions.
BigInt example_family_size(long n, long q);

/// Hilton–Milner-type ceiling: 3·gauss(n,1)·gauss(2n-2,n-2) for n>=4, q>=4;
/// q^5+2q^4+3q^3+2q^2+q+1 for n=3. Throws UndefinedBranch outside those.
BigInt f_bound(long n, long q);

/// (q^{n+2}-1)/(q-1) - q
BigInt chromatic_formula(long n, long q);

/// q^{n(n+2)}, the number of flags opposite a fixed flag. Not a closed form
/// quoted anywhere — derived, and validated against brute-force degree
/// counts before being used as an oracle.
BigInt gamma_degree(long n, long q);

/// True iff v fits in int64 (convenience for report plumbing).
bool fits_int64(const BigInt& v);

}  // namespace flaglab
