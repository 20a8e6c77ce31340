#include "flaglab/qcount.hpp"

namespace flaglab {

BigInt q_pow(long q, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)q, (unsigned long)e);
  return r;
}

BigInt gauss(long b, long a, long q) {
  if (a < 0 || a > b) return 0;
  BigInt num = 1, den = 1;
  for (long i = 1; i <= a; ++i) {
    num *= q_pow(q, b - a + i) - 1;
    den *= q_pow(q, i) - 1;
  }
  BigInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

BigInt example_family_size(long n, long q) {
  return gauss(2 * n, n + 1, q) * gauss(n + 1, 1, q) + gauss(2 * n - 1, n - 1, q) * q_pow(q, n);
}

BigInt f_bound(long n, long q) {
  if (n == 3) {
    BigInt x = q;
    return x * x * x * x * x + 2 * x * x * x * x + 3 * x * x * x + 2 * x * x + x + 1;
  }
  if (n >= 4 && q >= 4) return 3 * gauss(n, 1, q) * gauss(2 * n - 2, n - 2, q);
  fail(Errc::UndefinedBranch,
       "f(n,q) is defined only for n=3, or n>=4 with q>=4; got n=" + std::to_string(n) +
           " q=" + std::to_string(q));
}

BigInt chromatic_formula(long n, long q) {
  BigInt num = q_pow(q, n + 2) - 1;
  BigInt r;
  mpz_divexact_ui(r.get_mpz_t(), num.get_mpz_t(), (unsigned long)(q - 1));
  return r - q;
}

BigInt gamma_degree(long n, long q) { return q_pow(q, n * (n + 2)); }

bool fits_int64(const BigInt& v) { return v.fits_slong_p(); }

}  // namespace flaglab
