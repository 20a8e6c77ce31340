#include "flaglab/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace flaglab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAPrimePower: return "NotAPrimePower";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateIndex: return "DuplicateIndex";
    case Errc::SpecIncidenceViolation: return "SpecIncidenceViolation";
    case Errc::NotACoclique: return "NotACoclique";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NonMaximalWeightSpectrum: return "NonMaximalWeightSpectrum";
    case Errc::NotIntersecting: return "NotIntersecting";
    case Errc::MixedDimensions: return "MixedDimensions";
    case Errc::NotPairwiseSkew: return "NotPairwiseSkew";
    case Errc::SpaceNotInFamily: return "SpaceNotInFamily";
    case Errc::ViewTooLarge: return "ViewTooLarge";
    case Errc::UndefinedBranch: return "UndefinedBranch";
    case Errc::BadFormat: return "BadFormat";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

namespace {

// Fixed irreducible moduli; coefficients lowest-degree first.
//   q=4 : x^2 + x + 1        over GF(2)
//   q=8 : x^3 + x + 1        over GF(2)
//   q=9 : x^2 + 1            over GF(3)
//   q=16: x^4 + x + 1        over GF(2)
const std::map<int, std::vector<int>> kModuli = {
    {4, {1, 1, 1}},
    {8, {1, 1, 0, 1}},
    {9, {1, 0, 1}},
    {16, {1, 1, 0, 0, 1}},
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// q = p^e with p prime, or throws.
void factor_prime_power(int q, int& p, int& e) {
  if (q < 2 || q > 16)
    fail(Errc::NotAPrimePower, "supported field orders are prime powers in [2,16], got " +
                                   std::to_string(q));
  for (int cand = 2; cand <= q; ++cand) {
    if (!is_prime(cand) || q % cand != 0) continue;
    int m = q, ee = 0;
    while (m % cand == 0) { m /= cand; ++ee; }
    if (m != 1)
      fail(Errc::NotAPrimePower, std::to_string(q) + " has two distinct prime factors");
    p = cand;
    e = ee;
    return;
  }
  fail(Errc::NotAPrimePower, std::to_string(q) + " is not a prime power");
}

// Polynomials over GF(p) as coefficient vectors, lowest first.
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = poly_trim(std::move(a));
  Poly mm = poly_trim(m);
  int dm = int(mm.size()) - 1;
  while (int(a.size()) - 1 >= dm && !a.empty()) {
    int da = int(a.size()) - 1;
    // leading coefficient quotient: a.back() / mm.back()
    int lead_inv = 1;
    for (int x = 1; x < p; ++x)
      if (x * mm.back() % p == 1) { lead_inv = x; break; }
    int f = a.back() * lead_inv % p;
    int shift = da - dm;
    for (int i = 0; i <= dm; ++i)
      a[i + shift] = ((a[i + shift] - f * mm[i]) % p + p) % p;
    a = poly_trim(std::move(a));
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
  return poly_mod(a, d, p).empty();
}

// Irreducibility of m over GF(p), degree e <= 4: root check suffices for
// e <= 3; for e = 4 additionally exclude irreducible quadratic factors.
bool modulus_irreducible(const Poly& m, int p, int e) {
  for (int x = 0; x < p; ++x) {
    long long v = 0, xp = 1;
    for (int c : m) { v = (v + c * xp) % p; xp = xp * x % p; }
    if (v == 0) return false;
  }
  if (e <= 3) return true;
  for (int c0 = 0; c0 < p; ++c0)
    for (int c1 = 0; c1 < p; ++c1) {
      Poly quad = {c0, c1, 1};
      bool has_root = false;
      for (int x = 0; x < p; ++x)
        if ((c0 + c1 * x + x * x) % p == 0) { has_root = true; break; }
      if (!has_root && poly_divides(quad, m, p)) return false;
    }
  return true;
}

}  // namespace

Elem Field::poly_mul(Elem a, Elem b) const {
  // digits base p, multiply as polynomials, reduce mod modulus
  std::vector<int> da(e_), db(e_);
  int av = a, bv = b;
  for (int i = 0; i < e_; ++i) { da[i] = av % p_; av /= p_; db[i] = bv % p_; bv /= p_; }
  std::vector<int> prod(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  int enc = 0, pw = 1;
  for (size_t i = 0; i < r.size(); ++i) { enc += r[i] * pw; pw *= p_; }
  return Elem(enc);
}

Field::Field(int q) : q_(q) {
  factor_prime_power(q, p_, e_);
  if (e_ == 1) {
    modulus_ = {0, 1};  // x, the trivial degree-1 modulus of the prime field
  } else {
    modulus_ = kModuli.at(q);
    if (!modulus_irreducible(modulus_, p_, e_))
      fail(Errc::BadFormat, "modulus for q=" + std::to_string(q) + " is not irreducible");
  }

  auto add_elems = [&](Elem a, Elem b) -> Elem {
    // digit-wise addition mod p
    int av = a, bv = b, enc = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
      enc += (av % p_ + bv % p_) % p_ * pw;
      av /= p_; bv /= p_; pw *= p_;
    }
    return Elem(enc);
  };

  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      add_[idx(Elem(a), Elem(b))] = add_elems(Elem(a), Elem(b));
      mul_[idx(Elem(a), Elem(b))] = poly_mul(Elem(a), Elem(b));
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b)
      if (add_[idx(Elem(a), Elem(b))] == 0) neg_[a] = Elem(b);
  }

  // generator: smallest element of multiplicative order q-1
  int gen = -1;
  for (int g = 1; g < q_ && gen < 0; ++g) {
    int ord = 1;
    Elem x = Elem(g);
    while (x != 1) { x = mul_[idx(x, Elem(g))]; ++ord; }
    if (ord == q_ - 1) gen = g;
  }
  log_[0] = -1;
  Elem x = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    alog_[i] = x;
    log_[x] = i;
    x = mul_[idx(x, Elem(gen))];
  }
  for (int a = 1; a < q_; ++a)
    inv_[a] = alog_[(q_ - 1 - log_[a]) % (q_ - 1)];

  // table product must agree with log/antilog product for all pairs
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b) {
      Elem via_log = alog_[(log_[a] + log_[b]) % (q_ - 1)];
      if (via_log != mul_[idx(Elem(a), Elem(b))])
        fail(Errc::BadFormat, "log-table product disagrees with polynomial product");
    }
}

const Field& Field::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
  return *it->second;
}

}  // namespace flaglab
