#include "flaglab/subspace.hpp"

#include <sstream>

namespace flaglab {

namespace {
const char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}
}  // namespace

Subspace Subspace::full(const Field& f, int ambient) {
  MatGF m(f, ambient, ambient);
  for (int i = 0; i < ambient; ++i) m.at(i, i) = 1;
  return Subspace(ambient, std::move(m));
}

Subspace Subspace::coordinate(const Field& f, int ambient, std::initializer_list<int> axes) {
  MatGF m(f, int(axes.size()), ambient);
  int r = 0;
  for (int ax : axes) m.at(r++, ax - 1) = 1;
  return from_span(m);
}

uint64_t Subspace::hash() const {
  uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(uint64_t(ambient_));
  mix(uint64_t(basis_.rows));
  mix(uint64_t(basis_.field ? basis_.field->q() : 0));
  for (Elem e : basis_.a) mix(uint64_t(e));
  return h;
}

std::string Subspace::serialize() const {
  std::ostringstream os;
  os << ambient_ << ':' << dim() << ':' << field().q() << ':';
  for (int i = 0; i < basis_.rows; ++i) {
    if (i) os << ';';
    for (int j = 0; j < basis_.cols; ++j) os << kDigits[basis_.at(i, j)];
  }
  return os.str();
}

Subspace Subspace::parse(const std::string& s) {
  size_t p1 = s.find(':');
  size_t p2 = s.find(':', p1 + 1);
  size_t p3 = s.find(':', p2 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos || p3 == std::string::npos)
    fail(Errc::BadFormat, "subspace literal needs 'd:k:q:' prefix, got '" + s + "'");
  int d = std::stoi(s.substr(0, p1));
  int k = std::stoi(s.substr(p1 + 1, p2 - p1 - 1));
  int q = std::stoi(s.substr(p2 + 1, p3 - p2 - 1));
  const Field& f = Field::get(q);
  MatGF m(f, k, d);
  std::string body = s.substr(p3 + 1);
  int row = 0;
  size_t pos = 0;
  while (row < k) {
    size_t semi = body.find(';', pos);
    std::string rowstr = body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    if (int(rowstr.size()) != d)
      fail(Errc::BadFormat, "row " + std::to_string(row) + " of '" + s + "' has wrong width");
    for (int j = 0; j < d; ++j) {
      int v = digit_value(rowstr[j]);
      if (v < 0 || v >= q) fail(Errc::BadFormat, "bad digit in '" + s + "'");
      m.at(row, j) = Elem(v);
    }
    ++row;
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (row != k) fail(Errc::BadFormat, "expected " + std::to_string(k) + " rows in '" + s + "'");
  Subspace sp = from_span(m);
  if (sp.dim() != k) fail(Errc::BadFormat, "rows of '" + s + "' are not independent");
  if (!(sp.basis() == m)) fail(Errc::BadFormat, "'" + s + "' is not in canonical form");
  return sp;
}

namespace {
void check_compatible(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient() != s2.ambient() || s1.field().q() != s2.field().q())
    fail(Errc::AmbientMismatch,
         "subspaces live in GF(" + std::to_string(s1.field().q()) + ")^" +
             std::to_string(s1.ambient()) + " vs GF(" + std::to_string(s2.field().q()) + ")^" +
             std::to_string(s2.ambient()));
}
}  // namespace

int meet_dim(const Subspace& s1, const Subspace& s2) {
  check_compatible(s1, s2);
  return s1.dim() + s2.dim() - rank_stacked(s1.basis(), s2.basis());
}

Subspace join(const Subspace& s1, const Subspace& s2) {
  check_compatible(s1, s2);
  MatGF stacked(s1.field(), s1.dim() + s2.dim(), s1.ambient());
  std::copy(s1.basis().a.begin(), s1.basis().a.end(), stacked.a.begin());
  std::copy(s2.basis().a.begin(), s2.basis().a.end(), stacked.a.begin() + s1.basis().a.size());
  return Subspace::from_span(stacked);
}

Subspace ortho_complement(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient());
  return Subspace::from_span(kernel(s.basis()));
}

Subspace meet(const Subspace& s1, const Subspace& s2) {
  return ortho_complement(join(ortho_complement(s1), ortho_complement(s2)));
}

bool contains(const Subspace& big, const Subspace& small) {
  return meet_dim(big, small) == small.dim();
}

bool incident(const Subspace& s, const Subspace& t) {
  int m = meet_dim(s, t);
  return m == s.dim() || m == t.dim();
}

}  // namespace flaglab
