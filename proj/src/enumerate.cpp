#include "flaglab/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace flaglab {

uint64_t count_subspaces(const Field& f, int d, int k) {
  uint64_t n = 0;
  for_each_subspace(f, d, k, [&](const MatGF&) { ++n; });
  return n;
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int d, int k) {
  std::vector<Subspace> out;
  for_each_subspace(f, d, k, [&](const MatGF& m) { out.push_back(Subspace::from_span(m)); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
int modulus_code(const Field& f) {
  int code = 0, pw = 1;
  for (int c : f.modulus()) { code += c * pw; pw *= f.p(); }
  return code;
}
}  // namespace

std::string cache_file_path(const Field& f, int d, int k, const std::string& cache_dir) {
  std::ostringstream os;
  os << cache_dir << "/pgcache_q" << f.q() << "_d" << d << "_k" << k
     << "_m" << modulus_code(f) << ".txt";
  return os.str();
}

std::vector<Subspace> enumerate_subspaces_cached(const Field& f, int d, int k,
                                                 const std::string& cache_dir) {
  if (cache_dir.empty()) return enumerate_subspaces(f, d, k);

  const std::string path = cache_file_path(f, d, k, cache_dir);
  std::ifstream in(path);
  if (in) {
    std::string tag, ver;
    int q = 0, dd = -1, kk = -1;
    uint64_t count = 0;
    in >> tag >> ver >> q >> dd >> kk >> count;
    if (tag == "PGCACHE" && ver == "v1" && q == f.q() && dd == d && kk == k) {
      std::string line;
      std::getline(in, line);  // eat newline
      std::vector<Subspace> out;
      out.reserve(count);
      bool ok = true;
      for (uint64_t i = 0; i < count && ok; ++i) {
        if (!std::getline(in, line)) { ok = false; break; }
        try {
          out.push_back(Subspace::parse(line));
        } catch (const Error&) {
          ok = false;
        }
      }
      if (ok && out.size() == count) return out;
    }
    // fall through: stale or corrupt cache is regenerated below
  }

  std::vector<Subspace> out = enumerate_subspaces(f, d, k);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) fail(Errc::IoError, "cannot write cache file " + tmp);
    os << "PGCACHE v1 " << f.q() << ' ' << d << ' ' << k << ' ' << out.size() << '\n';
    for (const Subspace& s : out) os << s.serialize() << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::remove(tmp.c_str());
  return out;
}

}  // namespace flaglab
