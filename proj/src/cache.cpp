#include "chevex/cache.hpp"

#include <fstream>
#include <sstream>

namespace chevex {

namespace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string field_spec(const Field& f) {
  return f.is_prime_field() ? "prime " + std::to_string(f.characteristic()) : "rationals 0";
}

}  // namespace

std::string cache_file_name(const std::string& type, const Field& f) {
  return type + "_" + f.str() + ".table";
}

std::string render_table_cache(const ChevalleyAlgebra& a) {
  const LieAlgebra& lie = a.lie();
  std::ostringstream os;
  os << "chevex-table " << kCacheFormatVersion << "\n";
  os << "type " << a.roots().name() << "\n";
  os << "field " << field_spec(lie.field()) << "\n";
  os << "dim " << lie.dim() << "\n";
  os << "labels " << lie.dim() << "\n";
  for (const auto& l : lie.labels()) os << l << "\n";

  std::ostringstream records;
  int count = 0;
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = i + 1; j < lie.dim(); ++j)
      for (const auto& t : lie.product(i, j)) {
        records << i << " " << j << " " << t.k << " " << t.c.str() << "\n";
        ++count;
      }
  os << "constants " << count << "\n" << records.str();

  os << "coroots " << a.roots().num_roots() << " " << a.roots().rank() << "\n";
  for (int r = 0; r < a.roots().num_roots(); ++r) {
    const auto& c = a.coroot(r);
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << "\n";
  }

  std::string payload = os.str();
  std::ostringstream out;
  out << payload << "checksum " << std::hex << fnv1a(payload) << "\n";
  return out.str();
}

void write_table_cache(const ChevalleyAlgebra& a, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FieldError("cannot write cache file " + path);
  f << render_table_cache(a);
}

CachedTable read_table_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FieldError("cannot read cache file " + path);
  std::stringstream buffer;
  buffer << f.rdbuf();
  std::string content = buffer.str();

  // split off the checksum line
  auto pos = content.rfind("checksum ");
  if (pos == std::string::npos || pos == 0)
    throw CacheChecksumError("cache file has no checksum line: " + path);
  std::string payload = content.substr(0, pos);
  std::istringstream tail(content.substr(pos));
  std::string word, hex;
  tail >> word >> hex;
  if (std::stoull(hex, nullptr, 16) != fnv1a(payload))
    throw CacheChecksumError("cache checksum mismatch: " + path);

  std::istringstream in(payload);
  std::string magic;
  int version = -1;
  in >> magic >> version;
  if (magic != "chevex-table")
    throw CacheVersionError("not a chevex table cache: " + path);
  if (version != kCacheFormatVersion)
    throw CacheVersionError("cache format version " + std::to_string(version) +
                            " != " + std::to_string(kCacheFormatVersion));

  std::string key, type;
  in >> key >> type;                     // type
  std::string fkind;
  std::int64_t p = 0;
  in >> key >> fkind >> p;               // field
  Field field = fkind == "prime" ? Field::prime(p) : Field::rationals();
  int dim = 0, nlabels = 0;
  in >> key >> dim;                      // dim
  in >> key >> nlabels;                  // labels
  std::getline(in, key);                 // eat newline
  std::vector<std::string> labels(nlabels);
  for (auto& l : labels) std::getline(in, l);

  LieAlgebra lie(field, labels);
  int count = 0;
  in >> key >> count;  // constants
  struct Rec {
    int i, j, k;
    std::string v;
  };
  std::vector<Rec> recs(count);
  for (auto& r : recs) in >> r.i >> r.j >> r.k >> r.v;
  // group records per (i, j)
  for (int idx = 0; idx < count;) {
    int i = recs[idx].i, j = recs[idx].j;
    std::vector<LieAlgebra::Term> terms;
    while (idx < count && recs[idx].i == i && recs[idx].j == j) {
      Scalar c = field.zero();
      if (field.is_prime_field()) {
        c = field.from_int(std::stoll(recs[idx].v));
      } else {
        mpq_class q(recs[idx].v);
        q.canonicalize();
        c = field.from_int(q.get_num().get_si());
        if (q.get_den() != 1) c = c / field.from_int(q.get_den().get_si());
      }
      terms.push_back({recs[idx].k, c});
      ++idx;
    }
    lie.set_product(i, j, std::move(terms));
  }

  int nroots = 0, rank = 0;
  in >> key >> nroots >> rank;  // coroots
  std::vector<std::vector<long>> coroots(nroots, std::vector<long>(rank));
  for (auto& row : coroots)
    for (auto& v : row) in >> v;
  if (!in) throw CacheChecksumError("cache file truncated: " + path);

  return CachedTable{type, field, std::move(lie), std::move(coroots)};
}

}  // namespace chevex
