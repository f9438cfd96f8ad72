#include "zdg/table.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zdg/error.hpp"

namespace zdg::table {

namespace {

using nlohmann::json;

std::vector<std::uint32_t> read_matrix(const json& j, std::size_t n, const char* name) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedTable, std::string(name) + " must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(n * n);
  auto push = [&](const json& v) {
    if (!v.is_number_unsigned())
      throw Error(ErrorKind::MalformedTable, std::string(name) + " entries must be indices");
    out.push_back(v.get<std::uint32_t>());
  };
  if (!j.empty() && j.front().is_array()) {
    if (j.size() != n)
      throw Error(ErrorKind::MalformedTable, std::string(name) + " must have size rows");
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != n)
        throw Error(ErrorKind::MalformedTable, std::string(name) + " rows must have size entries");
      for (const auto& v : row) push(v);
    }
  } else {
    if (j.size() != n * n)
      throw Error(ErrorKind::MalformedTable, std::string(name) + " must have size*size entries");
    for (const auto& v : j) push(v);
  }
  return out;
}

}  // namespace

TableRing parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedTable, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::MalformedTable, "table document must be an object");
  for (const char* key : {"size", "one", "add", "mul"})
    if (!j.contains(key)) throw Error(ErrorKind::MalformedTable, std::string("missing field ") + key);
  if (!j["size"].is_number_unsigned() || !j["one"].is_number_unsigned())
    throw Error(ErrorKind::MalformedTable, "size and one must be non-negative integers");
  TableRing t;
  t.size = j["size"].get<std::size_t>();
  t.one = j["one"].get<std::size_t>();
  if (t.size == 0 || t.size > 4096)
    throw Error(ErrorKind::MalformedTable, "size must be in 1..4096");
  t.add = read_matrix(j["add"], t.size, "add");
  t.mul = read_matrix(j["mul"], t.size, "mul");
  return t;
}

TableRing load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string to_json(const TableRing& t) {
  json j;
  j["size"] = t.size;
  j["one"] = t.one;
  auto rows = [&](const std::vector<std::uint32_t>& m) {
    json r = json::array();
    for (std::size_t i = 0; i < t.size; ++i)
      r.push_back(std::vector<std::uint32_t>(m.begin() + i * t.size, m.begin() + (i + 1) * t.size));
    return r;
  };
  j["add"] = rows(t.add);
  j["mul"] = rows(t.mul);
  return j.dump();
}

TableRing modulus_table(std::uint32_t n) {
  TableRing t;
  t.size = n;
  t.one = 1 % n;
  t.add.resize(std::size_t{n} * n);
  t.mul.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      t.add[std::size_t{a} * n + b] = (a + b) % n;
      t.mul[std::size_t{a} * n + b] = static_cast<std::uint32_t>(std::uint64_t{a} * b % n);
    }
  return t;
}

TableRing product_table(const std::vector<std::uint32_t>& qs) {
  std::size_t n = 1;
  for (auto q : qs) n *= q;
  auto decode = [&](std::size_t x) {
    std::vector<std::uint32_t> c(qs.size());
    for (std::size_t i = qs.size(); i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(x % qs[i]);
      x /= qs[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < qs.size(); ++i) x = x * qs[i] + c[i];
    return x;
  };
  TableRing t;
  t.size = n;
  t.one = encode(std::vector<std::uint32_t>(qs.size(), 1));
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = decode(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto cb = decode(b);
      std::vector<std::uint32_t> s(qs.size()), p(qs.size());
      for (std::size_t i = 0; i < qs.size(); ++i) {
        s[i] = (ca[i] + cb[i]) % qs[i];
        p[i] = ca[i] * cb[i] % qs[i];
      }
      t.add[a * n + b] = static_cast<std::uint32_t>(encode(s));
      t.mul[a * n + b] = static_cast<std::uint32_t>(encode(p));
    }
  }
  return t;
}

std::size_t zero_of(const TableRing& t) {
  for (std::size_t z = 0; z < t.size; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < t.size && ok; ++x) ok = t.sum(z, x) == x;
    if (ok) return z;
  }
  throw Error(ErrorKind::MalformedTable, "no additive identity");
}

ElementSet annihilator(const TableRing& t, std::size_t a) {
  const std::size_t z = zero_of(t);
  ElementSet out(t.size, 0);
  for (std::size_t x = 0; x < t.size; ++x) out[x] = t.product(a, x) == z;
  return out;
}

ElementSet annihilator(const TableRing& t, const ElementSet& I) {
  ElementSet out(t.size, 1);
  for (std::size_t g = 0; g < t.size; ++g) {
    if (!I[g]) continue;
    const auto ann = annihilator(t, g);
    for (std::size_t x = 0; x < t.size; ++x) out[x] = out[x] && ann[x];
  }
  return out;
}

ElementSet principal_ideal(const TableRing& t, std::size_t a) {
  ElementSet out(t.size, 0);
  for (std::size_t x = 0; x < t.size; ++x) out[t.product(a, x)] = 1;
  return out;
}

ElementSet ideal_sum(const TableRing& t, const ElementSet& I, const ElementSet& J) {
  ElementSet out(t.size, 0);
  for (std::size_t x = 0; x < t.size; ++x) {
    if (!I[x]) continue;
    for (std::size_t y = 0; y < t.size; ++y)
      if (J[y]) out[t.sum(x, y)] = 1;
  }
  return out;
}

bool is_prime_ideal(const TableRing& t, const ElementSet& I) {
  if (std::all_of(I.begin(), I.end(), [](char c) { return c != 0; })) return false;
  for (std::size_t x = 0; x < t.size; ++x) {
    if (I[x]) continue;
    for (std::size_t y = 0; y < t.size; ++y)
      if (!I[y] && I[t.product(x, y)]) return false;
  }
  return true;
}

std::vector<ElementSet> all_ideals(const TableRing& t) {
  std::vector<ElementSet> principals;
  {
    std::set<ElementSet> seen;
    for (std::size_t a = 0; a < t.size; ++a) seen.insert(principal_ideal(t, a));
    principals.assign(seen.begin(), seen.end());
  }
  std::set<ElementSet> found;
  std::vector<ElementSet> frontier{principal_ideal(t, zero_of(t))};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& I : frontier)
      for (const auto& P : principals) {
        auto S = ideal_sum(t, I, P);
        if (found.insert(S).second) next.push_back(std::move(S));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<ElementSet> minimal_primes(const TableRing& t) {
  std::vector<ElementSet> primes;
  for (auto& I : all_ideals(t))
    if (is_prime_ideal(t, I)) primes.push_back(std::move(I));
  auto subset = [](const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };
  std::vector<ElementSet> out;
  for (const auto& P : primes) {
    bool minimal = true;
    for (const auto& Q : primes)
      if (Q != P && subset(Q, P)) minimal = false;
    if (minimal) out.push_back(P);
  }
  return out;
}

}  // namespace zdg::table
