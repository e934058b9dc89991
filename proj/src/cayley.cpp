#include "upsem/cayley.hpp"

#include <algorithm>
#include <numeric>

#include "upsem/errors.hpp"

namespace upsem {

ValidationResult validate_semigroup(const CayleyTable& t) {
  const int n = t.order;
  if (n < 1) return {false, {}, "carrier must have at least one element"};
  if (n > kMaxOrder)
    return {false, {}, "carrier order " + std::to_string(n) + " exceeds the cap of 8"};
  if (static_cast<int>(t.cells.size()) != n * n)
    return {false, {}, "table must have exactly order*order entries"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.at(x, y) < 0 || t.at(x, y) >= n)
        return {false, {}, "entry (" + std::to_string(x) + "," + std::to_string(y) + ") out of range"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
          return {false, AssociativityWitness{x, y, z}, "not associative"};
  return {true, {}, ""};
}

void require_semigroup(const CayleyTable& t) {
  ValidationResult r = validate_semigroup(t);
  if (!r.ok) throw input_error("not a semigroup: " + r.message);
}

StructureFlags classify(const CayleyTable& t) {
  const int n = t.order;
  StructureFlags f;
  f.commutative = f.band = f.linear = f.left_zero = f.right_zero = true;
  for (int x = 0; x < n; ++x) {
    if (t.at(x, x) != x) f.band = false;
    for (int y = 0; y < n; ++y) {
      const int p = t.at(x, y);
      if (p != t.at(y, x)) f.commutative = false;
      if (p != x && p != y) f.linear = false;
      if (p != x) f.left_zero = false;
      if (p != y) f.right_zero = false;
    }
  }
  f.semilattice = f.commutative && f.band;
  return f;
}

int power_of(const CayleyTable& t, int x, int k) {
  int acc = x;
  for (int i = 1; i < k; ++i) acc = t.at(acc, x);
  return acc;
}

std::vector<int> regular_elements(const CayleyTable& t) {
  std::vector<int> out;
  for (int a = 0; a < t.order; ++a)
    for (int s = 0; s < t.order; ++s)
      if (t.at(t.at(a, s), a) == a) {
        out.push_back(a);
        break;
      }
  return out;
}

CliffordResult is_nm_clifford(const CayleyTable& t, int n, int m) {
  if (n < 1 || m < 1) throw input_error("Clifford exponents must be >= 1");
  for (int x = 0; x < t.order; ++x) {
    if (power_of(t, x, n + 1) == power_of(t, x, m + 1) &&
        power_of(t, x, n) != power_of(t, x, m))
      return {false, x};
  }
  return {true, -1};
}

AntichainResult maximum_antichain(const CayleyTable& t) {
  const int n = t.order;
  AntichainResult best;
  for (SubsetMask s = 1; s <= full_mask(n); ++s) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = 0; b < n && ok; ++b) {
        if (a == b || !(s >> b & 1)) continue;
        const int p = t.at(a, b);
        if (p == a || p == b) ok = false;
      }
    }
    if (ok && mask_size(s) > best.size) best = {s, mask_size(s)};
  }
  return best;
}

namespace {

// Table relabeled by p: entry (p[x], p[y]) = p[t(x, y)].
CayleyTable apply_permutation(const CayleyTable& t, const std::vector<int>& p) {
  const int n = t.order;
  CayleyTable out(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.set(p[x], p[y], p[t.at(x, y)]);
  return out;
}

}  // namespace

CayleyTable canonical_form(const CayleyTable& t) {
  const int n = t.order;
  std::vector<int> p(n), inv(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint8_t> best = t.cells;
  std::vector<std::uint8_t> cand(n * n);
  while (std::next_permutation(p.begin(), p.end())) {
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    bool worse = false;
    for (int x = 0; x < n && !worse; ++x) {
      for (int y = 0; y < n; ++y) {
        const std::uint8_t v =
            static_cast<std::uint8_t>(p[t.at(inv[x], inv[y])]);
        const std::uint8_t b = best[x * n + y];
        cand[x * n + y] = v;
        if (v > b) {
          worse = true;
          break;
        }
        if (v < b) {  // strictly better prefix: complete and take it
          for (int x2 = x; x2 < n; ++x2)
            for (int y2 = (x2 == x ? y + 1 : 0); y2 < n; ++y2)
              cand[x2 * n + y2] =
                  static_cast<std::uint8_t>(p[t.at(inv[x2], inv[y2])]);
          best = cand;
          worse = true;  // restart comparison against the new best
          break;
        }
      }
    }
  }
  CayleyTable out(n);
  out.cells = best;
  return out;
}

bool are_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.order != b.order) return false;
  return canonical_form(a) == canonical_form(b);
}

bool are_isomorphic_pairs(const CayleyTable& m1, const CayleyTable& j1,
                          const CayleyTable& m2, const CayleyTable& j2) {
  if (m1.order != m2.order) return false;
  const int n = m1.order;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (apply_permutation(m1, p) == m2 && apply_permutation(j1, p) == j2)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

CayleyTable chain_table(int n) {
  CayleyTable t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.set(x, y, std::min(x, y));
  return t;
}

CayleyTable left_zero_table(int n) {
  CayleyTable t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.set(x, y, x);
  return t;
}

CayleyTable right_zero_table(int n) {
  CayleyTable t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.set(x, y, y);
  return t;
}

CayleyTable vee_table() { return bush_table({1, 1}); }

CayleyTable bush_table(const std::vector<int>& branch_lengths) {
  if (branch_lengths.empty())
    throw input_error("bush needs at least one branch length");
  int n = 1;
  for (int len : branch_lengths) {
    if (len < 1) throw input_error("bush branch lengths must be >= 1");
    n += len;
  }
  if (n > kMaxOrder)
    throw input_error("bush carrier order " + std::to_string(n) + " exceeds the cap of 8");
  // Element 0 is the root; branch i occupies a contiguous run of indices,
  // increasing upward. branch[x] = 0 for the root, i+1 within branch i.
  std::vector<int> branch(n, 0);
  int next = 1;
  for (std::size_t i = 0; i < branch_lengths.size(); ++i)
    for (int k = 0; k < branch_lengths[i]; ++k) branch[next++] = static_cast<int>(i) + 1;
  CayleyTable t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (branch[x] != branch[y])
        t.set(x, y, 0);  // meets across branches land on the root
      else
        t.set(x, y, std::min(x, y));
    }
  return t;
}

namespace {

int parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw input_error("bad " + what + ": '" + s + "'");
  const long v = std::stol(s);
  if (v < 1 || v > kMaxOrder)
    throw input_error(what + " must be between 1 and 8, got " + s);
  return static_cast<int>(v);
}

}  // namespace

CayleyTable parse_carrier(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "vee") {
    if (!arg.empty()) throw input_error("vee takes no parameter");
    return vee_table();
  }
  if (kind == "chain") return chain_table(parse_positive(arg, "chain order"));
  if (kind == "leftzero") return left_zero_table(parse_positive(arg, "leftzero order"));
  if (kind == "rightzero") return right_zero_table(parse_positive(arg, "rightzero order"));
  if (kind == "bush") {
    std::vector<int> lens;
    std::string cur;
    for (char c : arg + ",") {
      if (c == ',') {
        if (!cur.empty()) lens.push_back(parse_positive(cur, "bush branch length"));
        cur.clear();
      } else {
        cur += c;
      }
    }
    return bush_table(lens);
  }
  throw input_error("unknown carrier '" + spec +
                    "' (expected chain:n, leftzero:n, rightzero:n, vee, bush:l1,l2,... "
                    "or a path to a Cayley JSON file)");
}

std::vector<std::string> carrier_catalog() {
  return {
      "chain:n       chain 0 < 1 < ... < n-1 with x*y = min(x,y)",
      "leftzero:n    semigroup of left zeros, x*y = x",
      "rightzero:n   semigroup of right zeros, x*y = y",
      "vee           3-element semilattice with incomparable 1, 2 over bottom 0",
      "bush:l1,l2,.. root 0 with disjoint chains of the given lengths above it",
      "<path>        a JSON file {\"order\": n, \"table\": [[..], ..]}",
  };
}

}  // namespace upsem
