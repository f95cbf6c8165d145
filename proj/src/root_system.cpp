#include "parab/root_system.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parab {

char family_letter(Family f) { return static_cast<char>(f); }

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
  }
}

std::string LieType::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void validate(const LieType& t) {
  const int n = t.rank;
  auto fail = [&](const char* range) {
    throw std::invalid_argument("invalid rank " + std::to_string(n) + " for family " +
                                std::string(1, family_letter(t.family)) + " (need " + range + ")");
  };
  switch (t.family) {
    case Family::A: if (n < 1) fail("n >= 1"); break;
    case Family::B: if (n < 2) fail("n >= 2"); break;
    case Family::C: if (n < 2) fail("n >= 2"); break;
    case Family::D: if (n < 3) fail("n >= 3"); break;
    case Family::E: if (n < 6 || n > 8) fail("n in {6,7,8}"); break;
    case Family::F: if (n != 4) fail("n = 4"); break;
    case Family::G: if (n != 2) fail("n = 2"); break;
  }
}

int positive_root_count(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

int dim_of(const LieType& t) { return 2 * positive_root_count(t) + t.rank; }

bool Root::is_positive() const {
  for (int v : c)
    if (v != 0) return v > 0;
  return false;
}

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

Root Root::operator-() const {
  Root r = *this;
  for (int& v : r.c) v = -v;
  return r;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

std::string Root::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] > 0 ? "+" : "-");
    else if (c[i] < 0) os << "-";
    int a = std::abs(c[i]);
    if (a != 1) os << a;
    os << "a" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool root_less(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.c < b.c;
}

RootSystem::RootSystem(LieType t) : type_(t) {
  validate(t);
  build_cartan();
  enumerate_roots();
}

void RootSystem::build_cartan() {
  const int n = type_.rank;
  std::vector<std::pair<int, int>> edges;  // 1-based
  d_.assign(n, Rat(1));

  switch (type_.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      d_[n - 1] = Rat(1, 2);
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      for (int i = 0; i < n - 1; ++i) d_[i] = Rat(1, 2);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      // chain 1-3-4-5-..., node 2 hangs off node 4
      edges.emplace_back(1, 3);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, 4);
      break;
    case Family::F:
      edges = {{1, 2}, {2, 3}, {3, 4}};
      d_[2] = Rat(1, 2);
      d_[3] = Rat(1, 2);
      break;
    case Family::G:
      edges = {{1, 2}};
      d_[0] = Rat(1, 3);
      break;
  }

  form_.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) form_[i][i] = 2 * d_[i];
  for (auto [i, j] : edges) {
    Rat v = -std::max(d_[i - 1], d_[j - 1]);
    form_[i - 1][j - 1] = v;
    form_[j - 1][i - 1] = v;
  }

  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = form_[i][j] / d_[i];
      if (denominator(v) != 1) throw std::logic_error("non-integral Cartan entry");
      cartan_[i][j] = int(numerator(v));
    }
}

Root RootSystem::simple_root(int i) const {
  Root r;
  r.c.assign(rank(), 0);
  r.c[i - 1] = 1;
  return r;
}

int RootSystem::pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta.c[j] * cartan_[i - 1][j];
  return s;
}

void RootSystem::enumerate_roots() {
  // Closure from the simple roots by root strings, height by height: for a
  // root b of height h, b + alpha_i is a root iff p - <b, alpha_i^vee> > 0,
  // where p is the length of the descending alpha_i-string through b.
  std::vector<Root> current;
  for (int i = 1; i <= rank(); ++i) {
    current.push_back(simple_root(i));
    id_.emplace(current.back().c, -1);
  }
  std::vector<Root> all = current;
  while (!current.empty()) {
    std::vector<Root> next;
    for (const Root& b : current) {
      for (int i = 1; i <= rank(); ++i) {
        Root up = b + simple_root(i);
        if (id_.count(up.c)) continue;
        int p = 0;
        Root down = b - simple_root(i);
        while (down.is_positive() && id_.count(down.c)) {
          ++p;
          down = down - simple_root(i);
        }
        if (b.c == simple_root(i).c) continue;  // string through itself
        if (p - pairing(b, i) > 0) {
          id_.emplace(up.c, -1);
          next.push_back(up);
        }
      }
    }
    for (const Root& r : next) all.push_back(r);
    current = std::move(next);
  }

  std::sort(all.begin(), all.end(), root_less);
  positive_ = std::move(all);
  id_.clear();
  for (size_t k = 0; k < positive_.size(); ++k) id_.emplace(positive_[k].c, int(k));
  highest_ = positive_.back();

  if (int(positive_.size()) != positive_root_count(type_))
    throw std::logic_error("root enumeration count mismatch for " + type_.name());
  for (int i = 1; i <= rank(); ++i)
    if (is_root((highest_ + simple_root(i)).c))
      throw std::logic_error("highest root not maximal");
}

bool RootSystem::is_root(const std::vector<int>& v) const {
  bool any_pos = false, any_neg = false;
  for (int x : v) {
    if (x > 0) any_pos = true;
    if (x < 0) any_neg = true;
  }
  if (any_pos == any_neg) return false;  // zero or mixed signs
  if (any_pos) return id_.count(v) > 0;
  std::vector<int> w(v);
  for (int& x : w) x = -x;
  return id_.count(w) > 0;
}

int RootSystem::root_id(const Root& r) const {
  auto it = id_.find(r.c);
  if (it == id_.end()) throw std::domain_error("not a positive root: " + r.str());
  return it->second;
}

Root RootSystem::reflect(int i, const Root& beta) const {
  if (!is_root(beta)) throw std::domain_error("reflect: not a root: " + beta.str());
  Root r = beta;
  int k = pairing(beta, i);
  r.c[i - 1] -= k;
  return r;
}

std::optional<Root> RootSystem::add_root(const Root& beta, const Root& gamma) const {
  Root s = beta + gamma;
  if (is_root(s)) return s;
  return std::nullopt;
}

Rat RootSystem::form(const Root& a, const Root& b) const {
  Rat s(0);
  for (int i = 0; i < rank(); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.c[j] == 0) continue;
      s += Rat(a.c[i]) * b.c[j] * form_[i][j];
    }
  }
  return s;
}

bool RootSystem::is_long(const Root& beta) const { return form(beta, beta) == 2; }

int RootSystem::string_down(const Root& beta, const Root& alpha) const {
  int p = 0;
  Root down = beta - alpha;
  while ((down.is_positive() || (-down).is_positive()) && is_root(down)) {
    ++p;
    down = down - alpha;
  }
  return p;
}

std::vector<int> RootSystem::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= rank(); ++j)
    if (j != i && cartan(i, j) != 0) out.push_back(j);
  return out;
}

bool RootSystem::is_simple_root_long(int i) const { return d_[i - 1] == 1; }

RootSystemPtr get_root_system(const LieType& t) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, RootSystemPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(family_letter(t.family), t.rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(t);
  cache.emplace(key, rs);
  return rs;
}

}  // namespace parab
