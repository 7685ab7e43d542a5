#include "axial/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace axial {

namespace {

std::vector<std::string> default_labels(int count, int offset = 0) {
  std::vector<std::string> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(std::string(1, static_cast<char>('a' + offset + i)));
  }
  return out;
}

// Letter order a < a^-1 < b < b^-1 for deterministic enumeration.
inline int letter_key(int32_t v) {
  return 2 * (std::abs(v) - 1) + (v < 0 ? 1 : 0);
}

int32_t compute_len(const GroupModel& m, const std::vector<int32_t>& w);

int32_t factor_len(const GroupModel& m, const std::vector<int32_t>& w) {
  return compute_len(m, w);
}

int32_t compute_len(const GroupModel& m, const std::vector<int32_t>& w) {
  switch (m.family) {
    case Family::FreeGroup:
      return static_cast<int32_t>(w.size());
    case Family::FreeAbelian: {
      int32_t s = 0;
      for (int32_t e : w) s += std::abs(e);
      return s;
    }
    case Family::CyclicTimesFinite: {
      int32_t r = w[1];
      int32_t circ = std::min(r, m.finite_order - r);
      if (m.finite_order == 1) circ = 0;
      return std::abs(w[0]) + circ;
    }
    case Family::DirectProduct: {
      int32_t s = 0;
      std::size_t pos = 0;
      for (const auto& f : m.factors) {
        int32_t n = w[pos];
        std::vector<int32_t> sub(w.begin() + pos + 1, w.begin() + pos + 1 + n);
        s += factor_len(*f, sub);
        pos += 1 + n;
      }
      return s;
    }
  }
  return 0;
}

// Split a DirectProduct payload into per-factor elements.
std::vector<GroupElement> split_product(const GroupElement& x) {
  std::vector<GroupElement> parts;
  std::size_t pos = 0;
  for (const auto& f : x.model->factors) {
    int32_t n = x.word[pos];
    GroupElement e;
    e.model = f;
    e.word.assign(x.word.begin() + pos + 1, x.word.begin() + pos + 1 + n);
    e.len = compute_len(*f, e.word);
    parts.push_back(std::move(e));
    pos += 1 + n;
  }
  return parts;
}

GroupElement join_product(const ModelPtr& model,
                          const std::vector<GroupElement>& parts) {
  GroupElement out;
  out.model = model;
  for (const auto& p : parts) {
    out.word.push_back(static_cast<int32_t>(p.word.size()));
    out.word.insert(out.word.end(), p.word.begin(), p.word.end());
    out.len += p.len;
  }
  return out;
}

}  // namespace

ModelPtr GroupModel::free_group(int rank) {
  auto m = std::make_shared<GroupModel>();
  m->family = Family::FreeGroup;
  m->rank = rank;
  m->labels = default_labels(rank);
  return m;
}

ModelPtr GroupModel::free_abelian(int rank) {
  auto m = std::make_shared<GroupModel>();
  m->family = Family::FreeAbelian;
  m->rank = rank;
  m->labels = default_labels(rank);
  return m;
}

ModelPtr GroupModel::cyclic_times_finite(int order) {
  auto m = std::make_shared<GroupModel>();
  m->family = Family::CyclicTimesFinite;
  m->finite_order = order;
  m->labels = default_labels(order > 1 ? 2 : 1);
  return m;
}

ModelPtr GroupModel::direct_product(std::vector<ModelPtr> parts) {
  auto m = std::make_shared<GroupModel>();
  m->family = Family::DirectProduct;
  int offset = 0;
  for (auto& p : parts) {
    auto copy = std::make_shared<GroupModel>(*p);
    copy->labels = default_labels(copy->generator_count(), offset);
    offset += copy->generator_count();
    m->labels.insert(m->labels.end(), copy->labels.begin(), copy->labels.end());
    m->factors.push_back(copy);
  }
  return m;
}

int GroupModel::generator_count() const {
  switch (family) {
    case Family::FreeGroup:
    case Family::FreeAbelian:
      return rank;
    case Family::CyclicTimesFinite:
      return finite_order > 1 ? 2 : 1;
    case Family::DirectProduct: {
      int c = 0;
      for (const auto& f : factors) c += f->generator_count();
      return c;
    }
  }
  return 0;
}

bool GroupModel::same_as(const GroupModel& o) const {
  if (family != o.family) return false;
  switch (family) {
    case Family::FreeGroup:
    case Family::FreeAbelian:
      return rank == o.rank;
    case Family::CyclicTimesFinite:
      return finite_order == o.finite_order;
    case Family::DirectProduct: {
      if (factors.size() != o.factors.size()) return false;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i]->same_as(*o.factors[i])) return false;
      }
      return true;
    }
  }
  return false;
}

GroupElement identity(const ModelPtr& model) {
  GroupElement e;
  e.model = model;
  switch (model->family) {
    case Family::FreeGroup:
      break;
    case Family::FreeAbelian:
      e.word.assign(model->rank, 0);
      break;
    case Family::CyclicTimesFinite:
      e.word = {0, 0};
      break;
    case Family::DirectProduct: {
      std::vector<GroupElement> parts;
      for (const auto& f : model->factors) parts.push_back(identity(f));
      e = join_product(model, parts);
      break;
    }
  }
  return e;
}

GroupElement generator(const ModelPtr& model, int index, bool inverse) {
  if (index < 0 || index >= model->generator_count()) {
    throw UnknownGenerator("generator index out of range");
  }
  GroupElement e = identity(model);
  switch (model->family) {
    case Family::FreeGroup:
      e.word = {inverse ? -(index + 1) : (index + 1)};
      e.len = 1;
      break;
    case Family::FreeAbelian:
      e.word[index] = inverse ? -1 : 1;
      e.len = 1;
      break;
    case Family::CyclicTimesFinite:
      if (index == 0) {
        e.word[0] = inverse ? -1 : 1;
      } else {
        e.word[1] = inverse ? (model->finite_order - 1) % model->finite_order : 1;
      }
      e.len = compute_len(*model, e.word);
      break;
    case Family::DirectProduct: {
      std::vector<GroupElement> parts;
      int base = 0;
      for (const auto& f : model->factors) {
        int c = f->generator_count();
        if (index >= base && index < base + c) {
          parts.push_back(generator(f, index - base, inverse));
        } else {
          parts.push_back(identity(f));
        }
        base += c;
      }
      e = join_product(model, parts);
      break;
    }
  }
  return e;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (!x.model->same_as(*y.model)) {
    throw GroupMismatch("multiply: elements of different groups");
  }
  GroupElement out;
  out.model = x.model;
  switch (x.model->family) {
    case Family::FreeGroup: {
      out.word = x.word;
      for (int32_t v : y.word) {
        if (!out.word.empty() && out.word.back() == -v) {
          out.word.pop_back();
        } else {
          out.word.push_back(v);
        }
      }
      out.len = static_cast<int32_t>(out.word.size());
      break;
    }
    case Family::FreeAbelian: {
      out.word.resize(x.word.size());
      for (std::size_t i = 0; i < x.word.size(); ++i) {
        out.word[i] = x.word[i] + y.word[i];
      }
      out.len = compute_len(*out.model, out.word);
      break;
    }
    case Family::CyclicTimesFinite: {
      int n = x.model->finite_order;
      out.word = {x.word[0] + y.word[0],
                  static_cast<int32_t>(((x.word[1] + y.word[1]) % n + n) % n)};
      out.len = compute_len(*out.model, out.word);
      break;
    }
    case Family::DirectProduct: {
      auto xs = split_product(x);
      auto ys = split_product(y);
      std::vector<GroupElement> parts;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        parts.push_back(multiply(xs[i], ys[i]));
      }
      out = join_product(x.model, parts);
      break;
    }
  }
  return out;
}

GroupElement invert(const GroupElement& x) {
  GroupElement out;
  out.model = x.model;
  switch (x.model->family) {
    case Family::FreeGroup: {
      out.word.reserve(x.word.size());
      for (auto it = x.word.rbegin(); it != x.word.rend(); ++it) {
        out.word.push_back(-*it);
      }
      out.len = x.len;
      break;
    }
    case Family::FreeAbelian: {
      out.word.resize(x.word.size());
      for (std::size_t i = 0; i < x.word.size(); ++i) out.word[i] = -x.word[i];
      out.len = x.len;
      break;
    }
    case Family::CyclicTimesFinite: {
      int n = x.model->finite_order;
      out.word = {-x.word[0], static_cast<int32_t>((n - x.word[1]) % n)};
      out.len = x.len;
      break;
    }
    case Family::DirectProduct: {
      auto xs = split_product(x);
      std::vector<GroupElement> parts;
      for (const auto& p : xs) parts.push_back(invert(p));
      out = join_product(x.model, parts);
      break;
    }
  }
  return out;
}

bool is_identity(const GroupElement& x) { return x.len == 0; }

bool equal(const GroupElement& x, const GroupElement& y) {
  return x.word == y.word && x.model->same_as(*y.model);
}

bool shortlex_less(const GroupElement& x, const GroupElement& y) {
  if (x.len != y.len) return x.len < y.len;
  if (x.model->family == Family::FreeGroup) {
    const std::size_t n = std::min(x.word.size(), y.word.size());
    for (std::size_t i = 0; i < n; ++i) {
      int kx = letter_key(x.word[i]);
      int ky = letter_key(y.word[i]);
      if (kx != ky) return kx < ky;
    }
    return x.word.size() < y.word.size();
  }
  return x.word < y.word;
}

std::size_t hash_value(const GroupElement& x) {
  std::size_t h = 1469598103934665603ull;
  for (int32_t v : x.word) {
    h ^= static_cast<std::size_t>(static_cast<uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

GroupElement power(const GroupElement& x, long n) {
  GroupElement base = n < 0 ? invert(x) : x;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n)
                          : static_cast<unsigned long>(n);
  GroupElement acc = identity(x.model);
  while (k) {
    if (k & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return acc;
}

GroupElement normal_form(const std::vector<std::string>& symbols,
                         const ModelPtr& model) {
  GroupElement acc = identity(model);
  for (const auto& tok : symbols) {
    std::string base = tok;
    long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      exp = std::strtol(tok.c_str() + caret + 1, nullptr, 10);
    }
    bool inverse = false;
    if (!base.empty() && std::isupper(static_cast<unsigned char>(base[0]))) {
      inverse = true;
      base[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(base[0])));
    }
    int index = -1;
    for (std::size_t i = 0; i < model->labels.size(); ++i) {
      if (model->labels[i] == base) {
        index = static_cast<int>(i);
        break;
      }
    }
    if (index < 0) throw UnknownGenerator("unknown generator symbol: " + tok);
    GroupElement g = generator(model, index, inverse);
    acc = multiply(acc, power(g, exp));
  }
  return acc;
}

GroupElement parse_word(const std::string& text, const ModelPtr& model) {
  std::vector<std::string> toks;
  std::istringstream in(text);
  std::string t;
  while (in >> t) {
    if (t == "e") continue;
    toks.push_back(t);
  }
  return normal_form(toks, model);
}

namespace {

void append_run(std::ostringstream& out, const std::string& label, long exp,
                bool& first) {
  if (exp == 0) return;
  if (!first) out << ' ';
  first = false;
  if (exp == 1) {
    out << label;
  } else if (exp == -1) {
    out << static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  } else {
    out << label << '^' << exp;
  }
}

void print_element(std::ostringstream& out, const GroupElement& x, bool& first) {
  const GroupModel& m = *x.model;
  switch (m.family) {
    case Family::FreeGroup: {
      std::size_t i = 0;
      while (i < x.word.size()) {
        int32_t v = x.word[i];
        std::size_t j = i;
        while (j < x.word.size() && x.word[j] == v) ++j;
        long exp = static_cast<long>(j - i) * (v < 0 ? -1 : 1);
        append_run(out, m.labels[std::abs(v) - 1], exp, first);
        i = j;
      }
      break;
    }
    case Family::FreeAbelian:
      for (std::size_t i = 0; i < x.word.size(); ++i) {
        append_run(out, m.labels[i], x.word[i], first);
      }
      break;
    case Family::CyclicTimesFinite:
      append_run(out, m.labels[0], x.word[0], first);
      if (m.finite_order > 1) append_run(out, m.labels[1], x.word[1], first);
      break;
    case Family::DirectProduct: {
      for (const auto& p : split_product(x)) {
        // Factor labels are already globally unique.
        print_element(out, p, first);
      }
      break;
    }
  }
}

}  // namespace

std::string to_string(const GroupElement& x) {
  std::ostringstream out;
  bool first = true;
  print_element(out, x, first);
  std::string s = out.str();
  return s.empty() ? "e" : s;
}

std::vector<GroupElement> ball(const ModelPtr& model, int radius,
                               std::size_t capacity) {
  std::unordered_set<GroupElement, ElementHash, ElementEq> seen;
  std::vector<GroupElement> frontier{identity(model)};
  seen.insert(frontier.front());

  std::vector<GroupElement> gens;
  for (int i = 0; i < model->generator_count(); ++i) {
    gens.push_back(generator(model, i, false));
    gens.push_back(generator(model, i, true));
  }

  for (int r = 0; r < radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        GroupElement y = multiply(x, g);
        if (y.len > r + 1) continue;
        if (seen.insert(y).second) {
          if (seen.size() > capacity) {
            throw CapacityExceeded("ball enumeration exceeded capacity");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<GroupElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

const std::vector<GroupElement>& BallCache::get(int radius) {
  auto it = balls_.find(radius);
  if (it == balls_.end()) {
    it = balls_.emplace(radius, ball(model_, radius, capacity_)).first;
  }
  return it->second;
}

}  // namespace axial
