// Copyright 2026 The sktholo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skt/rootsys.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "skt/errors.hpp"

namespace skt {

std::string SimpleFactor::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

CartanSpec CartanSpec::parse(std::string_view text) {
  CartanSpec spec;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == ',' || c == 'x'; };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos)
      throw ParseError("group: unknown family '" + std::string(1, text[pos]) + "' in '" + std::string(text) + "'");
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("group: missing rank after '" + std::string(1, letter) + "'");
    const int rank = std::stoi(std::string(text.substr(start, pos - start)));
    spec.factors.push_back({static_cast<Family>(letter), rank});
  }
  if (spec.factors.empty()) throw ParseError("group: no simple factors given");
  return spec;
}

std::string CartanSpec::name() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "+";
    out += f.name();
  }
  return out;
}

int CartanSpec::total_rank() const {
  return std::accumulate(factors.begin(), factors.end(), 0, [](int acc, const SimpleFactor& f) { return acc + f.rank; });
}

void validate_factor(const SimpleFactor& factor) {
  const int n = factor.rank;
  bool ok = false;
  switch (factor.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw PreconditionError("inadmissible simple factor " + factor.name());
}

SimpleFactor canonical_factor(const SimpleFactor& factor) {
  if (factor.family == Family::C && factor.rank == 2) return {Family::B, 2};
  if (factor.family == Family::D && factor.rank == 3) return {Family::A, 3};
  return factor;
}

std::size_t expected_positive_root_count(const SimpleFactor& factor) {
  const auto f = canonical_factor(factor);
  const auto n = static_cast<std::size_t>(f.rank);
  switch (f.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

namespace {

// Canonical a/b; mpq_class(a, b) alone is not reduced.
mpq_class frac(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

// Symmetric form (alpha_i, alpha_j) of a canonical simple factor, Bourbaki
// numbering, shortest roots of squared length 2.
std::vector<std::vector<int>> dynkin_form(const SimpleFactor& f) {
  const auto n = static_cast<std::size_t>(f.rank);
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j, int value) { s[i][j] = s[j][i] = value; };
  auto chain = [&](std::size_t last, int value) {
    for (std::size_t i = 0; i + 1 <= last && i + 1 < n; ++i) link(i, i + 1, value);
  };
  switch (f.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) s[i][i] = 2;
      chain(n - 1, -1);
      break;
    case Family::B:
      for (std::size_t i = 0; i < n; ++i) s[i][i] = i + 1 < n ? 4 : 2;
      chain(n - 1, -2);
      break;
    case Family::C:
      for (std::size_t i = 0; i < n; ++i) s[i][i] = i + 1 < n ? 2 : 4;
      chain(n - 2, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i < n; ++i) s[i][i] = 2;
      chain(n - 2, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (std::size_t i = 0; i < n; ++i) s[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      s[0][0] = s[1][1] = 4;
      s[2][2] = s[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      s[0][0] = 2;
      s[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return s;
}

bool root_order_less(const RootVector& a, const RootVector& b) {
  const int ha = std::accumulate(a.begin(), a.end(), 0);
  const int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return b < a;  // decreasing lexicographic within a height
}

RootVector negated(RootVector v) {
  for (auto& x : v) x = -x;
  return v;
}

RootVector plus(const RootVector& a, const RootVector& b) {
  RootVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RootVector minus(const RootVector& a, const RootVector& b) { return plus(a, negated(b)); }

}  // namespace

std::size_t RootSystem::factor_of_simple(std::size_t simple) const {
  std::size_t f = 0;
  while (f + 1 < offsets_.size() && offsets_[f + 1] <= simple) ++f;
  return f;
}

std::optional<std::size_t> RootSystem::find_positive(const RootVector& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const RootVector& v) const {
  if (v.size() != rank()) return false;
  if (find_positive(v)) return true;
  return find_positive(negated(v)).has_value();
}

int RootSystem::pairing(const RootVector& beta, std::size_t j) const {
  int s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) s += beta[i] * cartan_[i][j];
  return s;
}

int RootSystem::inner(const RootVector& beta, const RootVector& gamma) const {
  int s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    for (std::size_t j = 0; j < gamma.size(); ++j) s += beta[i] * form_[i][j] * gamma[j];
  }
  return s;
}

int RootSystem::height(const RootVector& beta) const { return std::accumulate(beta.begin(), beta.end(), 0); }

RootVector RootSystem::coroot(const RootVector& beta) const {
  const int norm = inner(beta, beta);
  RootVector out(beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j) {
    const int num = beta[j] * form_[j][j];
    if (num % norm != 0) throw StructuralError("coroot with non-integral coordinates");
    out[j] = num / norm;
  }
  return out;
}

int RootSystem::string_down(const RootVector& alpha, const RootVector& beta) const {
  int p = 0;
  RootVector cur = minus(beta, alpha);
  while (is_root(cur)) {
    ++p;
    cur = minus(cur, alpha);
  }
  return p;
}

std::string RootSystem::root_label(const RootVector& beta) const {
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    const int k = beta[i];
    if (k > 0 && !out.empty()) out += "+";
    if (k == -1) {
      out += "-";
    } else if (k != 1) {
      out += std::to_string(k);
    }
    out += simple_label(i);
  }
  return out.empty() ? "0" : out;
}

RootSystem build_root_system(const CartanSpec& spec) {
  if (spec.factors.empty()) throw PreconditionError("root system needs at least one simple factor");
  RootSystem rs;
  for (const auto& f : spec.factors) {
    validate_factor(f);
    rs.factors_.push_back(canonical_factor(f));
  }
  std::size_t rank = 0;
  for (const auto& f : rs.factors_) {
    rs.offsets_.push_back(rank);
    rank += static_cast<std::size_t>(f.rank);
  }
  rs.form_.assign(rank, std::vector<int>(rank, 0));
  for (std::size_t k = 0; k < rs.factors_.size(); ++k) {
    const auto block = dynkin_form(rs.factors_[k]);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) rs.form_[rs.offsets_[k] + i][rs.offsets_[k] + j] = block[i][j];
  }
  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) rs.cartan_[i][j] = 2 * rs.form_[i][j] / rs.form_[j][j];

  // Root-string closure, one height at a time: beta + alpha_i is a root iff
  // q = p - <beta, alpha_i^vee> > 0 where p counts beta - k alpha_i.
  std::set<RootVector> found;
  std::vector<RootVector> layer;
  for (std::size_t i = 0; i < rank; ++i) {
    RootVector e(rank, 0);
    e[i] = 1;
    layer.push_back(e);
    found.insert(e);
  }
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < rank; ++i) {
        int p = 0;
        RootVector down = beta;
        for (;;) {
          down[i] -= 1;
          if (found.count(down) == 0) break;
          ++p;
        }
        const int q = p - rs.pairing(beta, i);
        if (q > 0) {
          RootVector up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    found.insert(next.begin(), next.end());
  }
  rs.positive_.assign(found.begin(), found.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(), root_order_less);
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    rs.index_[rs.positive_[k]] = k;
    const auto& v = rs.positive_[k];
    const auto first = static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](int x) { return x != 0; }) - v.begin());
    rs.factor_of_root_.push_back(rs.factor_of_simple(first));
  }
  return rs;
}

RootVector signed_root_vector(const RootSystem& rs, SignedRoot a) {
  const std::size_t p = rs.num_positive();
  if (a < p) return rs.positive_root(a);
  return negated(rs.positive_root(a - p));
}

std::optional<SignedRoot> find_signed_root(const RootSystem& rs, const RootVector& v) {
  if (auto k = rs.find_positive(v)) return *k;
  if (auto k = rs.find_positive(negated(v))) return *k + rs.num_positive();
  return std::nullopt;
}

SignedRoot negate_root(const RootSystem& rs, SignedRoot a) {
  const std::size_t p = rs.num_positive();
  return a < p ? a + p : a - p;
}

namespace {

// Positive-pair constants filled in order of the height of alpha + beta; every
// other constant is reduced to those through
//   N(-a,-b) = -N(a,b)  and  N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b) for a+b+c = 0.
class ConstantBuilder {
 public:
  explicit ConstantBuilder(const RootSystem& rs)
      : rs_(rs), p_(rs.num_positive()), positive_(p_ * p_, 0), known_(p_ * p_, false) {}

  int lookup(SignedRoot a, SignedRoot b) const {
    const RootVector va = signed_root_vector(rs_, a);
    const RootVector vb = signed_root_vector(rs_, b);
    const RootVector sum = plus(va, vb);
    const auto c = find_signed_root(rs_, negated(sum));
    if (!c) return 0;
    const bool pos_a = a < p_;
    const bool pos_b = b < p_;
    if (pos_a && pos_b) {
      if (!known_[a * p_ + b]) throw StructuralError("structure constant requested before it was determined");
      return positive_[a * p_ + b];
    }
    if (!pos_a && !pos_b) return -lookup(a - p_, b - p_);
    const bool pos_c = *c < p_;
    const RootVector vc = negated(sum);
    mpq_class value;
    if (pos_b == pos_c) {
      value = frac(rs_.inner(vc, vc), rs_.inner(va, va)) * lookup(b, *c);
    } else {
      value = frac(rs_.inner(vc, vc), rs_.inner(vb, vb)) * lookup(*c, a);
    }
    value.canonicalize();
    if (value.get_den() != 1) throw StructuralError("non-integral structure constant");
    return static_cast<int>(value.get_num().get_si());
  }

  void set(std::size_t a, std::size_t b, int value) {
    positive_[a * p_ + b] = value;
    positive_[b * p_ + a] = -value;
    known_[a * p_ + b] = known_[b * p_ + a] = true;
  }

  void mark_zero(std::size_t a, std::size_t b) { known_[a * p_ + b] = true; }

 private:
  const RootSystem& rs_;
  std::size_t p_;
  std::vector<int> positive_;
  std::vector<bool> known_;
};

}  // namespace

ChevalleyConstants chevalley_constants(const RootSystem& rs) {
  const std::size_t p = rs.num_positive();
  ConstantBuilder builder(rs);
  ChevalleyConstants out;
  out.num_positive_ = p;

  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      if (!rs.find_positive(plus(rs.positive_root(a), rs.positive_root(b)))) builder.mark_zero(a, b);

  for (std::size_t xi = 0; xi < p; ++xi) {
    const RootVector& vxi = rs.positive_root(xi);
    std::vector<std::pair<std::size_t, std::size_t>> decompositions;
    for (std::size_t a = 0; a < p; ++a) {
      if (auto b = rs.find_positive(minus(vxi, rs.positive_root(a)))) {
        if (a < *b) decompositions.emplace_back(a, *b);
      }
    }
    if (decompositions.empty()) continue;  // simple root
    // Extraspecial pair: smallest first component over all decompositions.
    const auto [gamma, delta] = decompositions.front();
    const RootVector& vg = rs.positive_root(gamma);
    const RootVector& vd = rs.positive_root(delta);
    const int n_extra = rs.string_down(vg, vd) + 1;
    builder.set(gamma, delta, n_extra);
    out.extraspecial_.emplace_back(gamma, delta);

    const int xi_norm = rs.inner(vxi, vxi);
    const SignedRoot neg_gamma = negate_root(rs, gamma);
    const SignedRoot neg_delta = negate_root(rs, delta);
    for (std::size_t k = 1; k < decompositions.size(); ++k) {
      const auto [alpha, beta] = decompositions[k];
      const RootVector& va = rs.positive_root(alpha);
      const RootVector& vb = rs.positive_root(beta);
      // Four-term relation for alpha + beta - gamma - delta = 0.
      mpq_class bracket = 0;
      const RootVector b_minus_g = minus(vb, vg);
      if (rs.is_root(b_minus_g))
        bracket += frac(builder.lookup(beta, neg_gamma) * builder.lookup(alpha, neg_delta),
                             rs.inner(b_minus_g, b_minus_g));
      const RootVector a_minus_g = minus(va, vg);
      if (rs.is_root(a_minus_g))
        bracket += frac(builder.lookup(neg_gamma, alpha) * builder.lookup(beta, neg_delta),
                             rs.inner(a_minus_g, a_minus_g));
      mpq_class value = frac(xi_norm, n_extra) * bracket;
      value.canonicalize();
      const int expected = rs.string_down(va, vb) + 1;
      if (value.get_den() != 1 || abs(value) != expected)
        throw StructuralError("structure constant for " + rs.root_label(va) + ", " + rs.root_label(vb) +
                              " has magnitude " + value.get_str() + ", expected " + std::to_string(expected));
      builder.set(alpha, beta, static_cast<int>(value.get_num().get_si()));
    }
  }

  out.table_.assign(4 * p * p, 0);
  for (SignedRoot a = 0; a < 2 * p; ++a)
    for (SignedRoot b = 0; b < 2 * p; ++b) out.table_[a * 2 * p + b] = builder.lookup(a, b);
  return out;
}

namespace {

std::string coords_text(const RootVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

RootVector parse_coords(const std::string& text, std::size_t rank) {
  RootVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("structure-constant cache: bad root coordinates '" + text + "'");
    }
  }
  if (v.size() != rank) throw ParseError("structure-constant cache: root '" + text + "' has wrong length");
  return v;
}

std::string cache_header(const RootSystem& rs) {
  std::string name;
  for (const auto& f : rs.factors()) name += (name.empty() ? "" : "+") + f.name();
  return "# sktholo chevalley-constants v" + std::to_string(ChevalleyConstants::kConventionVersion) + " " + name;
}

}  // namespace

void ChevalleyConstants::write(std::ostream& os, const RootSystem& rs) const {
  os << cache_header(rs) << "\n";
  const std::size_t p = num_positive_;
  for (SignedRoot a = 0; a < 2 * p; ++a) {
    for (SignedRoot b = 0; b < 2 * p; ++b) {
      const int value = n(a, b);
      if (value == 0) continue;
      os << "N " << coords_text(signed_root_vector(rs, a)) << " " << coords_text(signed_root_vector(rs, b)) << " "
         << value << "\n";
    }
  }
}

ChevalleyConstants ChevalleyConstants::read(std::istream& is, const RootSystem& rs) {
  const std::size_t p = rs.num_positive();
  ChevalleyConstants out;
  out.num_positive_ = p;
  out.table_.assign(4 * p * p, 0);
  std::string line;
  if (!std::getline(is, line) || line != cache_header(rs))
    throw ParseError("structure-constant cache: header does not match " + cache_header(rs));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tag, a_text, b_text;
    int value = 0;
    if (!(ss >> tag >> a_text >> b_text >> value) || tag != "N")
      throw ParseError("structure-constant cache: malformed line '" + line + "'");
    const auto a = find_signed_root(rs, parse_coords(a_text, rs.rank()));
    const auto b = find_signed_root(rs, parse_coords(b_text, rs.rank()));
    if (!a || !b) throw StructuralError("structure-constant cache: unknown root in '" + line + "'");
    out.table_[*a * 2 * p + *b] = value;
  }
  for (SignedRoot a = 0; a < 2 * p; ++a) {
    for (SignedRoot b = 0; b < 2 * p; ++b) {
      const RootVector va = signed_root_vector(rs, a);
      const RootVector vb = signed_root_vector(rs, b);
      const int value = out.n(a, b);
      const bool sum_is_root = rs.is_root(plus(va, vb));
      const int expected = sum_is_root ? rs.string_down(va, vb) + 1 : 0;
      if (std::abs(value) != expected || value != -out.n(b, a) ||
          value != -out.n(negate_root(rs, a), negate_root(rs, b)))
        throw StructuralError("structure-constant cache: inconsistent entry for " + rs.root_label(va) + ", " +
                              rs.root_label(vb));
    }
  }
  for (std::size_t xi = 0; xi < p; ++xi) {
    for (std::size_t a = 0; a < p; ++a) {
      if (auto b = rs.find_positive(minus(rs.positive_root(xi), rs.positive_root(a)))) {
        out.extraspecial_.emplace_back(a, *b);
        break;
      }
    }
  }
  return out;
}

std::string default_cache_dir() {
  if (const char* dir = std::getenv("SKTHOLO_CACHE_DIR")) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0')
    return std::string(xdg) + "/sktholo";
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
    return std::string(home) + "/.cache/sktholo";
  return {};
}

namespace {

ChevalleyConstants factor_constants(const RootSystem& rs, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  if (cache_dir.empty()) return chevalley_constants(rs);
  const fs::path file = fs::path(cache_dir) / (rs.factors().front().name() + "-v" +
                                               std::to_string(ChevalleyConstants::kConventionVersion) + ".txt");
  std::error_code ec;
  if (fs::exists(file, ec)) {
    std::ifstream in(file);
    try {
      return ChevalleyConstants::read(in, rs);
    } catch (const std::exception&) {
      // Stale or corrupt entry: recompute and overwrite below.
    }
  }
  ChevalleyConstants cc = chevalley_constants(rs);
  fs::create_directories(file.parent_path(), ec);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return cc;
    cc.write(out, rs);
  }
  fs::rename(tmp, file, ec);
  return cc;
}

}  // namespace

ChevalleyConstants cached_chevalley_constants(const RootSystem& rs, const std::string& cache_dir) {
  if (rs.factors().size() == 1) return factor_constants(rs, cache_dir);

  const std::size_t p = rs.num_positive();
  ChevalleyConstants out;
  out.num_positive_ = p;
  out.table_.assign(4 * p * p, 0);
  for (std::size_t k = 0; k < rs.factors().size(); ++k) {
    const RootSystem sub = build_root_system(CartanSpec{{rs.factors()[k]}});
    const ChevalleyConstants cc = factor_constants(sub, cache_dir);
    const std::size_t offset = rs.factor_offset(k);
    auto embed = [&](SignedRoot a) {
      const RootVector local = signed_root_vector(sub, a);
      RootVector global(rs.rank(), 0);
      for (std::size_t i = 0; i < local.size(); ++i) global[offset + i] = local[i];
      return *find_signed_root(rs, global);
    };
    const std::size_t sp = sub.num_positive();
    for (SignedRoot a = 0; a < 2 * sp; ++a)
      for (SignedRoot b = 0; b < 2 * sp; ++b)
        if (const int value = cc.n(a, b); value != 0) out.table_[embed(a) * 2 * p + embed(b)] = value;
  }
  // Re-derive extraspecial pairs in global root order; they coincide with the
  // per-factor ones because the order restricted to a factor is the factor's order.
  for (std::size_t xi = 0; xi < p; ++xi) {
    for (std::size_t a = 0; a < p; ++a) {
      if (auto b = rs.find_positive(minus(rs.positive_root(xi), rs.positive_root(a)))) {
        out.extraspecial_.emplace_back(a, *b);
        break;
      }
    }
  }
  return out;
}

}  // namespace skt
