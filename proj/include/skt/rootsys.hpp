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

#ifndef SKT_ROOTSYS_HPP
#define SKT_ROOTSYS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skt {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleFactor {
  Family family;
  int rank;

  std::string name() const;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// A semisimple type as a list of simple factors, e.g. "A2", "A1+A1", "G2 x B2".
struct CartanSpec {
  std::vector<SimpleFactor> factors;

  /// Accepts factors separated by '+', ',', 'x' or whitespace. Throws ParseError.
  static CartanSpec parse(std::string_view text);
  std::string name() const;
  int total_rank() const;
};

/// Throws PreconditionError naming the factor when (family, rank) is not a
/// Dynkin type. Low-rank aliases C2 and D3 are admissible.
void validate_factor(const SimpleFactor& factor);

/// Canonical family for a factor: C2 -> B2, D3 -> A3, otherwise unchanged.
SimpleFactor canonical_factor(const SimpleFactor& factor);

/// Root coordinates over the simple roots of the whole (semisimple) system.
using RootVector = std::vector<int>;

/// Root system of a semisimple algebra with simple roots indexed globally,
/// factor by factor in the order given.
///
/// Conventions: cartan(i, j) = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j);
/// the symmetric form is integral with the shortest roots of each factor of
/// squared length 2. Positive roots are ordered by height, then by
/// coordinates in decreasing lexicographic order, so simple roots come first
/// as alpha_1, alpha_2, ...
class RootSystem {
 public:
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  std::size_t rank() const { return form_.size(); }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t factor_offset(std::size_t factor) const { return offsets_[factor]; }
  std::size_t factor_of_simple(std::size_t simple) const;

  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  /// (alpha_i, alpha_j)
  int form(std::size_t i, std::size_t j) const { return form_[i][j]; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  const RootVector& positive_root(std::size_t k) const { return positive_[k]; }
  std::size_t factor_of_root(std::size_t k) const { return factor_of_root_[k]; }

  /// Index of a positive root, if `v` is one.
  std::optional<std::size_t> find_positive(const RootVector& v) const;
  bool is_root(const RootVector& v) const;

  /// <beta, alpha_j^vee>
  int pairing(const RootVector& beta, std::size_t j) const;
  /// Symmetric form (beta, gamma).
  int inner(const RootVector& beta, const RootVector& gamma) const;
  int height(const RootVector& beta) const;
  /// Coordinates of beta^vee over the simple coroots.
  RootVector coroot(const RootVector& beta) const;
  /// Largest p with beta - p*alpha a root (alpha, beta roots, beta != +-alpha).
  int string_down(const RootVector& alpha, const RootVector& beta) const;

  /// "a1", "a1+a2", "3a1+2a2" using 1-based global simple-root labels.
  std::string root_label(const RootVector& beta) const;
  std::string simple_label(std::size_t i) const { return "a" + std::to_string(i + 1); }

  friend RootSystem build_root_system(const CartanSpec& spec);

 private:
  std::vector<SimpleFactor> factors_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> form_;
  std::vector<RootVector> positive_;
  std::vector<std::size_t> factor_of_root_;
  std::map<RootVector, std::size_t> index_;
};

/// Positive roots by root-string closure from the simple roots.
/// Throws PreconditionError for inadmissible factors.
RootSystem build_root_system(const CartanSpec& spec);

/// Closed-form count of positive roots of a simple factor.
std::size_t expected_positive_root_count(const SimpleFactor& factor);

/// Signed root index: k < P is the positive root k, k >= P is -(root k - P).
using SignedRoot = std::size_t;

/// Chevalley structure constants [E_a, E_b] = N(a, b) E_{a+b}.
///
/// Signs: N(alpha, beta) = p + 1 > 0 on extraspecial pairs, where for each
/// non-simple positive root xi the extraspecial pair (alpha, beta) has alpha
/// the first positive root (in root order) with xi - alpha a root. All other
/// constants follow from N(-a, -b) = -N(a, b) and the Jacobi identity.
class ChevalleyConstants {
 public:
  static constexpr int kConventionVersion = 1;

  std::size_t num_positive() const { return num_positive_; }
  /// 0 when a + b is not a root.
  int n(SignedRoot a, SignedRoot b) const { return table_[a * 2 * num_positive_ + b]; }
  /// Pairs (alpha, beta) recorded as extraspecial, by positive root index.
  const std::vector<std::pair<std::size_t, std::size_t>>& extraspecial() const { return extraspecial_; }

  /// Cache text: header line, then one line "N <a> <b> <value>" per nonzero
  /// constant, roots written as signed coordinate tuples like "1,-0" -> "1,0".
  void write(std::ostream& os, const RootSystem& rs) const;
  /// Reads the cache format and checks it against `rs` (every pair present,
  /// magnitudes p+1, antisymmetry). Throws ParseError / StructuralError.
  static ChevalleyConstants read(std::istream& is, const RootSystem& rs);

  friend ChevalleyConstants chevalley_constants(const RootSystem& rs);
  friend ChevalleyConstants cached_chevalley_constants(const RootSystem& rs, const std::string& cache_dir);
  friend bool operator==(const ChevalleyConstants&, const ChevalleyConstants&) = default;

 private:
  std::size_t num_positive_ = 0;
  std::vector<int> table_;
  std::vector<std::pair<std::size_t, std::size_t>> extraspecial_;
};

ChevalleyConstants chevalley_constants(const RootSystem& rs);

/// Signed-root helpers.
RootVector signed_root_vector(const RootSystem& rs, SignedRoot a);
std::optional<SignedRoot> find_signed_root(const RootSystem& rs, const RootVector& v);
SignedRoot negate_root(const RootSystem& rs, SignedRoot a);

/// Loads constants for `rs` from a cache directory, computing and storing them
/// on a miss. Entries are per simple factor (file keyed by family, rank and
/// convention version) and assembled for semisimple systems. An empty
/// directory disables caching; cache I/O failures fall back to computing.
ChevalleyConstants cached_chevalley_constants(const RootSystem& rs, const std::string& cache_dir);

/// Cache directory from SKTHOLO_CACHE_DIR, else $XDG_CACHE_HOME/sktholo, else
/// $HOME/.cache/sktholo; empty when none is available.
std::string default_cache_dir();

}  // namespace skt

#endif  // SKT_ROOTSYS_HPP
