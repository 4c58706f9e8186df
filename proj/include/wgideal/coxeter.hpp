#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wgideal {

/// Subset of the generator indices 0..63.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}
  GenSet(std::initializer_list<int> gens) {
    for (int g : gens) insert(g);
  }

  static constexpr GenSet full(int rank) {
    return GenSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }
  static constexpr GenSet single(int s) { return GenSet(std::uint64_t{1} << s); }

  constexpr bool contains(int s) const { return (bits_ >> s) & 1U; }
  constexpr void insert(int s) { bits_ |= std::uint64_t{1} << s; }
  constexpr void erase(int s) { bits_ &= ~(std::uint64_t{1} << s); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return __builtin_popcountll(bits_); }
  /// Members in increasing order.
  std::vector<int> members() const;
  /// Smallest member, or -1.
  int first() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSet, GenSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

using ElemId = int;
using Word = std::vector<int>;

struct CoxeterMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(labels.size()); }
  /// Throws InvalidMatrix on shape, symmetry or entry violations.
  void validate() const;
  /// Submatrix on the given generators, in increasing index order.
  CoxeterMatrix restricted(GenSet K) const;

  static CoxeterMatrix from_json(const nlohmann::json& j);
  static CoxeterMatrix load(const std::string& path);
  /// I2(m) with labels s, t.
  static CoxeterMatrix dihedral(int m);
  /// Type A_n with labels s1..sn.
  static CoxeterMatrix type_a(int n);
  /// Type B_n with labels s0..s(n-1), m(s0,s1) = 4.
  static CoxeterMatrix type_b(int n);
  nlohmann::json to_json() const;
};

enum class Side { Left, Right };

inline constexpr std::size_t kDefaultCap = 2'000'000;

/// A finite Coxeter group with all elements enumerated.
///
/// Element ids follow (length, ShortLex word) order, so id 0 is the identity
/// and any id-increasing scan is a linear extension of the Bruhat order.
class CoxeterSystem {
 public:
  /// Coset enumeration over the trivial subgroup; throws CapExceeded once the
  /// number of live cosets passes `cap`.
  static std::shared_ptr<const CoxeterSystem> enumerate(const CoxeterMatrix& matrix,
                                                        std::size_t cap = kDefaultCap);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  std::size_t size() const { return length_.size(); }
  int m(int s, int t) const { return matrix_.m[s][t]; }

  int length(ElemId w) const { return length_[w]; }
  const Word& word(ElemId w) const { return words_[w]; }
  ElemId right(ElemId w, int s) const { return right_[w * rank() + s]; }
  ElemId left(ElemId w, int s) const { return left_[w * rank() + s]; }
  ElemId inverse(ElemId w) const { return inverse_[w]; }
  ElemId longest() const { return static_cast<ElemId>(size()) - 1; }
  ElemId mul(ElemId a, ElemId b) const;
  /// Product of an arbitrary (not necessarily reduced) generator sequence.
  ElemId from_word(const Word& w) const;

  bool bruhat_leq(ElemId u, ElemId w) const {
    return (bruhat_[static_cast<std::size_t>(w) * stride_ + (u >> 6)] >> (u & 63)) & 1U;
  }
  bool bruhat_lt(ElemId u, ElemId w) const { return u != w && bruhat_leq(u, w); }

  GenSet descents(ElemId w, Side side) const;
  /// v <=_L w iff l(w) = l(w v^-1) + l(v); right side via inverses.
  bool weak_leq(ElemId v, ElemId w, Side side) const;

  std::string format(ElemId w) const;
  std::string format(const Word& w) const;
  /// "1" is the identity; tokens split on '*' or whitespace, and a token
  /// that is not a label is split greedily into labels.
  Word parse_word(std::string_view text) const;
  ElemId parse(std::string_view text) const { return from_word(parse_word(text)); }
  int label_index(std::string_view label) const;
  GenSet parse_gens(const std::vector<std::string>& labels) const;
  std::vector<std::string> gen_labels(GenSet s) const;

  /// Bruhat table rebuilt by the plain serial recursion; the parallel build
  /// is compared against this in tests and the benchmark.
  std::vector<std::uint64_t> bruhat_table_serial() const;
  std::vector<std::uint64_t> bruhat_table_parallel() const;
  const std::vector<std::uint64_t>& bruhat_table() const { return bruhat_; }

 private:
  CoxeterSystem() = default;

  CoxeterMatrix matrix_;
  std::vector<int> length_;
  std::vector<Word> words_;
  std::vector<ElemId> right_;
  std::vector<ElemId> left_;
  std::vector<ElemId> inverse_;
  std::size_t stride_ = 0;  // 64-bit words per Bruhat row
  std::vector<std::uint64_t> bruhat_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// D_J (left) or D_J^-1 (right), in id order.
std::vector<ElemId> min_coset_reps(const CoxeterSystem& sys, GenSet J, Side side);
bool in_min_reps(const CoxeterSystem& sys, ElemId w, GenSet J, Side side);

struct DoubleCoset {
  ElemId d;
  GenSet L;  // K ∩ dJd^-1
};
/// One entry per (W_K, W_J) double coset, d the minimal element.
std::vector<DoubleCoset> double_coset_data(const CoxeterSystem& sys, GenSet K, GenSet J);

/// Generators s with l(xs) > l(x) for every x in X.
GenSet pos(const CoxeterSystem& sys, const std::vector<ElemId>& X);

/// Down-closure in the chosen weak order, sorted by id.
std::vector<ElemId> ideal_closure(const CoxeterSystem& sys, const std::vector<ElemId>& gens, Side side);
bool is_weak_ideal(const CoxeterSystem& sys, const std::vector<ElemId>& X, Side side);

/// Longest element of W_K (as an element of W).
ElemId longest_in(const CoxeterSystem& sys, GenSet K);
/// Index t with w^-1 s w = t, or -1 when the conjugate is not a generator.
int conjugate_generator(const CoxeterSystem& sys, ElemId w, int s);

/// W_K enumerated on its own, with elements identified to W by word transport.
struct ParabolicSubsystem {
  GenSet K;
  std::vector<int> gens;  // local index -> parent generator index
  SystemPtr sub;
  std::vector<ElemId> to_parent;    // sub id -> W id
  std::vector<ElemId> from_parent;  // W id -> sub id or -1

  static ParabolicSubsystem make(const CoxeterSystem& parent, GenSet K);
  GenSet to_local(GenSet parent_set) const;
  GenSet to_parent_set(GenSet local) const;
};

}  // namespace wgideal
