#include "wgideal/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>

#include "wgideal/error.hpp"

namespace wgideal {

std::vector<int> GenSet::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
  return out;
}

// ---------------------------------------------------------------------------
// CoxeterMatrix

void CoxeterMatrix::validate() const {
  const auto n = labels.size();
  if (n > 32) throw Error(ErrorCode::InvalidMatrix, "rank above 32 is not supported");
  if (m.size() != n) throw Error(ErrorCode::InvalidMatrix, "matrix size does not match label count");
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) throw Error(ErrorCode::InvalidMatrix, "empty generator label");
    if (labels[i] == "1") throw Error(ErrorCode::InvalidMatrix, "label \"1\" is reserved for the identity");
    for (char c : labels[i]) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        throw Error(ErrorCode::InvalidMatrix, "label \"" + labels[i] + "\" contains a reserved character");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) throw Error(ErrorCode::InvalidMatrix, "duplicate label " + labels[i]);
    }
    if (m[i].size() != n) throw Error(ErrorCode::InvalidMatrix, "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) throw Error(ErrorCode::InvalidMatrix, "diagonal entry must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw Error(ErrorCode::InvalidMatrix, "matrix is not symmetric");
      if (i != j && m[i][j] < 2) throw Error(ErrorCode::InvalidMatrix, "off-diagonal entries must be >= 2");
    }
  }
}

CoxeterMatrix CoxeterMatrix::restricted(GenSet K) const {
  CoxeterMatrix out;
  const auto gens = K.members();
  for (int i : gens) {
    out.labels.push_back(labels[i]);
    std::vector<int> row;
    for (int j : gens) row.push_back(m[i][j]);
    out.m.push_back(std::move(row));
  }
  return out;
}

CoxeterMatrix CoxeterMatrix::from_json(const nlohmann::json& j) {
  CoxeterMatrix out;
  try {
    out.labels = j.at("labels").get<std::vector<std::string>>();
    out.m = j.at("m").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidMatrix, std::string("malformed Coxeter matrix: ") + e.what());
  }
  if (out.labels.empty()) throw Error(ErrorCode::InvalidMatrix, "Coxeter matrix has no generators");
  out.validate();
  return out;
}

CoxeterMatrix CoxeterMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidMatrix, path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json CoxeterMatrix::to_json() const { return {{"labels", labels}, {"m", m}}; }

CoxeterMatrix CoxeterMatrix::dihedral(int mst) {
  return CoxeterMatrix{{"s", "t"}, {{1, mst}, {mst, 1}}};
}

namespace {
CoxeterMatrix linear_diagram(int n, int first_label, int first_bond) {
  CoxeterMatrix out;
  for (int i = 0; i < n; ++i) {
    out.labels.push_back("s" + std::to_string(first_label + i));
    out.m.emplace_back(n, 2);
    out.m[i][i] = 1;
  }
  for (int i = 0; i + 1 < n; ++i) out.m[i][i + 1] = out.m[i + 1][i] = 3;
  if (n >= 2) out.m[0][1] = out.m[1][0] = first_bond;
  return out;
}
}  // namespace

CoxeterMatrix CoxeterMatrix::type_a(int n) { return linear_diagram(n, 1, 3); }
CoxeterMatrix CoxeterMatrix::type_b(int n) { return linear_diagram(n, 0, 4); }

// ---------------------------------------------------------------------------
// Coset enumeration (HLT with coincidence processing).
//
// Every generator is an involution, so one table column serves as its own
// inverse column: setting c.s = d always also sets d.s = c, and the relators
// s^2 hold by construction. Only the braid relators (st)^m are scanned.

namespace {

class CosetTable {
 public:
  CosetTable(int rank, std::size_t cap) : rank_(rank), cap_(cap) { new_coset(); }

  std::size_t total() const { return parent_.size(); }
  bool alive(int c) const { return parent_[c] == c; }
  int entry(int c, int s) const { return table_[static_cast<std::size_t>(c) * rank_ + s]; }
  void set(int c, int s, int d) { table_[static_cast<std::size_t>(c) * rank_ + s] = d; }

  int define(int c, int s) {
    const int d = new_coset();
    set(c, s, d);
    set(d, s, c);
    return d;
  }

  void scan_and_fill(int alpha, const Word& rel) {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(rel.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, rel[i]) >= 0) f = entry(f, rel[i++]);
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && entry(b, rel[j]) >= 0) b = entry(b, rel[j--]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, rel[i], b);
        set(b, rel[i], f);
        return;
      }
      define(f, rel[i]);
    }
  }

  std::size_t live_count() const { return live_; }

 private:
  int new_coset() {
    if (live_ >= cap_) {
      throw Error(ErrorCode::CapExceeded,
                  "coset enumeration passed " + std::to_string(cap_) + " cosets (group infinite or too large)");
    }
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.insert(table_.end(), static_cast<std::size_t>(rank_), -1);
    ++live_;
    return c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int g = queue.front();
      queue.pop_front();
      for (int s = 0; s < rank_; ++s) {
        const int d = entry(g, s);
        if (d < 0) continue;
        if (entry(d, s) == g) set(d, s, -1);
        const int mu = rep(g);
        const int nu = rep(d);
        if (entry(mu, s) >= 0) {
          merge(nu, entry(mu, s), queue);
        } else if (entry(nu, s) >= 0) {
          merge(mu, entry(nu, s), queue);
        } else {
          set(mu, s, nu);
          set(nu, s, mu);
        }
      }
    }
  }

  int rank_;
  std::size_t cap_;
  std::size_t live_ = 0;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

std::shared_ptr<const CoxeterSystem> CoxeterSystem::enumerate(const CoxeterMatrix& matrix, std::size_t cap) {
  matrix.validate();
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "cap must be positive");
  const int rank = matrix.rank();

  std::vector<Word> relators;
  for (int s = 0; s < rank; ++s) {
    for (int t = s + 1; t < rank; ++t) {
      Word r;
      for (int k = 0; k < matrix.m[s][t]; ++k) {
        r.push_back(s);
        r.push_back(t);
      }
      relators.push_back(std::move(r));
    }
  }

  CosetTable table(rank, cap);
  for (std::size_t a = 0; a < table.total(); ++a) {
    const int alpha = static_cast<int>(a);
    if (!table.alive(alpha)) continue;
    for (const auto& r : relators) {
      table.scan_and_fill(alpha, r);
      if (!table.alive(alpha)) break;
    }
    if (!table.alive(alpha)) continue;
    for (int s = 0; s < rank; ++s) {
      if (table.entry(alpha, s) < 0) table.define(alpha, s);
    }
  }

  // Relabel live cosets by BFS over right multiplication, generators in
  // index order; the first word reaching each coset is its ShortLex minimum.
  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  sys->matrix_ = matrix;
  const std::size_t n = table.live_count();
  std::vector<int> id_of(table.total(), -1);
  std::vector<int> coset_of;
  coset_of.reserve(n);
  id_of[0] = 0;
  coset_of.push_back(0);
  sys->words_.emplace_back();
  sys->length_.push_back(0);
  for (std::size_t head = 0; head < coset_of.size(); ++head) {
    const int c = coset_of[head];
    for (int s = 0; s < rank; ++s) {
      const int d = table.entry(c, s);
      if (d < 0 || !table.alive(d)) throw Error(ErrorCode::InvalidMatrix, "coset table incomplete");
      if (id_of[d] >= 0) continue;
      id_of[d] = static_cast<int>(coset_of.size());
      coset_of.push_back(d);
      Word w = sys->words_[head];
      w.push_back(s);
      sys->words_.push_back(std::move(w));
      sys->length_.push_back(sys->length_[head] + 1);
    }
  }
  if (coset_of.size() != n) throw Error(ErrorCode::InvalidMatrix, "coset table is not connected");

  sys->right_.assign(n * rank, -1);
  for (std::size_t w = 0; w < n; ++w) {
    for (int s = 0; s < rank; ++s) sys->right_[w * rank + s] = id_of[table.entry(coset_of[w], s)];
  }

  // s(w' t) = (s w') t, where w' is w with its last letter t removed.
  sys->left_.assign(n * rank, -1);
  for (int s = 0; s < rank; ++s) sys->left_[s] = sys->right_[s];
  for (std::size_t w = 1; w < n; ++w) {
    const Word& word = sys->words_[w];
    const int t = word.back();
    const ElemId prefix = sys->right(static_cast<ElemId>(w), t);
    for (int s = 0; s < rank; ++s) sys->left_[w * rank + s] = sys->right(sys->left(prefix, s), t);
  }

  // (w' t)^-1 = t w'^-1
  sys->inverse_.assign(n, 0);
  for (std::size_t w = 1; w < n; ++w) {
    const int t = sys->words_[w].back();
    const ElemId prefix = sys->right(static_cast<ElemId>(w), t);
    sys->inverse_[w] = sys->left(sys->inverse_[prefix], t);
  }

  sys->stride_ = (n + 63) / 64;
  sys->bruhat_ = sys->bruhat_table_parallel();
  return sys;
}

// ---------------------------------------------------------------------------
// Bruhat order.
//
// With s the first letter of w (so sw < w), u <= w iff u <= sw or su <= sw
// with su < u. Hence row(w) = row(sw) ∪ s·row(sw).

namespace {

void fill_bruhat_row(const CoxeterSystem& sys, std::size_t stride, std::vector<std::uint64_t>& rows, ElemId w) {
  std::uint64_t* row = rows.data() + static_cast<std::size_t>(w) * stride;
  if (w == 0) {
    row[0] = 1;
    return;
  }
  const int s = sys.word(w).front();
  const ElemId sw = sys.left(w, s);
  const std::uint64_t* prev = rows.data() + static_cast<std::size_t>(sw) * stride;
  std::copy(prev, prev + stride, row);
  for (std::size_t blk = 0; blk < stride; ++blk) {
    for (std::uint64_t bits = prev[blk]; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<ElemId>(blk * 64 + __builtin_ctzll(bits));
      const ElemId sv = sys.left(v, s);
      row[sv >> 6] |= std::uint64_t{1} << (sv & 63);
    }
  }
}

}  // namespace

std::vector<std::uint64_t> CoxeterSystem::bruhat_table_serial() const {
  std::vector<std::uint64_t> rows(size() * stride_, 0);
  for (std::size_t w = 0; w < size(); ++w) fill_bruhat_row(*this, stride_, rows, static_cast<ElemId>(w));
  return rows;
}

std::vector<std::uint64_t> CoxeterSystem::bruhat_table_parallel() const {
  std::vector<std::uint64_t> rows(size() * stride_, 0);
  // Rows of one length depend only on rows of the previous length.
  std::size_t begin = 0;
  while (begin < size()) {
    std::size_t end = begin;
    while (end < size() && length_[end] == length_[begin]) ++end;
    const auto lo = static_cast<std::int64_t>(begin);
    const auto hi = static_cast<std::int64_t>(end);
#pragma omp parallel for schedule(static)
    for (std::int64_t w = lo; w < hi; ++w) fill_bruhat_row(*this, stride_, rows, static_cast<ElemId>(w));
    begin = end;
  }
  return rows;
}

// ---------------------------------------------------------------------------

ElemId CoxeterSystem::mul(ElemId a, ElemId b) const {
  ElemId r = a;
  for (int s : words_[b]) r = right(r, s);
  return r;
}

ElemId CoxeterSystem::from_word(const Word& w) const {
  ElemId r = 0;
  for (int s : w) {
    if (s < 0 || s >= rank()) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    r = right(r, s);
  }
  return r;
}

GenSet CoxeterSystem::descents(ElemId w, Side side) const {
  GenSet out;
  for (int s = 0; s < rank(); ++s) {
    const ElemId v = side == Side::Left ? left(w, s) : right(w, s);
    if (length_[v] < length_[w]) out.insert(s);
  }
  return out;
}

bool CoxeterSystem::weak_leq(ElemId v, ElemId w, Side side) const {
  if (side == Side::Right) return weak_leq(inverse(v), inverse(w), Side::Left);
  return length_[w] == length_[mul(w, inverse(v))] + length_[v];
}

std::string CoxeterSystem::format(const Word& w) const {
  if (w.empty()) return "1";
  const bool compact =
      std::all_of(matrix_.labels.begin(), matrix_.labels.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) out += '*';
    out += matrix_.labels[w[i]];
  }
  return out;
}

std::string CoxeterSystem::format(ElemId w) const { return format(words_[w]); }

int CoxeterSystem::label_index(std::string_view label) const {
  for (int i = 0; i < rank(); ++i) {
    if (matrix_.labels[i] == label) return i;
  }
  return -1;
}

Word CoxeterSystem::parse_word(std::string_view text) const {
  Word out;
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '*') ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw Error(ErrorCode::Parse, "empty word");
  if (tokens.size() == 1 && tokens[0] == "1") return out;
  for (auto tok : tokens) {
    if (tok == "1") continue;
    const int direct = label_index(tok);
    if (direct >= 0) {
      out.push_back(direct);
      continue;
    }
    // Greedy longest-label split.
    std::size_t p = 0;
    while (p < tok.size()) {
      int best = -1;
      std::size_t best_len = 0;
      for (int g = 0; g < rank(); ++g) {
        const auto& l = matrix_.labels[g];
        if (l.size() > best_len && tok.substr(p, l.size()) == l) {
          best = g;
          best_len = l.size();
        }
      }
      if (best < 0) throw Error(ErrorCode::Parse, "unknown generator in \"" + std::string(tok) + "\"");
      out.push_back(best);
      p += best_len;
    }
  }
  return out;
}

GenSet CoxeterSystem::parse_gens(const std::vector<std::string>& labels) const {
  GenSet out;
  for (const auto& l : labels) {
    const int g = label_index(l);
    if (g < 0) throw Error(ErrorCode::Parse, "unknown generator label \"" + l + "\"");
    out.insert(g);
  }
  return out;
}

std::vector<std::string> CoxeterSystem::gen_labels(GenSet s) const {
  std::vector<std::string> out;
  for (int g : s.members()) out.push_back(matrix_.labels[g]);
  return out;
}

// ---------------------------------------------------------------------------

bool in_min_reps(const CoxeterSystem& sys, ElemId w, GenSet J, Side side) {
  // Left: w in D_J iff no right descent lies in J. Right: D_J^-1.
  const GenSet d = sys.descents(w, side == Side::Left ? Side::Right : Side::Left);
  return (d & J).empty();
}

std::vector<ElemId> min_coset_reps(const CoxeterSystem& sys, GenSet J, Side side) {
  std::vector<ElemId> out;
  for (std::size_t w = 0; w < sys.size(); ++w) {
    if (in_min_reps(sys, static_cast<ElemId>(w), J, side)) out.push_back(static_cast<ElemId>(w));
  }
  return out;
}

int conjugate_generator(const CoxeterSystem& sys, ElemId w, int s) {
  const ElemId sw = sys.left(w, s);
  for (int t = 0; t < sys.rank(); ++t) {
    if (sys.right(w, t) == sw) return t;
  }
  return -1;
}

std::vector<DoubleCoset> double_coset_data(const CoxeterSystem& sys, GenSet K, GenSet J) {
  std::vector<DoubleCoset> out;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto d = static_cast<ElemId>(i);
    if (!in_min_reps(sys, d, J, Side::Left) || !in_min_reps(sys, d, K, Side::Right)) continue;
    // For d in D_{K,J}, W_K ∩ dW_Jd^-1 is generated by the s in K with
    // d^-1 s d in J.
    GenSet L;
    for (int s : K.members()) {
      const int t = conjugate_generator(sys, d, s);
      if (t >= 0 && J.contains(t)) L.insert(s);
    }
    out.push_back({d, L});
  }
  return out;
}

GenSet pos(const CoxeterSystem& sys, const std::vector<ElemId>& X) {
  if (X.empty()) throw Error(ErrorCode::InvalidArgument, "Pos of an empty set");
  GenSet out = GenSet::full(sys.rank());
  for (ElemId x : X) out = out - sys.descents(x, Side::Right);
  return out;
}

std::vector<ElemId> ideal_closure(const CoxeterSystem& sys, const std::vector<ElemId>& gens, Side side) {
  std::vector<char> seen(sys.size(), 0);
  std::vector<ElemId> stack;
  for (ElemId g : gens) {
    if (g < 0 || static_cast<std::size_t>(g) >= sys.size()) throw Error(ErrorCode::InvalidArgument, "bad element id");
    if (!seen[g]) {
      seen[g] = 1;
      stack.push_back(g);
    }
  }
  // Lower covers in the left weak order are sw with s a left descent.
  while (!stack.empty()) {
    const ElemId w = stack.back();
    stack.pop_back();
    for (int s : sys.descents(w, side).members()) {
      const ElemId v = side == Side::Left ? sys.left(w, s) : sys.right(w, s);
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<ElemId> out;
  for (std::size_t w = 0; w < sys.size(); ++w) {
    if (seen[w]) out.push_back(static_cast<ElemId>(w));
  }
  return out;
}

bool is_weak_ideal(const CoxeterSystem& sys, const std::vector<ElemId>& X, Side side) {
  if (X.empty()) return false;
  std::vector<char> in(sys.size(), 0);
  for (ElemId x : X) in[x] = 1;
  for (ElemId w : X) {
    for (int s : sys.descents(w, side).members()) {
      if (!in[side == Side::Left ? sys.left(w, s) : sys.right(w, s)]) return false;
    }
  }
  return true;
}

ElemId longest_in(const CoxeterSystem& sys, GenSet K) {
  // Climb: keep multiplying by any generator of K that lengthens.
  ElemId w = 0;
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : K.members()) {
      const ElemId v = sys.right(w, s);
      if (sys.length(v) > sys.length(w)) {
        w = v;
        grew = true;
      }
    }
  }
  return w;
}

ParabolicSubsystem ParabolicSubsystem::make(const CoxeterSystem& parent, GenSet K) {
  ParabolicSubsystem out;
  out.K = K;
  out.gens = K.members();
  out.sub = CoxeterSystem::enumerate(parent.matrix().restricted(K));
  out.to_parent.resize(out.sub->size());
  out.from_parent.assign(parent.size(), -1);
  for (std::size_t v = 0; v < out.sub->size(); ++v) {
    Word transported;
    for (int g : out.sub->word(static_cast<ElemId>(v))) transported.push_back(out.gens[g]);
    const ElemId w = parent.from_word(transported);
    if (parent.length(w) != out.sub->length(static_cast<ElemId>(v))) {
      throw Error(ErrorCode::InvalidMatrix, "parabolic embedding does not preserve length");
    }
    out.to_parent[v] = w;
    out.from_parent[w] = static_cast<ElemId>(v);
  }
  return out;
}

GenSet ParabolicSubsystem::to_local(GenSet parent_set) const {
  GenSet out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (parent_set.contains(gens[i])) out.insert(static_cast<int>(i));
  }
  return out;
}

GenSet ParabolicSubsystem::to_parent_set(GenSet local) const {
  GenSet out;
  for (int i : local.members()) out.insert(gens[i]);
  return out;
}

}  // namespace wgideal
