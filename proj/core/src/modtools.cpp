#include "saxl/modtools.hpp"

#include <algorithm>
#include <deque>

#include "saxl/eigen.hpp"
#include "saxl/error.hpp"

namespace saxl {

GroupSpec ModuleAction::as_group() const {
  GroupSpec g = group;
  g.d = dim();
  g.generators = generators;
  return g;
}

void ModuleAction::validate() const {
  if (basis.empty()) throw Error(ErrorKind::InvalidArgument, "module has empty basis");
  if (generators.size() != group.generators.size()) {
    throw Error(ErrorKind::DimensionMismatch, "generator count differs from ambient group");
  }
  for (const auto& b : basis) {
    if (b.dim() != group.d) throw Error(ErrorKind::DimensionMismatch, "basis vector length");
  }
  for (const auto& m : generators) {
    if (m.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "restricted generator size");
    if (determinant(m) == 0) throw Error(ErrorKind::SingularMatrix, "restricted generator");
  }
}

ModuleAction natural_module(const GroupSpec& g) {
  ModuleAction m;
  m.group = g;
  for (std::size_t i = 0; i < g.d; ++i) m.basis.push_back(Vec::unit(g.field, g.d, i));
  m.generators = g.generators;
  return m;
}

Mat permutation_matrix(const Permutation& perm, const Field& field) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  Mat m(field, n, std::vector<Elem>(n * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) {
      throw Error(ErrorKind::InvalidArgument, "not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[perm[i]] = true;
    m.set(i, perm[i], 1);
  }
  return m;
}

ModuleAction perm_module(std::span<const Permutation> perms, const Field& field) {
  if (perms.empty()) throw Error(ErrorKind::InvalidArgument, "no permutations");
  GroupSpec g;
  g.field = field;
  g.d = perms[0].size();
  for (const auto& p : perms) {
    if (p.size() != g.d) throw Error(ErrorKind::InvalidArgument, "inconsistent permutation degrees");
    g.generators.push_back(permutation_matrix(p, field));
  }
  return natural_module(g);
}

namespace {

Mat restrict_to(const Field& f, const Echelon& sub, const Mat& g) {
  const std::size_t k = sub.rank();
  Mat r(f, k, std::vector<Elem>(k * k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    Vec img = Vec(f, sub.rows[i]) * g;
    auto c = coordinates_in(f, sub, img.coords());
    if (!c) throw Error(ErrorKind::InvalidArgument, "subspace is not invariant");
    for (std::size_t j = 0; j < k; ++j) r.set(i, j, (*c)[j]);
  }
  return r;
}

Echelon echelon_of(const Field& f, const std::vector<Vec>& vs, std::size_t n) {
  std::vector<std::vector<Elem>> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.push_back(v.coords());
  return rref(f, std::move(rows), n);
}

std::vector<Vec> to_vecs(const Field& f, const Echelon& e) {
  std::vector<Vec> out;
  for (const auto& r : e.rows) out.emplace_back(f, r);
  return out;
}

}  // namespace

ModuleAction submodule(const ModuleAction& m, const std::vector<Vec>& sub) {
  const Field& f = m.field();
  Echelon e = echelon_of(f, sub, m.dim());
  if (e.rank() == 0) throw Error(ErrorKind::InvalidArgument, "zero submodule");
  ModuleAction out;
  out.group = m.group;
  for (const auto& row : e.rows) {
    // module coordinates -> ambient coordinates
    Vec amb = Vec::zero(f, m.group.d);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) amb = amb + m.basis[j].scaled(row[j]);
    }
    out.basis.push_back(std::move(amb));
  }
  Echelon amb_e = echelon_of(f, out.basis, m.group.d);
  out.basis = to_vecs(f, amb_e);
  for (const auto& g : m.group.generators) out.generators.push_back(restrict_to(f, amb_e, g));
  return out;
}

ModuleAction quotient(const ModuleAction& m, const std::vector<Vec>& sub) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  Echelon e = echelon_of(f, sub, n);
  if (e.rank() == 0 || e.rank() == n) throw Error(ErrorKind::InvalidArgument, "improper subspace");
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  const std::size_t k = free.size();
  GroupSpec g = m.group;
  g.d = k;
  g.generators.clear();
  for (const auto& gen : m.generators) {
    Mat r(f, k, std::vector<Elem>(k * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Elem> img = (Vec::unit(f, n, free[i]) * gen).coords();
      img = reduce_against(f, e, std::move(img));
      for (std::size_t j = 0; j < k; ++j) r.set(i, j, img[free[j]]);
    }
    g.generators.push_back(std::move(r));
  }
  return natural_module(g);
}

ModuleAction deleted_module(const ModuleAction& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "permutation module of degree < 2");
  std::vector<Vec> sub;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vec v = Vec::unit(f, n, i);
    v.set(n - 1, f.neg(1));
    sub.push_back(std::move(v));
  }
  return submodule(m, sub);
}

std::vector<Vec> spin(const Vec& seed, std::span<const Mat> generators) {
  const Field& f = seed.field();
  const std::size_t n = seed.dim();
  if (seed.is_zero()) throw Error(ErrorKind::InvalidArgument, "spin seed is zero");
  // semi-echelon: each new row is reduced against the earlier ones
  Echelon semi;
  std::deque<Vec> pending{seed};
  auto add = [&](const Vec& v) -> bool {
    auto r = reduce_against(f, semi, v.coords());
    std::size_t piv = 0;
    while (piv < n && r[piv] == 0) ++piv;
    if (piv == n) return false;
    Elem s = f.inv(r[piv]);
    for (auto& x : r) x = f.mul(x, s);
    semi.rows.push_back(std::move(r));
    semi.pivots.push_back(piv);
    return true;
  };
  add(seed);
  for (std::size_t next = 0; next < semi.rows.size() && semi.rank() < n; ++next) {
    Vec b(f, semi.rows[next]);
    for (const auto& g : generators) add(b * g);
  }
  return to_vecs(f, rref(f, semi.rows, n));
}

std::vector<Vec> spin(const Vec& seed, const ModuleAction& m) { return spin(seed, m.generators); }

Mat random_algebra_element(std::span<const Mat> generators, std::mt19937_64& rng) {
  const Field& f = generators.front().field();
  const std::size_t n = generators.front().dim();
  std::uniform_int_distribution<std::size_t> pick_gen(0, generators.size() - 1);
  std::uniform_int_distribution<int> terms(3, 6), len(1, 8);
  std::uniform_int_distribution<std::uint64_t> coeff(1, f.order() - 1);
  Mat a(f, n, std::vector<Elem>(n * n, 0));
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Mat w = generators[pick_gen(rng)];
    const int l = len(rng);
    for (int j = 1; j < l; ++j) w = w * generators[pick_gen(rng)];
    a = mat_add(a, mat_scale(w, static_cast<Elem>(coeff(rng))));
  }
  return a;
}

namespace {

std::vector<Mat> transposes(std::span<const Mat> gens) {
  std::vector<Mat> out;
  for (const auto& g : gens) out.push_back(g.transpose());
  return out;
}

// Annihilator in V of a subspace of the dual.
std::vector<Vec> annihilator(const Field& f, const std::vector<Vec>& u, std::size_t n) {
  Mat cols(f, n, std::vector<Elem>(n * n, 0));
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) cols.set(i, j, u[j][i]);
  }
  return left_kernel(cols);
}

// Candidate singular elements from one random algebra element: A itself and,
// for small fields, A - lambda for every nonzero lambda.
std::vector<Mat> singular_shifts(const Mat& a) {
  const Field& f = a.field();
  std::vector<Mat> out;
  if (determinant(a) == 0) out.push_back(a);
  if (f.order() <= 32) {
    for (Elem l = 1; l < f.order(); ++l) {
      Mat s = mat_sub(a, Mat::scalar(f, a.dim(), l));
      if (determinant(s) == 0) out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

std::vector<Vec> find_submodule(const ModuleAction& m, unsigned attempts, std::uint64_t seed) {
  const std::size_t n = m.dim();
  if (n <= 1) return {};
  const Field& f = m.field();
  std::mt19937_64 rng(seed);
  const auto dual = transposes(m.generators);
  for (unsigned a = 0; a < attempts; ++a) {
    Mat alg = random_algebra_element(m.generators, rng);
    for (const auto& s : singular_shifts(alg)) {
      auto ker = left_kernel(s);
      for (std::size_t i = 0; i < std::min<std::size_t>(ker.size(), 3); ++i) {
        auto w = spin(ker[i], m.generators);
        if (w.size() < n) return w;
      }
      auto kert = left_kernel(s.transpose());
      for (std::size_t i = 0; i < std::min<std::size_t>(kert.size(), 3); ++i) {
        auto u = spin(kert[i], dual);
        if (u.size() < n) return annihilator(f, u, n);
      }
    }
  }
  return {};
}

bool spin_irreducible(const ModuleAction& m, unsigned seeds, std::uint64_t seed) {
  const std::size_t n = m.dim();
  if (n <= 1) return true;
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  const auto dual = transposes(m.generators);
  unsigned tested = 0;
  for (unsigned a = 0; a < 4 * seeds && tested < seeds; ++a) {
    Mat alg = random_algebra_element(m.generators, rng);
    for (const auto& s : singular_shifts(alg)) {
      ++tested;
      for (const auto& v : left_kernel(s)) {
        if (spin(v, m.generators).size() < n) return false;
      }
      for (const auto& v : left_kernel(s.transpose())) {
        if (spin(v, dual).size() < n) return false;
      }
    }
  }
  return true;
}

SplitResult split(const ModuleAction& m, unsigned attempts, std::uint64_t seed) {
  if (attempts < 1) throw Error(ErrorKind::InvalidArgument, "attempts must be >= 1");
  SplitResult res;
  std::deque<ModuleAction> work{m};
  std::uint64_t s = seed;
  while (!work.empty()) {
    ModuleAction x = std::move(work.front());
    work.pop_front();
    auto sub = find_submodule(x, attempts, ++s);
    if (sub.empty()) {
      if (!spin_irreducible(x, 20, s)) res.complete = false;
      res.constituents.push_back(std::move(x));
      continue;
    }
    work.push_back(submodule(x, sub));
    work.push_back(quotient(x, sub));
  }
  std::stable_sort(res.constituents.begin(), res.constituents.end(),
                   [](const ModuleAction& a, const ModuleAction& b) { return a.dim() > b.dim(); });
  return res;
}

ModuleAction scalar_extend(const ModuleAction& m, unsigned e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  if (e == 1) return m;
  FieldEmbedding emb(m.field(), extension_field(m.field(), e));
  ModuleAction out;
  out.group = m.group;
  out.group.field = emb.target();
  for (auto& g : out.group.generators) g = emb(g);
  for (const auto& b : m.basis) out.basis.push_back(emb(b));
  for (const auto& g : m.generators) out.generators.push_back(emb(g));
  return out;
}

ModuleAction exterior_square(const ModuleAction& m) {
  const std::size_t d = m.dim();
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "exterior square needs dimension >= 2");
  const Field& f = m.field();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  }
  const std::size_t n = pairs.size();
  GroupSpec g;
  g.field = f;
  g.d = n;
  g.labels = m.group.labels;
  for (const auto& a : m.generators) {
    Mat w = Mat::identity(f, n);
    for (std::size_t r = 0; r < n; ++r) {
      auto [i, j] = pairs[r];
      for (std::size_t c = 0; c < n; ++c) {
        auto [k, l] = pairs[c];
        w.set(r, c, f.sub(f.mul(a(i, k), a(j, l)), f.mul(a(i, l), a(j, k))));
      }
    }
    g.generators.push_back(std::move(w));
  }
  return natural_module(g);
}

}  // namespace saxl
