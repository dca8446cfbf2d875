#include "saxl/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "saxl/bounds.hpp"
#include "saxl/error.hpp"

namespace saxl {

void GroupSpec::validate() const {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "group dimension must be >= 1");
  for (const auto& m : generators) {
    if (!(m.field() == field)) throw Error(ErrorKind::FieldMismatch, "generator over wrong field");
    if (m.dim() != d) throw Error(ErrorKind::DimensionMismatch, "generator has wrong dimension");
    if (determinant(m) == 0) throw Error(ErrorKind::SingularMatrix, "generator is singular");
  }
  if (scalar_order == 0 || (field.order() - 1) % scalar_order != 0) {
    throw Error(ErrorKind::InvalidArgument, "scalar order must divide q - 1");
  }
  if (known_order) {
    for (const auto& m : generators) {
      if (*known_order % element_order(m) != 0) {
        throw Error(ErrorKind::InvalidArgument, "known order is not a multiple of a generator order");
      }
    }
  }
}

std::uint64_t GroupSpec::vector_count() const {
  unsigned __int128 n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= field.order();
    if (n > static_cast<unsigned __int128>(~std::uint64_t{0})) {
      throw Error(ErrorKind::CapExceeded, "|V| does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(n);
}

std::size_t MatKeyHash::operator()(const std::vector<Elem>& v) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto x : v) {
    h ^= x;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::optional<std::size_t> Enumeration::index_of(const Mat& m) const {
  auto it = index_.find(m.entries());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, bool> Enumeration::insert(Mat m) {
  auto [it, fresh] = index_.try_emplace(m.entries(), static_cast<std::uint32_t>(elements_.size()));
  if (fresh) elements_.push_back(std::move(m));
  return {it->second, fresh};
}

Enumeration enumerate(const GroupSpec& g, std::uint64_t cap) {
  Enumeration e(g.field, g.d);
  e.insert(Mat::identity(g.field, g.d));
  for (std::size_t head = 0; head < e.elements().size(); ++head) {
    for (const auto& gen : g.generators) {
      Mat y = mat_mul(e.elements()[head], gen);
      if (e.insert(std::move(y)).second && e.order() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "group enumeration exceeded cap of " + std::to_string(cap) + " elements");
      }
    }
  }
  return e;
}

std::uint64_t group_order(const GroupSpec& g, std::uint64_t cap) {
  if (g.known_order) return *g.known_order;
  return enumerate(g, cap).order();
}

std::uint64_t element_order(const Mat& m) { return matrix_order(m); }

Mat projective_normalize(const Mat& m) {
  for (auto x : m.entries()) {
    if (x != 0) return x == 1 ? m : mat_scale(m, m.field().inv(x));
  }
  return m;
}

std::uint64_t projective_order(const Mat& m) {
  Mat x = m;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    if (x.as_scalar()) return n;
    x = mat_mul(x, m);
  }
  throw Error(ErrorKind::CapExceeded, "projective order exceeds limit");
}

ProjectiveClassTable projective_classes(const GroupSpec& g, const ClassOptions& opts) {
  const Enumeration G = enumerate(g, opts.cap);

  // H = G / (G cap scalars) by normalised coset representatives, keeping
  // the first lift seen for each.
  Enumeration H(g.field, g.d);
  std::vector<std::size_t> lift;
  for (std::size_t i = 0; i < G.elements().size(); ++i) {
    if (H.insert(projective_normalize(G.elements()[i])).second) lift.push_back(i);
  }

  std::vector<Mat> gens, gens_inv;
  for (const auto& m : g.generators) {
    if (m.as_scalar()) continue;
    gens.push_back(projective_normalize(m));
    gens_inv.push_back(mat_inv(m));
  }

  ProjectiveClassTable table;
  table.group_order = G.order();
  table.h_order = H.order();
  std::vector<bool> seen(H.order(), false);
  for (std::size_t start = 0; start < H.order(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::vector<std::size_t> members{start};
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Mat& x = H.elements()[members[head]];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Mat y = projective_normalize(mat_mul(mat_mul(gens_inv[k], x), gens[k]));
        auto idx = H.index_of(y);
        if (!idx) throw Error(ErrorKind::InvalidArgument, "conjugate left the group");
        if (!seen[*idx]) {
          seen[*idx] = true;
          members.push_back(*idx);
        }
      }
    }
    // Smallest key in the class as representative, for determinism.
    std::size_t best = *std::min_element(members.begin(), members.end(), [&](auto a, auto b) {
      return H.elements()[a].entries() < H.elements()[b].entries();
    });
    ProjectiveClass pc;
    pc.rep = G.elements()[lift[best]];
    pc.size = members.size();
    pc.order = projective_order(pc.rep);
    table.classes.push_back(std::move(pc));
  }
  return table;
}

std::vector<ClassDatum> prime_order_classes(const GroupSpec& g, const ClassOptions& opts) {
  auto table = projective_classes(g, opts);
  std::vector<ProjectiveClass> prime;
  for (auto& c : table.classes) {
    if (is_prime(c.order)) prime.push_back(std::move(c));
  }
  std::sort(prime.begin(), prime.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep.entries() < b.rep.entries();
  });
  std::vector<ClassDatum> out;
  std::map<std::uint64_t, int> letters;
  for (auto& c : prime) {
    ClassDatum cd;
    int letter = letters[c.order]++;
    cd.label = std::to_string(c.order);
    if (letter < 26) {
      cd.label += static_cast<char>('A' + letter);
    } else {
      cd.label += "#" + std::to_string(letter);
    }
    cd.element_order = c.order;
    cd.class_size = c.size;
    cd.is_unipotent = c.order == g.field.characteristic();
    cd.alpha = alpha_of(g.labels.socle, cd.label, c.order);
    if (opts.compute_eigen) cd.eigen = eigen_partition(c.rep, opts.max_ext);
    cd.rep = std::move(c.rep);
    out.push_back(std::move(cd));
  }
  return out;
}

GroupSpec adjoin_scalars(const GroupSpec& g, std::uint64_t z) {
  const std::uint64_t q = g.field.order();
  if (z == 0 || (q - 1) % z != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "scalar order " + std::to_string(z) + " does not divide q - 1 = " + std::to_string(q - 1));
  }
  if (z == 1) return g;
  GroupSpec out = g;
  Elem s = g.field.pow(g.field.primitive(), (q - 1) / z);
  out.generators.push_back(Mat::scalar(g.field, g.d, s));
  out.scalar_order = std::lcm(g.scalar_order, z);
  out.known_order.reset();
  return out;
}

ProductReplacement::ProductReplacement(const GroupSpec& g, std::uint64_t seed, std::size_t slots,
                                       unsigned burn_in)
    : acc_(Mat::identity(g.field, g.d)), rng_(seed) {
  std::vector<Mat> gens = g.generators;
  if (gens.empty()) gens.push_back(Mat::identity(g.field, g.d));
  while (gens.size() < 2) gens.push_back(gens.front());
  slots = std::max(slots, gens.size());
  for (std::size_t i = 0; i < slots; ++i) slots_.push_back(gens[i % gens.size()]);
  for (unsigned i = 0; i < burn_in; ++i) next();
}

Mat ProductReplacement::next() {
  std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
  std::size_t s = pick(rng_);
  std::size_t t = pick(rng_);
  while (t == s) t = pick(rng_);
  bool left = rng_() & 1;
  bool invert = rng_() & 1;
  Mat other = invert ? mat_inv(slots_[t]) : slots_[t];
  slots_[s] = left ? mat_mul(other, slots_[s]) : mat_mul(slots_[s], other);
  acc_ = mat_mul(acc_, slots_[s]);
  return acc_;
}

Mat random_element(const GroupSpec& g, std::uint64_t seed) {
  ProductReplacement pr(g, seed);
  return pr.next();
}

}  // namespace saxl
