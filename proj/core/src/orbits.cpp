#include "saxl/orbits.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "saxl/eigen.hpp"
#include "saxl/error.hpp"

namespace saxl {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::False:
      return "false";
    case Tri::True:
      return "true";
    case Tri::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::uint64_t BitSet::count() const {
  std::uint64_t c = 0;
  for (auto w : w_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

LinearAction::LinearAction(const Field& field, std::size_t d, std::span<const Mat> generators)
    : f_(field), d_(d), q_(field.order()), gens_(generators.begin(), generators.end()) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero-dimensional action");
  size_ = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (size_ > (std::uint64_t{1} << 62) / q_) {
      throw Error(ErrorKind::CapExceeded, "vector space too large to encode");
    }
    size_ *= q_;
  }
  for (const auto& g : gens_) {
    if (g.dim() != d || !(g.field() == field)) {
      throw Error(ErrorKind::DimensionMismatch, "generator does not act on this space");
    }
  }
  if (f_.characteristic() == 2) {
    xor_ = true;
    const unsigned bits = static_cast<unsigned>(d * f_.degree());
    chunks_ = (bits + 7) / 8;
    xor_tables_.resize(gens_.size());
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      // images of single bits, then all bytes by linearity
      std::vector<std::uint64_t> bit_img(bits);
      for (unsigned b = 0; b < bits; ++b) bit_img[b] = encode(decode(std::uint64_t{1} << b) * gens_[g]);
      auto& t = xor_tables_[g];
      t.assign(chunks_ * 256, 0);
      for (std::size_t c = 0; c < chunks_; ++c) {
        for (unsigned byte = 1; byte < 256; ++byte) {
          unsigned low = std::countr_zero(byte);
          std::size_t bit = c * 8 + low;
          std::uint64_t img = bit < bits ? bit_img[bit] : 0;
          t[c * 256 + byte] = t[c * 256 + (byte & (byte - 1))] ^ img;
        }
      }
    }
  }
}

std::uint64_t LinearAction::encode(const Vec& v) const {
  std::uint64_t x = 0;
  for (std::size_t i = d_; i-- > 0;) x = x * q_ + v[i];
  return x;
}

Vec LinearAction::decode(std::uint64_t x) const {
  std::vector<Elem> c(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    c[i] = static_cast<Elem>(x % q_);
    x /= q_;
  }
  return Vec(f_, std::move(c));
}

std::uint64_t LinearAction::apply(std::uint64_t v, std::size_t gen) const {
  if (xor_) {
    const auto& t = xor_tables_[gen];
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c, v >>= 8) out ^= t[c * 256 + (v & 0xFF)];
    return out;
  }
  const Mat& g = gens_[gen];
  Elem in[64];
  Elem out[64] = {};
  for (std::size_t i = 0; i < d_; ++i) {
    in[i] = static_cast<Elem>(v % q_);
    v /= q_;
  }
  for (std::size_t i = 0; i < d_; ++i) {
    if (in[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) out[j] = f_.add(out[j], f_.mul(in[i], g(i, j)));
  }
  std::uint64_t x = 0;
  for (std::size_t i = d_; i-- > 0;) x = x * q_ + out[i];
  return x;
}

std::uint64_t LinearAction::add(std::uint64_t a, std::uint64_t b) const {
  if (xor_) return a ^ b;
  std::uint64_t x = 0, m = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    x += m * f_.add(static_cast<Elem>(a % q_), static_cast<Elem>(b % q_));
    a /= q_;
    b /= q_;
    m *= q_;
  }
  return x;
}

std::uint64_t LinearAction::sub(std::uint64_t a, std::uint64_t b) const {
  if (xor_) return a ^ b;
  std::uint64_t x = 0, m = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    x += m * f_.sub(static_cast<Elem>(a % q_), static_cast<Elem>(b % q_));
    a /= q_;
    b /= q_;
    m *= q_;
  }
  return x;
}

std::uint64_t module_group_order(const ModuleAction& m, std::uint64_t cap) {
  return group_order(m.group, cap);
}

namespace {

void check_dim(const LinearAction& act) {
  if (act.dim() > 64) throw Error(ErrorKind::CapExceeded, "dimension above 64");
}

}  // namespace

OrbitSummary all_orbits(const ModuleAction& m, const OrbitOptions& opts) {
  LinearAction act(m);
  check_dim(act);
  if (act.size() > opts.vector_cap) {
    throw Error(ErrorKind::CapExceeded, "|V| = " + std::to_string(act.size()) + " exceeds cap " +
                                            std::to_string(opts.vector_cap));
  }
  OrbitSummary s;
  s.total_vectors = act.size();
  s.group_order = module_group_order(m, opts.group_cap);
  BitSet seen(act.size());
  if (opts.keep_regular_mask) s.regular_mask.emplace(act.size());
  std::vector<std::uint64_t> orbit;
  const std::size_t ngen = act.generator_count();
  for (std::uint64_t v = 0; v < act.size(); ++v) {
    if (seen.test(v)) continue;
    orbit.clear();
    orbit.push_back(v);
    seen.set(v);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t g = 0; g < ngen; ++g) {
        std::uint64_t w = act.apply(orbit[i], g);
        if (!seen.test(w)) {
          seen.set(w);
          orbit.push_back(w);
        }
      }
    }
    const std::uint64_t sz = orbit.size();
    if (s.group_order % sz != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "orbit size " + std::to_string(sz) + " does not divide |G|");
    }
    ++s.orbit_count;
    ++s.size_histogram[sz];
    if (sz == s.group_order) {
      ++s.regular_count;
      s.regular_reps.push_back(v);
      if (s.regular_mask) {
        for (auto w : orbit) s.regular_mask->set(w);
      }
    }
  }
  return s;
}

OrbitProbe probe_orbit(const LinearAction& act, std::uint64_t v, std::uint64_t limit) {
  std::unordered_set<std::uint64_t> seen{v};
  std::vector<std::uint64_t> stack{v};
  OrbitProbe p{1, v};
  while (!stack.empty()) {
    std::uint64_t x = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < act.generator_count(); ++g) {
      std::uint64_t w = act.apply(x, g);
      if (seen.insert(w).second) {
        p.min = std::min(p.min, w);
        if (seen.size() > limit) {
          p.size = limit + 1;
          return p;
        }
        stack.push_back(w);
      }
    }
  }
  p.size = seen.size();
  return p;
}

SampleResult regular_sample(const ModuleAction& m, std::uint64_t target, std::uint64_t budget,
                            std::uint64_t seed, std::uint64_t group_cap) {
  LinearAction act(m);
  check_dim(act);
  const std::uint64_t order = module_group_order(m, group_cap);
  SampleResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, act.size() - 1);
  std::unordered_set<std::uint64_t> found;
  while (r.reps.size() < target && r.trials < budget) {
    ++r.trials;
    std::uint64_t v = pick(rng);
    if (order > act.size()) continue;
    OrbitProbe p = probe_orbit(act, v, order);
    if (p.size > order) throw Error(ErrorKind::InvalidArgument, "orbit larger than |G|");
    if (p.size == order && found.insert(p.min).second) r.reps.push_back(p.min);
  }
  std::sort(r.reps.begin(), r.reps.end());
  r.reached_target = r.reps.size() >= target;
  return r;
}

bool stabiliser_is_trivial(const Vec& v, const ModuleAction& m, std::uint64_t group_cap) {
  LinearAction act(m);
  const std::uint64_t order = module_group_order(m, group_cap);
  if (order > act.size()) return false;
  return probe_orbit(act, act.encode(v), order).size == order;
}

Tri has_base2_affine(const ModuleAction& m, const OrbitOptions& opts, std::uint64_t sample_budget,
                     std::uint64_t seed) {
  const std::uint64_t order = module_group_order(m, opts.group_cap);
  if (order == 1) return Tri::False;
  LinearAction act(m);
  if (order > act.size()) return Tri::False;
  if (act.size() <= opts.vector_cap) {
    return all_orbits(m, opts).regular_count > 0 ? Tri::True : Tri::False;
  }
  return regular_sample(m, 1, sample_budget, seed, opts.group_cap).reached_target ? Tri::True
                                                                                   : Tri::Unknown;
}

std::uint64_t pointwise_stabiliser_order(const ModuleAction& m, std::span<const Vec> points,
                                         std::uint64_t group_cap) {
  Enumeration e = enumerate(m.group, group_cap);
  const Field& f = m.field();
  std::uint64_t count = 0;
  for (const auto& g : e.elements()) {
    bool fixes = true;
    for (const auto& p : points) {
      // p is in module coordinates; lift to ambient, act, compare
      Vec amb = Vec::zero(f, m.group.d);
      for (std::size_t j = 0; j < p.dim(); ++j) {
        if (p[j] != 0) amb = amb + m.basis[j].scaled(p[j]);
      }
      if (!(amb * g == amb)) {
        fixes = false;
        break;
      }
    }
    if (fixes) ++count;
  }
  return count;
}

BaseResult base_blowdown(const ModuleAction& m, std::span<const Vec> base_ext,
                         std::span<const Elem> eta, std::uint64_t group_cap) {
  const Field& base = m.field();
  if (base_ext.empty()) throw Error(ErrorKind::InvalidArgument, "empty base");
  const Field& ext = base_ext.front().field();
  if (ext.characteristic() != base.characteristic() || ext.degree() % base.degree() != 0) {
    throw Error(ErrorKind::FieldMismatch, "base is not over an extension of the module field");
  }
  const unsigned i = ext.degree() / base.degree();
  if (eta.size() != i) throw Error(ErrorKind::InvalidArgument, "eta must have i elements");
  BaseResult res;
  if (i == 1) {
    res.base.assign(base_ext.begin(), base_ext.end());
  } else {
    if (ext.order() > (std::uint64_t{1} << 20)) {
      throw Error(ErrorKind::CapExceeded, "extension field too large for coordinate table");
    }
    FieldEmbedding emb(base, ext);
    // coordinates of every element of F_{r^i} along eta
    std::unordered_map<Elem, std::vector<Elem>> coords;
    std::vector<Elem> lam(i, 0);
    const std::uint64_t r = base.order();
    for (std::uint64_t idx = 0; idx < ext.order(); ++idx) {
      std::uint64_t t = idx;
      Elem s = 0;
      for (unsigned k = 0; k < i; ++k) {
        lam[k] = static_cast<Elem>(t % r);
        t /= r;
        s = ext.add(s, ext.mul(emb(lam[k]), eta[k]));
      }
      coords.emplace(s, lam);
    }
    if (coords.size() != ext.order()) {
      throw Error(ErrorKind::InvalidArgument, "eta is not a basis over the subfield");
    }
    for (const auto& v : base_ext) {
      if (v.dim() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "base vector length");
      for (unsigned k = 0; k < i; ++k) {
        std::vector<Elem> w(v.dim());
        for (std::size_t j = 0; j < v.dim(); ++j) w[j] = coords.at(v[j])[k];
        Vec wv(base, std::move(w));
        if (!wv.is_zero()) res.base.push_back(std::move(wv));
      }
    }
  }
  try {
    res.verified = pointwise_stabiliser_order(m, res.base, group_cap) == 1;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    res.verified = false;
  }
  return res;
}

}  // namespace saxl
