#include "saxl/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>
#include <unordered_set>

#include "saxl/error.hpp"

namespace saxl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Verdict sigma_verdict(const Rational& s, const BigInt& size, Technique tech) {
  Verdict v;
  v.evidence.sigma = rational_string(s);
  v.evidence.sigma_ratio = static_cast<double>(Rational(2 * s / size));
  v.evidence.total_vectors = size.str();
  if (2 * s < Rational(size)) {
    v.star_holds = Tri::True;
    v.b2 = Tri::True;
    v.technique = tech;
  } else {
    v.evidence.note = "2 sigma >= |V|";
  }
  return v;
}

}  // namespace

const char* to_string(Technique t) {
  switch (t) {
    case Technique::T1:
      return "T1";
    case Technique::T2:
      return "T2";
    case Technique::T3:
      return "T3";
    case Technique::T4:
      return "T4";
    case Technique::Oracle:
      return "oracle";
    case Technique::None:
      return "none";
  }
  return "none";
}

std::optional<Technique> parse_technique(std::string_view s) {
  std::string l;
  for (char c : s) l.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (l == "t1") return Technique::T1;
  if (l == "t2") return Technique::T2;
  if (l == "t3") return Technique::T3;
  if (l == "t4") return Technique::T4;
  if (l == "oracle") return Technique::Oracle;
  if (l == "none") return Technique::None;
  return std::nullopt;
}

void Verdict::validate() const {
  if (star_holds == Tri::True && b2 != Tri::True) {
    throw Error(ErrorKind::InvalidArgument, "star holds without a base of size 2");
  }
  if (!conclusive() && technique != Technique::None) {
    throw Error(ErrorKind::InvalidArgument, "technique recorded on an inconclusive verdict");
  }
}

BigInt vector_count(const ModuleAction& m) {
  return big_pow(BigInt(m.field().order()), static_cast<unsigned>(m.dim()));
}

std::vector<ClassDatum> module_classes(const ModuleAction& m, const ClassOptions& opts) {
  return prime_order_classes(m.as_group(), opts);
}

Verdict t1_from_data(unsigned d, const BigInt& r, std::span<const ClassDatum> classes) {
  auto t0 = Clock::now();
  Verdict v = sigma_verdict(sigma(classes, r, d, SigmaMode::Exact), big_pow(r, d), Technique::T1);
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict t1(const ModuleAction& m, std::span<const ClassDatum> classes) {
  auto t0 = Clock::now();
  Verdict v = t1_from_data(static_cast<unsigned>(m.dim()), BigInt(m.field().order()), classes);
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict t1(const ModuleAction& m) {
  auto t0 = Clock::now();
  auto classes = module_classes(m);
  Verdict v = t1(m, classes);
  v.evidence.group_order = std::to_string(module_group_order(m));
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict t2(unsigned d, const BigInt& r, std::span<const ClassDatum> classes) {
  auto t0 = Clock::now();
  Verdict v = sigma_verdict(sigma(classes, r, d, SigmaMode::Mixed), big_pow(r, d), Technique::T2);
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict t2(const ModuleAction& m) {
  auto t0 = Clock::now();
  auto classes = module_classes(m);
  Verdict v = t2(static_cast<unsigned>(m.dim()), BigInt(m.field().order()), classes);
  v.evidence.group_order = std::to_string(module_group_order(m));
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict t3(const ModuleAction& m, const T3Options& opts) {
  auto t0 = Clock::now();
  Verdict v;
  const std::uint64_t order = module_group_order(m, opts.orbit.group_cap);
  const BigInt size = vector_count(m);
  v.evidence.group_order = std::to_string(order);
  v.evidence.total_vectors = size.str();
  if (BigInt(order) > size) {
    v.b2 = Tri::False;
    v.technique = Technique::T3;
    v.evidence.regular_count = 0;
    v.evidence.note = "|G| > |V|";
    v.runtime_s = seconds_since(t0);
    return v;
  }
  // 2 m |G| >= |V|
  const BigInt need_big = (size + 2 * order - 1) / (2 * BigInt(order));
  const auto need = static_cast<std::uint64_t>(need_big);
  std::uint64_t m_found = 0;
  bool exact = false;
  if (opts.mode == T3Mode::Full) {
    m_found = all_orbits(m, opts.orbit).regular_count;
    exact = true;
  } else {
    m_found = regular_sample(m, need, opts.budget, opts.seed, opts.orbit.group_cap).reps.size();
  }
  v.evidence.regular_count = m_found;
  if (2 * BigInt(m_found) * order >= size) {
    v.star_holds = Tri::True;
    v.b2 = Tri::True;
  } else if (m_found > 0) {
    v.b2 = Tri::True;
    v.evidence.note = "too few regular orbits for the counting bound";
  } else if (exact) {
    v.b2 = Tri::False;
    v.evidence.note = "no regular orbit";
  } else {
    v.evidence.note = "sampling budget exhausted";
  }
  if (v.conclusive()) v.technique = Technique::T3;
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict t4(const ModuleAction& m, const T4Options& opts) {
  auto t0 = Clock::now();
  Verdict v;
  LinearAction act(m);
  const std::uint64_t order = module_group_order(m);
  v.evidence.group_order = std::to_string(order);
  v.evidence.total_vectors = std::to_string(act.size());
  if (act.size() > opts.vector_cap) {
    throw Error(ErrorKind::CapExceeded, "t4 cover test needs |V| <= " + std::to_string(opts.vector_cap));
  }
  if (order > act.size()) {
    v.b2 = Tri::False;
    v.technique = Technique::T4;
    v.evidence.note = "|G| > |V|";
    v.runtime_s = seconds_since(t0);
    return v;
  }
  std::optional<BitSet> mask;
  if (act.size() <= opts.mask_cap) {
    OrbitOptions oo;
    oo.keep_regular_mask = true;
    oo.vector_cap = opts.mask_cap;
    mask = std::move(all_orbits(m, oo).regular_mask);
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, act.size() - 1);
  std::vector<std::uint64_t> R;
  std::unordered_set<std::uint64_t> in_R;
  std::uint64_t trials = 0;
  auto is_regular = [&](std::uint64_t x) {
    if (mask) return mask->test(x);
    return probe_orbit(act, x, order).size == order;
  };
  auto grow_to = [&](std::uint64_t want) {
    while (R.size() < want && trials < opts.budget) {
      ++trials;
      std::uint64_t x = pick(rng);
      if (in_R.count(x) == 0 && is_regular(x)) {
        in_R.insert(x);
        R.push_back(x);
      }
    }
  };
  auto member = [&](std::uint64_t x) { return mask ? mask->test(x) : in_R.count(x) > 0; };
  const std::uint64_t limit = std::min(act.size(), opts.max_set);
  std::uint64_t want = std::min(opts.initial, limit);
  // vectors still uncovered; shrinks as R grows
  std::vector<std::uint64_t> pending;
  bool first = true;
  for (;;) {
    grow_to(want);
    if (R.empty()) break;
    std::vector<std::uint64_t> still;
    auto covered = [&](std::uint64_t x) {
      for (auto w : R) {
        if (member(act.sub(x, w))) return true;
      }
      return false;
    };
    if (first) {
      for (std::uint64_t x = 0; x < act.size(); ++x) {
        if (!covered(x)) still.push_back(x);
      }
      first = false;
    } else {
      for (auto x : pending) {
        if (!covered(x)) still.push_back(x);
      }
    }
    pending = std::move(still);
    if (pending.empty()) break;
    if (want >= limit || trials >= opts.budget) break;
    want = std::min(want * 2, limit);
  }
  v.evidence.cover_size = R.size();
  if (!R.empty()) v.b2 = Tri::True;
  if (!R.empty() && pending.empty()) {
    v.star_holds = Tri::True;
  } else if (R.empty()) {
    v.evidence.note = "no regular vector sampled";
  } else {
    v.evidence.note = std::to_string(pending.size()) + " vectors uncovered";
  }
  if (v.conclusive()) v.technique = Technique::T4;
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict oracle(const ModuleAction& m, const OracleOptions& opts) {
  auto t0 = Clock::now();
  Verdict v;
  OrbitOptions oo;
  oo.keep_regular_mask = true;
  oo.vector_cap = opts.vector_cap;
  OrbitSummary s = all_orbits(m, oo);
  LinearAction act(m);
  const BitSet& mask = *s.regular_mask;
  v.evidence.group_order = std::to_string(s.group_order);
  v.evidence.total_vectors = std::to_string(s.total_vectors);
  v.evidence.regular_count = s.regular_count;
  v.evidence.valency = mask.count();
  v.technique = Technique::Oracle;
  if (s.regular_count == 0) {
    v.b2 = Tri::False;
    v.star_holds = Tri::False;
    v.evidence.note = "no regular orbit";
    v.runtime_s = seconds_since(t0);
    return v;
  }
  v.b2 = Tri::True;
  std::vector<std::uint64_t> regular;
  regular.reserve(mask.count());
  for (std::uint64_t x = 0; x < s.total_vectors; ++x) {
    if (mask.test(x)) regular.push_back(x);
  }
  // one check per orbit
  BitSet seen(s.total_vectors);
  std::vector<std::uint64_t> orbit;
  std::uint64_t uncovered = 0;
  for (std::uint64_t x = 0; x < s.total_vectors; ++x) {
    if (seen.test(x)) continue;
    orbit.assign(1, x);
    seen.set(x);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t g = 0; g < act.generator_count(); ++g) {
        std::uint64_t y = act.apply(orbit[i], g);
        if (!seen.test(y)) {
          seen.set(y);
          orbit.push_back(y);
        }
      }
    }
    bool ok = false;
    for (auto w : regular) {
      if (mask.test(act.sub(x, w))) {
        ok = true;
        break;
      }
    }
    if (!ok) uncovered += orbit.size();
  }
  v.star_holds = uncovered == 0 ? Tri::True : Tri::False;
  if (uncovered) v.evidence.note = std::to_string(uncovered) + " vectors have no common neighbour with 0";
  v.runtime_s = seconds_since(t0);
  return v;
}

Verdict verify_auto(const ModuleAction& m, std::uint64_t seed) {
  auto t0 = Clock::now();
  std::vector<std::string> tried;
  auto done = [&](Verdict v) {
    v.runtime_s = seconds_since(t0);
    if (!tried.empty()) {
      v.evidence.note += (v.evidence.note.empty() ? "" : "; ") + std::string("tried ");
      for (std::size_t i = 0; i < tried.size(); ++i) v.evidence.note += (i ? "," : "") + tried[i];
    }
    return v;
  };
  const BigInt size = vector_count(m);
  std::optional<std::uint64_t> order;
  try {
    order = module_group_order(m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  if (order && size <= (BigInt(1) << 24)) {
    Verdict v = t3(m, {});
    if (v.star_holds != Tri::Unknown || v.b2 == Tri::False) return done(v);
    tried.push_back("t3");
  }
  if (order) {
    auto classes = module_classes(m);
    Verdict v = t1(m, classes);
    if (v.star_holds == Tri::True) return done(v);
    tried.push_back("t1");
    v = t2(static_cast<unsigned>(m.dim()), BigInt(m.field().order()), classes);
    if (v.star_holds == Tri::True) return done(v);
    tried.push_back("t2");
    if (size <= (BigInt(1) << 26)) {
      T4Options o;
      o.seed = seed;
      v = t4(m, o);
      if (v.star_holds != Tri::Unknown || v.b2 == Tri::False) return done(v);
      tried.push_back("t4");
    }
  }
  Verdict v;
  v.evidence.total_vectors = size.str();
  if (order) v.evidence.group_order = std::to_string(*order);
  return done(v);
}

}  // namespace saxl
