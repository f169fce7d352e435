#include "bipgen/topo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bipgen/rational.hpp"

namespace bipgen {

namespace {

// Neumaier summation; the direct path adds up to |G|^2 nearly equal terms.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0;
  double carry_ = 0;
};

std::vector<SubgroupId> ids_by_degree(const DegreeMap& dm) {
  std::vector<SubgroupId> ids(dm.deg.size());
  std::iota(ids.begin(), ids.end(), SubgroupId{0});
  std::stable_sort(ids.begin(), ids.end(),
                   [&](SubgroupId a, SubgroupId b) { return dm.deg[a] < dm.deg[b]; });
  return ids;
}

}  // namespace

IndexReport indices_closed_form(const DegreeMap& dm) {
  IndexReport r;
  const std::uint64_t n = dm.group_order;
  CompensatedSum randic, abc, ga, harmonic, sci;
  std::uint64_t m2 = 0;
  for (SubgroupId id : ids_by_degree(dm)) {
    const auto order = static_cast<std::int64_t>(dm.subgroup_order[id]);
    const Rational phi2(static_cast<std::int64_t>(dm.deg[id]), order * order);
    if (phi2 == 0) continue;
    const Rational order_sq_phi2 = Rational(order * order) * phi2;  // |H|^2 phi2(H)
    const Rational m2_term = order_sq_phi2 * order_sq_phi2;            // |H|^4 phi2(H)^2
    if (m2_term.denominator() != 1) throw std::logic_error("|H|^4 phi2(H)^2 is not an integer");
    m2 += static_cast<std::uint64_t>(m2_term.numerator());

    const double h = static_cast<double>(order);
    const double p = phi2.to_double();
    const double hp2 = order_sq_phi2.to_double();
    const Rational abc_radicand = (Rational(order) * phi2) * (Rational(order) * phi2) - phi2;
    randic.add(h * std::sqrt(p));
    abc.add(h * std::sqrt(abc_radicand.to_double()));
    ga.add(2.0 * h * h * h * std::pow(p, 1.5) / (1.0 + hp2));
    harmonic.add(2.0 * hp2 / (1.0 + hp2));
    sci.add(hp2 / std::sqrt(1.0 + hp2));
  }
  r.m2 = m2;
  r.m1 = n * n + m2;
  r.randic = randic.value();
  r.abc = abc.value();
  r.ga = ga.value();
  r.harmonic = harmonic.value();
  r.sci = sci.value();
  return r;
}

IndexReport indices_direct(const DegreeMap& dm) {
  IndexReport r;
  const std::uint64_t n = dm.group_order;

  // Vertex sum for M1: pair vertices have degree 1.
  std::uint64_t m1 = 0;
  for (std::uint64_t v = 0; v < n * n; ++v) m1 += 1;
  for (std::uint64_t d : dm.deg) m1 += d * d;

  CompensatedSum randic, abc, ga, harmonic, sci;
  std::uint64_t m2 = 0;
  for (SubgroupId id : ids_by_degree(dm)) {
    const std::uint64_t dv = dm.deg[id];
    for (std::uint64_t e = 0; e < dv; ++e) {
      const std::uint64_t du = 1;
      const double prod = static_cast<double>(du * dv);
      const double sum = static_cast<double>(du + dv);
      m2 += du * dv;
      randic.add(1.0 / std::sqrt(prod));
      abc.add(std::sqrt((sum - 2.0) / prod));
      ga.add(std::sqrt(prod) / (0.5 * sum));
      harmonic.add(2.0 / sum);
      sci.add(1.0 / std::sqrt(sum));
    }
  }
  r.m1 = m1;
  r.m2 = m2;
  r.randic = randic.value();
  r.abc = abc.value();
  r.ga = ga.value();
  r.harmonic = harmonic.value();
  r.sci = sci.value();
  return r;
}

}  // namespace bipgen
