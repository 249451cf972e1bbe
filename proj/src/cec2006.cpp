#include "cec2006.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace ngopt::internal {

namespace {

using BoundList = std::vector<std::pair<double, double>>;

ValueGradFn linear_bound_low(int i, double lo, int n) {
  return [i, lo, n](const VectorXd& x) {
    ValueGrad vg{lo - x(i), VectorXd::Zero(n)};
    vg.grad(i) = -1.0;
    return vg;
  };
}

ValueGradFn linear_bound_high(int i, double hi, int n) {
  return [i, hi, n](const VectorXd& x) {
    ValueGrad vg{x(i) - hi, VectorXd::Zero(n)};
    vg.grad(i) = 1.0;
    return vg;
  };
}

void append_bounds(Problem& p, const BoundList& bounds) {
  const int n = p.n_dims;
  for (int i = 0; i < n; ++i) {
    p.constraints.push_back(linear_bound_low(i, bounds[i].first, n));
    p.constraints.push_back(linear_bound_high(i, bounds[i].second, n));
  }
}

}  // namespace

Problem make_g01() {
  Problem p;
  p.n_dims = 13;
  p.name = "G01";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = 5.0 * (x(0) + x(1) + x(2) + x(3)) -
               5.0 * (x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + x(3) * x(3));
    for (int i = 4; i < 13; ++i) vg.value -= x(i);
    vg.grad.resize(13);
    for (int i = 0; i < 4; ++i) vg.grad(i) = 5.0 - 10.0 * x(i);
    for (int i = 4; i < 13; ++i) vg.grad(i) = -1.0;
    return vg;
  };
  // Three pair-coupling constraints, three per-variable caps, three
  // aggregation constraints, all linear.
  const auto linear = [](std::vector<std::pair<int, double>> terms,
                         double shift) {
    return [terms = std::move(terms), shift](const VectorXd& x) {
      ValueGrad vg{shift, VectorXd::Zero(13)};
      for (const auto& [idx, coeff] : terms) {
        vg.value += coeff * x(idx);
        vg.grad(idx) = coeff;
      }
      return vg;
    };
  };
  p.constraints = {
      linear({{0, 2}, {1, 2}, {9, 1}, {10, 1}}, -10.0),
      linear({{0, 2}, {2, 2}, {9, 1}, {11, 1}}, -10.0),
      linear({{1, 2}, {2, 2}, {10, 1}, {11, 1}}, -10.0),
      linear({{0, -8}, {9, 1}}, 0.0),
      linear({{1, -8}, {10, 1}}, 0.0),
      linear({{2, -8}, {11, 1}}, 0.0),
      linear({{3, -2}, {4, -1}, {9, 1}}, 0.0),
      linear({{5, -2}, {6, -1}, {10, 1}}, 0.0),
      linear({{7, -2}, {8, -1}, {11, 1}}, 0.0),
  };
  BoundList bounds(9, {0.0, 1.0});
  bounds.insert(bounds.end(), 3, {0.0, 100.0});
  bounds.emplace_back(0.0, 1.0);
  append_bounds(p, bounds);
  return p;
}

Problem make_g04() {
  Problem p;
  p.n_dims = 5;
  p.name = "G04";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = 5.3578547 * x(2) * x(2) + 0.8356891 * x(0) * x(4) +
               37.293239 * x(0) - 40792.141;
    vg.grad.resize(5);
    vg.grad << 0.8356891 * x(4) + 37.293239, 0.0, 2.0 * 5.3578547 * x(2), 0.0,
        0.8356891 * x(0);
    return vg;
  };
  // u, v, w are the three machined-part response surfaces, each boxed from
  // both sides.
  const auto u = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = 85.334407 + 0.0056858 * x(1) * x(4) + 0.0006262 * x(0) * x(3) -
               0.0022053 * x(2) * x(4);
    vg.grad.resize(5);
    vg.grad << 0.0006262 * x(3), 0.0056858 * x(4), -0.0022053 * x(4),
        0.0006262 * x(0), 0.0056858 * x(1) - 0.0022053 * x(2);
    return vg;
  };
  const auto v = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = 80.51249 + 0.0071317 * x(1) * x(4) + 0.0029955 * x(0) * x(1) +
               0.0021813 * x(2) * x(2);
    vg.grad.resize(5);
    vg.grad << 0.0029955 * x(1), 0.0071317 * x(4) + 0.0029955 * x(0),
        2.0 * 0.0021813 * x(2), 0.0, 0.0071317 * x(1);
    return vg;
  };
  const auto w = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = 9.300961 + 0.0047026 * x(2) * x(4) + 0.0012547 * x(0) * x(2) +
               0.0019085 * x(2) * x(3);
    vg.grad.resize(5);
    vg.grad << 0.0012547 * x(2), 0.0,
        0.0047026 * x(4) + 0.0012547 * x(0) + 0.0019085 * x(3),
        0.0019085 * x(2), 0.0047026 * x(2);
    return vg;
  };
  const auto shifted = [](auto fn, double shift, double scale) {
    return [fn, shift, scale](const VectorXd& x) {
      ValueGrad vg = fn(x);
      vg.value = scale * vg.value + shift;
      vg.grad *= scale;
      return vg;
    };
  };
  p.constraints = {
      shifted(u, -92.0, 1.0),  shifted(u, 0.0, -1.0),
      shifted(v, -110.0, 1.0), shifted(v, 90.0, -1.0),
      shifted(w, -25.0, 1.0),  shifted(w, 20.0, -1.0),
  };
  append_bounds(p, {{78, 102}, {33, 45}, {27, 45}, {27, 45}, {27, 45}});
  return p;
}

Problem make_g06() {
  Problem p;
  p.n_dims = 2;
  p.name = "G06";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg;
    const double a = x(0) - 10.0;
    const double b = x(1) - 20.0;
    vg.value = a * a * a + b * b * b;
    vg.grad.resize(2);
    vg.grad << 3.0 * a * a, 3.0 * b * b;
    return vg;
  };
  p.constraints = {
      [](const VectorXd& x) {
        ValueGrad vg;
        const double a = x(0) - 5.0;
        const double b = x(1) - 5.0;
        vg.value = -a * a - b * b + 100.0;
        vg.grad.resize(2);
        vg.grad << -2.0 * a, -2.0 * b;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg;
        const double a = x(0) - 6.0;
        const double b = x(1) - 5.0;
        vg.value = a * a + b * b - 82.81;
        vg.grad.resize(2);
        vg.grad << 2.0 * a, 2.0 * b;
        return vg;
      },
  };
  append_bounds(p, {{13, 100}, {0, 100}});
  return p;
}

Problem make_g07() {
  Problem p;
  p.n_dims = 10;
  p.name = "G07";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = x(0) * x(0) + x(1) * x(1) + x(0) * x(1) - 14.0 * x(0) -
               16.0 * x(1) + std::pow(x(2) - 10.0, 2) +
               4.0 * std::pow(x(3) - 5.0, 2) + std::pow(x(4) - 3.0, 2) +
               2.0 * std::pow(x(5) - 1.0, 2) + 5.0 * x(6) * x(6) +
               7.0 * std::pow(x(7) - 11.0, 2) + 2.0 * std::pow(x(8) - 10.0, 2) +
               std::pow(x(9) - 7.0, 2) + 45.0;
    vg.grad.resize(10);
    vg.grad << 2.0 * x(0) + x(1) - 14.0, 2.0 * x(1) + x(0) - 16.0,
        2.0 * (x(2) - 10.0), 8.0 * (x(3) - 5.0), 2.0 * (x(4) - 3.0),
        4.0 * (x(5) - 1.0), 10.0 * x(6), 14.0 * (x(7) - 11.0),
        4.0 * (x(8) - 10.0), 2.0 * (x(9) - 7.0);
    return vg;
  };
  p.constraints = {
      [](const VectorXd& x) {
        ValueGrad vg{-105.0 + 4.0 * x(0) + 5.0 * x(1) - 3.0 * x(6) + 9.0 * x(7),
                     VectorXd::Zero(10)};
        vg.grad(0) = 4.0;
        vg.grad(1) = 5.0;
        vg.grad(6) = -3.0;
        vg.grad(7) = 9.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{10.0 * x(0) - 8.0 * x(1) - 17.0 * x(6) + 2.0 * x(7),
                     VectorXd::Zero(10)};
        vg.grad(0) = 10.0;
        vg.grad(1) = -8.0;
        vg.grad(6) = -17.0;
        vg.grad(7) = 2.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-8.0 * x(0) + 2.0 * x(1) + 5.0 * x(8) - 2.0 * x(9) - 12.0,
                     VectorXd::Zero(10)};
        vg.grad(0) = -8.0;
        vg.grad(1) = 2.0;
        vg.grad(8) = 5.0;
        vg.grad(9) = -2.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{3.0 * std::pow(x(0) - 2.0, 2) +
                         4.0 * std::pow(x(1) - 3.0, 2) + 2.0 * x(2) * x(2) -
                         7.0 * x(3) - 120.0,
                     VectorXd::Zero(10)};
        vg.grad(0) = 6.0 * (x(0) - 2.0);
        vg.grad(1) = 8.0 * (x(1) - 3.0);
        vg.grad(2) = 4.0 * x(2);
        vg.grad(3) = -7.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{5.0 * x(0) * x(0) + 8.0 * x(1) + std::pow(x(2) - 6.0, 2) -
                         2.0 * x(3) - 40.0,
                     VectorXd::Zero(10)};
        vg.grad(0) = 10.0 * x(0);
        vg.grad(1) = 8.0;
        vg.grad(2) = 2.0 * (x(2) - 6.0);
        vg.grad(3) = -2.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{x(0) * x(0) + 2.0 * std::pow(x(1) - 2.0, 2) -
                         2.0 * x(0) * x(1) + 14.0 * x(4) - 6.0 * x(5),
                     VectorXd::Zero(10)};
        vg.grad(0) = 2.0 * x(0) - 2.0 * x(1);
        vg.grad(1) = 4.0 * (x(1) - 2.0) - 2.0 * x(0);
        vg.grad(4) = 14.0;
        vg.grad(5) = -6.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{0.5 * std::pow(x(0) - 8.0, 2) +
                         2.0 * std::pow(x(1) - 4.0, 2) + 3.0 * x(4) * x(4) -
                         x(5) - 30.0,
                     VectorXd::Zero(10)};
        vg.grad(0) = x(0) - 8.0;
        vg.grad(1) = 4.0 * (x(1) - 4.0);
        vg.grad(4) = 6.0 * x(4);
        vg.grad(5) = -1.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-3.0 * x(0) + 6.0 * x(1) + 12.0 * std::pow(x(8) - 8.0, 2) -
                         7.0 * x(9),
                     VectorXd::Zero(10)};
        vg.grad(0) = -3.0;
        vg.grad(1) = 6.0;
        vg.grad(8) = 24.0 * (x(8) - 8.0);
        vg.grad(9) = -7.0;
        return vg;
      },
  };
  append_bounds(p, BoundList(10, {-10.0, 10.0}));
  return p;
}

Problem make_g08() {
  Problem p;
  p.n_dims = 2;
  p.name = "G08";
  p.objective = [](const VectorXd& x) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double su = std::sin(two_pi * x(0));
    const double cu = std::cos(two_pi * x(0));
    const double sv = std::sin(two_pi * x(1));
    const double cv = std::cos(two_pi * x(1));
    const double num = su * su * su * sv;
    const double den = x(0) * x(0) * x(0) * (x(0) + x(1));
    const double dnum_dx0 = 3.0 * su * su * cu * two_pi * sv;
    const double dnum_dx1 = su * su * su * cv * two_pi;
    const double dden_dx0 = 4.0 * x(0) * x(0) * x(0) +
                            3.0 * x(0) * x(0) * x(1);
    const double dden_dx1 = x(0) * x(0) * x(0);
    ValueGrad vg;
    vg.value = -num / den;
    vg.grad.resize(2);
    vg.grad << (num * dden_dx0 - dnum_dx0 * den) / (den * den),
        (num * dden_dx1 - dnum_dx1 * den) / (den * den);
    return vg;
  };
  p.constraints = {
      [](const VectorXd& x) {
        ValueGrad vg{x(0) * x(0) - x(1) + 1.0, VectorXd::Zero(2)};
        vg.grad << 2.0 * x(0), -1.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{1.0 - x(0) + std::pow(x(1) - 4.0, 2), VectorXd::Zero(2)};
        vg.grad << -1.0, 2.0 * (x(1) - 4.0);
        return vg;
      },
  };
  append_bounds(p, {{0, 10}, {0, 10}});
  return p;
}

Problem make_g09() {
  Problem p;
  p.n_dims = 7;
  p.name = "G09";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = std::pow(x(0) - 10.0, 2) + 5.0 * std::pow(x(1) - 12.0, 2) +
               std::pow(x(2), 4) + 3.0 * std::pow(x(3) - 11.0, 2) +
               10.0 * std::pow(x(4), 6) + 7.0 * x(5) * x(5) +
               std::pow(x(6), 4) - 4.0 * x(5) * x(6) - 10.0 * x(5) -
               8.0 * x(6);
    vg.grad.resize(7);
    vg.grad << 2.0 * (x(0) - 10.0), 10.0 * (x(1) - 12.0),
        4.0 * std::pow(x(2), 3), 6.0 * (x(3) - 11.0), 60.0 * std::pow(x(4), 5),
        14.0 * x(5) - 4.0 * x(6) - 10.0, 4.0 * std::pow(x(6), 3) - 4.0 * x(5) -
        8.0;
    return vg;
  };
  p.constraints = {
      [](const VectorXd& x) {
        ValueGrad vg{-127.0 + 2.0 * x(0) * x(0) + 3.0 * std::pow(x(1), 4) +
                         x(2) + 4.0 * x(3) * x(3) + 5.0 * x(4),
                     VectorXd::Zero(7)};
        vg.grad(0) = 4.0 * x(0);
        vg.grad(1) = 12.0 * std::pow(x(1), 3);
        vg.grad(2) = 1.0;
        vg.grad(3) = 8.0 * x(3);
        vg.grad(4) = 5.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-282.0 + 7.0 * x(0) + 3.0 * x(1) + 10.0 * x(2) * x(2) +
                         x(3) - x(4),
                     VectorXd::Zero(7)};
        vg.grad(0) = 7.0;
        vg.grad(1) = 3.0;
        vg.grad(2) = 20.0 * x(2);
        vg.grad(3) = 1.0;
        vg.grad(4) = -1.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-196.0 + 23.0 * x(0) + x(1) * x(1) + 6.0 * x(5) * x(5) -
                         8.0 * x(6),
                     VectorXd::Zero(7)};
        vg.grad(0) = 23.0;
        vg.grad(1) = 2.0 * x(1);
        vg.grad(5) = 12.0 * x(5);
        vg.grad(6) = -8.0;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{4.0 * x(0) * x(0) + x(1) * x(1) - 3.0 * x(0) * x(1) +
                         2.0 * x(2) * x(2) + 5.0 * x(5) - 11.0 * x(6),
                     VectorXd::Zero(7)};
        vg.grad(0) = 8.0 * x(0) - 3.0 * x(1);
        vg.grad(1) = 2.0 * x(1) - 3.0 * x(0);
        vg.grad(2) = 4.0 * x(2);
        vg.grad(5) = 5.0;
        vg.grad(6) = -11.0;
        return vg;
      },
  };
  append_bounds(p, BoundList(7, {-10.0, 10.0}));
  return p;
}

Problem make_g10() {
  Problem p;
  p.n_dims = 8;
  p.name = "G10";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg{x(0) + x(1) + x(2), VectorXd::Zero(8)};
    vg.grad(0) = vg.grad(1) = vg.grad(2) = 1.0;
    return vg;
  };
  p.constraints = {
      [](const VectorXd& x) {
        ValueGrad vg{-1.0 + 0.0025 * (x(3) + x(5)), VectorXd::Zero(8)};
        vg.grad(3) = vg.grad(5) = 0.0025;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-1.0 + 0.0025 * (x(4) + x(6) - x(3)), VectorXd::Zero(8)};
        vg.grad(3) = -0.0025;
        vg.grad(4) = vg.grad(6) = 0.0025;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-1.0 + 0.01 * (x(7) - x(4)), VectorXd::Zero(8)};
        vg.grad(4) = -0.01;
        vg.grad(7) = 0.01;
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-x(0) * x(5) + 833.33252 * x(3) + 100.0 * x(0) -
                         83333.333,
                     VectorXd::Zero(8)};
        vg.grad(0) = -x(5) + 100.0;
        vg.grad(3) = 833.33252;
        vg.grad(5) = -x(0);
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-x(1) * x(6) + 1250.0 * x(4) + x(1) * x(3) -
                         1250.0 * x(3),
                     VectorXd::Zero(8)};
        vg.grad(1) = -x(6) + x(3);
        vg.grad(3) = x(1) - 1250.0;
        vg.grad(4) = 1250.0;
        vg.grad(6) = -x(1);
        return vg;
      },
      [](const VectorXd& x) {
        ValueGrad vg{-x(2) * x(7) + 1250000.0 + x(2) * x(4) - 2500.0 * x(4),
                     VectorXd::Zero(8)};
        vg.grad(2) = -x(7) + x(4);
        vg.grad(4) = x(2) - 2500.0;
        vg.grad(7) = -x(2);
        return vg;
      },
  };
  BoundList bounds{{100, 10000}, {1000, 10000}, {1000, 10000}};
  bounds.insert(bounds.end(), 5, {10, 1000});
  append_bounds(p, bounds);
  return p;
}

Problem make_g18() {
  Problem p;
  p.n_dims = 9;
  p.name = "G18";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg;
    vg.value = -0.5 * (x(0) * x(3) - x(1) * x(2) + x(2) * x(8) - x(4) * x(8) +
                       x(4) * x(7) - x(5) * x(6));
    vg.grad.resize(9);
    vg.grad << -0.5 * x(3), 0.5 * x(2), 0.5 * x(1) - 0.5 * x(8), -0.5 * x(0),
        0.5 * x(8) - 0.5 * x(7), 0.5 * x(6), 0.5 * x(5), -0.5 * x(4),
        -0.5 * x(2) + 0.5 * x(4);
    return vg;
  };
  // Unit-disk constraints on vertex pairs plus orientation products.
  const auto disk = [](int i, int j) { // x_i^2 + x_j^2 - 1, j < 0: single
    return [i, j](const VectorXd& x) {
      ValueGrad vg{0.0, VectorXd::Zero(9)};
      vg.value = x(i) * x(i) - 1.0;
      vg.grad(i) = 2.0 * x(i);
      if (j >= 0) {
        vg.value += x(j) * x(j);
        vg.grad(j) = 2.0 * x(j);
      }
      return vg;
    };
  };
  const auto pair_disk = [](int i, int j, int k, int l) {
    // (x_i - x_j)^2 + (x_k - x_l)^2 - 1, with j or l = -1 meaning 0
    return [i, j, k, l](const VectorXd& x) {
      const double a = x(i) - (j >= 0 ? x(j) : 0.0);
      const double b = x(k) - (l >= 0 ? x(l) : 0.0);
      ValueGrad vg{a * a + b * b - 1.0, VectorXd::Zero(9)};
      vg.grad(i) += 2.0 * a;
      if (j >= 0) vg.grad(j) -= 2.0 * a;
      vg.grad(k) += 2.0 * b;
      if (l >= 0) vg.grad(l) -= 2.0 * b;
      return vg;
    };
  };
  const auto product = [](int i, int j, int k, int l, double sign) {
    // sign * (x_i * x_j - x_k * x_l), with k = -1 meaning no second term
    return [i, j, k, l, sign](const VectorXd& x) {
      ValueGrad vg{sign * x(i) * x(j), VectorXd::Zero(9)};
      vg.grad(i) = sign * x(j);
      vg.grad(j) = sign * x(i);
      if (k >= 0) {
        vg.value -= sign * x(k) * x(l);
        vg.grad(k) -= sign * x(l);
        vg.grad(l) -= sign * x(k);
      }
      return vg;
    };
  };
  p.constraints = {
      disk(2, 3),
      disk(8, -1),
      disk(4, 5),
      pair_disk(0, -1, 1, 8),
      pair_disk(0, 4, 1, 5),
      pair_disk(0, 6, 1, 7),
      pair_disk(2, 4, 3, 5),
      pair_disk(2, 6, 3, 7),
      pair_disk(6, -1, 7, 8),
      product(1, 2, 0, 3, 1.0),
      product(2, 8, -1, -1, -1.0),
      product(4, 8, -1, -1, 1.0),
      product(5, 6, 4, 7, 1.0),
  };
  BoundList bounds(8, {-10.0, 10.0});
  bounds.emplace_back(0.0, 20.0);
  append_bounds(p, bounds);
  return p;
}

Problem make_g19() {
  static const double kA[10][5] = {
      {-16, 2, 0, 1, 0},    {0, -2, 0, 0.4, 2},  {-3.5, 0, 2, 0, 0},
      {0, -2, 0, -4, -1},   {0, -9, -2, 1, -2.8}, {2, 0, -4, 0, 0},
      {-1, -1, -1, -1, -1}, {-1, -2, -3, -2, -1}, {1, 2, 3, 4, 5},
      {1, 1, 1, 1, 1},
  };
  static const double kB[10] = {-40, -2, -0.25, -4, -4, -1, -40, -60, 5, 1};
  static const double kC[5][5] = {
      {30, -20, -10, 32, -10},
      {-20, 39, -6, -31, 32},
      {-10, -6, 10, -6, -10},
      {32, -31, -6, 39, -20},
      {-10, 32, -10, -20, 30},
  };
  static const double kD[5] = {4, 8, 10, 6, 2};
  static const double kE[5] = {-15, -27, -36, -18, -12};

  Problem p;
  p.n_dims = 15;
  p.name = "G19";
  // x(0..9) are the linear block u, x(10..14) the cubic block v.
  p.objective = [](const VectorXd& x) {
    ValueGrad vg{0.0, VectorXd::Zero(15)};
    for (int j = 0; j < 5; ++j) {
      double cv_j = 0.0;
      for (int i = 0; i < 5; ++i) cv_j += kC[i][j] * x(10 + i);
      vg.value += x(10 + j) * cv_j + 2.0 * kD[j] * std::pow(x(10 + j), 3);
      vg.grad(10 + j) = 2.0 * cv_j + 6.0 * kD[j] * x(10 + j) * x(10 + j);
    }
    for (int i = 0; i < 10; ++i) {
      vg.value -= kB[i] * x(i);
      vg.grad(i) = -kB[i];
    }
    return vg;
  };
  for (int j = 0; j < 5; ++j) {
    p.constraints.push_back([j](const VectorXd& x) {
      ValueGrad vg{-kE[j], VectorXd::Zero(15)};
      for (int i = 0; i < 5; ++i) {
        vg.value -= 2.0 * kC[i][j] * x(10 + i);
        vg.grad(10 + i) = -2.0 * kC[i][j];
      }
      vg.value -= 3.0 * kD[j] * x(10 + j) * x(10 + j);
      vg.grad(10 + j) -= 6.0 * kD[j] * x(10 + j);
      for (int i = 0; i < 10; ++i) {
        vg.value += kA[i][j] * x(i);
        vg.grad(i) = kA[i][j];
      }
      return vg;
    });
  }
  append_bounds(p, BoundList(15, {0.0, 10.0}));
  return p;
}

Problem make_g24() {
  Problem p;
  p.n_dims = 2;
  p.name = "G24";
  p.objective = [](const VectorXd& x) {
    ValueGrad vg{-x(0) - x(1), VectorXd::Zero(2)};
    vg.grad << -1.0, -1.0;
    return vg;
  };
  p.constraints = {
      [](const VectorXd& x) {
        const double t = x(0);
        ValueGrad vg{-2.0 * std::pow(t, 4) + 8.0 * std::pow(t, 3) -
                         8.0 * t * t + x(1) - 2.0,
                     VectorXd::Zero(2)};
        vg.grad << -8.0 * std::pow(t, 3) + 24.0 * t * t - 16.0 * t, 1.0;
        return vg;
      },
      [](const VectorXd& x) {
        const double t = x(0);
        ValueGrad vg{-4.0 * std::pow(t, 4) + 32.0 * std::pow(t, 3) -
                         88.0 * t * t + 96.0 * t + x(1) - 36.0,
                     VectorXd::Zero(2)};
        vg.grad << -16.0 * std::pow(t, 3) + 96.0 * t * t - 176.0 * t + 96.0,
            1.0;
        return vg;
      },
  };
  append_bounds(p, {{0, 3}, {0, 4}});
  return p;
}

}  // namespace ngopt::internal
