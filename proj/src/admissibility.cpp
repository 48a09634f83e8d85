#include "subord/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

namespace subord {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kPoleEps = 1e-12;
// Pruned points are at least this far above the running minimum, so a
// point whose computed margin ties the minimum is never pruned.
constexpr double kPruneSlack = 1e-9;

// Cheap sufficient test for "outside-margin > threshold". For the
// log-defined regions it uses |Log u| >= max(|ln|u||, |arg u|),
// |Log u| >= ln(1 + |u - 1|) and finally |Log u|^2 >= l^2 + phi^2 with
// cheap lower bounds l <= |ln|u|| and phi <= |arg u|.
// For a disk it compares squared distances.
class Pruner {
 public:
  Pruner(const TargetRegion& target, double threshold) {
    if (const auto* disk = std::get_if<JanowskiDisk>(&target)) {
      const double reach = disk->radius + threshold + kPruneSlack;
      if (!(reach > 0.0) || !std::isfinite(reach)) return;
      kind_ = Kind::Disk;
      center_ = disk->center;
      reach2_ = reach * reach;
      return;
    }
    const bool sigmoid = std::holds_alternative<SigmoidRegion>(target);
    const double a = 1.0 + threshold + kPruneSlack;
    if (!(a > 1e-6) || !std::isfinite(a)) return;
    kind_ = sigmoid ? Kind::Sigmoid : Kind::Exp;
    ratio_ = std::exp(2.0 * a);
    a2_ = a * a;
    reach2_ = (std::exp(a) - 1.0) * (std::exp(a) - 1.0);
    if (a < kPi / 2) {
      arg_mode_ = ArgMode::Acute;
      tan_ = std::tan(a);
    } else if (a < kPi) {
      arg_mode_ = ArgMode::Obtuse;
      tan_ = std::tan(kPi - a);
    }
  }

  bool active() const noexcept { return kind_ != Kind::None; }

  // Lower bound for ln(y)/2, y >= 1: with y = f 2^e, f in [1,2),
  // ln y >= e ln 2 + 2(f-1)/(f+1). Off by at most 0.013.
  static double half_log_lower(double y) noexcept {
    if (!(y < kInf)) return kInf;
    int e = 0;
    const double f = 2.0 * std::frexp(y, &e);
    return 0.5 * ((e - 1) * std::numbers::ln2 + 2.0 * (f - 1.0) / (f + 1.0));
  }

  bool prune(cplx w) const noexcept {
    double nw = 0.0, nd = 1.0, nu1 = 0.0;
    cplx v;
    switch (kind_) {
      case Kind::Disk: return std::norm(w - center_) > reach2_;
      case Kind::Sigmoid: {
        // u = w/(2-w): |u|^2 = nw/nd, arg u = arg(w conj(2-w)), |u-1|^2 = 4|w-1|^2/nd.
        const cplx d = 2.0 - w;
        nw = std::norm(w);
        nd = std::norm(d);
        nu1 = 4.0 * std::norm(w - 1.0);
        v = w * std::conj(d);
        break;
      }
      case Kind::Exp:
        nw = std::norm(w);
        nd = 1.0;
        nu1 = std::norm(w - 1.0);
        v = w;
        break;
      case Kind::None: return false;
    }
    if (nw > ratio_ * nd || nw * ratio_ < nd || nu1 > reach2_ * nd) return true;
    switch (arg_mode_) {
      case ArgMode::Acute:
        if (v.real() <= 0.0 || std::abs(v.imag()) > tan_ * v.real()) return true;
        break;
      case ArgMode::Obtuse:
        if (v.real() < 0.0 && std::abs(v.imag()) < tan_ * -v.real()) return true;
        break;
      case ArgMode::None: break;
    }
    const double l = half_log_lower(nw >= nd ? nw / nd : nd / nw);
    const double sn = std::sqrt(v.imag() * v.imag() / std::norm(v));
    const double phi = v.real() > 0.0 ? sn : kPi - kPi / 2 * sn;
    return l * l + phi * phi > a2_;
  }

 private:
  enum class Kind { None, Disk, Sigmoid, Exp };
  enum class ArgMode { None, Acute, Obtuse };
  Kind kind_ = Kind::None;
  cplx center_{0.0, 0.0};
  double reach2_ = kInf;
  double ratio_ = kInf;
  double a2_ = kInf;
  double tan_ = 0.0;
  ArgMode arg_mode_ = ArgMode::None;
};

struct SliceBest {
  double margin = kInf;
  long long index = std::numeric_limits<long long>::max();
  WorstPoint point;

  void offer(double margin_out, long long idx, const WorstPoint& p) {
    if (margin_out < margin || (margin_out == margin && idx < index)) {
      margin = margin_out;
      index = idx;
      point = p;
      point.margin = margin_out;
    }
  }
  void merge(const SliceBest& o) {
    if (o.margin < margin || (o.margin == margin && o.index < index)) *this = o;
  }
};

struct WorkerResult {
  std::vector<SliceBest> slices;
  long long skipped = 0;
  bool rays_escape = true;
  double tail_min = kInf;
};

std::vector<std::pair<int, int>> chunks(int n, int workers) {
  std::vector<std::pair<int, int>> out;
  workers = std::max(1, std::min(workers, n / 16 > 0 ? n / 16 : 1));
  for (int w = 0; w < workers; ++w) {
    const int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
    const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
    if (hi > lo) out.emplace_back(lo, hi);
  }
  return out;
}

template <class Fn>
std::vector<WorkerResult> run_parallel(int n_theta, Fn&& work) {
  const auto parts = chunks(n_theta, worker_count());
  std::vector<WorkerResult> results(parts.size());
  if (parts.size() == 1) {
    results[0] = work(parts[0].first, parts[0].second);
    return results;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        results[i] = work(parts[i].first, parts[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

VerificationReport make_report(const PsiForm& form, const TargetRegion& target, const JanowskiParams& params,
                               const GridSpec& grid, bool second_order) {
  VerificationReport rep;
  rep.form = describe(form);
  rep.target = region_name(target);
  rep.A = params.A();
  rep.B = params.B();
  rep.grid = grid;
  rep.second_order = second_order;
  return rep;
}

void finish(VerificationReport& rep, const std::vector<WorkerResult>& results) {
  const std::size_t nm = rep.grid.m_values.size();
  std::vector<SliceBest> slices(nm);
  for (const auto& r : results) {
    rep.skipped += r.skipped;
    for (std::size_t i = 0; i < nm; ++i) slices[i].merge(r.slices[i]);
  }
  if (rep.skipped * 100 > rep.evaluations) {
    fail(ErrorKind::GridDegenerate, std::to_string(rep.skipped) + " of " + std::to_string(rep.evaluations) +
                                        " grid points hit a singularity (limit is 1%)");
  }
  SliceBest global;
  for (const auto& s : slices) {
    rep.min_margin_by_m.push_back(s.margin);
    global.merge(s);
  }
  rep.min_margin = global.margin;
  rep.worst = global.point;
  rep.pass = rep.min_margin >= -rep.grid.tol;

  const double tol = rep.grid.tol;
  const auto& mm = rep.min_margin_by_m;
  rep.monotonicity_checked = true;
  rep.monotone_in_m = std::all_of(mm.begin(), mm.end(), [&](double v) { return v >= mm.front() - tol; });
  rep.escape_in_m = mm.size() < 2 || mm[mm.size() - 1] >= mm[mm.size() - 2] - tol;

  if (rep.second_order) {
    bool rays = true;
    double tail = kInf;
    for (const auto& r : results) {
      rays = rays && r.rays_escape;
      tail = std::min(tail, r.tail_min);
    }
    if (std::isfinite(tail)) rep.escape_in_t = rays && tail >= rep.min_margin;
  }

  if (!rep.monotone_in_m) rep.warnings.push_back("theta-minimum of the margin drops below its value at the first m");
  if (!rep.escape_in_m) rep.warnings.push_back("margin at the last m is below the margin at the previous m");
  if (rep.second_order && !rep.escape_in_t) {
    rep.warnings.push_back("escape along |y| could not be checked (fewer than two y-samples per side)");
  } else if (rep.escape_in_t && !*rep.escape_in_t) {
    rep.warnings.push_back("|psi| does not grow at the ends of the y-range");
  }
  if (!rep.pass) {
    rep.status = "FAIL";
  } else {
    rep.status = rep.warnings.empty() ? "PASS" : "PASS-WITH-WARNING";
  }
}

bool try_r_s(double theta, double m, const JanowskiParams& params, AdmissiblePair& out) noexcept {
  const cplx zeta = std::polar(1.0, theta);
  const cplx den = 1.0 + params.B() * zeta;
  if (std::abs(den) < kPoleEps) return false;
  out.r = (1.0 + params.A() * zeta) / den;
  out.s = m * (params.A() - params.B()) * zeta / (den * den);
  return true;
}

}  // namespace

void GridSpec::validate() const {
  if (n_theta < 16) fail(ErrorKind::InvalidArgument, "n_theta must be at least 16");
  if (m_values.empty()) fail(ErrorKind::InvalidArgument, "m-list must not be empty");
  for (std::size_t i = 0; i < m_values.size(); ++i) {
    if (!(m_values[i] >= 1.0) || !std::isfinite(m_values[i])) {
      fail(ErrorKind::InvalidArgument, "every m must be a finite value >= 1");
    }
    if (i > 0 && !(m_values[i] > m_values[i - 1])) fail(ErrorKind::InvalidArgument, "m-list must be increasing");
  }
  if (t_rays < 1 || t_depth < 1) fail(ErrorKind::InvalidArgument, "t_rays and t_depth must be at least 1");
  if (!(tol >= 0.0) || !std::isfinite(tol)) fail(ErrorKind::InvalidArgument, "tol must be finite and >= 0");
}

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("SUBORD_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

AdmissiblePair admissible_r_s(double theta, double m, const JanowskiParams& params) {
  AdmissiblePair out;
  if (!try_r_s(theta, m, params, out)) fail(ErrorKind::PoleAtBoundary, "1 + B e^{i theta} vanishes");
  return out;
}

double t_real_part_min(double theta, double m, const JanowskiParams& params) {
  const double B = params.B();
  if (std::abs(B) >= 1.0) fail(ErrorKind::UnsupportedCase, "the t-constraint needs |B| < 1");
  return m * (1.0 - B * B) / (1.0 + B * B + 2.0 * B * std::cos(theta));
}

std::vector<double> theta_grid(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "theta grid needs n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = (j + 0.5) * 2.0 * kPi / n;
  return out;
}

std::vector<double> t_imag_offsets(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "need at least one y offset");
  std::vector<double> out{0.0};
  // Largest magnitudes first so both ends of [-50, 50] are always present;
  // for even n the smallest magnitude only gets its positive sign.
  const int mags = n / 2;
  const double lo = std::log10(1e-3), hi = std::log10(50.0);
  for (int i = mags - 1; i >= 0 && static_cast<int>(out.size()) < n; --i) {
    const double y = mags == 1 ? 50.0 : std::pow(10.0, lo + (hi - lo) * i / (mags - 1));
    out.push_back(y);
    if (static_cast<int>(out.size()) < n) out.push_back(-y);
  }
  return out;
}

std::vector<double> t_depth_offsets(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "need at least one depth offset");
  std::vector<double> out{0.0};
  for (int j = 1; j < n; ++j) out.push_back(n == 2 ? 0.05 : 0.05 * std::pow(400.0, double(j - 1) / (n - 2)));
  return out;
}

std::vector<cplx> admissible_t_set(cplx s, double theta, double m, const JanowskiParams& params,
                                   const GridSpec& grid) {
  grid.validate();
  if (s == cplx(0.0, 0.0)) fail(ErrorKind::DegenerateInput, "s must be non-zero");
  const double cmin = t_real_part_min(theta, m, params);
  std::vector<cplx> out;
  for (double dc : t_depth_offsets(grid.t_depth)) {
    for (double y : t_imag_offsets(grid.t_rays)) out.push_back(s * cplx(cmin + dc - 1.0, y));
  }
  return out;
}

VerificationReport verify_first_order(const PsiForm& form, const TargetRegion& target,
                                      const JanowskiParams& params, const GridSpec& grid) {
  validate(form);
  grid.validate();
  if (is_second_order(form)) fail(ErrorKind::InvalidArgument, "verify_first_order needs a first-order form");
  VerificationReport rep = make_report(form, target, params, grid, false);
  const auto thetas = theta_grid(grid.n_theta);
  const std::size_t nm = grid.m_values.size();
  rep.evaluations = static_cast<long long>(nm) * grid.n_theta;

  auto work = [&](int lo, int hi) {
    WorkerResult res;
    res.slices.resize(nm);
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const double m = grid.m_values[mi];
      for (int j = lo; j < hi; ++j) {
        const double th = thetas[static_cast<std::size_t>(j)];
        AdmissiblePair rs;
        if (!try_r_s(th, m, params, rs)) {
          ++res.skipped;
          continue;
        }
        const auto psi = try_psi(form, rs.r, rs.s, cplx(0.0, 0.0));
        const auto inside = psi ? try_region_margin(*psi, target) : std::nullopt;
        if (!inside) {
          ++res.skipped;
          continue;
        }
        const long long idx = static_cast<long long>(mi) * grid.n_theta + j;
        res.slices[mi].offer(-*inside, idx, WorstPoint{th, m, 0.0, 0.0, *psi, 0.0});
      }
    }
    return res;
  };
  finish(rep, run_parallel(grid.n_theta, work));
  return rep;
}

VerificationReport verify_second_order(const PsiForm& form, const TargetRegion& target,
                                       const JanowskiParams& params, const GridSpec& grid) {
  validate(form);
  grid.validate();
  if (!is_second_order(form)) fail(ErrorKind::InvalidArgument, "verify_second_order needs a second-order form");
  if (std::abs(params.B()) >= 1.0) fail(ErrorKind::UnsupportedCase, "second-order verification needs |B| < 1");
  VerificationReport rep = make_report(form, target, params, grid, true);

  // ψ = a0 + γ s + β t with a0 = 1 or r.
  const bool full = std::holds_alternative<SecondOrderFull>(form);
  const double gamma = full ? std::get<SecondOrderFull>(form).gamma : std::get<SecondOrderConst>(form).gamma;
  const double beta = form_beta(form);

  const auto thetas = theta_grid(grid.n_theta);
  const auto ys = t_imag_offsets(grid.t_rays);
  const auto dcs = t_depth_offsets(grid.t_depth);
  const std::size_t nm = grid.m_values.size();
  const std::size_t ny = ys.size(), nc = dcs.size();
  rep.evaluations = static_cast<long long>(nm) * grid.n_theta * static_cast<long long>(ny * nc);

  // Indices of the two largest |y| on each side, for the escape check.
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < ny; ++i) {
    if (ys[i] > 0.0) pos.push_back(i);
    if (ys[i] < 0.0) neg.push_back(i);
  }
  auto by_abs = [&](std::size_t a, std::size_t b) { return std::abs(ys[a]) < std::abs(ys[b]); };
  std::sort(pos.begin(), pos.end(), by_abs);
  std::sort(neg.begin(), neg.end(), by_abs);
  const bool can_escape = pos.size() >= 2 && neg.size() >= 2;

  auto work = [&](int lo, int hi) {
    WorkerResult res;
    res.slices.resize(nm);
    const std::size_t span = static_cast<std::size_t>(hi - lo);
    std::vector<cplx> base(span), dir(span);
    std::vector<double> cmin(span);
    std::vector<bool> ok(span);
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const double m = grid.m_values[mi];
      SliceBest& best = res.slices[mi];
      auto index_of = [&](std::size_t j, std::size_t ci, std::size_t yi) {
        return ((static_cast<long long>(mi) * grid.n_theta + static_cast<long long>(j)) * static_cast<long long>(nc) +
                static_cast<long long>(ci)) *
                   static_cast<long long>(ny) +
               static_cast<long long>(yi);
      };
      // ψ(c, y) = base + β s (c - 1) + y (iβ s); seed with the extreme points.
      for (std::size_t jj = 0; jj < span; ++jj) {
        const std::size_t j = static_cast<std::size_t>(lo) + jj;
        AdmissiblePair rs;
        ok[jj] = try_r_s(thetas[j], m, params, rs);
        if (!ok[jj]) {
          res.skipped += static_cast<long long>(nc * ny);
          continue;
        }
        cmin[jj] = t_real_part_min(thetas[j], m, params);
        base[jj] = (full ? rs.r : cplx(1.0, 0.0)) + gamma * rs.s;
        dir[jj] = beta * rs.s;
        const cplx psi = base[jj] + dir[jj] * (cmin[jj] - 1.0);
        if (auto in = try_region_margin(psi, target)) {
          best.offer(-*in, index_of(j, 0, 0), WorstPoint{thetas[j], m, dcs[0], ys[0], psi, 0.0});
        } else {
          ++res.skipped;
        }
      }
      for (std::size_t jj = 0; jj < span; ++jj) {
        if (!ok[jj]) continue;
        const std::size_t j = static_cast<std::size_t>(lo) + jj;
        const cplx idir = cplx(0.0, 1.0) * dir[jj];
        for (std::size_t ci = 0; ci < nc; ++ci) {
          const cplx row = base[jj] + dir[jj] * (cmin[jj] + dcs[ci] - 1.0);
          const Pruner pruner(target, best.margin);
          for (std::size_t yi = 0; yi < ny; ++yi) {
            if (ci == 0 && yi == 0) continue;
            const cplx psi = row + ys[yi] * idir;
            if (pruner.active() && pruner.prune(psi)) continue;
            if (auto in = try_region_margin(psi, target)) {
              const double out = -*in;
              if (out <= best.margin) {
                best.offer(out, index_of(j, ci, yi), WorstPoint{thetas[j], m, dcs[ci], ys[yi], psi, 0.0});
              }
            } else {
              ++res.skipped;
            }
          }
          if (can_escape) {
            auto grows = [&](const std::vector<std::size_t>& side) {
              const cplx a = row + ys[side[side.size() - 2]] * idir;
              const cplx b = row + ys[side.back()] * idir;
              return std::norm(b) > std::norm(a);
            };
            res.rays_escape = res.rays_escape && grows(pos) && grows(neg);
            if (ci == 0) {
              for (std::size_t yi : {pos.back(), neg.back()}) {
                if (auto in = try_region_margin(row + ys[yi] * idir, target)) {
                  res.tail_min = std::min(res.tail_min, -*in);
                }
              }
            }
          }
        }
      }
    }
    return res;
  };
  finish(rep, run_parallel(grid.n_theta, work));
  return rep;
}

VerificationReport verify(const PsiForm& form, const TargetRegion& target, const JanowskiParams& params,
                          const GridSpec& grid) {
  return is_second_order(form) ? verify_second_order(form, target, params, grid)
                               : verify_first_order(form, target, params, grid);
}

ProbeResult probe_threshold(const PsiForm& form_template, const TargetRegion& target, const JanowskiParams& params,
                            double printed_bound, const GridSpec& grid) {
  if (!(printed_bound > 0.0) || !std::isfinite(printed_bound)) {
    fail(ErrorKind::InvalidArgument, "probe needs a positive printed bound");
  }
  auto run = [&](double beta) {
    const auto rep = verify(with_beta(form_template, beta), target, params, grid);
    return ProbeStep{beta, rep.pass, rep.min_margin};
  };
  ProbeResult out;
  out.printed_bound = printed_bound;
  double hi = printed_bound;
  for (int i = 0; !run(hi).pass; ++i) {
    if (i >= 20) fail(ErrorKind::NonMonotoneProbe, "no passing beta found up to 2^20 times the printed bound");
    hi *= 2.0;
  }
  constexpr int kScan = 16;
  for (int i = 0; i < kScan; ++i) out.scan.push_back(run(hi * i / (kScan - 1)));
  // Expect fail, ..., fail, pass, ..., pass.
  std::size_t first_pass = out.scan.size();
  for (std::size_t i = 0; i < out.scan.size(); ++i) {
    if (out.scan[i].pass) {
      first_pass = i;
      break;
    }
  }
  const bool monotone = first_pass > 0 && first_pass < out.scan.size() &&
                        std::all_of(out.scan.begin() + static_cast<std::ptrdiff_t>(first_pass), out.scan.end(),
                                    [](const ProbeStep& s) { return s.pass; });
  if (!monotone) {
    throw NonMonotoneProbeError("verification is not fail-then-pass over the beta bracket", out.scan);
  }
  double lo = out.scan[first_pass - 1].beta;
  double up = out.scan[first_pass].beta;
  while (up - lo > 1e-6) {
    const double mid = 0.5 * (lo + up);
    (run(mid).pass ? up : lo) = mid;
    ++out.bisection_steps;
  }
  out.threshold = up;
  out.gap = printed_bound - up;
  return out;
}

}  // namespace subord
