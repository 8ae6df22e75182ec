#include "flatcyc/growth.hpp"

#include <sstream>

#include "flatcyc/groups.hpp"
#include "flatcyc/poly.hpp"
#include "flatcyc/tori.hpp"

namespace flatcyc {

std::string format_high(const HighFloat& x, int digits) { return x.str(digits, std::ios_base::fmtflags(0)); }

XueResult xue_bound(const PairingInstance& inst) {
  const RatMatrix& M = inst.pairing;
  require(inst.t >= 1, Errc::InvalidArgument, "sparsity bound t must be >= 1");
  require(M.cols() >= 1, Errc::InvalidArgument, "pairing has no columns");
  for (std::size_t j = 0; j < M.cols(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < M.rows() && !nonzero; ++i) nonzero = M(i, j) != 0;
    require(nonzero, Errc::HypothesisOneViolated, "column " + std::to_string(j) + " pairs trivially with every row");
  }
  for (std::size_t i = 0; i < M.rows(); ++i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) count += M(i, j) != 0;
    require(count <= inst.t, Errc::HypothesisTwoViolated,
            "row " + std::to_string(i) + " has " + std::to_string(count) + " nonzero entries");
  }
  XueResult r;
  r.bound = Rational(static_cast<unsigned long>(M.cols()), static_cast<unsigned long>(inst.t));
  r.bound.canonicalize();
  r.rank = rank(RationalField{}, M);
  return r;
}

RatMatrix parse_rational_matrix(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    std::vector<Rational> row;
    while (tokens >> tok) {
      Rational q;
      require(q.set_str(tok, 10) == 0, Errc::InvalidArgument, "not a rational number: " + tok);
      require(q.get_den() != 0, Errc::ZeroDenominator, "zero denominator in " + tok);
      q.canonicalize();
      row.push_back(q);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  require(!rows.empty(), Errc::InvalidArgument, "empty matrix");
  RatMatrix M(rows.size(), rows.front().size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == M.cols(), Errc::SizeMismatch, "ragged matrix at row " + std::to_string(i));
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = rows[i][j];
  }
  return M;
}

Rational mrt_bound(const BigInt& W, const BigInt& W1, const BigInt& W2, const BigInt& c) {
  require(W1 != 0 && W2 != 0 && c != 0, Errc::ZeroDenominator, "zero in the denominator of the bound");
  require(W > 0 && W1 > 0 && W2 > 0 && c > 0, Errc::InvalidArgument, "orders and c must be positive");
  Rational r(W, c * W1 * W2);
  r.canonicalize();
  return r;
}

namespace {

ResidueRing rational_ring(const BigInt& p, int j) { return ResidueRing::integers_mod(PrimePower::make(p, j)); }

ResidueRing hilbert_ring(const TowerSpec& s, int j) {
  return QuadraticPrime::make(s.field_m, s.p, s.split_root).local_ring(j);
}

BigInt sl_or_trivial(const ResidueRing& R, int d) { return d >= 2 ? sl_order(R, d) : BigInt(1); }

}  // namespace

void validate(const TowerSpec& s) {
  require(s.k >= 1 && s.l >= s.k, Errc::InvalidArgument, "need 1 <= k <= l");
  require(s.c >= 1, Errc::InvalidArgument, "intersection constant c must be >= 1");
  require(is_prime(s.p), Errc::NonPrime, to_string(s.p) + " is not prime");
  switch (s.kind) {
    case CaseKind::SL:
      require(s.n >= 1, Errc::InvalidArgument, "SL case needs n >= 1");
      if (s.torus) {
        require(s.torus->degree() == s.n + 1, Errc::InvalidArgument, "torus polynomial must have degree n + 1");
        require(s.p != 2, Errc::BadPrimeForCase, "torus check needs an odd prime");
        require(mod(s.torus->leading(), s.p) != 0, Errc::BadPrimeForCase, "leading coefficient vanishes mod p");
        Exclusions ex;
        ex.chi_pm_one = false;
        require(classify_prime_for_poly(*s.torus, s.p, ex).good(), Errc::BadPrimeForCase,
                "torus polynomial does not split into simple roots mod p");
      }
      break;
    case CaseKind::Hilbert:
      require(s.p != 2, Errc::BadPrimeForCase, "Hilbert case needs an odd prime");
      require(split_type(s.field_m, s.p) != SplitType::Ramified, Errc::BadPrimeForCase, "p ramifies in F");
      if (s.torus) {
        require(s.torus->degree() == 2, Errc::InvalidArgument, "Hilbert torus polynomial must be quadratic");
        require(hilbert_prime_verdict(s.p, s.field_m, *s.torus).good(), Errc::BadPrimeForCase,
                "torus polynomial does not split into simple roots over the residue field");
      }
      break;
    case CaseKind::SO:
      require(s.n >= 2 && s.n % 2 == 0, Errc::InvalidArgument, "SO case needs even n >= 2");
      require(s.p != 2, Errc::BadPrimeForCase, "SO case needs an odd prime");
      require(so_prime_verdict(s.p, s.n / 2).good(), Errc::BadPrimeForCase,
              "p fails the SO predicate (p = 3 mod 4, chi_B split, distinct block eigenvalues)");
      break;
  }
}

TowerOrders tower_orders(const TowerSpec& s) {
  validate(s);
  TowerOrders o;
  switch (s.kind) {
    case CaseKind::SL: {
      const auto Rl = rational_ring(s.p, s.l), Rk = rational_ring(s.p, s.k);
      const int d = s.n + 1;
      o.base_constant = sl_order(Rk, d);
      o.W = sl_order(Rl, d) / o.base_constant;
      if (s.torus) {
        const IntMatrix A = companion_matrix(*s.torus);
        o.W1 = centralizer_order_sl(A, Rl) / centralizer_order_sl(A, Rk);
      } else {
        o.W1 = flatcyc::pow(BigInt(unit_count(Rl) / unit_count(Rk)), static_cast<unsigned long>(s.n));
      }
      o.W2 = sl_or_trivial(Rl, s.n) / sl_or_trivial(Rk, s.n);
      break;
    }
    case CaseKind::Hilbert: {
      const auto Rl = hilbert_ring(s, s.l), Rk = hilbert_ring(s, s.k);
      o.base_constant = sl_order(Rk, 2);
      o.W = sl_order(Rl, 2) / o.base_constant;
      o.W1 = unit_count(Rl) / unit_count(Rk);
      o.W2 = o.W1;
      break;
    }
    case CaseKind::SO: {
      const QuadForm Q = build_Qn(s.n);
      const QuadForm Qt = build_Qtilde(s.n - 1);
      const PrimePower bl = PrimePower::make(s.p, s.l), bk = PrimePower::make(s.p, s.k);
      // Closed formulas for the base orders; they cancel in every ratio.
      o.base_constant = omega_order(Q, bk, 0);
      o.W = omega_order(Q, bl, 0) / o.base_constant;
      const IntMatrix A = build_A_block(s.n / 2);
      o.W1 = centralizer_order_so(A, Q, rational_ring(s.p, s.l)) / centralizer_order_so(A, Q, rational_ring(s.p, s.k));
      o.W2 = omega_order(Qt, bl, 0) / omega_order(Qt, bk, 0);
      break;
    }
  }
  return o;
}

std::optional<long> log_exact(const BigInt& value, const BigInt& base) {
  const long e = exact_log(value, base);
  if (e < 0) return std::nullopt;
  return e;
}

std::optional<Rational> kappa_from_orders(const TowerOrders& o, const BigInt& base) {
  const auto w = log_exact(o.W, base), w1 = log_exact(o.W1, base), w2 = log_exact(o.W2, base);
  if (!w || !w1 || !w2 || *w == 0) return std::nullopt;
  Rational r(*w - *w1 - *w2, *w);
  r.canonicalize();
  return r;
}

namespace {

HighFloat hf(const BigInt& v) { return HighFloat(to_string(v)); }

HighFloat so_printed(int n, const BigInt& p) {
  const auto nn = static_cast<unsigned long>(n);
  const BigInt num = flatcyc::pow(p, nn * nn - nn + 1) + 2 * flatcyc::pow(p, (nn * nn - nn + 2) / 2) +
                     flatcyc::pow(p, 2 * nn - 1);
  const BigInt den = flatcyc::pow(p, nn * nn) + flatcyc::pow(p, nn * (nn - 1) / 2);
  return HighFloat(1) - log(hf(num)) / log(hf(den));
}

HighFloat so_log_bound(int n, const BigInt& p) {
  const HighFloat log_p3 = log(HighFloat(3)) / log(hf(p));
  return (HighFloat(n - 1) - log_p3) / HighFloat(n * n);
}

}  // namespace

KappaResult kappa(const TowerSpec& s) {
  validate(s);
  KappaResult r;
  switch (s.kind) {
    case CaseKind::SL: {
      Rational e(s.n + 1, s.n * s.n + 2 * s.n);
      e.canonicalize();
      r.exponent_exact = e;
      r.exponent = to_string(e);
      break;
    }
    case CaseKind::Hilbert:
      r.exponent_exact = Rational(1, 3);
      r.exponent = "1/3";
      break;
    case CaseKind::SO:
      r.kappa_printed = so_printed(s.n, s.p);
      r.log_bound = so_log_bound(s.n, s.p);
      r.exponent = format_high(*r.log_bound);
      break;
  }
  if (s.l > s.k) r.kappa_kernel = kappa_from_orders(tower_orders(s), s.p);
  return r;
}

std::string case_label(const TowerSpec& s) {
  switch (s.kind) {
    case CaseKind::SL:
      return "SL" + std::to_string(s.n + 1);
    case CaseKind::Hilbert:
      return "Hilbert(Q(sqrt(" + to_string(s.field_m) + ")))";
    case CaseKind::SO:
      return "SO(Q" + std::to_string(s.n) + ")";
  }
  return "?";
}

GrowthReport growth_report(const TowerSpec& s) {
  GrowthReport g;
  g.spec = s;
  g.case_label = case_label(s);
  g.orders = tower_orders(s);
  g.bound = mrt_bound(g.orders.W, g.orders.W1, g.orders.W2, s.c);
  require(g.bound * Rational(s.c * g.orders.W1 * g.orders.W2) == Rational(g.orders.W), Errc::InvalidArgument,
          "bound identity failed");
  g.volume_proxy = g.orders.W * g.orders.base_constant;
  g.kappa = kappa(s);
  if (g.kappa.kappa_printed && g.kappa.kappa_kernel) {
    const auto& kk = *g.kappa.kappa_kernel;
    g.kappa_difference = *g.kappa.kappa_printed - HighFloat(to_string(kk.get_num())) / HighFloat(to_string(kk.get_den()));
  }
  return g;
}

}  // namespace flatcyc
