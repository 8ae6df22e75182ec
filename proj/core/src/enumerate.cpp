#include "flatcyc/enumerate.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace flatcyc {

namespace {

// Run work(w) for w in [0, workers) on separate threads and sum the results.
template <class Result, class Work>
std::vector<Result> run_workers(unsigned workers, Work work) {
  workers = std::max(1u, workers);
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = work(0u);
    return results;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        results[w] = work(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace

TableRing TableRing::build(const ResidueRing& R, std::uint32_t max_size) {
  const BigInt card = R.cardinality();
  require(card <= max_size, Errc::TooLargeToEnumerate, "ring of size " + to_string(card) + " is too large for tables");
  TableRing T(R);
  const auto n = static_cast<std::uint32_t>(to_u64(card));
  T.n_ = n;
  std::vector<RingElement> elems;
  elems.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) elems.push_back(R.element_at(i));
  auto index = [&](const RingElement& e) { return static_cast<Element>(to_u64(R.index_of(e))); };
  T.one_ = index(R.one());
  T.add_.resize(std::size_t(n) * n);
  T.mul_.resize(std::size_t(n) * n);
  T.neg_.resize(n);
  T.unit_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    T.neg_[a] = index(R.neg(elems[a]));
    T.unit_[a] = R.is_unit(elems[a]) ? 1 : 0;
    for (std::uint32_t b = 0; b < n; ++b) {
      T.add_[std::size_t(a) * n + b] = index(R.add(elems[a], elems[b]));
      T.mul_[std::size_t(a) * n + b] = index(R.mul(elems[a], elems[b]));
    }
  }
  return T;
}

TableRing::Element TableRing::from_int(const BigInt& v) const { return from_element(ring_.from_int(v)); }

TableRing::Element TableRing::from_element(const RingElement& e) const {
  return static_cast<Element>(to_u64(ring_.index_of(e)));
}

double matrix_space_size(const BigInt& ring_size, int d) {
  return std::pow(ring_size.get_d(), static_cast<double>(d) * d);
}

TableMatrix to_table_matrix(const TableRing& T, const IntMatrix& A) { return lift_matrix(T, A); }

TableMatrix table_multiply(const TableRing& T, const TableMatrix& A, const TableMatrix& B) {
  return multiply(T, A, B);
}

namespace {

// hist[v] = #{(a, d) : a·d = v}
std::vector<std::uint64_t> product_histogram(const TableRing& T) {
  const std::uint32_t n = T.size();
  std::vector<std::uint64_t> hist(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t d = 0; d < n; ++d) ++hist[T.mul(a, d)];
  return hist;
}

BigInt count_2x2(const ResidueRing& R, unsigned workers, bool units) {
  const TableRing T = TableRing::build(R);
  const auto hist = product_histogram(T);
  const std::uint32_t n = T.size();
  std::vector<std::uint32_t> targets;
  for (std::uint32_t u = 0; u < n; ++u)
    if (units ? T.is_unit(u) : u == T.one()) targets.push_back(u);
  // det = ad - bc = u  <=>  ad = u + bc.
  auto parts = run_workers<std::uint64_t>(workers, [&](unsigned w) {
    std::uint64_t total = 0;
    const unsigned stride = std::max(1u, workers);
    for (std::uint32_t b = w; b < n; b += stride)
      for (std::uint32_t c = 0; c < n; ++c) {
        const auto bc = T.mul(b, c);
        for (auto u : targets) total += hist[T.add(u, bc)];
      }
    return total;
  });
  BigInt out = 0;
  for (auto v : parts) out += BigInt(std::to_string(v));
  return out;
}

}  // namespace

BigInt count_sl2_bruteforce(const ResidueRing& R, unsigned workers) { return count_2x2(R, workers, false); }
BigInt count_gl2_bruteforce(const ResidueRing& R, unsigned workers) { return count_2x2(R, workers, true); }

BigInt count_matrices_if(const TableRing& T, int d, const std::function<bool(const TableMatrix&)>& pred,
                         double budget, unsigned workers) {
  require(d >= 1, Errc::InvalidArgument, "dimension must be >= 1");
  require(matrix_space_size(T.size(), d) <= budget, Errc::TooLargeToEnumerate,
          "|R|^(d^2) exceeds the enumeration budget");
  const std::size_t cells = static_cast<std::size_t>(d) * d;
  const std::uint32_t n = T.size();
  const unsigned stride = std::max(1u, workers);
  auto parts = run_workers<std::uint64_t>(workers, [&](unsigned w) {
    std::uint64_t total = 0;
    // The first entry is partitioned across workers; the rest is an odometer.
    for (std::uint32_t first = w; first < n; first += stride) {
      TableMatrix M(d, d, 0u);
      std::vector<std::uint32_t> digits(cells, 0);
      digits[0] = first;
      while (true) {
        for (std::size_t c = 0; c < cells; ++c) M(c / d, c % d) = digits[c];
        if (pred(M)) ++total;
        std::size_t pos = 1;
        while (pos < cells && ++digits[pos] == n) digits[pos++] = 0;
        if (pos >= cells) break;
      }
    }
    return total;
  });
  BigInt out = 0;
  for (auto v : parts) out += BigInt(std::to_string(v));
  return out;
}

BigInt count_sl_bruteforce(const ResidueRing& R, int d, double budget, unsigned workers) {
  const TableRing T = TableRing::build(R);
  return count_matrices_if(T, d, [&](const TableMatrix& M) { return determinant(T, M) == T.one(); }, budget,
                           workers);
}

BigInt count_gl_bruteforce(const ResidueRing& R, int d, double budget, unsigned workers) {
  const TableRing T = TableRing::build(R);
  return count_matrices_if(T, d, [&](const TableMatrix& M) { return T.is_unit(determinant(T, M)); }, budget,
                           workers);
}

namespace {

struct VectorSpace {
  std::size_t d = 0;
  std::vector<std::uint32_t> coords;  // vector v occupies coords[v*d .. v*d + d)
  std::vector<std::uint32_t> qv;      // Q v, same layout
  std::vector<std::uint32_t> norm;    // v^t Q v
  std::size_t count() const { return norm.size(); }
};

std::uint32_t pair(const TableRing& T, const VectorSpace& V, std::uint32_t u, std::uint32_t v) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < V.d; ++i) acc = T.add(acc, T.mul(V.coords[u * V.d + i], V.qv[v * V.d + i]));
  return acc;
}

void add_vector(const TableRing& T, const TableMatrix& q, VectorSpace& V, const std::vector<std::uint32_t>& x) {
  const std::size_t d = V.d;
  V.coords.insert(V.coords.end(), x.begin(), x.end());
  std::uint32_t nrm = 0;
  for (std::size_t i = 0; i < d; ++i) {
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < d; ++k) s = T.add(s, T.mul(q(i, k), x[k]));
    V.qv.push_back(s);
    nrm = T.add(nrm, T.mul(x[i], s));
  }
  V.norm.push_back(nrm);
}

struct SearchState {
  const TableRing& T;
  const VectorSpace& V;
  const TableMatrix& q;
  const std::function<bool(const TableMatrix&)>* pred;
  double node_budget;
  std::atomic<std::uint64_t>& shared_nodes;
  std::uint64_t nodes = 0;
  std::uint64_t o = 0, so = 0, selected = 0;
  std::vector<std::uint32_t> chosen;

  void charge(std::uint64_t k) {
    nodes += k;
    if (nodes >= 4096) {
      const auto total = shared_nodes.fetch_add(nodes) + nodes;
      nodes = 0;
      require(static_cast<double>(total) <= node_budget, Errc::TooLargeToEnumerate,
              "orthogonal search exceeded its node budget");
    }
  }

  void leaf() {
    const std::size_t d = V.d;
    TableMatrix g(d, d, 0u);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) g(r, c) = V.coords[chosen[c] * d + r];
    ++o;
    if (determinant(T, g) == T.one()) ++so;
    if (pred && *pred && (*pred)(g)) ++selected;
  }

  // lists[c - depth] holds the candidates for column c consistent with the
  // columns fixed so far.
  void descend(std::size_t depth, const std::vector<std::vector<std::uint32_t>>& lists) {
    const std::size_t d = V.d;
    if (depth == d) {
      leaf();
      return;
    }
    for (auto v : lists[0]) {
      chosen.push_back(v);
      std::vector<std::vector<std::uint32_t>> next(lists.size() - 1);
      bool empty = false;
      for (std::size_t c = 1; c < lists.size() && !empty; ++c) {
        const auto target = q(depth, depth + c);
        charge(lists[c].size());
        for (auto w : lists[c])
          if (pair(T, V, v, w) == target) next[c - 1].push_back(w);
        empty = next[c - 1].empty();
      }
      if (!empty) descend(depth + 1, next);
      chosen.pop_back();
    }
  }
};

OrthogonalCount search(const TableRing& T, const QuadForm& Q, const VectorSpace& V,
                       const std::vector<std::vector<std::uint32_t>>& initial, double node_budget, unsigned workers,
                       const std::function<bool(const TableMatrix&)>* pred) {
  const TableMatrix q = lift_matrix(T, Q.matrix());
  std::atomic<std::uint64_t> shared{0};
  const unsigned stride = std::max(1u, workers);
  struct Part {
    std::uint64_t o = 0, so = 0, sel = 0, nodes = 0;
  };
  auto parts = run_workers<Part>(workers, [&](unsigned w) {
    SearchState st{T, V, q, pred, node_budget, shared, 0, 0, 0, 0, {}};
    std::vector<std::vector<std::uint32_t>> lists = initial;
    std::vector<std::uint32_t> mine;
    for (std::size_t i = w; i < initial[0].size(); i += stride) mine.push_back(initial[0][i]);
    lists[0] = std::move(mine);
    st.descend(0, lists);
    shared.fetch_add(st.nodes);
    return Part{st.o, st.so, st.selected, 0};
  });
  OrthogonalCount out;
  std::uint64_t o = 0, so = 0, sel = 0;
  for (const auto& p : parts) {
    o += p.o;
    so += p.so;
    sel += p.sel;
  }
  out.o = BigInt(std::to_string(o));
  out.so = BigInt(std::to_string(so));
  out.selected = BigInt(std::to_string(sel));
  out.nodes = shared.load();
  return out;
}

}  // namespace

OrthogonalCount enumerate_orthogonal(const TableRing& T, const QuadForm& Q, double node_budget, unsigned workers,
                                     const std::function<bool(const TableMatrix&)>& pred) {
  require(T.ring().p() != 2, Errc::EvenPrime, "orthogonal groups need an odd prime");
  require(Q.nondegenerate_mod(T.ring().p()), Errc::DegenerateForm, "form degenerates modulo p");
  const std::size_t d = Q.dim();
  const double space = std::pow(static_cast<double>(T.size()), static_cast<double>(d));
  require(space <= 2e7, Errc::TooLargeToEnumerate, "vector space too large to tabulate");
  const TableMatrix q = lift_matrix(T, Q.matrix());
  VectorSpace V;
  V.d = d;
  const auto total = static_cast<std::uint64_t>(space);
  std::vector<std::uint32_t> x(d, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = static_cast<std::uint32_t>(r % T.size());
      r /= T.size();
    }
    add_vector(T, q, V, x);
  }
  std::vector<std::vector<std::uint32_t>> lists(d);
  for (std::uint32_t v = 0; v < V.count(); ++v)
    for (std::size_t c = 0; c < d; ++c)
      if (V.norm[v] == q(c, c)) lists[c].push_back(v);
  return search(T, Q, V, lists, node_budget, workers, pred ? &pred : nullptr);
}

BigInt kernel_fiber_count(const QuadForm& Q, const PrimePower& base, unsigned workers) {
  require(base.j() >= 2, Errc::InvalidArgument, "fiber count needs j >= 2");
  const ResidueRing R = ResidueRing::integers_mod(base);
  const TableRing T = TableRing::build(R, 1u << 16);
  const std::size_t d = Q.dim();
  const TableMatrix q = lift_matrix(T, Q.matrix());
  const BigInt step = flatcyc::pow(base.p(), static_cast<unsigned long>(base.j() - 1));
  const auto p = to_u64(base.p());
  VectorSpace V;
  V.d = d;
  std::vector<std::vector<std::uint32_t>> lists(d);
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < d; ++i) combos *= p;
  // Column c ranges over e_c + p^(j-1) v for v in F_p^d.
  for (std::size_t c = 0; c < d; ++c) {
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::vector<std::uint32_t> x(d);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        BigInt entry = step * BigInt(std::to_string(r % p)) + (i == c ? 1 : 0);
        x[i] = T.from_int(entry);
        r /= p;
      }
      const auto v = static_cast<std::uint32_t>(V.count());
      add_vector(T, q, V, x);
      if (V.norm[v] == q(c, c)) lists[c].push_back(v);
    }
  }
  return search(T, Q, V, lists, std::numeric_limits<double>::infinity(), workers, nullptr).o;
}

BigInt so_lie_kernel_bruteforce(const QuadForm& Q, const BigInt& p, double budget) {
  const ResidueRing F = ResidueRing::integers_mod(PrimePower::make(p, 1));
  const TableRing T = TableRing::build(F);
  const TableMatrix q = lift_matrix(T, Q.matrix());
  const int d = static_cast<int>(Q.dim());
  return count_matrices_if(
      T, d,
      [&](const TableMatrix& mu) {
        return equal(T, add(T, multiply(T, transpose(mu), q), multiply(T, q, mu)), TableMatrix(d, d, 0u));
      },
      budget);
}

}  // namespace flatcyc
